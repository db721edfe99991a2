#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sigform {

using Int = mpz_class;
using Rat = mpq_class;

/// Input that violates a documented precondition (bad labels, non-dominant
/// weights, lattice membership failures, caps). CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A broken internal identity (root-datum axiom, non-exact division by 2^r,
/// non-integral expansion). Always a bug or corrupted input data; CLI maps
/// this to exit code 4.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw ValidationError(msg);
}

inline void require_internal(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline Int to_int(const Rat& x) {
  require_internal(is_integer(x), "expected an integer, got " + x.get_str());
  return x.get_num();
}

inline long to_long(const Rat& x) {
  Int n = to_int(x);
  require_internal(n.fits_slong_p(), "integer out of long range: " + n.get_str());
  return n.get_si();
}

inline Int pow2(unsigned long r) {
  Int x;
  mpz_ui_pow_ui(x.get_mpz_t(), 2, r);
  return x;
}

}  // namespace sigform
