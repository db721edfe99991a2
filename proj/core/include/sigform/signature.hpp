#pragma once

#include <optional>

#include "sigform/weylres.hpp"

namespace sigform {

enum class Invariance { GInvariant, GSharpOnly, NoForm };

struct Contribution {
  int w_index = 0;            // into the restricted Weyl group's elements
  std::vector<int> word;      // reduced word in restricted simple reflections
  int eps = 1;                // sign of the form on the w lambda_c weight space
  Int dim_e;                  // dim E(w(lambda_c + rho_G) - rho_K)
  QVec w_lambda;              // the extremal weight w lambda_c
};

struct SignatureResult {
  Int dim;
  Int sig;          // |p - q|
  Int p, q;         // unordered up to swapping; p >= q by convention
  long r = 0;       // 2r = dim G/H_c - dim K/T_c
  int ell = 0;      // dim A_c (diagnostic; the 2^[ell/2] factor cancels)
  std::vector<Contribution> contributions;
  Invariance invariance = Invariance::GInvariant;
  bool ambiguity_flag = false;        // |pi_0^H| > 1: several F(gamma) share the value
  bool literal_reading_all_plus = true;  // diagnostic: eps(xw) = +1 for all x, w
  std::string group;
};

/// Sign of the invariant form on the w lambda_c restricted weight space,
/// from the expansion lambda_c - w lambda_c = sum n_b b over the simple roots
/// of the singular imaginary system: product of (-1)^{n_b} over noncompact b.
int epsilon(const RestrictedDatum& rd, const RestrictedWeylGroup& w, const QVec& lambda_c,
            int w_index);

struct InvarianceDiagnostics {
  Invariance level = Invariance::GInvariant;
  bool constancy_reading = true;  // eps(xw) = eps(w) for all x, w in W^1
  bool literal_reading = true;    // eps(xw) = 1 for all x, w in W^1
};

/// K(R)-invariance of the form via W^sing_ncpt(K): the implemented reading is
/// sign constancy on the K-component orbits; the literal all-ones reading is
/// reported alongside. A necessary-condition verdict (the paper omits the
/// converse).
InvarianceDiagnostics invariance_level(const RealForm& rf, const RestrictedDatum& rd,
                                       const RestrictedWeylGroup& w, const QVec& lambda_c);

/// The main formula: Sig = |p_0 - q_0| / 2^r with
///   p_0, q_0 = sums of dim E(w(lambda_c+rho_G) - rho_K) over W^1 by sign.
SignatureResult compute_signature(const RealForm& rf, const HighestWeightSpec& gamma);
SignatureResult compute_signature(const RealForm& rf, const RestrictedDatum& rd,
                                  const HighestWeightSpec& gamma);

/// GL(n,R) closed form: dim of the Spin(n)-representation of highest weight
/// mu + (1/2,...,1/2), divided by 2^{m-1+eps}. nullopt when lam is not
/// self-dual (no invariant form).
std::optional<Int> gl_closed_form(int n, const ZVec& lam);

/// Exact identity dim pi(lam) = Sig^2 prod (2 lam_i + n - 2i + 1)/(n - 2i + 1);
/// returns (lhs, rhs).
std::pair<Rat, Rat> ratio_identity(int n, const ZVec& lam);

struct DegreeProbe {
  std::vector<Int> sig;                    // Sig(k lam0), k = 1..kmax
  std::vector<std::vector<Int>> diffs;     // iterated finite differences
  int vanish_order = -1;                   // first order whose differences vanish
  int expected_degree = 0;                 // m^2 + m(eps - 1)
};

/// Sig(k lam0) along a ray and its finite differences; the
/// (m^2 + m(eps-1) + 1)-st difference vanishes identically.
DegreeProbe sig_degree_probe(int n, const ZVec& lam0, int kmax);

}  // namespace sigform
