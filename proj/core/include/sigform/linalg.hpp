#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "sigform/arith.hpp"

namespace sigform {

// Lattice vectors and matrices are kept in plain machine integers (all root
// and coroot coordinates are tiny); everything that can grow lives in Rat/Int.
using ZVec = std::vector<long>;
using ZMat = std::vector<ZVec>;  // row-major
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

QVec to_q(const ZVec& v);
ZVec to_z(const QVec& v);  // throws InternalError if any entry is non-integral
bool is_integral(const QVec& v);

QVec q_zero(int n);
QVec q_add(const QVec& a, const QVec& b);
QVec q_sub(const QVec& a, const QVec& b);
QVec q_scale(const Rat& c, const QVec& a);
bool q_is_zero(const QVec& a);

/// Canonical X* x X_* pairing: plain dot product in dual coordinate bases.
Rat dot(const QVec& a, const ZVec& b);
long dot(const ZVec& a, const ZVec& b);
Rat dotq(const QVec& a, const QVec& b);

ZMat z_identity(int n);
ZMat z_mul(const ZMat& a, const ZMat& b);
ZVec z_apply(const ZMat& m, const ZVec& v);
QVec z_apply(const ZMat& m, const QVec& v);
ZMat z_transpose(const ZMat& m);
bool z_equal(const ZMat& a, const ZMat& b);
/// Exact inverse of an integer matrix with determinant +-1.
ZMat z_inverse(const ZMat& m);

/// Solves A x = b over the rationals (A given as columns). Returns a
/// particular solution or nullopt when inconsistent.
std::optional<QVec> solve_columns(const std::vector<QVec>& columns, const QVec& b);

/// Nullspace basis of the linear map given by rows.
std::vector<QVec> nullspace(const QMat& rows);

int rank_of(const QMat& rows);

/// Exact inertia (p, q, z) of a symmetric rational matrix by congruence
/// elimination, with 2x2 hyperbolic steps when the diagonal vanishes.
std::tuple<long, long, long> inertia(const QMat& s);

/// Smith-normal-form based test: does A y = b admit an integer solution?
/// A is square-or-rectangular with Int entries.
bool integer_solvable(const std::vector<std::vector<Int>>& a, const std::vector<Int>& b);

/// Characteristic polynomial of a rational matrix (monic, index = degree of x),
/// by the Faddeev-LeVerrier recursion.
std::vector<Rat> char_poly(const QMat& m);

/// Number of real roots of p in (-inf, 0], counted without multiplicity,
/// via Sturm chains; second member of the pair is the number of distinct
/// real roots overall.
std::pair<int, int> sturm_nonpositive_real_roots(const std::vector<Rat>& p);

/// True when every root of p is real and <= 0 (multiplicities included).
bool all_roots_real_nonpositive(std::vector<Rat> p);

}  // namespace sigform
