#pragma once

#include <map>

#include "sigform/realform.hpp"

namespace sigform {

/// An irreducible highest-weight module over the rationals, built weight
/// space by weight space as the Shapovalov-radical quotient of the spanning
/// set {f_i . (higher basis vector)}. Basis vectors carry their generating
/// word; action matrices are stored blockwise.
struct ExplicitModule {
  CartanMatrix cartan;
  RootDatumPtr datum;  // fundamental-weight coordinates
  PositiveSystem pos;
  ZVec highest;

  std::vector<ZVec> weights;          // decreasing height, lex within a layer
  std::map<ZVec, int> weight_index;
  std::vector<int> mult;
  std::vector<int> offset;            // global index of each weight block
  Int dimension;

  // provenance: basis vector b of weight w arose as f_{gen} (parent in the
  // weight w + alpha_gen block); the top vector has gen = -1
  std::vector<std::vector<std::pair<int, int>>> parent;

  // f_mat[i][w]: coordinates of f_i B_w inside B_{w - alpha_i}
  // e_mat[i][w]: coordinates of e_i B_w inside B_{w + alpha_i}
  std::vector<std::vector<QMat>> f_mat, e_mat;
  std::vector<QMat> gram;  // contravariant form per weight block

  int weight_of_global(int g) const;
  std::vector<int> f_word(int w, int b) const;  // generating word, top first
  /// Dense action matrix of a generator on the whole module.
  QMat dense_f(int i) const;
  QMat dense_e(int i) const;
  QMat dense_h(int i) const;
};

constexpr long kDefaultModuleCap = 400;

ExplicitModule construct_irrep(const CartanMatrix& cartan, const ZVec& lam_fund,
                               long dim_cap = kDefaultModuleCap);

/// The invariant bilinear form for the split real form (B(Xv, w) + B(v, Xw)
/// = 0 over the Chevalley generators), computed by descending through the
/// stored parent decompositions and verified exactly. Zero iff the module is
/// not self-dual; otherwise one-dimensional, symmetric or antisymmetric.
struct BilinearForm {
  bool zero = true;
  bool symmetric = true;
  // key: weight block index w; value: block B : V_w x V_{-w}
  std::map<int, QMat> blocks;
};

BilinearForm invariant_bilinear_form(const ExplicitModule& m);

QMat dense_form(const ExplicitModule& m, const BilinearForm& b);

/// The symmetric invariant form with its exact inertia; errors when the
/// invariant form is absent or antisymmetric.
struct GramForm {
  std::map<int, QMat> blocks;
  long p = 0, q = 0, z = 0;
};

GramForm invariant_symmetric_form(const ExplicitModule& m);

/// |p - q| of the invariant Hermitian form for the split real form:
/// inertia of the symmetric solution, or 0 when the solution is
/// antisymmetric (the Hermitian form is i times it, with balanced inertia).
Int oracle_sig_split(const CartanMatrix& cartan, const ZVec& lam_fund,
                     long dim_cap = kDefaultModuleCap);

/// Equal-rank oracle: |sum_mu mult(mu) exp(i pi <mu, x>)| in the cyclotomic
/// ring, where x is a rational cocharacter realizing the grading mod 2.
/// lam is given in the datum's coordinates and must be dominant for the
/// standard positive system of rf's datum.
Int oracle_sig_equal_rank(const RealForm& rf, const ZVec& lam, long dim_cap = kDefaultModuleCap);

/// Lemma on self-adjoint operators with purely imaginary spectrum: inertia
/// of S restricted to ker T, asserted to satisfy p1 - q1 = P - Q.
std::pair<long, long> kernel_signature(const QMat& t, const QMat& s);

}  // namespace sigform
