#pragma once

#include "sigform/restricted.hpp"

namespace sigform {

/// W^theta realized as ambient integer matrices, generated by the restricted
/// simple reflections through the dictionary
///   s_a (imaginary), s_a s_{theta a} (complex, nonsum), s_{a+theta a} (sum).
/// Subgroup registries hold indices into `elements`.
struct RestrictedWeylGroup {
  std::vector<WeylElement> elements;  // BFS order, identity first
  std::vector<int> generator_roots;   // restricted root index per generator
  std::vector<ResCase> generator_case;

  std::vector<int> w_cplx, w_imag, w_sing_imag, w_sing_cplx, w_k0;

  int index_of(const ZMat& m) const;  // -1 when absent
  const WeylElement& at(int i) const { return elements[i]; }
  long order() const { return long(elements.size()); }
};

RestrictedWeylGroup build_w_theta(const RestrictedDatum& rd, long cap = kDefaultWeylCap);

struct SemidirectDecomposition {
  // W^theta = W_cplx x| W^sing_imag  and  W^theta = W^sing_cplx |x W_imag
  long order_w_theta = 0;
  long order_cplx = 0, order_sing_imag = 0;
  long order_sing_cplx = 0, order_imag = 0;
};

/// Verifies normality of the first factors, trivial intersections, and the
/// order products; throws InternalError when a check fails.
SemidirectDecomposition semidirect_decompositions(const RestrictedDatum& rd,
                                                  const RestrictedWeylGroup& w);

/// W^1 = {w : w R+_res contains R+_K}: the minimal coset representatives of
/// W_{K_0} in W^theta. Verifies |W^theta| = |W_{K_0}| |W^1|, the inclusion
/// W^1 in W^sing_imag, and the refined characterization from the coset
/// correspondence.
std::vector<int> enumerate_w1(const RestrictedDatum& rd, const RestrictedWeylGroup& w);

/// The positive singular noncompact roots beta_1..beta_r (pairwise
/// orthogonal, type A_1^r) with their coroots.
struct SingularNcptBasis {
  std::vector<int> root_indices;  // into rd.roots
  std::vector<ZVec> coroots;
  int r() const { return int(root_indices.size()); }
};

SingularNcptBasis singular_ncpt_basis(const RestrictedDatum& rd);

/// Subsets B with H_B = sum of the chosen coroots in (1+theta) X_*, decided
/// by exact integer linear algebra; returns the subsets together with the
/// matrices of the products s_B. Asserts closure under symmetric difference.
struct SingularNcptInK {
  std::vector<std::vector<int>> subsets;  // subsets of {0..r-1}, sorted
  std::vector<ZMat> elements;             // s_B matrices, parallel
  int rank2() const;                      // log2 of the group order
};

SingularNcptInK singular_ncpt_in_k(const RealForm& rf, const RestrictedDatum& rd,
                                   const SingularNcptBasis& basis);

/// G(R)/G(R)# as an elementary abelian 2-group: W^sing_ncpt(K).
struct ComponentGroup {
  int rank2 = 0;
  long order() const { return 1L << rank2; }
};

ComponentGroup component_group(const RealForm& rf);

}  // namespace sigform
