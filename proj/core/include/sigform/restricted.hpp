#pragma once

#include "sigform/realform.hpp"

namespace sigform {

enum class ResCase { Imaginary, ComplexNonsum, ComplexSum };

/// One restricted root: the literal restriction (a + theta a)/2 as a rational
/// vector in the theta-fixed subspace, together with its integral coroot
///   imaginary            ->  a^vee
///   complex, a+ta not root -> a^vee + theta a^vee
///   complex, a+ta a root   -> 2(a^vee + theta a^vee)
/// and the ambient theta-orbits restricting to it.
struct RestrictedRoot {
  QVec value;
  ZVec coroot;
  ResCase rcase = ResCase::Imaginary;
  std::vector<int> sources;  // ambient root indices, sorted
  bool noncompact = false;   // meaningful for imaginary restricted roots

  bool imaginary() const { return rcase == ResCase::Imaginary; }
  bool in_K() const { return !imaginary() || !noncompact; }
};

/// The restricted root datum on T_{c,0} with its distinguished subsystems,
/// built with a theta-stable ambient positive system for which 2 rho_K is
/// dominant. All index lists refer to positions in `roots`.
struct RestrictedDatum {
  RealFormPtr rf;
  std::vector<RestrictedRoot> roots;  // sorted by value

  std::vector<int> positive;          // restricted positive set
  std::vector<int> simples;           // indecomposable positives
  std::vector<int> positive_reduced;  // positive with 2v not a root
  std::vector<int> simples_reduced;

  std::vector<int> ambient_positive;  // theta-stable system upstairs
  QVec rho_g;                         // projection of the ambient rho
  QVec rho_k;                         // half sum of positive K-datum roots

  QVec two_rho_cplx, two_rho_imag, two_rho_k;  // eq-(3.5) style sums
  ZVec two_rho_res_covec;                      // sum of positive reduced coroots

  std::vector<int> sing_imag, sing_cplx, sing_ncpt;  // full singular sets
  std::vector<int> k_roots;                          // complex + compact imaginary

  int index_of_value(const QVec& v) const;  // -1 when absent
  bool is_positive(int i) const;
  /// Reflection in restricted root i as an ambient integer matrix
  /// (s_a, s_a s_{theta a}, or s_{a+theta a} per the Prop 3.1 dictionary).
  ZMat reflection_matrix(int i) const;
  /// Which dictionary case realizes the reflection (for diagnostics).
  ResCase reflection_case(int i) const { return roots[i].rcase; }

  /// r of Theorem Gsig: positive complex theta-orbits plus positive
  /// noncompact imaginary roots upstairs; checked against (dim s - ell)/2.
  long dirac_index_r() const;
};

/// Construction per the paper: restrict, deduplicate, choose a theta-stable
/// positive system making 2 rho_K dominant (deterministically), mark the
/// subsystems and singular sets, and verify the root-datum axioms.
RestrictedDatum restrict_datum(const RealForm& rf);
RestrictedDatum restrict_datum(RealFormPtr rf);

struct RestrictedTypes {
  CartanType res, res_red, cplx, imag, sing_cplx, sing_imag, sing_ncpt, k;
};
RestrictedTypes restricted_type(const RestrictedDatum& rd);

/// HT_res(phi) = <w phi, 2 rho^vee_res> for the dominant representative.
Int restricted_height(const RestrictedDatum& rd, const QVec& phi);

/// Dominant representative for the restricted positive system, acting on the
/// theta-fixed subspace by ambient matrices.
std::pair<QVec, WeylElement> restricted_dominant(const RestrictedDatum& rd, const QVec& phi);

/// Is lambda_c - phi a nonnegative integer combination of positive restricted
/// roots? Coefficients are returned over the simple restricted roots.
std::pair<bool, QVec> restricted_weight_test(const RestrictedDatum& rd, const QVec& lambda_c,
                                             const QVec& phi);

/// The orbit W^theta . lambda_c.
std::vector<QVec> restricted_extremal_weights(const RestrictedDatum& rd, const QVec& lambda_c,
                                              long cap = kDefaultWeylCap);

/// Folded Dynkin diagram: one vertex per theta-orbit of ambient simple roots.
struct FoldedDiagram {
  struct Vertex {
    std::vector<int> orbit;   // ambient simple root indices
    bool imaginary = false;   // filled circle
    bool self_joined = false; // adjacent complex pair (2 v is a root)
  };
  struct Edge {
    int from = 0, to = 0;
    long pairing_from_to = 0;  // <v_from, v_to^vee>
    long pairing_to_from = 0;
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};
FoldedDiagram fold_diagram(const RestrictedDatum& rd);

/// Ambient dominant integral weight -> (lambda_c, nu) on the fundamental
/// Cartan: representative dominant for the theta-stable system, split into
/// its (1+theta)/2 and (1-theta)/2 parts.
HighestWeightSpec weight_to_spec(const RestrictedDatum& rd, const QVec& lambda_ambient);

}  // namespace sigform
