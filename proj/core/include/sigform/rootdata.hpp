#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sigform/linalg.hpp"

namespace sigform {

/// A root datum in a fixed basis of X*: roots as integer vectors, coroots as
/// integer covectors in the dual basis, parallel index order. The pairing
/// <x, y> is the plain dot product.
struct RootDatum {
  int rank = 0;
  std::vector<ZVec> roots;
  std::vector<ZVec> coroots;
  std::vector<int> neg_of;  // index of -alpha
  // Simple roots of the construction (build_root_system / build_gl_datum);
  // empty for data assembled from raw lists.
  std::vector<int> preferred_simples;

  int root_index(const ZVec& r) const;           // -1 when absent
  bool is_root(const ZVec& r) const;
  long pairing(int root_i, int coroot_j) const;  // <root_i, coroot_j>
  /// Reflection in root i as a matrix on X*.
  ZMat reflection(int i) const;
  /// Dual reflection on X_*.
  ZMat coreflection(int i) const;

  void validate() const;  // datum axioms; throws InternalError
};

using RootDatumPtr = std::shared_ptr<const RootDatum>;

struct PositiveSystem {
  RootDatumPtr datum;
  std::vector<int> positive;  // root indices, sorted
  std::vector<int> simples;   // indecomposable positives, sorted
  QVec rho;                   // half sum of positives
  ZVec two_rho;

  bool is_positive(int root_index) const;
  /// <phi, alpha_i^vee> over the simple coroots, in `simples` order.
  QVec simple_pairings(const QVec& phi) const;
};

struct WeylElement {
  ZMat matrix;            // action on X*
  std::vector<int> word;  // indices into a generator list; advisory

  bool is_identity() const;
};

/// Cartan matrix with rows/columns indexed by simple roots; entry (i, j) is
/// <alpha_j, alpha_i^vee>.
using CartanMatrix = std::vector<std::vector<long>>;

CartanMatrix cartan_matrix_of_type(char family, int rank);

/// Builds the simply-connected datum of the given finite-type Cartan matrix
/// (basis of X* = fundamental weights, so alpha_j is column j of the matrix).
/// Rejects non-finite-type input naming a failing principal submatrix.
RootDatumPtr build_root_system(const CartanMatrix& cartan);
RootDatumPtr build_root_system(char family, int rank);
/// GL(n): rank-n reductive datum with roots e_i - e_j.
RootDatumPtr build_gl_datum(int n);

/// The positive system spanned by the construction order of
/// build_root_system (simple roots first). For a general datum, chooses
/// positivity by lexicographic comparison of root vectors.
PositiveSystem standard_positive_system(RootDatumPtr datum);
/// Positivity by sign of a linear key: primary rational functional, then
/// lexicographic tiebreak on coordinates. key must not vanish on any root.
PositiveSystem positive_system_from_key(RootDatumPtr datum,
                                        const std::vector<QVec>& key_covectors);

/// Weyl dimension formula: product over positive roots of
/// <lam + rho, a^vee> / <rho, a^vee>. lam may be rational but must pair
/// integrally with every coroot of the system and be weakly dominant.
Int weyl_dimension(const PositiveSystem& pos, const QVec& lam);

/// Unique weakly dominant representative of the orbit W.phi together with an
/// element mapping phi to it.
std::pair<QVec, WeylElement> dominant_representative(const PositiveSystem& pos, const QVec& phi);

/// Full weight multiset of the irreducible with highest weight lam
/// (dominant, integral on all coroots); Freudenthal recursion.
std::map<ZVec, Int> freudenthal_multiplicities(const PositiveSystem& pos, const ZVec& lam);

constexpr long kDefaultWeylCap = 1000000;

/// All Weyl group elements with reduced words (BFS over simple reflections).
std::vector<WeylElement> generate_weyl_group(const PositiveSystem& pos,
                                             long cap = kDefaultWeylCap);

/// W-invariant symmetric form on X* ⊗ Q: B(x, y) = sum over coroots of
/// <x, a^vee><y, a^vee>. Positive definite on the root span.
Rat invariant_form(const RootDatum& datum, const QVec& x, const QVec& y);

// ---- Cartan type recognition -------------------------------------------

struct SimpleType {
  std::string family;  // "A".."G" or "BC"
  int rank = 0;
  bool operator==(const SimpleType&) const = default;
  bool operator<(const SimpleType& o) const;
};

struct CartanType {
  std::vector<SimpleType> components;  // sorted
  bool recognized = true;
  CartanMatrix raw;  // filled when not recognized

  std::string to_string() const;  // e.g. "C3", "A1^3", "BC2", "0" for empty
  /// Equality modulo the classical coincidences (B2=C2, D3=A3, D2=A1+A1,
  /// B1=C1=A1, D1=0).
  bool same_as(const CartanType& other) const;
  static CartanType parse(const std::string& label);
};

/// Type of the (possibly non-reduced) system spanned by the listed
/// roots/coroots; positivity is inherited from lexicographic sign.
CartanType classify_subsystem(const std::vector<QVec>& root_values,
                              const std::vector<QVec>& coroot_values);

/// Classical Weyl group order of a type (product over components).
Int weyl_order(const CartanType& type);

}  // namespace sigform
