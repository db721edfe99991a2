#pragma once

#include <map>
#include <string>

#include "sigform/rootdata.hpp"

namespace sigform {

enum class RootClass { Complex, ImaginaryCompact, ImaginaryNoncompact };

/// A real form presented on the maximally compact Cartan: the datum, the
/// Cartan involution theta on X*, and the compact/noncompact grading of the
/// imaginary (theta-fixed) roots. Validated on construction:
///   - theta^2 = 1, theta permutes roots and coroots compatibly,
///   - no real roots (theta(a) = -a never holds),
///   - grading defined exactly on imaginary roots, symmetric under negation,
///   - additive on imaginary root triples,
///   - preserved by the composite reflections of complex roots.
struct RealForm {
  RootDatumPtr datum;
  ZMat theta;         // on X*
  ZMat theta_costar;  // transpose action on X_*
  // root index -> noncompact flag; defined exactly for imaginary roots
  std::map<int, bool> noncompact;
  std::string name;

  int rank() const { return datum->rank; }
  bool is_imaginary(int root_index) const;
  bool is_complex(int root_index) const { return !is_imaginary(root_index); }
  /// (1+theta)/2 projection of a weight onto the theta-fixed subspace.
  QVec project_fixed(const QVec& x) const;
  QVec project_split(const QVec& x) const;  // (1-theta)/2 part
  /// dim A_c: half the rank deficit of (1+theta).
  int ell() const;

  void validate() const;
};

using RealFormPtr = std::shared_ptr<const RealForm>;

RealFormPtr make_real_form(RootDatumPtr datum, ZMat theta, std::map<int, bool> noncompact,
                           std::string name);

RootClass classify_root(const RealForm& rf, int root_index);

/// gamma = (lambda_c, nu_c) indexing a representation on the maximally
/// compact Cartan. lambda_c is carried as its section image: a theta-fixed
/// rational vector in X* ⊗ Q (the (1+theta)/2 projection of any integral
/// preimage). nu_c splits into a real and an imaginary part, both rational
/// vectors in the (-theta)-eigenspace.
struct HighestWeightSpec {
  QVec lambda_c;
  QVec nu_real;
  QVec nu_imag;
};

enum class HermitianExistence { None, ExistsOnIdentityComponent, SeeInvarianceLevel };

struct GroupLabel {
  enum class Family { GL, SL, Sp, PSp, SO, PSO, SplitE6, Compact, Complex };
  Family family;
  int n = 0;              // GL/SL: n;  Sp/PSp: 2n;  SO/PSO: 2n (per factor)
  std::string type = "";  // Compact/Complex: Cartan family letter
  int rank = 0;

  static GroupLabel parse(const std::string& text);  // e.g. "GL(4)", "compact(A,2)"
  std::string to_string() const;
};

RealFormPtr builtin_group(const GroupLabel& label);
RealFormPtr builtin_group(const std::string& label);

/// Weak integrality: <gamma, a^vee> in Z for every root a. Strong adds the
/// m_alpha condition over the real roots; on the maximally compact Cartan
/// there are none, so the two notions agree.
bool is_weakly_integral(const RealForm& rf, const QVec& gamma);
bool is_strongly_integral(const RealForm& rf, const QVec& gamma);

/// lambda_c lies in the image of X* under the (1+theta)/2 projection,
/// i.e. is an honest character of T_c.
bool in_tc_lattice(const RealForm& rf, const QVec& lambda_c);

HighestWeightSpec hermitian_dual(const HighestWeightSpec& gamma);

/// None iff nu_c has a nonzero real part (Hermitian forms need nu_c purely
/// imaginary); otherwise the form exists at the G(R)# level and full-group
/// invariance is decided by signature::invariance_level.
HermitianExistence hermitian_existence(const RealForm& rf, const HighestWeightSpec& gamma);

/// Split-Cartan GL(n) parameter -> fundamental-Cartan spec:
/// lambda_c = (lam_1 - lam_n, ..., lam_m - lam_{m+1}) on T_c, nu the
/// split-direction remainder. lam must be weakly decreasing integers.
HighestWeightSpec gl_split_to_fundamental(int n, const ZVec& lam);

/// GL/SL T_c-coordinate helpers (the paper's u-coordinates): u_j is the
/// character z_j of the j-th SO(2) block; u -> sum u_j/2 (e_{2j-1} - e_{2j}).
QVec gl_u_to_fixed(int n, const QVec& u);
QVec gl_fixed_to_u(int n, const QVec& fixed);

}  // namespace sigform
