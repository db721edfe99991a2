#pragma once

#include <functional>

#include "sigform/oracle.hpp"
#include "sigform/signature.hpp"

namespace sigform {

struct AgreementCase {
  ZVec lam_fund;   // highest weight in fundamental coordinates
  Int dim;
  Int oracle_sig;
  Int formula_sig;
  bool agree() const { return oracle_sig == formula_sig; }
};

struct AgreementReport {
  std::string suite;
  std::vector<AgreementCase> cases;
  double seconds = 0;
  bool all_agree() const;
};

/// Split-form suite: every self-dual dominant weight of the given ambient
/// type with Weyl dimension <= dim_cap, Shapovalov oracle against the
/// restricted-root formula on the corresponding split real form.
/// family/rank in {A1, A2, A3, C2}.
AgreementReport split_agreement_suite(char family, int rank, long dim_cap);

/// Equal-rank suite on Sp(2n,R): every dominant weight with dim <= dim_cap,
/// cyclotomic character oracle against the formula.
AgreementReport equal_rank_agreement_suite(int two_n, long dim_cap);

/// Self-test: re-runs one comparison with a deliberately corrupted formula
/// value and reports whether the harness catches it.
bool fault_injection_detected();

/// The real form behind the Table 3 row for D_{n+1} with the diagram-folding
/// involution (negate the last coordinate): SO(2n+1, 1), all imaginary roots
/// compact.
RealFormPtr lorentz_form(int n_plus_1);

}  // namespace sigform
