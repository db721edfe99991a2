#include "sigform/verify.hpp"

#include <chrono>
#include <functional>
#include <map>

namespace sigform {

bool AgreementReport::all_agree() const {
  for (const auto& c : cases)
    if (!c.agree()) return false;
  return true;
}

namespace {

// all dominant weights (fundamental coordinates) with dim <= cap
std::vector<ZVec> dominant_weights_under(const PositiveSystem& pos, long dim_cap) {
  int r = int(pos.simples.size());
  std::vector<ZVec> out;
  ZVec cur(r, 0);
  // coordinate-wise bound: dim is monotone in each coordinate
  std::function<void(int)> rec = [&](int i) {
    if (i == r) return;
    for (long v = 0;; ++v) {
      cur[i] = v;
      QVec lam(r, Rat(0));
      for (int k = 0; k < r; ++k) lam[k] = Rat(cur[k]);
      bool fits = weyl_dimension(pos, lam) <= dim_cap;
      if (!fits) break;
      if (i == r - 1)
        out.push_back(ZVec(cur.begin(), cur.end()));
      else
        rec(i + 1);
    }
    cur[i] = 0;
  };
  if (r > 0) rec(0);
  return out;
}

bool self_dual(const PositiveSystem& pos, const ZVec& lam) {
  QVec lamq = to_q(lam);
  auto [dual, w] = dominant_representative(pos, q_scale(Rat(-1), lamq));
  for (int s : pos.simples)
    if (dot(dual, pos.datum->coroots[s]) != dot(lamq, pos.datum->coroots[s])) return false;
  return true;
}

}  // namespace

AgreementReport split_agreement_suite(char family, int rank, long dim_cap) {
  auto t0 = std::chrono::steady_clock::now();
  AgreementReport rep;
  rep.suite = std::string("split ") + family + std::to_string(rank) + " (Shapovalov oracle)";
  CartanMatrix cm = cartan_matrix_of_type(family, rank);
  auto datum = build_root_system(cm);
  auto pos = standard_positive_system(datum);

  // the matching split real form and its restricted machinery
  RealFormPtr rf;
  std::vector<QVec> fund_in_model;  // fundamental weights in model coordinates
  if (family == 'A') {
    int n = rank + 1;
    rf = builtin_group("SL(" + std::to_string(n) + ")");
    for (int i = 1; i <= rank; ++i) {
      QVec w(rank, Rat(0));  // omega_i = u_1 + ... + u_i in quotient coordinates
      for (int k = 0; k < i; ++k) w[k] = 1;
      fund_in_model.push_back(w);
    }
  } else if (family == 'C') {
    rf = builtin_group("Sp(" + std::to_string(2 * rank) + ")");
    for (int i = 1; i <= rank; ++i) {
      QVec w(rank, Rat(0));  // omega_i = e_1 + ... + e_i
      for (int k = 0; k < i; ++k) w[k] = 1;
      fund_in_model.push_back(w);
    }
  } else {
    throw ValidationError("split agreement suite supports A and C families only");
  }
  auto rd = restrict_datum(rf);

  for (const ZVec& lam : dominant_weights_under(pos, dim_cap)) {
    if (!self_dual(pos, lam)) continue;
    AgreementCase c;
    c.lam_fund = lam;
    c.dim = weyl_dimension(pos, to_q(lam));
    c.oracle_sig = oracle_sig_split(cm, lam, dim_cap);
    QVec model = q_zero(rf->rank());
    for (int i = 0; i < int(lam.size()); ++i)
      model = q_add(model, q_scale(Rat(lam[i]), fund_in_model[i]));
    auto spec = weight_to_spec(rd, model);
    require_internal(q_is_zero(spec.nu_real), "self-dual weight with nonzero nu");
    auto res = compute_signature(*rf, rd, spec);
    require_internal(res.dim == c.dim, "oracle and formula disagree on the dimension");
    c.formula_sig = res.sig;
    rep.cases.push_back(std::move(c));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

AgreementReport equal_rank_agreement_suite(int two_n, long dim_cap) {
  auto t0 = std::chrono::steady_clock::now();
  AgreementReport rep;
  rep.suite = "equal-rank Sp(" + std::to_string(two_n) + ",R) (cyclotomic oracle)";
  auto rf = builtin_group("Sp(" + std::to_string(two_n) + ")");
  auto rd = restrict_datum(rf);
  // enumerate in fundamental coordinates on the abstract C_n datum
  CartanMatrix cm = cartan_matrix_of_type('C', two_n / 2);
  auto posw = standard_positive_system(build_root_system(cm));
  for (const ZVec& lam : dominant_weights_under(posw, dim_cap)) {
    // fundamental -> e-coordinates
    int n = rf->rank();
    ZVec e(n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k <= i; ++k) e[k] += lam[i];
    AgreementCase c;
    c.lam_fund = lam;
    c.dim = weyl_dimension(posw, to_q(lam));
    c.oracle_sig = oracle_sig_equal_rank(*rf, e, dim_cap);
    auto [dom, w] = restricted_dominant(rd, to_q(e));
    HighestWeightSpec g;
    g.lambda_c = dom;
    g.nu_real = q_zero(n);
    g.nu_imag = q_zero(n);
    auto res = compute_signature(*rf, rd, g);
    require_internal(res.dim == c.dim, "oracle and formula disagree on the dimension");
    c.formula_sig = res.sig;
    rep.cases.push_back(std::move(c));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

bool fault_injection_detected() {
  // flip one epsilon's worth of contribution and confirm the comparison fails
  CartanMatrix a1 = {{2}};
  Int oracle = oracle_sig_split(a1, {2});
  auto rf = builtin_group("SL(2)");
  HighestWeightSpec g;
  g.lambda_c = {Rat(2)};
  g.nu_real = {Rat(0)};
  g.nu_imag = {Rat(0)};
  auto res = compute_signature(*rf, g);
  Int corrupted = res.sig + 2;  // an eps flip moves p0 - q0 by 2 dim_E / 2^r
  return corrupted != oracle && res.sig == oracle;
}

RealFormPtr lorentz_form(int n_plus_1) {
  check(n_plus_1 >= 3, "lorentz_form needs rank >= 3 (type D)");
  int m = n_plus_1;
  // D_m in e-coordinates, theta negates the last coordinate, all imaginary
  // roots compact: SO(2m-1, 1)
  std::map<ZVec, ZVec> all;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          ZVec r(m, 0);
          r[i] = si;
          r[j] = sj;
          all[r] = r;
        }
  auto d = std::make_shared<RootDatum>();
  d->rank = m;
  for (auto& [r, cr] : all) {
    d->roots.push_back(r);
    d->coroots.push_back(cr);
  }
  d->neg_of.resize(d->roots.size());
  for (size_t i = 0; i < d->roots.size(); ++i) {
    ZVec neg = d->roots[i];
    for (auto& x : neg) x = -x;
    d->neg_of[i] = d->root_index(neg);
  }
  d->validate();
  ZMat theta = z_identity(m);
  theta[m - 1][m - 1] = -1;
  std::map<int, bool> grading;
  for (size_t i = 0; i < d->roots.size(); ++i)
    if (z_apply(theta, d->roots[i]) == d->roots[i]) grading[int(i)] = false;
  return make_real_form(RootDatumPtr(d), theta, std::move(grading),
                        "SO(" + std::to_string(2 * m - 1) + ",1)");
}

}  // namespace sigform
