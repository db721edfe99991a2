#include "sigform/signature.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sigform {

int epsilon(const RestrictedDatum& rd, const RestrictedWeylGroup& w, const QVec& lambda_c,
            int w_index) {
  // expand lambda_c - w lambda_c over the simple roots of R^{+,sing}_imag
  std::vector<int> sing_simples;
  {
    std::set<QVec> sing_pos;
    for (int i : rd.sing_imag)
      if (rd.is_positive(i)) sing_pos.insert(rd.roots[i].value);
    for (int i : rd.sing_imag) {
      if (!rd.is_positive(i)) continue;
      bool dec = false;
      for (const auto& other : sing_pos) {
        QVec diff = q_sub(rd.roots[i].value, other);
        if (q_is_zero(diff)) continue;
        if (sing_pos.count(diff)) {
          dec = true;
          break;
        }
      }
      if (!dec) sing_simples.push_back(i);
    }
  }
  QVec moved = z_apply(w.elements[w_index].matrix, lambda_c);
  QVec target = q_sub(lambda_c, moved);
  if (q_is_zero(target)) return 1;
  std::vector<QVec> cols;
  for (int i : sing_simples) cols.push_back(rd.roots[i].value);
  auto sol = solve_columns(cols, target);
  require_internal(sol.has_value(),
                   "epsilon: lambda_c - w lambda_c outside the singular imaginary span");
  // the solution must reproduce the target exactly (solve_columns only finds
  // a least-squares-free particular solution on the span)
  {
    QVec recon = q_zero(int(lambda_c.size()));
    for (size_t k = 0; k < cols.size(); ++k) recon = q_add(recon, q_scale((*sol)[k], cols[k]));
    require_internal(recon == target, "epsilon: expansion is inconsistent");
  }
  int sign = 1;
  for (size_t k = 0; k < sing_simples.size(); ++k) {
    const Rat& c = (*sol)[k];
    require_internal(is_integer(c) && c >= 0, "epsilon: expansion coefficients must be in N");
    if (rd.roots[sing_simples[k]].noncompact && to_int(c) % 2 != 0) sign = -sign;
  }
  return sign;
}

namespace {

// eps extended to all of W^theta by left W_{K_0}-invariance: factor through
// the W^1 coset representative.
int epsilon_on_coset(const RestrictedDatum& rd, const RestrictedWeylGroup& w,
                     const std::vector<int>& w1, const QVec& lambda_c, const ZMat& element) {
  std::set<ZMat> k0;
  for (int k : w.w_k0) k0.insert(w.elements[k].matrix);
  for (int e : w1) {
    // element in W_K0 . w_e  <=>  element * w_e^{-1} in W_K0
    ZMat q = z_mul(element, z_inverse(w.elements[e].matrix));
    if (k0.count(q)) return epsilon(rd, w, lambda_c, e);
  }
  throw InternalError("element escapes the W_K0 cosets of W^1");
}

}  // namespace

InvarianceDiagnostics invariance_level(const RealForm& rf, const RestrictedDatum& rd,
                                       const RestrictedWeylGroup& w, const QVec& lambda_c) {
  auto w1 = enumerate_w1(rd, w);
  auto basis = singular_ncpt_basis(rd);
  auto in_k = singular_ncpt_in_k(rf, rd, basis);
  InvarianceDiagnostics out;
  for (size_t x = 0; x < in_k.elements.size(); ++x) {
    for (int e : w1) {
      ZMat xw = z_mul(in_k.elements[x], w.elements[e].matrix);
      int exw = epsilon_on_coset(rd, w, w1, lambda_c, xw);
      int ew = epsilon(rd, w, lambda_c, e);
      if (exw != ew) out.constancy_reading = false;
      if (exw != 1) out.literal_reading = false;
    }
  }
  out.level = out.constancy_reading ? Invariance::GInvariant : Invariance::GSharpOnly;
  return out;
}

SignatureResult compute_signature(const RealForm& rf, const HighestWeightSpec& gamma) {
  auto rd = restrict_datum(std::make_shared<RealForm>(rf));
  return compute_signature(rf, rd, gamma);
}

SignatureResult compute_signature(const RealForm& rf, const RestrictedDatum& rd,
                                  const HighestWeightSpec& gamma) {
  SignatureResult res;
  res.group = rf.name;
  res.ell = rf.ell();
  const QVec& lc = gamma.lambda_c;
  check(rf.project_fixed(lc) == lc, "lambda_c must be theta-fixed");
  check(in_tc_lattice(rf, lc), "lambda_c is not a character of T_c");
  check(is_weakly_integral(rf, lc), "lambda_c is not weakly integral");
  for (int i : rd.simples)
    check(dot(lc, rd.roots[i].coroot) >= 0, "lambda_c is not dominant for R+_res");

  // dim F(gamma): lambda_c is weakly dominant for the ambient theta-stable
  // system, so the Weyl formula applies to it directly
  {
    const RootDatum& d = *rf.datum;
    Rat num = 1, den = 1;
    QVec rho = q_zero(d.rank);
    for (int i : rd.ambient_positive)
      rho = q_add(rho, q_scale(Rat(1, 2), to_q(d.roots[i])));
    for (int i : rd.ambient_positive) {
      Rat a = dot(lc, d.coroots[i]);
      require_internal(is_integer(a), "dim: non-integral pairing");
      require_internal(a >= 0, "dim: lambda_c not ambient-dominant");
      num *= a + dot(rho, d.coroots[i]);
      den *= dot(rho, d.coroots[i]);
    }
    Rat dim = num / den;
    require_internal(is_integer(dim) && dim > 0, "dim: not a positive integer");
    res.dim = dim.get_num();
  }

  if (!q_is_zero(gamma.nu_real)) {
    res.invariance = Invariance::NoForm;
    res.sig = 0;
    res.p = res.q = 0;
    res.r = rd.dirac_index_r();
    return res;
  }

  auto w = build_w_theta(rd);
  auto w1 = enumerate_w1(rd, w);
  res.r = rd.dirac_index_r();

  std::vector<int> pos_k;
  for (int i : rd.positive)
    if (rd.roots[i].in_K()) pos_k.push_back(i);

  QVec lam_rho = q_add(lc, rd.rho_g);
  Int p0 = 0, q0 = 0;
  for (int e : w1) {
    QVec x = z_apply(w.elements[e].matrix, lam_rho);
    Rat num = 1, den = 1;
    for (int i : pos_k) {
      Rat a = dot(x, rd.roots[i].coroot);
      require_internal(a > 0, "w(lambda_c + rho_G) must stay K-dominant for w in W^1");
      require_internal(is_integer(a), "dim E: non-integral pairing");
      num *= a;
      den *= dot(rd.rho_k, rd.roots[i].coroot);
    }
    Rat dim_e = num / den;
    require_internal(is_integer(dim_e) && dim_e > 0, "dim E: not a positive integer");
    Contribution c;
    c.w_index = e;
    c.word = w.elements[e].word;
    c.eps = epsilon(rd, w, lc, e);
    c.dim_e = dim_e.get_num();
    c.w_lambda = z_apply(w.elements[e].matrix, lc);
    if (c.eps > 0)
      p0 += c.dim_e;
    else
      q0 += c.dim_e;
    res.contributions.push_back(std::move(c));
  }
  Int diff = p0 - q0;
  if (diff < 0) diff = -diff;
  Int denom = pow2(res.r);
  require_internal(diff % denom == 0, "2^r does not divide |p0 - q0|");
  res.sig = diff / denom;
  require_internal((res.dim - res.sig) % 2 == 0, "dim and Sig have different parity");
  res.p = (res.dim + res.sig) / 2;
  res.q = (res.dim - res.sig) / 2;

  auto diag = invariance_level(rf, rd, w, lc);
  res.invariance = diag.level;
  res.literal_reading_all_plus = diag.literal_reading;
  res.ambiguity_flag = component_group(rf).rank2 > 0;
  return res;
}

std::optional<Int> gl_closed_form(int n, const ZVec& lam) {
  check(int(lam.size()) == n, "lambda must have n entries");
  for (int i = 0; i + 1 < n; ++i)
    check(lam[i] >= lam[i + 1], "lambda must be weakly decreasing");
  for (int i = 0; i < n; ++i)
    if (lam[i] != -lam[n - 1 - i]) return std::nullopt;  // no invariant form
  int m = n / 2;
  int eps = n % 2;
  // spin datum in e-coordinates: B_m (n odd) or D_m (n even)
  Int dim_sigma = 1;
  std::map<ZVec, ZVec> all;
  for (int i = 0; i < m; ++i) {
    if (eps == 1) {
      for (int s : {1, -1}) {
        ZVec r(m, 0), cr(m, 0);
        r[i] = s;
        cr[i] = 2 * s;
        all[r] = cr;
      }
    }
    for (int j = i + 1; j < m; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          ZVec r(m, 0);
          r[i] = si;
          r[j] = sj;
          all[r] = r;
        }
  }
  if (!all.empty()) {
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
    auto pos = standard_positive_system(RootDatumPtr(d));
    QVec hw(m);
    for (int j = 0; j < m; ++j) hw[j] = Rat(lam[j]) + Rat(1, 2);
    dim_sigma = weyl_dimension(pos, hw);
  }
  Int denom = pow2(std::max(m - 1 + eps, 0));
  require_internal(dim_sigma % denom == 0, "half-spin dimension does not divide dim sigma(mu)");
  return dim_sigma / denom;
}

std::pair<Rat, Rat> ratio_identity(int n, const ZVec& lam) {
  auto sig = gl_closed_form(n, lam);
  check(sig.has_value(), "ratio identity needs a self-dual lambda");
  auto gl = build_gl_datum(n);
  auto pos = standard_positive_system(gl);
  QVec lamq = to_q(lam);
  Rat lhs = Rat(weyl_dimension(pos, lamq));
  Rat rhs = Rat(*sig) * Rat(*sig);
  int m = n / 2;
  for (int i = 1; i <= m; ++i) rhs *= Rat(2 * lam[i - 1] + n - 2 * i + 1) / Rat(n - 2 * i + 1);
  return {lhs, rhs};
}

DegreeProbe sig_degree_probe(int n, const ZVec& lam0, int kmax) {
  DegreeProbe probe;
  int m = n / 2;
  int eps = n % 2;
  probe.expected_degree = m * m + m * (eps - 1);
  check(int(lam0.size()) == n, "lam0 must have n entries");
  for (int i = 0; i < n; ++i) check(lam0[i] == -lam0[n - 1 - i], "lam0 must be self-dual");
  for (int i = 0; i + 1 < n; ++i) check(lam0[i] > lam0[i + 1], "lam0 must be strictly regular");
  for (int k = 1; k <= kmax; ++k) {
    ZVec scaled(n);
    for (int i = 0; i < n; ++i) scaled[i] = k * lam0[i];
    auto s = gl_closed_form(n, scaled);
    require_internal(s.has_value(), "scaled ray left the self-dual locus");
    probe.sig.push_back(*s);
  }
  std::vector<Int> cur = probe.sig;
  probe.diffs.push_back(cur);
  int order = 0;
  while (cur.size() > 1) {
    std::vector<Int> next;
    for (size_t i = 0; i + 1 < cur.size(); ++i) next.push_back(cur[i + 1] - cur[i]);
    ++order;
    bool zero = std::all_of(next.begin(), next.end(), [](const Int& x) { return x == 0; });
    if (zero && probe.vanish_order < 0) probe.vanish_order = order;
    probe.diffs.push_back(next);
    cur = next;
  }
  return probe;
}

}  // namespace sigform
