#include "sigform/realform.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

namespace sigform {

bool RealForm::is_imaginary(int root_index) const {
  return z_apply(theta, datum->roots[root_index]) == datum->roots[root_index];
}

QVec RealForm::project_fixed(const QVec& x) const {
  return q_scale(Rat(1, 2), q_add(x, z_apply(theta, x)));
}

QVec RealForm::project_split(const QVec& x) const {
  return q_scale(Rat(1, 2), q_sub(x, z_apply(theta, x)));
}

int RealForm::ell() const {
  long tr = 0;
  for (int i = 0; i < rank(); ++i) tr += theta[i][i];
  return int((rank() - tr) / 2);
}

void RealForm::validate() const {
  const RootDatum& d = *datum;
  require_internal(z_equal(z_mul(theta, theta), z_identity(d.rank)), "theta^2 != 1");
  require_internal(z_equal(theta_costar, z_transpose(theta)), "theta_costar != theta^T");
  for (size_t i = 0; i < d.roots.size(); ++i) {
    ZVec im = z_apply(theta, d.roots[i]);
    int j = d.root_index(im);
    require_internal(j >= 0, "theta does not permute the root set");
    require_internal(z_apply(theta_costar, d.coroots[i]) == d.coroots[j],
                     "theta action on coroots incompatible with roots");
    ZVec neg = d.roots[i];
    for (auto& x : neg) x = -x;
    require_internal(im != neg, "real root found: the Cartan is not maximally compact");
    if (im == d.roots[i]) {
      require_internal(noncompact.count(int(i)) == 1, "imaginary root missing from grading");
      require_internal(noncompact.at(int(i)) == noncompact.at(d.neg_of[i]),
                       "grading not symmetric under negation");
    } else {
      require_internal(noncompact.count(int(i)) == 0, "grading defined on a non-imaginary root");
    }
  }
  // additivity on imaginary triples
  for (const auto& [i, gi] : noncompact)
    for (const auto& [j, gj] : noncompact) {
      ZVec sum(d.rank);
      for (int k = 0; k < d.rank; ++k) sum[k] = d.roots[i][k] + d.roots[j][k];
      int s = d.root_index(sum);
      if (s < 0) continue;
      require_internal(noncompact.count(s) == 1, "sum of imaginary roots not imaginary");
      require_internal(noncompact.at(s) == (gi != gj), "grading not additive");
    }
  // restricted reflections of complex roots preserve the grading; the
  // reflection is s_a s_{theta a} when a + theta a is not a root, and
  // s_{a + theta a} when it is
  for (size_t i = 0; i < d.roots.size(); ++i) {
    if (is_imaginary(int(i))) continue;
    int ti = d.root_index(z_apply(theta, d.roots[i]));
    ZVec sum(d.rank);
    for (int k = 0; k < d.rank; ++k) sum[k] = d.roots[i][k] + d.roots[ti][k];
    int si = d.root_index(sum);
    ZMat w = (si >= 0) ? d.reflection(si) : z_mul(d.reflection(int(i)), d.reflection(ti));
    for (const auto& [b, gb] : noncompact) {
      int im = d.root_index(z_apply(w, d.roots[b]));
      require_internal(im >= 0 && noncompact.count(im) == 1,
                       "complex restricted reflection leaves the imaginary system");
      require_internal(noncompact.at(im) == gb, "complex restricted reflection breaks the grading");
    }
  }
}

RealFormPtr make_real_form(RootDatumPtr datum, ZMat theta, std::map<int, bool> noncompact,
                           std::string name) {
  auto rf = std::make_shared<RealForm>();
  rf->datum = std::move(datum);
  rf->theta = std::move(theta);
  rf->theta_costar = z_transpose(rf->theta);
  rf->noncompact = std::move(noncompact);
  rf->name = std::move(name);
  rf->validate();
  return rf;
}

RootClass classify_root(const RealForm& rf, int root_index) {
  const RootDatum& d = *rf.datum;
  ZVec im = z_apply(rf.theta, d.roots[root_index]);
  ZVec neg = d.roots[root_index];
  for (auto& x : neg) x = -x;
  require_internal(im != neg, "classify_root: real root (corrupted real form)");
  if (im != d.roots[root_index]) return RootClass::Complex;
  return rf.noncompact.at(root_index) ? RootClass::ImaginaryNoncompact
                                      : RootClass::ImaginaryCompact;
}

// ---- labels ----------------------------------------------------------------

GroupLabel GroupLabel::parse(const std::string& text) {
  std::smatch m;
  auto mk = [&](GroupLabel::Family f, int n) {
    GroupLabel l;
    l.family = f;
    l.n = n;
    return l;
  };
  if (std::regex_match(text, m, std::regex(R"(GL\((\d+)(,R)?\))")))
    return mk(Family::GL, std::stoi(m[1]));
  if (std::regex_match(text, m, std::regex(R"(SL\((\d+)(,R)?\))")))
    return mk(Family::SL, std::stoi(m[1]));
  if (std::regex_match(text, m, std::regex(R"(Sp\((\d+)(,R)?\))"))) {
    int k = std::stoi(m[1]);
    check(k % 2 == 0, "Sp(k): k must be even");
    return mk(Family::Sp, k);
  }
  if (std::regex_match(text, m, std::regex(R"(PSp\((\d+)(,R)?\))"))) {
    int k = std::stoi(m[1]);
    check(k % 2 == 0, "PSp(k): k must be even");
    return mk(Family::PSp, k);
  }
  if (std::regex_match(text, m, std::regex(R"((P?)SO\((\d+),(\d+)\))"))) {
    int p = std::stoi(m[2]), q = std::stoi(m[3]);
    check(p == q && p % 2 == 0, "only SO(2n,2n)/PSO(2n,2n) are built in");
    return mk(m[1] == "P" ? Family::PSO : Family::SO, p);
  }
  if (text == "E6split" || text == "E6(split)") return mk(Family::SplitE6, 6);
  if (std::regex_match(text, m, std::regex(R"(compact\(([A-G]),(\d+)\))"))) {
    GroupLabel l;
    l.family = Family::Compact;
    l.type = m[1];
    l.rank = std::stoi(m[2]);
    return l;
  }
  if (std::regex_match(text, m, std::regex(R"(complex\(([A-G]),(\d+)\))"))) {
    GroupLabel l;
    l.family = Family::Complex;
    l.type = m[1];
    l.rank = std::stoi(m[2]);
    return l;
  }
  throw ValidationError("unrecognized group label: " + text);
}

std::string GroupLabel::to_string() const {
  std::ostringstream os;
  switch (family) {
    case Family::GL: os << "GL(" << n << ",R)"; break;
    case Family::SL: os << "SL(" << n << ",R)"; break;
    case Family::Sp: os << "Sp(" << n << ",R)"; break;
    case Family::PSp: os << "PSp(" << n << ",R)"; break;
    case Family::SO: os << "SO(" << n << "," << n << ")"; break;
    case Family::PSO: os << "PSO(" << n << "," << n << ")"; break;
    case Family::SplitE6: os << "E6split"; break;
    case Family::Compact: os << "compact(" << type << "," << rank << ")"; break;
    case Family::Complex: os << "complex(" << type << "," << rank << ")"; break;
  }
  return os.str();
}

// ---- builtin constructors ----------------------------------------------------

namespace {

ZMat gl_theta(int n) {
  ZMat t(n, ZVec(n, 0));
  int m = n / 2;
  for (int j = 0; j < m; ++j) {
    t[2 * j + 1][2 * j] = -1;  // e_{2j} -> -e_{2j+1}
    t[2 * j][2 * j + 1] = -1;
  }
  if (n % 2 == 1) t[n - 1][n - 1] = -1;
  return t;
}

std::map<int, bool> grade_all(const RootDatum& d, const ZMat& theta, bool ncpt) {
  std::map<int, bool> g;
  for (size_t i = 0; i < d.roots.size(); ++i)
    if (z_apply(theta, d.roots[i]) == d.roots[i]) g[int(i)] = ncpt;
  return g;
}

RootDatumPtr assemble_datum(int rank, std::map<ZVec, ZVec> all, const std::vector<ZVec>& simples) {
  auto d = std::make_shared<RootDatum>();
  d->rank = rank;
  for (auto& [root, coroot] : all) {
    d->roots.push_back(root);
    d->coroots.push_back(coroot);
  }
  d->neg_of.resize(d->roots.size());
  for (size_t i = 0; i < d->roots.size(); ++i) {
    ZVec neg = d->roots[i];
    for (auto& x : neg) x = -x;
    int j = d->root_index(neg);
    require_internal(j >= 0, "datum: missing negative root");
    d->neg_of[i] = j;
  }
  for (const auto& s : simples) {
    int j = d->root_index(s);
    require_internal(j >= 0, "datum: preferred simple is not a root");
    d->preferred_simples.push_back(j);
  }
  d->validate();
  return d;
}

RealFormPtr make_gl(int n) {
  auto d = build_gl_datum(n);
  ZMat t = gl_theta(n);
  return make_real_form(d, t, grade_all(*d, t, true), "GL(" + std::to_string(n) + ",R)");
}

RealFormPtr make_sl(int n) {
  check(n >= 2, "SL(n) needs n >= 2");
  // quotient model: X* = Z^n / Z(1,...,1), basis u_i = [e_i], i < n-1
  int r = n - 1;
  auto cls = [&](const ZVec& x) {
    ZVec out(r);
    for (int i = 0; i < r; ++i) out[i] = x[i] - x[n - 1];
    return out;
  };
  ZMat te = gl_theta(n);
  std::map<ZVec, ZVec> all;
  std::vector<ZVec> simples;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      ZVec re(n, 0);
      re[i] = 1;
      re[j] = -1;
      ZVec root = cls(re);
      ZVec coroot(re.begin(), re.begin() + r);  // X_* = {sum = 0}: drop last
      all[root] = coroot;
      if (j == i + 1) simples.push_back(root);
    }
  auto d = assemble_datum(r, std::move(all), simples);
  // theta on classes: u_j -> [theta e_j]
  ZMat t(r, ZVec(r, 0));
  for (int j = 0; j < r; ++j) {
    ZVec ej(n, 0);
    ej[j] = 1;
    ZVec img = cls(z_apply(te, ej));
    for (int i = 0; i < r; ++i) t[i][j] = img[i];
  }
  return make_real_form(d, t, grade_all(*d, t, true), "SL(" + std::to_string(n) + ",R)");
}

// Shared lattice plumbing for the symplectic/orthogonal families: data are
// written in e-coordinates, then re-expressed in a basis of the character
// lattice (identity for the simply-connected-style lattice, index-2
// sublattice basis for the projective quotients).
struct LatticeFrame {
  std::vector<ZVec> basis;  // columns in e-coordinates; empty = standard

  ZVec to_basis(const ZVec& x) const {
    if (basis.empty()) return x;
    std::vector<QVec> cols;
    for (const auto& b : basis) cols.push_back(to_q(b));
    auto sol = solve_columns(cols, to_q(x));
    require_internal(sol.has_value() && is_integral(*sol),
                     "vector outside the character lattice");
    return to_z(*sol);
  }
  ZVec co_to_basis(const ZVec& y) const {
    if (basis.empty()) return y;
    ZVec out(basis.size());
    for (size_t k = 0; k < basis.size(); ++k) out[k] = dot(basis[k], y);
    return out;
  }
  static LatticeFrame even_sum_sublattice(int n) {
    // basis of {x in Z^n : sum x_i even}: differences plus 2 e_n
    LatticeFrame f;
    for (int i = 0; i + 1 < n; ++i) {
      ZVec b(n, 0);
      b[i] = 1;
      b[i + 1] = -1;
      f.basis.push_back(b);
    }
    ZVec b(n, 0);
    b[n - 1] = 2;
    f.basis.push_back(b);
    return f;
  }
};

RealFormPtr make_symplectic(int two_n, bool projective) {
  int n = two_n / 2;
  check(n >= 1, "Sp/PSp needs n >= 1");
  LatticeFrame frame;
  if (projective) frame = LatticeFrame::even_sum_sublattice(n);
  std::map<ZVec, ZVec> all;
  std::map<ZVec, bool> grading_by_root;
  auto add = [&](const ZVec& re, const ZVec& ce, bool ncpt) {
    ZVec root = frame.to_basis(re);
    all[root] = frame.co_to_basis(ce);
    grading_by_root[root] = ncpt;
  };
  for (int i = 0; i < n; ++i) {
    for (int sgn : {1, -1}) {
      ZVec re(n, 0), ce(n, 0);
      re[i] = 2 * sgn;
      ce[i] = sgn;
      add(re, ce, true);  // long roots +-2e_i noncompact
    }
    for (int j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          ZVec re(n, 0);
          re[i] = si;
          re[j] = sj;
          add(re, re, si == sj);  // e_i + e_j noncompact, e_i - e_j compact
        }
  }
  std::vector<ZVec> simples;
  for (int i = 0; i + 1 < n; ++i) {
    ZVec re(n, 0);
    re[i] = 1;
    re[i + 1] = -1;
    simples.push_back(frame.to_basis(re));
  }
  ZVec re(n, 0);
  re[n - 1] = 2;
  simples.push_back(frame.to_basis(re));
  auto d = assemble_datum(n, std::move(all), simples);
  std::map<int, bool> grading;
  for (size_t i = 0; i < d->roots.size(); ++i) grading[int(i)] = grading_by_root.at(d->roots[i]);
  std::string name = (projective ? "PSp(" : "Sp(") + std::to_string(two_n) + ",R)";
  return make_real_form(d, z_identity(n), std::move(grading), name);
}

RealFormPtr make_orthogonal_split(int two_n, bool projective) {
  int n = two_n / 2;
  check(n >= 1, "SO/PSO(2n,2n) needs n >= 1");
  int N = 2 * n;  // rank of D_{2n}
  LatticeFrame frame;
  if (projective) frame = LatticeFrame::even_sum_sublattice(N);
  std::map<ZVec, ZVec> all;
  std::map<ZVec, bool> grading_by_root;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      bool same_half = (i < n) == (j < n);
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          ZVec re(N, 0);
          re[i] = si;
          re[j] = sj;
          ZVec root = frame.to_basis(re);
          all[root] = frame.co_to_basis(re);
          grading_by_root[root] = !same_half;
        }
    }
  auto d = assemble_datum(N, std::move(all), {});
  std::map<int, bool> grading;
  for (size_t i = 0; i < d->roots.size(); ++i) grading[int(i)] = grading_by_root.at(d->roots[i]);
  std::string name = (projective ? "PSO(" : "SO(") + std::to_string(two_n) + "," +
                     std::to_string(two_n) + ")";
  return make_real_form(d, z_identity(N), std::move(grading), name);
}

RealFormPtr make_split_e6() {
  auto d = build_root_system('E', 6);
  // Bourbaki diagram flip 1<->6, 3<->5 as a permutation of the omega-basis
  ZMat t(6, ZVec(6, 0));
  auto set = [&](int from, int to) { t[to - 1][from - 1] = 1; };
  set(1, 6);
  set(6, 1);
  set(3, 5);
  set(5, 3);
  set(2, 2);
  set(4, 4);
  std::vector<int> imag;
  for (size_t i = 0; i < d->roots.size(); ++i)
    if (z_apply(t, d->roots[i]) == d->roots[i]) imag.push_back(int(i));
  // Split form: the grading with exactly 8 compact imaginary roots (maximal
  // compact sp(4), dim 36 = 32 roots + rank 4). Gradings are lattice homs
  // g(b) = <b, y> mod 2; take the first stable one.
  for (long mask = 0; mask < 64; ++mask) {
    ZVec y(6);
    for (int k = 0; k < 6; ++k) y[k] = (mask >> k) & 1;
    std::map<int, bool> grading;
    int compact_count = 0;
    for (int i : imag) {
      bool ncpt = ((dot(d->roots[i], y) % 2) + 2) % 2 == 1;
      grading[i] = ncpt;
      if (!ncpt) ++compact_count;
    }
    if (compact_count != 8) continue;
    try {
      return make_real_form(d, t, std::move(grading), "E6split");
    } catch (const InternalError&) {
      continue;
    }
  }
  throw InternalError("no valid split grading found for E6");
}

RealFormPtr make_compact(const std::string& type, int rank) {
  check(type.size() == 1, "compact(type, rank): single family letter expected");
  auto d = build_root_system(type[0], rank);
  return make_real_form(d, z_identity(rank), grade_all(*d, z_identity(rank), false),
                        "compact(" + type + "," + std::to_string(rank) + ")");
}

RealFormPtr make_complex(const std::string& type, int rank) {
  check(type.size() == 1, "complex(type, rank): single family letter expected");
  CartanMatrix a = cartan_matrix_of_type(type[0], rank);
  int n = rank;
  CartanMatrix dbl(2 * n, std::vector<long>(2 * n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      dbl[i][j] = a[i][j];
      dbl[n + i][n + j] = a[i][j];
    }
  auto d = build_root_system(dbl);
  ZMat t(2 * n, ZVec(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    t[i][n + i] = 1;
    t[n + i][i] = 1;
  }
  return make_real_form(d, t, {}, "complex(" + type + "," + std::to_string(rank) + ")");
}

}  // namespace

RealFormPtr builtin_group(const GroupLabel& label) {
  using F = GroupLabel::Family;
  switch (label.family) {
    case F::GL:
      check(label.n >= 1, "GL(n): n >= 1");
      return make_gl(label.n);
    case F::SL:
      return make_sl(label.n);
    case F::Sp:
      return make_symplectic(label.n, false);
    case F::PSp:
      return make_symplectic(label.n, true);
    case F::SO:
      return make_orthogonal_split(label.n, false);
    case F::PSO:
      return make_orthogonal_split(label.n, true);
    case F::SplitE6:
      return make_split_e6();
    case F::Compact:
      return make_compact(label.type, label.rank);
    case F::Complex:
      return make_complex(label.type, label.rank);
  }
  throw ValidationError("unhandled group label");
}

RealFormPtr builtin_group(const std::string& label) {
  return builtin_group(GroupLabel::parse(label));
}

// ---- weights ----------------------------------------------------------------

bool is_weakly_integral(const RealForm& rf, const QVec& gamma) {
  for (const auto& cr : rf.datum->coroots)
    if (!is_integer(dot(gamma, cr))) return false;
  return true;
}

bool is_strongly_integral(const RealForm& rf, const QVec& gamma) {
  // strong = weak + the m_alpha condition over real roots; H_c carries no
  // real roots, so the two notions coincide here.
  return is_weakly_integral(rf, gamma);
}

bool in_tc_lattice(const RealForm& rf, const QVec& lambda_c) {
  // lambda_c = (1+theta)/2 x for some x in X*  <=>  (1+theta) y = 2 lambda_c
  QVec twice = q_scale(Rat(2), lambda_c);
  if (!is_integral(twice)) return false;
  int n = rf.rank();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Int(rf.theta[i][j]) + (i == j ? 1 : 0);
  std::vector<Int> b(n);
  for (int i = 0; i < n; ++i) b[i] = to_int(twice[i]);
  return integer_solvable(a, b);
}

HighestWeightSpec hermitian_dual(const HighestWeightSpec& gamma) {
  // gamma^h = (lambda, -conj(nu)); conjugation negates the imaginary part,
  // so the dual negates exactly the real part of nu
  HighestWeightSpec out = gamma;
  for (auto& x : out.nu_real) x = -x;
  return out;
}

HermitianExistence hermitian_existence(const RealForm& rf, const HighestWeightSpec& gamma) {
  (void)rf;
  if (!q_is_zero(gamma.nu_real)) return HermitianExistence::None;
  return HermitianExistence::SeeInvarianceLevel;
}

HighestWeightSpec gl_split_to_fundamental(int n, const ZVec& lam) {
  check(int(lam.size()) == n, "lambda must have n entries");
  for (int i = 0; i + 1 < n; ++i)
    check(lam[i] >= lam[i + 1], "lambda must be weakly decreasing");
  int m = n / 2;
  HighestWeightSpec spec;
  QVec u(m);
  for (int j = 0; j < m; ++j) u[j] = Rat(lam[j] - lam[n - 1 - j]);
  spec.lambda_c = gl_u_to_fixed(n, u);
  // nu_real records the blockwise means along the (-theta)-eigenspace; only
  // its vanishing is consumed, and it vanishes exactly for self-dual lam
  spec.nu_real = q_zero(n);
  for (int j = 0; j < m; ++j) {
    Rat s = Rat(lam[j] + lam[n - 1 - j]) / 2;
    spec.nu_real[2 * j] += s;
    spec.nu_real[2 * j + 1] += s;
  }
  if (n % 2 == 1) spec.nu_real[n - 1] = Rat(lam[m]);
  spec.nu_imag = q_zero(n);
  return spec;
}

QVec gl_u_to_fixed(int n, const QVec& u) {
  int m = n / 2;
  check(int(u.size()) == m, "u-coordinates must have length floor(n/2)");
  QVec out = q_zero(n);
  for (int j = 0; j < m; ++j) {
    out[2 * j] = u[j] / 2;
    out[2 * j + 1] = -u[j] / 2;
  }
  return out;
}

QVec gl_fixed_to_u(int n, const QVec& fixed) {
  int m = n / 2;
  QVec u(m);
  for (int j = 0; j < m; ++j) u[j] = fixed[2 * j] - fixed[2 * j + 1];
  return u;
}

}  // namespace sigform
