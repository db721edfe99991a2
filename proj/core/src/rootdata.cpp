#include "sigform/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace sigform {

int RootDatum::root_index(const ZVec& r) const {
  auto it = std::lower_bound(roots.begin(), roots.end(), r);
  if (it != roots.end() && *it == r) return int(it - roots.begin());
  return -1;
}

bool RootDatum::is_root(const ZVec& r) const { return root_index(r) >= 0; }

long RootDatum::pairing(int root_i, int coroot_j) const {
  return dot(roots[root_i], coroots[coroot_j]);
}

ZMat RootDatum::reflection(int i) const {
  ZMat m = z_identity(rank);
  // s(x) = x - <x, a^vee> a  => column j gets -a * coroot[j]
  for (int c = 0; c < rank; ++c)
    for (int r = 0; r < rank; ++r) m[r][c] -= roots[i][r] * coroots[i][c];
  return m;
}

ZMat RootDatum::coreflection(int i) const {
  ZMat m = z_identity(rank);
  for (int c = 0; c < rank; ++c)
    for (int r = 0; r < rank; ++r) m[r][c] -= coroots[i][r] * roots[i][c];
  return m;
}

void RootDatum::validate() const {
  require_internal(roots.size() == coroots.size(), "datum: roots/coroots length mismatch");
  require_internal(std::is_sorted(roots.begin(), roots.end()), "datum: roots not sorted");
  for (size_t i = 0; i < roots.size(); ++i) {
    require_internal(dot(roots[i], coroots[i]) == 2, "datum: <a, a^vee> != 2");
    require_internal(size_t(neg_of[i]) < roots.size(), "datum: bad neg_of");
    ZVec neg(roots[i]);
    for (auto& x : neg) x = -x;
    require_internal(roots[neg_of[i]] == neg, "datum: roots not closed under negation");
  }
  // reflection closure, exact
  for (size_t i = 0; i < roots.size(); ++i) {
    ZMat s = reflection(int(i));
    ZMat sv = coreflection(int(i));
    for (size_t j = 0; j < roots.size(); ++j) {
      ZVec im = z_apply(s, roots[j]);
      int k = root_index(im);
      require_internal(k >= 0, "datum: reflection does not permute the roots");
      require_internal(z_apply(sv, coroots[j]) == coroots[k],
                       "datum: coreflection incompatible with root bijection");
    }
  }
}

bool PositiveSystem::is_positive(int root_index) const {
  return std::binary_search(positive.begin(), positive.end(), root_index);
}

QVec PositiveSystem::simple_pairings(const QVec& phi) const {
  QVec out;
  for (int s : simples) out.push_back(dot(phi, datum->coroots[s]));
  return out;
}

bool WeylElement::is_identity() const {
  for (size_t i = 0; i < matrix.size(); ++i)
    for (size_t j = 0; j < matrix.size(); ++j)
      if (matrix[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

// ---- construction ---------------------------------------------------------

CartanMatrix cartan_matrix_of_type(char family, int rank) {
  check(rank >= 1, "rank must be positive");
  auto chain = [&](int n) {
    CartanMatrix a(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) {
      a[i][i] = 2;
      if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
  };
  switch (family) {
    case 'A':
      return chain(rank);
    case 'B': {  // short root last: <alpha_n, alpha_{n-1}^vee> = -2... careful
      check(rank >= 2, "B requires rank >= 2");
      auto a = chain(rank);
      a[rank - 1][rank - 2] = -2;  // <alpha_{n-1}, alpha_n^vee> row n, col n-1
      return a;
    }
    case 'C': {
      check(rank >= 2, "C requires rank >= 2");
      auto a = chain(rank);
      a[rank - 2][rank - 1] = -2;
      return a;
    }
    case 'D': {
      check(rank >= 3, "D requires rank >= 3");
      auto a = chain(rank);
      a[rank - 1][rank - 2] = a[rank - 2][rank - 1] = 0;
      a[rank - 1][rank - 3] = a[rank - 3][rank - 1] = -1;
      return a;
    }
    case 'E': {
      check(rank >= 6 && rank <= 8, "E requires rank 6..8");
      // Bourbaki: node 2 attached to node 4; chain 1-3-4-5-...-rank
      CartanMatrix a(rank, std::vector<long>(rank, 0));
      for (int i = 0; i < rank; ++i) a[i][i] = 2;
      auto join = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
      join(1, 3);
      join(3, 4);
      join(2, 4);
      for (int i = 4; i < rank; ++i) join(i, i + 1);
      return a;
    }
    case 'F': {
      check(rank == 4, "F requires rank 4");
      auto a = chain(4);
      a[2][1] = -2;  // <alpha_2, alpha_3^vee> = -2 (alpha_3 short)
      a[1][2] = -1;
      return a;
    }
    case 'G': {
      check(rank == 2, "G requires rank 2");
      return {{2, -1}, {-3, 2}};
    }
    default:
      throw ValidationError(std::string("unknown family '") + family + "'");
  }
}

namespace {

struct RootBuild {
  std::map<ZVec, ZVec> root_to_coroot;
};

// Check the symmetrized matrix is positive definite; returns indices of a
// failing principal submatrix otherwise.
std::optional<std::vector<int>> finite_type_failure(const CartanMatrix& a) {
  int n = int(a.size());
  for (int i = 0; i < n; ++i) {
    check(int(a[i].size()) == n, "Cartan matrix must be square");
    check(a[i][i] == 2, "Cartan matrix diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      check(a[i][j] <= 0, "off-diagonal Cartan entries must be <= 0");
      check((a[i][j] == 0) == (a[j][i] == 0), "Cartan zero pattern must be symmetric");
    }
  }
  // symmetrizer d_i > 0 with d_i a_ij = d_j a_ji, found by graph traversal
  std::vector<Rat> d(n, Rat(0));
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        Rat dj = d[i] * long(a[i][j]) / long(a[j][i]);
        if (d[j] == 0) {
          d[j] = dj;
          q.push(j);
        } else if (d[j] != dj) {
          return std::vector<int>{i, j};  // not symmetrizable
        }
      }
    }
  }
  // leading principal minors of (d_i a_ij) must be positive
  QMat sym(n, QVec(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sym[i][j] = d[i] * long(a[i][j]);
  for (int k = 1; k <= n; ++k) {
    QMat minor(k, QVec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor[i][j] = sym[i][j];
    // determinant by elimination
    Rat det = 1;
    for (int c = 0; c < k; ++c) {
      int piv = -1;
      for (int r = c; r < k; ++r)
        if (minor[r][c] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) {
        det = 0;
        break;
      }
      if (piv != c) {
        std::swap(minor[piv], minor[c]);
        det = -det;
      }
      det *= minor[c][c];
      for (int r = c + 1; r < k; ++r) {
        Rat f = minor[r][c] / minor[c][c];
        for (int j = c; j < k; ++j) minor[r][j] -= f * minor[c][j];
      }
    }
    if (det <= 0) {
      std::vector<int> idx(k);
      std::iota(idx.begin(), idx.end(), 0);
      return idx;
    }
  }
  return std::nullopt;
}

RootDatumPtr finish_datum(int rank, std::map<ZVec, ZVec> root_to_coroot,
                          const std::vector<ZVec>& simples) {
  auto d = std::make_shared<RootDatum>();
  d->rank = rank;
  for (auto& [r, cr] : root_to_coroot) {
    d->roots.push_back(r);
    d->coroots.push_back(cr);
  }
  d->neg_of.resize(d->roots.size());
  for (size_t i = 0; i < d->roots.size(); ++i) {
    ZVec neg = d->roots[i];
    for (auto& x : neg) x = -x;
    int j = d->root_index(neg);
    require_internal(j >= 0, "datum: missing negative root");
    d->neg_of[i] = j;
  }
  for (const ZVec& s : simples) {
    int j = d->root_index(s);
    require_internal(j >= 0, "datum: preferred simple is not a root");
    d->preferred_simples.push_back(j);
  }
  d->validate();
  return d;
}

}  // namespace

RootDatumPtr build_root_system(const CartanMatrix& cartan) {
  if (auto bad = finite_type_failure(cartan)) {
    std::ostringstream os;
    os << "Cartan matrix is not of finite type; failing principal submatrix {";
    for (size_t i = 0; i < bad->size(); ++i) os << (i ? "," : "") << (*bad)[i];
    os << "}";
    throw ValidationError(os.str());
  }
  int n = int(cartan.size());
  // basis of X* = fundamental weights; alpha_j = column j of the Cartan
  // matrix, alpha_i^vee = e_i in the dual basis.
  std::vector<ZVec> simple_roots(n, ZVec(n));
  std::vector<ZVec> simple_coroots(n, ZVec(n, 0));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) simple_roots[j][i] = cartan[i][j];
    simple_coroots[j][j] = 1;
  }
  // reflection closure
  std::map<ZVec, ZVec> all;
  std::queue<ZVec> work;
  for (int j = 0; j < n; ++j) {
    all[simple_roots[j]] = simple_coroots[j];
    work.push(simple_roots[j]);
  }
  while (!work.empty()) {
    ZVec r = work.front();
    work.pop();
    ZVec cr = all[r];
    for (int i = 0; i < n; ++i) {
      long p = dot(r, simple_coroots[i]);       // <r, a_i^vee>
      long pv = dot(simple_roots[i], cr);       // <a_i, r^vee>
      ZVec nr = r, ncr = cr;
      for (int k = 0; k < n; ++k) {
        nr[k] -= p * simple_roots[i][k];
        ncr[k] -= pv * simple_coroots[i][k];
      }
      if (!all.count(nr)) {
        all[nr] = ncr;
        work.push(nr);
      }
      require_internal(all.size() <= 100000, "reflection closure exploded");
    }
  }
  return finish_datum(n, std::move(all), simple_roots);
}

RootDatumPtr build_root_system(char family, int rank) {
  return build_root_system(cartan_matrix_of_type(family, rank));
}

RootDatumPtr build_gl_datum(int n) {
  check(n >= 1, "GL(n) needs n >= 1");
  std::map<ZVec, ZVec> all;
  std::vector<ZVec> simples;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      ZVec r(n, 0), cr(n, 0);
      r[i] = 1;
      r[j] = -1;
      cr[i] = 1;
      cr[j] = -1;
      if (j == i + 1) simples.push_back(r);
      all[r] = cr;
    }
  return finish_datum(n, std::move(all), simples);
}

namespace {

std::vector<int> find_simples(const RootDatum& d, const std::vector<int>& positive) {
  // indecomposable positives: not a sum of two positive roots
  std::set<ZVec> pos_set;
  for (int i : positive) pos_set.insert(d.roots[i]);
  std::vector<int> simples;
  for (int i : positive) {
    bool decomposable = false;
    for (int j : positive) {
      if (decomposable) break;
      ZVec diff(d.rank);
      for (int k = 0; k < d.rank; ++k) diff[k] = d.roots[i][k] - d.roots[j][k];
      if (diff == ZVec(d.rank, 0)) continue;
      if (pos_set.count(diff)) decomposable = true;
    }
    if (!decomposable) simples.push_back(i);
  }
  return simples;
}

PositiveSystem assemble_system(RootDatumPtr datum, std::vector<int> positive) {
  std::sort(positive.begin(), positive.end());
  PositiveSystem ps;
  ps.datum = datum;
  ps.positive = std::move(positive);
  ps.simples = find_simples(*datum, ps.positive);
  ps.rho = q_zero(datum->rank);
  for (int i : ps.positive) ps.rho = q_add(ps.rho, q_scale(Rat(1, 2), to_q(datum->roots[i])));
  ps.two_rho = ZVec(datum->rank, 0);
  for (int i : ps.positive)
    for (int k = 0; k < datum->rank; ++k) ps.two_rho[k] += datum->roots[i][k];
  return ps;
}

}  // namespace

PositiveSystem standard_positive_system(RootDatumPtr datum) {
  std::vector<int> pos;
  if (!datum->preferred_simples.empty()) {
    // positive = nonnegative expansion over the construction simples
    std::vector<QVec> cols;
    for (int s : datum->preferred_simples) cols.push_back(to_q(datum->roots[s]));
    for (size_t i = 0; i < datum->roots.size(); ++i) {
      auto coeffs = solve_columns(cols, to_q(datum->roots[i]));
      require_internal(coeffs.has_value(), "root outside the span of the simple roots");
      bool nonneg = true;
      for (const auto& c : *coeffs)
        if (c < 0) nonneg = false;
      if (nonneg) pos.push_back(int(i));
    }
  } else {
    for (size_t i = 0; i < datum->roots.size(); ++i) {
      const ZVec& r = datum->roots[i];
      for (long x : r) {
        if (x > 0) {
          pos.push_back(int(i));
          break;
        }
        if (x < 0) break;
      }
    }
  }
  require_internal(2 * pos.size() == datum->roots.size(),
                   "positivity failed to split the roots evenly");
  return assemble_system(datum, std::move(pos));
}

PositiveSystem positive_system_from_key(RootDatumPtr datum,
                                        const std::vector<QVec>& key_covectors) {
  std::vector<int> pos;
  for (size_t i = 0; i < datum->roots.size(); ++i) {
    QVec r = to_q(datum->roots[i]);
    int sign = 0;
    for (const auto& key : key_covectors) {
      Rat v = dotq(r, key);
      if (v != 0) {
        sign = v > 0 ? 1 : -1;
        break;
      }
    }
    require_internal(sign != 0, "positivity key vanishes on a root");
    if (sign > 0) pos.push_back(int(i));
  }
  return assemble_system(datum, std::move(pos));
}

Int weyl_dimension(const PositiveSystem& pos, const QVec& lam) {
  const RootDatum& d = *pos.datum;
  Rat num = 1, den = 1;
  for (int i : pos.positive) {
    Rat li = dot(lam, d.coroots[i]);
    if (!is_integer(li)) {
      std::ostringstream os;
      os << "weyl_dimension: weight pairs non-integrally (" << li.get_str()
         << ") with coroot #" << i;
      throw ValidationError(os.str());
    }
    Rat shifted = li + dot(pos.rho, d.coroots[i]);
    if (shifted <= 0) {
      std::ostringstream os;
      os << "weyl_dimension: weight is not dominant: <lam+rho, coroot #" << i
         << "> = " << shifted.get_str();
      throw ValidationError(os.str());
    }
    num *= shifted;
    den *= dot(pos.rho, d.coroots[i]);
  }
  Rat dim = num / den;
  require_internal(is_integer(dim) && dim > 0,
                   "weyl_dimension: product is not a positive integer");
  return dim.get_num();
}

std::pair<QVec, WeylElement> dominant_representative(const PositiveSystem& pos, const QVec& phi) {
  const RootDatum& d = *pos.datum;
  QVec x = phi;
  WeylElement w{z_identity(d.rank), {}};
  for (;;) {
    bool moved = false;
    for (size_t si = 0; si < pos.simples.size(); ++si) {
      int i = pos.simples[si];
      Rat p = dot(x, d.coroots[i]);
      if (p < 0) {
        for (int k = 0; k < d.rank; ++k) x[k] -= p * long(d.roots[i][k]);
        w.matrix = z_mul(d.reflection(i), w.matrix);
        w.word.insert(w.word.begin(), int(si));  // word in simple indices, left to right
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return {x, w};
}

Rat invariant_form(const RootDatum& datum, const QVec& x, const QVec& y) {
  Rat s = 0;
  for (const auto& cr : datum.coroots) s += dot(x, cr) * dot(y, cr);
  return s;
}

std::map<ZVec, Int> freudenthal_multiplicities(const PositiveSystem& pos, const ZVec& lam) {
  const RootDatum& d = *pos.datum;
  QVec lamq = to_q(lam);
  for (int i : pos.positive) {
    check(is_integer(dot(lamq, d.coroots[i])),
          "freudenthal: weight must be integral on all coroots");
    check(dot(lamq, d.coroots[i]) >= 0, "freudenthal: weight must be dominant");
  }
  // Gram matrix of the invariant form, hoisted out of all inner loops
  QMat gramB(d.rank, QVec(d.rank, Rat(0)));
  for (const auto& cr : d.coroots)
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j) gramB[i][j] += Rat(cr[i]) * Rat(cr[j]);
  auto bform = [&](const QVec& x, const QVec& y) {
    Rat s = 0;
    for (int i = 0; i < d.rank; ++i) {
      if (x[i] == 0) continue;
      Rat row = 0;
      for (int j = 0; j < d.rank; ++j) row += gramB[i][j] * y[j];
      s += x[i] * row;
    }
    return s;
  };
  // per positive root: B(., alpha) as a covector, and B(alpha, alpha)
  std::vector<QVec> b_alpha;
  std::vector<Rat> alpha_norm;
  for (int i : pos.positive) {
    QVec a = to_q(d.roots[i]);
    QVec cov(d.rank, Rat(0));
    for (int r = 0; r < d.rank; ++r)
      for (int c = 0; c < d.rank; ++c) cov[r] += gramB[r][c] * a[c];
    b_alpha.push_back(cov);
    alpha_norm.push_back(bform(a, a));
  }

  // lowest weight = -dominant(-lam); every weight lies in lam - N.simples
  auto [neg_dom, wneg] = dominant_representative(pos, q_scale(Rat(-1), lamq));
  QVec lowest = q_scale(Rat(-1), neg_dom);
  std::vector<QVec> simple_cols;
  for (int i : pos.simples) simple_cols.push_back(to_q(d.roots[i]));
  auto depth_coords = solve_columns(simple_cols, q_sub(lamq, lowest));
  require_internal(depth_coords.has_value(), "freudenthal: lam - lowest not in root lattice span");
  long depth = 0;
  for (const auto& c : *depth_coords) depth += to_long(c);

  QVec lam_rho = q_add(lamq, pos.rho);
  Rat norm_top = bform(lam_rho, lam_rho);

  // saturation: mu is a weight iff its dominant representative nu satisfies
  // lam - nu in N.simples; precompute the dominant weight set once
  std::set<ZVec> dominant_set;
  {
    std::vector<ZVec> work = {lam};
    dominant_set.insert(lam);
    while (!work.empty()) {
      ZVec nu = work.back();
      work.pop_back();
      for (int i : pos.positive) {
        ZVec child(nu);
        for (int k = 0; k < d.rank; ++k) child[k] -= d.roots[i][k];
        auto [dom, w] = dominant_representative(pos, to_q(child));
        ZVec domz = to_z(dom);
        if (dominant_set.count(domz)) continue;
        auto coeffs = solve_columns(simple_cols, q_sub(lamq, dom));
        if (!coeffs) continue;
        bool natural = true;
        for (const auto& c : *coeffs)
          if (!is_integer(c) || c < 0) natural = false;
        if (!natural) continue;
        dominant_set.insert(domz);
        work.push_back(domz);
      }
    }
  }
  auto is_weight = [&](const ZVec& mu) {
    auto [dom, w] = dominant_representative(pos, to_q(mu));
    if (!is_integral(dom)) return false;
    return dominant_set.count(to_z(dom)) > 0;
  };

  // process genuine weights by height; memoized string sums make each
  // (weight, positive root) pair O(1):
  //   s2(mu, a) = mult(mu) B(mu, a) + s2(mu + a, a)
  std::map<ZVec, int> windex;
  std::vector<ZVec> wlist;
  std::vector<Int> mult_v;
  std::vector<std::vector<Rat>> s2;
  auto add_weight = [&](const ZVec& mu, const Int& m) {
    windex[mu] = int(wlist.size());
    wlist.push_back(mu);
    mult_v.push_back(m);
    QVec muq = to_q(mu);
    std::vector<Rat> row(pos.positive.size(), Rat(0));
    for (size_t pi = 0; pi < pos.positive.size(); ++pi) {
      Rat val = Rat(m) * dotq(muq, b_alpha[pi]);
      ZVec up(mu);
      for (int c = 0; c < d.rank; ++c) up[c] += d.roots[pos.positive[pi]][c];
      auto it = windex.find(up);
      if (it != windex.end()) val += s2[it->second][pi];
      row[pi] = val;
    }
    s2.push_back(std::move(row));
  };
  add_weight(lam, 1);
  std::vector<ZVec> layer = {lam};
  for (long h = 1; h <= depth && !layer.empty(); ++h) {
    std::set<ZVec> next;
    for (const ZVec& mu : layer)
      for (int i : pos.simples) {
        ZVec nu(mu);
        for (int k = 0; k < d.rank; ++k) nu[k] -= d.roots[i][k];
        if (!windex.count(nu) && is_weight(nu)) next.insert(nu);
      }
    layer.assign(next.begin(), next.end());
    for (const ZVec& mu : layer) {
      QVec muq = to_q(mu);
      QVec mu_rho = q_add(muq, pos.rho);
      Rat denom = norm_top - bform(mu_rho, mu_rho);
      require_internal(denom != 0, "freudenthal: singular denominator on a weight");
      Rat acc = 0;
      for (size_t pi = 0; pi < pos.positive.size(); ++pi) {
        ZVec up(mu);
        for (int c = 0; c < d.rank; ++c) up[c] += d.roots[pos.positive[pi]][c];
        auto it = windex.find(up);
        if (it != windex.end()) acc += s2[it->second][pi];
      }
      Rat val = 2 * acc / denom;
      require_internal(is_integer(val) && val > 0, "freudenthal: multiplicity must be in Z > 0");
      add_weight(mu, val.get_num());
    }
  }
  std::map<ZVec, Int> mult;
  for (size_t i = 0; i < wlist.size(); ++i) mult[wlist[i]] = mult_v[i];
  return mult;
}

std::vector<WeylElement> generate_weyl_group(const PositiveSystem& pos, long cap) {
  const RootDatum& d = *pos.datum;
  std::vector<ZMat> gens;
  for (int i : pos.simples) gens.push_back(d.reflection(i));
  std::map<ZMat, int> seen;
  std::vector<WeylElement> out;
  out.push_back({z_identity(d.rank), {}});
  seen[out[0].matrix] = 0;
  for (size_t head = 0; head < out.size(); ++head) {
    WeylElement cur = out[head];  // copy: out may reallocate
    for (size_t g = 0; g < gens.size(); ++g) {
      ZMat next = z_mul(gens[g], cur.matrix);
      if (seen.count(next)) continue;
      check(long(out.size()) < cap,
            "Weyl group order exceeds the cap; use orbit algorithms instead");
      WeylElement w;
      w.matrix = next;
      w.word = cur.word;
      w.word.insert(w.word.begin(), int(g));
      seen[next] = int(out.size());
      out.push_back(std::move(w));
    }
  }
  return out;
}

// ---- type classification ---------------------------------------------------

bool SimpleType::operator<(const SimpleType& o) const {
  if (family != o.family) return family < o.family;
  return rank < o.rank;
}

namespace {

SimpleType normalize_type(SimpleType t) {
  if (t.family == "B" && t.rank == 1) return {"A", 1};
  if (t.family == "C" && t.rank == 1) return {"A", 1};
  if (t.family == "B" && t.rank == 2) return {"C", 2};
  if (t.family == "D" && t.rank == 3) return {"A", 3};
  return t;
}

std::vector<SimpleType> normalized_components(const CartanType& t) {
  std::vector<SimpleType> out;
  for (auto c : t.components) {
    if (c.family == "D" && c.rank == 1) continue;  // torus factor, no roots
    if (c.family == "D" && c.rank == 2) {
      out.push_back({"A", 1});
      out.push_back({"A", 1});
      continue;
    }
    out.push_back(normalize_type(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string CartanType::to_string() const {
  if (!recognized) return "unrecognized";
  if (components.empty()) return "0";
  std::ostringstream os;
  // run-length encode equal components: A1^3
  size_t i = 0;
  bool first = true;
  while (i < components.size()) {
    size_t j = i;
    while (j < components.size() && components[j] == components[i]) ++j;
    if (!first) os << "+";
    os << components[i].family << components[i].rank;
    if (j - i > 1) os << "^" << (j - i);
    first = false;
    i = j;
  }
  return os.str();
}

bool CartanType::same_as(const CartanType& other) const {
  if (!recognized || !other.recognized) return false;
  return normalized_components(*this) == normalized_components(other);
}

CartanType CartanType::parse(const std::string& label) {
  CartanType t;
  if (label == "0" || label.empty()) return t;
  std::istringstream is(label);
  std::string part;
  while (std::getline(is, part, '+')) {
    std::string fam;
    size_t k = 0;
    while (k < part.size() && std::isalpha(part[k])) fam += part[k++];
    size_t caret = part.find('^', k);
    int rank = std::stoi(part.substr(k, caret == std::string::npos ? std::string::npos : caret - k));
    int count = caret == std::string::npos ? 1 : std::stoi(part.substr(caret + 1));
    for (int c = 0; c < count; ++c) t.components.push_back({fam, rank});
  }
  std::sort(t.components.begin(), t.components.end());
  return t;
}

CartanType classify_subsystem(const std::vector<QVec>& root_values,
                              const std::vector<QVec>& coroot_values) {
  CartanType result;
  if (root_values.empty()) return result;
  size_t n = root_values.size();
  // reduced part: roots whose double is not in the list
  std::set<QVec> value_set(root_values.begin(), root_values.end());
  std::vector<int> reduced;
  std::vector<int> halves;  // non-reduced: 2v also a root
  for (size_t i = 0; i < n; ++i) {
    QVec twice = q_scale(Rat(2), root_values[i]);
    if (value_set.count(twice))
      halves.push_back(int(i));
    else
      reduced.push_back(int(i));
  }
  // positivity: lexicographic on value coordinates
  auto is_pos = [&](const QVec& v) {
    for (const auto& x : v) {
      if (x > 0) return true;
      if (x < 0) return false;
    }
    return false;
  };
  // simples of the reduced part
  std::set<QVec> pos_reduced;
  for (int i : reduced)
    if (is_pos(root_values[i])) pos_reduced.insert(root_values[i]);
  std::vector<int> simple_idx;
  for (int i : reduced) {
    if (!is_pos(root_values[i])) continue;
    bool decomposable = false;
    for (const auto& other : pos_reduced) {
      QVec diff = q_sub(root_values[i], other);
      if (q_is_zero(diff)) continue;
      if (pos_reduced.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple_idx.push_back(i);
  }
  // connected components via Cartan pairings between simples
  size_t m = simple_idx.size();
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (size_t s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    std::queue<size_t> q;
    q.push(s);
    comp[s] = ncomp;
    while (!q.empty()) {
      size_t u = q.front();
      q.pop();
      for (size_t v = 0; v < m; ++v) {
        if (comp[v] >= 0) continue;
        if (dotq(root_values[simple_idx[u]], coroot_values[simple_idx[v]]) != 0) {
          comp[v] = comp[s];
          q.push(v);
        }
      }
    }
    ++ncomp;
  }
  // norms via the ambient restriction of the pairing: use <v, v^vee>-free
  // proxy: squared length from the subsystem's own coroots
  auto norm2 = [&](const QVec& v) {
    Rat s = 0;
    for (const auto& cv : coroot_values) {
      Rat t = 0;
      for (size_t k = 0; k < v.size(); ++k) t += v[k] * cv[k];
      s += t * t;
    }
    return s;
  };
  for (int c = 0; c < ncomp; ++c) {
    // collect roots of this component: reduced roots lying in the span of
    // the component's simples <=> nonzero pairing chain; easier: assign each
    // positive reduced root to the component of any simple it is built from
    std::vector<QVec> comp_simples;
    for (size_t s = 0; s < m; ++s)
      if (comp[s] == c) comp_simples.push_back(root_values[simple_idx[s]]);
    int rank = int(comp_simples.size());
    long count = 0;       // reduced roots in component
    long halves_cnt = 0;  // non-reduced members attached to the component
    std::set<Rat> norms;
    auto in_component = [&](const QVec& v) {
      auto sol = solve_columns(comp_simples, v);
      return sol.has_value();
    };
    std::vector<int> members;
    for (int i : reduced) {
      if (!in_component(root_values[i])) continue;
      members.push_back(i);
      ++count;
      norms.insert(norm2(root_values[i]));
    }
    Rat min_norm = *norms.begin();
    long short_count = 0;
    for (int i : members)
      if (norm2(root_values[i]) == min_norm) ++short_count;
    for (int i : halves)
      if (in_component(root_values[i])) ++halves_cnt;

    SimpleType t;
    t.rank = rank;
    if (norms.size() > 2) {
      result.recognized = false;
      return result;
    }
    if (halves_cnt > 0) {
      require_internal(halves_cnt == 2 * rank, "BC component with unexpected half-root count");
      t.family = "BC";
    } else if (norms.size() <= 1) {
      // simply laced
      if (count == rank * (rank + 1))
        t.family = "A";
      else if (count == 2 * rank * (rank - 1))
        t.family = "D";
      else if (rank == 6 && count == 72)
        t.family = "E";
      else if (rank == 7 && count == 126)
        t.family = "E";
      else if (rank == 8 && count == 240)
        t.family = "E";
      else {
        result.recognized = false;
      }
    } else {
      if (rank == 2 && count == 12)
        t.family = "G";
      else if (rank == 4 && count == 48)
        t.family = "F";
      else if (count == 2 * rank * rank)
        t.family = (short_count == 2 * rank) ? "B" : "C";
      else
        result.recognized = false;
    }
    if (!result.recognized) break;
    result.components.push_back(normalize_type(t));
  }
  if (!result.recognized) {
    result.components.clear();
    // hand back the raw Cartan pairings of the simple roots
    result.raw.assign(m, std::vector<long>(m, 0));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        Rat v = dotq(root_values[simple_idx[j]], coroot_values[simple_idx[i]]);
        result.raw[i][j] = to_long(v);
      }
    return result;
  }
  std::sort(result.components.begin(), result.components.end());
  return result;
}

Int weyl_order(const CartanType& type) {
  Int total = 1;
  auto fact = [](long n) {
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
  };
  for (const auto& c : type.components) {
    Int o = 1;
    if (c.family == "A")
      o = fact(c.rank + 1);
    else if (c.family == "B" || c.family == "C" || c.family == "BC")
      o = fact(c.rank) * pow2(c.rank);
    else if (c.family == "D")
      o = fact(c.rank) * pow2(c.rank - 1);
    else if (c.family == "G")
      o = 12;
    else if (c.family == "F")
      o = 1152;
    else if (c.family == "E" && c.rank == 6)
      o = 51840;
    else if (c.family == "E" && c.rank == 7)
      o = 2903040;
    else if (c.family == "E" && c.rank == 8)
      o = Int("696729600");
    total *= o;
  }
  return total;
}

}  // namespace sigform
