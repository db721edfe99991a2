#include "sigform/linalg.hpp"

#include <algorithm>

namespace sigform {

QVec to_q(const ZVec& v) {
  QVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

ZVec to_z(const QVec& v) {
  ZVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = to_long(v[i]);
  return out;
}

bool is_integral(const QVec& v) {
  for (const auto& x : v)
    if (!is_integer(x)) return false;
  return true;
}

QVec q_zero(int n) { return QVec(n, Rat(0)); }

QVec q_add(const QVec& a, const QVec& b) {
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVec q_sub(const QVec& a, const QVec& b) {
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVec q_scale(const Rat& c, const QVec& a) {
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

bool q_is_zero(const QVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Rat dot(const QVec& a, const ZVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * long(b[i]);
  return s;
}

long dot(const ZVec& a, const ZVec& b) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dotq(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

ZMat z_identity(int n) {
  ZMat m(n, ZVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ZMat z_mul(const ZMat& a, const ZMat& b) {
  size_t n = a.size(), k = b.size(), p = b[0].size();
  ZMat out(n, ZVec(p, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (size_t l = 0; l < p; ++l) out[i][l] += a[i][j] * b[j][l];
    }
  return out;
}

ZVec z_apply(const ZMat& m, const ZVec& v) {
  ZVec out(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

QVec z_apply(const ZMat& m, const QVec& v) {
  QVec out(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0) out[i] += Rat(m[i][j]) * v[j];
  return out;
}

ZMat z_transpose(const ZMat& m) {
  size_t n = m.size(), k = m[0].size();
  ZMat out(k, ZVec(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) out[j][i] = m[i][j];
  return out;
}

bool z_equal(const ZMat& a, const ZMat& b) { return a == b; }

namespace {

// Row-reduce in place; returns pivot column per row.
std::vector<int> row_echelon(QMat& m) {
  std::vector<int> pivots;
  size_t rows = m.size();
  if (rows == 0) return pivots;
  size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Rat inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(int(c));
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<QVec> solve_columns(const std::vector<QVec>& columns, const QVec& b) {
  size_t n = b.size(), k = columns.size();
  QMat aug(n, QVec(k + 1, Rat(0)));
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < n; ++i) aug[i][j] = columns[j][i];
  for (size_t i = 0; i < n; ++i) aug[i][k] = b[i];
  auto pivots = row_echelon(aug);
  QVec x(k, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (size_t(pivots[r]) == k) return std::nullopt;  // pivot in RHS: inconsistent
    x[pivots[r]] = aug[r][k];
  }
  return x;
}

ZMat z_inverse(const ZMat& m) {
  size_t n = m.size();
  QMat aug(n, QVec(2 * n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = Rat(m[i][j]);
    aug[i][n + i] = 1;
  }
  auto pivots = row_echelon(aug);
  require_internal(pivots.size() == n && pivots.back() == int(n) - 1,
                   "z_inverse: matrix is singular");
  ZMat inv(n, ZVec(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = to_long(aug[i][n + j]);
  return inv;
}

std::vector<QVec> nullspace(const QMat& rows) {
  if (rows.empty()) return {};
  QMat m = rows;
  size_t cols = m[0].size();
  auto pivots = row_echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    QVec v(cols, Rat(0));
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][c];
    basis.push_back(v);
  }
  return basis;
}

int rank_of(const QMat& rows) {
  if (rows.empty()) return 0;
  QMat m = rows;
  return int(row_echelon(m).size());
}

std::tuple<long, long, long> inertia(const QMat& s0) {
  QMat s = s0;
  size_t n = s.size();
  long p = 0, q = 0, z = 0;
  std::vector<bool> done(n, false);

  auto eliminate = [&](size_t k) {
    // symmetric congruence: clear row/column k against pivot s[k][k]
    QVec colk(n, Rat(0));
    for (size_t i = 0; i < n; ++i) colk[i] = s[i][k];
    Rat piv = s[k][k];
    for (size_t i = 0; i < n; ++i) {
      if (done[i] || i == k || colk[i] == 0) continue;
      Rat f = colk[i] / piv;
      for (size_t j = 0; j < n; ++j) {
        if (done[j] || j == k) continue;
        s[i][j] -= f * colk[j];
      }
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      s[i][k] = 0;
      s[k][i] = 0;
    }
  };

  for (;;) {
    // prefer a nonzero diagonal pivot
    size_t k = n;
    for (size_t i = 0; i < n; ++i)
      if (!done[i] && s[i][i] != 0) {
        k = i;
        break;
      }
    if (k < n) {
      eliminate(k);
      if (s[k][k] > 0)
        ++p;
      else
        ++q;
      done[k] = true;
      continue;
    }
    // all remaining diagonal entries are zero: find an off-diagonal entry
    size_t a = n, b = n;
    for (size_t i = 0; i < n && a == n; ++i) {
      if (done[i]) continue;
      for (size_t j = i + 1; j < n; ++j) {
        if (done[j]) continue;
        if (s[i][j] != 0) {
          a = i;
          b = j;
          break;
        }
      }
    }
    if (a == n) break;  // remaining block is zero
    // row/col a += row/col b turns the hyperbolic pair into +/- diagonal
    for (size_t j = 0; j < n; ++j)
      if (!done[j]) s[a][j] += s[b][j];
    for (size_t j = 0; j < n; ++j)
      if (!done[j]) s[j][a] += s[j][b];
    // now s[a][a] = 2*s0[a][b] != 0
    eliminate(a);
    if (s[a][a] > 0)
      ++p;
    else
      ++q;
    done[a] = true;
  }
  for (size_t i = 0; i < n; ++i)
    if (!done[i]) ++z;
  return {p, q, z};
}

bool integer_solvable(const std::vector<std::vector<Int>>& a0, const std::vector<Int>& b0) {
  // Smith reduction of [A | b]: row/column operations over Z on A, row
  // operations mirrored on b, column operations recorded implicitly (they
  // change variables, not solvability).
  auto a = a0;
  auto b = b0;
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  size_t r = 0, c = 0;
  while (r < rows && c < cols) {
    // find the entry of smallest nonzero absolute value in the remaining block
    size_t pi = rows, pj = cols;
    Int best = 0;
    for (size_t i = r; i < rows; ++i)
      for (size_t j = c; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        Int v = abs(a[i][j]);
        if (best == 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi == rows) break;
    std::swap(a[r], a[pi]);
    std::swap(b[r], b[pi]);
    for (auto& row : a) std::swap(row[c], row[pj]);
    bool dirty = false;
    for (size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Int f = a[i][c] / a[r][c];
      if (f != 0) {
        for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        b[i] -= f * b[r];
      }
      if (a[i][c] != 0) dirty = true;
    }
    for (size_t j = c + 1; j < cols; ++j) {
      if (a[r][j] == 0) continue;
      Int f = a[r][j] / a[r][c];
      if (f != 0)
        for (size_t i = r; i < rows; ++i) a[i][j] -= f * a[i][c];
      if (a[r][j] != 0) dirty = true;
    }
    if (dirty) continue;  // remainders left, re-pivot on a smaller entry
    ++r;
    ++c;
  }
  // a is now diagonal on the first r pivots; solvable iff each pivot divides
  // its RHS entry and the zero rows have zero RHS.
  for (size_t i = 0; i < rows; ++i) {
    if (i < r) {
      if (b[i] % a[i][i] != 0) return false;
    } else {
      if (b[i] != 0) return false;
    }
  }
  return true;
}

std::vector<Rat> char_poly(const QMat& m) {
  size_t n = m.size();
  // Faddeev-LeVerrier: p(x) = x^n + c_{n-1} x^{n-1} + ... + c_0
  QMat mk(n, QVec(n, Rat(0)));  // M_0 = 0
  std::vector<Rat> coeff(n + 1, Rat(0));
  coeff[n] = 1;
  QMat work = mk;
  for (size_t k = 1; k <= n; ++k) {
    // work = m * (mk + c I)
    Rat c = coeff[n - k + 1];  // previous coefficient enters the recursion
    QMat t = mk;
    for (size_t i = 0; i < n; ++i) t[i][i] += c;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Rat s = 0;
        for (size_t l = 0; l < n; ++l) s += m[i][l] * t[l][j];
        work[i][j] = s;
      }
    mk = work;
    Rat tr = 0;
    for (size_t i = 0; i < n; ++i) tr += mk[i][i];
    coeff[n - k] = -tr / long(k);
  }
  return coeff;  // coeff[i] multiplies x^i
}

namespace {

std::vector<Rat> poly_trim(std::vector<Rat> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::vector<Rat> poly_deriv(const std::vector<Rat>& p) {
  std::vector<Rat> d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * long(i));
  return poly_trim(d);
}

// remainder of a by b (b nonzero)
std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
  a = poly_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a = poly_trim(a);
  }
  return a;
}

Rat poly_eval_sign_at_neg_inf(const std::vector<Rat>& p) {
  if (p.empty()) return 0;
  Rat lead = p.back();
  return ((p.size() - 1) % 2 == 0) ? lead : -lead;
}

Rat poly_eval(const std::vector<Rat>& p, const Rat& x) {
  Rat v = 0;
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

int sign_changes(const std::vector<Rat>& vals) {
  int changes = 0;
  int prev = 0;
  for (const auto& v : vals) {
    int s = (v > 0) - (v < 0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

std::pair<int, int> sturm_nonpositive_real_roots(const std::vector<Rat>& p0) {
  // distinct roots in (-inf, 0] and distinct real roots overall; p0(0) != 0
  // is NOT required (zero roots are stripped first).
  auto p = poly_trim(p0);
  require_internal(!p.empty(), "sturm: zero polynomial");
  size_t zeros = 0;
  while (zeros < p.size() && p[zeros] == 0) ++zeros;
  bool zero_root = zeros > 0;
  if (zero_root) p.erase(p.begin(), p.begin() + zeros);
  if (p.size() <= 1) return {zero_root ? 1 : 0, zero_root ? 1 : 0};

  std::vector<std::vector<Rat>> chain;
  chain.push_back(p);
  auto d = poly_deriv(p);
  if (!d.empty()) chain.push_back(d);
  while (chain.back().size() > 1) {
    auto r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    chain.push_back(r);
  }
  std::vector<Rat> at_neg_inf, at_zero, at_pos_inf;
  for (const auto& q : chain) {
    at_neg_inf.push_back(poly_eval_sign_at_neg_inf(q));
    at_zero.push_back(poly_eval(q, Rat(0)));
    at_pos_inf.push_back(q.back());
  }
  int strictly_neg = sign_changes(at_neg_inf) - sign_changes(at_zero);
  int total = sign_changes(at_neg_inf) - sign_changes(at_pos_inf);
  return {strictly_neg + (zero_root ? 1 : 0), total + (zero_root ? 1 : 0)};
}

namespace {

// exact quotient a / b, remainder asserted zero
std::vector<Rat> poly_divexact(const std::vector<Rat>& a0, const std::vector<Rat>& b) {
  auto a = poly_trim(a0);
  std::vector<Rat> quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (a.size() >= b.size()) {
    Rat f = a.back() / b.back();
    size_t off = a.size() - b.size();
    quot[off] = f;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a = poly_trim(a);
    if (a.empty()) break;
  }
  require_internal(a.empty(), "poly_divexact: nonzero remainder");
  return poly_trim(quot);
}

}  // namespace

bool all_roots_real_nonpositive(std::vector<Rat> p) {
  p = poly_trim(p);
  if (p.size() <= 1) return true;
  // squarefree part q = p / gcd(p, p'): distinct roots, same root set
  auto a = p, b = poly_deriv(p);
  while (!b.empty()) {
    auto r = poly_rem(a, b);
    a = b;
    b = r;
  }
  std::vector<Rat> q = (a.size() <= 1) ? p : poly_divexact(p, a);
  auto [nonpos, total] = sturm_nonpositive_real_roots(q);
  int degree = int(q.size()) - 1;
  return nonpos == degree && total == degree;
}

}  // namespace sigform
