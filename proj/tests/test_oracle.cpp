#include <algorithm>

#include "sigform/oracle.hpp"
#include "sigform/signature.hpp"

#include "doctest.h"

using namespace sigform;

TEST_CASE("sl2 modules: standard matrices and string structure") {
  CartanMatrix a1 = {{2}};
  auto m = construct_irrep(a1, {1});
  CHECK(m.dimension == 2);
  QMat e = m.dense_e(0), f = m.dense_f(0), h = m.dense_h(0);
  CHECK(h[0][0] == 1);
  CHECK(h[1][1] == -1);
  CHECK(e[0][1] == 1);  // e f v = v
  CHECK(f[1][0] == 1);

  auto m4 = construct_irrep(a1, {4});
  CHECK(m4.dimension == 5);
  for (size_t w = 0; w < m4.weights.size(); ++w) CHECK(m4.mult[w] == 1);
}

TEST_CASE("A2 adjoint: dimension 8, zero weight space 2-dimensional") {
  CartanMatrix a2 = {{2, -1}, {-1, 2}};
  auto m = construct_irrep(a2, {1, 1});
  CHECK(m.dimension == 8);
  ZVec zero = {0, 0};
  REQUIRE(m.weight_index.count(zero));
  CHECK(m.mult[m.weight_index.at(zero)] == 2);
  // weight-space dimensions match Freudenthal exactly
  auto fr = freudenthal_multiplicities(m.pos, m.highest);
  CHECK(fr.size() == m.weights.size());
  for (size_t w = 0; w < m.weights.size(); ++w) CHECK(fr.at(m.weights[w]) == m.mult[w]);
}

TEST_CASE("A3 (1,0,1): dimension 15") {
  CartanMatrix a3 = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  auto m = construct_irrep(a3, {1, 0, 1});
  CHECK(m.dimension == 15);
}

TEST_CASE("construction respects the dimension cap") {
  CartanMatrix a2 = {{2, -1}, {-1, 2}};
  CHECK_THROWS_AS(construct_irrep(a2, {20, 20}, 400), ValidationError);
}

TEST_CASE("invariant forms on small modules") {
  CartanMatrix a1 = {{2}};
  // trivial module
  auto m0 = construct_irrep(a1, {0});
  auto g0 = invariant_symmetric_form(m0);
  CHECK(g0.p == 1);
  CHECK(g0.q == 0);
  // adjoint of sl2: inertia {2,1}
  auto m2 = construct_irrep(a1, {2});
  auto g2 = invariant_symmetric_form(m2);
  CHECK(g2.p + g2.q == 3);
  CHECK(g2.z == 0);
  long d = g2.p - g2.q;
  CHECK((d == 1 || d == -1));
  // odd string: the invariant bilinear form is antisymmetric
  auto m1 = construct_irrep(a1, {1});
  auto b1 = invariant_bilinear_form(m1);
  CHECK(!b1.zero);
  CHECK(!b1.symmetric);
  CHECK_THROWS_AS(invariant_symmetric_form(m1), ValidationError);
}

TEST_CASE("A2 adjoint Gram has |p - q| = 2 (inertia (5,3) up to sign)") {
  CartanMatrix a2 = {{2, -1}, {-1, 2}};
  auto m = construct_irrep(a2, {1, 1});
  auto g = invariant_symmetric_form(m);
  CHECK(g.p + g.q == 8);
  long d = g.p - g.q;
  CHECK((d == 2 || d == -2));
  // blockwise inertia agrees with dense elimination
  auto b = invariant_bilinear_form(m);
  auto dense = dense_form(m, b);
  auto [dp, dq, dz] = inertia(dense);
  CHECK(dp + dq == 8);
  CHECK(dz == 0);
  CHECK(((dp == g.p && dq == g.q) || (dp == g.q && dq == g.p)));
}

TEST_CASE("non-self-dual module has no invariant bilinear form") {
  CartanMatrix a2 = {{2, -1}, {-1, 2}};
  auto m = construct_irrep(a2, {1, 0});
  auto b = invariant_bilinear_form(m);
  CHECK(b.zero);
  CHECK_THROWS_AS(oracle_sig_split(a2, {1, 0}), ValidationError);
}

TEST_CASE("oracle_sig_split on strings and adjoints") {
  CartanMatrix a1 = {{2}};
  CHECK(oracle_sig_split(a1, {0}) == 1);
  for (long k = 1; k <= 8; ++k) CHECK(oracle_sig_split(a1, {k}) == (k % 2 == 0 ? 1 : 0));
  CartanMatrix a2 = {{2, -1}, {-1, 2}};
  CHECK(oracle_sig_split(a2, {1, 1}) == 2);  // n - 1 for SL(3,R)
  CartanMatrix a3 = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  CHECK(oracle_sig_split(a3, {1, 0, 1}) == 3);  // adjoint of SL(4,R)
}

TEST_CASE("oracle_sig_split agrees with the paper counterexample point") {
  // lambda = (1,1,-1,-1) on GL(4,R) = fundamental (0,2,0) on A3: Sig = 2
  CartanMatrix a3 = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  CHECK(oracle_sig_split(a3, {0, 2, 0}) == 2);
}

TEST_CASE("equal-rank oracle") {
  // compact form: x = 0, Sig = dim
  auto cpt = builtin_group("compact(A,2)");
  CHECK(oracle_sig_equal_rank(*cpt, {1, 1}) == 8);
  CHECK(oracle_sig_equal_rank(*cpt, {2, 1}) == 15);
  // SL(2,R) = Sp(2,R): alternating string sums
  auto sl2 = builtin_group("SL(2)");
  CHECK(oracle_sig_equal_rank(*sl2, {2}) == 1);
  CHECK(oracle_sig_equal_rank(*sl2, {3}) == 0);
  // Sp(4,R) adjoint: 2 = |dim s - dim k|
  auto sp4 = builtin_group("Sp(4)");
  CHECK(oracle_sig_equal_rank(*sp4, {2, 0}) == 2);
  // standard symplectic module: balanced
  CHECK(oracle_sig_equal_rank(*sp4, {1, 0}) == 0);
}

TEST_CASE("equal-rank oracle agrees with compute_signature on Sp(4,R) samples") {
  auto rf = builtin_group("Sp(4)");
  auto rd = restrict_datum(rf);
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 2; ++b) {
      ZVec lam = {a + b, b};  // dominant in e-coordinates
      QVec lamq = to_q(lam);
      Int dim = weyl_dimension(standard_positive_system(rf->datum), lamq);
      if (dim > 400) continue;
      auto [dom, w] = restricted_dominant(rd, lamq);
      HighestWeightSpec g;
      g.lambda_c = dom;
      g.nu_real = q_zero(2);
      g.nu_imag = q_zero(2);
      auto res = compute_signature(*rf, rd, g);
      CHECK(res.sig == oracle_sig_equal_rank(*rf, lam));
    }
}

TEST_CASE("kernel_signature") {
  // T = 0: returns (P, Q)
  QMat s = {{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}};
  QMat t0 = {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}};
  auto [p, q] = kernel_signature(t0, s);
  CHECK(p == 1);
  CHECK(q == 1);
  // T with T^2 = -1: empty kernel, P - Q = 0 forced
  QMat t = {{Rat(0), Rat(1)}, {Rat(-1), Rat(0)}};
  auto [p2, q2] = kernel_signature(t, s);
  CHECK(p2 == 0);
  CHECK(q2 == 0);
  // block example: previous plus a zero block on a (1,0) third direction
  QMat s3 = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(-1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
  QMat t3 = {{Rat(0), Rat(1), Rat(0)}, {Rat(-1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)}};
  auto [p3, q3] = kernel_signature(t3, s3);
  CHECK(p3 == 1);
  CHECK(q3 == 0);
  // precondition failures
  QMat bad_t = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};  // T^2 positive
  CHECK_THROWS_AS(kernel_signature(bad_t, s), ValidationError);
}

TEST_CASE("kernel_signature on conjugated canonical blocks") {
  // canonical: S = diag(1,1,-1,-1,1), T = imaginary-pair block + zero
  // then conjugate by an explicit unimodular U: T' = U^-1 T U, S' = U^T S U
  int n = 5;
  QMat s = QMat(n, QVec(n, Rat(0)));
  QVec diag = {Rat(1), Rat(1), Rat(-1), Rat(-1), Rat(1)};
  for (int i = 0; i < n; ++i) s[i][i] = diag[i];
  QMat t = QMat(n, QVec(n, Rat(0)));
  // pair directions 0 (plus) and 2 (minus) into an imaginary rotation: across
  // a (+,-) pair the S-self-adjoint choice is T = [[0,1],[-1,0]], T^2 = -1
  t[0][2] = 1;
  t[2][0] = -1;
  // expected: ker T spanned by e1, e3, e4: restricted S = diag(1,-1,1)
  auto [p0, q0] = kernel_signature(t, s);
  CHECK(p0 == 2);
  CHECK(q0 == 1);
  long u[5][5] = {{1, 0, 1, 0, 0},
                  {2, 1, 0, 0, 1},
                  {0, 0, 1, 1, 0},
                  {0, 0, 0, 1, 3},
                  {0, 0, 0, 0, 1}};
  QMat tp(n, QVec(n, Rat(0))), sp(n, QVec(n, Rat(0)));
  // U^{-1} T U and U^T S U
  ZMat uz(n, ZVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) uz[i][j] = u[i][j];
  ZMat uinv = z_inverse(uz);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat acc_t = 0, acc_s = 0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          acc_t += Rat(uinv[i][k]) * t[k][l] * Rat(u[l][j]);
          acc_s += Rat(u[k][i]) * s[k][l] * Rat(u[l][j]);
        }
      tp[i][j] = acc_t;
      sp[i][j] = acc_s;
    }
  // T' is S'-self-adjoint: S'T' = U^T S T U = U^T T^T S U = T'^T S'
  auto [p1, q1] = kernel_signature(tp, sp);
  CHECK(p1 - q1 == 1);  // P - Q preserved under congruence
}
