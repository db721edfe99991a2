#include "sigform/linalg.hpp"

#include "doctest.h"

using namespace sigform;

TEST_CASE("inertia of diagonal forms") {
  QMat s = {{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}};
  auto [p, q, z] = inertia(s);
  CHECK(p == 1);
  CHECK(q == 1);
  CHECK(z == 0);

  QMat id3(3, QVec(3, Rat(0)));
  for (int i = 0; i < 3; ++i) id3[i][i] = 1;
  auto [p3, q3, z3] = inertia(id3);
  CHECK(p3 == 3);
  CHECK(q3 == 0);
  CHECK(z3 == 0);
}

TEST_CASE("inertia handles zero diagonal via hyperbolic pairs") {
  // [[0,1],[1,0]] has eigenvalues +-1
  QMat s = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  auto [p, q, z] = inertia(s);
  CHECK(p == 1);
  CHECK(q == 1);
  CHECK(z == 0);

  // singular block
  QMat s2 = {{Rat(0), Rat(0), Rat(2)}, {Rat(0), Rat(0), Rat(0)}, {Rat(2), Rat(0), Rat(5)}};
  auto [p2, q2, z2] = inertia(s2);
  CHECK(p2 == 1);
  CHECK(q2 == 1);
  CHECK(z2 == 1);
}

TEST_CASE("inertia is congruence invariant on a random-ish conjugate") {
  // M^T diag(1,1,-1) M for an explicit unimodular M
  QMat d = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(-1)}};
  long m[3][3] = {{1, 2, 0}, {0, 1, 3}, {1, 0, 1}};
  QMat s(3, QVec(3, Rat(0)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rat acc = 0;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) acc += Rat(m[k][i]) * d[k][l] * Rat(m[l][j]);
      s[i][j] = acc;
    }
  auto [p, q, z] = inertia(s);
  CHECK(p == 2);
  CHECK(q == 1);
  CHECK(z == 0);
}

TEST_CASE("solve_columns and nullspace") {
  std::vector<QVec> cols = {{Rat(1), Rat(0)}, {Rat(1), Rat(1)}};
  auto x = solve_columns(cols, {Rat(3), Rat(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 2);

  auto none = solve_columns({{Rat(1), Rat(0)}}, {Rat(0), Rat(1)});
  CHECK(!none.has_value());

  QMat rows = {{Rat(1), Rat(1), Rat(0)}};
  auto ns = nullspace(rows);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(v[0] + v[1] == 0);
}

TEST_CASE("integer solvability via Smith reduction") {
  // 2x = 3 has no integer solution, 2x = 4 does
  CHECK(!integer_solvable({{Int(2)}}, {Int(3)}));
  CHECK(integer_solvable({{Int(2)}}, {Int(4)}));
  // x + y = 1, x - y = 1 -> x = 1, y = 0
  CHECK(integer_solvable({{Int(1), Int(1)}, {Int(1), Int(-1)}}, {Int(1), Int(1)}));
  // x + y = 1, x + y = 2 inconsistent
  CHECK(!integer_solvable({{Int(1), Int(1)}, {Int(1), Int(1)}}, {Int(1), Int(2)}));
  // 2x + 4y = 2 solvable, = 1 not
  CHECK(integer_solvable({{Int(2), Int(4)}}, {Int(2)}));
  CHECK(!integer_solvable({{Int(2), Int(4)}}, {Int(1)}));
}

TEST_CASE("char_poly and nonpositive-spectrum test") {
  // T = [[0,1],[-1,0]]: T^2 = -I, char(T^2) = (x+1)^2
  QMat t2 = {{Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}};
  auto p = char_poly(t2);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == 1);
  CHECK(p[1] == 2);
  CHECK(p[2] == 1);
  CHECK(all_roots_real_nonpositive(p));

  QMat pos = {{Rat(1)}};
  CHECK(!all_roots_real_nonpositive(char_poly(pos)));

  // mixed spectrum {0, -2}
  QMat mix = {{Rat(0), Rat(0)}, {Rat(0), Rat(-2)}};
  CHECK(all_roots_real_nonpositive(char_poly(mix)));

  // complex spectrum: rotation matrix itself has char x^2 + 1 -> roots +-i
  std::vector<Rat> rot = {Rat(1), Rat(0), Rat(1)};
  CHECK(!all_roots_real_nonpositive(rot));
}
