// Acceptance suite: one line per criterion, exact checks, nonzero exit on any
// failure. Each criterion prints PASS/FAIL, the case count, and wall time.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <vector>

#include "sigform/jsonio.hpp"
#include "sigform/verify.hpp"

using namespace sigform;

namespace {

struct Outcome {
  int id;
  std::string title;
  bool pass;
  long cases;
  double seconds;
  std::vector<std::string> notes;
};

std::vector<Outcome> outcomes;

void run(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  o.id = id;
  o.title = title;
  o.pass = true;
  o.cases = 0;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.notes.push_back(std::string("exception: ") + e.what());
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "criterion " << std::setw(2) << o.id << ": " << (o.pass ? "PASS" : "FAIL") << "  ("
            << std::setw(5) << o.cases << " checks, " << std::fixed << std::setprecision(2)
            << std::setw(7) << o.seconds << "s)  " << o.title << "\n";
  for (const auto& n : o.notes) std::cout << "      - " << n << "\n";
  outcomes.push_back(o);
}

// self-dual decreasing lambda with |lambda_i| <= bound, for n = 2..nmax
std::vector<std::pair<int, ZVec>> gl_selfdual_sweep(int nmax, long bound) {
  std::vector<std::pair<int, ZVec>> out;
  for (int n = 2; n <= nmax; ++n) {
    int m = n / 2;
    std::vector<long> mu(m, 0);
    std::function<void(int, long)> rec = [&](int pos, long hi) {
      if (pos == m) {
        ZVec lam(n, 0);
        for (int j = 0; j < m; ++j) {
          lam[j] = mu[j];
          lam[n - 1 - j] = -mu[j];
        }
        out.push_back({n, lam});
        return;
      }
      for (long v = hi; v >= 0; --v) {
        mu[pos] = v;
        rec(pos + 1, v);
      }
    };
    rec(0, bound);
  }
  return out;
}

struct GlCache {
  std::map<int, RealFormPtr> rf;
  std::map<int, RestrictedDatum> rd;
  SignatureResult sig(int n, const ZVec& lam) {
    if (!rf.count(n)) {
      rf[n] = builtin_group("GL(" + std::to_string(n) + ")");
      rd.emplace(n, restrict_datum(rf[n]));
    }
    return compute_signature(*rf[n], rd.at(n), gl_split_to_fundamental(n, lam));
  }
};

std::string lam_str(const ZVec& lam) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < lam.size(); ++i) os << (i ? "," : "") << lam[i];
  os << ")";
  return os.str();
}

}  // namespace

int main() {
  std::cout << "acceptance suite: exact arithmetic throughout; every comparison is == on\n"
               "integers or rationals (tolerance 0)\n\n";
  GlCache gl;

  run(1, "GL closed form == general theorem, n = 2..6, self-dual |lambda_i| <= 3",
      [&](Outcome& o) {
        for (const auto& [n, lam] : gl_selfdual_sweep(6, 3)) {
          auto closed = gl_closed_form(n, lam);
          auto full = gl.sig(n, lam);
          ++o.cases;
          if (!closed || *closed != full.sig) {
            o.pass = false;
            o.notes.push_back("mismatch at n=" + std::to_string(n) + " lambda=" + lam_str(lam));
          }
        }
      });

  run(2, "adjoint values Sig(pi(1,0,...,0,-1)) = n-1 for n = 2..8", [&](Outcome& o) {
    for (int n = 2; n <= 8; ++n) {
      ZVec lam(n, 0);
      lam[0] = 1;
      lam[n - 1] = -1;
      auto res = gl.sig(n, lam);
      ++o.cases;
      if (res.sig != n - 1) {
        o.pass = false;
        o.notes.push_back("n=" + std::to_string(n) + ": Sig = " + res.sig.get_str());
      }
    }
  });

  run(3, "ratio identity dim = Sig^2 prod (2 lam_i + n - 2i + 1)/(n - 2i + 1), exact",
      [&](Outcome& o) {
        for (const auto& [n, lam] : gl_selfdual_sweep(6, 3)) {
          auto [lhs, rhs] = ratio_identity(n, lam);
          ++o.cases;
          if (lhs != rhs) {
            o.pass = false;
            o.notes.push_back("n=" + std::to_string(n) + " lambda=" + lam_str(lam) + ": " +
                              lhs.get_str() + " != " + rhs.get_str());
          }
        }
      });

  run(4, "indefiniteness bounds: (p-q)^2 <= p+q and Sig >= n-1 (lambda != 0) on the sweep",
      [&](Outcome& o) {
        for (const auto& [n, lam] : gl_selfdual_sweep(6, 3)) {
          auto res = gl.sig(n, lam);
          bool zero = true;
          for (long x : lam)
            if (x != 0) zero = false;
          ++o.cases;
          if ((res.p - res.q) * (res.p - res.q) > res.p + res.q) {
            o.pass = false;
            o.notes.push_back("(p-q)^2 > p+q at n=" + std::to_string(n) + " lambda=" +
                              lam_str(lam));
          }
          if (!zero && res.sig < n - 1) {
            o.pass = false;
            o.notes.push_back("Sig >= n-1 fails at n=" + std::to_string(n) + " lambda=" +
                              lam_str(lam) + ": Sig = " + res.sig.get_str() +
                              " (paper erratum: confirmed independently by the Shapovalov "
                              "oracle, inertia (11,9) on the 20-dim module; see the decisions "
                              "ledger)");
          }
        }
      });

  run(5, "split oracle == formula on A1, A2, A3, C2, all self-dual lambda with dim <= 400",
      [&](Outcome& o) {
        for (auto [fam, rank] : std::vector<std::pair<char, int>>{
                 {'A', 1}, {'A', 2}, {'A', 3}, {'C', 2}}) {
          auto rep = split_agreement_suite(fam, rank, 400);
          o.cases += long(rep.cases.size());
          for (const auto& c : rep.cases)
            if (!c.agree()) {
              o.pass = false;
              o.notes.push_back(rep.suite + " disagrees at " + lam_str(c.lam_fund) + ": oracle " +
                                c.oracle_sig.get_str() + ", formula " + c.formula_sig.get_str());
            }
          std::ostringstream t;
          t << rep.suite << ": " << rep.cases.size() << " weights, " << std::fixed
            << std::setprecision(2) << rep.seconds << "s";
          o.notes.push_back(t.str());
        }
      });

  run(6, "equal-rank oracle == formula on Sp(4,R) and Sp(6,R), all lambda with dim <= 400",
      [&](Outcome& o) {
        for (int two_n : {4, 6}) {
          auto rep = equal_rank_agreement_suite(two_n, 400);
          o.cases += long(rep.cases.size());
          for (const auto& c : rep.cases)
            if (!c.agree()) {
              o.pass = false;
              o.notes.push_back(rep.suite + " disagrees at " + lam_str(c.lam_fund));
            }
          std::ostringstream t;
          t << rep.suite << ": " << rep.cases.size() << " weights, " << std::fixed
            << std::setprecision(2) << rep.seconds << "s";
          o.notes.push_back(t.str());
        }
      });

  run(7, "table reproduction: Table 3 rows, semidirect orders, and the diagram folds",
      [&](Outcome& o) {
        struct Row {
          RealFormPtr rf;
          const char* res;
          const char* cplx;
          const char* imag;
          const char* sc;
          const char* si;
          long oc, osi, osc, oi;
        };
        auto fact = [](long n) {
          long f = 1;
          for (long i = 2; i <= n; ++i) f *= i;
          return f;
        };
        std::vector<Row> rows;
        for (int n = 2; n <= 4; ++n)
          rows.push_back({builtin_group("SL(" + std::to_string(2 * n) + ")"),
                          ("C" + std::to_string(n)).c_str(), nullptr, nullptr, nullptr, nullptr,
                          0, 0, 0, 0});
        // (re-fill with owned strings below; the quick c_str above is unsafe)
        rows.clear();
        struct RowS {
          RealFormPtr rf;
          std::string res, cplx, imag, sc, si;
          long oc, osi, osc, oi;
        };
        std::vector<RowS> rs;
        for (int n = 2; n <= 4; ++n)
          rs.push_back({builtin_group("SL(" + std::to_string(2 * n) + ")"),
                        "C" + std::to_string(n), "D" + std::to_string(n),
                        "A1^" + std::to_string(n), "A" + std::to_string(n - 1), "A1",
                        fact(n) * (1L << (n - 1)), 2, fact(n), 1L << n});
        for (int n = 1; n <= 3; ++n)
          rs.push_back({builtin_group("SL(" + std::to_string(2 * n + 1) + ")"),
                        "BC" + std::to_string(n),
                        n == 1 ? "A1" : "B" + std::to_string(n),
                        n == 1 ? "A1" : "A1^" + std::to_string(n),
                        n == 1 ? "0" : "A" + std::to_string(n - 1), "0", fact(n) * (1L << n), 1,
                        fact(n), 1L << n});
        for (int n = 2; n <= 4; ++n)
          rs.push_back({lorentz_form(n + 1), "B" + std::to_string(n),
                        "A1^" + std::to_string(n), "D" + std::to_string(n), "A1",
                        n == 1 ? "0" : "A" + std::to_string(n - 1), 1L << n, fact(n), 2,
                        fact(n) * (1L << (n - 1))});
        rs.push_back({builtin_group("E6split"), "F4", "D4", "D4", "A2", "A2", 192, 6, 6, 192});
        for (const auto& row : rs) {
          auto rd = restrict_datum(row.rf);
          auto t = restricted_type(rd);
          auto w = build_w_theta(rd);
          auto sd = semidirect_decompositions(rd, w);
          ++o.cases;
          bool ok = t.res.same_as(CartanType::parse(row.res)) &&
                    t.cplx.same_as(CartanType::parse(row.cplx)) &&
                    t.imag.same_as(CartanType::parse(row.imag)) &&
                    t.sing_cplx.same_as(CartanType::parse(row.sc)) &&
                    t.sing_imag.same_as(CartanType::parse(row.si)) &&
                    sd.order_cplx == row.oc && sd.order_sing_imag == row.osi &&
                    sd.order_sing_cplx == row.osc && sd.order_imag == row.oi;
          if (!ok) {
            o.pass = false;
            o.notes.push_back("row " + row.rf->name + " computed " + t.res.to_string() + "/" +
                              t.cplx.to_string() + "/" + t.imag.to_string() + "/" +
                              t.sing_cplx.to_string() + "/" + t.sing_imag.to_string());
          }
        }
        // folds: SL(5,R) (Table 1) and split E6 (Table 2)
        {
          auto fd = fold_diagram(restrict_datum(builtin_group("SL(5)")));
          int joined = 0, empty = 0;
          for (const auto& v : fd.vertices) {
            if (v.self_joined) ++joined;
            if (!v.imaginary) ++empty;
          }
          ++o.cases;
          if (!(fd.vertices.size() == 2 && joined == 1 && empty == 2 && fd.edges.size() == 1 &&
                fd.edges[0].pairing_from_to * fd.edges[0].pairing_to_from == 2)) {
            o.pass = false;
            o.notes.push_back("SL(5,R) fold does not match Table 1");
          }
        }
        {
          auto fd = fold_diagram(restrict_datum(builtin_group("E6split")));
          int filled = 0, doubles = 0;
          for (const auto& v : fd.vertices)
            if (v.imaginary) ++filled;
          for (const auto& e : fd.edges)
            if (e.pairing_from_to * e.pairing_to_from == 2) ++doubles;
          ++o.cases;
          if (!(fd.vertices.size() == 4 && filled == 2 && fd.edges.size() == 3 && doubles == 1)) {
            o.pass = false;
            o.notes.push_back("E6 fold does not match Table 2");
          }
        }
      });

  run(8, "component groups: trivial (simply connected lattices), Z/2 (PSp), Klein four (PSO(4,4))",
      [&](Outcome& o) {
        auto expect = [&](const char* g, long order) {
          ++o.cases;
          long got = component_group(*builtin_group(g)).order();
          if (got != order) {
            o.pass = false;
            o.notes.push_back(std::string(g) + ": order " + std::to_string(got) + " != " +
                              std::to_string(order));
          }
        };
        expect("SL(2)", 1);
        expect("Sp(4)", 1);
        expect("Sp(6)", 1);
        expect("SL(4)", 1);
        expect("PSp(4)", 2);
        expect("PSp(6)", 2);
        expect("PSO(4,4)", 4);
      });

  run(9, "degree probe: differences of Sig(k lambda0) vanish exactly at order m^2+m(eps-1)+1",
      [&](Outcome& o) {
        struct Probe {
          int n;
          ZVec lam0;
        };
        for (const auto& pr : {Probe{2, {1, -1}}, Probe{3, {1, 0, -1}}, Probe{4, {2, 1, -1, -2}}}) {
          int deg = (pr.n / 2) * (pr.n / 2) + (pr.n / 2) * (pr.n % 2 - 1);
          auto probe = sig_degree_probe(pr.n, pr.lam0, deg + 3);
          ++o.cases;
          if (probe.vanish_order != deg + 1) {
            o.pass = false;
            o.notes.push_back("n=" + std::to_string(pr.n) + ": vanish order " +
                              std::to_string(probe.vanish_order) + " != " +
                              std::to_string(deg + 1));
          }
          // the lower difference must NOT vanish identically (degree is exact)
          if (deg >= 0 && probe.diffs.size() > size_t(deg)) {
            bool lower_zero = true;
            for (const auto& x : probe.diffs[deg]) lower_zero = lower_zero && x == 0;
            ++o.cases;
            if (lower_zero && deg > 0) {
              o.pass = false;
              o.notes.push_back("n=" + std::to_string(pr.n) + ": degree lower than expected");
            }
          }
        }
      });

  run(10, "property suites: datum axioms, Weyl/Freudenthal, homogeneity, W^1 partition, eps, "
          "kernel-signature",
      [&](Outcome& o) {
        // root-datum axioms: construction validates; exercise the builders
        for (const char* label :
             {"GL(4)", "GL(5)", "SL(6)", "Sp(6)", "PSp(6)", "SO(4,4)", "PSO(4,4)", "E6split",
              "compact(G,2)", "complex(C,2)"}) {
          builtin_group(label);
          ++o.cases;
        }
        for (char fam : {'A', 'B', 'C', 'D', 'F', 'G'}) {
          int rank = fam == 'F' ? 4 : (fam == 'G' ? 2 : (fam == 'D' ? 4 : 3));
          build_root_system(fam, rank)->validate();
          ++o.cases;
        }
        // Weyl dimension == sum of Freudenthal multiplicities, dim <= 1000, rank <= 4
        for (auto [fam, rank] : std::vector<std::pair<char, int>>{
                 {'A', 1}, {'A', 2}, {'C', 2}, {'A', 3}, {'B', 3}, {'D', 4}}) {
          auto pos = standard_positive_system(build_root_system(fam, rank));
          std::vector<long> cur(rank, 0);
          std::function<void(int)> rec = [&](int i) {
            if (i == rank) return;
            for (long v = 0;; ++v) {
              cur[i] = v;
              QVec lam(rank);
              for (int k = 0; k < rank; ++k) lam[k] = Rat(cur[k]);
              if (weyl_dimension(pos, lam) > 1000) break;
              if (i == rank - 1) {
                ZVec lamz(cur.begin(), cur.end());
                auto mult = freudenthal_multiplicities(pos, lamz);
                Int total = 0;
                for (const auto& [mu, m] : mult) total += m;
                ++o.cases;
                if (total != weyl_dimension(pos, lam)) {
                  o.pass = false;
                  o.notes.push_back(std::string(1, fam) + std::to_string(rank) +
                                    " Freudenthal total mismatch at " + lam_str(lamz));
                }
              } else {
                rec(i + 1);
              }
            }
            cur[i] = 0;
          };
          rec(0);
        }
        // homogeneity: dim(k psi + (k-1) rho) = k^{|R+|} dim(psi), k = 1..4
        for (auto [fam, rank] : std::vector<std::pair<char, int>>{
                 {'A', 2}, {'A', 3}, {'A', 4}, {'C', 2}, {'C', 3}, {'B', 4}, {'D', 4}}) {
          auto pos = standard_positive_system(build_root_system(fam, rank));
          QVec psi(rank, Rat(1));
          Int base = weyl_dimension(pos, psi);
          for (long k = 1; k <= 4; ++k) {
            QVec scaled(rank);
            for (int i = 0; i < rank; ++i) scaled[i] = Rat(k) * psi[i] + Rat(k - 1) * pos.rho[i];
            Int expect = base;
            for (size_t j = 0; j < pos.positive.size(); ++j) expect *= k;
            ++o.cases;
            if (weyl_dimension(pos, scaled) != expect) {
              o.pass = false;
              o.notes.push_back("homogeneity fails on " + std::string(1, fam) +
                                std::to_string(rank));
            }
          }
        }
        // W^1 coset partition + eps normalization/parity on a group sample
        for (const char* label : {"GL(4)", "GL(5)", "GL(6)", "Sp(4)", "Sp(6)", "PSp(4)",
                                  "SO(4,4)", "SL(3)", "SL(4)"}) {
          auto rf = builtin_group(label);
          auto rd = restrict_datum(rf);
          auto w = build_w_theta(rd);
          auto w1 = enumerate_w1(rd, w);  // partition verified inside
          ++o.cases;
          // eps on a few dominant lattice weights
          int tested = 0;
          for (long a = 0; a <= 2 && tested < 3; ++a)
            for (long b = 0; b <= 2 && tested < 3; ++b) {
              QVec seed(rf->rank(), Rat(0));
              seed[0] = Rat(a);
              if (rf->rank() > 1) seed[1] = Rat(b);
              auto [dom, wx] = restricted_dominant(rd, rf->project_fixed(seed));
              if (!in_tc_lattice(*rf, dom) || !is_weakly_integral(*rf, dom)) continue;
              ++tested;
              for (int e : w1) {
                int v = epsilon(rd, w, dom, e);
                ++o.cases;
                if (v * v != 1 || (w.elements[e].is_identity() && v != 1)) {
                  o.pass = false;
                  o.notes.push_back(std::string("eps fails normalization on ") + label);
                }
              }
            }
        }
        // kernel-signature instances: canonical blocks conjugated by explicit
        // unimodular matrices
        {
          QMat s = {{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}};
          QMat t = {{Rat(0), Rat(1)}, {Rat(-1), Rat(0)}};
          auto [p, q] = kernel_signature(t, s);
          ++o.cases;
          if (p != 0 || q != 0) {
            o.pass = false;
            o.notes.push_back("kernel_signature canonical 2x2 failed");
          }
          QMat s3 = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(-1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
          QMat t3 = {{Rat(0), Rat(1), Rat(0)}, {Rat(-1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)}};
          auto [p3, q3] = kernel_signature(t3, s3);
          ++o.cases;
          if (p3 != 1 || q3 != 0) {
            o.pass = false;
            o.notes.push_back("kernel_signature block example failed");
          }
          // conjugated instance
          long u[3][3] = {{1, 2, 0}, {0, 1, 1}, {0, 0, 1}};
          ZMat uz(3, ZVec(3, 0));
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) uz[i][j] = u[i][j];
          ZMat uinv = z_inverse(uz);
          QMat tp(3, QVec(3, Rat(0))), sp(3, QVec(3, Rat(0)));
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
              for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                  tp[i][j] += Rat(uinv[i][k]) * t3[k][l] * Rat(u[l][j]);
                  sp[i][j] += Rat(u[k][i]) * s3[k][l] * Rat(u[l][j]);
                }
            }
          auto [p4, q4] = kernel_signature(tp, sp);
          ++o.cases;
          if (p4 - q4 != 1) {
            o.pass = false;
            o.notes.push_back("kernel_signature conjugated instance failed");
          }
        }
      });

  bool all = true;
  long fails = 0;
  for (const auto& o : outcomes) {
    all = all && o.pass;
    if (!o.pass) ++fails;
  }
  std::cout << "\n" << (outcomes.size() - fails) << "/" << outcomes.size()
            << " criteria passed\n";
  if (!all)
    std::cout << "failing criteria are reported above with the exact offending cases;\n"
                 "see the repository notes for the analysis of known paper errata\n";
  return all ? 0 : 1;
}
