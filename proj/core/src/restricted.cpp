#include "sigform/restricted.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sigform {

int RestrictedDatum::index_of_value(const QVec& v) const {
  auto cmp = [](const RestrictedRoot& r, const QVec& v) { return r.value < v; };
  auto it = std::lower_bound(roots.begin(), roots.end(), v, cmp);
  if (it != roots.end() && it->value == v) return int(it - roots.begin());
  return -1;
}

bool RestrictedDatum::is_positive(int i) const {
  return std::binary_search(positive.begin(), positive.end(), i);
}

ZMat RestrictedDatum::reflection_matrix(int i) const {
  const RootDatum& d = *rf->datum;
  const RestrictedRoot& r = roots[i];
  int a = r.sources.front();
  switch (r.rcase) {
    case ResCase::Imaginary:
      return d.reflection(a);
    case ResCase::ComplexNonsum: {
      int ta = d.root_index(z_apply(rf->theta, d.roots[a]));
      return z_mul(d.reflection(a), d.reflection(ta));
    }
    case ResCase::ComplexSum: {
      int ta = d.root_index(z_apply(rf->theta, d.roots[a]));
      ZVec sum(d.rank);
      for (int k = 0; k < d.rank; ++k) sum[k] = d.roots[a][k] + d.roots[ta][k];
      int si = d.root_index(sum);
      require_internal(si >= 0, "ComplexSum restricted root without ambient sum root");
      return d.reflection(si);
    }
  }
  throw InternalError("unreachable");
}

long RestrictedDatum::dirac_index_r() const {
  const RootDatum& d = *rf->datum;
  long complex_orbits = 0, ncpt_imag = 0;
  std::set<int> seen;
  for (int i : ambient_positive) {
    if (seen.count(i)) continue;
    int ti = d.root_index(z_apply(rf->theta, d.roots[i]));
    if (ti == i) {
      if (rf->noncompact.at(i)) ++ncpt_imag;
      seen.insert(i);
    } else {
      ++complex_orbits;
      seen.insert(i);
      seen.insert(ti);
    }
  }
  long r = complex_orbits + ncpt_imag;
  // cross-check: dim s = 2r + ell  (ell = dim A_c)
  long dim_s = rf->ell();
  for (size_t i = 0; i < d.roots.size(); ++i) {
    int ti = d.root_index(z_apply(rf->theta, d.roots[i]));
    if (ti == int(i)) {
      if (rf->noncompact.at(int(i))) ++dim_s;
    } else {
      // each complex pair {a, theta a} contributes one dimension to s
      if (ti > int(i)) ++dim_s;
    }
  }
  require_internal(dim_s == 2 * r + rf->ell(), "dim s != 2r + ell");
  return r;
}

namespace {

// positivity by lexicographic comparison of rational vectors
bool lex_positive(const QVec& v) {
  for (const auto& x : v) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

std::vector<int> find_restricted_simples(const std::vector<RestrictedRoot>& roots,
                                         const std::vector<int>& positive) {
  std::set<QVec> pos_values;
  for (int i : positive) pos_values.insert(roots[i].value);
  std::vector<int> simples;
  for (int i : positive) {
    bool decomposable = false;
    for (int j : positive) {
      QVec diff = q_sub(roots[i].value, roots[j].value);
      if (q_is_zero(diff)) continue;
      if (pos_values.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples.push_back(i);
  }
  return simples;
}

}  // namespace

RestrictedDatum restrict_datum(RealFormPtr rf) {
  const RootDatum& d = *rf->datum;
  RestrictedDatum rd;
  rd.rf = rf;

  // 1. restrict every root and merge equal values
  std::map<QVec, RestrictedRoot> by_value;
  for (size_t i = 0; i < d.roots.size(); ++i) {
    ZVec ta = z_apply(rf->theta, d.roots[i]);
    int ti = d.root_index(ta);
    QVec value(d.rank);
    for (int k = 0; k < d.rank; ++k) value[k] = Rat(d.roots[i][k] + ta[k]) / 2;
    RestrictedRoot entry;
    entry.value = value;
    if (ti == int(i)) {
      entry.rcase = ResCase::Imaginary;
      entry.coroot = d.coroots[i];
      entry.noncompact = rf->noncompact.at(int(i));
    } else {
      ZVec sum(d.rank);
      for (int k = 0; k < d.rank; ++k) sum[k] = d.roots[i][k] + ta[k];
      bool sum_is_root = d.is_root(sum);
      entry.rcase = sum_is_root ? ResCase::ComplexSum : ResCase::ComplexNonsum;
      ZVec co(d.rank);
      for (int k = 0; k < d.rank; ++k)
        co[k] = (d.coroots[i][k] + d.coroots[ti][k]) * (sum_is_root ? 2 : 1);
      entry.coroot = co;
    }
    entry.sources = {int(i)};
    auto it = by_value.find(value);
    if (it == by_value.end()) {
      by_value.emplace(value, std::move(entry));
    } else {
      require_internal(it->second.rcase == entry.rcase && it->second.coroot == entry.coroot,
                       "restriction merge conflict: incompatible case or coroot");
      it->second.sources.push_back(int(i));
    }
  }
  for (auto& [v, r] : by_value) {
    std::sort(r.sources.begin(), r.sources.end());
    rd.roots.push_back(std::move(r));
  }
  std::sort(rd.roots.begin(), rd.roots.end(),
            [](const RestrictedRoot& a, const RestrictedRoot& b) { return a.value < b.value; });

  int nres = int(rd.roots.size());

  // datum axioms: <v, v^vee> = 2, integral cross pairings
  for (const auto& r : rd.roots) {
    require_internal(dot(r.value, r.coroot) == 2, "restricted root datum axiom <v,v^vee> != 2");
    for (const auto& s : rd.roots)
      require_internal(is_integer(dot(r.value, s.coroot)),
                       "restricted root datum axiom: non-integral pairing");
  }
  // reflections permute the restricted roots (value-level check)
  for (int i = 0; i < nres; ++i) {
    for (int j = 0; j < nres; ++j) {
      Rat p = dot(rd.roots[j].value, rd.roots[i].coroot);
      QVec image = q_sub(rd.roots[j].value, q_scale(p, rd.roots[i].value));
      require_internal(rd.index_of_value(image) >= 0,
                       "restricted root datum axiom: reflection closure fails");
    }
  }

  // non-reduced roots arise exactly from the ComplexSum case, and case-3
  // doubles are noncompact imaginary
  for (int i = 0; i < nres; ++i) {
    QVec twice = q_scale(Rat(2), rd.roots[i].value);
    int dbl = rd.index_of_value(twice);
    if (rd.roots[i].rcase == ResCase::ComplexSum) {
      require_internal(dbl >= 0, "ComplexSum root without its double");
      require_internal(rd.roots[dbl].imaginary() && rd.roots[dbl].noncompact,
                       "double of a ComplexSum root must be noncompact imaginary");
    } else {
      require_internal(dbl < 0, "unexpected non-reduced pair");
    }
  }

  // 2. K datum (complex restrictions and compact imaginary roots)
  for (int i = 0; i < nres; ++i)
    if (rd.roots[i].in_K()) rd.k_roots.push_back(i);

  // 3. deterministic K-positive choice by lexicographic value
  std::vector<int> k_positive;
  for (int i : rd.k_roots)
    if (lex_positive(rd.roots[i].value)) k_positive.push_back(i);
  rd.two_rho_k = q_zero(d.rank);
  for (int i : k_positive) rd.two_rho_k = q_add(rd.two_rho_k, rd.roots[i].value);

  // 4. full positivity: invariant-form key against 2 rho_K first (this makes
  // 2 rho_K dominant by construction), lexicographic tiebreak after
  auto bform = [&](const QVec& x, const QVec& y) {
    Rat s = 0;
    for (const auto& r : rd.roots) s += dot(x, r.coroot) * dot(y, r.coroot);
    return s;
  };
  for (int i = 0; i < nres; ++i) {
    Rat primary = bform(rd.roots[i].value, rd.two_rho_k);
    bool pos = primary > 0 || (primary == 0 && lex_positive(rd.roots[i].value));
    if (pos) rd.positive.push_back(i);
  }
  require_internal(2 * rd.positive.size() == size_t(nres), "restricted positivity is unbalanced");
  // the induced K-positivity must match the choice in step 3
  {
    std::set<int> pos_set(rd.positive.begin(), rd.positive.end());
    for (int i : k_positive)
      require_internal(pos_set.count(i) == 1, "K-positive system not contained in the full one");
  }

  // 5. theta-stable ambient system: a root is positive iff its restriction is
  for (size_t i = 0; i < d.roots.size(); ++i) {
    ZVec ta = z_apply(rf->theta, d.roots[i]);
    QVec value(d.rank);
    for (int k = 0; k < d.rank; ++k) value[k] = Rat(d.roots[i][k] + ta[k]) / 2;
    int ri = rd.index_of_value(value);
    require_internal(ri >= 0, "ambient root restricts outside the restricted datum");
    if (rd.is_positive(ri)) rd.ambient_positive.push_back(int(i));
  }
  require_internal(2 * rd.ambient_positive.size() == d.roots.size(),
                   "ambient positivity is unbalanced");
  {
    // closedness: sum of two positives, when a root, is positive
    std::set<ZVec> pos_roots;
    for (int i : rd.ambient_positive) pos_roots.insert(d.roots[i]);
    for (int i : rd.ambient_positive)
      for (int j : rd.ambient_positive) {
        ZVec sum(d.rank);
        for (int k = 0; k < d.rank; ++k) sum[k] = d.roots[i][k] + d.roots[j][k];
        if (d.is_root(sum))
          require_internal(pos_roots.count(sum) == 1, "ambient positive system not closed");
      }
  }

  rd.simples = find_restricted_simples(rd.roots, rd.positive);
  for (int i : rd.positive) {
    QVec twice = q_scale(Rat(2), rd.roots[i].value);
    if (rd.index_of_value(twice) < 0) rd.positive_reduced.push_back(i);
  }
  {
    std::vector<int> red_pos = rd.positive_reduced;
    std::set<QVec> red_pos_values;
    for (int i : red_pos) red_pos_values.insert(rd.roots[i].value);
    for (int i : red_pos) {
      bool dec = false;
      for (int j : red_pos) {
        QVec diff = q_sub(rd.roots[i].value, rd.roots[j].value);
        if (q_is_zero(diff)) continue;
        if (red_pos_values.count(diff)) {
          dec = true;
          break;
        }
      }
      if (!dec) rd.simples_reduced.push_back(i);
    }
  }

  // 6. rho vectors
  rd.rho_g = q_zero(d.rank);
  for (int i : rd.ambient_positive) rd.rho_g = q_add(rd.rho_g, q_scale(Rat(1, 2), to_q(d.roots[i])));
  rd.rho_g = rf->project_fixed(rd.rho_g);  // theta-stable system: projection is the identity
  rd.rho_k = q_scale(Rat(1, 2), rd.two_rho_k);
  rd.two_rho_cplx = q_zero(d.rank);
  rd.two_rho_imag = q_zero(d.rank);
  for (int i : rd.positive) {
    if (rd.roots[i].imaginary())
      rd.two_rho_imag = q_add(rd.two_rho_imag, rd.roots[i].value);
    else
      rd.two_rho_cplx = q_add(rd.two_rho_cplx, rd.roots[i].value);
  }
  rd.two_rho_res_covec = ZVec(d.rank, 0);
  for (int i : rd.positive_reduced)
    for (int k = 0; k < d.rank; ++k) rd.two_rho_res_covec[k] += rd.roots[i].coroot[k];

  // 7. singular sets
  for (int i = 0; i < nres; ++i) {
    if (dot(rd.two_rho_cplx, rd.roots[i].coroot) == 0) rd.sing_imag.push_back(i);
    if (dot(rd.two_rho_imag, rd.roots[i].coroot) == 0) rd.sing_cplx.push_back(i);
    if (dot(rd.two_rho_k, rd.roots[i].coroot) == 0) rd.sing_ncpt.push_back(i);
  }
  for (int i : rd.sing_imag)
    require_internal(rd.roots[i].imaginary(), "singular imaginary set contains a complex root");
  for (int i : rd.sing_cplx)
    require_internal(!rd.roots[i].imaginary(), "singular complex set contains an imaginary root");
  for (int i : rd.sing_ncpt)
    require_internal(rd.roots[i].imaginary() && rd.roots[i].noncompact,
                     "singular noncompact set must be noncompact imaginary");
  // sing_ncpt positives are mutually orthogonal (type A_1^r)
  for (int i : rd.sing_ncpt)
    for (int j : rd.sing_ncpt)
      if (i != j && rd.roots[i].value != q_scale(Rat(-1), rd.roots[j].value))
        require_internal(dot(rd.roots[i].value, rd.roots[j].coroot) == 0,
                         "singular noncompact roots are not orthogonal");

  // 8. dominance of 2 rho_K for the chosen system (Prop 3.2 preamble)
  for (int i : rd.positive)
    require_internal(dot(rd.two_rho_k, rd.roots[i].coroot) >= 0, "2 rho_K is not dominant");

  return rd;
}

RestrictedDatum restrict_datum(const RealForm& rf) {
  return restrict_datum(std::make_shared<RealForm>(rf));
}

RestrictedTypes restricted_type(const RestrictedDatum& rd) {
  auto classify = [&](const std::vector<int>& idx) {
    std::vector<QVec> values, covalues;
    for (int i : idx) {
      values.push_back(rd.roots[i].value);
      covalues.push_back(to_q(rd.roots[i].coroot));
    }
    return classify_subsystem(values, covalues);
  };
  RestrictedTypes t;
  std::vector<int> all(rd.roots.size());
  for (size_t i = 0; i < rd.roots.size(); ++i) all[i] = int(i);
  t.res = classify(all);
  std::vector<int> red, cplx, imag;
  for (size_t i = 0; i < rd.roots.size(); ++i) {
    QVec twice = q_scale(Rat(2), rd.roots[i].value);
    if (rd.index_of_value(twice) < 0) red.push_back(int(i));
    if (rd.roots[i].imaginary())
      imag.push_back(int(i));
    else
      cplx.push_back(int(i));
  }
  t.res_red = classify(red);
  t.cplx = classify(cplx);
  t.imag = classify(imag);
  t.sing_cplx = classify(rd.sing_cplx);
  t.sing_imag = classify(rd.sing_imag);
  t.sing_ncpt = classify(rd.sing_ncpt);
  t.k = classify(rd.k_roots);
  return t;
}

std::pair<QVec, WeylElement> restricted_dominant(const RestrictedDatum& rd, const QVec& phi) {
  const RootDatum& d = *rd.rf->datum;
  QVec x = phi;
  WeylElement w{z_identity(d.rank), {}};
  for (;;) {
    bool moved = false;
    for (size_t si = 0; si < rd.simples.size(); ++si) {
      int i = rd.simples[si];
      Rat p = dot(x, rd.roots[i].coroot);
      if (p < 0) {
        x = q_sub(x, q_scale(p, rd.roots[i].value));
        w.matrix = z_mul(rd.reflection_matrix(i), w.matrix);
        w.word.insert(w.word.begin(), int(si));
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return {x, w};
}

Int restricted_height(const RestrictedDatum& rd, const QVec& phi) {
  QVec fixed = rd.rf->project_fixed(phi);
  require_internal(fixed == phi, "restricted_height: phi must be theta-fixed");
  auto [dom, w] = restricted_dominant(rd, phi);
  Rat h = dot(dom, rd.two_rho_res_covec);
  require_internal(is_integer(h) && h >= 0, "restricted height must be a nonnegative integer");
  return h.get_num();
}

std::pair<bool, QVec> restricted_weight_test(const RestrictedDatum& rd, const QVec& lambda_c,
                                             const QVec& phi) {
  for (int i : rd.simples) {
    check(dot(lambda_c, rd.roots[i].coroot) >= 0, "restricted_weight_test: lambda_c not dominant");
    check(dot(phi, rd.roots[i].coroot) >= 0, "restricted_weight_test: phi not dominant");
  }
  std::vector<QVec> cols;
  for (int i : rd.simples) cols.push_back(rd.roots[i].value);
  auto sol = solve_columns(cols, q_sub(lambda_c, phi));
  if (!sol) return {false, {}};
  for (const auto& c : *sol)
    if (!is_integer(c) || c < 0) return {false, *sol};
  // height inequality, with equality iff phi = lambda_c (Prop 4.1(2))
  Int hl = restricted_height(rd, lambda_c);
  Int hp = restricted_height(rd, phi);
  require_internal(hp <= hl, "restricted height exceeds the highest weight's");
  if (hp == hl) require_internal(phi == lambda_c, "height equality off the highest weight");
  return {true, *sol};
}

std::vector<QVec> restricted_extremal_weights(const RestrictedDatum& rd, const QVec& lambda_c,
                                              long cap) {
  std::set<QVec> orbit;
  std::vector<QVec> work = {lambda_c};
  orbit.insert(lambda_c);
  while (!work.empty()) {
    QVec x = work.back();
    work.pop_back();
    for (int i : rd.simples) {
      Rat p = dot(x, rd.roots[i].coroot);
      QVec y = q_sub(x, q_scale(p, rd.roots[i].value));
      if (!orbit.count(y)) {
        check(long(orbit.size()) < cap, "restricted orbit exceeds the cap");
        orbit.insert(y);
        work.push_back(y);
      }
    }
  }
  return std::vector<QVec>(orbit.begin(), orbit.end());
}

namespace {

std::vector<int> ambient_simples_of(const RestrictedDatum& rd) {
  const RootDatum& d = *rd.rf->datum;
  std::set<ZVec> pos;
  for (int i : rd.ambient_positive) pos.insert(d.roots[i]);
  std::vector<int> simples;
  for (int i : rd.ambient_positive) {
    bool dec = false;
    for (int j : rd.ambient_positive) {
      ZVec diff(d.rank);
      for (int k = 0; k < d.rank; ++k) diff[k] = d.roots[i][k] - d.roots[j][k];
      if (diff == ZVec(d.rank, 0)) continue;
      if (pos.count(diff)) {
        dec = true;
        break;
      }
    }
    if (!dec) simples.push_back(i);
  }
  return simples;
}

}  // namespace

FoldedDiagram fold_diagram(const RestrictedDatum& rd) {
  const RealForm& rf = *rd.rf;
  const RootDatum& d = *rf.datum;
  std::vector<int> simples = ambient_simples_of(rd);
  FoldedDiagram fd;
  std::map<int, int> vertex_of;
  for (int s : simples) {
    if (vertex_of.count(s)) continue;
    int ts = d.root_index(z_apply(rf.theta, d.roots[s]));
    FoldedDiagram::Vertex v;
    v.orbit = {s};
    vertex_of[s] = int(fd.vertices.size());
    if (ts == s) {
      v.imaginary = true;
    } else {
      v.orbit.push_back(ts);
      vertex_of[ts] = int(fd.vertices.size());
      ZVec sum(d.rank);
      for (int k = 0; k < d.rank; ++k) sum[k] = d.roots[s][k] + d.roots[ts][k];
      v.self_joined = d.is_root(sum);
    }
    fd.vertices.push_back(std::move(v));
  }
  auto restricted_of = [&](int ambient_root) {
    ZVec ta = z_apply(rf.theta, d.roots[ambient_root]);
    QVec value(d.rank);
    for (int k = 0; k < d.rank; ++k) value[k] = Rat(d.roots[ambient_root][k] + ta[k]) / 2;
    int ri = rd.index_of_value(value);
    require_internal(ri >= 0, "fold: missing restricted value");
    return ri;
  };
  for (size_t a = 0; a < fd.vertices.size(); ++a)
    for (size_t b = a + 1; b < fd.vertices.size(); ++b) {
      int ra = restricted_of(fd.vertices[a].orbit.front());
      int rb = restricted_of(fd.vertices[b].orbit.front());
      Rat pab = dot(rd.roots[ra].value, rd.roots[rb].coroot);
      Rat pba = dot(rd.roots[rb].value, rd.roots[ra].coroot);
      if (pab == 0 && pba == 0) continue;
      FoldedDiagram::Edge e;
      e.from = int(a);
      e.to = int(b);
      e.pairing_from_to = to_long(pab);
      e.pairing_to_from = to_long(pba);
      fd.edges.push_back(e);
    }
  return fd;
}

HighestWeightSpec weight_to_spec(const RestrictedDatum& rd, const QVec& lambda_ambient) {
  const RealForm& rf = *rd.rf;
  const RootDatum& d = *rf.datum;
  check(is_weakly_integral(rf, lambda_ambient),
        "weight is not integral on the coroots of the group");
  std::vector<int> amb_simples = ambient_simples_of(rd);
  QVec x = lambda_ambient;
  for (;;) {
    bool moved = false;
    for (int i : amb_simples) {
      Rat p = dot(x, d.coroots[i]);
      if (p < 0) {
        for (int k = 0; k < d.rank; ++k) x[k] -= p * long(d.roots[i][k]);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  HighestWeightSpec spec;
  spec.lambda_c = rf.project_fixed(x);
  spec.nu_real = rf.project_split(x);
  spec.nu_imag = q_zero(d.rank);
  return spec;
}

}  // namespace sigform
