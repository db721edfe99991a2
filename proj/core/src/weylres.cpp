#include "sigform/weylres.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sigform {

int RestrictedWeylGroup::index_of(const ZMat& m) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (z_equal(elements[i].matrix, m)) return int(i);
  return -1;
}

RestrictedWeylGroup build_w_theta(const RestrictedDatum& rd, long cap) {
  const RootDatum& d = *rd.rf->datum;
  RestrictedWeylGroup w;
  std::vector<ZMat> gens;
  // generators: reflections in the simple restricted roots, realized upstairs
  // through the Prop 3.1 dictionary (recorded per generator)
  for (size_t si = 0; si < rd.simples.size(); ++si) {
    int i = rd.simples[si];
    gens.push_back(rd.reflection_matrix(i));
    w.generator_roots.push_back(i);
    w.generator_case.push_back(rd.roots[i].rcase);
  }
  std::map<ZMat, int> seen;
  w.elements.push_back({z_identity(d.rank), {}});
  seen[w.elements[0].matrix] = 0;
  for (size_t head = 0; head < w.elements.size(); ++head) {
    WeylElement cur = w.elements[head];
    for (size_t g = 0; g < gens.size(); ++g) {
      ZMat next = z_mul(gens[g], cur.matrix);
      if (seen.count(next)) continue;
      check(long(w.elements.size()) < cap, "W^theta order exceeds the cap");
      WeylElement el;
      el.matrix = next;
      el.word = cur.word;
      el.word.insert(el.word.begin(), int(g));
      seen[next] = int(w.elements.size());
      w.elements.push_back(std::move(el));
    }
  }
  // subgroup registries
  auto gens_of = [&](auto&& pred) {
    std::vector<ZMat> out;
    for (size_t i = 0; i < rd.roots.size(); ++i)
      if (rd.is_positive(int(i)) && pred(int(i))) out.push_back(rd.reflection_matrix(int(i)));
    return out;
  };
  auto members_of = [&](const std::vector<ZMat>& subgens) {
    std::set<int> got;
    std::vector<int> work;
    got.insert(0);
    work.push_back(0);
    while (!work.empty()) {
      int cur = work.back();
      work.pop_back();
      for (const auto& g : subgens) {
        ZMat nm = z_mul(g, w.elements[cur].matrix);
        auto it = seen.find(nm);
        require_internal(it != seen.end(), "subgroup escapes W^theta");
        if (got.insert(it->second).second) work.push_back(it->second);
      }
    }
    return std::vector<int>(got.begin(), got.end());
  };
  auto in_list = [](const std::vector<int>& v, int i) {
    return std::find(v.begin(), v.end(), i) != v.end();
  };
  w.w_cplx = members_of(gens_of([&](int i) { return !rd.roots[i].imaginary(); }));
  w.w_imag = members_of(gens_of([&](int i) { return rd.roots[i].imaginary(); }));
  w.w_sing_imag = members_of(gens_of([&](int i) { return in_list(rd.sing_imag, i); }));
  w.w_sing_cplx = members_of(gens_of([&](int i) { return in_list(rd.sing_cplx, i); }));
  w.w_k0 = members_of(gens_of([&](int i) { return rd.roots[i].in_K(); }));
  return w;
}

SemidirectDecomposition semidirect_decompositions(const RestrictedDatum& rd,
                                                  const RestrictedWeylGroup& w) {
  SemidirectDecomposition out;
  out.order_w_theta = w.order();
  out.order_cplx = long(w.w_cplx.size());
  out.order_sing_imag = long(w.w_sing_imag.size());
  out.order_sing_cplx = long(w.w_sing_cplx.size());
  out.order_imag = long(w.w_imag.size());
  require_internal(out.order_cplx * out.order_sing_imag == out.order_w_theta,
                   "order product fails for W_cplx x| W^sing_imag");
  require_internal(out.order_sing_cplx * out.order_imag == out.order_w_theta,
                   "order product fails for W^sing_cplx |x W_imag");
  auto intersect_trivial = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::set<int> sa(a.begin(), a.end());
    int common = 0;
    for (int x : b)
      if (sa.count(x)) ++common;
    return common == 1;
  };
  require_internal(intersect_trivial(w.w_cplx, w.w_sing_imag),
                   "W_cplx and W^sing_imag intersect nontrivially");
  require_internal(intersect_trivial(w.w_sing_cplx, w.w_imag),
                   "W^sing_cplx and W_imag intersect nontrivially");
  // normality of the stable factors, by conjugating subgroup generators with
  // group generators
  std::vector<ZMat> group_gens;
  for (size_t si = 0; si < rd.simples.size(); ++si)
    group_gens.push_back(rd.reflection_matrix(rd.simples[si]));
  auto check_normal = [&](const std::vector<int>& members, const char* msg) {
    std::set<ZMat> subset;
    for (int i : members) subset.insert(w.elements[i].matrix);
    std::vector<ZMat> subgens;
    for (int i : members) subgens.push_back(w.elements[i].matrix);
    for (const auto& g : group_gens) {
      ZMat ginv = z_inverse(g);
      for (const auto& s : subgens) {
        ZMat conj = z_mul(z_mul(g, s), ginv);
        require_internal(subset.count(conj) == 1, msg);
      }
    }
  };
  check_normal(w.w_cplx, "W_cplx is not normal in W^theta");
  check_normal(w.w_imag, "W_imag is not normal in W^theta");
  return out;
}

std::vector<int> enumerate_w1(const RestrictedDatum& rd, const RestrictedWeylGroup& w) {
  std::vector<int> out;
  std::vector<int> pos_k;
  for (int i : rd.positive)
    if (rd.roots[i].in_K()) pos_k.push_back(i);
  for (size_t e = 0; e < w.elements.size(); ++e) {
    ZMat inv = z_inverse(w.elements[e].matrix);
    bool good = true;
    for (int i : pos_k) {
      QVec im = z_apply(inv, rd.roots[i].value);
      int idx = rd.index_of_value(im);
      require_internal(idx >= 0, "Weyl image leaves the restricted roots");
      if (!rd.is_positive(idx)) {
        good = false;
        break;
      }
    }
    if (good) out.push_back(int(e));
  }
  require_internal(out.size() * w.w_k0.size() == w.elements.size(), "|W^theta| != |W_K0| |W^1|");
  // W^1 lies in W^sing_imag
  {
    std::set<int> sing(w.w_sing_imag.begin(), w.w_sing_imag.end());
    for (int e : out) require_internal(sing.count(e) == 1, "W^1 escapes W^sing_imag");
  }
  // the W_K0-cosets of W^1 partition W^theta
  {
    std::set<ZMat> seen;
    for (int e : out)
      for (int k : w.w_k0) {
        ZMat m = z_mul(w.elements[k].matrix, w.elements[e].matrix);
        require_internal(seen.insert(m).second, "W_K0 cosets of W^1 overlap");
      }
    require_internal(seen.size() == w.elements.size(), "W_K0 cosets of W^1 miss elements");
  }
  // R+_res minus w R+_res contains no K roots: only noncompact imaginary
  // positives fall outside the image system
  for (int e : out) {
    ZMat inv = z_inverse(w.elements[e].matrix);
    for (int i : rd.positive) {
      QVec im = z_apply(inv, rd.roots[i].value);
      int idx = rd.index_of_value(im);
      if (!rd.is_positive(idx))
        require_internal(!rd.roots[i].in_K(), "R+ \\ wR+ contains a K root");
    }
  }
  // refined characterization (Cor. Wupper1): within W^sing_imag, exactly the
  // elements keeping the compact part of the singular imaginary positives
  {
    std::vector<int> refined;
    std::vector<int> sing_pos_cpt;
    for (int i : rd.sing_imag)
      if (rd.is_positive(i) && !rd.roots[i].noncompact) sing_pos_cpt.push_back(i);
    std::set<int> sing_pos_all;
    for (int i : rd.sing_imag)
      if (rd.is_positive(i)) sing_pos_all.insert(i);
    for (int e : w.w_sing_imag) {
      ZMat inv = z_inverse(w.elements[e].matrix);
      bool good = true;
      for (int i : sing_pos_cpt) {
        QVec im = z_apply(inv, rd.roots[i].value);
        int idx = rd.index_of_value(im);
        if (!sing_pos_all.count(idx)) {
          good = false;
          break;
        }
      }
      if (good) refined.push_back(e);
    }
    std::sort(refined.begin(), refined.end());
    std::vector<int> sorted_out = out;
    std::sort(sorted_out.begin(), sorted_out.end());
    require_internal(refined == sorted_out, "Cor. Wupper1 characterization mismatch");
  }
  return out;
}

SingularNcptBasis singular_ncpt_basis(const RestrictedDatum& rd) {
  SingularNcptBasis b;
  for (int i : rd.sing_ncpt)
    if (rd.is_positive(i)) {
      b.root_indices.push_back(i);
      b.coroots.push_back(rd.roots[i].coroot);
    }
  return b;
}

SingularNcptInK singular_ncpt_in_k(const RealForm& rf, const RestrictedDatum& rd,
                                   const SingularNcptBasis& basis) {
  int n = rf.rank();
  int r = basis.r();
  check(r < 62, "singular noncompact basis too large");
  std::vector<std::vector<Int>> one_plus_theta(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      one_plus_theta[i][j] = Int(rf.theta_costar[i][j]) + (i == j ? 1 : 0);
  SingularNcptInK out;
  for (long mask = 0; mask < (1L << r); ++mask) {
    std::vector<Int> hb(n, 0);
    std::vector<int> subset;
    for (int j = 0; j < r; ++j)
      if (mask & (1L << j)) {
        subset.push_back(j);
        for (int k = 0; k < n; ++k) hb[k] += basis.coroots[j][k];
      }
    if (!integer_solvable(one_plus_theta, hb)) continue;
    ZMat s = z_identity(n);
    for (int j : subset) s = z_mul(s, rd.reflection_matrix(basis.root_indices[j]));
    out.subsets.push_back(subset);
    out.elements.push_back(std::move(s));
  }
  auto find_subset = [&](const std::vector<int>& s) {
    return std::find(out.subsets.begin(), out.subsets.end(), s) != out.subsets.end();
  };
  for (const auto& a : out.subsets)
    for (const auto& b : out.subsets) {
      std::vector<int> sym;
      std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                    std::back_inserter(sym));
      require_internal(find_subset(sym), "W^sing_ncpt(K) not closed under symmetric difference");
    }
  require_internal(!out.subsets.empty() &&
                       (out.subsets.size() & (out.subsets.size() - 1)) == 0,
                   "W^sing_ncpt(K) order is not a power of two");
  return out;
}

int SingularNcptInK::rank2() const {
  int k = 0;
  while ((size_t(1) << k) < subsets.size()) ++k;
  return k;
}

ComponentGroup component_group(const RealForm& rf) {
  auto rd = restrict_datum(std::make_shared<RealForm>(rf));
  auto basis = singular_ncpt_basis(rd);
  auto in_k = singular_ncpt_in_k(rf, rd, basis);
  ComponentGroup g;
  g.rank2 = in_k.rank2();
  return g;
}

}  // namespace sigform
