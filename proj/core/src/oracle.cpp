#include "sigform/oracle.hpp"

#include <algorithm>
#include <set>
#include <numeric>
#include <sstream>

namespace sigform {

int ExplicitModule::weight_of_global(int g) const {
  for (size_t w = 0; w < weights.size(); ++w)
    if (g >= offset[w] && g < offset[w] + mult[w]) return int(w);
  throw InternalError("global index out of range");
}

std::vector<int> ExplicitModule::f_word(int w, int b) const {
  std::vector<int> word;
  int cw = w, cb = b;
  while (parent[cw][cb].first >= 0) {
    auto [gen, pb] = parent[cw][cb];
    word.push_back(gen);
    ZVec up = weights[cw];
    for (int k = 0; k < datum->rank; ++k) up[k] += datum->roots[pos.simples[gen]][k];
    cw = weight_index.at(up);
    cb = pb;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

namespace {

QMat zero_mat(int rows, int cols) { return QMat(rows, QVec(cols, Rat(0))); }

// assemble a dense operator from per-weight blocks: block[w] maps B_w into
// B_{target(w)}
QMat assemble(const ExplicitModule& m, const std::vector<QMat>& blocks,
              const std::vector<int>& target) {
  long n = m.dimension.get_si();
  QMat out = zero_mat(int(n), int(n));
  for (size_t w = 0; w < m.weights.size(); ++w) {
    if (target[w] < 0 || blocks[w].empty()) continue;
    for (int c = 0; c < m.mult[w]; ++c)
      for (int r = 0; r < m.mult[target[w]]; ++r)
        out[m.offset[target[w]] + r][m.offset[w] + c] = blocks[w][r][c];
  }
  return out;
}

}  // namespace

QMat ExplicitModule::dense_f(int i) const {
  std::vector<int> target(weights.size(), -1);
  for (size_t w = 0; w < weights.size(); ++w) {
    ZVec down = weights[w];
    for (int k = 0; k < datum->rank; ++k) down[k] -= datum->roots[pos.simples[i]][k];
    auto it = weight_index.find(down);
    if (it != weight_index.end()) target[w] = it->second;
  }
  return assemble(*this, f_mat[i], target);
}

QMat ExplicitModule::dense_e(int i) const {
  std::vector<int> target(weights.size(), -1);
  for (size_t w = 0; w < weights.size(); ++w) {
    ZVec up = weights[w];
    for (int k = 0; k < datum->rank; ++k) up[k] += datum->roots[pos.simples[i]][k];
    auto it = weight_index.find(up);
    if (it != weight_index.end()) target[w] = it->second;
  }
  return assemble(*this, e_mat[i], target);
}

QMat ExplicitModule::dense_h(int i) const {
  long n = dimension.get_si();
  QMat out = zero_mat(int(n), int(n));
  for (size_t w = 0; w < weights.size(); ++w) {
    Rat v = dot(to_q(weights[w]), datum->coroots[pos.simples[i]]);
    for (int c = 0; c < mult[w]; ++c) out[offset[w] + c][offset[w] + c] = v;
  }
  return out;
}

ExplicitModule construct_irrep(const CartanMatrix& cartan, const ZVec& lam_fund, long dim_cap) {
  ExplicitModule m;
  m.cartan = cartan;
  m.datum = build_root_system(cartan);
  m.pos = standard_positive_system(m.datum);
  m.highest = lam_fund;
  int rank = m.datum->rank;
  check(int(lam_fund.size()) == rank, "highest weight has wrong length");
  for (long a : lam_fund) check(a >= 0, "highest weight must be dominant");
  Int dim = weyl_dimension(m.pos, to_q(lam_fund));
  check(dim <= dim_cap, "Weyl dimension " + dim.get_str() + " exceeds the cap");
  m.dimension = dim;

  int nsimple = int(m.pos.simples.size());
  m.f_mat.assign(nsimple, {});
  m.e_mat.assign(nsimple, {});

  // process weights layer by layer from the top
  std::vector<ZVec> layer = {lam_fund};
  m.weights.push_back(lam_fund);
  m.weight_index[lam_fund] = 0;
  m.mult.push_back(1);
  m.parent.push_back({{-1, -1}});
  m.gram.push_back({{Rat(1)}});
  for (int i = 0; i < nsimple; ++i) {
    m.f_mat[i].push_back({});
    m.e_mat[i].push_back({});
  }

  auto alpha = [&](int i) { return m.datum->roots[m.pos.simples[i]]; };
  auto coroot = [&](int i) { return m.datum->coroots[m.pos.simples[i]]; };

  while (!layer.empty()) {
    // candidate next-layer weights, deterministically ordered
    std::set<ZVec> next;
    for (const ZVec& mu : layer)
      for (int i = 0; i < nsimple; ++i) {
        ZVec down = mu;
        for (int k = 0; k < rank; ++k) down[k] -= alpha(i)[k];
        next.insert(down);
      }
    std::vector<ZVec> produced;
    for (const ZVec& mu : next) {
      // candidates: f_i b for each basis vector b of weight mu + alpha_i
      struct Cand {
        int gen;
        int pb;  // parent basis index
      };
      std::vector<Cand> cands;
      std::vector<int> up_block(nsimple, -1);
      for (int i = 0; i < nsimple; ++i) {
        ZVec up = mu;
        for (int k = 0; k < rank; ++k) up[k] += alpha(i)[k];
        auto it = m.weight_index.find(up);
        if (it == m.weight_index.end()) continue;
        up_block[i] = it->second;
        for (int b = 0; b < m.mult[it->second]; ++b) cands.push_back({i, b});
      }
      if (cands.empty()) continue;
      // Gram of candidates: <f_i b, f_j b'> = <b, f_j e_i b'> + d_ij <mu +
      // alpha_i, coroot_i> <b, b'>
      int nc = int(cands.size());
      QMat cgram = zero_mat(nc, nc);
      for (int a = 0; a < nc; ++a)
        for (int b = 0; b < nc; ++b) {
          int i = cands[a].gen, j = cands[b].gen;
          int wi = up_block[i], wj = up_block[j];
          // e_i (b'): lives in wj + alpha_i
          ZVec upup = m.weights[wj];
          for (int k = 0; k < rank; ++k) upup[k] += alpha(i)[k];
          Rat val = 0;
          auto itu = m.weight_index.find(upup);
          if (itu != m.weight_index.end() && !m.e_mat[i][wj].empty()) {
            // f_j maps block(upup) -> block(wi); available since wi was
            // processed earlier (it sits one level above mu)
            const QMat& ei = m.e_mat[i][wj];       // (mult[upup] x mult[wj])
            const QMat& fj = m.f_mat[j][itu->second];  // (mult[wi] x mult[upup])
            if (!fj.empty()) {
              // column b of e_i, then f_j, then pair with basis a via gram
              QVec v(m.mult[itu->second], Rat(0));
              for (int r = 0; r < m.mult[itu->second]; ++r) v[r] = ei[r][cands[b].pb];
              QVec fv(m.mult[wi], Rat(0));
              for (int r = 0; r < m.mult[wi]; ++r)
                for (int c = 0; c < m.mult[itu->second]; ++c) fv[r] += fj[r][c] * v[c];
              for (int c = 0; c < m.mult[wi]; ++c)
                val += m.gram[wi][cands[a].pb][c] * fv[c];
            }
          }
          if (i == j) {
            Rat h = dot(to_q(m.weights[wi]), coroot(i));
            val += h * m.gram[wi][cands[a].pb][cands[b].pb];
          }
          cgram[a][b] = val;
        }
      // greedy rank-extending selection
      std::vector<int> chosen;
      for (int a = 0; a < nc; ++a) {
        std::vector<int> trial = chosen;
        trial.push_back(a);
        QMat sub = zero_mat(int(trial.size()), int(trial.size()));
        for (size_t x = 0; x < trial.size(); ++x)
          for (size_t y = 0; y < trial.size(); ++y) sub[x][y] = cgram[trial[x]][trial[y]];
        if (rank_of(sub) == int(trial.size())) chosen = trial;
      }
      if (chosen.empty()) continue;  // weight absent in the quotient
      int mw = int(chosen.size());
      int wnew = int(m.weights.size());
      m.weights.push_back(mu);
      m.weight_index[mu] = wnew;
      m.mult.push_back(mw);
      m.parent.push_back({});
      for (int c : chosen) m.parent[wnew].push_back({cands[c].gen, cands[c].pb});
      QMat g = zero_mat(mw, mw);
      for (int x = 0; x < mw; ++x)
        for (int y = 0; y < mw; ++y) g[x][y] = cgram[chosen[x]][chosen[y]];
      m.gram.push_back(g);
      for (int i = 0; i < nsimple; ++i) {
        m.f_mat[i].push_back({});
        m.e_mat[i].push_back({});
      }
      // f-matrices into the new block: expansion of every candidate
      for (int i = 0; i < nsimple; ++i) {
        if (up_block[i] < 0) continue;
        QMat fm = zero_mat(mw, m.mult[up_block[i]]);
        for (int b = 0; b < m.mult[up_block[i]]; ++b) {
          // candidate index
          int ci = -1;
          for (int a = 0; a < nc; ++a)
            if (cands[a].gen == i && cands[a].pb == b) ci = a;
          // pairings with the chosen basis
          QVec rhs(mw, Rat(0));
          for (int x = 0; x < mw; ++x) rhs[x] = cgram[chosen[x]][ci];
          // solve g coeff = rhs
          std::vector<QVec> cols(mw, QVec(mw, Rat(0)));
          for (int cc = 0; cc < mw; ++cc)
            for (int rr = 0; rr < mw; ++rr) cols[cc][rr] = g[rr][cc];
          auto sol = solve_columns(cols, rhs);
          require_internal(sol.has_value(), "module: nondegenerate block failed to solve");
          for (int x = 0; x < mw; ++x) fm[x][b] = (*sol)[x];
        }
        m.f_mat[i][up_block[i]] = fm;
      }
      // e-matrices out of the new block: e_i (f_j c) = f_j e_i c + d_ij h c
      for (int i = 0; i < nsimple; ++i) {
        if (up_block[i] < 0) continue;  // e_i would leave the weight support
        QMat em = zero_mat(m.mult[up_block[i]], mw);
        for (int x = 0; x < mw; ++x) {
          auto [j, pb] = m.parent[wnew][x];
          int wj = up_block[j];
          // f_j (e_i parent): parent sits in block wj
          ZVec upup = m.weights[wj];
          for (int k = 0; k < rank; ++k) upup[k] += alpha(i)[k];
          auto itu = m.weight_index.find(upup);
          if (itu != m.weight_index.end() && !m.e_mat[i][wj].empty() &&
              !m.f_mat[j][itu->second].empty()) {
            const QMat& ei = m.e_mat[i][wj];
            const QMat& fj = m.f_mat[j][itu->second];
            for (int r = 0; r < m.mult[up_block[i]]; ++r) {
              Rat acc = 0;
              for (int c = 0; c < m.mult[itu->second]; ++c) acc += fj[r][c] * ei[c][pb];
              em[r][x] += acc;
            }
          }
          if (i == j) {
            Rat h = dot(to_q(m.weights[wj]), coroot(i));
            em[pb][x] += h;
          }
        }
        m.e_mat[i][wnew] = em;
      }
      produced.push_back(mu);
    }
    layer = produced;
  }

  m.offset.resize(m.weights.size());
  long total = 0;
  for (size_t w = 0; w < m.weights.size(); ++w) {
    m.offset[w] = int(total);
    total += m.mult[w];
  }
  require_internal(Int(total) == m.dimension,
                   "constructed dimension does not match the Weyl dimension");
  // [e_i, f_j] = delta_ij h_i as exact matrix identities, blockwise: on V_w
  // the target block is w + alpha_i - alpha_j
  auto block_of = [&](const ZVec& v) -> int {
    auto it = m.weight_index.find(v);
    return it == m.weight_index.end() ? -1 : it->second;
  };
  auto block_mul = [](const QMat& a, const QMat& b) {  // a (p x q), b (q x r)
    if (a.empty() || b.empty()) return QMat();
    QMat out(a.size(), QVec(b[0].size(), Rat(0)));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t k = 0; k < b.size(); ++k) {
        if (a[i][k] == 0) continue;
        for (size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
      }
    return out;
  };
  for (int i = 0; i < nsimple; ++i)
    for (int j = 0; j < nsimple; ++j)
      for (size_t w = 0; w < m.weights.size(); ++w) {
        ZVec down = m.weights[w];
        for (int k = 0; k < rank; ++k) down[k] -= alpha(j)[k];
        int wd = block_of(down);
        ZVec up = m.weights[w];
        for (int k = 0; k < rank; ++k) up[k] += alpha(i)[k];
        int wu = block_of(up);
        ZVec tgt = up;
        for (int k = 0; k < rank; ++k) tgt[k] -= alpha(j)[k];
        int wt = block_of(tgt);
        // e_i f_j - f_j e_i on block w
        QMat efij, feij;
        if (wd >= 0 && !m.f_mat[j][w].empty() && wt >= 0 && !m.e_mat[i][wd].empty())
          efij = block_mul(m.e_mat[i][wd], m.f_mat[j][w]);
        if (wu >= 0 && !m.e_mat[i][w].empty() && wt >= 0 && !m.f_mat[j][wu].empty())
          feij = block_mul(m.f_mat[j][wu], m.e_mat[i][w]);
        int rows = wt >= 0 ? m.mult[wt] : 0;
        if (i == j) rows = m.mult[w];
        for (int r = 0; r < rows; ++r)
          for (int c = 0; c < m.mult[w]; ++c) {
            Rat lhs = 0;
            if (!efij.empty()) lhs += efij[r][c];
            if (!feij.empty()) lhs -= feij[r][c];
            Rat rhs = 0;
            if (i == j && r == c) rhs = dot(to_q(m.weights[w]), coroot(i));
            require_internal(lhs == rhs, "module: [e_i, f_j] != delta h_i");
          }
      }
  return m;
}

BilinearForm invariant_bilinear_form(const ExplicitModule& m) {
  BilinearForm form;
  int rank = m.datum->rank;
  // pair weight blocks with their negatives
  std::vector<int> neg_block(m.weights.size(), -1);
  for (size_t w = 0; w < m.weights.size(); ++w) {
    ZVec neg = m.weights[w];
    for (auto& x : neg) x = -x;
    auto it = m.weight_index.find(neg);
    if (it != m.weight_index.end()) neg_block[w] = it->second;
  }
  // -highest must be a weight, else B = 0
  {
    ZVec neg = m.highest;
    for (auto& x : neg) x = -x;
    if (!m.weight_index.count(neg)) return form;
  }
  form.zero = false;
  // B(b, y) for b = f_i(parent): -B(parent, f_i y); base: B(v_top, y) on the
  // one-dimensional lowest block
  std::map<std::pair<int, int>, QVec> rows;  // (w, b) -> row over B_{-w}
  // process weights in stored order (decreasing height == increasing depth of
  // the parent recursion), so parents are always available
  for (size_t w = 0; w < m.weights.size(); ++w) {
    int nw = neg_block[w];
    if (nw < 0) continue;
    for (int b = 0; b < m.mult[w]; ++b) {
      QVec row(m.mult[nw], Rat(0));
      if (m.parent[w][b].first < 0) {
        // top vector: pairs only with the lowest block, normalized to 1
        require_internal(m.mult[nw] == 1, "lowest weight block must be one-dimensional");
        row[0] = 1;
      } else {
        auto [i, pb] = m.parent[w][b];
        ZVec up = m.weights[w];
        for (int k = 0; k < rank; ++k) up[k] += m.datum->roots[m.pos.simples[i]][k];
        int wu = m.weight_index.at(up);
        int nwu = neg_block[wu];
        // f_i : V_{-w} -> V_{-w - alpha_i} = V_{-(w + alpha_i)}... careful:
        // -w - alpha_i = -(w + alpha_i) which is the negative of block wu
        const QMat& fi = m.f_mat[i].at(nw);
        if (nwu >= 0 && !fi.empty()) {
          const QVec& prow = rows.at({wu, pb});
          for (int y = 0; y < m.mult[nw]; ++y) {
            Rat acc = 0;
            for (int z = 0; z < m.mult[nwu]; ++z) acc += prow[z] * fi[z][y];
            row[y] = -acc;
          }
        }
      }
      rows[{int(w), b}] = row;
    }
  }
  for (size_t w = 0; w < m.weights.size(); ++w) {
    int nw = neg_block[w];
    if (nw < 0) continue;
    QMat block = zero_mat(m.mult[w], m.mult[nw]);
    for (int b = 0; b < m.mult[w]; ++b) block[b] = rows.at({int(w), b});
    form.blocks[int(w)] = block;
  }
  // verify invariance exactly and blockwise: B(f_i x, y) + B(x, f_i y) = 0
  // for x in V_{w+a_i}, y in V_{-w}, and the e-counterpart
  auto get_block = [&](int w) -> const QMat* {
    auto it = form.blocks.find(w);
    return it == form.blocks.end() ? nullptr : &it->second;
  };
  for (size_t w = 0; w < m.weights.size(); ++w) {
    int nw = neg_block[w];
    if (nw < 0) continue;
    for (size_t i = 0; i < m.pos.simples.size(); ++i) {
      ZVec up = m.weights[w];
      for (int k = 0; k < rank; ++k) up[k] += m.datum->roots[m.pos.simples[i]][k];
      auto itu = m.weight_index.find(up);
      if (itu == m.weight_index.end()) continue;
      int wu = itu->second;
      const QMat* bw = get_block(int(w));     // V_w x V_{-w}
      const QMat* bu = get_block(wu);         // V_{wu} x V_{-wu}
      const QMat& fi_up = m.f_mat[i][wu];     // V_{wu} -> V_w
      const QMat& fi_neg = m.f_mat[i][nw];    // V_{-w} -> V_{-wu}
      // B(f_i x, y) + B(x, f_i y) = 0: x in V_{wu}, y in V_{-w}
      for (int x = 0; x < m.mult[wu]; ++x)
        for (int y = 0; y < m.mult[nw]; ++y) {
          Rat acc = 0;
          if (bw && !fi_up.empty())
            for (int z = 0; z < m.mult[w]; ++z) acc += fi_up[z][x] * (*bw)[z][y];
          if (bu && !fi_neg.empty())
            for (int z = 0; z < m.mult[neg_block[wu]]; ++z)
              acc += (*bu)[x][z] * fi_neg[z][y];
          require_internal(acc == 0, "invariant form fails f-invariance");
        }
      // B(e_i x, y) + B(x, e_i y) = 0: x in V_w, y in V_{-wu}
      const QMat& ei_w = m.e_mat[i][w];                    // V_w -> V_{wu}
      const QMat& ei_negu = m.e_mat[i][neg_block[wu]];     // V_{-wu} -> V_{-w}
      for (int x = 0; x < m.mult[w]; ++x)
        for (int y = 0; y < m.mult[neg_block[wu]]; ++y) {
          Rat acc = 0;
          if (bu && !ei_w.empty())
            for (int z = 0; z < m.mult[wu]; ++z) acc += ei_w[z][x] * (*bu)[z][y];
          if (bw && !ei_negu.empty())
            for (int z = 0; z < m.mult[nw]; ++z) acc += (*bw)[x][z] * ei_negu[z][y];
          require_internal(acc == 0, "invariant form fails e-invariance");
        }
    }
  }
  // symmetric or antisymmetric (one-dimensional solution space): compare each
  // block with the transpose of its partner
  bool sym = true, antisym = true;
  for (const auto& [w, block] : form.blocks) {
    const QMat& partner = form.blocks.at(neg_block[w]);
    for (size_t r = 0; r < block.size(); ++r)
      for (size_t c = 0; c < block[r].size(); ++c) {
        if (block[r][c] != partner[c][r]) sym = false;
        if (block[r][c] != -partner[c][r]) antisym = false;
      }
  }
  require_internal(sym || antisym, "invariant form is neither symmetric nor antisymmetric");
  form.symmetric = sym;
  return form;
}

QMat dense_form(const ExplicitModule& m, const BilinearForm& b) {
  long n = m.dimension.get_si();
  QMat out = zero_mat(int(n), int(n));
  if (b.zero) return out;
  for (const auto& [w, block] : b.blocks) {
    ZVec neg = m.weights[w];
    for (auto& x : neg) x = -x;
    int nw = m.weight_index.at(neg);
    for (int r = 0; r < m.mult[w]; ++r)
      for (int c = 0; c < m.mult[nw]; ++c) out[m.offset[w] + r][m.offset[nw] + c] = block[r][c];
  }
  return out;
}

namespace {

// Exact inertia of a symmetric block form: weight pairs (w, -w) with w != -w
// contribute (mult, mult) once their pairing block is checked invertible;
// the zero block is eliminated directly.
std::tuple<long, long, long> block_inertia(const ExplicitModule& m, const BilinearForm& b) {
  long p = 0, q = 0, z = 0;
  std::set<int> done;
  for (const auto& [w, block] : b.blocks) {
    if (done.count(w)) continue;
    ZVec neg = m.weights[w];
    for (auto& x : neg) x = -x;
    int nw = m.weight_index.at(neg);
    if (nw == w) {
      auto [bp, bq, bz] = inertia(block);
      p += bp;
      q += bq;
      z += bz;
      done.insert(w);
    } else {
      require_internal(rank_of(block) == int(block.size()),
                       "pairing block between opposite weights is singular");
      p += long(block.size());
      q += long(block.size());
      done.insert(w);
      done.insert(nw);
    }
  }
  return {p, q, z};
}

}  // namespace

GramForm invariant_symmetric_form(const ExplicitModule& m) {
  auto b = invariant_bilinear_form(m);
  check(!b.zero, "no invariant form: the module is not self-dual");
  check(b.symmetric,
        "the invariant bilinear form is antisymmetric; no symmetric solution exists");
  GramForm g;
  g.blocks = b.blocks;
  auto [p, q, z] = block_inertia(m, b);
  g.p = p;
  g.q = q;
  g.z = z;
  require_internal(z == 0, "invariant form is degenerate on an irreducible module");
  return g;
}

Int oracle_sig_split(const CartanMatrix& cartan, const ZVec& lam_fund, long dim_cap) {
  // self-duality in fundamental coordinates: lam = -w0 lam
  auto datum = build_root_system(cartan);
  auto pos = standard_positive_system(datum);
  {
    QVec neg = q_scale(Rat(-1), to_q(lam_fund));
    auto [dual, w] = dominant_representative(pos, neg);
    QVec lamq = to_q(lam_fund);
    for (int s : pos.simples) check(dot(dual, datum->coroots[s]) == dot(lamq, datum->coroots[s]),
                                    "oracle_sig_split needs a self-dual highest weight");
  }
  auto m = construct_irrep(cartan, lam_fund, dim_cap);
  auto b = invariant_bilinear_form(m);
  require_internal(!b.zero, "self-dual module without an invariant form");
  if (!b.symmetric) {
    // Hermitian form = i * B: balanced inertia
    require_internal(m.dimension % 2 == 0, "antisymmetric form on an odd-dimensional module");
    return 0;
  }
  auto [p, q, z] = block_inertia(m, b);
  require_internal(z == 0, "invariant form is degenerate on an irreducible module");
  long d = p - q;
  return Int(d < 0 ? -d : d);
}

// ---- cyclotomic arithmetic for the equal-rank oracle -------------------------

namespace {

// polynomials over Int, index = exponent
using ZPoly = std::vector<Int>;

ZPoly cyclotomic(long n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact division
  ZPoly num(n + 1, Int(0));
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    ZPoly phi = cyclotomic(d);
    // divide num by phi exactly
    ZPoly quot(num.size() - phi.size() + 1, Int(0));
    ZPoly rem = num;
    for (long k = long(quot.size()) - 1; k >= 0; --k) {
      Int c = rem[k + phi.size() - 1] / phi.back();
      quot[k] = c;
      for (size_t j = 0; j < phi.size(); ++j) rem[k + j] -= c * phi[j];
    }
    for (const Int& c : rem) require_internal(c == 0, "cyclotomic division left a remainder");
    num = quot;
  }
  return num;
}

// reduce a group-algebra element (coefficients of zeta^k, k mod 2d) modulo
// Phi_{2d}(zeta); returns the residue polynomial
ZPoly reduce_mod_cyclotomic(ZPoly v, const ZPoly& phi) {
  while (v.size() >= phi.size()) {
    Int c = v.back() / phi.back();
    require_internal(c * phi.back() == v.back(), "cyclotomic reduction: non-monic step");
    size_t off = v.size() - phi.size();
    for (size_t j = 0; j < phi.size(); ++j) v[off + j] -= c * phi[j];
    while (!v.empty() && v.back() == 0) v.pop_back();
    if (v.empty()) break;
  }
  return v;
}

}  // namespace

Int oracle_sig_equal_rank(const RealForm& rf, const ZVec& lam, long dim_cap) {
  check(z_equal(rf.theta, z_identity(rf.rank())), "equal-rank oracle requires theta = 1 on X*");
  auto pos = standard_positive_system(rf.datum);
  QVec lamq = to_q(lam);
  for (int s : pos.simples)
    check(dot(lamq, rf.datum->coroots[s]) >= 0, "lam must be dominant for the standard system");
  Int dim = weyl_dimension(pos, lamq);
  check(dim <= dim_cap, "Weyl dimension exceeds the cap");
  // grading cocharacter: <alpha_i, x> = g(alpha_i) on the simple roots
  int n = rf.rank();
  QMat rows;
  QVec rhs;
  for (int s : pos.simples) {
    rows.push_back(to_q(rf.datum->roots[s]));
    rhs.push_back(rf.noncompact.at(s) ? Rat(1) : Rat(0));
  }
  // solve rows . x = rhs
  std::vector<QVec> cols(n, QVec(rows.size(), Rat(0)));
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < n; ++c) cols[c][r] = rows[r][c];
  auto x = solve_columns(cols, rhs);
  check(x.has_value(), "grading is not realizable by a rational cocharacter mod 2");
  // verify on all roots
  for (size_t i = 0; i < rf.datum->roots.size(); ++i) {
    Rat v = dotq(to_q(rf.datum->roots[i]), *x);
    require_internal(is_integer(v), "grading cocharacter pairs non-integrally with a root");
    bool odd = (to_int(v) % 2 + 2) % 2 == 1;
    require_internal(odd == rf.noncompact.at(int(i)), "grading cocharacter mismatch on a root");
  }
  // denominators of x determine the cyclotomic order
  long d = 1;
  for (const auto& c : *x) {
    Int den = c.get_den();
    require_internal(den.fits_slong_p(), "cocharacter denominator too large");
    long dl = den.get_si();
    d = d / std::gcd(d, dl) * dl;
  }
  long order = 2 * d;  // zeta = exp(i pi / d)
  auto mults = freudenthal_multiplicities(pos, lam);
  ZPoly s(order, Int(0));
  for (const auto& [mu, mult] : mults) {
    Rat phase = dotq(to_q(mu), *x) * d;  // exponent of zeta
    require_internal(is_integer(phase), "phase exponent not integral");
    Int kz = ((to_int(phase) % order) + order) % order;
    long k = kz.get_si();
    s[k] += mult;
  }
  // N = S * conj(S), conj: zeta^k -> zeta^{-k}
  ZPoly prod(order, Int(0));
  for (long a = 0; a < order; ++a)
    for (long b = 0; b < order; ++b) {
      long k = ((a - b) % order + order) % order;
      prod[k] += s[a] * s[b];
    }
  ZPoly phi = cyclotomic(order);
  ZPoly res = reduce_mod_cyclotomic(prod, phi);
  require_internal(res.size() <= 1, "|S|^2 is not a rational integer");
  Int nsq = res.empty() ? Int(0) : res[0];
  require_internal(nsq >= 0, "|S|^2 negative");
  Int root = sqrt(nsq);
  require_internal(root * root == nsq, "|S|^2 is not a perfect square");
  return root;
}

std::pair<long, long> kernel_signature(const QMat& t, const QMat& s) {
  size_t n = t.size();
  check(s.size() == n, "kernel_signature: size mismatch");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) check(s[i][j] == s[j][i], "S must be symmetric");
  // self-adjointness S T = T^T S
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rat lhs = 0, rhs = 0;
      for (size_t k = 0; k < n; ++k) {
        lhs += s[i][k] * t[k][j];
        rhs += t[k][i] * s[k][j];
      }
      check(lhs == rhs, "T is not self-adjoint for S");
    }
  // purely imaginary spectrum <=> T^2 has nonpositive real spectrum
  QMat t2(n, QVec(n, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) t2[i][j] += t[i][k] * t[k][j];
  check(all_roots_real_nonpositive(char_poly(t2)), "T^2 must have nonpositive spectrum");
  auto [pp, qq, zz] = inertia(s);
  check(zz == 0, "S must be nondegenerate");
  auto kernel = nullspace(t);
  if (kernel.empty()) {
    require_internal(pp == qq, "empty kernel forces P = Q");
    return {0, 0};
  }
  size_t k = kernel.size();
  QMat restricted(k, QVec(k, Rat(0)));
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b) {
      Rat acc = 0;
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) acc += kernel[a][i] * s[i][j] * kernel[b][j];
      restricted[a][b] = acc;
    }
  auto [p1, q1, z1] = inertia(restricted);
  require_internal(z1 == 0, "S degenerates on ker T");
  require_internal(p1 - q1 == pp - qq, "kernel signature does not reproduce P - Q");
  return {p1, q1};
}

}  // namespace sigform
