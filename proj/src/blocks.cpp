#include "blocks.hpp"

#include <algorithm>

namespace weylkit {

std::vector<int> transporter(const SemisimplePoint& s, const SemisimplePoint& t,
                             const WeylGroup& W) {
  std::vector<int> out;
  for (int w = 0; w < W.order(); ++w)
    if (SemisimplePoint(W.act_point(w, t.coords)) == s) out.push_back(w);
  return out;
}

std::vector<Block> block_decomposition(const SemisimplePoint& s, const SemisimplePoint& t,
                                       const WeylGroup& W) {
  std::vector<int> trans = transporter(s, t, W);
  if (trans.empty()) return {};

  StabilizerData st_s = stabilizer_data(s, W);
  StabilizerData st_t = stabilizer_data(t, W);

  std::vector<Block> blocks;
  std::set<int> assigned;
  for (int w : trans) {
    if (assigned.count(w)) continue;
    Block b;
    b.source = s;
    b.target = t;
    for (int h : st_s.w_s_circ) b.members.push_back(W.mult(h, w));
    std::sort(b.members.begin(), b.members.end());
    // Left W_s^circ-coset must equal the right W_t^circ-coset.
    std::vector<int> right;
    for (int h : st_t.w_s_circ) right.push_back(W.mult(w, h));
    std::sort(right.begin(), right.end());
    if (b.members != right)
      fail(Errc::ValidationFailure, "left and right coset descriptions of a block disagree");
    if (b.members.size() != st_s.w_s_circ.size())
      fail(Errc::ValidationFailure, "block size differs from |W_s_circ|");
    for (int x : b.members) assigned.insert(x);

    // Unique Bruhat minimum and maximum via exhaustive comparison.
    std::vector<int> minima, maxima;
    for (int u : b.members) {
      bool is_min = true, is_max = true;
      for (int v : b.members) {
        if (!W.bruhat_leq(u, v)) is_min = false;
        if (!W.bruhat_leq(v, u)) is_max = false;
      }
      if (is_min) minima.push_back(u);
      if (is_max) maxima.push_back(u);
    }
    if (minima.size() != 1 || maxima.size() != 1)
      fail(Errc::NoUniqueExtremum, "block lacks a unique Bruhat minimum or maximum");
    b.w_min = minima[0];
    b.w_max = maxima[0];
    blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.members < b.members; });
  return blocks;
}

Block compose_blocks(const Block& beta, const Block& gamma, const WeylGroup& W) {
  if (beta.target != gamma.source)
    fail(Errc::NotComposable, "target of first block differs from source of second");
  std::set<int> products;
  for (int w : beta.members)
    for (int v : gamma.members) products.insert(W.mult(w, v));

  std::vector<Block> decomposition = block_decomposition(beta.source, gamma.target, W);
  const Block* found = nullptr;
  for (const Block& b : decomposition) {
    bool contains_all = std::includes(b.members.begin(), b.members.end(), products.begin(),
                                      products.end());
    bool contains_any =
        std::any_of(products.begin(), products.end(), [&](int w) {
          return std::binary_search(b.members.begin(), b.members.end(), w);
        });
    if (contains_any && !contains_all)
      fail(Errc::ProductNotBlock, "block products scatter across blocks");
    if (contains_all) found = &b;
  }
  if (!found) fail(Errc::ProductNotBlock, "products landed in no block");
  if (found->w_min != W.mult(beta.w_min, gamma.w_min))
    fail(Errc::ProductNotBlock, "w_beta w_gamma != w_{beta gamma}");
  if (found->w_max != W.mult(beta.w_min, gamma.w_max))
    fail(Errc::ProductNotBlock, "w_beta w^gamma != w^{beta gamma}");
  return *found;
}

int BlockGroupoid::object_index(const SemisimplePoint& p) const {
  auto it = std::lower_bound(objects.begin(), objects.end(), p);
  if (it == objects.end() || !(*it == p)) return -1;
  return int(it - objects.begin());
}

int BlockGroupoid::block_index(int a, int b, const std::vector<int>& members) const {
  const auto& hs = homs[a][b];
  for (size_t i = 0; i < hs.size(); ++i)
    if (hs[i].members == members) return int(i);
  return -1;
}

int BlockGroupoid::identity_block(int a, const WeylGroup& W) const {
  for (size_t i = 0; i < homs[a][a].size(); ++i) {
    const Block& b = homs[a][a][i];
    if (std::binary_search(b.members.begin(), b.members.end(), W.identity())) return int(i);
  }
  fail(Errc::ValidationFailure, "no identity block");
}

BlockGroupoid build_groupoid(const std::vector<SemisimplePoint>& orbit_points,
                             const WeylGroup& W) {
  BlockGroupoid g;
  g.objects = orbit_points;
  std::sort(g.objects.begin(), g.objects.end());
  int n = int(g.objects.size());
  g.homs.assign(n, std::vector<std::vector<Block>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      g.homs[a][b] = block_decomposition(g.objects[a], g.objects[b], W);
      if (g.homs[a][b].empty())
        fail(Errc::ValidationFailure, "orbit points admit no transporter");
    }

  // Hom-set sizes: |hom(a,b)| = |Gamma_a| = |Gamma_b|.
  std::vector<size_t> gamma_sizes(n);
  for (int a = 0; a < n; ++a) gamma_sizes[a] = g.homs[a][a].size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.homs[a][b].size() != gamma_sizes[a] || g.homs[a][b].size() != gamma_sizes[b])
        fail(Errc::ValidationFailure, "hom-set size differs from |Gamma|");

  // Composition table, with every entry verified against the full product-set
  // and min/max identities.
  g.composition.assign(
      n, std::vector<std::vector<std::vector<std::vector<int>>>>(
             n, std::vector<std::vector<std::vector<int>>>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        auto& table = g.composition[a][b][c];
        table.assign(g.homs[a][b].size(), std::vector<int>(g.homs[b][c].size(), -1));
        for (size_t i = 0; i < g.homs[a][b].size(); ++i)
          for (size_t j = 0; j < g.homs[b][c].size(); ++j) {
            std::set<int> products;
            const Block& x = g.homs[a][b][i];
            const Block& y = g.homs[b][c][j];
            for (int w : x.members)
              for (int v : y.members) products.insert(W.mult(w, v));
            int found = -1;
            for (size_t k = 0; k < g.homs[a][c].size(); ++k) {
              const Block& z = g.homs[a][c][k];
              bool all = std::includes(z.members.begin(), z.members.end(), products.begin(),
                                       products.end());
              bool any = std::any_of(products.begin(), products.end(), [&](int w) {
                return std::binary_search(z.members.begin(), z.members.end(), w);
              });
              if (any && !all)
                fail(Errc::ProductNotBlock, "block products scatter across blocks");
              if (all) found = int(k);
            }
            if (found < 0) fail(Errc::ProductNotBlock, "products landed in no block");
            const Block& z = g.homs[a][c][found];
            if (z.w_min != W.mult(x.w_min, y.w_min) || z.w_max != W.mult(x.w_min, y.w_max))
              fail(Errc::ProductNotBlock, "min/max identities fail in composition table");
            table[i][j] = found;
          }
      }

  // Identity blocks act as identities.
  for (int a = 0; a < n; ++a) {
    int id = g.identity_block(a, W);
    for (int b = 0; b < n; ++b) {
      for (size_t i = 0; i < g.homs[a][b].size(); ++i)
        if (g.composition[a][a][b][id][i] != int(i))
          fail(Errc::ValidationFailure, "identity block does not act as left identity");
      for (size_t i = 0; i < g.homs[b][a].size(); ++i)
        if (g.composition[b][a][a][i][id] != int(i))
          fail(Errc::ValidationFailure, "identity block does not act as right identity");
    }
  }

  // Associativity on all composable triples, via the table.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (size_t i = 0; i < g.homs[a][b].size(); ++i)
            for (size_t j = 0; j < g.homs[b][c].size(); ++j)
              for (size_t k = 0; k < g.homs[c][d].size(); ++k) {
                int xy = g.composition[a][b][c][i][j];
                int yz = g.composition[b][c][d][j][k];
                if (g.composition[a][c][d][xy][k] != g.composition[a][b][d][i][yz])
                  fail(Errc::ValidationFailure, "block composition is not associative");
              }

  // Simple transitivity of the left Gamma action on each hom-set.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (size_t i = 0; i < g.homs[a][b].size(); ++i)
        for (size_t i2 = 0; i2 < g.homs[a][b].size(); ++i2) {
          int count = 0;
          for (size_t gam = 0; gam < g.homs[a][a].size(); ++gam)
            if (g.composition[a][a][b][gam][i] == int(i2)) ++count;
          if (count != 1)
            fail(Errc::ValidationFailure, "hom-set is not a simply transitive Gamma-set");
        }
  return g;
}

}  // namespace weylkit
