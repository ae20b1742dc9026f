#include "weyl.hpp"

#include <algorithm>
#include <set>

namespace weylkit {

WeylGroup WeylGroup::enumerate(const RootDatum& rd, i64 cap) {
  WeylGroup g;
  g.rd_ = &rd;
  g.gens_ = rd.num_simple();
  int n = rd.rank();

  std::vector<IntMat> gen_mats;
  for (int i = 0; i < g.gens_; ++i) gen_mats.push_back(rd.reflection_char(rd.simple_indices()[i]));

  auto push = [&](const IntMat& m, std::vector<int> word) {
    g.index_[m.data()] = int(g.mats_.size());
    g.mats_.push_back(m);
    g.words_.push_back(std::move(word));
  };
  push(IntMat::identity(n), {});

  // Level-by-level closure; parents are visited in lexicographic word order,
  // generators in increasing order, so the first discovery of an element
  // carries its lexicographically smallest reduced word.
  size_t level_begin = 0;
  while (level_begin < g.mats_.size()) {
    size_t level_end = g.mats_.size();
    for (size_t w = level_begin; w < level_end; ++w) {
      for (int i = 0; i < g.gens_; ++i) {
        IntMat m = g.mats_[w] * gen_mats[i];
        if (g.index_.count(m.data())) continue;
        std::vector<int> word = g.words_[w];
        word.push_back(i);
        push(m, std::move(word));
        if (i64(g.mats_.size()) > cap)
          fail(Errc::GroupTooLarge,
               "Weyl group exceeds cap " + std::to_string(cap));
      }
    }
    level_begin = level_end;
  }

  int order = int(g.mats_.size());
  g.right_.assign(order, std::vector<int>(std::max(g.gens_, 1), -1));
  g.left_.assign(order, std::vector<int>(std::max(g.gens_, 1), -1));
  g.inv_.assign(order, -1);
  g.cochar_mats_.reserve(order);
  for (int w = 0; w < order; ++w) {
    for (int i = 0; i < g.gens_; ++i) {
      g.right_[w][i] = g.index_.at((g.mats_[w] * gen_mats[i]).data());
      g.left_[w][i] = g.index_.at((gen_mats[i] * g.mats_[w]).data());
    }
    g.cochar_mats_.push_back(g.mats_[w].inverse_transpose());
    g.inv_[w] = g.index_.at(g.mats_[w].inverse_unimodular().data());
  }
  return g;
}

int WeylGroup::mult(int u, int v) const {
  int w = u;
  for (int i : words_[v]) w = right_[w][i];
  return w;
}

int WeylGroup::index_of(const IntMat& m) const {
  auto it = index_.find(m.data());
  return it == index_.end() ? -1 : it->second;
}

int WeylGroup::reflection(int root_index) const {
  int idx = index_of(rd_->reflection_char(root_index));
  if (idx < 0) fail(Errc::ValidationFailure, "reflection not found in Weyl group");
  return idx;
}

int WeylGroup::longest_element() const {
  int best = 0;
  int count_max = 0;
  for (int w = 0; w < order(); ++w) {
    if (length(w) > length(best)) best = w;
  }
  for (int w = 0; w < order(); ++w)
    if (length(w) == length(best)) ++count_max;
  if (count_max != 1) fail(Errc::ValidationFailure, "longest element is not unique");
  return best;
}

bool WeylGroup::bruhat_leq(int u, int w) const {
  // Standard recursion via the lifting property, consuming a reduced word of
  // w from the left.
  while (true) {
    if (u == 0) return true;
    if (w == 0) return false;
    int s = words_[w].front();
    int su = left_[u][s];
    int sw = left_[w][s];  // shorter than w since s starts a reduced word
    if (length(su) < length(u)) u = su;
    w = sw;
  }
}

std::vector<int> WeylGroup::subgroup_closure(const std::vector<int>& generators) const {
  std::set<int> members{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int w : frontier)
      for (int gen : generators) {
        int p = mult(w, gen);
        if (members.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return std::vector<int>(members.begin(), members.end());
}

}  // namespace weylkit
