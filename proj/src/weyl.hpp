#pragma once

#include <map>
#include <optional>

#include "rootdata.hpp"

namespace weylkit {

// Default enumeration cap: the order of W(E6).
inline constexpr i64 kDefaultWeylCap = 51840;

// The Weyl group of a based root datum, fully enumerated. Elements are
// indexed 0..order-1 with 0 = identity; each stores its matrix on X^*, the
// lexicographically smallest reduced word, and its length.
class WeylGroup {
 public:
  static WeylGroup enumerate(const RootDatum& rd, i64 cap = kDefaultWeylCap);

  const RootDatum& datum() const { return *rd_; }
  int order() const { return int(mats_.size()); }
  int num_generators() const { return gens_; }

  const IntMat& matrix(int w) const { return mats_[w]; }
  const std::vector<int>& word(int w) const { return words_[w]; }
  int length(int w) const { return int(words_[w].size()); }

  int identity() const { return 0; }
  int simple(int i) const { return right_[0][i]; }
  int mult_simple_right(int w, int i) const { return right_[w][i]; }
  int mult_simple_left(int i, int w) const { return left_[w][i]; }
  int mult(int u, int v) const;
  int inverse(int w) const { return inv_[w]; }
  int index_of(const IntMat& m) const;  // -1 if not in the group

  // Index of the reflection with the given matrix; requires membership.
  int reflection(int root_index) const;

  int longest_element() const;

  bool bruhat_leq(int u, int w) const;

  // Action on characters (X^*) and on torsion points of X^* (x) Q/Z.
  Vec act_char(int w, const Vec& x) const { return mats_[w].apply(x); }
  std::vector<Frac> act_point(int w, const std::vector<Frac>& s) const {
    return mats_[w].apply(s);
  }
  // Action on cocharacters: inverse transpose.
  Vec act_cochar(int w, const Vec& lam) const { return cochar_mats_[w].apply(lam); }
  const IntMat& cochar_matrix(int w) const { return cochar_mats_[w]; }

  // Subgroup closure of the given element indices, as a sorted index list.
  std::vector<int> subgroup_closure(const std::vector<int>& generators) const;

 private:
  const RootDatum* rd_ = nullptr;
  int gens_ = 0;
  std::vector<IntMat> mats_;
  std::vector<IntMat> cochar_mats_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<int>> right_;  // right_[w][i] = w * s_i
  std::vector<std::vector<int>> left_;   // left_[w][i] = s_i * w
  std::vector<int> inv_;
  std::map<std::vector<i64>, int> index_;
};

}  // namespace weylkit
