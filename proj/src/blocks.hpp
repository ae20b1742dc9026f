#pragma once

#include "sspoints.hpp"

namespace weylkit {

// A block: one W_s^circ-coset inside the transporter {w : w s' = s}, with its
// unique Bruhat-minimal and -maximal members.
struct Block {
  SemisimplePoint source;  // s
  SemisimplePoint target;  // s'
  std::vector<int> members;  // sorted element indices
  int w_min = -1;
  int w_max = -1;

  friend bool operator==(const Block& a, const Block& b) {
    return a.source == b.source && a.target == b.target && a.members == b.members;
  }
};

// {w in W : w s' = s}, sorted.
std::vector<int> transporter(const SemisimplePoint& s, const SemisimplePoint& t,
                             const WeylGroup& W);

// Partition of the transporter into left W_s^circ-cosets. Verifies the
// left = right coset identity, the unique min/max property, and
// |block| = |W_s^circ|. Empty when s, s' are not in one orbit.
std::vector<Block> block_decomposition(const SemisimplePoint& s, const SemisimplePoint& t,
                                       const WeylGroup& W);

// The unique block containing all products w w' (w in beta, w' in gamma).
// Verifies that the products do not scatter and that the min/max identities
// w_beta w_gamma = w_{beta gamma}, w_beta w^gamma = w^{beta gamma} hold.
Block compose_blocks(const Block& beta, const Block& gamma, const WeylGroup& W);

// The groupoid Xi restricted to one W-orbit: objects are the orbit points,
// hom-sets are block decompositions.
struct BlockGroupoid {
  std::vector<SemisimplePoint> objects;  // sorted orbit
  // homs[a][b] = blocks from objects[a] to objects[b] (i.e. source a, target b).
  std::vector<std::vector<std::vector<Block>>> homs;
  // composition[a][b][c][i][j] = index in homs[a][c] of homs[a][b][i] o homs[b][c][j].
  std::vector<std::vector<std::vector<std::vector<std::vector<int>>>>> composition;

  int object_index(const SemisimplePoint& p) const;
  // Index of the block in homs[a][b] equal to the given member set.
  int block_index(int a, int b, const std::vector<int>& members) const;
  int identity_block(int a, const WeylGroup& W) const;
};

// Builds all hom-sets and checks: identity behavior, associativity over all
// composable triples, and the simply-transitive (Gamma_s, Gamma_t) bitorsor
// structure of every hom-set.
BlockGroupoid build_groupoid(const std::vector<SemisimplePoint>& orbit_points,
                             const WeylGroup& W);

}  // namespace weylkit
