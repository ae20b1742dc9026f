#pragma once

#include <optional>
#include <string>

#include "intmat.hpp"

namespace weylkit {

// One irreducible factor of a Cartan matrix, as a catalogue label.
struct CartanFactor {
  char letter = 'A';  // A..G
  int rank = 0;
  std::string alias;  // "B2" on the C2 factor; empty otherwise

  std::string label() const { return std::string(1, letter) + std::to_string(rank); }
  friend bool operator==(const CartanFactor&, const CartanFactor&) = default;
};

struct CartanClassification {
  std::vector<CartanFactor> components;  // sorted by label
  int central_torus_rank = 0;
};

// Based root datum (X^*, X_*, Phi, Phi^vee, Delta, Delta^vee) with both
// lattices realized as Z^n and the dot-product pairing. Roots live in X^*,
// coroots in X_*, paired index by index.
class RootDatum {
 public:
  // Generates the full root system from simple data by reflection closure.
  static RootDatum build(int rank, const std::vector<Vec>& simple_roots,
                         const std::vector<Vec>& simple_coroots,
                         const std::string& name = "");
  // Named constructors: GLn, SLn, PGLn, Sp4, SO5, SL2xSL2, G2, Tn.
  static RootDatum builtin(const std::string& name);
  static bool is_builtin_name(const std::string& name);

  int rank() const { return rank_; }
  const std::string& name() const { return name_; }
  int num_roots() const { return int(roots_.size()); }
  const std::vector<Vec>& roots() const { return roots_; }
  const std::vector<Vec>& coroots() const { return coroots_; }
  const std::vector<int>& simple_indices() const { return simple_; }
  int num_simple() const { return int(simple_.size()); }
  const Vec& simple_root(int i) const { return roots_[simple_[i]]; }
  const Vec& simple_coroot(int i) const { return coroots_[simple_[i]]; }
  bool is_positive(int root_index) const { return positive_[root_index]; }
  // Coordinates of a root in the simple-root basis (integers, all >= 0 or all <= 0).
  const Vec& simple_coords(int root_index) const { return simple_coords_[root_index]; }
  int root_index(const Vec& root) const;  // -1 if absent

  static i64 pair(const Vec& x, const Vec& lambda);

  // <alpha_i, alpha_j^vee> over the simple system.
  IntMat cartan_matrix() const;
  // Reflection in the given root, acting on X^* (characters).
  IntMat reflection_char(int root_index) const;
  // Same reflection on X_* (cocharacters). For a reflection this is the
  // transpose of the character matrix.
  IntMat reflection_cochar(int root_index) const;

  RootDatum dual(const std::string& new_name = "") const;
  RootDatum levi(const std::vector<int>& simple_subset, const std::string& new_name = "") const;
  // Subdatum with the given subset of root indices as Phi and a simple system
  // computed by the not-a-sum-of-two-positives criterion. Used for Phi_s.
  RootDatum subdatum(const std::vector<int>& root_indices, const std::string& new_name = "") const;

  CartanClassification classify() const;

  struct FundamentalGroupInfo {
    std::vector<i64> invariant_factors;  // torsion, > 1
    i64 torsion_order = 1;
    int free_rank = 0;  // rank of the free part of X_* / Z Phi^vee
  };
  enum class Pi1Mode { Derived, Full };
  // Derived: (X_* cap Q Phi^vee) / Z Phi^vee = torsion of X_*/Z Phi^vee.
  // Full: torsion part of X_*/Z Phi^vee plus its free rank.
  FundamentalGroupInfo fundamental_group(Pi1Mode mode) const;

  // Re-checks every invariant; throws ValidationFailure with a description.
  void validate() const;

  friend bool operator==(const RootDatum&, const RootDatum&) = default;

 private:
  int rank_ = 0;
  std::string name_;
  std::vector<Vec> roots_;
  std::vector<Vec> coroots_;
  std::vector<int> simple_;
  std::vector<bool> positive_;
  std::vector<Vec> simple_coords_;

  void index_roots();  // fills positive_ / simple_coords_, checks basedness
};

// Maximum number of roots tolerated during reflection closure: twice the
// E8 count, as a finite-type safety bound.
inline constexpr int kMaxRoots = 480;

}  // namespace weylkit
