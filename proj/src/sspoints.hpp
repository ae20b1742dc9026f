#pragma once

#include <set>

#include "weyl.hpp"

namespace weylkit {

// A torsion point of X^* (x) Q/Z: a semisimple parameter of the dual group.
struct SemisimplePoint {
  std::vector<Frac> coords;

  SemisimplePoint() = default;
  explicit SemisimplePoint(std::vector<Frac> c) : coords(std::move(c)) {}
  static SemisimplePoint zero(int rank) { return SemisimplePoint(std::vector<Frac>(rank)); }
  static SemisimplePoint parse(const std::string& text);  // "a/n,b/m,..."

  int rank() const { return int(coords.size()); }
  i64 order() const;
  bool is_zero() const;
  std::string str() const;
  std::vector<std::string> str_coords() const;

  friend bool operator==(const SemisimplePoint&, const SemisimplePoint&) = default;
  friend auto operator<=>(const SemisimplePoint&, const SemisimplePoint&) = default;
};

// Coefficient ring bookkeeping: which torsion orders are admissible.
struct CoeffMode {
  enum class Ring { QlBar, ZlBar } ring = Ring::QlBar;
  i64 p = 0;    // residue characteristic; 0 = unconstrained
  i64 ell = 0;  // only meaningful in ZlBar mode

  static CoeffMode qlbar(i64 p = 0) { return {Ring::QlBar, p, 0}; }
  static CoeffMode zlbar(i64 p, i64 ell) { return {Ring::ZlBar, p, ell}; }
  bool is_integral() const { return ring == Ring::ZlBar; }
  // Throws CoprimalityViolation when the order is not allowed.
  void check_order(i64 order) const;
};

Frac coroot_eval(const SemisimplePoint& s, const Vec& coroot);

// Phi_s, Delta_s, W_s, W_s^circ and the component group Gamma_s = W_s/W_s^circ.
struct StabilizerData {
  SemisimplePoint point;
  std::vector<int> phi_s;        // indices into datum roots (coroots vanishing on s)
  std::vector<int> delta_s;      // subset of phi_s: the simple system of Phi_s^+
  std::vector<int> w_s;          // sorted element indices of Stab_W(s)
  std::vector<int> w_s_circ;     // sorted element indices of the reflection subgroup
  // Gamma_s: cosets of W_s_circ in W_s. reps[i] is the minimal-index member;
  // table[i][j] = index of the coset containing reps[i]*reps[j].
  std::vector<int> gamma_reps;
  std::vector<std::vector<int>> gamma_table;

  int gamma_order() const { return int(gamma_reps.size()); }
  int coset_of(int w, const WeylGroup& W) const;  // Gamma_s index of w in W_s
};

StabilizerData stabilizer_data(const SemisimplePoint& s, const WeylGroup& W);

struct GammaBoundReport {
  i64 gamma_order = 1;
  i64 pi1_dual_derived_order = 1;
  bool divides = false;
};

// Checks |Gamma_s| divides |pi1(dual datum, derived)|; throws BoundViolated
// on failure.
GammaBoundReport check_gamma_bound(const SemisimplePoint& s, const RootDatum& rd,
                                   const WeylGroup& W);

inline constexpr i64 kDefaultPointSearchCap = 20'000'000;

// All points of order dividing order_bound, sorted; optionally only the
// lexicographically least representative of each W-orbit.
std::vector<SemisimplePoint> enumerate_points(const RootDatum& rd, i64 order_bound,
                                              const CoeffMode& mode, const WeylGroup* W,
                                              bool orbit_reps_only,
                                              i64 cap = kDefaultPointSearchCap);

// The W-orbit of s, sorted.
std::vector<SemisimplePoint> orbit(const SemisimplePoint& s, const WeylGroup& W);
SemisimplePoint orbit_rep(const SemisimplePoint& s, const WeylGroup& W);

}  // namespace weylkit
