#pragma once

#include "endoscopy.hpp"

namespace weylkit {

inline constexpr int kMaxTauOrder = 24;

// F = q tau on X^*, with tau a finite-order automorphism of the based datum.
class FrobeniusDatum {
 public:
  static FrobeniusDatum build(const RootDatum& rd, i64 q, const IntMat& tau);
  // Named tau: "id"; "swap"/"unitary" = the duality automorphism -w0 for
  // irreducible A-type data and the factor swap for SL2xSL2.
  static IntMat named_tau(const RootDatum& rd, const std::string& name);

  const RootDatum& datum() const { return *rd_; }
  i64 q() const { return q_; }
  i64 p() const { return p_; }
  int tau_order() const { return tau_order_; }
  const IntMat& tau_char() const { return tau_char_; }
  const IntMat& tau_cochar() const { return tau_cochar_; }
  IntMat f_char() const { return tau_char_.scaled(q_); }
  IntMat f_cochar() const { return tau_cochar_.scaled(q_); }

  SemisimplePoint apply(const SemisimplePoint& s) const {
    return SemisimplePoint(f_char().apply(s.coords));
  }
  // tau as a permutation of W: w -> tau w tau^{-1}.
  int twist_weyl(const WeylGroup& W, int w) const;

 private:
  const RootDatum* rd_ = nullptr;
  i64 q_ = 0, p_ = 0;
  int tau_order_ = 1;
  IntMat tau_char_, tau_cochar_;
};

// All solutions of (w F - 1) s = 0 in (Q/Z)^n, via Smith normal form.
// |result| = |det(w F_char - 1)|.
std::vector<SemisimplePoint> fixed_points(int w, const FrobeniusDatum& fr, const WeylGroup& W);

struct GeometricClass {
  SemisimplePoint rep;                    // lexicographically least orbit member
  std::vector<SemisimplePoint> members;   // the full W-orbit (of ell'-parts in Zbar mode)
  bool f_stable = false;                  // always true for enumerated classes
};

// W-orbits of the union of Fix(wF) over w in W. In Zbar mode every point is
// replaced by its ell'-part before forming orbits.
std::vector<GeometricClass> geometric_classes(const FrobeniusDatum& fr, const WeylGroup& W,
                                              const CoeffMode& mode);

struct FiniteAbelianGroupDesc {
  std::vector<i64> invariant_factors;  // > 1 only
  i64 order = 1;
};

struct RationalClassReport {
  SemisimplePoint geometric_rep;
  bool stable = false;
  i64 rational_count = 0;           // orbits of Ad_F(Gamma_s) on the block set
  bool h1_applies = false;          // an F-fixed point exists in the orbit
  SemisimplePoint h1_point;         // that point, when it exists
  FiniteAbelianGroupDesc h1_structure;
  i64 twisted_orbit_count = 0;      // the block-quotient count (always computed)
};

// Rational refinement of the geometric class of s. Uses the block-quotient
// description always; when the orbit has an F-fixed point, also computes
// H^1(F, Gamma_s) there and cross-checks the counts.
RationalClassReport rational_classes(const SemisimplePoint& s, const FrobeniusDatum& fr,
                                     const WeylGroup& W);

struct PrimeTables {
  std::vector<i64> bad_primes;
  std::vector<i64> torsion_primes;
  i64 pi1_full_torsion_order = 1;
  bool condition_l(i64 ell) const;
};

PrimeTables prime_tables(const RootDatum& rd);

// s = s_ell' + s_ell with coprime orders, by CRT per coordinate.
struct EllParts {
  SemisimplePoint ell_prime;  // order prime to ell
  SemisimplePoint ell_part;   // order a power of ell
};
EllParts ell_part(const SemisimplePoint& s, i64 ell);

struct InnerFormLabel {
  int gamma_index = 0;                  // H^1 class representative in Gamma_s
  std::vector<int> base_block_members;  // the chosen block beta
  std::string label;                    // printable "gamma^k . F_beta"
};

// Inner forms H^{gamma F_beta} indexed by H^1(F_beta, Gamma_s), for the
// deterministic base block (the one containing the Bruhat-minimal transporter
// element). The count matches rational_classes.
std::vector<InnerFormLabel> inner_forms(const SemisimplePoint& s, const FrobeniusDatum& fr,
                                        const WeylGroup& W);

// Verifies that the twisted root-system automorphism w_beta tau preserves
// (Phi_s, Delta_s); returns the permutation induced on delta_s.
std::vector<int> twisted_frobenius_on_delta(const SemisimplePoint& s, const FrobeniusDatum& fr,
                                            const WeylGroup& W);

}  // namespace weylkit
