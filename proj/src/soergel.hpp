#pragma once

#include "blocks.hpp"
#include "poly.hpp"

namespace weylkit {

// Graded polynomial surrogate of the completed torus monodromy ring: the
// symmetric algebra on X_* (x) Q, with W acting through the cocharacter
// representation. Simple coroots are degree-1 elements.
class SoergelContext {
 public:
  SoergelContext(const RootDatum& rd, const WeylGroup& W) : rd_(&rd), w_(&W) {}

  const RootDatum& datum() const { return *rd_; }
  const WeylGroup& weyl() const { return *w_; }
  int nvars() const { return rd_->rank(); }

  Poly coroot_poly(int root_index) const {
    return Poly::linear(rd_->coroots()[root_index]);
  }
  // w acting on polynomials via the cocharacter matrix.
  Poly act(int w, const Poly& f) const { return f.linear_substitute(w_->cochar_matrix(w)); }

  // Demazure operator for any root: (f - s_alpha f) / alpha^vee.
  Poly demazure(int root_index, const Poly& f) const;

 private:
  const RootDatum* rd_;
  const WeylGroup* w_;
};

struct InvariantRankReport {
  i64 rank = 0;               // |W'|
  std::vector<int> degrees;   // fundamental degrees of W', sorted
  std::vector<std::string> factor_labels;
  bool hilbert_series_verified = false;  // Poincare polynomial identity
};

// Rank of R over R^{W'} for the reflection subgroup generated by the given
// simple subsystem (ambient root indices), cross-certified by the
// length-generating-function identity prod (1 - t^{d_i}) / (1 - t)^{rank}.
InvariantRankReport invariant_rank(const SoergelContext& ctx,
                                   const std::vector<int>& sub_simple_roots);

enum class SteinbergBasis { DescentProducts, DualDescentProducts };

struct SteinbergReport {
  SteinbergBasis basis_used = SteinbergBasis::DescentProducts;
  bool retried = false;
  Poly determinant;
  int det_degree = 0;
  std::vector<i64> denominator_primes;
};

// det(v(e_w))_{v,w in W'} for the descent-product basis, with the dual basis
// as a fallback; throws BasisNotSteinberg if both degenerate. Supports
// subsystems of rank <= 2 (A1, A1xA1, A2, B2).
SteinbergReport steinberg_det(const SoergelContext& ctx,
                              const std::vector<int>& sub_simple_roots,
                              SteinbergBasis basis = SteinbergBasis::DescentProducts);

// A finitely generated graded (R, R)-bimodule, free as a left module with the
// given homogeneous basis, the right action given by commuting matrices.
struct GradedBimodule {
  SemisimplePoint source;  // left endpoint (the module lives on C_[source,target])
  SemisimplePoint target;
  std::vector<int> degrees;              // left basis degrees
  std::vector<PolyMat> right_action;     // one rank x rank matrix per variable
  std::vector<std::vector<Poly>> right_basis;  // candidate right basis, left coords
  std::vector<int> support;              // Weyl elements whose graphs carry the module

  int rank() const { return int(degrees.size()); }
};

// Elementary Bott-Samelson object at a simple reflection: the wall case
// (alpha in Phi_s) gives the rank-2 bimodule R (x)_{R^s} R; otherwise the
// rank-1 graph of the reflection.
GradedBimodule bs_elementary(const SoergelContext& ctx, int simple_index,
                             const SemisimplePoint& s);

// Convolution M (x)_R N. Checks endpoint compatibility, homogeneity,
// commutation of the right action, and certifies two-sided freeness.
GradedBimodule bs_convolve(const SoergelContext& ctx, const GradedBimodule& m,
                           const GradedBimodule& n);

// Bott-Samelson along a word (left-to-right, letters acting on s from the
// right as in BS(w_1, w_2...w_n s) * ... * BS(w_n, s)).
GradedBimodule bs_word(const SoergelContext& ctx, const std::vector<int>& word,
                       const SemisimplePoint& s);

// Certifies that the candidate right basis is a genuine right basis: the
// degrees match the left degrees, every left basis element lies in its right
// span, and the span is stable under left multiplication by the variables.
// Together with the Hilbert-series equality this proves right-freeness.
void certify_right_freeness(const GradedBimodule& m);

// The minimal-element Bott-Samelson of a block is the rank-1 twist by w_beta:
// verifies the no-wall prefix condition and the resulting graph structure.
bool graph_block_check(const SoergelContext& ctx, const Block& beta);

struct ReducednessReport {
  bool applicable = false;  // wall case only; the twist case is trivially reduced
  bool squarefree = false;
  Poly char_poly;  // in rank+1 variables, last variable is the auxiliary t
};

// A1 toy of the reducedness statement: the quadric t^2 - (alpha^vee)^2 cut
// out by R (x)_{R^{A1}} R is squarefree, i.e. splits into two distinct
// linear factors.
ReducednessReport reducedness_toy(const SoergelContext& ctx, int simple_index,
                                  const SemisimplePoint& s);

}  // namespace weylkit
