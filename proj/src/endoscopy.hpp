#pragma once

#include "blocks.hpp"

namespace weylkit {

// Endoscopic datum at s: the centralizer subsystem, its dual (the endoscopic
// group H_s at root-datum level), the component group Gamma_s acting on the
// based datum of H, and the relative pinning (which ambient root each simple
// root of H comes from).
struct EndoscopicDatum {
  SemisimplePoint point;
  RootDatum centralizer_datum;  // (X^*, X_*, Phi_s, Phi_s^vee), based by Delta_s
  RootDatum h_datum;            // dual of the centralizer datum
  StabilizerData stab;
  // relative pinning: for each simple root of h_datum (= coroot in Delta_s^vee),
  // the index in the ambient datum's root list of the root it comes from.
  std::vector<int> relative_pinning;
  // For each Gamma_s element (minimal coset representative), the permutation
  // it induces on delta_s.
  std::vector<std::vector<int>> gamma_on_delta;

  CartanClassification h_type() const { return h_datum.classify(); }
};

RootDatum centralizer_datum(const SemisimplePoint& s, const RootDatum& rd, const WeylGroup& W);

EndoscopicDatum endoscopic_group(const SemisimplePoint& s, const RootDatum& rd,
                                 const WeylGroup& W);

struct LeviCompatReport {
  std::vector<int> levi_simple_subset;
  bool phi_s_match = false;        // Phi_s(L) = Phi_s(G) cap Phi(L)
  bool gamma_map_defined = false;  // W_s^{o,L} subset of W_s^{o,G}, cosets map
  bool gamma_map_homomorphism = false;
  bool h_levi_subdatum = false;  // Phi_s^L = Phi_s^G cap span(Phi_s^L)
  i64 gamma_l_order = 0;
  i64 gamma_g_order = 0;
};

// Checks compatibility of the endoscopic construction with a standard Levi
// given by a subset of simple indices; throws CompatibilityFailure on any
// failed check.
LeviCompatReport levi_compatibility(const SemisimplePoint& s, const RootDatum& rd,
                                    const WeylGroup& W, const std::vector<int>& simple_subset);

}  // namespace weylkit
