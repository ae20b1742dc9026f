#pragma once

#include "rationality.hpp"

namespace weylkit {

// T^{wF} as the cokernel of (wF - 1) acting on the cocharacter lattice.
struct FixedTorus {
  int w = 0;
  std::vector<i64> diagonal;           // full SNF diagonal (may contain 1s)
  std::vector<i64> invariant_factors;  // > 1 only
  i64 order = 1;
};

// Computes coker(wF - 1 on X_*) and cross-checks |coker| = |det(wF - 1)| =
// |Fix(wF) on the dual side|.
FixedTorus fixed_torus(int w, const FrobeniusDatum& fr, const WeylGroup& W);

// Theorem-shadow of the Gelfand-Graev restriction: the rank |T^{wF}| of the
// free module and the homological shift magnitude ell(w).
struct GgShadow {
  i64 rank = 0;
  int shift = 0;
};
GgShadow gg_restriction_shadow(int w, const FrobeniusDatum& fr, const WeylGroup& W);

// The spectral Curtis data: for each w, the partition of Fix(wF) by
// geometric class, with the injectivity certificate.
struct CurtisTable {
  std::vector<GeometricClass> classes;
  // per_w_images[w][c] = points of Fix(wF) lying in classes[c].
  std::vector<std::vector<std::vector<SemisimplePoint>>> per_w_images;
  // witness[c] = some w with a nonempty image for class c.
  std::vector<int> injectivity_witness;
  bool injective = false;
};

CurtisTable curtis_spectral(const FrobeniusDatum& fr, const WeylGroup& W);

// Point-level comparison X // W = (T^vee // W)^{F^vee}: the W-orbits of
// X = union_w Fix(wF) against the F-stable orbits of torsion points.
struct XOrbitReport {
  i64 x_point_count = 0;
  i64 x_orbit_count = 0;
  i64 fixed_orbit_count = 0;  // = number of geometric classes
  bool bijective = false;
};

XOrbitReport x_orbit_bijection(const FrobeniusDatum& fr, const WeylGroup& W);

}  // namespace weylkit
