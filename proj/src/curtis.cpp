#include "curtis.hpp"

#include <algorithm>

namespace weylkit {

FixedTorus fixed_torus(int w, const FrobeniusDatum& fr, const WeylGroup& W) {
  const RootDatum& rd = fr.datum();
  int n = rd.rank();
  FixedTorus out;
  out.w = w;
  IntMat a = W.cochar_matrix(w) * fr.f_cochar() - IntMat::identity(n);
  i64 det = a.det();
  if (det == 0) fail(Errc::SingularFixedLocus, "wF - 1 singular on X_*");
  auto snf = smith_normal_form(a);
  out.diagonal = snf.diagonal;
  for (i64 d : out.diagonal) {
    if (d > 1) out.invariant_factors.push_back(d);
    out.order *= d;
  }
  i64 abs_det = det < 0 ? -det : det;
  if (out.order != abs_det)
    fail(Errc::CountMismatch, "|coker(wF-1)| differs from |det(wF-1)|");
  // Character/cocharacter duality of counts.
  if (out.order != i64(fixed_points(w, fr, W).size()))
    fail(Errc::CountMismatch, "|T^{wF}| differs from |Fix(wF) on the dual side|");
  return out;
}

GgShadow gg_restriction_shadow(int w, const FrobeniusDatum& fr, const WeylGroup& W) {
  GgShadow out;
  out.rank = fixed_torus(w, fr, W).order;
  out.shift = W.length(w);
  return out;
}

CurtisTable curtis_spectral(const FrobeniusDatum& fr, const WeylGroup& W) {
  CurtisTable out;
  out.classes = geometric_classes(fr, W, CoeffMode::qlbar(fr.p()));
  int nc = int(out.classes.size());
  out.per_w_images.assign(W.order(), std::vector<std::vector<SemisimplePoint>>(nc));
  out.injectivity_witness.assign(nc, -1);

  for (int w = 0; w < W.order(); ++w) {
    for (SemisimplePoint& s : fixed_points(w, fr, W)) {
      SemisimplePoint rep = orbit_rep(s, W);
      int cls = -1;
      for (int c = 0; c < nc; ++c)
        if (out.classes[c].rep == rep) cls = c;
      if (cls < 0)
        fail(Errc::ValidationFailure, "fixed point lies in no enumerated class");
      out.per_w_images[w][cls].push_back(std::move(s));
    }
    // The class images partition Fix(wF) by construction; record witnesses.
    for (int c = 0; c < nc; ++c)
      if (!out.per_w_images[w][c].empty() && out.injectivity_witness[c] < 0)
        out.injectivity_witness[c] = w;
  }
  out.injective =
      std::all_of(out.injectivity_witness.begin(), out.injectivity_witness.end(),
                  [](int w) { return w >= 0; });
  if (!out.injective)
    fail(Errc::InjectivityFailure, "a geometric class meets no Fix(wF)");

  // Commuting-square data: restriction along point -> class on the diagonal
  // fiber. For every w and class, each image point's class is the class
  // itself (already enforced), and for diagonal classes with F-fixed rep the
  // w = 1 image consists exactly of the F-fixed orbit members.
  for (int c = 0; c < nc; ++c) {
    std::vector<SemisimplePoint> expected;
    for (const SemisimplePoint& m : out.classes[c].members)
      if (fr.apply(m) == m) expected.push_back(m);
    std::vector<SemisimplePoint> got = out.per_w_images[W.identity()][c];
    std::sort(got.begin(), got.end());
    if (got != expected)
      fail(Errc::ValidationFailure,
           "identity-fiber image differs from the F-fixed orbit members");
  }
  return out;
}

XOrbitReport x_orbit_bijection(const FrobeniusDatum& fr, const WeylGroup& W) {
  XOrbitReport out;
  std::set<SemisimplePoint> x_points;
  for (int w = 0; w < W.order(); ++w)
    for (SemisimplePoint& s : fixed_points(w, fr, W)) x_points.insert(std::move(s));
  out.x_point_count = i64(x_points.size());

  // X = {y : F(y) in W y}: check both inclusions on the enumerated set.
  for (const SemisimplePoint& y : x_points) {
    SemisimplePoint fy = fr.apply(y);
    std::vector<SemisimplePoint> orb = orbit(y, W);
    if (!std::binary_search(orb.begin(), orb.end(), fy))
      fail(Errc::BijectionFailure, "X point whose image leaves its W-orbit");
  }

  std::set<SemisimplePoint> x_orbit_reps;
  for (const SemisimplePoint& y : x_points) x_orbit_reps.insert(orbit_rep(y, W));
  out.x_orbit_count = i64(x_orbit_reps.size());

  std::vector<GeometricClass> classes = geometric_classes(fr, W, CoeffMode::qlbar(fr.p()));
  out.fixed_orbit_count = i64(classes.size());

  // The orbit map X//W -> (T^vee//W)^{F^vee} must be bijective: same reps.
  std::set<SemisimplePoint> class_reps;
  for (const GeometricClass& c : classes) class_reps.insert(c.rep);
  out.bijective = class_reps == x_orbit_reps;
  if (!out.bijective)
    fail(Errc::BijectionFailure, "X//W does not match the F-stable orbit set");
  return out;
}

}  // namespace weylkit
