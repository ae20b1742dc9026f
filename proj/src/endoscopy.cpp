#include "endoscopy.hpp"

#include <algorithm>

namespace weylkit {

RootDatum centralizer_datum(const SemisimplePoint& s, const RootDatum& rd, const WeylGroup& W) {
  StabilizerData st = stabilizer_data(s, W);
  return rd.subdatum(st.phi_s, "Z(" + s.str() + ")");
}

EndoscopicDatum endoscopic_group(const SemisimplePoint& s, const RootDatum& rd,
                                 const WeylGroup& W) {
  EndoscopicDatum out;
  out.point = s;
  out.stab = stabilizer_data(s, W);
  out.centralizer_datum = rd.subdatum(out.stab.phi_s);
  out.h_datum = out.centralizer_datum.dual("H(" + s.str() + ")");
  if (!(out.h_datum.dual() == out.centralizer_datum))
    fail(Errc::ValidationFailure, "dual of h_datum does not recover the centralizer datum");

  // Relative pinning: simple i of H <-> simple i of the centralizer datum,
  // which is a root of the ambient datum.
  for (int i = 0; i < out.centralizer_datum.num_simple(); ++i) {
    int amb = rd.root_index(out.centralizer_datum.simple_root(i));
    if (amb < 0) fail(Errc::ValidationFailure, "centralizer simple root missing from ambient datum");
    out.relative_pinning.push_back(amb);
  }

  // |W(H)| = |W_s_circ|.
  WeylGroup wh = WeylGroup::enumerate(out.h_datum);
  if (wh.order() != int(out.stab.w_s_circ.size()))
    fail(Errc::ValidationFailure, "Weyl group of H has wrong order");

  // Gamma_s acts on the based datum of H through the conjugation action of
  // the minimal coset representatives on Delta_s.
  for (int rep : out.stab.gamma_reps) {
    std::vector<int> perm;
    for (int r : out.stab.delta_s) {
      Vec image = W.act_char(rep, rd.roots()[r]);
      int target = -1;
      for (size_t j = 0; j < out.stab.delta_s.size(); ++j)
        if (rd.roots()[out.stab.delta_s[j]] == image) target = int(j);
      if (target < 0)
        fail(Errc::ValidationFailure,
             "minimal coset representative does not permute Delta_s");
      perm.push_back(target);
    }
    out.gamma_on_delta.push_back(perm);
  }
  return out;
}

LeviCompatReport levi_compatibility(const SemisimplePoint& s, const RootDatum& rd,
                                    const WeylGroup& W, const std::vector<int>& simple_subset) {
  LeviCompatReport rep;
  rep.levi_simple_subset = simple_subset;

  RootDatum levi = rd.levi(simple_subset);
  WeylGroup wl = WeylGroup::enumerate(levi);
  StabilizerData st_g = stabilizer_data(s, W);
  StabilizerData st_l = stabilizer_data(s, wl);

  // Phi_s(L) = Phi_s(G) cap Phi(L), compared as root-vector sets.
  std::set<Vec> phi_s_l;
  for (int r : st_l.phi_s) phi_s_l.insert(levi.roots()[r]);
  std::set<Vec> expected;
  for (int r : st_g.phi_s) {
    const Vec& root = rd.roots()[r];
    if (levi.root_index(root) >= 0) expected.insert(root);
  }
  rep.phi_s_match = phi_s_l == expected;
  if (!rep.phi_s_match)
    fail(Errc::CompatibilityFailure, "Phi_s of the Levi is not Phi_s cap Phi(L)");

  // The induced map Gamma_s^L -> Gamma_s^G: send a W_s^L-coset to the
  // W_s^{o,G}-coset of any member. Well-defined iff W_s^{o,L} maps into
  // W_s^{o,G}; homomorphism checked on the tables.
  rep.gamma_l_order = st_l.gamma_order();
  rep.gamma_g_order = st_g.gamma_order();
  auto lift = [&](int wl_idx) { return W.index_of(wl.matrix(wl_idx)); };
  rep.gamma_map_defined = true;
  for (int w : st_l.w_s_circ) {
    int g = lift(w);
    if (g < 0 || !std::binary_search(st_g.w_s_circ.begin(), st_g.w_s_circ.end(), g))
      rep.gamma_map_defined = false;
  }
  if (!rep.gamma_map_defined)
    fail(Errc::CompatibilityFailure, "W_s^{o,L} does not map into W_s^{o,G}");
  std::vector<int> image;  // Gamma_s^G index for each Gamma_s^L element
  for (int repr : st_l.gamma_reps) image.push_back(st_g.coset_of(lift(repr), W));
  rep.gamma_map_homomorphism = true;
  for (int i = 0; i < st_l.gamma_order(); ++i)
    for (int j = 0; j < st_l.gamma_order(); ++j) {
      int prod_l = st_l.gamma_table[i][j];
      if (st_g.gamma_table[image[i]][image[j]] != image[prod_l])
        rep.gamma_map_homomorphism = false;
    }
  if (!rep.gamma_map_homomorphism)
    fail(Errc::CompatibilityFailure, "Gamma_s^L -> Gamma_s^G is not a homomorphism");

  // H_s^{o,L} is Levi-type inside H_s^{o,G}: the subsystem equals the ambient
  // subsystem cut to the rational span of its own roots.
  std::vector<Vec> span_basis(phi_s_l.begin(), phi_s_l.end());
  rep.h_levi_subdatum = true;
  for (int r : st_g.phi_s) {
    const Vec& root = rd.roots()[r];
    // root in span(Phi_s^L)? Solve over Q by integer methods: rank test.
    IntMat with(int(root.size()), int(span_basis.size()) + 1);
    IntMat without(int(root.size()), std::max<int>(int(span_basis.size()), 1));
    for (size_t j = 0; j < span_basis.size(); ++j)
      for (int i = 0; i < int(root.size()); ++i) {
        with.at(i, int(j)) = span_basis[j][i];
        without.at(i, int(j)) = span_basis[j][i];
      }
    for (int i = 0; i < int(root.size()); ++i) with.at(i, int(span_basis.size())) = root[i];
    auto rank = [](const IntMat& m) {
      auto snf = smith_normal_form(m);
      int r = 0;
      for (i64 d : snf.diagonal)
        if (d != 0) ++r;
      return r;
    };
    bool in_span = span_basis.empty() ? std::all_of(root.begin(), root.end(),
                                                    [](i64 v) { return v == 0; })
                                      : rank(with) == rank(without);
    bool in_levi = phi_s_l.count(root) > 0;
    if (in_span != in_levi) rep.h_levi_subdatum = false;
  }
  if (!rep.h_levi_subdatum)
    fail(Errc::CompatibilityFailure, "H^L is not a Levi-type subdatum of H^G");
  return rep;
}

}  // namespace weylkit
