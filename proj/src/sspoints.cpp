#include "sspoints.hpp"

#include <algorithm>
#include <sstream>

namespace weylkit {

SemisimplePoint SemisimplePoint::parse(const std::string& text) {
  std::vector<Frac> coords;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ','))
    if (!token.empty()) coords.push_back(parse_frac(token));
  return SemisimplePoint(std::move(coords));
}

i64 SemisimplePoint::order() const {
  i64 d = 1;
  for (const Frac& f : coords) d = lcm_i64(d, f.den);
  return d;
}

bool SemisimplePoint::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Frac& f) { return f.is_zero(); });
}

std::string SemisimplePoint::str() const {
  std::string out = "(";
  for (size_t i = 0; i < coords.size(); ++i) out += (i ? "," : "") + coords[i].str();
  return out + ")";
}

std::vector<std::string> SemisimplePoint::str_coords() const {
  std::vector<std::string> out;
  for (const Frac& f : coords) out.push_back(f.str());
  return out;
}

void CoeffMode::check_order(i64 order) const {
  if (p > 1 && gcd_i64(order, p) != 1)
    fail(Errc::CoprimalityViolation,
         "torsion order " + std::to_string(order) + " not prime to p = " + std::to_string(p));
  if (is_integral()) {
    if (ell < 2) fail(Errc::InvalidArgument, "integral mode requires a prime ell");
    if (gcd_i64(order, ell) != 1)
      fail(Errc::CoprimalityViolation,
           "torsion order " + std::to_string(order) + " not prime to ell = " + std::to_string(ell));
  }
}

Frac coroot_eval(const SemisimplePoint& s, const Vec& coroot) {
  if (int(coroot.size()) != s.rank()) fail(Errc::InvalidArgument, "coroot_eval size mismatch");
  Frac acc;
  for (int i = 0; i < s.rank(); ++i) acc = acc + coroot[i] * s.coords[i];
  return acc;
}

int StabilizerData::coset_of(int w, const WeylGroup& W) const {
  for (int i = 0; i < gamma_order(); ++i) {
    // w in reps[i] * W_s_circ?
    int x = W.mult(W.inverse(gamma_reps[i]), w);
    if (std::binary_search(w_s_circ.begin(), w_s_circ.end(), x)) return i;
  }
  fail(Errc::InvalidArgument, "element is not in the stabilizer");
}

StabilizerData stabilizer_data(const SemisimplePoint& s, const WeylGroup& W) {
  const RootDatum& rd = W.datum();
  if (s.rank() != rd.rank()) fail(Errc::InvalidArgument, "point rank mismatch");
  StabilizerData out;
  out.point = s;

  for (int r = 0; r < rd.num_roots(); ++r)
    if (coroot_eval(s, rd.coroots()[r]).is_zero()) out.phi_s.push_back(r);

  // Delta_s: positive members of Phi_s that are not sums of two positive members.
  std::vector<int> positives;
  for (int r : out.phi_s)
    if (rd.is_positive(r)) positives.push_back(r);
  for (int r : positives) {
    bool is_sum = false;
    for (int a : positives) {
      if (is_sum) break;
      for (int b : positives) {
        Vec sum(rd.rank());
        for (int t = 0; t < rd.rank(); ++t) sum[t] = rd.roots()[a][t] + rd.roots()[b][t];
        if (sum == rd.roots()[r]) { is_sum = true; break; }
      }
    }
    if (!is_sum) out.delta_s.push_back(r);
  }

  for (int w = 0; w < W.order(); ++w)
    if (SemisimplePoint(W.act_point(w, s.coords)) == s) out.w_s.push_back(w);

  std::vector<int> gens;
  for (int r : out.delta_s) gens.push_back(W.reflection(r));
  out.w_s_circ = W.subgroup_closure(gens);

  // Reflections of all of Phi_s must already lie in W_s_circ, and W_s_circ in W_s.
  for (int r : out.phi_s)
    if (!std::binary_search(out.w_s_circ.begin(), out.w_s_circ.end(), W.reflection(r)))
      fail(Errc::ValidationFailure, "subsystem reflection missing from W_s_circ");
  for (int w : out.w_s_circ)
    if (!std::binary_search(out.w_s.begin(), out.w_s.end(), w))
      fail(Errc::ValidationFailure, "W_s_circ is not contained in W_s");

  // Cosets of W_s_circ in W_s; representative = minimal element index.
  std::set<int> assigned;
  for (int w : out.w_s) {
    if (assigned.count(w)) continue;
    std::vector<int> coset;
    for (int h : out.w_s_circ) coset.push_back(W.mult(w, h));
    std::sort(coset.begin(), coset.end());
    // Normality of W_s_circ in W_s: left coset == right coset.
    std::vector<int> right_coset;
    for (int h : out.w_s_circ) right_coset.push_back(W.mult(h, w));
    std::sort(right_coset.begin(), right_coset.end());
    if (coset != right_coset)
      fail(Errc::NonAbelianComponentGroup, "W_s_circ is not normal in W_s");
    out.gamma_reps.push_back(coset.front());
    for (int x : coset) assigned.insert(x);
  }
  std::sort(out.gamma_reps.begin(), out.gamma_reps.end());

  int gn = out.gamma_order();
  out.gamma_table.assign(gn, std::vector<int>(gn, -1));
  for (int i = 0; i < gn; ++i)
    for (int j = 0; j < gn; ++j)
      out.gamma_table[i][j] = out.coset_of(W.mult(out.gamma_reps[i], out.gamma_reps[j]), W);
  for (int i = 0; i < gn; ++i)
    for (int j = 0; j < gn; ++j)
      if (out.gamma_table[i][j] != out.gamma_table[j][i])
        fail(Errc::NonAbelianComponentGroup, "Gamma_s multiplication table is not commutative");
  return out;
}

GammaBoundReport check_gamma_bound(const SemisimplePoint& s, const RootDatum& rd,
                                   const WeylGroup& W) {
  StabilizerData st = stabilizer_data(s, W);
  GammaBoundReport rep;
  rep.gamma_order = st.gamma_order();
  rep.pi1_dual_derived_order =
      rd.dual().fundamental_group(RootDatum::Pi1Mode::Derived).torsion_order;
  rep.divides = rep.pi1_dual_derived_order % rep.gamma_order == 0;
  if (!rep.divides)
    fail(Errc::BoundViolated, "|Gamma_s| = " + std::to_string(rep.gamma_order) +
                                  " does not divide |pi1| = " +
                                  std::to_string(rep.pi1_dual_derived_order));
  return rep;
}

std::vector<SemisimplePoint> enumerate_points(const RootDatum& rd, i64 order_bound,
                                              const CoeffMode& mode, const WeylGroup* W,
                                              bool orbit_reps_only, i64 cap) {
  if (order_bound < 1) fail(Errc::InvalidArgument, "order bound must be >= 1");
  mode.check_order(order_bound);
  int n = rd.rank();
  double total = 1;
  for (int i = 0; i < n; ++i) {
    total *= double(order_bound);
    if (total > double(cap)) fail(Errc::SearchTooLarge, "point grid exceeds cap");
  }
  std::vector<SemisimplePoint> out;
  std::vector<i64> idx(n, 0);
  for (;;) {
    std::vector<Frac> coords(n);
    for (int i = 0; i < n; ++i) coords[i] = Frac(idx[i], order_bound);
    SemisimplePoint p(std::move(coords));
    if (!orbit_reps_only || W == nullptr || orbit_rep(p, *W) == p) out.push_back(p);
    int pos = n - 1;
    while (pos >= 0 && ++idx[pos] == order_bound) { idx[pos] = 0; --pos; }
    if (pos < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SemisimplePoint> orbit(const SemisimplePoint& s, const WeylGroup& W) {
  std::set<SemisimplePoint> seen;
  for (int w = 0; w < W.order(); ++w) seen.insert(SemisimplePoint(W.act_point(w, s.coords)));
  return std::vector<SemisimplePoint>(seen.begin(), seen.end());
}

SemisimplePoint orbit_rep(const SemisimplePoint& s, const WeylGroup& W) {
  SemisimplePoint best = s;
  for (int w = 1; w < W.order(); ++w) {
    SemisimplePoint t(W.act_point(w, s.coords));
    if (t < best) best = t;
  }
  return best;
}

}  // namespace weylkit
