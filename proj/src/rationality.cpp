#include "rationality.hpp"

#include <algorithm>
#include <map>

namespace weylkit {

namespace {

// Small finite abelian group presented by a multiplication table.
struct TableGroup {
  int n = 1;
  int id = 0;
  std::vector<std::vector<int>> mult;

  i64 element_order(int g) const {
    int acc = g;
    i64 k = 1;
    while (acc != id) { acc = mult[acc][g]; ++k; }
    return k;
  }
  std::vector<int> cyclic_subgroup(int g) const {
    std::vector<int> sub{id};
    int acc = g;
    while (acc != id) { sub.push_back(acc); acc = mult[acc][g]; }
    std::sort(sub.begin(), sub.end());
    return sub;
  }
  // Quotient by a subgroup (must be normal; abelian here).
  TableGroup quotient(const std::vector<int>& sub) const {
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    for (int g = 0; g < n; ++g) {
      if (coset_of[g] >= 0) continue;
      int c = int(reps.size());
      reps.push_back(g);
      for (int h : sub) coset_of[mult[g][h]] = c;
    }
    TableGroup q;
    q.n = int(reps.size());
    q.id = coset_of[id];
    q.mult.assign(q.n, std::vector<int>(q.n));
    for (int a = 0; a < q.n; ++a)
      for (int b = 0; b < q.n; ++b) q.mult[a][b] = coset_of[mult[reps[a]][reps[b]]];
    return q;
  }
  // Invariant factors d_1 | d_2 | ... (each > 1), largest last.
  std::vector<i64> invariant_factors() const {
    if (n == 1) return {};
    i64 exponent = 1;
    int witness = id;
    for (int g = 0; g < n; ++g) {
      i64 o = element_order(g);
      if (o > exponent) { exponent = o; witness = g; }
    }
    std::vector<i64> rest = quotient(cyclic_subgroup(witness)).invariant_factors();
    rest.push_back(exponent);
    return rest;
  }
};

TableGroup gamma_group(const StabilizerData& st) {
  TableGroup g;
  g.n = st.gamma_order();
  g.mult = st.gamma_table;
  for (int i = 0; i < g.n; ++i)
    if (st.gamma_reps[i] == 0) g.id = i;  // the coset of the Weyl identity
  return g;
}

int find_block(const std::vector<Block>& decomposition, int member, Errc errc,
               const char* what) {
  for (size_t i = 0; i < decomposition.size(); ++i)
    if (std::binary_search(decomposition[i].members.begin(), decomposition[i].members.end(),
                           member))
      return int(i);
  fail(errc, what);
}

}  // namespace

IntMat FrobeniusDatum::named_tau(const RootDatum& rd, const std::string& name) {
  if (name == "id" || name.empty()) return IntMat::identity(rd.rank());
  if (name == "swap" || name == "unitary") {
    if (rd.name() == "SL2xSL2") {
      IntMat m(2, 2);
      m.at(0, 1) = 1;
      m.at(1, 0) = 1;
      return m;
    }
    // Duality automorphism x -> -w0(x).
    WeylGroup W = WeylGroup::enumerate(rd);
    return W.matrix(W.longest_element()).scaled(-1);
  }
  fail(Errc::InvalidArgument, "unknown tau name '" + name + "'");
}

FrobeniusDatum FrobeniusDatum::build(const RootDatum& rd, i64 q, const IntMat& tau) {
  FrobeniusDatum fr;
  fr.rd_ = &rd;
  fr.q_ = q;
  i64 e = 0;
  if (!prime_power_decompose(q, fr.p_, e))
    fail(Errc::QNotPrimePower, std::to_string(q) + " is not a prime power >= 2");
  if (tau.rows() != rd.rank() || tau.cols() != rd.rank())
    fail(Errc::InvalidArgument, "tau has wrong dimensions");
  i64 det = tau.det();
  if (det != 1 && det != -1)
    fail(Errc::TauNotDatumAutomorphism, "tau is not unimodular");
  fr.tau_char_ = tau;
  fr.tau_cochar_ = tau.inverse_transpose();

  // Finite order.
  IntMat power = tau;
  fr.tau_order_ = 1;
  while (!power.is_identity()) {
    power = power * tau;
    ++fr.tau_order_;
    if (fr.tau_order_ > kMaxTauOrder)
      fail(Errc::TauNotDatumAutomorphism, "tau order exceeds bound");
  }

  // tau must permute Phi and Delta, equivariantly with the coroot map.
  std::map<Vec, int> root_index;
  for (int i = 0; i < rd.num_roots(); ++i) root_index[rd.roots()[i]] = i;
  for (int i = 0; i < rd.num_roots(); ++i) {
    Vec image = tau.apply(rd.roots()[i]);
    auto it = root_index.find(image);
    if (it == root_index.end())
      fail(Errc::TauNotDatumAutomorphism, "tau does not permute the roots");
    if (fr.tau_cochar_.apply(rd.coroots()[i]) != rd.coroots()[it->second])
      fail(Errc::TauNotDatumAutomorphism, "tau is not coroot-equivariant");
  }
  for (int i = 0; i < rd.num_simple(); ++i) {
    Vec image = tau.apply(rd.simple_root(i));
    bool in_delta = false;
    for (int j = 0; j < rd.num_simple(); ++j)
      if (rd.simple_root(j) == image) in_delta = true;
    if (!in_delta) fail(Errc::TauNotDatumAutomorphism, "tau does not permute Delta");
  }
  return fr;
}

int FrobeniusDatum::twist_weyl(const WeylGroup& W, int w) const {
  IntMat m = tau_char_ * W.matrix(w) * tau_char_.inverse_unimodular();
  int idx = W.index_of(m);
  if (idx < 0) fail(Errc::ValidationFailure, "tau conjugation left the Weyl group");
  return idx;
}

std::vector<SemisimplePoint> fixed_points(int w, const FrobeniusDatum& fr, const WeylGroup& W) {
  const RootDatum& rd = fr.datum();
  int n = rd.rank();
  IntMat a = W.matrix(w) * fr.f_char() - IntMat::identity(n);
  i64 det = a.det();
  if (det == 0) fail(Errc::SingularFixedLocus, "wF - 1 is singular");
  i64 count = det < 0 ? -det : det;

  auto snf = smith_normal_form(a);
  // s = V t with t_i in (1/d_i) Z / Z solves a s = 0 in (Q/Z)^n.
  std::vector<SemisimplePoint> out;
  std::vector<i64> idx(n, 0);
  for (;;) {
    std::vector<Frac> t(n);
    for (int i = 0; i < n; ++i) t[i] = Frac(idx[i], snf.diagonal[i]);
    std::vector<Frac> s = snf.v.apply(t);
    out.push_back(SemisimplePoint(std::move(s)));
    int pos = n - 1;
    while (pos >= 0 && ++idx[pos] == snf.diagonal[pos]) { idx[pos] = 0; --pos; }
    if (pos < 0) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (i64(out.size()) != count)
    fail(Errc::CountMismatch, "fixed point count disagrees with |det(wF - 1)|");
  for (const SemisimplePoint& s : out) {
    std::vector<Frac> img = a.apply(s.coords);
    if (!std::all_of(img.begin(), img.end(), [](const Frac& f) { return f.is_zero(); }))
      fail(Errc::ValidationFailure, "claimed fixed point is not fixed");
  }
  return out;
}

std::vector<GeometricClass> geometric_classes(const FrobeniusDatum& fr, const WeylGroup& W,
                                              const CoeffMode& mode) {
  if (mode.p > 1 && mode.p != fr.p())
    fail(Errc::InvalidArgument, "coefficient mode p differs from Frobenius p");
  if (mode.is_integral() && mode.ell == fr.p())
    fail(Errc::InvalidArgument, "ell must differ from p");
  std::set<SemisimplePoint> pool;
  for (int w = 0; w < W.order(); ++w)
    for (SemisimplePoint& s : fixed_points(w, fr, W)) {
      if (mode.is_integral())
        pool.insert(ell_part(s, mode.ell).ell_prime);
      else
        pool.insert(std::move(s));
    }
  std::vector<GeometricClass> classes;
  std::set<SemisimplePoint> assigned;
  for (const SemisimplePoint& s : pool) {
    if (assigned.count(s)) continue;
    GeometricClass cls;
    cls.members = orbit(s, W);
    cls.rep = cls.members.front();
    // F maps the orbit to itself: every member's image has the same orbit rep.
    cls.f_stable = true;
    for (const SemisimplePoint& m : cls.members) {
      SemisimplePoint img = fr.apply(m);
      if (mode.is_integral()) img = ell_part(img, mode.ell).ell_prime;
      if (orbit_rep(img, W) != cls.rep) cls.f_stable = false;
      assigned.insert(m);
    }
    if (!cls.f_stable)
      fail(Errc::ValidationFailure, "enumerated geometric class is not F-stable");
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const GeometricClass& a, const GeometricClass& b) { return a.rep < b.rep; });
  return classes;
}

RationalClassReport rational_classes(const SemisimplePoint& s, const FrobeniusDatum& fr,
                                     const WeylGroup& W) {
  RationalClassReport rep;
  std::vector<SemisimplePoint> orb = orbit(s, W);
  rep.geometric_rep = orb.front();
  SemisimplePoint fs = fr.apply(s);
  rep.stable = std::binary_search(orb.begin(), orb.end(), fs);
  if (!rep.stable) fail(Errc::NotStableClass, "geometric class is not F-stable");

  // Block-quotient description: orbits of Ad_F(gamma)(beta) = gamma beta F(gamma)^{-1}
  // on the block set _s\underline{W}_{F(s)}.
  std::vector<Block> endo_s = block_decomposition(s, s, W);
  std::vector<Block> endo_fs = block_decomposition(fs, fs, W);
  std::vector<Block> transporter_blocks = block_decomposition(s, fs, W);
  int nb = int(transporter_blocks.size());

  auto f_of_endo_block = [&](const Block& gamma_block) -> const Block& {
    int image_member = fr.twist_weyl(W, gamma_block.members.front());
    int idx = find_block(endo_fs, image_member, Errc::ValidationFailure,
                         "F image of endo block not found");
    return endo_fs[idx];
  };
  auto inverse_endo_block = [&](const Block& gamma_block) -> Block {
    Block inv = gamma_block;
    std::vector<int> members;
    for (int w : gamma_block.members) members.push_back(W.inverse(w));
    std::sort(members.begin(), members.end());
    int idx = -1;
    for (size_t i = 0; i < endo_s.size(); ++i)
      if (endo_s[i].members == members) idx = int(i);
    if (idx < 0) fail(Errc::ValidationFailure, "inverse block not found");
    return endo_s[idx];
  };

  std::vector<int> orbit_id(nb, -1);
  int norb = 0;
  for (int b = 0; b < nb; ++b) {
    if (orbit_id[b] >= 0) continue;
    std::vector<int> stack{b};
    orbit_id[b] = norb;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (const Block& gamma : endo_s) {
        Block f_gamma_inv = f_of_endo_block(inverse_endo_block(gamma));
        Block image =
            compose_blocks(compose_blocks(gamma, transporter_blocks[cur], W), f_gamma_inv, W);
        int idx = -1;
        for (int k = 0; k < nb; ++k)
          if (transporter_blocks[k].members == image.members) idx = k;
        if (idx < 0) fail(Errc::ValidationFailure, "Ad_F image is not a transporter block");
        if (orbit_id[idx] < 0) { orbit_id[idx] = norb; stack.push_back(idx); }
      }
    }
    ++norb;
  }
  rep.twisted_orbit_count = norb;
  rep.rational_count = norb;

  // H^1 description at an F-fixed orbit point, when one exists.
  for (const SemisimplePoint& m : orb) {
    if (!(fr.apply(m) == m)) continue;
    rep.h1_applies = true;
    rep.h1_point = m;
    StabilizerData st = stabilizer_data(m, W);
    TableGroup gamma = gamma_group(st);
    // F on Gamma: coset of tau * rep * tau^{-1}.
    std::vector<int> f_map(gamma.n);
    for (int i = 0; i < gamma.n; ++i)
      f_map[i] = st.coset_of(fr.twist_weyl(W, st.gamma_reps[i]), W);
    // Coboundaries delta * F(delta)^{-1}; inverse in the table group.
    auto inverse_of = [&](int g) {
      for (int h = 0; h < gamma.n; ++h)
        if (gamma.mult[g][h] == gamma.id) return h;
      fail(Errc::ValidationFailure, "table group element with no inverse");
    };
    std::set<int> coboundaries;
    for (int d = 0; d < gamma.n; ++d)
      coboundaries.insert(gamma.mult[d][inverse_of(f_map[d])]);
    std::vector<int> sub(coboundaries.begin(), coboundaries.end());
    TableGroup h1 = gamma.quotient(sub);
    rep.h1_structure.invariant_factors = h1.invariant_factors();
    rep.h1_structure.order = h1.n;
    if (i64(h1.n) != rep.twisted_orbit_count)
      fail(Errc::CountMismatch, "H^1 count disagrees with the block-quotient count");
    break;
  }
  return rep;
}

PrimeTables prime_tables(const RootDatum& rd) {
  PrimeTables out;
  CartanClassification cls = rd.classify();
  std::set<i64> bad, torsion;
  for (const CartanFactor& f : cls.components) {
    switch (f.letter) {
      case 'A':
        break;
      case 'B':
      case 'C':
      case 'D':
        bad.insert(2);
        if (f.letter != 'C') torsion.insert(2);
        break;
      case 'G':
        bad.insert({2, 3});
        torsion.insert(2);
        break;
      case 'F':
        bad.insert({2, 3});
        torsion.insert({2, 3});
        break;
      case 'E':
        if (f.rank <= 7) {
          bad.insert({2, 3});
          torsion.insert({2, 3});
        } else {
          bad.insert({2, 3, 5});
          torsion.insert({2, 3, 5});
        }
        break;
      default:
        fail(Errc::UnrecognizedType, "unknown factor letter");
    }
  }
  out.bad_primes.assign(bad.begin(), bad.end());
  out.torsion_primes.assign(torsion.begin(), torsion.end());
  out.pi1_full_torsion_order = rd.fundamental_group(RootDatum::Pi1Mode::Full).torsion_order;
  return out;
}

bool PrimeTables::condition_l(i64 ell) const {
  if (!is_prime(ell)) fail(Errc::InvalidArgument, "condition_L expects a prime");
  if (std::binary_search(torsion_primes.begin(), torsion_primes.end(), ell)) return false;
  return pi1_full_torsion_order % ell != 0;
}

EllParts ell_part(const SemisimplePoint& s, i64 ell) {
  if (ell < 2 || !is_prime(ell)) fail(Errc::InvalidArgument, "ell must be prime");
  EllParts out;
  out.ell_prime.coords.resize(s.rank());
  out.ell_part.coords.resize(s.rank());
  for (int i = 0; i < s.rank(); ++i) {
    i64 n = s.coords[i].den, a = s.coords[i].num;
    i64 n_ell = 1;
    while (n % ell == 0) { n /= ell; n_ell *= ell; }
    i64 n_prime = n;
    i64 x = n_prime == 1 ? 0 : mod_pos(a % n_prime * mod_inverse(n_ell, n_prime), n_prime);
    i64 y = n_ell == 1 ? 0 : mod_pos(a % n_ell * mod_inverse(n_prime, n_ell), n_ell);
    out.ell_prime.coords[i] = Frac(x, n_prime);
    out.ell_part.coords[i] = Frac(y, n_ell);
    if (!(out.ell_prime.coords[i] + out.ell_part.coords[i] == s.coords[i]))
      fail(Errc::ValidationFailure, "CRT split does not sum back");
  }
  return out;
}

std::vector<InnerFormLabel> inner_forms(const SemisimplePoint& s, const FrobeniusDatum& fr,
                                        const WeylGroup& W) {
  RationalClassReport rat = rational_classes(s, fr, W);  // validates stability
  SemisimplePoint fs = fr.apply(s);
  StabilizerData st = stabilizer_data(s, W);
  std::vector<Block> endo_s = block_decomposition(s, s, W);
  std::vector<Block> endo_fs = block_decomposition(fs, fs, W);
  std::vector<Block> trans = block_decomposition(s, fs, W);

  // Deterministic base block: the one whose minimal element has the smallest
  // (length, index).
  const Block* base = &trans.front();
  for (const Block& b : trans)
    if (std::pair(W.length(b.w_min), b.w_min) < std::pair(W.length(base->w_min), base->w_min))
      base = &b;

  // beta^{-1} as a block from F(s) to s.
  std::vector<int> inv_members;
  for (int w : base->members) inv_members.push_back(W.inverse(w));
  std::sort(inv_members.begin(), inv_members.end());
  std::vector<Block> back = block_decomposition(fs, s, W);
  const Block* base_inv = nullptr;
  for (const Block& b : back)
    if (b.members == inv_members) base_inv = &b;
  if (!base_inv) fail(Errc::ValidationFailure, "inverse of base block not found");

  // F_beta = Ad(beta) o F as a permutation of Gamma_s.
  TableGroup gamma = gamma_group(st);
  auto gamma_block = [&](int i) -> const Block& {
    int member = st.gamma_reps[i];
    int idx = find_block(endo_s, member, Errc::ValidationFailure, "gamma block not found");
    return endo_s[idx];
  };
  std::vector<int> f_beta(gamma.n);
  for (int i = 0; i < gamma.n; ++i) {
    int image_member = fr.twist_weyl(W, st.gamma_reps[i]);
    int f_idx = find_block(endo_fs, image_member, Errc::ValidationFailure,
                           "F image block not found");
    Block conj = compose_blocks(compose_blocks(*base, endo_fs[f_idx], W), *base_inv, W);
    f_beta[i] = find_block(endo_s, conj.members.front(), Errc::ValidationFailure,
                           "Ad(beta) image block not found");
  }
  // F_beta must be an automorphism of Gamma_s.
  for (int i = 0; i < gamma.n; ++i)
    for (int j = 0; j < gamma.n; ++j)
      if (f_beta[gamma.mult[i][j]] != gamma.mult[f_beta[i]][f_beta[j]])
        fail(Errc::ValidationFailure, "F_beta is not a homomorphism on Gamma_s");

  auto inverse_of = [&](int g) {
    for (int h = 0; h < gamma.n; ++h)
      if (gamma.mult[g][h] == gamma.id) return h;
    fail(Errc::ValidationFailure, "table group element with no inverse");
  };
  std::set<int> coboundaries;
  for (int d = 0; d < gamma.n; ++d) coboundaries.insert(gamma.mult[d][inverse_of(f_beta[d])]);

  // Cosets of the coboundary subgroup = H^1(F_beta, Gamma_s).
  std::vector<int> coset_of(gamma.n, -1);
  std::vector<InnerFormLabel> labels;
  for (int g = 0; g < gamma.n; ++g) {
    if (coset_of[g] >= 0) continue;
    InnerFormLabel lbl;
    lbl.gamma_index = g;
    lbl.base_block_members = base->members;
    lbl.label = "gamma[" + std::to_string(g) + "].F_beta";
    for (int cb : coboundaries) coset_of[gamma.mult[g][cb]] = int(labels.size());
    labels.push_back(std::move(lbl));
  }
  if (i64(labels.size()) != rat.rational_count)
    fail(Errc::CountMismatch, "inner form count disagrees with rational class count");
  return labels;
}

std::vector<int> twisted_frobenius_on_delta(const SemisimplePoint& s, const FrobeniusDatum& fr,
                                            const WeylGroup& W) {
  const RootDatum& rd = fr.datum();
  SemisimplePoint fs = fr.apply(s);
  std::vector<Block> trans = block_decomposition(s, fs, W);
  if (trans.empty()) fail(Errc::NotStableClass, "point is not in an F-stable orbit");
  const Block* base = &trans.front();
  for (const Block& b : trans)
    if (std::pair(W.length(b.w_min), b.w_min) < std::pair(W.length(base->w_min), base->w_min))
      base = &b;
  StabilizerData st = stabilizer_data(s, W);
  IntMat v = W.matrix(base->w_min) * fr.tau_char();
  // v must permute Phi_s and Delta_s.
  std::set<Vec> phi_s_roots;
  for (int r : st.phi_s) phi_s_roots.insert(rd.roots()[r]);
  for (int r : st.phi_s)
    if (!phi_s_roots.count(v.apply(rd.roots()[r])))
      fail(Errc::ValidationFailure, "twisted Frobenius does not preserve Phi_s");
  std::vector<int> perm;
  for (int r : st.delta_s) {
    Vec image = v.apply(rd.roots()[r]);
    int target = -1;
    for (size_t j = 0; j < st.delta_s.size(); ++j)
      if (rd.roots()[st.delta_s[j]] == image) target = int(j);
    if (target < 0)
      fail(Errc::ValidationFailure, "twisted Frobenius does not preserve Delta_s");
    perm.push_back(target);
  }
  return perm;
}

}  // namespace weylkit
