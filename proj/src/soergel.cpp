#include "soergel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace weylkit {

namespace {

// Fundamental degrees per catalogue factor.
std::vector<int> factor_degrees(const CartanFactor& f) {
  switch (f.letter) {
    case 'A': {
      std::vector<int> d;
      for (int i = 2; i <= f.rank + 1; ++i) d.push_back(i);
      return d;
    }
    case 'B':
    case 'C': {
      std::vector<int> d;
      for (int i = 1; i <= f.rank; ++i) d.push_back(2 * i);
      return d;
    }
    case 'D': {
      std::vector<int> d;
      for (int i = 1; i < f.rank; ++i) d.push_back(2 * i);
      d.push_back(f.rank);
      std::sort(d.begin(), d.end());
      return d;
    }
    case 'G':
      return {2, 6};
    case 'F':
      return {2, 6, 8, 12};
    case 'E':
      if (f.rank == 6) return {2, 5, 6, 8, 9, 12};
      if (f.rank == 7) return {2, 6, 8, 10, 12, 14, 18};
      return {2, 8, 12, 14, 18, 20, 24, 30};
    default:
      fail(Errc::UnrecognizedType, "no degree table for factor");
  }
}

// The set Phi' of ambient roots whose reflections lie in the subgroup W'.
struct Subsystem {
  std::vector<int> roots;      // ambient root indices
  std::vector<int> positives;  // subset of roots
  std::vector<int> elements;   // W' element indices
};

Subsystem subsystem_of(const SoergelContext& ctx, const std::vector<int>& sub_simple_roots) {
  const RootDatum& rd = ctx.datum();
  const WeylGroup& W = ctx.weyl();
  Subsystem out;
  std::vector<int> gens;
  for (int r : sub_simple_roots) {
    if (r < 0 || r >= rd.num_roots())
      fail(Errc::NotReflectionSubgroup, "simple system index out of range");
    gens.push_back(W.reflection(r));
  }
  out.elements = W.subgroup_closure(gens);
  std::set<int> members(out.elements.begin(), out.elements.end());
  for (int r = 0; r < rd.num_roots(); ++r)
    if (members.count(W.reflection(r))) {
      out.roots.push_back(r);
      if (rd.is_positive(r)) out.positives.push_back(r);
    }
  return out;
}

// Length inside W': the number of positive subsystem roots made negative.
int sub_length(const SoergelContext& ctx, const Subsystem& sys, int w) {
  const RootDatum& rd = ctx.datum();
  const WeylGroup& W = ctx.weyl();
  int len = 0;
  for (int r : sys.positives) {
    Vec image = W.act_char(w, rd.roots()[r]);
    int idx = rd.root_index(image);
    if (idx < 0) fail(Errc::ValidationFailure, "subsystem not stable under W'");
    if (!rd.is_positive(idx)) ++len;
  }
  return len;
}

std::vector<i64> poly_coeffs_in_t(const std::vector<int>& degrees, int rank) {
  // prod (1 + t + ... + t^{d-1}) as integer coefficients.
  std::vector<i64> acc{1};
  for (int d : degrees) {
    std::vector<i64> factor(d, 1);
    std::vector<i64> next(acc.size() + factor.size() - 1, 0);
    for (size_t i = 0; i < acc.size(); ++i)
      for (size_t j = 0; j < factor.size(); ++j) next[i + j] += acc[i] * factor[j];
    acc = std::move(next);
  }
  (void)rank;
  return acc;
}

}  // namespace

Poly SoergelContext::demazure(int root_index, const Poly& f) const {
  int s = w_->reflection(root_index);
  Poly num = f - act(s, f);
  Poly out = divide_exact(num, coroot_poly(root_index));
  return out;
}

InvariantRankReport invariant_rank(const SoergelContext& ctx,
                                   const std::vector<int>& sub_simple_roots) {
  Subsystem sys = subsystem_of(ctx, sub_simple_roots);
  InvariantRankReport rep;
  rep.rank = i64(sys.elements.size());

  RootDatum sub = ctx.datum().subdatum(sys.roots);
  CartanClassification cls = sub.classify();
  // The given set must really be the simple system of the subsystem.
  if (sub.num_simple() != int(sub_simple_roots.size()))
    fail(Errc::NotReflectionSubgroup, "given roots are not a simple system");
  for (const CartanFactor& f : cls.components) {
    rep.factor_labels.push_back(f.label());
    for (int d : factor_degrees(f)) rep.degrees.push_back(d);
  }
  std::sort(rep.degrees.begin(), rep.degrees.end());

  i64 degree_product = 1;
  for (int d : rep.degrees) degree_product *= d;
  if (degree_product != rep.rank)
    fail(Errc::ValidationFailure, "product of fundamental degrees differs from |W'|");

  // Poincare polynomial identity: sum_w t^{l'(w)} = prod (1-t^d)/(1-t).
  std::map<int, i64> length_counts;
  for (int w : sys.elements) ++length_counts[sub_length(ctx, sys, w)];
  std::vector<i64> expected = poly_coeffs_in_t(rep.degrees, int(sub_simple_roots.size()));
  rep.hilbert_series_verified = true;
  for (size_t i = 0; i < expected.size(); ++i) {
    auto it = length_counts.find(int(i));
    i64 got = it == length_counts.end() ? 0 : it->second;
    if (got != expected[i]) rep.hilbert_series_verified = false;
  }
  if (i64(sys.elements.size()) !=
      std::accumulate(expected.begin(), expected.end(), i64(0)))
    rep.hilbert_series_verified = false;
  if (!rep.hilbert_series_verified)
    fail(Errc::ValidationFailure, "Poincare polynomial identity fails");
  return rep;
}

SteinbergReport steinberg_det(const SoergelContext& ctx,
                              const std::vector<int>& sub_simple_roots, SteinbergBasis basis) {
  if (sub_simple_roots.size() > 2)
    fail(Errc::InvalidArgument, "steinberg_det supports rank <= 2 subsystems");
  Subsystem sys = subsystem_of(ctx, sub_simple_roots);
  const WeylGroup& W = ctx.weyl();
  const RootDatum& rd = ctx.datum();

  auto basis_element = [&](int w, bool dual) {
    Poly e = Poly::constant(ctx.nvars(), 1);
    int v = dual ? W.inverse(w) : w;
    for (int r : sys.positives) {
      Vec image = W.act_char(v, rd.roots()[r]);
      int idx = rd.root_index(image);
      if (idx >= 0 && !rd.is_positive(idx)) e = e * ctx.coroot_poly(r);
    }
    return e;
  };

  auto attempt = [&](bool dual) {
    int n = int(sys.elements.size());
    PolyMat m(n, std::vector<Poly>(n, Poly(ctx.nvars())));
    for (int col = 0; col < n; ++col) {
      Poly e = basis_element(sys.elements[col], dual);
      for (int row = 0; row < n; ++row) m[row][col] = ctx.act(sys.elements[row], e);
    }
    return poly_mat_det(m);
  };

  SteinbergReport rep;
  rep.basis_used = basis;
  Poly det = attempt(basis == SteinbergBasis::DualDescentProducts);
  if (det.is_zero()) {
    rep.retried = true;
    rep.basis_used = basis == SteinbergBasis::DescentProducts
                         ? SteinbergBasis::DualDescentProducts
                         : SteinbergBasis::DescentProducts;
    det = attempt(rep.basis_used == SteinbergBasis::DualDescentProducts);
    if (det.is_zero())
      fail(Errc::BasisNotSteinberg, "determinant vanishes for both candidate bases");
  }
  rep.determinant = det;
  rep.det_degree = det.total_degree();
  rep.denominator_primes = det.denominator_primes();
  return rep;
}

GradedBimodule bs_elementary(const SoergelContext& ctx, int simple_index,
                             const SemisimplePoint& s) {
  const RootDatum& rd = ctx.datum();
  const WeylGroup& W = ctx.weyl();
  if (simple_index < 0 || simple_index >= rd.num_simple())
    fail(Errc::InvalidArgument, "simple index out of range");
  int root = rd.simple_indices()[simple_index];
  int refl = W.reflection(root);
  int nv = ctx.nvars();

  GradedBimodule m;
  m.target = s;
  m.source = SemisimplePoint(W.act_point(refl, s.coords));

  bool wall = coroot_eval(s, rd.coroots()[root]).is_zero();
  if (wall) {
    // R (x)_{R^s} R, left basis {1 (x) 1, 1 (x) alpha^vee}.
    Poly av = ctx.coroot_poly(root);
    m.degrees = {0, 1};
    for (int j = 0; j < nv; ++j) {
      Poly yj = Poly::variable(nv, j);
      Poly a = (yj + ctx.act(refl, yj)).scaled(Rat(1, 2));
      Rat b(rd.roots()[root][j], 2);  // <alpha, e_j> / 2
      PolyMat rho(2, std::vector<Poly>(2, Poly(nv)));
      rho[0][0] = a;
      rho[0][1] = (av * av).scaled(b);
      rho[1][0] = Poly::constant(nv, b);
      rho[1][1] = a;
      m.right_action.push_back(std::move(rho));
    }
    m.right_basis = {{Poly::constant(nv, 1), Poly(nv)}, {av, Poly(nv)}};
    m.support = {W.identity(), refl};
  } else {
    // Graph of the reflection: rank 1, right action twisted by it.
    m.degrees = {0};
    for (int j = 0; j < nv; ++j) {
      PolyMat rho(1, std::vector<Poly>(1, ctx.act(refl, Poly::variable(nv, j))));
      m.right_action.push_back(std::move(rho));
    }
    m.right_basis = {{Poly::constant(nv, 1)}};
    m.support = {refl};
  }
  std::sort(m.support.begin(), m.support.end());
  return m;
}

namespace {

void check_right_action(const GradedBimodule& m, int nv) {
  // Commutation and homogeneity of the right action matrices.
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b)
      if (!poly_mat_equal(poly_mat_mul(m.right_action[a], m.right_action[b]),
                          poly_mat_mul(m.right_action[b], m.right_action[a])))
        fail(Errc::ValidationFailure, "right action matrices do not commute");
  for (int v = 0; v < nv; ++v)
    for (int r = 0; r < m.rank(); ++r)
      for (int c = 0; c < m.rank(); ++c) {
        const Poly& e = m.right_action[v][r][c];
        if (!e.is_zero() && !e.is_homogeneous(m.degrees[c] + 1 - m.degrees[r]))
          fail(Errc::ValidationFailure, "right action entry has wrong degree");
      }
}

// Homogeneous component dimensions and monomial bases.
std::vector<Poly::Monomial> monomials_of_degree(int nv, int d) {
  std::vector<Poly::Monomial> out;
  if (d < 0) return out;
  Poly::Monomial cur(nv, 0);
  // Iterative enumeration of compositions of d into nv parts.
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == nv - 1) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[pos] = e;
      rec(pos + 1, remaining - e);
    }
  };
  if (nv == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(0, d);
  return out;
}

// Expresses target (left coords, homogeneous of total degree d) as
// sum_i v_i . g_i with g_i homogeneous of degree d - c_i; returns success.
bool solve_in_right_span(const GradedBimodule& m, const std::vector<Poly>& target, int d,
                         int nv) {
  // Row index space: (left coordinate k, monomial of degree d - degrees[k]).
  std::vector<std::pair<int, Poly::Monomial>> rows;
  for (int k = 0; k < m.rank(); ++k)
    for (auto& mono : monomials_of_degree(nv, d - m.degrees[k])) rows.push_back({k, mono});
  // Column index space: (right basis i, monomial of degree d - c_i).
  struct Col {
    std::vector<Rat> entries;
  };
  std::vector<Col> cols;
  for (int i = 0; i < int(m.right_basis.size()); ++i) {
    int ci = -1;
    for (int k = 0; k < m.rank(); ++k)
      if (!m.right_basis[i][k].is_zero())
        ci = m.right_basis[i][k].total_degree() + m.degrees[k];
    if (ci < 0) fail(Errc::SideFreenessFailure, "zero right basis vector");
    for (auto& mono : monomials_of_degree(nv, d - ci)) {
      // v_i . y^mono: apply the monomial of right-action matrices.
      std::vector<Poly> vec(m.rank(), Poly(nv));
      for (int k = 0; k < m.rank(); ++k) vec[k] = m.right_basis[i][k];
      for (int t = 0; t < nv; ++t)
        for (int e = 0; e < mono[t]; ++e) {
          std::vector<Poly> next(m.rank(), Poly(nv));
          for (int r = 0; r < m.rank(); ++r)
            for (int c = 0; c < m.rank(); ++c)
              next[r] = next[r] + m.right_action[t][r][c] * vec[c];
          vec = std::move(next);
        }
      Col col;
      for (auto& [k, rmono] : rows) col.entries.push_back(vec[k].coeff(rmono));
      cols.push_back(std::move(col));
    }
  }
  std::vector<Rat> rhs;
  for (auto& [k, rmono] : rows) rhs.push_back(target[k].coeff(rmono));

  // Exact Gaussian elimination on the (rows x cols) system.
  size_t nr = rows.size(), nc = cols.size();
  std::vector<std::vector<Rat>> a(nr, std::vector<Rat>(nc + 1));
  for (size_t r = 0; r < nr; ++r) {
    for (size_t c = 0; c < nc; ++c) a[r][c] = cols[c].entries[r];
    a[r][nc] = rhs[r];
  }
  size_t rank = 0;
  for (size_t c = 0; c < nc && rank < nr; ++c) {
    size_t pivot = rank;
    while (pivot < nr && a[pivot][c] == 0) ++pivot;
    if (pivot == nr) continue;
    std::swap(a[rank], a[pivot]);
    Rat pv = a[rank][c];
    for (size_t cc = c; cc <= nc; ++cc) a[rank][cc] /= pv;
    for (size_t r = 0; r < nr; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (size_t cc = c; cc <= nc; ++cc) a[r][cc] -= f * a[rank][cc];
    }
    ++rank;
  }
  // Consistent iff no row reads 0 = nonzero.
  for (size_t r = 0; r < nr; ++r) {
    bool all_zero = true;
    for (size_t c = 0; c < nc; ++c)
      if (a[r][c] != 0) all_zero = false;
    if (all_zero && a[r][nc] != 0) return false;
  }
  return true;
}

}  // namespace

void certify_right_freeness(const GradedBimodule& m) {
  int nv = int(m.right_action.size());
  if (m.right_basis.size() != size_t(m.rank()))
    fail(Errc::SideFreenessFailure, "right basis has wrong cardinality");
  // Degrees of the candidates must match the left degrees as multisets; the
  // Hilbert series of the free right module then agrees with the module's,
  // so right-generation implies right-freeness.
  std::vector<int> right_degrees;
  for (const auto& v : m.right_basis) {
    int deg = -1;
    for (int k = 0; k < m.rank(); ++k) {
      if (v[k].is_zero()) continue;
      int d = v[k].total_degree() + m.degrees[k];
      if (!v[k].is_homogeneous(d - m.degrees[k]))
        fail(Errc::SideFreenessFailure, "right basis vector is not homogeneous");
      if (deg >= 0 && d != deg)
        fail(Errc::SideFreenessFailure, "right basis vector is not homogeneous");
      deg = d;
    }
    right_degrees.push_back(deg);
  }
  std::vector<int> left_sorted = m.degrees, right_sorted = right_degrees;
  std::sort(left_sorted.begin(), left_sorted.end());
  std::sort(right_sorted.begin(), right_sorted.end());
  if (left_sorted != right_sorted)
    fail(Errc::SideFreenessFailure, "right basis degrees differ from left degrees");

  // (b) every left basis element lies in the right span.
  for (int j = 0; j < m.rank(); ++j) {
    std::vector<Poly> e(m.rank(), Poly(nv));
    e[j] = Poly::constant(nv, 1);
    if (!solve_in_right_span(m, e, m.degrees[j], nv))
      fail(Errc::SideFreenessFailure, "left basis element escapes the right span");
  }
  // (c) the right span is stable under left multiplication by variables:
  // with (b), the span is then a sub-bimodule containing the left basis,
  // hence everything.
  for (int t = 0; t < nv; ++t)
    for (int i = 0; i < m.rank(); ++i) {
      std::vector<Poly> target(m.rank(), Poly(nv));
      for (int k = 0; k < m.rank(); ++k)
        target[k] = Poly::variable(nv, t) * m.right_basis[i][k];
      int ci = right_degrees[i];
      if (!solve_in_right_span(m, target, ci + 1, nv))
        fail(Errc::SideFreenessFailure, "right span is not stable under left multiplication");
    }
}

GradedBimodule bs_convolve(const SoergelContext& ctx, const GradedBimodule& m,
                           const GradedBimodule& n) {
  if (!(m.target == n.source))
    fail(Errc::EndpointMismatch, "convolution endpoints do not match");
  const WeylGroup& W = ctx.weyl();
  int nv = ctx.nvars();
  int rm = m.rank(), rn = n.rank();

  GradedBimodule out;
  out.source = m.source;
  out.target = n.target;
  for (int i = 0; i < rm; ++i)
    for (int j = 0; j < rn; ++j) out.degrees.push_back(m.degrees[i] + n.degrees[j]);

  // rho_{M (x) N}(y)[(a,j),(k,l)] = rho_M(rho_N(y)_{jl})_{ak}.
  for (int v = 0; v < nv; ++v) {
    PolyMat rho(rm * rn, std::vector<Poly>(rm * rn, Poly(nv)));
    for (int j = 0; j < rn; ++j)
      for (int l = 0; l < rn; ++l) {
        const Poly& middle = n.right_action[v][j][l];
        if (middle.is_zero()) continue;
        PolyMat onm = poly_of_matrices(middle, m.right_action, rm);
        for (int a = 0; a < rm; ++a)
          for (int k = 0; k < rm; ++k)
            rho[a * rn + j][k * rn + l] = rho[a * rn + j][k * rn + l] + onm[a][k];
      }
    out.right_action.push_back(std::move(rho));
  }

  // Right basis: tensor of the factor right bases. v^M_i (x) v^N_j has left
  // coordinates sum_l rho_M(q_l) p at slot (.,l) for v^N_j = sum_l q_l e_l.
  for (int i = 0; i < rm; ++i)
    for (int j = 0; j < rn; ++j) {
      std::vector<Poly> coords(rm * rn, Poly(nv));
      for (int l = 0; l < rn; ++l) {
        const Poly& q = n.right_basis[j][l];
        if (q.is_zero()) continue;
        PolyMat onm = poly_of_matrices(q, m.right_action, rm);
        std::vector<Poly> part(rm, Poly(nv));
        for (int a = 0; a < rm; ++a)
          for (int k = 0; k < rm; ++k) part[a] = part[a] + onm[a][k] * m.right_basis[i][k];
        for (int a = 0; a < rm; ++a) coords[a * rn + l] = coords[a * rn + l] + part[a];
      }
      out.right_basis.push_back(std::move(coords));
    }

  std::set<int> support;
  for (int u : m.support)
    for (int v : n.support) support.insert(W.mult(u, v));
  out.support.assign(support.begin(), support.end());

  check_right_action(out, nv);
  certify_right_freeness(out);
  return out;
}

GradedBimodule bs_word(const SoergelContext& ctx, const std::vector<int>& word,
                       const SemisimplePoint& s) {
  const WeylGroup& W = ctx.weyl();
  // Unit bimodule at s for the empty word.
  int nv = ctx.nvars();
  GradedBimodule acc;
  acc.source = s;
  acc.target = s;
  acc.degrees = {0};
  for (int j = 0; j < nv; ++j)
    acc.right_action.push_back(PolyMat(1, std::vector<Poly>(1, Poly::variable(nv, j))));
  acc.right_basis = {{Poly::constant(nv, 1)}};
  acc.support = {W.identity()};
  if (word.empty()) return acc;

  // Running points: the i-th factor is BS(w_i, (w_{i+1}..w_n) s).
  std::vector<SemisimplePoint> running(word.size() + 1);
  running[word.size()] = s;
  for (int i = int(word.size()) - 1; i >= 0; --i) {
    int refl = W.simple(word[i]);
    running[i] = SemisimplePoint(W.act_point(refl, running[i + 1].coords));
  }
  GradedBimodule out = bs_elementary(ctx, word[0], running[1]);
  for (size_t i = 1; i < word.size(); ++i)
    out = bs_convolve(ctx, out, bs_elementary(ctx, word[i], running[i + 1]));
  return out;
}

bool graph_block_check(const SoergelContext& ctx, const Block& beta) {
  const WeylGroup& W = ctx.weyl();
  const RootDatum& rd = ctx.datum();
  const std::vector<int>& word = W.word(beta.w_min);

  // No letter may be a wall letter for its running point.
  SemisimplePoint running = beta.target;
  for (int i = int(word.size()) - 1; i >= 0; --i) {
    int root = rd.simple_indices()[word[i]];
    if (coroot_eval(running, rd.coroots()[root]).is_zero())
      fail(Errc::GraphCheckFailure, "minimal block word crosses a wall");
    running = SemisimplePoint(W.act_point(W.simple(word[i]), running.coords));
  }
  if (!(running == beta.source))
    fail(Errc::GraphCheckFailure, "word does not transport target to source");

  GradedBimodule m = bs_word(ctx, word, beta.target);
  if (m.rank() != 1) fail(Errc::GraphCheckFailure, "minimal block module is not rank 1");
  int nv = ctx.nvars();
  for (int j = 0; j < nv; ++j) {
    Poly expected = ctx.act(beta.w_min, Poly::variable(nv, j));
    if (!(m.right_action[j][0][0] == expected))
      fail(Errc::GraphCheckFailure, "right action is not the w_beta twist");
  }
  if (m.support != std::vector<int>{beta.w_min})
    fail(Errc::GraphCheckFailure, "support is not the graph of w_beta");
  if (!std::binary_search(beta.members.begin(), beta.members.end(), m.support[0]))
    fail(Errc::GraphCheckFailure, "support element escapes the block");
  certify_right_freeness(m);
  return true;
}

ReducednessReport reducedness_toy(const SoergelContext& ctx, int simple_index,
                                  const SemisimplePoint& s) {
  const RootDatum& rd = ctx.datum();
  ReducednessReport rep;
  int root = rd.simple_indices()[simple_index];
  if (!coroot_eval(s, rd.coroots()[root]).is_zero()) {
    rep.applicable = false;  // twist case: rank-1 graph, trivially reduced
    return rep;
  }
  rep.applicable = true;
  GradedBimodule m = bs_elementary(ctx, simple_index, s);

  // Characteristic polynomial of the right action of alpha^vee, in an
  // auxiliary last variable t: expect t^2 - (alpha^vee)^2.
  int nv = ctx.nvars();
  PolyMat rho = poly_of_matrices(Poly::linear(rd.coroots()[root]), m.right_action, 2);
  Poly tr = rho[0][0] + rho[1][1];
  Poly det = rho[0][0] * rho[1][1] - rho[0][1] * rho[1][0];

  auto lift = [&](const Poly& p) {  // embed into nv+1 variables
    Poly out(nv + 1);
    for (const auto& [mono, c] : p.terms()) {
      Poly::Monomial ext = mono;
      ext.push_back(0);
      out.set_coeff(ext, c);
    }
    return out;
  };
  Poly t = Poly::variable(nv + 1, nv);
  Poly chi = t * t - t * lift(tr) + lift(det);
  rep.char_poly = chi;

  // Squarefree certificate: chi = (t - av)(t + av) with av != 0.
  Poly av = lift(Poly::linear(rd.coroots()[root]));
  Poly factored = (t - av) * (t + av);
  rep.squarefree = (chi == factored) && !av.is_zero();
  return rep;
}

}  // namespace weylkit
