#include "rootdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace weylkit {

namespace {

Vec reflect_vec(const Vec& x, const Vec& root, const Vec& coroot, bool char_side) {
  // char side: x - <x, coroot> root ; cochar side: x - <root, x> coroot
  i64 c = char_side ? RootDatum::pair(x, coroot) : RootDatum::pair(root, x);
  Vec out = x;
  const Vec& dir = char_side ? root : coroot;
  for (size_t i = 0; i < out.size(); ++i) out[i] -= c * dir[i];
  return out;
}

// Solves S x = target for x over Q where S has full column rank, verifying
// that x is integral; returns false if no integral solution exists.
bool solve_integer_coords(const std::vector<Vec>& basis_cols, const Vec& target, Vec& out) {
  int n = int(target.size());
  int k = int(basis_cols.size());
  if (k == 0) return std::all_of(target.begin(), target.end(), [](i64 v) { return v == 0; });
  // Pick k rows giving an invertible k x k submatrix, greedily.
  std::vector<int> rows;
  for (int r = 0; r < n && int(rows.size()) < k; ++r) {
    rows.push_back(r);
    IntMat sub(int(rows.size()), k);
    for (int i = 0; i < int(rows.size()); ++i)
      for (int j = 0; j < k; ++j) sub.at(i, j) = basis_cols[j][rows[i]];
    // keep the row only if it increases the rank (test via SNF nonzero count)
    auto snf = smith_normal_form(sub);
    int rank = 0;
    for (i64 d : snf.diagonal)
      if (d != 0) ++rank;
    if (rank < int(rows.size())) rows.pop_back();
  }
  if (int(rows.size()) < k) return false;  // dependent columns
  IntMat s0(k, k);
  Vec t0(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) s0.at(i, j) = basis_cols[j][rows[i]];
    t0[i] = target[rows[i]];
  }
  i64 d0 = s0.det();
  if (d0 == 0) return false;
  out.assign(k, 0);
  for (int j = 0; j < k; ++j) {
    IntMat sj = s0;
    for (int i = 0; i < k; ++i) sj.at(i, j) = t0[i];
    i64 dj = sj.det();
    if (dj % d0 != 0) return false;
    out[j] = dj / d0;
  }
  // Verify on all coordinates.
  for (int r = 0; r < n; ++r) {
    i64 acc = 0;
    for (int j = 0; j < k; ++j) acc += basis_cols[j][r] * out[j];
    if (acc != target[r]) return false;
  }
  return true;
}

IntMat catalogue_cartan(char letter, int rank) {
  IntMat c(rank, rank);
  for (int i = 0; i < rank; ++i) c.at(i, i) = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) { c.at(i, i + 1) = -1; c.at(i + 1, i) = -1; }
  };
  switch (letter) {
    case 'A':
      chain(rank);
      break;
    case 'B':  // last simple root short: <alpha_{n-1}, alpha_n^vee> = -2
      chain(rank);
      c.at(rank - 2, rank - 1) = -2;
      break;
    case 'C':
      chain(rank);
      c.at(rank - 1, rank - 2) = -2;
      break;
    case 'D':
      chain(rank - 1);
      c.at(rank - 3, rank - 1) = -1;
      c.at(rank - 1, rank - 3) = -1;
      break;
    case 'E':
      // nodes 0-1-2-3-... chain of rank-1 nodes, extra node attached to node 2
      chain(rank - 1);
      c.at(2, rank - 1) = -1;
      c.at(rank - 1, 2) = -1;
      break;
    case 'F':
      chain(4);
      c.at(1, 2) = -2;
      c.at(2, 1) = -1;
      break;
    case 'G':
      c.at(0, 1) = -1;
      c.at(1, 0) = -3;
      break;
    default:
      fail(Errc::UnrecognizedType, "unknown catalogue letter");
  }
  return c;
}

bool cartan_isomorphic(const IntMat& a, const IntMat& b) {
  int k = a.rows();
  if (b.rows() != k) return false;
  std::vector<int> perm(k, -1);
  std::vector<bool> used(k, false);
  // Backtracking: perm[i] = index in a matched to node i of b.
  auto consistent = [&](int i, int cand) {
    for (int j = 0; j < i; ++j) {
      if (b.at(i, j) != a.at(cand, perm[j])) return false;
      if (b.at(j, i) != a.at(perm[j], cand)) return false;
    }
    return true;
  };
  std::vector<int> stack{0};
  std::vector<int> next(k, 0);
  int i = 0;
  while (i >= 0) {
    if (i == k) return true;
    bool advanced = false;
    for (int cand = next[i]; cand < k; ++cand) {
      if (used[cand] || !consistent(i, cand)) continue;
      perm[i] = cand;
      used[cand] = true;
      next[i] = cand + 1;
      ++i;
      if (i < k) next[i] = 0;
      advanced = true;
      break;
    }
    if (!advanced) {
      next[i] = 0;
      --i;
      if (i >= 0) { used[perm[i]] = false; perm[i] = -1; }
    }
  }
  return false;
}

}  // namespace

i64 RootDatum::pair(const Vec& x, const Vec& lambda) {
  if (x.size() != lambda.size()) fail(Errc::InvalidArgument, "pairing size mismatch");
  i64 acc = 0;
  for (size_t i = 0; i < x.size(); ++i) acc += x[i] * lambda[i];
  return acc;
}

RootDatum RootDatum::build(int rank, const std::vector<Vec>& simple_roots,
                           const std::vector<Vec>& simple_coroots, const std::string& name) {
  if (rank < 0) fail(Errc::InvalidArgument, "negative rank");
  if (simple_roots.size() != simple_coroots.size())
    fail(Errc::InvalidArgument, "simple roots/coroots count mismatch");
  int k = int(simple_roots.size());
  for (const Vec& v : simple_roots)
    if (int(v.size()) != rank) fail(Errc::InvalidArgument, "simple root dimension mismatch");
  for (const Vec& v : simple_coroots)
    if (int(v.size()) != rank) fail(Errc::InvalidArgument, "simple coroot dimension mismatch");

  // Cartan conditions on the simple pairing matrix.
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      i64 c = pair(simple_roots[i], simple_coroots[j]);
      i64 ct = pair(simple_roots[j], simple_coroots[i]);
      if (i == j && c != 2) fail(Errc::InvalidPairing, "diagonal pairing is not 2");
      if (i != j) {
        if (c > 0) fail(Errc::InvalidPairing, "positive off-diagonal pairing");
        if ((c == 0) != (ct == 0)) fail(Errc::InvalidPairing, "asymmetric zero in Cartan matrix");
      }
    }
  }

  RootDatum rd;
  rd.rank_ = rank;
  rd.name_ = name;

  // Reflection closure over simple reflections, carrying the paired coroot.
  std::map<Vec, int> seen;
  std::deque<int> queue;
  for (int i = 0; i < k; ++i) {
    if (seen.count(simple_roots[i]))
      fail(Errc::InvalidPairing, "duplicate simple root");
    seen[simple_roots[i]] = int(rd.roots_.size());
    rd.simple_.push_back(int(rd.roots_.size()));
    rd.roots_.push_back(simple_roots[i]);
    rd.coroots_.push_back(simple_coroots[i]);
    queue.push_back(rd.simple_.back());
  }
  while (!queue.empty()) {
    int idx = queue.front();
    queue.pop_front();
    for (int i = 0; i < k; ++i) {
      Vec r = reflect_vec(rd.roots_[idx], simple_roots[i], simple_coroots[i], true);
      if (seen.count(r)) continue;
      Vec cr = reflect_vec(rd.coroots_[idx], simple_roots[i], simple_coroots[i], false);
      seen[r] = int(rd.roots_.size());
      rd.roots_.push_back(r);
      rd.coroots_.push_back(cr);
      queue.push_back(int(rd.roots_.size()) - 1);
      if (int(rd.roots_.size()) > kMaxRoots)
        fail(Errc::NotFiniteType, "reflection closure exceeded " + std::to_string(kMaxRoots) +
                                      " roots");
    }
  }

  rd.index_roots();
  rd.validate();
  return rd;
}

void RootDatum::index_roots() {
  int k = num_simple();
  std::vector<Vec> simple_cols;
  for (int i = 0; i < k; ++i) simple_cols.push_back(simple_root(i));
  positive_.assign(roots_.size(), false);
  simple_coords_.assign(roots_.size(), Vec{});
  for (size_t r = 0; r < roots_.size(); ++r) {
    Vec coords;
    if (!solve_integer_coords(simple_cols, roots_[r], coords))
      fail(Errc::ValidationFailure, "root is not an integral combination of simple roots");
    bool nonneg = std::all_of(coords.begin(), coords.end(), [](i64 v) { return v >= 0; });
    bool nonpos = std::all_of(coords.begin(), coords.end(), [](i64 v) { return v <= 0; });
    if (!nonneg && !nonpos)
      fail(Errc::ValidationFailure, "root has mixed signs in the simple basis");
    positive_[r] = nonneg;
    simple_coords_[r] = coords;
  }
}

int RootDatum::root_index(const Vec& root) const {
  for (size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i] == root) return int(i);
  return -1;
}

IntMat RootDatum::cartan_matrix() const {
  int k = num_simple();
  IntMat c(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) c.at(i, j) = pair(simple_root(i), simple_coroot(j));
  return c;
}

IntMat RootDatum::reflection_char(int root_index) const {
  const Vec& a = roots_[root_index];
  const Vec& av = coroots_[root_index];
  IntMat m = IntMat::identity(rank_);
  for (int r = 0; r < rank_; ++r)
    for (int c = 0; c < rank_; ++c) m.at(r, c) -= a[r] * av[c];
  return m;
}

IntMat RootDatum::reflection_cochar(int root_index) const {
  return reflection_char(root_index).transpose();
}

RootDatum RootDatum::dual(const std::string& new_name) const {
  RootDatum d;
  d.rank_ = rank_;
  d.name_ = new_name.empty() ? (name_.empty() ? "" : "dual(" + name_ + ")") : new_name;
  d.roots_ = coroots_;
  d.coroots_ = roots_;
  d.simple_ = simple_;
  d.index_roots();
  d.validate();
  return d;
}

RootDatum RootDatum::levi(const std::vector<int>& simple_subset, const std::string& new_name) const {
  std::set<int> subset(simple_subset.begin(), simple_subset.end());
  for (int i : subset)
    if (i < 0 || i >= num_simple()) fail(Errc::InvalidArgument, "levi subset out of range");
  std::vector<int> keep;
  for (size_t r = 0; r < roots_.size(); ++r) {
    bool supported = true;
    for (int i = 0; i < num_simple() && supported; ++i)
      if (simple_coords_[r][i] != 0 && !subset.count(i)) supported = false;
    if (supported) keep.push_back(int(r));
  }
  RootDatum l;
  l.rank_ = rank_;
  l.name_ = new_name;
  for (int idx : keep) {
    l.roots_.push_back(roots_[idx]);
    l.coroots_.push_back(coroots_[idx]);
  }
  for (int i = 0; i < num_simple(); ++i) {
    if (!subset.count(i)) continue;
    auto it = std::find(keep.begin(), keep.end(), simple_[i]);
    l.simple_.push_back(int(it - keep.begin()));
  }
  l.index_roots();
  l.validate();
  return l;
}

RootDatum RootDatum::subdatum(const std::vector<int>& root_indices,
                              const std::string& new_name) const {
  RootDatum s;
  s.rank_ = rank_;
  s.name_ = new_name;
  std::set<Vec> member_roots;
  for (int idx : root_indices) member_roots.insert(roots_[idx]);
  std::vector<int> positives;
  for (int idx : root_indices) {
    s.roots_.push_back(roots_[idx]);
    s.coroots_.push_back(coroots_[idx]);
    if (positive_[idx]) positives.push_back(int(s.roots_.size()) - 1);
  }
  // Simple = positive and not a sum of two positive members.
  for (int i : positives) {
    bool is_sum = false;
    for (int a : positives) {
      if (is_sum) break;
      for (int b : positives) {
        Vec sum(rank_);
        for (int t = 0; t < rank_; ++t) sum[t] = s.roots_[a][t] + s.roots_[b][t];
        if (sum == s.roots_[i]) { is_sum = true; break; }
      }
    }
    if (!is_sum) s.simple_.push_back(i);
  }
  std::vector<bool> inherited;
  for (int idx : root_indices) inherited.push_back(positive_[idx]);
  s.index_roots();
  // Positivity with respect to the subsystem base must agree with the
  // ambient positivity.
  for (size_t i = 0; i < inherited.size(); ++i)
    if (s.positive_[i] != inherited[i])
      fail(Errc::ValidationFailure, "subsystem positivity disagrees with ambient positivity");
  s.validate();
  return s;
}

RootDatum::FundamentalGroupInfo RootDatum::fundamental_group(Pi1Mode) const {
  // Both modes reduce to the same Smith computation: the torsion subgroup of
  // X_*/Z Phi^vee equals (X_* cap Q Phi^vee)/Z Phi^vee for any sublattice.
  FundamentalGroupInfo info;
  int k = num_simple();
  IntMat m(rank_, std::max(k, 1));
  for (int j = 0; j < k; ++j)
    for (int r = 0; r < rank_; ++r) m.at(r, j) = simple_coroot(j)[r];
  auto snf = smith_normal_form(m);
  int nonzero = 0;
  for (i64 d : snf.diagonal) {
    if (d != 0) ++nonzero;
    if (d > 1) {
      info.invariant_factors.push_back(d);
      info.torsion_order *= d;
    }
  }
  info.free_rank = rank_ - nonzero;
  return info;
}

CartanClassification RootDatum::classify() const {
  CartanClassification out;
  int k = num_simple();
  IntMat c = cartan_matrix();
  // Connected components of the Cartan graph.
  std::vector<int> comp(k, -1);
  int ncomp = 0;
  for (int i = 0; i < k; ++i) {
    if (comp[i] >= 0) continue;
    std::deque<int> q{i};
    comp[i] = ncomp;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v = 0; v < k; ++v)
        if (comp[v] < 0 && c.at(u, v) != 0) { comp[v] = ncomp; q.push_back(v); }
    }
    ++ncomp;
  }
  for (int cc = 0; cc < ncomp; ++cc) {
    std::vector<int> nodes;
    for (int i = 0; i < k; ++i)
      if (comp[i] == cc) nodes.push_back(i);
    int m = int(nodes.size());
    IntMat sub(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) sub.at(i, j) = c.at(nodes[i], nodes[j]);
    struct Cand { char letter; int min_rank; };
    static const Cand cands[] = {{'A', 1}, {'C', 2}, {'B', 3}, {'D', 4},
                                 {'G', 2}, {'F', 4}, {'E', 6}};
    bool matched = false;
    for (const Cand& cd : cands) {
      if (m < cd.min_rank) continue;
      if (cd.letter == 'G' && m != 2) continue;
      if (cd.letter == 'F' && m != 4) continue;
      if (cd.letter == 'E' && (m < 6 || m > 8)) continue;
      if (cartan_isomorphic(sub, catalogue_cartan(cd.letter, m))) {
        CartanFactor f{cd.letter, m, ""};
        if (cd.letter == 'C' && m == 2) f.alias = "B2";
        out.components.push_back(f);
        matched = true;
        break;
      }
    }
    if (!matched) fail(Errc::UnrecognizedType, "Cartan component matches no finite type");
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const CartanFactor& a, const CartanFactor& b) { return a.label() < b.label(); });
  // Central torus rank: corank of the simple-root span in X^*.
  std::vector<Vec> cols;
  for (int i = 0; i < k; ++i) cols.push_back(simple_root(i));
  IntMat m2(rank_, std::max(k, 1));
  for (int j = 0; j < k; ++j)
    for (int r = 0; r < rank_; ++r) m2.at(r, j) = cols[j][r];
  auto snf = smith_normal_form(m2);
  int nonzero = 0;
  for (i64 d : snf.diagonal)
    if (d != 0) ++nonzero;
  out.central_torus_rank = rank_ - nonzero;
  return out;
}

void RootDatum::validate() const {
  if (int(positive_.size()) != num_roots()) fail(Errc::ValidationFailure, "datum not indexed");
  std::map<Vec, int> index;
  for (int i = 0; i < num_roots(); ++i) {
    if (index.count(roots_[i])) fail(Errc::ValidationFailure, "duplicate root");
    index[roots_[i]] = i;
  }
  for (int i = 0; i < num_roots(); ++i) {
    if (pair(roots_[i], coroots_[i]) != 2)
      fail(Errc::ValidationFailure, "<alpha, alpha^vee> != 2");
    // Reducedness: 2*alpha must not be a root.
    Vec twice = roots_[i];
    for (auto& x : twice) x *= 2;
    if (index.count(twice)) fail(Errc::ValidationFailure, "non-reduced root system");
  }
  // Every reflection permutes Phi, equivariantly on the coroot pairing.
  for (int i = 0; i < num_roots(); ++i) {
    for (int j = 0; j < num_roots(); ++j) {
      Vec r = reflect_vec(roots_[j], roots_[i], coroots_[i], true);
      auto it = index.find(r);
      if (it == index.end())
        fail(Errc::ValidationFailure, "reflection does not preserve the root set");
      Vec cr = reflect_vec(coroots_[j], roots_[i], coroots_[i], false);
      if (coroots_[it->second] != cr)
        fail(Errc::ValidationFailure, "root/coroot bijection is not reflection-equivariant");
    }
  }
  // Simple roots linearly independent (via SNF rank).
  int k = num_simple();
  if (k > 0) {
    IntMat m(rank_, k);
    for (int j = 0; j < k; ++j)
      for (int r = 0; r < rank_; ++r) m.at(r, j) = simple_root(j)[r];
    auto snf = smith_normal_form(m);
    int nonzero = 0;
    for (i64 d : snf.diagonal)
      if (d != 0) ++nonzero;
    if (nonzero != k) fail(Errc::ValidationFailure, "simple roots are linearly dependent");
  }
}

namespace {

RootDatum build_gl(int n) {
  std::vector<Vec> sr, sc;
  for (int i = 0; i + 1 < n; ++i) {
    Vec v(n, 0);
    v[i] = 1;
    v[i + 1] = -1;
    sr.push_back(v);
    sc.push_back(v);
  }
  return RootDatum::build(n, sr, sc, "GL" + std::to_string(n));
}

RootDatum build_sl(int n) {
  // X^* in the fundamental-weight basis: alpha_i = i-th row of the Cartan
  // matrix, alpha_i^vee = e_i.
  int r = n - 1;
  std::vector<Vec> sr, sc;
  for (int i = 0; i < r; ++i) {
    Vec row(r, 0);
    row[i] = 2;
    if (i > 0) row[i - 1] = -1;
    if (i + 1 < r) row[i + 1] = -1;
    sr.push_back(row);
    Vec e(r, 0);
    e[i] = 1;
    sc.push_back(e);
  }
  return RootDatum::build(r, sr, sc, "SL" + std::to_string(n));
}

RootDatum build_pgl(int n) {
  int r = n - 1;
  std::vector<Vec> sr, sc;
  for (int i = 0; i < r; ++i) {
    Vec e(r, 0);
    e[i] = 1;
    sr.push_back(e);
    Vec row(r, 0);
    row[i] = 2;
    if (i > 0) row[i - 1] = -1;
    if (i + 1 < r) row[i + 1] = -1;
    sc.push_back(row);
  }
  return RootDatum::build(r, sr, sc, "PGL" + std::to_string(n));
}

}  // namespace

bool RootDatum::is_builtin_name(const std::string& name) {
  if (name == "Sp4" || name == "SO5" || name == "SL2xSL2" || name == "G2") return true;
  for (const char* prefix : {"GL", "SL", "PGL", "T"}) {
    std::string p(prefix);
    if (name.size() > p.size() && name.compare(0, p.size(), p) == 0 &&
        std::all_of(name.begin() + p.size(), name.end(), ::isdigit))
      return true;
  }
  return false;
}

RootDatum RootDatum::builtin(const std::string& name) {
  if (name == "Sp4")
    return build(2, {{1, -1}, {0, 2}}, {{1, -1}, {0, 1}}, "Sp4");
  if (name == "SO5")
    return build(2, {{1, -1}, {0, 1}}, {{1, -1}, {0, 2}}, "SO5");
  if (name == "SL2xSL2")
    return build(2, {{2, 0}, {0, 2}}, {{1, 0}, {0, 1}}, "SL2xSL2");
  if (name == "G2")
    return build(2, {{2, -1}, {-3, 2}}, {{1, 0}, {0, 1}}, "G2");
  auto parse_n = [&](const std::string& prefix) -> int {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return -1;
    const std::string digits = name.substr(prefix.size());
    if (!std::all_of(digits.begin(), digits.end(), ::isdigit)) return -1;
    return std::stoi(digits);
  };
  if (int n = parse_n("GL"); n >= 1) {
    if (n > 9) fail(Errc::InvalidArgument, "GL rank too large for desk scale");
    if (n == 1) return build(1, {}, {}, "GL1");
    return build_gl(n);
  }
  if (int n = parse_n("PGL"); n >= 1) {
    if (n < 2 || n > 9) fail(Errc::InvalidArgument, "PGL requires 2 <= n <= 9");
    return build_pgl(n);
  }
  if (int n = parse_n("SL"); n >= 1) {
    if (n < 2 || n > 9) fail(Errc::InvalidArgument, "SL requires 2 <= n <= 9");
    return build_sl(n);
  }
  if (int n = parse_n("T"); n >= 1) {
    if (n > 9) fail(Errc::InvalidArgument, "torus rank too large");
    return build(n, {}, {}, "T" + std::to_string(n));
  }
  fail(Errc::InvalidArgument, "unknown builtin datum '" + name + "'");
}

}  // namespace weylkit
