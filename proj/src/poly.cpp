#include "poly.hpp"

#include <algorithm>
#include <sstream>

namespace weylkit {

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
  return p;
}

Poly Poly::variable(int nvars, int index) {
  Poly p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.terms_[m] = 1;
  return p;
}

Poly Poly::linear(const Vec& coeffs) {
  Poly p(int(coeffs.size()));
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Monomial m(coeffs.size(), 0);
    m[i] = 1;
    p.terms_[m] = coeffs[i];
  }
  return p;
}

Poly Poly::linear(int nvars, const std::vector<Rat>& coeffs) {
  Poly p(nvars);
  for (int i = 0; i < nvars; ++i) {
    if (coeffs[i] == 0) continue;
    Monomial m(nvars, 0);
    m[i] = 1;
    p.terms_[m] = coeffs[i];
  }
  return p;
}

int Poly::total_degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (int e : m) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

bool Poly::is_homogeneous(int degree) const {
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (int e : m) d += e;
    if (d != degree) return false;
  }
  return true;
}

Rat Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::set_coeff(const Monomial& m, const Rat& c) {
  if (c == 0)
    terms_.erase(m);
  else
    terms_[m] = c;
}

void Poly::trim() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) fail(Errc::InvalidArgument, "polynomial variable count mismatch");
  Poly out = a;
  for (const auto& [m, c] : b.terms_) out.terms_[m] += c;
  out.trim();
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::scaled(const Rat& c) const {
  Poly out(nvars_);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_[m] = v * c;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) fail(Errc::InvalidArgument, "polynomial variable count mismatch");
  Poly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Poly::Monomial m(a.nvars_);
      for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
      out.terms_[m] += ca * cb;
    }
  out.trim();
  return out;
}

Poly Poly::linear_substitute(const IntMat& m) const {
  if (m.rows() != nvars_ || m.cols() != nvars_)
    fail(Errc::InvalidArgument, "substitution matrix size mismatch");
  std::vector<Poly> images;
  for (int i = 0; i < nvars_; ++i) {
    Vec col(nvars_);
    for (int r = 0; r < nvars_; ++r) col[r] = m.at(r, i);
    images.push_back(Poly::linear(col));
  }
  Poly out(nvars_);
  for (const auto& [mono, c] : terms_) {
    Poly term = Poly::constant(nvars_, c);
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < mono[i]; ++e) term = term * images[i];
    out = out + term;
  }
  return out;
}

Rat Poly::evaluate(const std::vector<Rat>& point) const {
  Rat acc = 0;
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m[i]; ++e) term *= point[i];
    acc += term;
  }
  return acc;
}

Poly divide_exact(const Poly& num, const Poly& den) {
  if (den.is_zero()) fail(Errc::DivisionFailure, "division by zero polynomial");
  Poly rem = num;
  Poly quot(num.nvars_);
  const auto& lead = *den.terms_.rbegin();  // lex-largest term of the divisor
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    Poly::Monomial diff(num.nvars_);
    for (int i = 0; i < num.nvars_; ++i) {
      diff[i] = rlead.first[i] - lead.first[i];
      if (diff[i] < 0)
        fail(Errc::DivisionFailure, "leading term does not divide remainder");
    }
    Rat c = rlead.second / lead.second;
    Poly t(num.nvars_);
    t.terms_[diff] = c;
    quot = quot + t;
    rem = rem - t * den;
  }
  return quot;
}

std::vector<i64> Poly::denominator_primes() const {
  std::set<i64> primes;
  for (const auto& [m, c] : terms_) {
    BigInt den = boost::multiprecision::denominator(c);
    for (i64 p = 2; den > 1; ++p) {
      if (p * p > den) {  // remaining factor is prime
        primes.insert(i64(den));
        break;
      }
      if (den % p == 0) {
        primes.insert(p);
        while (den % p == 0) den /= p;
      }
    }
  }
  return std::vector<i64>(primes.begin(), primes.end());
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print highest terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    Rat a = c < 0 ? Rat(-c) : c;
    bool coeff_one = a == 1;
    bool has_var = std::any_of(m.begin(), m.end(), [](int e) { return e > 0; });
    if (!coeff_one || !has_var) os << a.str();
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      os << (names.empty() ? "y" + std::to_string(i + 1) : names[i]);
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

PolyMat poly_mat_mul(const PolyMat& a, const PolyMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  PolyMat out(n, std::vector<Poly>(m, Poly(a.empty() ? 0 : a[0][0].nvars())));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] = out[i][j] + a[i][t] * b[t][j];
    }
  return out;
}

bool poly_mat_equal(const PolyMat& a, const PolyMat& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  }
  return true;
}

Poly poly_mat_det(const PolyMat& m) {
  int n = int(m.size());
  if (n == 0) fail(Errc::InvalidArgument, "determinant of empty matrix");
  int nv = m[0][0].nvars();
  // dp over column subsets: det of the submatrix using rows 0..popcount-1.
  std::vector<Poly> dp(size_t(1) << n, Poly(nv));
  dp[0] = Poly::constant(nv, 1);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int row = __builtin_popcount(mask) - 1;
    Poly acc(nv);
    int sign_toggle = 0;
    for (int c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      Poly contribution = m[row][c] * dp[mask & ~(1u << c)];
      acc = (sign_toggle % 2 == 0) ? acc + contribution : acc - contribution;
      ++sign_toggle;
    }
    dp[mask] = acc;
  }
  return dp[(1u << n) - 1];
}

PolyMat poly_of_matrices(const Poly& p, const std::vector<PolyMat>& vars, int dim) {
  int nv = p.nvars();
  PolyMat out(dim, std::vector<Poly>(dim, Poly(nv)));
  PolyMat id(dim, std::vector<Poly>(dim, Poly(nv)));
  for (int i = 0; i < dim; ++i) id[i][i] = Poly::constant(nv, 1);
  for (const auto& [m, c] : p.terms()) {
    PolyMat term = id;
    for (int i = 0; i < nv; ++i)
      for (int e = 0; e < m[i]; ++e) term = poly_mat_mul(term, vars[i]);
    for (int r = 0; r < dim; ++r)
      for (int col = 0; col < dim; ++col) out[r][col] = out[r][col] + term[r][col].scaled(c);
  }
  return out;
}

}  // namespace weylkit
