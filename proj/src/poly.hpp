#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "intmat.hpp"

namespace weylkit {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Exact multivariate polynomial over Q with a fixed variable count.
// Monomials are exponent vectors ordered lexicographically by std::map.
class Poly {
 public:
  using Monomial = std::vector<int>;

  explicit Poly(int nvars = 0) : nvars_(nvars) {}
  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int index);
  // Linear form sum coeffs[i] * y_i from an integer vector.
  static Poly linear(const Vec& coeffs);
  static Poly linear(int nvars, const std::vector<Rat>& coeffs);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous(int degree) const;
  Rat coeff(const Monomial& m) const;
  const std::map<Monomial, Rat>& terms() const { return terms_; }
  void set_coeff(const Monomial& m, const Rat& c);

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly scaled(const Rat& c) const;
  friend bool operator==(const Poly& a, const Poly& b) = default;

  // Substitutes y_i -> the linear form given by column i of m (an integer
  // matrix acting on the coefficient space).
  Poly linear_substitute(const IntMat& m) const;

  Rat evaluate(const std::vector<Rat>& point) const;

  // Exact division; throws DivisionFailure if the division leaves a remainder.
  friend Poly divide_exact(const Poly& num, const Poly& den);

  // All primes dividing any coefficient denominator.
  std::vector<i64> denominator_primes() const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_ = 0;
  std::map<Monomial, Rat> terms_;
  void trim();
};

// n x n matrix of polynomials; used for right actions and determinants.
using PolyMat = std::vector<std::vector<Poly>>;

PolyMat poly_mat_mul(const PolyMat& a, const PolyMat& b);
bool poly_mat_equal(const PolyMat& a, const PolyMat& b);
// Determinant by Laplace expansion with memoization over column subsets
// (division-free, exact).
Poly poly_mat_det(const PolyMat& m);
// Evaluates a polynomial at commuting matrix arguments: p(M_1, ..., M_k).
PolyMat poly_of_matrices(const Poly& p, const std::vector<PolyMat>& vars, int dim);

}  // namespace weylkit
