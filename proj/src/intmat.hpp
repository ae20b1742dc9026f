#pragma once

#include "common.hpp"

namespace weylkit {

using Vec = std::vector<i64>;

// Dense square-or-rectangular integer matrix, row major. Sizes here are tiny
// (rank <= 8), so everything is exact and direct.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<Vec>& rows);
  static IntMat from_cols(const std::vector<Vec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  i64& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  i64 at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  Vec row(int r) const;
  Vec col(int c) const;

  IntMat transpose() const;
  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend IntMat operator+(const IntMat& a, const IntMat& b);
  friend IntMat operator-(const IntMat& a, const IntMat& b);
  IntMat scaled(i64 k) const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  std::vector<Frac> apply(const std::vector<Frac>& v) const;

  friend bool operator==(const IntMat& a, const IntMat& b) = default;
  friend auto operator<=>(const IntMat& a, const IntMat& b) = default;

  bool is_identity() const;
  i64 det() const;                 // Bareiss, exact
  IntMat inverse_unimodular() const;  // requires det = +-1
  IntMat inverse_transpose() const { return inverse_unimodular().transpose(); }

  std::string str() const;
  const std::vector<i64>& data() const { return a_; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<i64> a_;
};

struct SmithResult {
  IntMat u, d, v;            // u * m * v = d, u and v unimodular
  std::vector<i64> diagonal;  // nonnegative, divisibility chain d1 | d2 | ...
};

// Deterministic Smith normal form: pivot by smallest nonzero absolute value,
// ties broken by (row, col) position.
SmithResult smith_normal_form(const IntMat& m);

// Torsion invariant factors (> 1) of Z^rows / column span of m.
std::vector<i64> cokernel_invariants(const IntMat& m);

}  // namespace weylkit
