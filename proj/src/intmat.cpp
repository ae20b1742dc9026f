#include "intmat.hpp"

#include <algorithm>
#include <sstream>

namespace weylkit {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return IntMat(0, 0);
  IntMat m(int(rows.size()), int(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r) {
    if (rows[r].size() != rows[0].size())
      fail(Errc::InvalidArgument, "ragged matrix rows");
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

IntMat IntMat::from_cols(const std::vector<Vec>& cols) {
  return from_rows(cols).transpose();
}

Vec IntMat::row(int r) const {
  Vec v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec IntMat::col(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) fail(Errc::InvalidArgument, "matrix product size mismatch");
  IntMat m(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) {
      i64 x = a.at(r, k);
      if (x == 0) continue;
      for (int c = 0; c < b.cols(); ++c) m.at(r, c) += x * b.at(k, c);
    }
  return m;
}

IntMat operator+(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(Errc::InvalidArgument, "matrix sum size mismatch");
  IntMat m(a.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c) + b.at(r, c);
  return m;
}

IntMat operator-(const IntMat& a, const IntMat& b) { return a + b.scaled(-1); }

IntMat IntMat::scaled(i64 k) const {
  IntMat m = *this;
  for (auto& x : m.a_) x *= k;
  return m;
}

Vec IntMat::apply(const Vec& v) const {
  if (int(v.size()) != cols_) fail(Errc::InvalidArgument, "matrix apply size mismatch");
  Vec out(rows_, 0);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
  return out;
}

std::vector<Frac> IntMat::apply(const std::vector<Frac>& v) const {
  if (int(v.size()) != cols_) fail(Errc::InvalidArgument, "matrix apply size mismatch");
  std::vector<Frac> out(rows_);
  for (int r = 0; r < rows_; ++r) {
    Frac acc;
    for (int c = 0; c < cols_; ++c) acc = acc + at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

bool IntMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

i64 IntMat::det() const {
  if (rows_ != cols_) fail(Errc::InvalidArgument, "determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; entries stay bounded by minors.
  std::vector<std::vector<i64>> m(n, std::vector<i64>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m[r][c] = at(r, c);
  i64 sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) { swap_row = r; break; }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r)
      for (int c = k + 1; c < n; ++c)
        m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntMat IntMat::inverse_unimodular() const {
  i64 d = det();
  if (d != 1 && d != -1) fail(Errc::InvalidArgument, "matrix is not unimodular");
  int n = rows_;
  // Adjugate via cofactors; n <= 8 in practice.
  IntMat inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      IntMat minor(n - 1, n - 1);
      for (int i = 0, mi = 0; i < n; ++i) {
        if (i == r) continue;
        for (int j = 0, mj = 0; j < n; ++j) {
          if (j == c) continue;
          minor.at(mi, mj) = at(i, j);
          ++mj;
        }
        ++mi;
      }
      i64 cof = ((r + c) % 2 == 0 ? 1 : -1) * minor.det();
      inv.at(c, r) = cof * d;  // adj / det, det = +-1
    }
  return inv;
}

std::string IntMat::str() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (int c = 0; c < cols_; ++c) os << (c ? "," : "") << at(r, c);
  }
  os << "]";
  return os.str();
}

namespace {

struct Pivot {
  int r = -1, c = -1;
  i64 abs_val = 0;
};

Pivot find_pivot(const IntMat& m, int from) {
  Pivot best;
  for (int r = from; r < m.rows(); ++r)
    for (int c = from; c < m.cols(); ++c) {
      i64 v = m.at(r, c);
      if (v == 0) continue;
      i64 a = v < 0 ? -v : v;
      if (best.r < 0 || a < best.abs_val) best = {r, c, a};
    }
  return best;
}

void swap_rows(IntMat& m, IntMat& u, int a, int b) {
  if (a == b) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
  for (int c = 0; c < u.cols(); ++c) std::swap(u.at(a, c), u.at(b, c));
}

void swap_cols(IntMat& m, IntMat& v, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
  for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, a), v.at(r, b));
}

void add_row(IntMat& m, IntMat& u, int dst, int src, i64 k) {
  for (int c = 0; c < m.cols(); ++c) m.at(dst, c) += k * m.at(src, c);
  for (int c = 0; c < u.cols(); ++c) u.at(dst, c) += k * u.at(src, c);
}

void add_col(IntMat& m, IntMat& v, int dst, int src, i64 k) {
  for (int r = 0; r < m.rows(); ++r) m.at(r, dst) += k * m.at(r, src);
  for (int r = 0; r < v.rows(); ++r) v.at(r, dst) += k * v.at(r, src);
}

void negate_row(IntMat& m, IntMat& u, int r) {
  for (int c = 0; c < m.cols(); ++c) m.at(r, c) = -m.at(r, c);
  for (int c = 0; c < u.cols(); ++c) u.at(r, c) = -u.at(r, c);
}

}  // namespace

SmithResult smith_normal_form(const IntMat& input) {
  IntMat m = input;
  IntMat u = IntMat::identity(m.rows());
  IntMat v = IntMat::identity(m.cols());
  int n = std::min(m.rows(), m.cols());

  for (int t = 0; t < n; ++t) {
    for (;;) {
      Pivot p = find_pivot(m, t);
      if (p.r < 0) { t = n; break; }  // remaining block is zero
      swap_rows(m, u, t, p.r);
      swap_cols(m, v, t, p.c);
      bool clean = true;
      for (int r = t + 1; r < m.rows(); ++r) {
        if (m.at(r, t) == 0) continue;
        i64 q = m.at(r, t) / m.at(t, t);
        add_row(m, u, r, t, -q);
        if (m.at(r, t) != 0) clean = false;
      }
      for (int c = t + 1; c < m.cols(); ++c) {
        if (m.at(t, c) == 0) continue;
        i64 q = m.at(t, c) / m.at(t, t);
        add_col(m, v, c, t, -q);
        if (m.at(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide every remaining entry.
      bool divides = true;
      for (int r = t + 1; r < m.rows() && divides; ++r)
        for (int c = t + 1; c < m.cols() && divides; ++c)
          if (m.at(r, c) % m.at(t, t) != 0) {
            add_row(m, u, t, r, 1);  // pull the offending row up and repeat
            divides = false;
          }
      if (divides) break;
    }
    if (t >= n) break;
  }
  for (int t = 0; t < n; ++t)
    if (m.at(t, t) < 0) negate_row(m, u, t);

  SmithResult res{u, m, v, {}};
  for (int t = 0; t < n; ++t) res.diagonal.push_back(m.at(t, t));
  return res;
}

std::vector<i64> cokernel_invariants(const IntMat& m) {
  SmithResult snf = smith_normal_form(m);
  std::vector<i64> inv;
  for (i64 d : snf.diagonal)
    if (d > 1) inv.push_back(d);
  return inv;
}

}  // namespace weylkit
