#include "jordanlab/rational_matrix.hpp"

#include <algorithm>
#include <sstream>

#include <boost/integer/common_factor.hpp>

#include "jordanlab/error.hpp"

namespace jordanlab::linalg {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

RationalMatrix RationalMatrix::from_integers(std::size_t rows, std::size_t cols,
                                             const std::vector<long long>& entries) {
  if (entries.size() != rows * cols) throw Error(ErrorCode::InvalidArgument, "entry count does not match shape");
  RationalMatrix out(rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) out.data_[i] = entries[i];
  return out;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns, std::size_t rows) {
  RationalMatrix out(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorCode::InvalidArgument, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) out.at(r, c) = columns[c][r];
  }
  return out;
}

RationalMatrix RationalMatrix::vstack(const std::vector<RationalMatrix>& blocks) {
  if (blocks.empty()) return {};
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorCode::InvalidArgument, "vstack column mismatch");
    rows += b.rows();
  }
  RationalMatrix out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(r0 * cols));
    r0 += b.rows();
  }
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::InvalidArgument, "product shape mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (rhs.at(k, j) != 0) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::InvalidArgument, "sum shape mismatch");
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::InvalidArgument, "difference shape mismatch");
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
  RationalMatrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

bool RationalMatrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return denominator(x) == 1; });
}

namespace {

struct Echelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> pivot_cols;  // pivot of row r is pivot_cols[r]
};

// Clears denominators row by row, then runs Bareiss elimination. Every
// intermediate entry is a minor of the scaled input, so the divisions by the
// previous pivot are exact.
Echelon fraction_free_echelon(const RationalMatrix& m) {
  Echelon e;
  e.rows.assign(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = boost::integer::lcm(l, Integer(denominator(m.at(i, j))));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = m.at(i, j);
      e.rows[i][j] = numerator(x) * (l / denominator(x));
    }
  }
  auto& a = e.rows;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Integer num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        if (num % prev != 0) throw Error(ErrorCode::InvalidArgument, "inexact fraction-free step");
        a[i][j] = num / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

std::size_t RationalMatrix::rank() const { return fraction_free_echelon(*this).pivot_cols.size(); }

std::vector<RationalVector> RationalMatrix::kernel() const {
  const Echelon e = fraction_free_echelon(*this);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(cols_);
    x[f] = 1;
    for (std::size_t r = e.pivot_cols.size(); r-- > 0;) {
      const std::size_t c = e.pivot_cols[r];
      Rational s = 0;
      for (std::size_t j = c + 1; j < cols_; ++j)
        if (x[j] != 0) s += Rational(e.rows[r][j]) * x[j];
      x[c] = -s / Rational(e.rows[r][c]);
    }
    // Scale to a primitive integer vector.
    Integer l = 1;
    for (const auto& v : x) l = boost::integer::lcm(l, Integer(denominator(v)));
    Integer g = 0;
    for (auto& v : x) {
      v *= Rational(l);
      g = boost::integer::gcd(g, Integer(abs(numerator(v))));
    }
    if (g > 1)
      for (auto& v : x) v /= Rational(g);
    basis.push_back(std::move(x));
  }
  return basis;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix a = *this, inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a.at(p, c) == 0) ++p;
    if (p == n) throw Error(ErrorCode::InvalidArgument, "matrix is singular");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(p, j), a.at(c, j));
        std::swap(inv.at(p, j), inv.at(c, j));
      }
    const Rational piv = a.at(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(c, j) /= piv;
      inv.at(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a.at(i, c) == 0) continue;
      const Rational f = a.at(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(c, j);
        inv.at(i, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

// Faddeev-LeVerrier; exact over the rationals.
Polynomial characteristic_polynomial(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::InvalidArgument, "characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  Polynomial c(n + 1);
  c[n] = 1;
  RationalMatrix m(n, n);
  const RationalMatrix id = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + id.scaled(c[n - k + 1]);
    c[n - k] = -(a * m).trace() / Rational(static_cast<long long>(k));
  }
  return c;
}

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Divides by a monic divisor; returns false when the remainder is non-zero.
bool divide_exact(const IntPoly& p, const IntPoly& d, IntPoly& quotient) {
  if (p.size() < d.size()) return false;
  IntPoly r = p;
  quotient.assign(p.size() - d.size() + 1, 0);
  for (std::size_t i = quotient.size(); i-- > 0;) {
    const Integer q = r[i + d.size() - 1];
    quotient[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) r[i + j] -= q * d[j];
  }
  return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace

std::vector<Integer> cyclotomic(unsigned m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic index 0");
  IntPoly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d) continue;
    IntPoly q;
    divide_exact(p, cyclotomic(d), q);
    p = std::move(q);
  }
  trim(p);
  return p;
}

CyclotomicFactorization cyclotomic_factorization(const Polynomial& p) {
  CyclotomicFactorization out;
  if (p.empty()) return out;
  IntPoly q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (denominator(p[i]) != 1) {
      out.residual_degree = p.size() - 1;
      return out;
    }
    q[i] = numerator(p[i]);
  }
  trim(q);
  if (q.back() != 1) {
    out.residual_degree = q.size() - 1;
    return out;
  }
  // phi(m) >= sqrt(m / 2), so orders beyond 2 deg^2 cannot divide.
  const std::size_t deg = q.size() - 1;
  for (unsigned m = 1; m <= 2 * deg * deg + 2 && q.size() > 1; ++m) {
    const IntPoly phi = cyclotomic(m);
    if (phi.size() > q.size()) continue;
    unsigned mult = 0;
    IntPoly next;
    while (q.size() >= phi.size() && divide_exact(q, phi, next)) {
      q = next;
      trim(q);
      ++mult;
    }
    if (mult) out.factors.push_back({m, static_cast<unsigned>(phi.size() - 1), mult});
  }
  out.residual_degree = q.size() - 1;
  return out;
}

}  // namespace jordanlab::linalg
