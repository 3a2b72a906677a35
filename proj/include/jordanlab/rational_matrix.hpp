#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace jordanlab::linalg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

/// Dense matrix of exact rationals (always in lowest terms).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_integers(std::size_t rows, std::size_t cols, const std::vector<long long>& entries);
  /// Columns of the result are the given vectors.
  static RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);
  /// Stacks matrices with equal column counts.
  static RationalMatrix vstack(const std::vector<RationalMatrix>& blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalMatrix scaled(const Rational& s) const;
  RationalVector apply(const RationalVector& v) const;
  RationalMatrix transpose() const;
  Rational trace() const;
  bool operator==(const RationalMatrix& other) const = default;

  bool is_integral() const;
  std::size_t rank() const;

  /// Basis of the right kernel, one primitive integer vector per free
  /// column, computed by fraction-free elimination.
  std::vector<RationalVector> kernel() const;

  /// Throws InvalidArgument when singular or not square.
  RationalMatrix inverse() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Coefficients, lowest degree first.
using Polynomial = std::vector<Rational>;

Polynomial characteristic_polynomial(const RationalMatrix& a);

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
std::vector<Integer> cyclotomic(unsigned m);

struct CyclotomicFactor {
  unsigned order = 0;  // m in Phi_m
  unsigned degree = 0;
  unsigned multiplicity = 0;
};

struct CyclotomicFactorization {
  std::vector<CyclotomicFactor> factors;
  std::size_t residual_degree = 0;  // degree of the part left after removing cyclotomic factors
};

CyclotomicFactorization cyclotomic_factorization(const Polynomial& p);

}  // namespace jordanlab::linalg
