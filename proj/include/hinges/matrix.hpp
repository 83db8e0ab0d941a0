#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "hinges/rational.hpp"

namespace hinges {

// Dense matrix over exact rationals, row major. Values are immutable in
// spirit: all operations return fresh matrices. Zero-row matrices are legal
// (empty subspace bases); zero-column matrices are not.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> col(std::size_t j) const;

  RationalMatrix transpose() const;
  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator*(const Rational& c) const;
  bool operator==(const RationalMatrix& o) const;
  bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

  bool is_zero() const;

  // Reduced row echelon form plus pivot columns. Pivot scan is
  // top-to-bottom, left-to-right, first nonzero entry wins.
  std::pair<RationalMatrix, std::vector<std::size_t>> rref() const;
  std::size_t rank() const;

  // Rows spanning {x : (*this) * x = 0}.
  RationalMatrix kernel_basis() const;

  Rational det() const;
  RationalMatrix inverse() const;  // throws std::domain_error when singular

  RationalMatrix submatrix(const std::vector<std::size_t>& row_idx,
                           const std::vector<std::size_t>& col_idx) const;
  RationalMatrix vstack(const RationalMatrix& below) const;
  RationalMatrix hstack(const RationalMatrix& right) const;

  // Drops all-zero rows; used to canonicalize subspace bases.
  RationalMatrix drop_zero_rows() const;

  std::vector<Rational> apply(const std::vector<Rational>& x) const;  // this * x

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

// Particular solution x of a * x = b with free variables set to zero,
// or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a,
                                           const std::vector<Rational>& b);

bool is_zero_vec(const std::vector<Rational>& v);

}  // namespace hinges
