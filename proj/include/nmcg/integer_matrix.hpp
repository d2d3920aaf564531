#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace nmcg {

using Integer = mpz_class;

// Parses an optionally signed decimal integer; rejects anything else.
Integer parse_integer(std::string_view text);

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const std::vector<Integer>& entries() const { return entries_; }

  IntegerMatrix transposed() const;
  bool is_zero() const;

  // Elementary operations, used by the Smith form and by callers that
  // maintain certificates alongside it.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& q);  // row dst += q row src
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& q);  // col dst += q col src
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

std::vector<Integer> operator*(const IntegerMatrix& a, const std::vector<Integer>& x);

/// Exact determinant by Bareiss fraction-free elimination.
/// Throws DimensionError on non-square input.
Integer det(const IntegerMatrix& a);

/// Inverse of a matrix with determinant +-1. Throws DomainError otherwise.
IntegerMatrix inverse_unimodular(const IntegerMatrix& a);

IntegerMatrix power(const IntegerMatrix& a, unsigned exponent);

// Matrix text format: "<rows> <cols>" followed by one row per line.
IntegerMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const IntegerMatrix& a);
std::string to_string(const IntegerMatrix& a);

}  // namespace nmcg
