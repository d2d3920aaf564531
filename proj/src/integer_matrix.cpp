#include "nmcg/integer_matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "nmcg/error.hpp"

namespace nmcg {

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  // mpz_class does not accept a leading '+'.
  return Integer(std::string(text[0] == '+' ? text.substr(1) : text), 10);
}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("matrix entry count does not match " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Integer> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged matrix literal");
    for (long x : row) entries.emplace_back(x);
  }
  return IntegerMatrix(r, c, std::move(entries));
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntegerMatrix::is_zero() const {
  for (const auto& x : entries_)
    if (x != 0) return false;
  return true;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += q * (*this)(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += q * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntegerMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw DimensionError("cannot multiply " + std::to_string(a.rows_) + "x" +
                         std::to_string(a.cols_) + " by " + std::to_string(b.rows_) + "x" +
                         std::to_string(b.cols_));
  }
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::vector<Integer> operator*(const IntegerMatrix& a, const std::vector<Integer>& x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector dimension mismatch");
  std::vector<Integer> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

Integer det(const IntegerMatrix& a) {
  if (!a.is_square()) {
    throw DimensionError("determinant of non-square " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " matrix");
  }
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntegerMatrix m = a;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss step; the division is exact.
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(t);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntegerMatrix inverse_unimodular(const IntegerMatrix& a) {
  const Integer d = det(a);
  if (d != 1 && d != -1) throw DomainError("matrix is not invertible over the integers");
  const std::size_t n = a.rows();
  // Gauss-Jordan over the rationals; the result is integral because det = +-1.
  std::vector<mpq_class> w(n * 2 * n);
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return w[i * 2 * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = a(i, j);
    at(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (at(p, c) == 0) ++p;
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(p, j), at(c, j));
    const mpq_class pivot = at(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) at(c, j) /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || at(i, c) == 0) continue;
      const mpq_class f = at(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) at(i, j) -= f * at(c, j);
    }
  }
  IntegerMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = at(i, n + j).get_num();
  return inv;
}

IntegerMatrix power(const IntegerMatrix& a, unsigned exponent) {
  if (!a.is_square()) throw DimensionError("power of non-square matrix");
  IntegerMatrix result = IntegerMatrix::identity(a.rows());
  IntegerMatrix base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

bool is_skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace

IntegerMatrix read_matrix(std::istream& in) {
  std::string line;
  bool have_header = false;
  while (!have_header && std::getline(in, line)) have_header = !is_skippable(line);
  if (!have_header) throw ParseError("matrix: missing '<rows> <cols>' header");
  const auto header = split_tokens(line);
  if (header.size() != 2) throw ParseError("matrix: header must be '<rows> <cols>'");
  const Integer r = parse_integer(header[0]);
  const Integer c = parse_integer(header[1]);
  if (r < 0 || c < 0 || !r.fits_ulong_p() || !c.fits_ulong_p()) {
    throw ParseError("matrix: dimensions must be non-negative");
  }
  const std::size_t rows = r.get_ui();
  const std::size_t cols = c.get_ui();
  std::vector<Integer> entries;
  entries.reserve(rows * cols);
  if (cols > 0) {
    for (std::size_t i = 0; i < rows; ++i) {
      do {
        if (!std::getline(in, line)) {
          throw ParseError("matrix: expected " + std::to_string(rows) + " rows, got " +
                           std::to_string(i));
        }
      } while (is_skippable(line));
      const auto tokens = split_tokens(line);
      if (tokens.size() != cols) {
        throw ParseError("matrix: row " + std::to_string(i + 1) + " has " +
                         std::to_string(tokens.size()) + " entries, expected " +
                         std::to_string(cols));
      }
      for (const auto& t : tokens) entries.push_back(parse_integer(t));
    }
  }
  return IntegerMatrix(rows, cols, std::move(entries));
}

void write_matrix(std::ostream& out, const IntegerMatrix& a) {
  out << a.rows() << ' ' << a.cols() << '\n';
  if (a.cols() == 0) return;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j > 0) out << ' ';
      out << a(i, j).get_str();
    }
    out << '\n';
  }
}

std::string to_string(const IntegerMatrix& a) {
  std::ostringstream ss;
  write_matrix(ss, a);
  return ss.str();
}

}  // namespace nmcg
