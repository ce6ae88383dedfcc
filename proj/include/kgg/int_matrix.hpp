#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kgg {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix over Z with exact entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const;
  IntMatrix transpose() const;
  /// [*this | other]
  IntMatrix hstack(const IntMatrix& other) const;
  /// [*this ; other]
  IntMatrix vstack(const IntMatrix& other) const;
  /// Rows [r0, r1), all columns.
  IntMatrix row_block(std::size_t r0, std::size_t r1) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const BigInt& q);
  /// col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const BigInt& q);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix&) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(const IntMatrix& a);

/// S = U A V with U, V unimodular, S diagonal, d_1 | d_2 | ... and d_i >= 0.
struct SmithForm {
  IntMatrix u, s, v, v_inv;
  std::size_t rank = 0;
  std::vector<BigInt> diagonal;  // the nonzero d_i
};

/// Pivots on an entry of least absolute value. Unless `verify` is false the
/// result is re-checked with `verify_smith_form` (throws snf_check_failed).
SmithForm smith_normal_form(const IntMatrix& a, bool verify = true);

/// U A V == S, |det U| = |det V| = 1, V * V^-1 = I, S diagonal with the
/// divisibility chain and nonnegative entries.
bool verify_smith_form(const IntMatrix& a, const SmithForm& f, std::string* why = nullptr);

/// Number of Smith forms verified so far in this process.
std::size_t smith_verifications();
/// Number of calls to smith_normal_form so far in this process.
std::size_t smith_calls();

}  // namespace kgg
