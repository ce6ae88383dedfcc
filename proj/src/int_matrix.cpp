#include "kgg/int_matrix.hpp"

#include <sstream>
#include <utility>

namespace kgg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    for (auto x : row) a_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : a_) {
    if (x != 0) return false;
  }
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

IntMatrix IntMatrix::hstack(const IntMatrix& other) const {
  IntMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

IntMatrix IntMatrix::vstack(const IntMatrix& other) const {
  IntMatrix m(rows_ + other.rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
  }
  for (std::size_t r = 0; r < other.rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(rows_ + r, c) = other(r, c);
  }
  return m;
}

IntMatrix IntMatrix::row_block(std::size_t r0, std::size_t r1) const {
  IntMatrix m(r1 - r0, cols_);
  for (std::size_t r = r0; r < r1; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r - r0, c) = (*this)(r, c);
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const BigInt& q) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += q * (*this)(j, c);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const BigInt& q) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += q * (*this)(r, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(std::size_t i) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) = -(*this)(r, i);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
    }
  }
  return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << '[';
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << (*this)(r, c);
    out << "]\n";
  }
  return out.str();
}

BigInt determinant(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt sign = 1, prev = 1;
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
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace kgg
