#include <atomic>

#include "kgg/error.hpp"
#include "kgg/int_matrix.hpp"

namespace kgg {

namespace {

std::atomic<std::size_t> verified_count{0};
std::atomic<std::size_t> call_count{0};

struct Reducer {
  IntMatrix a, u, v, v_inv;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
  }
  void add_row(std::size_t i, std::size_t j, const BigInt& q) {
    a.add_row(i, j, q);
    u.add_row(i, j, q);
  }
  void negate_row(std::size_t i) {
    a.negate_row(i);
    u.negate_row(i);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
    v_inv.swap_rows(i, j);
  }
  // col_i += q col_j; the inverse operation acts on rows of V^-1.
  void add_col(std::size_t i, std::size_t j, const BigInt& q) {
    a.add_col(i, j, q);
    v.add_col(i, j, q);
    v_inv.add_row(j, i, -q);
  }

  // Move an entry of least nonzero absolute value in the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    BigInt best = 0;
    for (std::size_t i = t; i < a.rows(); ++i) {
      for (std::size_t j = t; j < a.cols(); ++j) {
        const auto& x = a(i, j);
        if (x == 0) continue;
        BigInt ax = abs(x);
        if (best == 0 || ax < best) {
          best = ax;
          bi = i;
          bj = j;
          if (best == 1) break;
        }
      }
      if (best == 1) break;
    }
    if (best == 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Clear row t and column t; returns false if a remainder was left behind.
  bool clear_cross(std::size_t t) {
    bool clean = true;
    const BigInt p = a(t, t);
    for (std::size_t i = t + 1; i < a.rows(); ++i) {
      if (a(i, t) == 0) continue;
      const BigInt q = a(i, t) / p;
      if (q != 0) add_row(i, t, -q);
      if (a(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < a.cols(); ++j) {
      if (a(t, j) == 0) continue;
      const BigInt q = a(t, j) / p;
      if (q != 0) add_col(j, t, -q);
      if (a(t, j) != 0) clean = false;
    }
    return clean;
  }

  // Some trailing entry not divisible by the pivot: fold its row into row t.
  bool fix_divisibility(std::size_t t) {
    const BigInt p = a(t, t);
    for (std::size_t i = t + 1; i < a.rows(); ++i) {
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(i, j) % p != 0) {
          add_row(t, i, 1);
          return false;
        }
      }
    }
    return true;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input, bool verify) {
  ++call_count;
  Reducer r{input, IntMatrix::identity(input.rows()), IntMatrix::identity(input.cols()),
            IntMatrix::identity(input.cols())};
  const std::size_t n = std::min(input.rows(), input.cols());
  std::size_t t = 0;
  for (; t < n; ++t) {
    if (!r.place_pivot(t)) break;
    for (;;) {
      if (!r.clear_cross(t)) {
        r.place_pivot(t);
        continue;
      }
      if (!r.fix_divisibility(t)) continue;
      break;
    }
    if (r.a(t, t) < 0) r.negate_row(t);
  }

  SmithForm f;
  f.rank = t;
  for (std::size_t i = 0; i < t; ++i) f.diagonal.push_back(r.a(i, i));
  f.s = std::move(r.a);
  f.u = std::move(r.u);
  f.v = std::move(r.v);
  f.v_inv = std::move(r.v_inv);
  if (verify) {
    std::string why;
    if (!verify_smith_form(input, f, &why)) throw Error(ErrorCode::snf_check_failed, why);
  }
  return f;
}

bool verify_smith_form(const IntMatrix& a, const SmithForm& f, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  if (!(f.u * a * f.v == f.s)) return fail("U A V differs from S");
  if (abs(determinant(f.u)) != 1) return fail("U is not unimodular");
  if (abs(determinant(f.v)) != 1) return fail("V is not unimodular");
  if (!(f.v * f.v_inv == IntMatrix::identity(f.v.rows()))) return fail("V^-1 is not the inverse of V");
  for (std::size_t i = 0; i < f.s.rows(); ++i) {
    for (std::size_t j = 0; j < f.s.cols(); ++j) {
      if (i != j && f.s(i, j) != 0) return fail("S is not diagonal");
    }
  }
  const std::size_t n = std::min(f.s.rows(), f.s.cols());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& d = f.s(i, i);
    if (d < 0) return fail("negative diagonal entry");
    if (i < f.rank ? d == 0 : d != 0) return fail("rank disagrees with the diagonal");
    if (i + 1 < f.rank && f.s(i + 1, i + 1) % d != 0) return fail("divisibility chain broken");
  }
  ++verified_count;
  return true;
}

std::size_t smith_verifications() { return verified_count.load(); }
std::size_t smith_calls() { return call_count.load(); }

}  // namespace kgg
