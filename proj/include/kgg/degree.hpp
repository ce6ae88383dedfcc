#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kgg {

inline constexpr int kMaxRank = 16;

/// An element of N^k under the componentwise order. Colors are 1-based at the
/// API surface (`unit(k, i)` is epsilon_i) and 0-based for `operator[]`.
class Degree {
 public:
  Degree() = default;
  explicit Degree(int rank);
  Degree(std::initializer_list<int> components);
  explicit Degree(const std::vector<int>& components);

  static Degree zero(int rank) { return Degree(rank); }
  static Degree unit(int rank, int color);
  static Degree uniform(int rank, int value);

  int rank() const noexcept { return rank_; }
  int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  void set(int i, int value);
  /// Total length |m| = m_1 + ... + m_k.
  int total() const noexcept;
  bool is_zero() const noexcept { return total() == 0; }

  /// Componentwise m <= n.
  bool leq(const Degree& other) const;
  Degree join(const Degree& other) const;
  Degree meet(const Degree& other) const;

  Degree operator+(const Degree& other) const;
  /// Throws degree_out_of_range unless other <= *this.
  Degree operator-(const Degree& other) const;

  bool operator==(const Degree&) const = default;
  /// Lexicographic order on components; used only for canonical sorting.
  std::strong_ordering operator<=>(const Degree& other) const;

  /// "a,b,c"
  std::string to_string() const;
  static Degree parse(std::string_view text, int rank);

  /// All n with 0 <= n <= *this, ordered by total then lexicographically.
  std::vector<Degree> lower_set() const;

 private:
  std::array<std::int32_t, kMaxRank> c_{};
  int rank_ = 0;
};

}  // namespace kgg
