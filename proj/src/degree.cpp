#include "kgg/degree.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "kgg/error.hpp"

namespace kgg {

namespace {

void check_rank(int rank) {
  if (rank < 0 || rank > kMaxRank) {
    throw Error(ErrorCode::degree_out_of_range,
                "rank " + std::to_string(rank) + " outside 0.." + std::to_string(kMaxRank));
  }
}

void check_same_rank(const Degree& a, const Degree& b) {
  if (a.rank() != b.rank()) {
    throw Error(ErrorCode::degree_out_of_range,
                "degree rank mismatch " + std::to_string(a.rank()) + " vs " +
                    std::to_string(b.rank()));
  }
}

}  // namespace

Degree::Degree(int rank) : rank_(rank) { check_rank(rank); }

Degree::Degree(std::initializer_list<int> components)
    : Degree(std::vector<int>(components)) {}

Degree::Degree(const std::vector<int>& components) : rank_(static_cast<int>(components.size())) {
  check_rank(rank_);
  for (int i = 0; i < rank_; ++i) set(i, components[static_cast<std::size_t>(i)]);
}

Degree Degree::unit(int rank, int color) {
  if (color < 1 || color > rank) {
    throw Error(ErrorCode::color_out_of_range, "color " + std::to_string(color));
  }
  Degree d(rank);
  d.c_[static_cast<std::size_t>(color - 1)] = 1;
  return d;
}

Degree Degree::uniform(int rank, int value) {
  Degree d(rank);
  for (int i = 0; i < rank; ++i) d.set(i, value);
  return d;
}

void Degree::set(int i, int value) {
  if (i < 0 || i >= rank_ || value < 0) {
    throw Error(ErrorCode::degree_out_of_range,
                "bad degree component " + std::to_string(i) + "=" + std::to_string(value));
  }
  c_[static_cast<std::size_t>(i)] = value;
}

int Degree::total() const noexcept {
  int t = 0;
  for (int i = 0; i < rank_; ++i) t += c_[static_cast<std::size_t>(i)];
  return t;
}

bool Degree::leq(const Degree& other) const {
  check_same_rank(*this, other);
  for (int i = 0; i < rank_; ++i) {
    if ((*this)[i] > other[i]) return false;
  }
  return true;
}

Degree Degree::join(const Degree& other) const {
  check_same_rank(*this, other);
  Degree d(rank_);
  for (int i = 0; i < rank_; ++i) d.c_[static_cast<std::size_t>(i)] = std::max((*this)[i], other[i]);
  return d;
}

Degree Degree::meet(const Degree& other) const {
  check_same_rank(*this, other);
  Degree d(rank_);
  for (int i = 0; i < rank_; ++i) d.c_[static_cast<std::size_t>(i)] = std::min((*this)[i], other[i]);
  return d;
}

Degree Degree::operator+(const Degree& other) const {
  check_same_rank(*this, other);
  Degree d(rank_);
  for (int i = 0; i < rank_; ++i) {
    const auto s = static_cast<std::int64_t>((*this)[i]) + other[i];
    if (s > std::numeric_limits<std::int32_t>::max()) {
      throw Error(ErrorCode::degree_out_of_range, "degree overflow");
    }
    d.c_[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(s);
  }
  return d;
}

Degree Degree::operator-(const Degree& other) const {
  check_same_rank(*this, other);
  Degree d(rank_);
  for (int i = 0; i < rank_; ++i) {
    if (other[i] > (*this)[i]) {
      throw Error(ErrorCode::degree_out_of_range,
                  "cannot subtract (" + other.to_string() + ") from (" + to_string() + ")");
    }
    d.c_[static_cast<std::size_t>(i)] = (*this)[i] - other[i];
  }
  return d;
}

std::strong_ordering Degree::operator<=>(const Degree& other) const {
  if (auto c = rank_ <=> other.rank_; c != 0) return c;
  for (int i = 0; i < rank_; ++i) {
    if (auto c = (*this)[i] <=> other[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Degree::to_string() const {
  std::string out;
  for (int i = 0; i < rank_; ++i) {
    if (i) out += ',';
    out += std::to_string((*this)[i]);
  }
  return out;
}

Degree Degree::parse(std::string_view text, int rank) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    const auto token = text.substr(pos, end - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty() || value < 0) {
      throw Error(ErrorCode::syntax_error, "bad degree '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(parts.size()) != rank) {
    throw Error(ErrorCode::degree_out_of_range, "degree '" + std::string(text) + "' needs " +
                                                    std::to_string(rank) + " components");
  }
  return Degree(parts);
}

std::vector<Degree> Degree::lower_set() const {
  std::vector<Degree> out;
  Degree cur(rank_);
  // Odometer over the box [0, *this].
  while (true) {
    out.push_back(cur);
    int i = 0;
    for (; i < rank_; ++i) {
      if (cur[i] < (*this)[i]) {
        cur.c_[static_cast<std::size_t>(i)] += 1;
        break;
      }
      cur.c_[static_cast<std::size_t>(i)] = 0;
    }
    if (i == rank_) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const Degree& a, const Degree& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a < b;
  });
  return out;
}

}  // namespace kgg
