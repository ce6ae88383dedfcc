#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "kgg/semigroup.hpp"

namespace kgg {

struct GroupOptions {
  /// Largest degree component any refinement may reach.
  int degree_cap = 20;
  Exec exec = Exec::parallel;
};

/// An element of the group of the k-graph, represented by a bijection between
/// right ideals generated by maximal codes: pairs (x_i, y_i) with {y_i} and
/// {x_i} maximal codes and y_i C -> x_i C. Pairs are sorted by domain path.
/// Two elements may represent the same group element; compare with `equals`.
class GroupElement {
 public:
  GroupElement() = default;

  /// Checks both codes are maximal codes, the pairing is a bijection, and the
  /// graph has no sources. Throws invalid_element or has_sources.
  static GroupElement from_pairs(const KGraph& g, std::vector<BasicMorphism> pairs);

  std::span<const BasicMorphism> pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  std::vector<Path> domain_code() const;
  std::vector<Path> range_code() const;
  MorphismTable as_table(const KGraph& g) const;

  /// Syntactic equality of the pair lists (not group equality).
  bool operator==(const GroupElement&) const = default;

 private:
  friend GroupElement make_trusted_element(std::vector<BasicMorphism> pairs);

  std::vector<BasicMorphism> pairs_;
};

/// Wraps pairs known to form a valid element; sorts them.
GroupElement make_trusted_element(std::vector<BasicMorphism> pairs);

/// Re-checks the group-element invariants; used by tests and `from_pairs`.
bool is_valid_element(const KGraph& g, std::span<const BasicMorphism> pairs, std::string* why = nullptr);

GroupElement identity_element(const KGraph& g);

/// Expand every pair (x, y) to {(x s, y s) : d(s) = m - d(y)} so that the
/// domain code becomes C_m. Throws degree_too_small, degree_cap_exceeded.
GroupElement refine_to_degree(const KGraph& g, const GroupElement& e, const Degree& m,
                              const GroupOptions& opts = {});

/// a*b as composition of maps: apply b, then a.
GroupElement multiply(const KGraph& g, const GroupElement& a, const GroupElement& b,
                      const GroupOptions& opts = {});

GroupElement invert(const GroupElement& e);

/// Group equality: both refined to the join of their domain degrees agree.
bool equals(const KGraph& g, const GroupElement& a, const GroupElement& b, const GroupOptions& opts = {});

/// x_i s for p = y_i s. Throws outside_domain when p has no prefix in the domain code.
Path apply_to_path(const KGraph& g, const GroupElement& e, const Path& p);

/// Merge complete one-color families {(x t, y t) : d(t) = e_i} back into (x, y)
/// until none remain. Represents the same group element; `equals` never uses it.
GroupElement reduce(const KGraph& g, const GroupElement& e);

/// Random element: grow a random domain code and a random range code by the
/// same number of single-leaf expansions (leaf and color uniform), then pair
/// leaves by a uniformly random bijection within each source vertex. If the
/// per-vertex leaf counts of the two codes fail to match after several tries,
/// the range code reuses the domain's expansion shape. Deterministic per seed.
GroupElement random_element(const KGraph& g, std::mt19937_64& rng, int expansions);

}  // namespace kgg
