#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "kgg/parallel.hpp"
#include "kgg/path.hpp"

namespace kgg {

/// The bijection source*C -> target*C, source*c |-> target*c (written x y^-1
/// with x = target, y = source). Both paths end at the same vertex.
struct BasicMorphism {
  Path target;
  Path source;

  bool is_idempotent() const { return target == source; }

  bool operator==(const BasicMorphism&) const = default;
  std::strong_ordering operator<=>(const BasicMorphism& other) const {
    if (auto c = source <=> other.source; c != 0) return c;
    return target <=> other.target;
  }
};

/// Throws invalid_element unless source(target) == source(source).
BasicMorphism make_basic(const KGraph& g, Path target, Path source);

/// An element of the inverse monoid of bijections between finitely generated
/// right ideals, stored as the join of its basic morphisms. The pair list is
/// kept as a sorted antichain (no pair lies below another), which makes it a
/// unique representative. The empty table is the zero.
class MorphismTable {
 public:
  MorphismTable() = default;

  /// Prunes dominated pairs and checks pairwise compatibility (the join must be
  /// a partial bijection). Throws incompatible_table.
  static MorphismTable from_pairs(const KGraph& g, std::vector<BasicMorphism> pairs);
  /// Same, without the compatibility check; for results compatible by construction.
  static MorphismTable from_compatible_pairs(const KGraph& g, std::vector<BasicMorphism> pairs);

  std::span<const BasicMorphism> pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  bool operator==(const MorphismTable&) const = default;

 private:
  friend MorphismTable invert_table(const MorphismTable& s);

  std::vector<BasicMorphism> pairs_;
};

/// {(v, v)} over all vertices: the identity of the monoid.
MorphismTable identity_table(const KGraph& g);

/// The partial bijections a and b agree wherever both are defined, and so do
/// their inverses.
bool compatible(const KGraph& g, const BasicMorphism& a, const BasicMorphism& b);

/// (a b^-1)(c d^-1) = join over MCE(b, c) = {b p_i = c q_i} of (a p_i)(d q_i)^-1.
MorphismTable basic_product(const KGraph& g, const BasicMorphism& first, const BasicMorphism& second);

/// s*t: apply t, then s. Expands over the grid of basic products.
MorphismTable table_product(const KGraph& g, const MorphismTable& s, const MorphismTable& t,
                            Exec exec = Exec::parallel);

MorphismTable invert_table(const MorphismTable& s);

/// a <= b in the natural partial order: a = (u s, v s) for b = (u, v).
bool leq_basic(const KGraph& g, const BasicMorphism& a, const BasicMorphism& b);

/// The largest element below both: the restriction to where s and t agree.
MorphismTable meet(const KGraph& g, const MorphismTable& s, const MorphismTable& t);

/// The image of p under the partial bijection, if p is in its domain.
std::optional<Path> apply_table(const KGraph& g, const MorphismTable& s, const Path& p);

bool is_code(const KGraph& g, std::span<const Path> paths);

/// X*C is essential: with m the join of the degrees in X, every path of degree m
/// factors through X. Throws not_a_code.
bool is_maximal_code(const KGraph& g, std::span<const Path> paths);

/// Every extension of `a` of degree m = join of d(cover) meets the cover; the
/// cover members must all extend `a` (not_extension). Needs a graph without sources.
bool is_tight_cover(const KGraph& g, const Path& a, std::span<const Path> cover);

/// [1_XC] = [1_YC] in the Boolean monoid: X*C and Y*C contain the same paths of
/// degree m = join of all degrees. Throws not_a_code.
bool idempotent_equiv(const KGraph& g, std::span<const Path> x, std::span<const Path> y);

/// Nonzero with s*s = 0.
bool is_infinitesimal(const KGraph& g, const MorphismTable& s);

/// { x*u : x in X, d(u) = m - d(x) }, sorted, duplicates kept.
std::vector<Path> expand_to_degree(const KGraph& g, std::span<const Path> paths, const Degree& m);

}  // namespace kgg
