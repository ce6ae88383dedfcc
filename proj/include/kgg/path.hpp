#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kgg/degree.hpp"
#include "kgg/kgraph.hpp"

namespace kgg {

/// A morphism of the k-graph in color-sorted normal form: all color-1 edges
/// first, then color 2, and so on, each block in composition order. By unique
/// factorization this representative is unique, so equality of morphisms is
/// equality of `Path` values. Degree zero means an identity (vertex).
class Path {
 public:
  Path() = default;

  static Path identity(const KGraph& g, VertexId v);
  static Path edge(const KGraph& g, EdgeId e);

  VertexId range() const noexcept { return range_; }
  VertexId source() const noexcept { return source_; }
  const Degree& degree() const noexcept { return degree_; }
  std::span<const EdgeId> edges() const noexcept { return edges_; }
  std::size_t length() const noexcept { return edges_.size(); }
  bool is_identity() const noexcept { return edges_.empty(); }

  bool operator==(const Path& other) const {
    return range_ == other.range_ && edges_ == other.edges_;
  }
  /// Canonical order: range, degree, then edges.
  std::strong_ordering operator<=>(const Path& other) const;

 private:
  friend Path make_sorted_path(const KGraph& g, VertexId range, std::vector<EdgeId> edges);

  VertexId range_ = 0;
  VertexId source_ = 0;
  Degree degree_;
  std::vector<EdgeId> edges_;
};

/// Wrap an edge sequence already known to be composable and color sorted.
Path make_sorted_path(const KGraph& g, VertexId range, std::vector<EdgeId> edges);

/// Color-sorted representative of the morphism raw[0] * raw[1] * ...
/// Throws not_composable (naming the offending index) or missing_square.
Path normalize(const KGraph& g, std::span<const EdgeId> raw);

/// p * q. Throws not_composable unless source(p) == range(q).
Path compose(const KGraph& g, const Path& p, const Path& q);

/// The unique factor p[m, n] with degree n - m. Requires 0 <= m <= n <= d(p).
Path segment(const KGraph& g, const Path& p, const Degree& m, const Degree& n);

/// If z = x * s for some s, returns s.
std::optional<Path> strip_prefix(const KGraph& g, const Path& z, const Path& x);

bool has_prefix(const KGraph& g, const Path& z, const Path& x);

/// vC_m: every path with range v and degree m, in canonical order.
std::vector<Path> extensions(const KGraph& g, VertexId v, const Degree& m);

/// { p * u : d(u) = m }, in canonical order.
std::vector<Path> extensions(const KGraph& g, const Path& p, const Degree& m);

/// C_m: every path of degree m over all vertices.
std::vector<Path> paths_of_degree(const KGraph& g, const Degree& m);

/// Minimal common extensions: every z with d(z) = d(p) v d(q) lying in pC and qC.
std::vector<Path> mce(const KGraph& g, const Path& p, const Path& q);

/// p and q have no common extension.
bool independent(const KGraph& g, const Path& p, const Path& q);

/// Paths in text are comma-separated edge names in composition order
/// ("a1,b2,a1"); a lone vertex name denotes that identity.
Path parse_path(const KGraph& g, std::string_view text);
std::string format_path(const KGraph& g, const Path& p);

}  // namespace kgg
