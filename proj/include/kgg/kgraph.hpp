#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kgg {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// By-name records, as they appear in a k-graph document.
struct EdgeRecord {
  std::string name;
  int color = 0;
  std::string range;
  std::string source;
};

/// Asserts first[0] * first[1] == second[0] * second[1], where first[0] has the
/// smaller color i and second[0] the larger color j.
struct SquareRecord {
  std::array<std::string, 2> first;
  std::array<std::string, 2> second;
};

struct KGraphDocument {
  int rank = 0;
  std::vector<std::string> vertices;
  std::vector<EdgeRecord> edges;
  std::vector<SquareRecord> squares;
};

struct Edge {
  std::string name;
  int color = 0;  // 1..rank
  VertexId range = 0;
  VertexId source = 0;
};

struct Square {
  EdgeId e = 0, f = 0;    // e has color i, f has color j > i (when well formed)
  EdgeId f2 = 0, e2 = 0;  // f2 has color j, e2 has color i
};

/// A finite k-graph given by its colored skeleton and factorization squares.
///
/// Construction resolves names and sorts vertices and edges lexicographically;
/// it does not check that the squares are complete or associative (see
/// `validate`). Immutable afterwards, so a KGraph can be shared across threads.
class KGraph {
 public:
  KGraph() = default;
  explicit KGraph(KGraphDocument doc);

  int rank() const noexcept { return rank_; }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  std::optional<VertexId> find_vertex(std::string_view name) const;

  std::size_t edge_count() const noexcept { return edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::optional<EdgeId> find_edge(std::string_view name) const;
  int color(EdgeId e) const { return edges_[static_cast<std::size_t>(e)].color; }

  std::span<const Square> squares() const noexcept { return squares_; }

  /// Edges of `color` whose range is `v`, in edge order.
  std::span<const EdgeId> edges_into(VertexId v, int color) const;

  /// The other factorization of the two-edge path x*y (colors must differ).
  /// Empty when no square mentions the path.
  std::optional<std::pair<EdgeId, EdgeId>> partner(EdgeId x, EdgeId y) const;

  /// By-name form in canonical order (vertices, edges, squares sorted).
  KGraphDocument document() const;

  bool operator==(const KGraph& other) const { return document_equal(other); }

 private:
  bool document_equal(const KGraph& other) const;
  void build_partner_table();

  int rank_ = 0;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Square> squares_;
  std::vector<std::vector<EdgeId>> into_;  // [v * rank + (color - 1)]
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  // Dense partner table for desk-scale graphs, hashed beyond that.
  std::vector<std::int64_t> partner_dense_;
  std::unordered_map<std::uint64_t, std::int64_t> partner_sparse_;
};

/// Parse a k-graph document (JSON). Does not validate squares.
KGraph parse_kgraph(std::string_view text);
KGraphDocument parse_kgraph_document(std::string_view text);
/// Canonical, byte-deterministic serialization.
std::string serialize_kgraph(const KGraph& g);

KGraph load_kgraph(const std::string& path);

/// A vertex v and color i with no color-i edge ranging at v, if any. Without
/// one, vC_m is nonempty for every vertex v and degree m.
std::optional<std::pair<VertexId, int>> find_source(const KGraph& g);

// --- validation ---

enum class ViolationCode {
  missing_square,
  duplicate_square,
  not_bijective,
  endpoint_mismatch,
  hexagon_fail,
  name_clash,
};

std::string_view to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::vector<std::string> edges;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool passed() const noexcept { return violations.empty(); }
  bool has(ViolationCode code) const;
};

ValidationReport validate(const KGraph& g);

}  // namespace kgg
