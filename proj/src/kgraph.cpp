#include "kgg/kgraph.hpp"

#include <algorithm>
#include <tuple>

#include "kgg/degree.hpp"
#include "kgg/error.hpp"

namespace kgg {

namespace {

constexpr std::size_t kDensePartnerLimit = 512;

std::int64_t pack(EdgeId a, EdgeId b) {
  return (static_cast<std::int64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

KGraph::KGraph(KGraphDocument doc) : rank_(doc.rank) {
  if (rank_ < 1 || rank_ > kMaxRank) {
    throw Error(ErrorCode::schema_error,
                "rank must be in 1.." + std::to_string(kMaxRank) + ", got " + std::to_string(rank_));
  }

  vertices_ = std::move(doc.vertices);
  std::sort(vertices_.begin(), vertices_.end());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    vertex_index_.try_emplace(vertices_[i], static_cast<VertexId>(i));
  }

  auto resolve_vertex = [&](const std::string& name, const std::string& context) {
    auto v = find_vertex(name);
    if (!v) throw Error(ErrorCode::unknown_vertex, "'" + name + "' referenced by " + context);
    return *v;
  };

  std::stable_sort(doc.edges.begin(), doc.edges.end(),
                   [](const EdgeRecord& a, const EdgeRecord& b) { return a.name < b.name; });
  edges_.reserve(doc.edges.size());
  for (const auto& rec : doc.edges) {
    if (rec.color < 1 || rec.color > rank_) {
      throw Error(ErrorCode::color_out_of_range, "edge '" + rec.name + "' has color " +
                                                     std::to_string(rec.color) + " outside 1.." +
                                                     std::to_string(rank_));
    }
    edges_.push_back(Edge{rec.name, rec.color, resolve_vertex(rec.range, "edge '" + rec.name + "'"),
                          resolve_vertex(rec.source, "edge '" + rec.name + "'")});
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    edge_index_.try_emplace(edges_[i].name, static_cast<EdgeId>(i));
  }

  auto resolve_edge = [&](const std::string& name) {
    auto e = find_edge(name);
    if (!e) throw Error(ErrorCode::unknown_edge, "square references unknown edge '" + name + "'");
    return *e;
  };
  squares_.reserve(doc.squares.size());
  for (const auto& sq : doc.squares) {
    squares_.push_back(Square{resolve_edge(sq.first[0]), resolve_edge(sq.first[1]),
                              resolve_edge(sq.second[0]), resolve_edge(sq.second[1])});
  }
  std::sort(squares_.begin(), squares_.end(), [](const Square& a, const Square& b) {
    return std::tie(a.e, a.f, a.f2, a.e2) < std::tie(b.e, b.f, b.f2, b.e2);
  });

  into_.assign(vertices_.size() * static_cast<std::size_t>(rank_), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    into_[static_cast<std::size_t>(e.range) * static_cast<std::size_t>(rank_) +
          static_cast<std::size_t>(e.color - 1)]
        .push_back(static_cast<EdgeId>(i));
  }

  build_partner_table();
}

void KGraph::build_partner_table() {
  const std::size_t n = edges_.size();
  const bool dense = n <= kDensePartnerLimit;
  if (dense) partner_dense_.assign(n * n, -1);
  auto record = [&](EdgeId a, EdgeId b, EdgeId c, EdgeId d) {
    if (dense) {
      auto& slot = partner_dense_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
      if (slot < 0) slot = pack(c, d);
    } else {
      partner_sparse_.try_emplace(static_cast<std::uint64_t>(pack(a, b)), pack(c, d));
    }
  };
  for (const auto& sq : squares_) {
    record(sq.e, sq.f, sq.f2, sq.e2);
    record(sq.f2, sq.e2, sq.e, sq.f);
  }
}

std::optional<VertexId> KGraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> KGraph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::span<const EdgeId> KGraph::edges_into(VertexId v, int color) const {
  return into_[static_cast<std::size_t>(v) * static_cast<std::size_t>(rank_) +
               static_cast<std::size_t>(color - 1)];
}

std::optional<std::pair<EdgeId, EdgeId>> KGraph::partner(EdgeId x, EdgeId y) const {
  std::int64_t packed = -1;
  if (!partner_dense_.empty()) {
    packed = partner_dense_[static_cast<std::size_t>(x) * edges_.size() + static_cast<std::size_t>(y)];
  } else {
    auto it = partner_sparse_.find(static_cast<std::uint64_t>(pack(x, y)));
    if (it != partner_sparse_.end()) packed = it->second;
  }
  if (packed < 0) return std::nullopt;
  return std::pair{static_cast<EdgeId>(packed >> 32), static_cast<EdgeId>(packed & 0xffffffff)};
}

KGraphDocument KGraph::document() const {
  KGraphDocument doc;
  doc.rank = rank_;
  doc.vertices = vertices_;
  for (const auto& e : edges_) {
    doc.edges.push_back(EdgeRecord{e.name, e.color, vertex_name(e.range), vertex_name(e.source)});
  }
  for (const auto& sq : squares_) {
    doc.squares.push_back(SquareRecord{{edge(sq.e).name, edge(sq.f).name},
                                       {edge(sq.f2).name, edge(sq.e2).name}});
  }
  return doc;
}

bool KGraph::document_equal(const KGraph& other) const {
  if (rank_ != other.rank_ || vertices_ != other.vertices_ || edges_.size() != other.edges_.size() ||
      squares_.size() != other.squares_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& a = edges_[i];
    const auto& b = other.edges_[i];
    if (a.name != b.name || a.color != b.color || a.range != b.range || a.source != b.source) return false;
  }
  for (std::size_t i = 0; i < squares_.size(); ++i) {
    const auto& a = squares_[i];
    const auto& b = other.squares_[i];
    if (std::tie(a.e, a.f, a.f2, a.e2) != std::tie(b.e, b.f, b.f2, b.e2)) return false;
  }
  return true;
}

std::optional<std::pair<VertexId, int>> find_source(const KGraph& g) {
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    for (int c = 1; c <= g.rank(); ++c) {
      if (g.edges_into(v, c).empty()) return std::pair{v, c};
    }
  }
  return std::nullopt;
}

}  // namespace kgg
