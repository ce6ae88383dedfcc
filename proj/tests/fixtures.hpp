#pragma once

#include <string>

#include "kgg/constructions.hpp"
#include "kgg/error.hpp"
#include "kgg/path.hpp"

namespace kgg::fixture {

inline Path P(const KGraph& g, const std::string& text) { return parse_path(g, text); }

/// The one-vertex 2-graph with loops a1, a2 (color 1) and b1, b2 (color 2).
inline KGraph two_v() { return bouquet_product(2, {2, 2}); }

/// The 1-graph with one vertex and loops a1, a2.
inline KGraph b2() { return bouquet_product(1, {2}); }

/// N^k: one vertex, one loop per color.
inline KGraph nk(int k) { return bouquet_product(k, std::vector<int>(static_cast<std::size_t>(k), 1)); }

/// Two disjoint one-vertex bouquets (vertices u, w).
inline KGraph disjoint_bouquets() {
  return KGraph(parse_kgraph_document(R"({
    "rank": 1,
    "vertices": ["u", "w"],
    "edges": [
      {"name": "x1", "color": 1, "range": "u", "source": "u"},
      {"name": "x2", "color": 1, "range": "u", "source": "u"},
      {"name": "y1", "color": 1, "range": "w", "source": "w"},
      {"name": "y2", "color": 1, "range": "w", "source": "w"}
    ]
  })"));
}

/// A 2-graph where vertex s receives no color-2 edge.
inline KGraph with_source() {
  return KGraph(parse_kgraph_document(R"({
    "rank": 2,
    "vertices": ["s"],
    "edges": [{"name": "a1", "color": 1, "range": "s", "source": "s"}]
  })"));
}

template <typename Fn>
ErrorCode error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a kgg::Error");
}

}  // namespace kgg::fixture
