#pragma once

#include <string>
#include <vector>

#include "kgg/semigroup.hpp"

namespace kgg {

/// A table file: {"graph": "<path>", "pairs": [{"target": "a1,b1", "source": "a2,b1"}, ...]}.
/// The graph path is relative to the directory holding the table file.
struct TableFile {
  std::string graph_path;  // as resolved against the table's directory
  KGraph graph;
  std::vector<BasicMorphism> pairs;
};

/// Reads the table and the graph it names. Throws io_error, syntax_error,
/// schema_error, or the path errors of `parse_path`.
TableFile load_table(const std::string& path);

/// Pairs from an already-parsed JSON table body against a known graph.
std::vector<BasicMorphism> parse_table_pairs(const KGraph& g, const std::string& text);

/// Canonical text of a table; `graph_ref` is written verbatim.
std::string serialize_table(const KGraph& g, const std::string& graph_ref, std::span<const BasicMorphism> pairs);

/// Path to `graph_path` as seen from the directory of `table_path` (or the
/// working directory when `table_path` is empty).
std::string graph_reference(const std::string& graph_path, const std::string& table_path);

}  // namespace kgg
