#include "kgg/table_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kgg/error.hpp"

namespace kgg {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::syntax_error, e.what());
  }
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw Error(ErrorCode::schema_error, where + " needs a string \"" + key + "\"");
  }
  return it->get<std::string>();
}

std::vector<BasicMorphism> pairs_from(const KGraph& g, const json& root) {
  auto it = root.find("pairs");
  if (it == root.end() || !it->is_array()) throw Error(ErrorCode::schema_error, "table needs a \"pairs\" array");
  std::vector<BasicMorphism> out;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const auto& entry = (*it)[i];
    const std::string where = "pairs[" + std::to_string(i) + "]";
    if (!entry.is_object()) throw Error(ErrorCode::schema_error, where + " must be an object");
    out.push_back(make_basic(g, parse_path(g, string_field(entry, "target", where)),
                             parse_path(g, string_field(entry, "source", where))));
  }
  return out;
}

}  // namespace

std::vector<BasicMorphism> parse_table_pairs(const KGraph& g, const std::string& text) {
  const auto root = parse_json(text);
  if (!root.is_object()) throw Error(ErrorCode::schema_error, "table must be a JSON object");
  return pairs_from(g, root);
}

TableFile load_table(const std::string& path) {
  const auto root = parse_json(read_file(path));
  if (!root.is_object()) throw Error(ErrorCode::schema_error, "table must be a JSON object");
  TableFile t;
  const fs::path ref = string_field(root, "graph", "table");
  t.graph_path = ref.is_absolute() ? ref.string() : (fs::path(path).parent_path() / ref).lexically_normal().string();
  t.graph = load_kgraph(t.graph_path);
  t.pairs = pairs_from(t.graph, root);
  return t;
}

std::string serialize_table(const KGraph& g, const std::string& graph_ref, std::span<const BasicMorphism> pairs) {
  std::string out = "{\n  \"graph\": " + json(graph_ref).dump() + ",\n  \"pairs\": [";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += "{\"target\": " + json(format_path(g, pairs[i].target)).dump() +
           ", \"source\": " + json(format_path(g, pairs[i].source)).dump() + "}";
  }
  out += pairs.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string graph_reference(const std::string& graph_path, const std::string& table_path) {
  const fs::path base = table_path.empty() ? fs::current_path() : fs::absolute(table_path).parent_path();
  return fs::absolute(graph_path).lexically_normal().lexically_proximate(base.lexically_normal()).generic_string();
}

}  // namespace kgg
