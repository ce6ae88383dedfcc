#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kgg/error.hpp"
#include "kgg/kgraph.hpp"

namespace kgg {

namespace {

using json = nlohmann::json;

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorCode::schema_error, where + " is missing \"" + key + "\"");
  return *it;
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw Error(ErrorCode::schema_error, where + " must be a string");
  return j.get<std::string>();
}

std::array<std::string, 2> as_pair(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) {
    throw Error(ErrorCode::schema_error, where + " must be an array of two edge names");
  }
  return {as_string(j[0], where), as_string(j[1], where)};
}

std::string quoted(const std::string& s) { return json(s).dump(); }

}  // namespace

KGraphDocument parse_kgraph_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte index one past the offending character.
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(ErrorCode::syntax_error, line_col(text, byte) + ": " + e.what());
  }
  if (!root.is_object()) throw Error(ErrorCode::schema_error, "document must be a JSON object");

  KGraphDocument doc;
  const auto& rank = require(root, "rank", "document");
  if (!rank.is_number_integer()) throw Error(ErrorCode::schema_error, "\"rank\" must be an integer");
  doc.rank = rank.get<int>();

  const auto& vertices = require(root, "vertices", "document");
  if (!vertices.is_array()) throw Error(ErrorCode::schema_error, "\"vertices\" must be an array");
  for (const auto& v : vertices) doc.vertices.push_back(as_string(v, "vertex"));

  const auto& edges = require(root, "edges", "document");
  if (!edges.is_array()) throw Error(ErrorCode::schema_error, "\"edges\" must be an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto where = "edges[" + std::to_string(i) + "]";
    const auto& e = edges[i];
    if (!e.is_object()) throw Error(ErrorCode::schema_error, where + " must be an object");
    EdgeRecord rec;
    rec.name = as_string(require(e, "name", where), where + ".name");
    const auto& color = require(e, "color", where);
    if (!color.is_number_integer()) throw Error(ErrorCode::schema_error, where + ".color must be an integer");
    rec.color = color.get<int>();
    rec.range = as_string(require(e, "range", where), where + ".range");
    rec.source = as_string(require(e, "source", where), where + ".source");
    doc.edges.push_back(std::move(rec));
  }

  if (auto it = root.find("squares"); it != root.end()) {
    if (!it->is_array()) throw Error(ErrorCode::schema_error, "\"squares\" must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto where = "squares[" + std::to_string(i) + "]";
      const auto& s = (*it)[i];
      if (!s.is_object()) throw Error(ErrorCode::schema_error, where + " must be an object");
      doc.squares.push_back(SquareRecord{as_pair(require(s, "first", where), where + ".first"),
                                         as_pair(require(s, "second", where), where + ".second")});
    }
  }
  return doc;
}

KGraph parse_kgraph(std::string_view text) { return KGraph(parse_kgraph_document(text)); }

std::string serialize_kgraph(const KGraph& g) {
  const auto doc = g.document();
  std::ostringstream out;
  out << "{\n  \"rank\": " << doc.rank << ",\n  \"vertices\": [";
  for (std::size_t i = 0; i < doc.vertices.size(); ++i) {
    out << (i ? ", " : "") << quoted(doc.vertices[i]);
  }
  out << "],\n  \"edges\": [";
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    const auto& e = doc.edges[i];
    out << (i ? ",\n" : "\n") << "    {\"name\": " << quoted(e.name) << ", \"color\": " << e.color
        << ", \"range\": " << quoted(e.range) << ", \"source\": " << quoted(e.source) << "}";
  }
  out << (doc.edges.empty() ? "]" : "\n  ]") << ",\n  \"squares\": [";
  for (std::size_t i = 0; i < doc.squares.size(); ++i) {
    const auto& s = doc.squares[i];
    out << (i ? ",\n" : "\n") << "    {\"first\": [" << quoted(s.first[0]) << ", " << quoted(s.first[1])
        << "], \"second\": [" << quoted(s.second[0]) << ", " << quoted(s.second[1]) << "]}";
  }
  out << (doc.squares.empty() ? "]" : "\n  ]") << "\n}\n";
  return out.str();
}

KGraph load_kgraph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_kgraph(buf.str());
}

}  // namespace kgg
