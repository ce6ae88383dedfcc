#include "kgg/constructions.hpp"

#include <json.hpp>

#include "kgg/degree.hpp"
#include "kgg/error.hpp"

namespace kgg {

namespace {

void check_shape(int k, const std::vector<int>& sizes, int min_rank) {
  if (k < min_rank || k > kMaxRank) {
    throw Error(ErrorCode::schema_error, "rank must be in " + std::to_string(min_rank) + ".." +
                                             std::to_string(kMaxRank));
  }
  if (static_cast<int>(sizes.size()) != k) {
    throw Error(ErrorCode::schema_error, "expected " + std::to_string(k) + " alphabet sizes, got " +
                                             std::to_string(sizes.size()));
  }
  for (int s : sizes) {
    if (s < 1) throw Error(ErrorCode::schema_error, "alphabet sizes must be >= 1");
  }
}

}  // namespace

std::string symbol_name(int color, int index) {
  if (color <= 26) return std::string(1, static_cast<char>('a' + color - 1)) + std::to_string(index);
  return "x" + std::to_string(color) + "_" + std::to_string(index);
}

Labelling Labelling::constant(const std::vector<int>& sizes, int value) {
  Labelling l;
  for (int s : sizes) l.values.emplace_back(static_cast<std::size_t>(s), value);
  return l;
}

Labelling Labelling::uniform(const std::vector<int>& sizes) { return constant(sizes, 1); }

Labelling Labelling::mixed(const std::vector<int>& sizes) {
  auto l = constant(sizes, 1);
  if (!l.values.empty()) std::fill(l.values[0].begin(), l.values[0].end(), 0);
  return l;
}

Labelling Labelling::from_json(const std::vector<int>& sizes, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::syntax_error, std::string("labelling: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::schema_error, "labelling must be a JSON object");
  auto l = constant(sizes, 0);
  std::size_t seen = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (int s = 1; s <= sizes[i]; ++s) {
      const auto name = symbol_name(static_cast<int>(i) + 1, s);
      auto it = j.find(name);
      if (it == j.end()) throw Error(ErrorCode::schema_error, "labelling has no value for '" + name + "'");
      if (!it->is_number_integer() || (it->get<int>() != 0 && it->get<int>() != 1)) {
        throw Error(ErrorCode::schema_error, "label of '" + name + "' must be 0 or 1");
      }
      l.values[i][static_cast<std::size_t>(s - 1)] = it->get<int>();
      ++seen;
    }
  }
  if (seen != j.size()) throw Error(ErrorCode::schema_error, "labelling names symbols outside the alphabet");
  return l;
}

KGraph bouquet_product(int k, const std::vector<int>& sizes) {
  check_shape(k, sizes, 1);
  KGraphDocument doc;
  doc.rank = k;
  doc.vertices = {"v"};
  for (int i = 1; i <= k; ++i) {
    for (int s = 1; s <= sizes[static_cast<std::size_t>(i - 1)]; ++s) {
      doc.edges.push_back({symbol_name(i, s), i, "v", "v"});
    }
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      for (int s = 1; s <= sizes[static_cast<std::size_t>(i - 1)]; ++s) {
        for (int t = 1; t <= sizes[static_cast<std::size_t>(j - 1)]; ++t) {
          const auto e = symbol_name(i, s), f = symbol_name(j, t);
          doc.squares.push_back({{e, f}, {f, e}});
        }
      }
    }
  }
  return KGraph(std::move(doc));
}

KGraph double_cover(int k, const std::vector<int>& sizes, const Labelling& labelling) {
  check_shape(k, sizes, 2);
  if (labelling.values.size() != sizes.size()) throw Error(ErrorCode::schema_error, "labelling shape mismatch");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (static_cast<int>(labelling.values[i].size()) != sizes[i]) {
      throw Error(ErrorCode::schema_error, "labelling shape mismatch");
    }
  }
  auto vertex = [](int t) { return "v@" + std::to_string(t & 1); };
  auto plain = [](int color, int s, int t) { return symbol_name(color, s) + "@" + std::to_string(t & 1); };
  auto bar = [](int color, int s, int t) { return symbol_name(color, s) + "bar@" + std::to_string(t & 1); };

  KGraphDocument doc;
  doc.rank = k;
  doc.vertices = {vertex(0), vertex(1)};
  for (int i = 1; i <= k; ++i) {
    for (int s = 1; s <= sizes[static_cast<std::size_t>(i - 1)]; ++s) {
      const int l = labelling(i, s);
      for (int t = 0; t < 2; ++t) {
        // r(x,t) = (v,t), s(x,t) = (v,t+l); the bar edge reverses it.
        doc.edges.push_back({plain(i, s, t), i, vertex(t), vertex(t + l)});
        doc.edges.push_back({bar(i, s, t), i, vertex(t + l), vertex(t)});
      }
    }
  }
  // Each 2-cube of the cover is (b,t)(a,t+l(b)) = (a,t)(b,t+l(a)); it yields four
  // factorization rules relating plain and bar edges.
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      for (int sa = 1; sa <= sizes[static_cast<std::size_t>(i - 1)]; ++sa) {
        for (int sb = 1; sb <= sizes[static_cast<std::size_t>(j - 1)]; ++sb) {
          const int la = labelling(i, sa), lb = labelling(j, sb);
          for (int t = 0; t < 2; ++t) {
            const int ib = t, ia = t + lb, ja = t, jb = t + la;
            doc.squares.push_back({{plain(i, sa, ja), plain(j, sb, jb)}, {plain(j, sb, ib), plain(i, sa, ia)}});
            doc.squares.push_back({{plain(i, sa, ia), bar(j, sb, jb)}, {bar(j, sb, ib), plain(i, sa, ja)}});
            doc.squares.push_back({{bar(i, sa, ja), plain(j, sb, ib)}, {plain(j, sb, jb), bar(i, sa, ia)}});
            doc.squares.push_back({{bar(i, sa, ia), bar(j, sb, ib)}, {bar(j, sb, jb), bar(i, sa, ja)}});
          }
        }
      }
    }
  }
  return KGraph(std::move(doc));
}

KGraph ckr(int k, int R) {
  if (k < 1 || k > kMaxRank || R < 1) throw Error(ErrorCode::schema_error, "ckr needs k in 1..16 and R >= 1");
  const int n = R + 1;
  auto vertex = [](int v) { return "v" + std::to_string(v); };
  auto edge = [](int color, int v, int m, int w) {
    return "e" + std::to_string(color) + "_" + std::to_string(v) + "_" + std::to_string(m) + "_" + std::to_string(w);
  };
  auto multiplicity = [](int v, int w) { return v == w ? 3 : 2; };

  KGraphDocument doc;
  doc.rank = k;
  for (int v = 1; v <= n; ++v) doc.vertices.push_back(vertex(v));
  for (int i = 1; i <= k; ++i) {
    for (int v = 1; v <= n; ++v) {
      for (int w = 1; w <= n; ++w) {
        for (int m = 1; m <= multiplicity(v, w); ++m) doc.edges.push_back({edge(i, v, m, w), i, vertex(v), vertex(w)});
      }
    }
  }
  // Every (i,j)-path e^i_{u,m,v} e^j_{v,n,w} with i < j, paired with its (j,i) partner.
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      for (int u = 1; u <= n; ++u) {
        for (int v = 1; v <= n; ++v) {
          for (int w = 1; w <= n; ++w) {
            for (int m = 1; m <= multiplicity(u, v); ++m) {
              for (int nn = 1; nn <= multiplicity(v, w); ++nn) {
                SquareRecord sq{{edge(i, u, m, v), edge(j, v, nn, w)}, {}};
                if (u == v && v != w) {
                  sq.second = {edge(j, u, nn, w), edge(i, w, m, w)};  // loop then edge
                } else if (u != v && v == w) {
                  sq.second = {edge(j, u, nn, u), edge(i, u, m, v)};  // edge then loop
                } else {
                  sq.second = {edge(j, u, nn, v), edge(i, v, m, w)};  // loop-loop, edge-edge
                }
                doc.squares.push_back(std::move(sq));
              }
            }
          }
        }
      }
    }
  }
  return KGraph(std::move(doc));
}

}  // namespace kgg
