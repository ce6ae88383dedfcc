#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "kgg/kgraph.hpp"

namespace kgg {

std::string_view to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::missing_square: return "MISSING_SQUARE";
    case ViolationCode::duplicate_square: return "DUPLICATE_SQUARE";
    case ViolationCode::not_bijective: return "NOT_BIJECTIVE";
    case ViolationCode::endpoint_mismatch: return "ENDPOINT_MISMATCH";
    case ViolationCode::hexagon_fail: return "HEXAGON_FAIL";
    case ViolationCode::name_clash: return "NAME_CLASH";
  }
  return "UNKNOWN";
}

bool ValidationReport::has(ViolationCode code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [code](const Violation& v) { return v.code == code; });
}

namespace {

using EdgePair = std::pair<EdgeId, EdgeId>;

class Validator {
 public:
  explicit Validator(const KGraph& g) : g_(g) {}

  ValidationReport run() {
    check_names();
    const auto well_formed = check_square_shapes();
    check_coverage(well_formed);
    // Rewriting is only defined once every two-colored path has a unique partner.
    if (report_.passed()) check_hexagons();
    return std::move(report_);
  }

 private:
  void add(ViolationCode code, std::vector<EdgeId> edges, std::string detail) {
    Violation v{code, {}, std::move(detail)};
    for (auto e : edges) v.edges.push_back(g_.edge(e).name);
    report_.violations.push_back(std::move(v));
  }

  void check_names() {
    const auto doc = g_.document();
    std::set<std::string> vertex_names;
    for (const auto& v : doc.vertices) {
      if (!vertex_names.insert(v).second) {
        report_.violations.push_back({ViolationCode::name_clash, {}, "duplicate vertex '" + v + "'"});
      }
    }
    std::set<std::string> edge_names;
    for (const auto& e : doc.edges) {
      if (!edge_names.insert(e.name).second) {
        report_.violations.push_back({ViolationCode::name_clash, {e.name}, "duplicate edge '" + e.name + "'"});
      }
      if (vertex_names.count(e.name)) {
        report_.violations.push_back(
            {ViolationCode::name_clash, {e.name}, "edge name '" + e.name + "' is also a vertex name"});
      }
    }
  }

  bool composable(EdgeId a, EdgeId b) const { return g_.edge(a).source == g_.edge(b).range; }

  std::vector<Square> check_square_shapes() {
    std::vector<Square> ok;
    for (const auto& sq : g_.squares()) {
      const int ci = g_.color(sq.e), cj = g_.color(sq.f);
      std::string problem;
      if (ci >= cj) {
        problem = "first side must list the smaller color first";
      } else if (g_.color(sq.f2) != cj || g_.color(sq.e2) != ci) {
        problem = "second side must be a (" + std::to_string(cj) + "," + std::to_string(ci) + ")-colored path";
      } else if (!composable(sq.e, sq.f)) {
        problem = "first side is not composable";
      } else if (!composable(sq.f2, sq.e2)) {
        problem = "second side is not composable";
      } else if (g_.edge(sq.e).range != g_.edge(sq.f2).range ||
                 g_.edge(sq.f).source != g_.edge(sq.e2).source) {
        problem = "sides have different range or source";
      }
      if (problem.empty()) {
        ok.push_back(sq);
      } else {
        add(ViolationCode::endpoint_mismatch, {sq.e, sq.f, sq.f2, sq.e2}, problem);
      }
    }
    return ok;
  }

  void check_coverage(const std::vector<Square>& squares) {
    std::map<EdgePair, int> first_count;
    std::map<EdgePair, std::set<EdgePair>> second_preimages;
    for (const auto& sq : squares) {
      ++first_count[{sq.e, sq.f}];
      second_preimages[{sq.f2, sq.e2}].insert({sq.e, sq.f});
    }
    for (const auto& [path, n] : first_count) {
      if (n > 1) add(ViolationCode::duplicate_square, {path.first, path.second}, "path appears in " + std::to_string(n) + " squares");
    }
    for (const auto& [path, pre] : second_preimages) {
      if (pre.size() > 1) {
        std::vector<EdgeId> es{path.first, path.second};
        for (const auto& p : pre) {
          es.push_back(p.first);
          es.push_back(p.second);
        }
        add(ViolationCode::not_bijective, es, "path is the partner of " + std::to_string(pre.size()) + " distinct paths");
      }
    }
    // Every composable two-colored path must be covered, on the side matching its color order.
    for (EdgeId a = 0; a < static_cast<EdgeId>(g_.edge_count()); ++a) {
      const auto& ea = g_.edge(a);
      for (int c = 1; c <= g_.rank(); ++c) {
        if (c == ea.color) continue;
        for (EdgeId b : g_.edges_into(ea.source, c)) {
          if (ea.color < c) {
            if (!first_count.count({a, b})) add(ViolationCode::missing_square, {a, b}, "no square has this path as its first side");
          } else if (!second_preimages.count({a, b})) {
            add(ViolationCode::missing_square, {a, b}, "no square has this path as its second side");
          }
        }
      }
    }
  }

  EdgePair swap(EdgeId a, EdgeId b) const { return *g_.partner(a, b); }

  void check_hexagons() {
    if (g_.rank() < 3) return;
    for (EdgeId x = 0; x < static_cast<EdgeId>(g_.edge_count()); ++x) {
      const auto& ex = g_.edge(x);
      for (int cy = 1; cy <= g_.rank(); ++cy) {
        if (cy == ex.color) continue;
        for (EdgeId y : g_.edges_into(ex.source, cy)) {
          for (int cz = 1; cz <= g_.rank(); ++cz) {
            if (cz == ex.color || cz == cy) continue;
            for (EdgeId z : g_.edges_into(g_.edge(y).source, cz)) {
              // Route A: swap positions (1,2), (2,3), (1,2).
              std::array<EdgeId, 3> a{x, y, z};
              std::tie(a[0], a[1]) = swap(a[0], a[1]);
              std::tie(a[1], a[2]) = swap(a[1], a[2]);
              std::tie(a[0], a[1]) = swap(a[0], a[1]);
              // Route B: swap positions (2,3), (1,2), (2,3).
              std::array<EdgeId, 3> b{x, y, z};
              std::tie(b[1], b[2]) = swap(b[1], b[2]);
              std::tie(b[0], b[1]) = swap(b[0], b[1]);
              std::tie(b[1], b[2]) = swap(b[1], b[2]);
              if (a != b) {
                add(ViolationCode::hexagon_fail, {x, y, z},
                    "rewrites disagree: " + g_.edge(a[0]).name + "," + g_.edge(a[1]).name + "," +
                        g_.edge(a[2]).name + " vs " + g_.edge(b[0]).name + "," + g_.edge(b[1]).name +
                        "," + g_.edge(b[2]).name);
              }
            }
          }
        }
      }
    }
  }

  const KGraph& g_;
  ValidationReport report_;
};

}  // namespace

ValidationReport validate(const KGraph& g) { return Validator(g).run(); }

}  // namespace kgg
