#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "kgg/constructions.hpp"
#include "kgg/degree.hpp"
#include "kgg/error.hpp"
#include "kgg/kgraph.hpp"

using namespace kgg;
using namespace kgg::fixture;

TEST_CASE("degree arithmetic and order") {
  const Degree a{1, 2}, b{2, 0};
  CHECK(a.join(b) == Degree{2, 2});
  CHECK(a.meet(b) == Degree{1, 0});
  CHECK(a + b == Degree{3, 2});
  CHECK((Degree{3, 2} - a) == b);
  CHECK_FALSE(a.leq(b));
  CHECK(Degree{1, 0}.leq(a));
  CHECK(a.total() == 3);
  CHECK(Degree::unit(3, 2) == Degree{0, 1, 0});
  CHECK(error_code_of([&] { (void)(b - a); }) == ErrorCode::degree_out_of_range);
  CHECK(Degree::parse("1,2", 2) == a);
  CHECK(error_code_of([] { Degree::parse("1,x", 2); }) == ErrorCode::syntax_error);
  CHECK(error_code_of([] { Degree::parse("1,2,3", 2); }) != ErrorCode::io_error);
  CHECK(a.to_string() == "1,2");
}

TEST_CASE("lower set is ordered by total then lexicographically") {
  const auto ls = Degree{1, 1}.lower_set();
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == Degree{0, 0});
  CHECK(ls[1] == Degree{0, 1});
  CHECK(ls[2] == Degree{1, 0});
  CHECK(ls[3] == Degree{1, 1});
  CHECK(Degree{2, 3, 1}.lower_set().size() == 3 * 4 * 2);
}

TEST_CASE("parse ckr(2,1) document") {
  const auto text = serialize_kgraph(ckr(2, 1));
  const auto g = parse_kgraph(text);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 20);
  CHECK(g.rank() == 2);
}

TEST_CASE("rank-1 document without squares") {
  const auto g = parse_kgraph(R"({"rank": 1, "vertices": ["v"],
    "edges": [{"name": "e", "color": 1, "range": "v", "source": "v"}]})");
  CHECK(g.squares().empty());
  CHECK(validate(g).passed());
}

TEST_CASE("document errors") {
  CHECK(error_code_of([] {
          parse_kgraph(R"({"rank": 1, "vertices": ["v"],
            "edges": [{"name": "e", "color": 1, "range": "w9", "source": "v"}]})");
        }) == ErrorCode::unknown_vertex);
  CHECK(error_code_of([] {
          parse_kgraph(R"({"rank": 1, "vertices": ["v"],
            "edges": [{"name": "e", "color": 2, "range": "v", "source": "v"}]})");
        }) == ErrorCode::color_out_of_range);
  CHECK(error_code_of([] {
          parse_kgraph(R"({"rank": 2, "vertices": ["v"], "edges": [],
            "squares": [{"first": ["a", "b"], "second": ["b", "a"]}]})");
        }) == ErrorCode::unknown_edge);
  CHECK(error_code_of([] { parse_kgraph(R"({"rank": 1, "vertices": ["v"]})"); }) == ErrorCode::schema_error);
  CHECK(error_code_of([] { parse_kgraph(R"({"rank": 0, "vertices": [], "edges": []})"); }) ==
        ErrorCode::schema_error);
  CHECK(error_code_of([] { parse_kgraph("{\"rank\": 1,\n  \"vertices\": [}"); }) == ErrorCode::syntax_error);
  try {
    parse_kgraph("{\"rank\": 1,\n  \"vertices\": [}");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK(error_code_of([] { load_kgraph("/nonexistent/graph.json"); }) == ErrorCode::io_error);
}

TEST_CASE("serialization is canonical and round-trips") {
  for (const auto& g : {two_v(), ckr(2, 1), double_cover(2, {1, 2}, Labelling::mixed({1, 2})), ckr(3, 1)}) {
    const auto text = serialize_kgraph(g);
    const auto back = parse_kgraph(text);
    CHECK(back == g);
    CHECK(serialize_kgraph(back) == text);
  }
}

TEST_CASE("record order does not change the canonical bytes") {
  auto doc = ckr(2, 1).document();
  std::mt19937_64 rng(7);
  std::shuffle(doc.vertices.begin(), doc.vertices.end(), rng);
  std::shuffle(doc.edges.begin(), doc.edges.end(), rng);
  std::shuffle(doc.squares.begin(), doc.squares.end(), rng);
  CHECK(serialize_kgraph(KGraph(doc)) == serialize_kgraph(ckr(2, 1)));
}

TEST_CASE("generated graphs validate, including hexagons") {
  for (int k = 1; k <= 3; ++k) {
    for (int R = 1; R <= 3; ++R) {
      CAPTURE(k);
      CAPTURE(R);
      CHECK(validate(ckr(k, R)).passed());
    }
    for (int s = 1; s <= 3; ++s) {
      CHECK(validate(bouquet_product(k, std::vector<int>(static_cast<std::size_t>(k), s))).passed());
    }
  }
  for (int k = 2; k <= 3; ++k) {
    for (const std::vector<int>& sizes : {std::vector<int>(static_cast<std::size_t>(k), 1),
                                          std::vector<int>(static_cast<std::size_t>(k), 2)}) {
      CHECK(validate(double_cover(k, sizes, Labelling::uniform(sizes))).passed());
      CHECK(validate(double_cover(k, sizes, Labelling::mixed(sizes))).passed());
      CHECK(validate(double_cover(k, sizes, Labelling::constant(sizes, 0))).passed());
    }
  }
}

TEST_CASE("validation mutations") {
  const auto base = ckr(2, 1).document();

  SUBCASE("dropped square") {
    auto doc = base;
    doc.squares.erase(doc.squares.begin() + 3);
    const auto r = validate(KGraph(doc));
    CHECK(r.has(ViolationCode::missing_square));
  }

  SUBCASE("non-bijective pairing") {
    // Two squares whose first sides share range and source get the same second side.
    const KGraph g(base);
    auto doc = g.document();
    bool done = false;
    for (std::size_t i = 0; i < g.squares().size() && !done; ++i) {
      for (std::size_t j = i + 1; j < g.squares().size() && !done; ++j) {
        const auto& si = g.squares()[i];
        const auto& sj = g.squares()[j];
        if (g.edge(si.e).range == g.edge(sj.e).range && g.edge(si.f).source == g.edge(sj.f).source) {
          doc.squares[j].second = doc.squares[i].second;
          done = true;
        }
      }
    }
    REQUIRE(done);
    CHECK(validate(KGraph(doc)).has(ViolationCode::not_bijective));
  }

  SUBCASE("endpoint swap") {
    auto doc = base;
    std::swap(doc.squares[0].second[0], doc.squares[0].second[1]);
    CHECK(validate(KGraph(doc)).has(ViolationCode::endpoint_mismatch));
  }

  SUBCASE("duplicate square") {
    auto doc = base;
    doc.squares.push_back(doc.squares[0]);
    CHECK(validate(KGraph(doc)).has(ViolationCode::duplicate_square));
  }

  SUBCASE("name clash") {
    auto doc = base;
    doc.vertices.push_back(doc.edges[0].name);
    CHECK(validate(KGraph(doc)).has(ViolationCode::name_clash));
  }
}

TEST_CASE("hexagon failure is detected") {
  // Re-pair the color-(1,2) and color-(1,3) squares of the 3-dimensional
  // bouquet by arbitrary bijections. Each such graph has complete, bijective
  // squares; the identity pairing passes and some pairings are not associative.
  const auto base = bouquet_product(3, {2, 2, 2}).document();
  auto block = [&](char lo, char hi) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < base.squares.size(); ++i) {
      if (base.squares[i].first[0][0] == lo && base.squares[i].first[1][0] == hi) idx.push_back(i);
    }
    return idx;
  };
  const auto ab = block('a', 'b'), ac = block('a', 'c');
  REQUIRE(ab.size() == 4);
  REQUIRE(ac.size() == 4);
  std::vector<std::size_t> p{0, 1, 2, 3};
  bool saw_pass = false, saw_hexagon = false;
  do {
    std::vector<std::size_t> q{0, 1, 2, 3};
    do {
      auto doc = base;
      for (std::size_t t = 0; t < 4; ++t) {
        doc.squares[ab[t]].second = base.squares[ab[p[t]]].second;
        doc.squares[ac[t]].second = base.squares[ac[q[t]]].second;
      }
      const auto r = validate(KGraph(doc));
      saw_pass = saw_pass || r.passed();
      saw_hexagon = saw_hexagon || r.has(ViolationCode::hexagon_fail);
    } while (!saw_hexagon && std::next_permutation(q.begin(), q.end()));
  } while (!saw_hexagon && std::next_permutation(p.begin(), p.end()));
  CHECK(saw_pass);
  CHECK(saw_hexagon);
}

TEST_CASE("find_source") {
  CHECK_FALSE(find_source(ckr(2, 2)));
  const auto g = with_source();
  const auto s = find_source(g);
  REQUIRE(s);
  CHECK(s->second == 2);
}
