#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "kgg/semigroup.hpp"
#include "oracles.hpp"

using namespace kgg;
using namespace kgg::fixture;

TEST_CASE("normalize sorts colors through the squares") {
  const auto g = two_v();
  const EdgeId a1 = *g.find_edge("a1"), b1 = *g.find_edge("b1");
  const std::vector<EdgeId> raw{b1, a1};
  const auto p = normalize(g, raw);
  CHECK(format_path(g, p) == "a1,b1");
  const std::vector<EdgeId> sorted{a1, b1};
  CHECK(normalize(g, sorted) == p);
  CHECK(p.degree() == Degree{1, 1});
}

TEST_CASE("normalize uses the declared partner in ckr(2,1)") {
  const auto g = ckr(2, 1);
  oracle::Factorizations f(g);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto p = oracle::random_path(g, rng, Degree{2, 2});
    // Every word in the square-closure class normalizes to the same path.
    for (const auto& [prefix, suffix] : f.of(p)) CHECK(oracle::concat(g, prefix, suffix) == p);
    for (std::size_t i = 1; i < p.length(); ++i) CHECK(g.color(p.edges()[i - 1]) <= g.color(p.edges()[i]));
  }
}

TEST_CASE("normalize rejects non-composable words") {
  const auto g = ckr(1, 1);
  EdgeId x = -1, y = -1;
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
    if (g.edge(e).source == 0 && g.edge(e).range == 0 && x < 0) x = e;
    if (g.edge(e).range == 1 && y < 0) y = e;
  }
  const std::vector<EdgeId> raw{x, y};
  CHECK(error_code_of([&] { normalize(g, raw); }) == ErrorCode::not_composable);
}

TEST_CASE("compose") {
  const auto g = two_v();
  CHECK(format_path(g, compose(g, P(g, "b1"), P(g, "a2"))) == "a2,b1");
  const auto p = P(g, "a1,b2");
  CHECK(compose(g, p, Path::identity(g, p.source())) == p);
  CHECK(compose(g, Path::identity(g, p.range()), p) == p);

  const auto c = ckr(2, 1);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    const auto p1 = oracle::random_path(c, rng, Degree{1, 1});
    const auto p2 = oracle::random_path(c, rng, Degree{1, 1}, p1.source());
    const auto p3 = oracle::random_path(c, rng, Degree{1, 1}, p2.source());
    CHECK(compose(c, compose(c, p1, p2), p3) == compose(c, p1, compose(c, p2, p3)));
  }
  const auto u = P(c, "v1"), w = P(c, "v2");
  CHECK(error_code_of([&] { compose(c, u, w); }) == ErrorCode::not_composable);
}

TEST_CASE("segment and strip_prefix") {
  const auto g = two_v();
  const auto p = P(g, "a1,b1");
  CHECK(segment(g, p, Degree{0, 0}, p.degree()) == p);
  CHECK(segment(g, p, Degree{1, 0}, Degree{1, 0}).is_identity());
  CHECK(format_path(g, segment(g, p, Degree{0, 0}, Degree{0, 1})) == "b1");
  CHECK(format_path(g, segment(g, p, Degree{0, 1}, Degree{1, 1})) == "a1");

  const auto c = ckr(2, 2);
  oracle::Factorizations f(c);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const auto z = oracle::random_path(c, rng, Degree{2, 1});
    for (const auto& [prefix, suffix] : f.of(z)) {
      const auto s = strip_prefix(c, z, prefix);
      REQUIRE(s);
      CHECK(*s == suffix);
      CHECK(segment(c, z, Degree::zero(2), prefix.degree()) == prefix);
      CHECK(segment(c, z, prefix.degree(), z.degree()) == suffix);
    }
    const auto other = oracle::random_path(c, rng, Degree{1, 1}, z.range());
    CHECK(has_prefix(c, z, other) == f.suffix(z, other).has_value());
  }
  CHECK(error_code_of([&] { segment(g, p, Degree{0, 0}, Degree{2, 0}); }) == ErrorCode::degree_out_of_range);
}

TEST_CASE("extensions") {
  const auto g = two_v();
  CHECK(extensions(g, 0, Degree{1, 1}).size() == 4);
  CHECK(extensions(g, 0, Degree{0, 0}).size() == 1);
  const auto c = ckr(2, 1);
  CHECK(extensions(c, 0, Degree{1, 0}).size() == 5);
  for (const auto& m : Degree{2, 2}.lower_set()) {
    for (VertexId v = 0; v < 2; ++v) CHECK(extensions(c, v, m) == oracle::paths_by_words(c, v, m));
  }
  const auto d3 = ckr(3, 1);
  CHECK(extensions(d3, 1, Degree{1, 1, 1}) == oracle::paths_by_words(d3, 1, Degree{1, 1, 1}));
  const auto a = P(c, "e1_1_1_2");
  const auto ext = extensions(c, a, Degree{0, 1});
  CHECK(ext.size() == 5);
  for (const auto& z : ext) CHECK(has_prefix(c, z, a));
}

TEST_CASE("mce examples") {
  const auto g = two_v();
  CHECK(mce(g, P(g, "a1"), P(g, "a2")).empty());
  const auto m = mce(g, P(g, "a1"), P(g, "b1"));
  REQUIRE(m.size() == 1);
  CHECK(format_path(g, m[0]) == "a1,b1");
  const auto p = P(g, "a2,b1");
  CHECK(mce(g, p, p) == std::vector<Path>{p});
  CHECK(independent(g, P(g, "a1"), P(g, "a2")));
  CHECK_FALSE(independent(g, P(g, "a1"), P(g, "a1,b2")));
}

TEST_CASE("mce agrees with enumeration") {
  for (const auto& g : {two_v(), ckr(2, 1), double_cover(2, {1, 1}, Labelling::uniform({1, 1})), nk(2)}) {
    oracle::Factorizations f(g);
    std::mt19937_64 rng(17);
    for (int t = 0; t < 150; ++t) {
      const auto p = oracle::random_path(g, rng, Degree{2, 2});
      const auto q = oracle::random_path(g, rng, Degree{2, 2}, p.range());
      const auto got = mce(g, p, q);
      CHECK(got == oracle::mce(g, f, p, q));
      CHECK(is_code(g, got));
    }
  }
}

TEST_CASE("parse and format paths") {
  const auto g = two_v();
  CHECK(format_path(g, P(g, "v")) == "v");
  CHECK(format_path(g, P(g, "b2, a1")) == "a1,b2");
  CHECK(error_code_of([&] { P(g, "a1,zz"); }) == ErrorCode::unknown_edge);
  CHECK(error_code_of([&] { P(g, "a1,,b1"); }) == ErrorCode::syntax_error);
}
