#include "kgg/group.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "kgg/error.hpp"

namespace kgg {

namespace {

void require_no_sources(const KGraph& g) {
  if (auto src = find_source(g)) {
    throw Error(ErrorCode::has_sources, "vertex " + g.vertex_name(src->first) + " receives no edge of color " +
                                            std::to_string(src->second));
  }
}

Degree join_of(const KGraph& g, const std::vector<Path>& paths) {
  Degree m = Degree::zero(g.rank());
  for (const auto& p : paths) m = m.join(p.degree());
  return m;
}

// With no sources, X is a maximal code iff expanding X to the join of its
// degrees hits every path of that degree exactly once.
bool covers_exactly_once(const KGraph& g, const std::vector<Path>& code) {
  if (code.empty()) return false;
  const Degree m = join_of(g, code);
  auto expanded = expand_to_degree(g, code, m);
  return expanded == paths_of_degree(g, m);
}

void check_cap(const Degree& m, int cap) {
  for (int i = 0; i < m.rank(); ++i) {
    if (m[i] > cap) {
      throw Error(ErrorCode::degree_cap_exceeded,
                  "degree (" + m.to_string() + ") exceeds the cap " + std::to_string(cap));
    }
  }
}

}  // namespace

GroupElement make_trusted_element(std::vector<BasicMorphism> pairs) {
  GroupElement e;
  std::sort(pairs.begin(), pairs.end());
  e.pairs_ = std::move(pairs);
  return e;
}

bool is_valid_element(const KGraph& g, std::span<const BasicMorphism> pairs, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (find_source(g)) return fail("the graph has sources");
  std::vector<Path> domain, range;
  for (const auto& p : pairs) {
    if (p.target.source() != p.source.source()) {
      return fail("pair " + format_path(g, p.target) + " / " + format_path(g, p.source) +
                  " has mismatched source vertices");
    }
    domain.push_back(p.source);
    range.push_back(p.target);
  }
  if (!covers_exactly_once(g, domain)) return fail("domain paths are not a maximal code");
  if (!covers_exactly_once(g, range)) return fail("range paths are not a maximal code");
  return true;
}

GroupElement GroupElement::from_pairs(const KGraph& g, std::vector<BasicMorphism> pairs) {
  require_no_sources(g);
  std::string why;
  if (!is_valid_element(g, pairs, &why)) throw Error(ErrorCode::invalid_element, why);
  return make_trusted_element(std::move(pairs));
}

std::vector<Path> GroupElement::domain_code() const {
  std::vector<Path> out;
  out.reserve(pairs_.size());
  for (const auto& p : pairs_) out.push_back(p.source);
  return out;
}

std::vector<Path> GroupElement::range_code() const {
  std::vector<Path> out;
  out.reserve(pairs_.size());
  for (const auto& p : pairs_) out.push_back(p.target);
  std::sort(out.begin(), out.end());
  return out;
}

MorphismTable GroupElement::as_table(const KGraph& g) const {
  return MorphismTable::from_compatible_pairs(g, pairs_);
}

GroupElement identity_element(const KGraph& g) {
  std::vector<BasicMorphism> pairs;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    pairs.push_back({Path::identity(g, v), Path::identity(g, v)});
  }
  return make_trusted_element(std::move(pairs));
}

GroupElement refine_to_degree(const KGraph& g, const GroupElement& e, const Degree& m, const GroupOptions& opts) {
  check_cap(m, opts.degree_cap);
  for (const auto& p : e.pairs()) {
    if (!p.source.degree().leq(m)) {
      throw Error(ErrorCode::degree_too_small, "degree (" + m.to_string() + ") is below the domain path " +
                                                   format_path(g, p.source));
    }
  }
  auto parts = parallel_map(e.size(), opts.exec, [&](std::size_t i) {
    const auto& p = e.pairs()[i];
    std::vector<BasicMorphism> out;
    for (const auto& s : extensions(g, p.source.source(), m - p.source.degree())) {
      out.push_back({compose(g, p.target, s), compose(g, p.source, s)});
    }
    return out;
  });
  return make_trusted_element(flatten(std::move(parts)));
}

GroupElement invert(const GroupElement& e) {
  std::vector<BasicMorphism> pairs;
  pairs.reserve(e.size());
  for (const auto& p : e.pairs()) pairs.push_back({p.source, p.target});
  return make_trusted_element(std::move(pairs));
}

GroupElement multiply(const KGraph& g, const GroupElement& a, const GroupElement& b, const GroupOptions& opts) {
  Degree m = Degree::zero(g.rank());
  for (const auto& p : b.pairs()) m = m.join(p.target.degree());
  for (const auto& p : a.pairs()) m = m.join(p.source.degree());
  const auto br = invert(refine_to_degree(g, invert(b), m, opts));
  const auto ar = refine_to_degree(g, a, m, opts);
  const auto ap = ar.pairs();
  std::vector<BasicMorphism> pairs;
  pairs.reserve(br.size());
  for (const auto& p : br.pairs()) {
    auto it = std::lower_bound(ap.begin(), ap.end(), p.target,
                               [](const BasicMorphism& q, const Path& key) { return q.source < key; });
    if (it == ap.end() || !(it->source == p.target)) {
      throw Error(ErrorCode::invalid_element, "range of the right factor is not covered by the left factor");
    }
    pairs.push_back({it->target, p.source});
  }
  return make_trusted_element(std::move(pairs));
}

bool equals(const KGraph& g, const GroupElement& a, const GroupElement& b, const GroupOptions& opts) {
  Degree m = Degree::zero(g.rank());
  for (const auto& p : a.pairs()) m = m.join(p.source.degree());
  for (const auto& p : b.pairs()) m = m.join(p.source.degree());
  return refine_to_degree(g, a, m, opts) == refine_to_degree(g, b, m, opts);
}

Path apply_to_path(const KGraph& g, const GroupElement& e, const Path& p) {
  for (const auto& pair : e.pairs()) {
    if (auto rest = strip_prefix(g, p, pair.source)) return compose(g, pair.target, *rest);
  }
  throw Error(ErrorCode::outside_domain, "path " + format_path(g, p) + " has no prefix in the domain code");
}

GroupElement reduce(const KGraph& g, const GroupElement& e) {
  std::vector<BasicMorphism> cur(e.pairs().begin(), e.pairs().end());
  for (bool changed = true; changed;) {
    changed = false;
    for (int color = 1; color <= g.rank() && !changed; ++color) {
      const Degree unit = Degree::unit(g.rank(), color);
      // (x', y') -> indices of pairs (x' t, y' t) with d(t) = unit.
      std::map<std::pair<Path, Path>, std::vector<std::size_t>> families;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        const auto& [x, y] = std::tie(cur[i].target, cur[i].source);
        if (!unit.leq(x.degree()) || !unit.leq(y.degree())) continue;
        const Degree dx = x.degree() - unit, dy = y.degree() - unit;
        auto tx = segment(g, x, dx, x.degree());
        auto ty = segment(g, y, dy, y.degree());
        if (!(tx == ty)) continue;
        families[{segment(g, x, Degree::zero(g.rank()), dx), segment(g, y, Degree::zero(g.rank()), dy)}]
            .push_back(i);
      }
      std::vector<bool> consumed(cur.size(), false);
      std::vector<BasicMorphism> merged;
      for (auto& [parent, members] : families) {
        if (members.size() != g.edges_into(parent.second.source(), color).size()) continue;
        if (std::any_of(members.begin(), members.end(), [&](std::size_t i) { return consumed[i]; })) continue;
        for (auto i : members) consumed[i] = true;
        merged.push_back({parent.first, parent.second});
        changed = true;
      }
      if (!changed) continue;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        if (!consumed[i]) merged.push_back(std::move(cur[i]));
      }
      std::sort(merged.begin(), merged.end());
      cur = std::move(merged);
    }
  }
  return make_trusted_element(std::move(cur));
}

namespace {

// Grow the vertex code by `steps` single-leaf, single-color expansions.
std::vector<Path> random_code(const KGraph& g, std::mt19937_64& rng, int steps) {
  std::vector<Path> leaves;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) leaves.push_back(Path::identity(g, v));
  for (int s = 0; s < steps; ++s) {
    std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
    std::uniform_int_distribution<int> pick_color(1, g.rank());
    const std::size_t i = pick(rng);
    const int color = pick_color(rng);
    const Path leaf = leaves[i];
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(i));
    for (auto ext : extensions(g, leaf, Degree::unit(g.rank(), color))) leaves.push_back(std::move(ext));
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

std::vector<std::size_t> source_counts(const KGraph& g, const std::vector<Path>& code) {
  std::vector<std::size_t> counts(g.vertex_count(), 0);
  for (const auto& p : code) ++counts[static_cast<std::size_t>(p.source())];
  return counts;
}

}  // namespace

GroupElement random_element(const KGraph& g, std::mt19937_64& rng, int expansions) {
  require_no_sources(g);
  const auto domain = random_code(g, rng, expansions);
  const auto want = source_counts(g, domain);
  std::vector<Path> range;
  for (int attempt = 0; attempt < 32 && range.empty(); ++attempt) {
    auto candidate = random_code(g, rng, expansions);
    if (source_counts(g, candidate) == want) range = std::move(candidate);
  }
  if (range.empty()) range = domain;

  std::vector<BasicMorphism> pairs;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    std::vector<Path> dom, ran;
    for (const auto& p : domain) {
      if (p.source() == v) dom.push_back(p);
    }
    for (const auto& p : range) {
      if (p.source() == v) ran.push_back(p);
    }
    std::shuffle(ran.begin(), ran.end(), rng);
    for (std::size_t i = 0; i < dom.size(); ++i) pairs.push_back({ran[i], dom[i]});
  }
  return make_trusted_element(std::move(pairs));
}

}  // namespace kgg
