#include "kgg/structure.hpp"

#include <algorithm>
#include <deque>

namespace kgg {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "HOLDS";
    case Verdict::fails: return "FAILS";
    case Verdict::unknown_up_to_bound: return "UNKNOWN_UP_TO_BOUND";
  }
  return "?";
}

std::string_view to_string(Simplicity s) {
  switch (s) {
    case Simplicity::simple_up_to_bounds: return "SIMPLE";
    case Simplicity::not_decided: return "NOT_DECIDED";
    case Simplicity::fails: return "FAILS";
  }
  return "?";
}

SourcesReport has_no_sources(const KGraph& g) {
  SourcesReport r;
  r.counterexample = find_source(g);
  r.verdict = r.counterexample ? Verdict::fails : Verdict::holds;
  return r;
}

namespace {

// All paths with degree <= bound, grouped by source vertex.
std::vector<std::vector<Path>> paths_by_source(const KGraph& g, const Degree& bound) {
  std::vector<std::vector<Path>> out(g.vertex_count());
  for (const auto& n : bound.lower_set()) {
    for (auto& p : paths_of_degree(g, n)) out[static_cast<std::size_t>(p.source())].push_back(std::move(p));
  }
  return out;
}

// Witness candidates u with range v, smallest total degree first.
std::vector<std::vector<Path>> witness_candidates(const KGraph& g, const Degree& bound) {
  std::vector<std::vector<Path>> out(g.vertex_count());
  const auto degrees = bound.lower_set();
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    for (const auto& n : degrees) {
      for (auto& u : extensions(g, v, n)) out[static_cast<std::size_t>(v)].push_back(std::move(u));
    }
  }
  return out;
}

}  // namespace

bool verify_witness(const KGraph& g, const AperiodicityWitness& w) {
  if (w.a == w.b || w.a.source() != w.b.source() || w.u.range() != w.a.source()) return false;
  const auto au = compose(g, w.a, w.u);
  const auto bu = compose(g, w.b, w.u);
  // Common extensions of degree d(au) v d(bu), searched from scratch.
  const Degree m = au.degree().join(bu.degree());
  for (const auto& z : extensions(g, au, m - au.degree())) {
    if (has_prefix(g, z, bu)) return false;
  }
  return true;
}

AperiodicityReport aperiodicity_scan(const KGraph& g, const Degree& pair_bound, const Degree& witness_bound,
                                     Exec exec) {
  AperiodicityReport r;
  r.pair_bound = pair_bound;
  r.witness_bound = witness_bound;
  const auto groups = paths_by_source(g, pair_bound);
  const auto candidates = witness_candidates(g, witness_bound);

  std::vector<std::pair<const Path*, const Path*>> pairs;
  for (const auto& group : groups) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) pairs.emplace_back(&group[i], &group[j]);
    }
  }
  r.pairs_examined = pairs.size();

  auto found = parallel_map(pairs.size(), exec, [&](std::size_t idx) -> std::optional<Path> {
    const auto& a = *pairs[idx].first;
    const auto& b = *pairs[idx].second;
    for (const auto& u : candidates[static_cast<std::size_t>(a.source())]) {
      if (independent(g, compose(g, a, u), compose(g, b, u))) return u;
    }
    return std::nullopt;
  });

  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    const auto& a = *pairs[idx].first;
    const auto& b = *pairs[idx].second;
    if (found[idx]) {
      r.witnesses.push_back({a, b, *found[idx]});
    } else {
      r.missing.emplace_back(a, b);
    }
  }
  r.verdict = r.missing.empty() ? Verdict::holds : Verdict::unknown_up_to_bound;
  return r;
}

namespace {

// down[v] lists the sources of edges ranging at v.
std::vector<std::vector<VertexId>> down_adjacency(const KGraph& g) {
  std::vector<std::vector<VertexId>> down(g.vertex_count());
  for (const auto& e : g.edges()) down[static_cast<std::size_t>(e.range)].push_back(e.source);
  for (auto& d : down) {
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
  }
  return down;
}

// reach[e][f]: some path has range e and source f.
std::vector<std::vector<bool>> reachability(const KGraph& g) {
  const auto down = down_adjacency(g);
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t e = 0; e < n; ++e) {
    std::deque<VertexId> queue{static_cast<VertexId>(e)};
    reach[e][e] = true;
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      for (auto w : down[static_cast<std::size_t>(v)]) {
        if (!reach[e][static_cast<std::size_t>(w)]) {
          reach[e][static_cast<std::size_t>(w)] = true;
          queue.push_back(w);
        }
      }
    }
  }
  return reach;
}

}  // namespace

std::optional<Path> connecting_path(const KGraph& g, VertexId e, VertexId f) {
  const std::size_t n = g.vertex_count();
  std::vector<EdgeId> via(n, -1);
  std::vector<bool> seen(n, false);
  std::deque<VertexId> queue{e};
  seen[static_cast<std::size_t>(e)] = true;
  while (!queue.empty() && !seen[static_cast<std::size_t>(f)]) {
    const auto v = queue.front();
    queue.pop_front();
    for (int c = 1; c <= g.rank(); ++c) {
      for (auto id : g.edges_into(v, c)) {
        const auto w = static_cast<std::size_t>(g.edge(id).source);
        if (!seen[w]) {
          seen[w] = true;
          via[w] = id;
          queue.push_back(static_cast<VertexId>(w));
        }
      }
    }
  }
  if (!seen[static_cast<std::size_t>(f)]) return std::nullopt;
  std::vector<EdgeId> raw;
  for (auto v = f; v != e;) {
    const auto id = via[static_cast<std::size_t>(v)];
    raw.push_back(id);
    v = g.edge(id).range;
  }
  std::reverse(raw.begin(), raw.end());
  if (raw.empty()) return Path::identity(g, e);
  return normalize(g, raw);
}

CofinalityReport cofinality_check(const KGraph& g) {
  CofinalityReport r;
  const auto reach = reachability(g);
  const std::size_t n = g.vertex_count();

  bool strongly_connected = true;
  for (std::size_t e = 0; e < n && strongly_connected; ++e) {
    for (std::size_t f = 0; f < n; ++f) {
      if (!reach[e][f]) {
        strongly_connected = false;
        break;
      }
    }
  }
  if (strongly_connected) {
    r.verdict = Verdict::holds;
    r.connecting.assign(n, {});
    for (std::size_t e = 0; e < n; ++e) {
      for (std::size_t f = 0; f < n; ++f) {
        r.connecting[e].push_back(*connecting_path(g, static_cast<VertexId>(e), static_cast<VertexId>(f)));
      }
    }
    return r;
  }

  // t lies in a sink component when everything below t reaches back to t.
  for (std::size_t t = 0; t < n; ++t) {
    bool sink = true;
    for (std::size_t w = 0; w < n && sink; ++w) {
      if (reach[t][w] && !reach[w][t]) sink = false;
    }
    if (!sink) continue;
    for (std::size_t e = 0; e < n; ++e) {
      if (!reach[e][t]) {
        r.verdict = Verdict::fails;
        r.counterexample = std::pair{static_cast<VertexId>(e), static_cast<VertexId>(t)};
        return r;
      }
    }
  }
  r.verdict = Verdict::unknown_up_to_bound;
  return r;
}

SimplicityReport simplicity_verdict(const KGraph& g, const Degree& pair_bound, const Degree& witness_bound,
                                    Exec exec) {
  SimplicityReport r;
  r.sources = has_no_sources(g);
  r.cofinality = cofinality_check(g);
  r.aperiodicity = aperiodicity_scan(g, pair_bound, witness_bound, exec);

  for (const auto& n : Degree::uniform(g.rank(), 1).lower_set()) {
    std::vector<std::size_t> count(g.vertex_count(), 0);
    for (const auto& p : paths_of_degree(g, n)) {
      if (++count[static_cast<std::size_t>(p.range())] >= 2) r.infinite = true;
    }
  }

  if (r.sources.verdict == Verdict::fails || r.cofinality.verdict == Verdict::fails) {
    r.verdict = Simplicity::fails;
  } else if (r.sources.verdict == Verdict::holds && r.cofinality.verdict == Verdict::holds &&
             r.aperiodicity.verdict == Verdict::holds) {
    r.verdict = Simplicity::simple_up_to_bounds;
  } else {
    r.verdict = Simplicity::not_decided;
  }
  return r;
}

}  // namespace kgg
