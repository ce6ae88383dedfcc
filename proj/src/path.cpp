#include "kgg/path.hpp"

#include <algorithm>

#include "kgg/error.hpp"

namespace kgg {

namespace {

// Replace the adjacent pair seq[t-1], seq[t] (distinct colors) by its other factorization.
void swap_adjacent(const KGraph& g, std::vector<EdgeId>& seq, std::size_t t) {
  auto other = g.partner(seq[t - 1], seq[t]);
  if (!other) {
    throw Error(ErrorCode::missing_square, "no square for " + g.edge(seq[t - 1]).name + "," +
                                               g.edge(seq[t]).name);
  }
  seq[t - 1] = other->first;
  seq[t] = other->second;
}

// Insertion sort by color using squares; seq[0, start) must already be sorted.
void sort_colors(const KGraph& g, std::vector<EdgeId>& seq, std::size_t start = 1) {
  for (std::size_t i = std::max<std::size_t>(start, 1); i < seq.size(); ++i) {
    for (std::size_t t = i; t > 0 && g.color(seq[t - 1]) > g.color(seq[t]); --t) {
      swap_adjacent(g, seq, t);
    }
  }
}

// Rewrite seq so that its color word becomes `target` (same multiset of colors).
void reorder(const KGraph& g, std::vector<EdgeId>& seq, const std::vector<int>& target) {
  for (std::size_t i = 0; i < target.size(); ++i) {
    std::size_t j = i;
    while (g.color(seq[j]) != target[i]) ++j;
    for (std::size_t t = j; t > i; --t) swap_adjacent(g, seq, t);
  }
}

void append_block(std::vector<int>& word, const Degree& d) {
  for (int c = 1; c <= d.rank(); ++c) word.insert(word.end(), static_cast<std::size_t>(d[c - 1]), c);
}

Degree degree_of(const KGraph& g, std::span<const EdgeId> edges) {
  Degree d(g.rank());
  for (auto e : edges) d.set(g.color(e) - 1, d[g.color(e) - 1] + 1);
  return d;
}

}  // namespace

Path Path::identity(const KGraph& g, VertexId v) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) {
    throw Error(ErrorCode::unknown_vertex, "vertex id " + std::to_string(v));
  }
  return make_sorted_path(g, v, {});
}

Path Path::edge(const KGraph& g, EdgeId e) { return make_sorted_path(g, g.edge(e).range, {e}); }

std::strong_ordering Path::operator<=>(const Path& other) const {
  if (auto c = range_ <=> other.range_; c != 0) return c;
  if (auto c = degree_ <=> other.degree_; c != 0) return c;
  return std::lexicographical_compare_three_way(edges_.begin(), edges_.end(), other.edges_.begin(),
                                                other.edges_.end());
}

Path make_sorted_path(const KGraph& g, VertexId range, std::vector<EdgeId> edges) {
  Path p;
  p.range_ = range;
  p.source_ = edges.empty() ? range : g.edge(edges.back()).source;
  p.degree_ = degree_of(g, edges);
  p.edges_ = std::move(edges);
  return p;
}

Path normalize(const KGraph& g, std::span<const EdgeId> raw) {
  if (raw.empty()) throw Error(ErrorCode::not_composable, "empty edge sequence has no range vertex");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0 || static_cast<std::size_t>(raw[i]) >= g.edge_count()) {
      throw Error(ErrorCode::unknown_edge, "edge id " + std::to_string(raw[i]));
    }
    if (i > 0 && g.edge(raw[i - 1]).source != g.edge(raw[i]).range) {
      throw Error(ErrorCode::not_composable, "edges at index " + std::to_string(i - 1) + " and " +
                                                 std::to_string(i) + " (" + g.edge(raw[i - 1]).name +
                                                 "," + g.edge(raw[i]).name + ") do not compose");
    }
  }
  std::vector<EdgeId> seq(raw.begin(), raw.end());
  sort_colors(g, seq);
  return make_sorted_path(g, g.edge(raw.front()).range, std::move(seq));
}

Path compose(const KGraph& g, const Path& p, const Path& q) {
  if (p.source() != q.range()) {
    throw Error(ErrorCode::not_composable, "source " + g.vertex_name(p.source()) + " != range " +
                                               g.vertex_name(q.range()));
  }
  if (q.is_identity()) return p;
  if (p.is_identity()) return q;
  std::vector<EdgeId> seq;
  seq.reserve(p.length() + q.length());
  seq.insert(seq.end(), p.edges().begin(), p.edges().end());
  seq.insert(seq.end(), q.edges().begin(), q.edges().end());
  sort_colors(g, seq, p.length());
  return make_sorted_path(g, p.range(), std::move(seq));
}

Path segment(const KGraph& g, const Path& p, const Degree& m, const Degree& n) {
  if (!m.leq(n) || !n.leq(p.degree())) {
    throw Error(ErrorCode::degree_out_of_range, "segment [" + m.to_string() + "; " + n.to_string() +
                                                    "] of a path of degree " + p.degree().to_string());
  }
  std::vector<EdgeId> seq(p.edges().begin(), p.edges().end());
  std::vector<int> word;
  append_block(word, m);
  append_block(word, n - m);
  append_block(word, p.degree() - n);
  reorder(g, seq, word);
  const auto lo = static_cast<std::size_t>(m.total());
  const auto hi = static_cast<std::size_t>(n.total());
  const VertexId range = lo == 0 ? p.range() : g.edge(seq[lo - 1]).source;
  return make_sorted_path(g, range, std::vector<EdgeId>(seq.begin() + static_cast<std::ptrdiff_t>(lo),
                                                         seq.begin() + static_cast<std::ptrdiff_t>(hi)));
}

std::optional<Path> strip_prefix(const KGraph& g, const Path& z, const Path& x) {
  if (z.range() != x.range() || !x.degree().leq(z.degree())) return std::nullopt;
  if (x.is_identity()) return z;
  std::vector<EdgeId> seq(z.edges().begin(), z.edges().end());
  std::vector<int> word;
  append_block(word, x.degree());
  append_block(word, z.degree() - x.degree());
  reorder(g, seq, word);
  const auto k = x.length();
  if (!std::equal(x.edges().begin(), x.edges().end(), seq.begin())) return std::nullopt;
  return make_sorted_path(g, x.source(),
                          std::vector<EdgeId>(seq.begin() + static_cast<std::ptrdiff_t>(k), seq.end()));
}

bool has_prefix(const KGraph& g, const Path& z, const Path& x) { return strip_prefix(g, z, x).has_value(); }

std::vector<Path> extensions(const KGraph& g, VertexId v, const Degree& m) {
  std::vector<Path> out;
  std::vector<EdgeId> seq;
  seq.reserve(static_cast<std::size_t>(m.total()));
  // Depth-first over the color-sorted word: m_1 color-1 edges, then m_2 color-2 edges, ...
  auto rec = [&](auto&& self, int color, int left, VertexId at) -> void {
    while (color <= g.rank() && left == 0) {
      ++color;
      if (color <= g.rank()) left = m[color - 1];
    }
    if (color > g.rank()) {
      out.push_back(make_sorted_path(g, v, seq));
      return;
    }
    for (EdgeId e : g.edges_into(at, color)) {
      seq.push_back(e);
      self(self, color, left - 1, g.edge(e).source);
      seq.pop_back();
    }
  };
  rec(rec, 1, m.rank() > 0 ? m[0] : 0, v);
  return out;
}

std::vector<Path> extensions(const KGraph& g, const Path& p, const Degree& m) {
  auto tails = extensions(g, p.source(), m);
  std::vector<Path> out;
  out.reserve(tails.size());
  for (const auto& u : tails) out.push_back(compose(g, p, u));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> paths_of_degree(const KGraph& g, const Degree& m) {
  std::vector<Path> out;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    auto part = extensions(g, v, m);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

namespace {

// Enumerates candidates p*u of degree d(p) v d(q) that also lie in qC. Stops after
// the first hit when `first_only` is set.
std::vector<Path> common_extensions(const KGraph& g, const Path& p, const Path& q, bool first_only) {
  if (p.range() != q.range()) return {};
  const Degree low = p.degree().meet(q.degree());
  const Degree zero = Degree::zero(g.rank());
  if (!(segment(g, p, zero, low) == segment(g, q, zero, low))) return {};
  const Degree top = p.degree().join(q.degree());
  std::vector<Path> out;
  for (const auto& u : extensions(g, p.source(), top - p.degree())) {
    auto z = compose(g, p, u);
    if (has_prefix(g, z, q)) {
      out.push_back(std::move(z));
      if (first_only) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Path> mce(const KGraph& g, const Path& p, const Path& q) {
  return common_extensions(g, p, q, false);
}

bool independent(const KGraph& g, const Path& p, const Path& q) {
  return common_extensions(g, p, q, true).empty();
}

Path parse_path(const KGraph& g, std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) throw Error(ErrorCode::syntax_error, "empty name in path '" + std::string(text) + "'");
    tokens.push_back(tok);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (tokens.size() == 1 && !g.find_edge(tokens[0])) {
    if (auto v = g.find_vertex(tokens[0])) return Path::identity(g, *v);
  }
  std::vector<EdgeId> raw;
  for (auto tok : tokens) {
    auto e = g.find_edge(tok);
    if (!e) throw Error(ErrorCode::unknown_edge, "'" + std::string(tok) + "' in path '" + std::string(text) + "'");
    raw.push_back(*e);
  }
  return normalize(g, raw);
}

std::string format_path(const KGraph& g, const Path& p) {
  if (p.is_identity()) return g.vertex_name(p.range());
  std::string out;
  for (auto e : p.edges()) {
    if (!out.empty()) out += ',';
    out += g.edge(e).name;
  }
  return out;
}

}  // namespace kgg
