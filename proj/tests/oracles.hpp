#pragma once

// Brute-force reference implementations used only by tests. They rely on the
// square data and on `normalize` (the rewriting everything else is built on),
// never on segment/strip_prefix/extensions/mce.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "kgg/group.hpp"
#include "kgg/path.hpp"
#include "kgg/semigroup.hpp"

namespace kgg::oracle {

/// Every way of writing z as prefix * suffix, found by walking all edge words
/// reachable from z's word through square swaps.
class Factorizations {
 public:
  explicit Factorizations(const KGraph& g) : g_(g) {}

  const std::map<Path, Path>& of(const Path& z) {
    auto it = cache_.find(z);
    if (it != cache_.end()) return it->second;
    std::set<std::vector<EdgeId>> words;
    std::vector<std::vector<EdgeId>> stack{std::vector<EdgeId>(z.edges().begin(), z.edges().end())};
    words.insert(stack.back());
    while (!stack.empty()) {
      auto w = std::move(stack.back());
      stack.pop_back();
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (g_.color(w[i]) == g_.color(w[i + 1])) continue;
        auto swapped = g_.partner(w[i], w[i + 1]);
        if (!swapped) continue;
        auto next = w;
        next[i] = swapped->first;
        next[i + 1] = swapped->second;
        if (words.insert(next).second) stack.push_back(std::move(next));
      }
    }
    std::map<Path, Path> splits;
    for (const auto& w : words) {
      for (std::size_t cut = 0; cut <= w.size(); ++cut) {
        std::vector<EdgeId> head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
        std::vector<EdgeId> tail(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
        Path p = head.empty() ? Path::identity(g_, z.range()) : normalize(g_, head);
        Path s = tail.empty() ? Path::identity(g_, z.source()) : normalize(g_, tail);
        splits.emplace(std::move(p), std::move(s));
      }
    }
    return cache_.emplace(z, std::move(splits)).first->second;
  }

  std::optional<Path> suffix(const Path& z, const Path& prefix) {
    const auto& s = of(z);
    auto it = s.find(prefix);
    if (it == s.end()) return std::nullopt;
    return it->second;
  }

 private:
  const KGraph& g_;
  std::map<Path, std::map<Path, Path>> cache_;
};

inline Path concat(const KGraph& g, const Path& p, const Path& q) {
  std::vector<EdgeId> w(p.edges().begin(), p.edges().end());
  w.insert(w.end(), q.edges().begin(), q.edges().end());
  if (w.empty()) return Path::identity(g, p.range());
  return normalize(g, w);
}

/// All morphisms with range v and degree m, from every composable edge word
/// with the right color counts (in any color order), deduplicated.
inline std::vector<Path> paths_by_words(const KGraph& g, VertexId v, const Degree& m) {
  std::set<Path> out;
  std::vector<EdgeId> word;
  Degree left = m;
  auto rec = [&](auto&& self, VertexId at) -> void {
    if (left.is_zero()) {
      out.insert(word.empty() ? Path::identity(g, v) : normalize(g, word));
      return;
    }
    for (int c = 1; c <= g.rank(); ++c) {
      if (left[c - 1] == 0) continue;
      left.set(c - 1, left[c - 1] - 1);
      for (auto e : g.edges_into(at, c)) {
        word.push_back(e);
        self(self, g.edge(e).source);
        word.pop_back();
      }
      left.set(c - 1, left[c - 1] + 1);
    }
  };
  rec(rec, v);
  return {out.begin(), out.end()};
}

inline std::vector<Path> all_paths_upto(const KGraph& g, const Degree& bound) {
  std::vector<Path> out;
  for (const auto& n : bound.lower_set()) {
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
      for (auto& p : paths_by_words(g, v, n)) out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Common extensions of degree d(p) v d(q), by enumeration.
inline std::vector<Path> mce(const KGraph& g, Factorizations& f, const Path& p, const Path& q) {
  if (p.range() != q.range()) return {};
  std::vector<Path> out;
  for (const auto& z : paths_by_words(g, p.range(), p.degree().join(q.degree()))) {
    if (f.suffix(z, p) && f.suffix(z, q)) out.push_back(z);
  }
  return out;
}

/// The partial bijection of a list of basic morphisms, evaluated at z. Returns
/// nullopt outside the domain; throws if two pairs disagree at z.
inline std::optional<Path> apply(const KGraph& g, Factorizations& f, std::span<const BasicMorphism> pairs,
                                 const Path& z) {
  std::optional<Path> image;
  for (const auto& pr : pairs) {
    if (auto s = f.suffix(z, pr.source)) {
      auto w = concat(g, pr.target, *s);
      if (image && !(*image == w)) throw std::logic_error("table is not a function");
      image = std::move(w);
    }
  }
  return image;
}

/// Random morphism: a random composable word of degree <= bound ending at a
/// random vertex, in a random color order.
inline Path random_path(const KGraph& g, std::mt19937_64& rng, const Degree& bound,
                        std::optional<VertexId> range = std::nullopt) {
  std::uniform_int_distribution<VertexId> vd(0, static_cast<VertexId>(g.vertex_count()) - 1);
  const VertexId v = range ? *range : vd(rng);
  std::vector<int> colors;
  for (int c = 1; c <= g.rank(); ++c) {
    std::uniform_int_distribution<int> nd(0, bound[c - 1]);
    for (int i = nd(rng); i > 0; --i) colors.push_back(c);
  }
  std::shuffle(colors.begin(), colors.end(), rng);
  std::vector<EdgeId> word;
  VertexId at = v;
  for (int c : colors) {
    auto in = g.edges_into(at, c);
    std::uniform_int_distribution<std::size_t> ed(0, in.size() - 1);
    word.push_back(in[ed(rng)]);
    at = g.edge(word.back()).source;
  }
  return word.empty() ? Path::identity(g, v) : normalize(g, word);
}

/// Group-element action at z computed only from the pair list.
inline std::optional<Path> act(const KGraph& g, Factorizations& f, const GroupElement& e, const Path& z) {
  return apply(g, f, e.pairs(), z);
}

}  // namespace kgg::oracle
