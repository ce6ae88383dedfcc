#include "kgg/semigroup.hpp"

#include <algorithm>

#include "kgg/error.hpp"

namespace kgg {

namespace {

// Sort, dedupe and drop every pair lying strictly below another pair.
std::vector<BasicMorphism> prune(const KGraph& g, std::vector<BasicMorphism> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<bool> dominated(pairs.size(), false);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (i == j || dominated[j]) continue;
      const auto& a = pairs[i];
      const auto& b = pairs[j];
      // Cheap filter: a <= b needs d(a.source) > d(b.source) here (equal-degree
      // comparable pairs would be identical, and those were deduplicated).
      if (a.source.range() != b.source.range() || !b.source.degree().leq(a.source.degree())) continue;
      if (leq_basic(g, a, b)) {
        dominated[i] = true;
        break;
      }
    }
  }
  std::vector<BasicMorphism> out;
  out.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!dominated[i]) out.push_back(std::move(pairs[i]));
  }
  return out;
}

// Agreement of a and b on the overlap of their domains.
bool agree_on_domains(const KGraph& g, const Path& ax, const Path& ay, const Path& bx, const Path& by) {
  for (const auto& z : mce(g, ay, by)) {
    const auto p = strip_prefix(g, z, ay);
    const auto q = strip_prefix(g, z, by);
    if (!(compose(g, ax, *p) == compose(g, bx, *q))) return false;
  }
  return true;
}

}  // namespace

BasicMorphism make_basic(const KGraph& g, Path target, Path source) {
  if (target.source() != source.source()) {
    throw Error(ErrorCode::invalid_element, "basic morphism " + format_path(g, target) + " / " +
                                                format_path(g, source) + " needs a common source vertex");
  }
  return BasicMorphism{std::move(target), std::move(source)};
}

MorphismTable MorphismTable::from_compatible_pairs(const KGraph& g, std::vector<BasicMorphism> pairs) {
  MorphismTable t;
  t.pairs_ = prune(g, std::move(pairs));
  return t;
}

MorphismTable MorphismTable::from_pairs(const KGraph& g, std::vector<BasicMorphism> pairs) {
  for (const auto& p : pairs) {
    if (p.target.source() != p.source.source()) {
      throw Error(ErrorCode::invalid_element, "pair " + format_path(g, p.target) + " / " +
                                                  format_path(g, p.source) + " has mismatched source vertices");
    }
  }
  auto t = from_compatible_pairs(g, std::move(pairs));
  for (std::size_t i = 0; i < t.pairs_.size(); ++i) {
    for (std::size_t j = i + 1; j < t.pairs_.size(); ++j) {
      if (!compatible(g, t.pairs_[i], t.pairs_[j])) {
        throw Error(ErrorCode::incompatible_table,
                    "pairs (" + format_path(g, t.pairs_[i].target) + " / " + format_path(g, t.pairs_[i].source) +
                        ") and (" + format_path(g, t.pairs_[j].target) + " / " +
                        format_path(g, t.pairs_[j].source) + ") disagree on an overlap");
      }
    }
  }
  return t;
}

MorphismTable identity_table(const KGraph& g) {
  std::vector<BasicMorphism> pairs;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    pairs.push_back({Path::identity(g, v), Path::identity(g, v)});
  }
  return MorphismTable::from_compatible_pairs(g, std::move(pairs));
}

bool compatible(const KGraph& g, const BasicMorphism& a, const BasicMorphism& b) {
  return agree_on_domains(g, a.target, a.source, b.target, b.source) &&
         agree_on_domains(g, a.source, a.target, b.source, b.target);
}

MorphismTable basic_product(const KGraph& g, const BasicMorphism& first, const BasicMorphism& second) {
  // (a b^-1)(c d^-1) with a, b = first and c, d = second.
  std::vector<BasicMorphism> pairs;
  for (const auto& z : mce(g, first.source, second.target)) {
    const auto p = strip_prefix(g, z, first.source);
    const auto q = strip_prefix(g, z, second.target);
    pairs.push_back({compose(g, first.target, *p), compose(g, second.source, *q)});
  }
  return MorphismTable::from_compatible_pairs(g, std::move(pairs));
}

MorphismTable table_product(const KGraph& g, const MorphismTable& s, const MorphismTable& t, Exec exec) {
  const auto ns = s.size(), nt = t.size();
  auto cells = parallel_map(ns * nt, exec, [&](std::size_t idx) {
    auto prod = basic_product(g, s.pairs()[idx / nt], t.pairs()[idx % nt]);
    return std::vector<BasicMorphism>(prod.pairs().begin(), prod.pairs().end());
  });
  return MorphismTable::from_compatible_pairs(g, flatten(std::move(cells)));
}

MorphismTable invert_table(const MorphismTable& s) {
  // Swapping preserves the antichain property, so only the order changes.
  MorphismTable out;
  out.pairs_.reserve(s.size());
  for (const auto& p : s.pairs()) out.pairs_.push_back({p.source, p.target});
  std::sort(out.pairs_.begin(), out.pairs_.end());
  return out;
}

bool leq_basic(const KGraph& g, const BasicMorphism& a, const BasicMorphism& b) {
  if (!b.target.degree().leq(a.target.degree()) || !b.source.degree().leq(a.source.degree())) return false;
  if (a.target.degree() - b.target.degree() != a.source.degree() - b.source.degree()) return false;
  const auto s = strip_prefix(g, a.target, b.target);
  if (!s) return false;
  const auto t = strip_prefix(g, a.source, b.source);
  return t && *s == *t;
}

MorphismTable meet(const KGraph& g, const MorphismTable& s, const MorphismTable& t) {
  std::vector<BasicMorphism> pairs;
  for (const auto& a : s.pairs()) {
    for (const auto& b : t.pairs()) {
      for (const auto& z : mce(g, a.source, b.source)) {
        const auto p = strip_prefix(g, z, a.source);
        const auto q = strip_prefix(g, z, b.source);
        auto image = compose(g, a.target, *p);
        if (image == compose(g, b.target, *q)) pairs.push_back({std::move(image), z});
      }
    }
  }
  return MorphismTable::from_compatible_pairs(g, std::move(pairs));
}

std::optional<Path> apply_table(const KGraph& g, const MorphismTable& s, const Path& p) {
  for (const auto& pair : s.pairs()) {
    if (auto rest = strip_prefix(g, p, pair.source)) return compose(g, pair.target, *rest);
  }
  return std::nullopt;
}

bool is_code(const KGraph& g, std::span<const Path> paths) {
  std::vector<Path> xs(paths.begin(), paths.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (!independent(g, xs[i], xs[j])) return false;
    }
  }
  return true;
}

namespace {

Degree join_of(const KGraph& g, std::span<const Path> paths) {
  Degree m = Degree::zero(g.rank());
  for (const auto& p : paths) m = m.join(p.degree());
  return m;
}

void require_code(const KGraph& g, std::span<const Path> paths) {
  if (!is_code(g, paths)) throw Error(ErrorCode::not_a_code, "paths are not pairwise independent");
}

}  // namespace

std::vector<Path> expand_to_degree(const KGraph& g, std::span<const Path> paths, const Degree& m) {
  std::vector<Path> out;
  for (const auto& x : paths) {
    auto ext = extensions(g, x, m - x.degree());
    out.insert(out.end(), std::make_move_iterator(ext.begin()), std::make_move_iterator(ext.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_maximal_code(const KGraph& g, std::span<const Path> paths) {
  require_code(g, paths);
  if (paths.empty()) return false;
  const Degree m = join_of(g, paths);
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    for (const auto& z : extensions(g, v, m)) {
      const bool covered = std::any_of(paths.begin(), paths.end(), [&](const Path& x) {
        return x.range() == v && has_prefix(g, z, x);
      });
      if (!covered) return false;
    }
  }
  return true;
}

bool is_tight_cover(const KGraph& g, const Path& a, std::span<const Path> cover) {
  if (auto src = find_source(g)) {
    throw Error(ErrorCode::has_sources, "vertex " + g.vertex_name(src->first) + " receives no edge of color " +
                                            std::to_string(src->second));
  }
  for (const auto& x : cover) {
    if (!has_prefix(g, x, a)) {
      throw Error(ErrorCode::not_extension, format_path(g, x) + " does not extend " + format_path(g, a));
    }
  }
  if (cover.empty()) return false;
  const Degree m = join_of(g, cover);
  for (const auto& z : extensions(g, a, m - a.degree())) {
    const bool hit = std::any_of(cover.begin(), cover.end(), [&](const Path& x) { return has_prefix(g, z, x); });
    if (!hit) return false;
  }
  return true;
}

bool idempotent_equiv(const KGraph& g, std::span<const Path> x, std::span<const Path> y) {
  require_code(g, x);
  require_code(g, y);
  const Degree m = join_of(g, x).join(join_of(g, y));
  auto ex = expand_to_degree(g, x, m);
  auto ey = expand_to_degree(g, y, m);
  ex.erase(std::unique(ex.begin(), ex.end()), ex.end());
  ey.erase(std::unique(ey.begin(), ey.end()), ey.end());
  return ex == ey;
}

bool is_infinitesimal(const KGraph& g, const MorphismTable& s) {
  return !s.empty() && table_product(g, s, s, Exec::serial).empty();
}

}  // namespace kgg
