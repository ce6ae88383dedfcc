#include "kgg/homology.hpp"

#include <algorithm>
#include <bit>

#include "kgg/error.hpp"

namespace kgg {

std::vector<IntMatrix> coordinate_matrices(const KGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<IntMatrix> out(static_cast<std::size_t>(g.rank()), IntMatrix(n, n));
  for (const auto& e : g.edges()) {
    out[static_cast<std::size_t>(e.color - 1)](static_cast<std::size_t>(e.range),
                                               static_cast<std::size_t>(e.source)) += 1;
  }
  return out;
}

std::vector<IntMatrix> boundary_blocks(const KGraph& g) {
  std::vector<IntMatrix> out;
  for (const auto& m : coordinate_matrices(g)) out.push_back(IntMatrix::identity(m.rows()) - m.transpose());
  return out;
}

std::string ChainComplex::basis_label(const KGraph& g, int p, std::size_t index) const {
  const unsigned mask = subsets[static_cast<std::size_t>(p)][index / vertices];
  std::string label;
  for (int i = 1; i <= k; ++i) {
    if (mask & (1u << (i - 1))) label += (label.empty() ? "e" : "^e") + std::to_string(i);
  }
  if (label.empty()) label = "1";
  return label + " (x) " + g.vertex_name(static_cast<VertexId>(index % vertices));
}

ChainComplex evans_complex(const KGraph& g) {
  ChainComplex cx;
  cx.k = g.rank();
  cx.vertices = g.vertex_count();
  cx.subsets.assign(static_cast<std::size_t>(cx.k) + 1, {});
  // Increasing bitmasks of fixed popcount are in colex order.
  for (unsigned mask = 0; mask < (1u << cx.k); ++mask) {
    cx.subsets[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  }
  const auto blocks = boundary_blocks(g);
  const std::size_t n = cx.vertices;

  cx.boundary.emplace_back(0, cx.dim(0));
  for (int p = 1; p <= cx.k; ++p) {
    const auto& lower = cx.subsets[static_cast<std::size_t>(p - 1)];
    IntMatrix d(cx.dim(p - 1), cx.dim(p));
    const auto& subs = cx.subsets[static_cast<std::size_t>(p)];
    for (std::size_t s = 0; s < subs.size(); ++s) {
      int j = 0;
      for (int i = 1; i <= cx.k; ++i) {
        const unsigned bit = 1u << (i - 1);
        if (!(subs[s] & bit)) continue;
        ++j;
        const int sign = (j % 2 == 1) ? 1 : -1;
        const auto face = static_cast<std::size_t>(
            std::lower_bound(lower.begin(), lower.end(), subs[s] & ~bit) - lower.begin());
        const auto& a = blocks[static_cast<std::size_t>(i - 1)];
        for (std::size_t e = 0; e < n; ++e) {
          for (std::size_t f = 0; f < n; ++f) {
            if (a(f, e) != 0) d(face * n + f, s * n + e) += sign * a(f, e);
          }
        }
      }
    }
    cx.boundary.push_back(std::move(d));
  }

  for (int p = 1; p < cx.k; ++p) {
    if (!(cx.boundary[static_cast<std::size_t>(p)] * cx.boundary[static_cast<std::size_t>(p + 1)]).is_zero()) {
      throw Error(ErrorCode::complex_inconsistent,
                  "d_" + std::to_string(p) + " d_" + std::to_string(p + 1) + " is not zero");
    }
  }
  return cx;
}

std::string HomologyGroup::to_string() const {
  if (trivial()) return "0";
  std::string out;
  if (free_rank > 0) out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const auto& t : torsion) {
    if (!out.empty()) out += " (+) ";
    out += "Z/" + t.str();
  }
  return out;
}

namespace {

HomologyGroup from_cokernel(std::size_t ambient, const SmithForm& f) {
  HomologyGroup h;
  h.free_rank = ambient - f.rank;
  for (const auto& d : f.diagonal) {
    if (d > 1) h.torsion.push_back(d);
  }
  return h;
}

HomologyGroup homology_at(const ChainComplex& cx, int p) {
  const std::size_t n = cx.dim(p);
  const auto& out = cx.boundary[static_cast<std::size_t>(p)];
  const auto f = smith_normal_form(out);
  const std::size_t kernel_dim = n - f.rank;
  if (p == cx.k) {
    HomologyGroup h;
    h.free_rank = kernel_dim;
    return h;
  }
  // Columns rank.. of V span ker d_p; V^-1 gives coordinates in that basis.
  const auto& in = cx.boundary[static_cast<std::size_t>(p + 1)];
  const auto coords = f.v_inv * in;
  if (!coords.row_block(0, f.rank).is_zero()) {
    throw Error(ErrorCode::complex_inconsistent,
                "image of d_" + std::to_string(p + 1) + " leaves the kernel of d_" + std::to_string(p));
  }
  const auto image = coords.row_block(f.rank, n);
  return from_cokernel(kernel_dim, smith_normal_form(image));
}

}  // namespace

std::vector<HomologyGroup> homology(const ChainComplex& cx, Exec exec) {
  return parallel_map(static_cast<std::size_t>(cx.k) + 1, exec,
                      [&](std::size_t p) { return homology_at(cx, static_cast<int>(p)); });
}

ShortcutHomology h0_hk_shortcut(const KGraph& g) {
  const auto blocks = boundary_blocks(g);
  const std::size_t n = g.vertex_count();
  IntMatrix concat(n, 0), stacked(0, n);
  for (const auto& a : blocks) {
    concat = concat.hstack(a);
    stacked = stacked.vstack(a);
  }
  ShortcutHomology s;
  s.h0 = from_cokernel(n, smith_normal_form(concat));
  s.hk.free_rank = n - smith_normal_form(stacked).rank;
  return s;
}

}  // namespace kgg
