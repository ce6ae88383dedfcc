#pragma once

#include <string>
#include <vector>

#include "kgg/int_matrix.hpp"
#include "kgg/kgraph.hpp"
#include "kgg/parallel.hpp"

namespace kgg {

/// M_i(e, f) = number of color-i edges with range e and source f, for i = 1..k,
/// indexed by the canonical vertex order.
std::vector<IntMatrix> coordinate_matrices(const KGraph& g);

/// I - M_i^t for each color.
std::vector<IntMatrix> boundary_blocks(const KGraph& g);

/// D_p = (p-th exterior power of Z^k) (x) Z C_o with basis (S, e): S a p-subset
/// of colors in colex order, e a vertex. boundary[p] is d_p : D_p -> D_{p-1}
/// with d_p(S, e) = sum_j (-1)^(j+1) (S minus i_j, (I - M_{i_j}^t) e).
struct ChainComplex {
  int k = 0;
  std::size_t vertices = 0;
  std::vector<std::vector<unsigned>> subsets;  // subsets[p] as color bitmasks (bit i-1 = color i)
  std::vector<IntMatrix> boundary;             // boundary[0] is the zero map D_0 -> 0

  std::size_t dim(int p) const { return subsets[static_cast<std::size_t>(p)].size() * vertices; }
  /// e.g. "e1^e3 (x) v2"
  std::string basis_label(const KGraph& g, int p, std::size_t index) const;
};

/// Throws complex_inconsistent unless every d_p d_{p+1} vanishes.
ChainComplex evans_complex(const KGraph& g);

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // each > 1, t_1 | t_2 | ...

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  /// "0", "Z^2", "Z/3", "Z^1 (+) Z/2 (+) Z/4"
  std::string to_string() const;
  bool operator==(const HomologyGroup&) const = default;
};

/// H_p = ker d_p / im d_{p+1} for p = 0..k.
std::vector<HomologyGroup> homology(const ChainComplex& cx, Exec exec = Exec::parallel);

struct ShortcutHomology {
  HomologyGroup h0, hk;
};

/// H_0 = coker [I - M_1^t | ... | I - M_k^t] and H_k = intersection of the kernels.
ShortcutHomology h0_hk_shortcut(const KGraph& g);

}  // namespace kgg
