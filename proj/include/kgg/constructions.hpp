#pragma once

#include <string>
#include <vector>

#include "kgg/kgraph.hpp"

namespace kgg {

/// Name of symbol s (1-based) of color i (1-based): "a1", "b3", ... Colors past
/// 26 fall back to "x27_1".
std::string symbol_name(int color, int index);

/// A Z/2 label for every symbol of the alphabets X_1, ..., X_k.
struct Labelling {
  std::vector<std::vector<int>> values;  // values[i-1][s-1] in {0, 1}

  int operator()(int color, int index) const {
    return values[static_cast<std::size_t>(color - 1)][static_cast<std::size_t>(index - 1)];
  }

  /// Every symbol labelled 1.
  static Labelling uniform(const std::vector<int>& sizes);
  /// X_1 labelled 0, all other symbols labelled 1.
  static Labelling mixed(const std::vector<int>& sizes);
  static Labelling constant(const std::vector<int>& sizes, int value);
  /// JSON object {"a1": 0, "b1": 1, ...}; must be total on the alphabet.
  static Labelling from_json(const std::vector<int>& sizes, const std::string& text);
};

/// One vertex "v", sizes[i-1] loops of color i, all cross-color pairs commuting.
/// With all sizes 2 this is the graph whose group is nV; all sizes 1 gives N^k.
KGraph bouquet_product(int k, const std::vector<int>& sizes);

/// Double cover of the product-of-bouquets cube complex determined by a Z/2
/// labelling, with doubled ("bar") edges so that every vertex receives edges of
/// every color. Vertices "v@0", "v@1"; edges "a1@0", "a1bar@1", ...
KGraph double_cover(int k, const std::vector<int>& sizes, const Labelling& labelling);

/// The (R+1)-vertex k-graph with three loops per vertex and two edges per ordered
/// pair of distinct vertices in each color. Vertices "v1".."v{R+1}", edges
/// "e{i}_{v}_{m}_{w}" with range v and source w.
KGraph ckr(int k, int R);

}  // namespace kgg
