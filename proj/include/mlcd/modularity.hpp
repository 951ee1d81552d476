#pragma once

#include <vector>

#include "mlcd/graph.hpp"

namespace mlcd {

// Null-model denominator convention; TwoM is the standard Newman form
// (rows of B sum to exactly zero).
enum class ModularityDenominator { TwoM, M };

// Stack of per-layer modularity matrices B^(l) with the degree vectors and
// undirected edge counts they were built from.
struct ModularityTensor {
  std::vector<Matrix> mats;
  std::vector<Vector> degrees;
  std::vector<double> edge_counts;

  int n_layers() const { return static_cast<int>(mats.size()); }
  int n_nodes() const { return mats.empty() ? 0 : static_cast<int>(mats[0].rows()); }
};

// b_ij^l = a_ij^l - k_i^l k_j^l / (2 m^l). Throws EmptyLayer when a layer
// has no edges (the null model is undefined there).
ModularityTensor build_modularity_tensor(const MultiLayerGraph& g,
                                         ModularityDenominator den = ModularityDenominator::TwoM);

}  // namespace mlcd
