#include "mlcd/modularity.hpp"

#include <string>

#include "mlcd/errors.hpp"

namespace mlcd {

ModularityTensor build_modularity_tensor(const MultiLayerGraph& g, ModularityDenominator den) {
  ModularityTensor bt;
  bt.mats.reserve(g.layers.size());
  bt.degrees.reserve(g.layers.size());
  bt.edge_counts.reserve(g.layers.size());

  for (std::size_t l = 0; l < g.layers.size(); ++l) {
    const Matrix& a = g.layers[l];
    Vector k = layer_degrees(a);
    double m = layer_edge_count(a);
    if (m <= 0.0)
      throw EmptyLayer("layer " + std::to_string(l) + " has no edges");
    double denom = den == ModularityDenominator::TwoM ? 2.0 * m : m;
    Matrix b = a - (k * k.transpose()) / denom;
    bt.mats.push_back(std::move(b));
    bt.degrees.push_back(std::move(k));
    bt.edge_counts.push_back(m);
  }
  return bt;
}

}  // namespace mlcd
