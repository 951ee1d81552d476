#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace mlcd {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// N aligned nodes carrying L symmetric binary adjacency layers, optional
// node features (non-negative reals, e.g. word weights) and optional
// ground-truth community labels. Node ids are densified to 0..N-1; original
// external ids, when they exist, live in node_ids.
struct MultiLayerGraph {
  int n_nodes = 0;
  std::vector<Matrix> layers;
  std::optional<Matrix> features;
  std::optional<std::vector<int>> labels;
  std::vector<std::string> node_ids;  // empty when ids were already dense

  int n_layers() const { return static_cast<int>(layers.size()); }

  // Throws on violated invariants: non-square/asymmetric layers, entries
  // outside {0,1}, nonzero diagonal, misaligned features/labels.
  void validate() const;
};

// Undirected edge count of one layer.
double layer_edge_count(const Matrix& layer);

// Per-node degree vector of one layer.
Vector layer_degrees(const Matrix& layer);

struct SubgraphResult {
  MultiLayerGraph graph;
  std::vector<int> original_ids;  // new index -> id in the parent graph
};

// Induced subgraph on the given (unique, in-range) node ids across all
// layers; features/labels sliced alongside.
SubgraphResult subgraph(const MultiLayerGraph& g, const std::vector<int>& node_ids);

}  // namespace mlcd
