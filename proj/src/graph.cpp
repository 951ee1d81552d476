#include "mlcd/graph.hpp"

#include <cmath>
#include <set>
#include <string>

#include "mlcd/errors.hpp"

namespace mlcd {

void MultiLayerGraph::validate() const {
  for (std::size_t l = 0; l < layers.size(); ++l) {
    const Matrix& a = layers[l];
    if (a.rows() != n_nodes || a.cols() != n_nodes)
      throw ShapeMismatch("layer " + std::to_string(l) + " is not n_nodes x n_nodes");
    for (int i = 0; i < n_nodes; ++i) {
      if (a(i, i) != 0.0)
        throw ShapeMismatch("layer " + std::to_string(l) + " has a nonzero diagonal");
      for (int j = i + 1; j < n_nodes; ++j) {
        double v = a(i, j);
        if (v != 0.0 && v != 1.0)
          throw ShapeMismatch("layer " + std::to_string(l) + " has a non-binary entry");
        if (v != a(j, i))
          throw ShapeMismatch("layer " + std::to_string(l) + " is not symmetric");
      }
    }
  }
  if (features && features->rows() != n_nodes)
    throw ShapeMismatch("feature row count does not match n_nodes");
  if (labels && static_cast<int>(labels->size()) != n_nodes)
    throw LengthMismatch("label count does not match n_nodes");
  if (!node_ids.empty() && static_cast<int>(node_ids.size()) != n_nodes)
    throw LengthMismatch("node_ids count does not match n_nodes");
}

double layer_edge_count(const Matrix& layer) {
  return layer.sum() / 2.0;
}

Vector layer_degrees(const Matrix& layer) {
  return layer.rowwise().sum();
}

SubgraphResult subgraph(const MultiLayerGraph& g, const std::vector<int>& node_ids) {
  std::set<int> seen;
  for (int id : node_ids) {
    if (id < 0 || id >= g.n_nodes)
      throw BadNodeId("node id " + std::to_string(id) + " out of range");
    if (!seen.insert(id).second)
      throw BadNodeId("duplicate node id " + std::to_string(id));
  }

  const int m = static_cast<int>(node_ids.size());
  SubgraphResult out;
  out.original_ids = node_ids;
  out.graph.n_nodes = m;
  out.graph.layers.reserve(g.layers.size());
  for (const Matrix& a : g.layers) {
    Matrix s(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) s(i, j) = a(node_ids[i], node_ids[j]);
    out.graph.layers.push_back(std::move(s));
  }
  if (g.features) {
    Matrix f(m, g.features->cols());
    for (int i = 0; i < m; ++i) f.row(i) = g.features->row(node_ids[i]);
    out.graph.features = std::move(f);
  }
  if (g.labels) {
    std::vector<int> lab(m);
    for (int i = 0; i < m; ++i) lab[i] = (*g.labels)[node_ids[i]];
    out.graph.labels = std::move(lab);
  }
  if (!g.node_ids.empty()) {
    out.graph.node_ids.resize(m);
    for (int i = 0; i < m; ++i) out.graph.node_ids[i] = g.node_ids[node_ids[i]];
  }
  return out;
}

}  // namespace mlcd
