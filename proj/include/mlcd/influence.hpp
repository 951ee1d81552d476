#pragma once

#include <vector>

#include "mlcd/graph.hpp"

namespace mlcd {

struct InfluenceScores {
  Vector scores;            // non-negative, length N
  int iterations_used = 0;
  bool converged = false;
  int isolated_nodes = 0;   // rows of the transfer matrix zeroed for lack of edges
};

// Damped eigenvector centrality over the layer union. Per layer the
// matrix is D^(l) + A^(l) (degree diagonal added, as the iteration is
// specified); the union is the elementwise max across layers; rows are
// normalized by their sums. Init is degree centrality; the iterate is
// EC <- damping * M * EC + (1 - damping) * EC until the sup-norm change
// drops below eps. Set add_degree_diagonal=false for the plain-A variant.
InfluenceScores eigen_influence(const MultiLayerGraph& g, double damping = 0.85,
                                double eps = 1e-8, int max_iter = 1000,
                                bool add_degree_diagonal = true);

// ceil(eta*n) highest-score nodes, descending score, ties to lower id.
std::vector<int> top_influencers(const InfluenceScores& scores, double eta, int n);

// Per node, size of the union of its neighborhoods across layers.
std::vector<int> max_neighbor_counts(const MultiLayerGraph& g);

}  // namespace mlcd
