#pragma once

#include <vector>

#include "mlcd/attitude.hpp"
#include "mlcd/graph.hpp"

namespace mlcd {

// Node -> community labels, ids dense in 0..k-1.
struct CommunityAssignment {
  std::vector<int> labels;
  int k = 0;

  int n_nodes() const { return static_cast<int>(labels.size()); }
};

// Densifies arbitrary integer community ids by first appearance.
CommunityAssignment make_assignment(const std::vector<int>& raw_labels);

// Normalized mutual information between two partitions, in [0,1].
// Natural log; 0*log0 terms are 0. Two trivial (single-community)
// partitions compare as 1.
double nmi(const CommunityAssignment& a, const CommunityAssignment& b);

// Multi-layer modularity with inter-layer coupling: every same-node
// inter-layer pair is coupled with weight omega, gamma_s is the per-layer
// resolution, and the normalization is the total weight including couplings.
double q_coupled(const MultiLayerGraph& g, const CommunityAssignment& assignment,
                 const std::vector<double>& gamma_s, double omega);

// Multi-normalized average modularity: layer-wise Newman Q averaged over layers.
double q_nm(const MultiLayerGraph& g, const CommunityAssignment& assignment);

// Shared-degree modularity: the null model uses total (cross-layer) degrees.
double q_sd(const MultiLayerGraph& g, const CommunityAssignment& assignment);

// Within-community feature similarity indices; lower means more homogeneous.
// Pair terms: KL uses sum_k h_k^i log((h_k^i+1)/(h_k^j+1)); JS symmetrizes
// against the midpoint row. Community score averages over ordered pairs
// including (i,i); network score averages over communities.
double kl_similarity_index(const Matrix& features, const CommunityAssignment& assignment);
double js_similarity_index(const Matrix& features, const CommunityAssignment& assignment);

// Per-community fraction of each attitude; rows sum to 1.
// Columns: positive, neutral, negative.
Matrix attitude_shares(const CommunityAssignment& assignment, const std::vector<Attitude>& attitudes);

}  // namespace mlcd
