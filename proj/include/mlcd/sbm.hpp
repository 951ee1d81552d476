#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mlcd/graph.hpp"

namespace mlcd {

// Multi-layer mixture stochastic block model: each layer draws one of M
// partitions, node memberships are drawn once per partition, edges are
// Bernoulli by block probabilities.
struct MLSBMConfig {
  int n_nodes = 0;
  int n_layers = 0;
  int n_partitions = 1;
  std::vector<int> communities_per_partition;        // K_m
  std::vector<double> partition_probs;               // pi over partitions
  std::vector<std::vector<double>> membership_probs; // per partition, length K_m
  std::vector<Matrix> block_matrices;                // per partition, K_m x K_m in [0,1]
  std::uint64_t rng_seed = 0;

  void validate() const;  // throws InvalidConfig naming the violated constraint
};

struct MLSBMResult {
  MultiLayerGraph graph;                  // labels = partition-0 memberships
  std::vector<int> layer_partitions;      // layer -> partition drawn
  std::vector<std::vector<int>> memberships;  // per partition, node -> community
};

MLSBMResult generate_mlsbm(const MLSBMConfig& cfg);

// Single-partition planted config: balanced K communities with
// within:between probability ratio tuned to hit the target mean degree.
MLSBMConfig planted_config(int n_nodes, int n_layers, int k, double mean_degree,
                           double within_between_ratio, std::uint64_t seed);

// The three synthetic benchmark graphs: N in {300,400,500}, L=3, K=2,
// mean degree about 10.
std::vector<std::pair<MultiLayerGraph, std::string>> benchmark_suite(std::uint64_t seed);

}  // namespace mlcd
