#include "mlcd/sbm.hpp"

#include <cmath>
#include <string>

#include "mlcd/errors.hpp"
#include "mlcd/rng.hpp"

namespace mlcd {

void MLSBMConfig::validate() const {
  if (n_nodes < 1) throw InvalidConfig("n_nodes must be >= 1");
  if (n_layers < 1) throw InvalidConfig("n_layers must be >= 1");
  if (n_partitions < 1) throw InvalidConfig("n_partitions must be >= 1");
  if (static_cast<int>(communities_per_partition.size()) != n_partitions)
    throw InvalidConfig("communities_per_partition must have n_partitions entries");
  if (static_cast<int>(partition_probs.size()) != n_partitions)
    throw InvalidConfig("partition_probs must have n_partitions entries");
  double total = 0.0;
  for (double p : partition_probs) {
    if (p < 0.0) throw InvalidConfig("partition_probs entries must be non-negative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) throw InvalidConfig("partition_probs must sum to 1");
  if (static_cast<int>(membership_probs.size()) != n_partitions)
    throw InvalidConfig("membership_probs must have n_partitions entries");
  if (static_cast<int>(block_matrices.size()) != n_partitions)
    throw InvalidConfig("block_matrices must have n_partitions entries");
  for (int m = 0; m < n_partitions; ++m) {
    int k = communities_per_partition[m];
    if (k < 1) throw InvalidConfig("communities_per_partition entries must be >= 1");
    if (static_cast<int>(membership_probs[m].size()) != k)
      throw InvalidConfig("membership_probs[" + std::to_string(m) + "] must have K_m entries");
    double mp = 0.0;
    for (double p : membership_probs[m]) {
      if (p < 0.0) throw InvalidConfig("membership_probs entries must be non-negative");
      mp += p;
    }
    if (std::abs(mp - 1.0) > 1e-12)
      throw InvalidConfig("membership_probs[" + std::to_string(m) + "] must sum to 1");
    const Matrix& pm = block_matrices[m];
    if (pm.rows() != k || pm.cols() != k)
      throw InvalidConfig("block_matrices[" + std::to_string(m) + "] must be K_m x K_m");
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (pm(i, j) < 0.0 || pm(i, j) > 1.0)
          throw InvalidConfig("block_matrices entries must lie in [0,1]");
        if (pm(i, j) != pm(j, i))
          throw InvalidConfig("block_matrices[" + std::to_string(m) + "] must be symmetric");
      }
  }
}

MLSBMResult generate_mlsbm(const MLSBMConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.rng_seed);
  const int n = cfg.n_nodes;

  MLSBMResult out;
  out.memberships.resize(cfg.n_partitions);
  for (int m = 0; m < cfg.n_partitions; ++m) {
    out.memberships[m].resize(n);
    for (int i = 0; i < n; ++i)
      out.memberships[m][i] = static_cast<int>(rng.weighted_index(cfg.membership_probs[m]));
  }

  out.layer_partitions.resize(cfg.n_layers);
  out.graph.n_nodes = n;
  out.graph.layers.reserve(cfg.n_layers);
  for (int l = 0; l < cfg.n_layers; ++l) {
    int psi = static_cast<int>(rng.weighted_index(cfg.partition_probs));
    out.layer_partitions[l] = psi;
    const Matrix& pm = cfg.block_matrices[psi];
    const std::vector<int>& z = out.memberships[psi];
    Matrix a = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.bernoulli(pm(z[i], z[j]))) {
          a(i, j) = 1.0;
          a(j, i) = 1.0;
        }
    out.graph.layers.push_back(std::move(a));
  }
  out.graph.labels = out.memberships[0];
  return out;
}

MLSBMConfig planted_config(int n_nodes, int n_layers, int k, double mean_degree,
                           double within_between_ratio, std::uint64_t seed) {
  // E[deg] = (n-1) * sum_c pi_c^2 * p_in + (n-1) * (1 - sum pi_c^2) * p_out
  // with balanced communities and p_in = ratio * p_out.
  double same = 1.0 / k;
  double p_out = mean_degree / ((n_nodes - 1) * (same * within_between_ratio + (1.0 - same)));
  double p_in = within_between_ratio * p_out;

  MLSBMConfig cfg;
  cfg.n_nodes = n_nodes;
  cfg.n_layers = n_layers;
  cfg.n_partitions = 1;
  cfg.communities_per_partition = {k};
  cfg.partition_probs = {1.0};
  cfg.membership_probs = {std::vector<double>(k, 1.0 / k)};
  Matrix pm = Matrix::Constant(k, k, p_out);
  for (int i = 0; i < k; ++i) pm(i, i) = p_in;
  cfg.block_matrices = {pm};
  cfg.rng_seed = seed;
  return cfg;
}

std::vector<std::pair<MultiLayerGraph, std::string>> benchmark_suite(std::uint64_t seed) {
  std::vector<std::pair<MultiLayerGraph, std::string>> suite;
  int idx = 0;
  for (int n : {300, 400, 500}) {
    MLSBMConfig cfg = planted_config(n, 3, 2, 10.0, 6.0, splitmix64(seed + idx));
    suite.emplace_back(generate_mlsbm(cfg).graph, "sim" + std::to_string(n));
    ++idx;
  }
  return suite;
}

}  // namespace mlcd
