#include "mlcd/influence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mlcd/errors.hpp"

namespace mlcd {

InfluenceScores eigen_influence(const MultiLayerGraph& g, double damping, double eps,
                                int max_iter, bool add_degree_diagonal) {
  const int n = g.n_nodes;

  double total_edges = 0.0;
  for (const Matrix& a : g.layers) total_edges += layer_edge_count(a);
  if (total_edges <= 0.0) throw IsolatedAllNodes("graph has no edges at all");

  // layer union (elementwise max) of D^(l) + A^(l)
  Matrix uni = Matrix::Zero(n, n);
  for (const Matrix& a : g.layers) {
    Matrix tilde = a;
    if (add_degree_diagonal) tilde.diagonal() = layer_degrees(a);
    uni = uni.cwiseMax(tilde);
  }

  InfluenceScores out;
  Matrix transfer = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    double row_sum = uni.row(i).sum();
    if (row_sum > 0.0)
      transfer.row(i) = uni.row(i) / row_sum;
    else
      ++out.isolated_nodes;  // row left zero
  }

  // degree-centrality init, normalized to sum 1 (rankings are unaffected)
  Vector ec = Vector::Zero(n);
  for (const Matrix& a : g.layers) ec += layer_degrees(a) / static_cast<double>(n - 1);
  ec /= ec.sum();

  for (int it = 1; it <= max_iter; ++it) {
    Vector next = damping * (transfer * ec) + (1.0 - damping) * ec;
    double delta = (next - ec).lpNorm<Eigen::Infinity>();
    ec = std::move(next);
    out.iterations_used = it;
    if (delta < eps) {
      out.converged = true;
      break;
    }
  }
  out.scores = std::move(ec);
  return out;
}

std::vector<int> top_influencers(const InfluenceScores& scores, double eta, int n) {
  if (eta < 0.0 || eta > 1.0) throw InvalidConfig("eta must lie in [0,1]");
  int count = static_cast<int>(std::ceil(eta * n - 1e-9));
  if (count < 0) count = 0;
  if (count > n) count = n;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (scores.scores(a) != scores.scores(b)) return scores.scores(a) > scores.scores(b);
    return a < b;
  });
  order.resize(count);
  return order;
}

std::vector<int> max_neighbor_counts(const MultiLayerGraph& g) {
  std::vector<int> counts(g.n_nodes, 0);
  for (int i = 0; i < g.n_nodes; ++i) {
    int c = 0;
    for (int j = 0; j < g.n_nodes; ++j) {
      for (const Matrix& a : g.layers) {
        if (a(i, j) != 0.0) {
          ++c;
          break;
        }
      }
    }
    counts[i] = c;
  }
  return counts;
}

}  // namespace mlcd
