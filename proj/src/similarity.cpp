#include "mlcd/similarity.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mlcd/errors.hpp"
#include "mlcd/rng.hpp"

namespace mlcd {

Matrix cosine_matrix(const Matrix& features) {
  const int n = static_cast<int>(features.rows());
  Matrix normed = features;
  for (int i = 0; i < n; ++i) {
    double norm = normed.row(i).norm();
    if (norm == 0.0)
      throw ZeroFeatureRow("feature row " + std::to_string(i) + " is all-zero");
    normed.row(i) /= norm;
  }
  Matrix cos = normed * normed.transpose();
  for (int i = 0; i < n; ++i) cos(i, i) = 1.0;
  return cos;
}

Matrix similarity_layer(const Matrix& features, std::uint64_t rng_seed) {
  const int n = static_cast<int>(features.rows());
  Matrix cos = cosine_matrix(features);
  Rng rng(rng_seed);
  Matrix adj = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double p = std::clamp(cos(i, j), 0.0, 1.0);
      if (rng.bernoulli(p)) {
        adj(i, j) = 1.0;
        adj(j, i) = 1.0;
      }
    }
  }
  return adj;
}

Matrix knn_layer(const Matrix& features, int k) {
  const int n = static_cast<int>(features.rows());
  if (k < 1 || k >= n)
    throw BadK("k must satisfy 1 <= k < n_nodes, got k=" + std::to_string(k));
  Matrix cos = cosine_matrix(features);

  Matrix adj = Matrix::Zero(n, n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) {
    order.resize(n - 1);
    int pos = 0;
    for (int j = 0; j < n; ++j)
      if (j != i) order[pos++] = j;
    // higher cosine first, lower index wins ties
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (cos(i, a) != cos(i, b)) return cos(i, a) > cos(i, b);
      return a < b;
    });
    for (int r = 0; r < k; ++r) {
      adj(i, order[r]) = 1.0;
      adj(order[r], i) = 1.0;
    }
  }
  return adj;
}

}  // namespace mlcd
