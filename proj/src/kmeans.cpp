#include "mlcd/kmeans.hpp"

#include <limits>
#include <set>

#include "mlcd/errors.hpp"
#include "mlcd/rng.hpp"

namespace mlcd {

namespace {

struct RunResult {
  std::vector<int> labels;
  double inertia;
  Matrix centers;
  std::vector<double> history;
};

RunResult lloyd_run(const Matrix& points, int k, std::uint64_t seed) {
  const int n = static_cast<int>(points.rows());
  Rng rng(seed);

  // kmeans++ seeding
  Matrix centers(k, points.cols());
  std::vector<double> min_sq(n, std::numeric_limits<double>::infinity());
  int first = static_cast<int>(rng.index(n));
  centers.row(0) = points.row(first);
  for (int c = 1; c < k; ++c) {
    for (int i = 0; i < n; ++i) {
      double d = (points.row(i) - centers.row(c - 1)).squaredNorm();
      if (d < min_sq[i]) min_sq[i] = d;
    }
    int next = static_cast<int>(rng.weighted_index(min_sq));
    centers.row(c) = points.row(next);
  }

  std::vector<int> labels(n, -1);
  RunResult out;
  const int max_iter = 100;
  for (int iter = 0; iter < max_iter; ++iter) {
    bool changed = false;
    double inertia = 0.0;
    for (int i = 0; i < n; ++i) {
      int best = 0;
      double best_d = (points.row(i) - centers.row(0)).squaredNorm();
      for (int c = 1; c < k; ++c) {
        double d = (points.row(i) - centers.row(c)).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (labels[i] != best) {
        labels[i] = best;
        changed = true;
      }
      inertia += best_d;
    }
    out.history.push_back(inertia);
    if (!changed && iter > 0) break;

    Matrix sums = Matrix::Zero(k, points.cols());
    std::vector<int> counts(k, 0);
    for (int i = 0; i < n; ++i) {
      sums.row(labels[i]) += points.row(i);
      ++counts[labels[i]];
    }
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) {
        centers.row(c) = sums.row(c) / counts[c];
      } else {
        // re-seed an empty cluster with the point farthest from its center
        int far = 0;
        double far_d = -1.0;
        for (int i = 0; i < n; ++i) {
          double d = (points.row(i) - centers.row(labels[i])).squaredNorm();
          if (d > far_d) {
            far_d = d;
            far = i;
          }
        }
        centers.row(c) = points.row(far);
      }
    }
  }

  out.labels = std::move(labels);
  out.inertia = out.history.back();
  out.centers = std::move(centers);
  return out;
}

}  // namespace

KMeansResult kmeans(const Matrix& points, int k, std::uint64_t seed, int restarts) {
  const int n = static_cast<int>(points.rows());
  if (k < 1 || k > n) throw DegenerateInput("k must satisfy 1 <= k <= n_points");

  std::set<std::vector<double>> distinct;
  for (int i = 0; i < n && static_cast<int>(distinct.size()) < k; ++i) {
    std::vector<double> row(points.cols());
    for (int j = 0; j < points.cols(); ++j) row[j] = points(i, j);
    distinct.insert(std::move(row));
  }
  if (static_cast<int>(distinct.size()) < k)
    throw DegenerateInput("fewer than k distinct points");

  RunResult best;
  best.inertia = std::numeric_limits<double>::infinity();
  if (restarts < 1) restarts = 1;
  for (int r = 0; r < restarts; ++r) {
    RunResult run = lloyd_run(points, k, splitmix64(seed + 0x9E3779B97F4A7C15ull * r));
    if (run.inertia < best.inertia) best = std::move(run);
  }

  // densify cluster ids by first appearance
  std::vector<int> remap(k, -1);
  int next_id = 0;
  KMeansResult out;
  out.labels.resize(n);
  for (int i = 0; i < n; ++i) {
    int c = best.labels[i];
    if (remap[c] < 0) remap[c] = next_id++;
    out.labels[i] = remap[c];
  }
  out.k = next_id;
  out.inertia = best.inertia;
  out.centers.resize(next_id, points.cols());
  for (int c = 0; c < k; ++c)
    if (remap[c] >= 0) out.centers.row(remap[c]) = best.centers.row(c);
  out.inertia_history = std::move(best.history);
  return out;
}

}  // namespace mlcd
