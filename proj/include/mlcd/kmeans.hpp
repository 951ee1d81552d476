#pragma once

#include <cstdint>
#include <vector>

#include "mlcd/graph.hpp"

namespace mlcd {

struct KMeansResult {
  std::vector<int> labels;  // dense 0..k-1
  int k = 0;
  double inertia = 0.0;
  Matrix centers;
  std::vector<double> inertia_history;  // per Lloyd iteration of the winning restart
};

// Lloyd's algorithm with kmeans++ seeding, best inertia over `restarts`
// seeded initializations. Deterministic per seed. Throws DegenerateInput
// when the points contain fewer than k distinct rows.
KMeansResult kmeans(const Matrix& points, int k, std::uint64_t seed, int restarts = 10);

}  // namespace mlcd
