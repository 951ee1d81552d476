#pragma once

#include <cstdint>

#include "mlcd/graph.hpp"

namespace mlcd {

// Pairwise cosine similarity of feature rows; unit diagonal. Throws
// ZeroFeatureRow if a row has zero norm.
Matrix cosine_matrix(const Matrix& features);

// Random similarity layer: edge (i,j) drawn Bernoulli(clamp(cos<z_i,z_j>,0,1))
// per unordered pair. Symmetric, zero diagonal, deterministic per seed.
Matrix similarity_layer(const Matrix& features, std::uint64_t rng_seed);

// Mutual-or kNN layer on cosine similarity: edge (i,j) iff j is among i's k
// nearest neighbors or vice versa. Ties broken by lower node index.
Matrix knn_layer(const Matrix& features, int k);

}  // namespace mlcd
