#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mlcd/graph.hpp"
#include "mlcd/metrics.hpp"
#include "mlcd/modularity.hpp"

namespace mlcd {

enum class Variant { IGE, MGE };

// IGE reconstructs each layer from its own embedding product; MGE
// reconstructs every layer from the fused embedding. The decoder
// nonlinearity defaults to linear for IGE and tanh for MGE.
enum class Decoder { Linear, Tanh };

struct TrainConfig {
  int hidden_dim = 32;   // d1, stage-1 width
  int embed_dim = 16;    // d2, stage-2 width
  int epochs = 200;
  double learning_rate = 1e-3;
  std::vector<double> layer_weights;  // alpha_l; empty -> uniform 1/L
  std::uint64_t rng_seed = 0;
  Variant variant = Variant::MGE;
  std::optional<Decoder> decoder;  // unset -> variant default

  Decoder effective_decoder() const {
    if (decoder) return *decoder;
    return variant == Variant::IGE ? Decoder::Linear : Decoder::Tanh;
  }
  std::vector<double> effective_layer_weights(int n_layers) const;
  void validate(int n_layers) const;
};

// Two-stage encoder weights. Stage 1 maps the N-dimensional modularity
// rows to hidden_dim per layer; stage 2 maps the fused (L*hidden_dim)
// features to embed_dim per layer.
struct GaeWeights {
  std::vector<Matrix> w1;  // per layer: N x d1
  std::vector<Matrix> w2;  // per layer: (L*d1) x d2
  std::uint64_t init_seed = 0;
};

GaeWeights init_weights(int n_nodes, int n_layers, const TrainConfig& cfg);

struct EmbeddingSet {
  std::vector<Matrix> per_layer;     // Phi_l, N x d2
  Matrix fused;                      // [Phi_1 ... Phi_L], N x (d2*L)
  std::vector<double> loss_history;  // one entry per epoch
  GaeWeights weights;
};

// One graph-convolution step: tanh(A * X * W).
Matrix gcn_layer(const Matrix& a, const Matrix& x, const Matrix& w);

// Runs the two-stage encoder: per-layer stage-1 outputs are concatenated
// and re-convolved per layer; Phi_l is the stage-2 output of layer l.
EmbeddingSet encode(const MultiLayerGraph& g, const ModularityTensor& bt, const GaeWeights& w,
                    Variant variant);

// sum_l || dec(Phi_l Phi_l^T) - B^(l) ||_F^2
double loss_ige(const ModularityTensor& bt, const std::vector<Matrix>& per_layer,
                Decoder dec = Decoder::Linear);

// sum_l || B^(l) - dec(H H^T) ||_F^2
double loss_mge(const ModularityTensor& bt, const Matrix& fused, Decoder dec = Decoder::Tanh);

// Full-batch gradient descent on the variant's reconstruction loss; the
// gradients run through both GCN stages, the concatenation and the decoder.
// Throws NonFiniteLoss if the loss diverges (try a lower learning rate).
EmbeddingSet train(const MultiLayerGraph& g, const ModularityTensor& bt, const TrainConfig& cfg);

// Analytic gradients vs central finite differences (step 1e-5) on a random
// instance with n_nodes nodes; returns the max relative error over all
// weight entries.
double gradient_check(const TrainConfig& cfg, int n_nodes);

// Same check on an explicit instance; `adjacency` entries need not be valid
// graph layers (any square matrices work).
double gradient_check_instance(const std::vector<Matrix>& adjacency, const ModularityTensor& bt,
                               const TrainConfig& cfg);

// train -> k-means on the concatenated embeddings (10 restarts).
CommunityAssignment detect_communities(const MultiLayerGraph& g, const TrainConfig& cfg, int k);

struct SelectKResult {
  int best_k = 0;
  std::vector<std::pair<int, double>> curve;  // (k, Q_NM)
};

// Scores each k in [k_min, k_max] by Q_NM of the detected partition and
// returns the argmax (ties to the smaller k). The embedding is trained
// once per call; only the clustering depends on k.
SelectKResult select_k(const MultiLayerGraph& g, const TrainConfig& cfg, int k_min, int k_max);

}  // namespace mlcd
