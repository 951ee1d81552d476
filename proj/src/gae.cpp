#include "mlcd/gae.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mlcd/errors.hpp"
#include "mlcd/rng.hpp"
#include "mlcd/kmeans.hpp"

namespace mlcd {

std::vector<double> TrainConfig::effective_layer_weights(int n_layers) const {
  if (layer_weights.empty())
    return std::vector<double>(n_layers, 1.0 / n_layers);
  return layer_weights;
}

void TrainConfig::validate(int n_layers) const {
  if (hidden_dim < 1 || embed_dim < 1) throw InvalidConfig("embedding dimensions must be >= 1");
  if (epochs < 1) throw InvalidConfig("epochs must be >= 1");
  if (!(learning_rate > 0.0)) throw InvalidConfig("learning_rate must be positive");
  if (!layer_weights.empty()) {
    if (static_cast<int>(layer_weights.size()) != n_layers)
      throw InvalidConfig("layer_weights must have one entry per layer");
    double total = 0.0;
    for (double a : layer_weights) {
      if (!(a > 0.0)) throw InvalidConfig("layer_weights entries must be positive");
      total += a;
    }
    if (std::abs(total - 1.0) > 1e-12) throw InvalidConfig("layer_weights must sum to 1");
  }
}

GaeWeights init_weights(int n_nodes, int n_layers, const TrainConfig& cfg) {
  Rng rng(cfg.rng_seed);
  GaeWeights w;
  w.init_seed = cfg.rng_seed;
  w.w1.reserve(n_layers);
  w.w2.reserve(n_layers);
  for (int l = 0; l < n_layers; ++l) {
    Matrix m(n_nodes, cfg.hidden_dim);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) = rng.uniform(-0.1, 0.1);
    w.w1.push_back(std::move(m));
  }
  for (int l = 0; l < n_layers; ++l) {
    Matrix m(n_layers * cfg.hidden_dim, cfg.embed_dim);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) = rng.uniform(-0.1, 0.1);
    w.w2.push_back(std::move(m));
  }
  return w;
}

Matrix gcn_layer(const Matrix& a, const Matrix& x, const Matrix& w) {
  if (a.cols() != x.rows() || x.cols() != w.rows())
    throw ShapeMismatch("gcn_layer shapes not conformable");
  return ((a * x) * w).array().tanh().matrix();
}

namespace {

// All intermediates of one forward pass, kept for backprop.
struct ForwardPass {
  std::vector<Matrix> s;       // A^m B^(m), constant per instance
  std::vector<Matrix> p;       // S_m W1_m
  std::vector<Matrix> h0;      // tanh(P_m)
  Matrix hcat;                 // [h0_1 ... h0_L]
  std::vector<Matrix> q;       // A^m hcat
  std::vector<Matrix> r;       // Q_m W2_m
  std::vector<Matrix> phi;     // tanh(R_m)
  Matrix fused;                // [phi_1 ... phi_L]
};

ForwardPass forward(const std::vector<Matrix>& adj, const ModularityTensor& bt,
                    const GaeWeights& w) {
  const int L = static_cast<int>(adj.size());
  const int n = static_cast<int>(adj[0].rows());
  const int d1 = static_cast<int>(w.w1[0].cols());
  const int d2 = static_cast<int>(w.w2[0].cols());

  ForwardPass f;
  f.s.resize(L);
  f.p.resize(L);
  f.h0.resize(L);
  f.q.resize(L);
  f.r.resize(L);
  f.phi.resize(L);
  f.hcat.resize(n, L * d1);
  for (int m = 0; m < L; ++m) {
    f.s[m] = adj[m] * bt.mats[m];
    if (f.s[m].cols() != w.w1[m].rows())
      throw ShapeMismatch("stage-1 weight shape does not match layer " + std::to_string(m));
    f.p[m] = f.s[m] * w.w1[m];
    f.h0[m] = f.p[m].array().tanh().matrix();
    f.hcat.middleCols(m * d1, d1) = f.h0[m];
  }
  f.fused.resize(n, L * d2);
  for (int m = 0; m < L; ++m) {
    f.q[m] = adj[m] * f.hcat;
    if (f.q[m].cols() != w.w2[m].rows())
      throw ShapeMismatch("stage-2 weight shape does not match layer " + std::to_string(m));
    f.r[m] = f.q[m] * w.w2[m];
    f.phi[m] = f.r[m].array().tanh().matrix();
    f.fused.middleCols(m * d2, d2) = f.phi[m];
  }
  return f;
}

struct Gradients {
  std::vector<Matrix> w1;
  std::vector<Matrix> w2;
};

// Backprop from dL/dPhi_m through stage 2, the concatenation and stage 1.
Gradients backward(const std::vector<Matrix>& adj, const GaeWeights& w, const ForwardPass& f,
                   const std::vector<Matrix>& grad_phi) {
  const int L = static_cast<int>(adj.size());
  const int d1 = static_cast<int>(w.w1[0].cols());

  Gradients g;
  g.w1.resize(L);
  g.w2.resize(L);
  Matrix grad_hcat = Matrix::Zero(f.hcat.rows(), f.hcat.cols());
  for (int m = 0; m < L; ++m) {
    Matrix grad_r = grad_phi[m].cwiseProduct(
        (1.0 - f.phi[m].array().square()).matrix());
    g.w2[m] = f.q[m].transpose() * grad_r;
    grad_hcat += adj[m].transpose() * (grad_r * w.w2[m].transpose());
  }
  for (int m = 0; m < L; ++m) {
    Matrix grad_h0 = grad_hcat.middleCols(m * d1, d1);
    Matrix grad_p = grad_h0.cwiseProduct((1.0 - f.h0[m].array().square()).matrix());
    g.w1[m] = f.s[m].transpose() * grad_p;
  }
  return g;
}

// Loss and dL/dPhi_m for the chosen variant/decoder.
double loss_and_grad_phi(const ModularityTensor& bt, const ForwardPass& f, Variant variant,
                         Decoder dec, std::vector<Matrix>* grad_phi) {
  const int L = bt.n_layers();
  const int d2 = static_cast<int>(f.phi[0].cols());
  double loss = 0.0;

  if (variant == Variant::IGE) {
    for (int m = 0; m < L; ++m) {
      Matrix c = f.phi[m] * f.phi[m].transpose();
      Matrix t = dec == Decoder::Tanh ? c.array().tanh().matrix() : c;
      Matrix e = t - bt.mats[m];
      loss += e.squaredNorm();
      if (grad_phi) {
        Matrix gc = 2.0 * e;
        if (dec == Decoder::Tanh) gc = gc.cwiseProduct((1.0 - t.array().square()).matrix());
        (*grad_phi)[m] = 2.0 * gc * f.phi[m];  // gc is symmetric
      }
    }
  } else {
    Matrix c = f.fused * f.fused.transpose();
    Matrix t = dec == Decoder::Tanh ? c.array().tanh().matrix() : c;
    Matrix gt = Matrix::Zero(c.rows(), c.cols());
    for (int m = 0; m < L; ++m) {
      Matrix e = t - bt.mats[m];
      loss += e.squaredNorm();
      if (grad_phi) gt += 2.0 * e;
    }
    if (grad_phi) {
      Matrix gc = dec == Decoder::Tanh ? gt.cwiseProduct((1.0 - t.array().square()).matrix())
                                       : std::move(gt);
      Matrix grad_fused = 2.0 * gc * f.fused;
      for (int m = 0; m < L; ++m) (*grad_phi)[m] = grad_fused.middleCols(m * d2, d2);
    }
  }
  return loss;
}

}  // namespace

EmbeddingSet encode(const MultiLayerGraph& g, const ModularityTensor& bt, const GaeWeights& w,
                    Variant /*variant*/) {
  ForwardPass f = forward(g.layers, bt, w);
  EmbeddingSet out;
  out.per_layer = std::move(f.phi);
  out.fused = std::move(f.fused);
  out.weights = w;
  return out;
}

double loss_ige(const ModularityTensor& bt, const std::vector<Matrix>& per_layer, Decoder dec) {
  if (static_cast<int>(per_layer.size()) != bt.n_layers())
    throw ShapeMismatch("per-layer embedding count does not match tensor");
  double loss = 0.0;
  for (int m = 0; m < bt.n_layers(); ++m) {
    if (per_layer[m].rows() != bt.mats[m].rows())
      throw ShapeMismatch("embedding rows do not match layer " + std::to_string(m));
    Matrix c = per_layer[m] * per_layer[m].transpose();
    Matrix t = dec == Decoder::Tanh ? c.array().tanh().matrix() : c;
    loss += (t - bt.mats[m]).squaredNorm();
  }
  return loss;
}

double loss_mge(const ModularityTensor& bt, const Matrix& fused, Decoder dec) {
  if (fused.rows() != bt.n_nodes())
    throw ShapeMismatch("fused embedding rows do not match tensor");
  Matrix c = fused * fused.transpose();
  Matrix t = dec == Decoder::Tanh ? c.array().tanh().matrix() : c;
  double loss = 0.0;
  for (int m = 0; m < bt.n_layers(); ++m) loss += (bt.mats[m] - t).squaredNorm();
  return loss;
}

EmbeddingSet train(const MultiLayerGraph& g, const ModularityTensor& bt, const TrainConfig& cfg) {
  cfg.validate(g.n_layers());
  const int L = g.n_layers();
  GaeWeights w = init_weights(g.n_nodes, L, cfg);
  const Decoder dec = cfg.effective_decoder();

  EmbeddingSet out;
  out.loss_history.reserve(cfg.epochs);
  std::vector<Matrix> grad_phi(L);
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    ForwardPass f = forward(g.layers, bt, w);
    double loss = loss_and_grad_phi(bt, f, cfg.variant, dec, &grad_phi);
    if (!std::isfinite(loss))
      throw NonFiniteLoss("loss diverged at epoch " + std::to_string(epoch) +
                          "; lower the learning rate");
    out.loss_history.push_back(loss);
    Gradients grads = backward(g.layers, w, f, grad_phi);
    for (int m = 0; m < L; ++m) {
      w.w1[m] -= cfg.learning_rate * grads.w1[m];
      w.w2[m] -= cfg.learning_rate * grads.w2[m];
    }
  }

  ForwardPass f = forward(g.layers, bt, w);
  out.per_layer = std::move(f.phi);
  out.fused = std::move(f.fused);
  out.weights = std::move(w);
  return out;
}

double gradient_check_instance(const std::vector<Matrix>& adjacency, const ModularityTensor& bt,
                               const TrainConfig& cfg) {
  const int L = static_cast<int>(adjacency.size());
  const int n = static_cast<int>(adjacency[0].rows());
  GaeWeights w = init_weights(n, L, cfg);
  const Decoder dec = cfg.effective_decoder();

  auto eval_loss = [&](const GaeWeights& weights) {
    ForwardPass f = forward(adjacency, bt, weights);
    return loss_and_grad_phi(bt, f, cfg.variant, dec, nullptr);
  };

  ForwardPass f = forward(adjacency, bt, w);
  std::vector<Matrix> grad_phi(L);
  loss_and_grad_phi(bt, f, cfg.variant, dec, &grad_phi);
  Gradients analytic = backward(adjacency, w, f, grad_phi);

  const double h = 1e-5;
  double max_rel = 0.0;
  auto probe = [&](Matrix& entry_holder, int i, int j, double analytic_g) {
    double saved = entry_holder(i, j);
    entry_holder(i, j) = saved + h;
    double up = eval_loss(w);
    entry_holder(i, j) = saved - h;
    double down = eval_loss(w);
    entry_holder(i, j) = saved;
    double numeric = (up - down) / (2.0 * h);
    double rel = std::abs(analytic_g - numeric) /
                 std::max({1.0, std::abs(analytic_g), std::abs(numeric)});
    if (rel > max_rel) max_rel = rel;
  };
  for (int m = 0; m < L; ++m) {
    for (int i = 0; i < w.w1[m].rows(); ++i)
      for (int j = 0; j < w.w1[m].cols(); ++j) probe(w.w1[m], i, j, analytic.w1[m](i, j));
    for (int i = 0; i < w.w2[m].rows(); ++i)
      for (int j = 0; j < w.w2[m].cols(); ++j) probe(w.w2[m], i, j, analytic.w2[m](i, j));
  }
  return max_rel;
}

double gradient_check(const TrainConfig& cfg, int n_nodes) {
  // random dense symmetric instance; two layers keep the concat path honest
  Rng rng(splitmix64(cfg.rng_seed + 0x51ed2701));
  const int L = 2;
  MultiLayerGraph g;
  g.n_nodes = n_nodes;
  for (int l = 0; l < L; ++l) {
    Matrix a = Matrix::Zero(n_nodes, n_nodes);
    for (int i = 0; i < n_nodes; ++i)
      for (int j = i + 1; j < n_nodes; ++j)
        if (rng.bernoulli(0.5)) {
          a(i, j) = 1.0;
          a(j, i) = 1.0;
        }
    // keep every layer non-empty
    if (layer_edge_count(a) == 0.0) {
      a(0, 1) = 1.0;
      a(1, 0) = 1.0;
    }
    g.layers.push_back(std::move(a));
  }
  ModularityTensor bt = build_modularity_tensor(g);

  TrainConfig small = cfg;
  small.hidden_dim = std::min(cfg.hidden_dim, 4);
  small.embed_dim = std::min(cfg.embed_dim, 3);
  return gradient_check_instance(g.layers, bt, small);
}

CommunityAssignment detect_communities(const MultiLayerGraph& g, const TrainConfig& cfg, int k) {
  if (k < 2) throw InvalidConfig("community count must be >= 2");
  ModularityTensor bt = build_modularity_tensor(g);
  EmbeddingSet emb = train(g, bt, cfg);
  KMeansResult km = kmeans(emb.fused, k, cfg.rng_seed, 10);
  CommunityAssignment out;
  out.labels = std::move(km.labels);
  out.k = km.k;
  return out;
}

SelectKResult select_k(const MultiLayerGraph& g, const TrainConfig& cfg, int k_min, int k_max) {
  if (k_min < 2 || k_min > k_max) throw InvalidConfig("need 2 <= k_min <= k_max");
  ModularityTensor bt = build_modularity_tensor(g);
  EmbeddingSet emb = train(g, bt, cfg);

  SelectKResult out;
  double best_q = -std::numeric_limits<double>::infinity();
  for (int k = k_min; k <= k_max; ++k) {
    KMeansResult km = kmeans(emb.fused, k, cfg.rng_seed, 10);
    CommunityAssignment assignment;
    assignment.labels = std::move(km.labels);
    assignment.k = km.k;
    double q = q_nm(g, assignment);
    out.curve.emplace_back(k, q);
    if (q > best_q) {  // strict: ties keep the smaller k
      best_q = q;
      out.best_k = k;
    }
  }
  return out;
}

}  // namespace mlcd
