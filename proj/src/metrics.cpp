#include "mlcd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "mlcd/errors.hpp"

namespace mlcd {

CommunityAssignment make_assignment(const std::vector<int>& raw_labels) {
  CommunityAssignment out;
  out.labels.resize(raw_labels.size());
  std::map<int, int> remap;
  for (std::size_t i = 0; i < raw_labels.size(); ++i) {
    auto [it, inserted] = remap.emplace(raw_labels[i], static_cast<int>(remap.size()));
    out.labels[i] = it->second;
  }
  out.k = static_cast<int>(remap.size());
  return out;
}

double nmi(const CommunityAssignment& a, const CommunityAssignment& b) {
  if (a.labels.size() != b.labels.size())
    throw LengthMismatch("partitions have different lengths");
  const double n = static_cast<double>(a.labels.size());

  Matrix conf = Matrix::Zero(a.k, b.k);
  for (std::size_t i = 0; i < a.labels.size(); ++i) conf(a.labels[i], b.labels[i]) += 1.0;
  Vector row = conf.rowwise().sum();
  Vector col = conf.colwise().sum();

  double ha = 0.0, hb = 0.0, mi = 0.0;
  for (int u = 0; u < a.k; ++u)
    if (row(u) > 0.0) ha -= row(u) / n * std::log(row(u) / n);
  for (int v = 0; v < b.k; ++v)
    if (col(v) > 0.0) hb -= col(v) / n * std::log(col(v) / n);
  for (int u = 0; u < a.k; ++u)
    for (int v = 0; v < b.k; ++v)
      if (conf(u, v) > 0.0)
        mi += conf(u, v) / n * std::log(n * conf(u, v) / (row(u) * col(v)));

  if (ha == 0.0 && hb == 0.0) return 1.0;  // two trivial partitions are identical
  if (ha == 0.0 || hb == 0.0) return 0.0;
  double value = 2.0 * mi / (ha + hb);
  return std::clamp(value, 0.0, 1.0);
}

double q_coupled(const MultiLayerGraph& g, const CommunityAssignment& assignment,
                 const std::vector<double>& gamma_s, double omega) {
  if (assignment.n_nodes() != g.n_nodes)
    throw LengthMismatch("assignment length does not match node count");
  if (static_cast<int>(gamma_s.size()) != g.n_layers())
    throw LengthMismatch("gamma_s must have one entry per layer");

  const int n = g.n_nodes;
  const int L = g.n_layers();
  const auto& z = assignment.labels;

  double intra = 0.0;
  double edge_weight = 0.0;
  for (int s = 0; s < L; ++s) {
    const Matrix& a = g.layers[s];
    Vector k = layer_degrees(a);
    double m = layer_edge_count(a);
    edge_weight += 2.0 * m;
    if (m <= 0.0) continue;  // a null layer contributes nothing
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (z[i] == z[j]) intra += a(i, j) - gamma_s[s] * k(i) * k(j) / (2.0 * m);
  }
  // every same-node inter-layer (s,r) pair carries weight omega
  double coupling = omega * n * L * (L - 1);
  double total = edge_weight + coupling;
  if (total <= 0.0) throw EmptyLayer("graph has no edges and no couplings");
  return (intra + coupling) / total;
}

double q_nm(const MultiLayerGraph& g, const CommunityAssignment& assignment) {
  if (assignment.n_nodes() != g.n_nodes)
    throw LengthMismatch("assignment length does not match node count");
  const int n = g.n_nodes;
  const auto& z = assignment.labels;

  double q = 0.0;
  for (int s = 0; s < g.n_layers(); ++s) {
    const Matrix& a = g.layers[s];
    Vector k = layer_degrees(a);
    double m = layer_edge_count(a);
    if (m <= 0.0) throw EmptyLayer("layer " + std::to_string(s) + " has no edges");
    double layer_q = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (z[i] == z[j]) layer_q += a(i, j) - k(i) * k(j) / (2.0 * m);
    q += layer_q / (2.0 * m);
  }
  return q / g.n_layers();
}

double q_sd(const MultiLayerGraph& g, const CommunityAssignment& assignment) {
  if (assignment.n_nodes() != g.n_nodes)
    throw LengthMismatch("assignment length does not match node count");
  const int n = g.n_nodes;
  const auto& z = assignment.labels;

  double total_edges = 0.0;
  Vector shared = Vector::Zero(n);
  for (int s = 0; s < g.n_layers(); ++s) {
    double m = layer_edge_count(g.layers[s]);
    if (m <= 0.0) throw EmptyLayer("layer " + std::to_string(s) + " has no edges");
    total_edges += m;
    shared += layer_degrees(g.layers[s]);
  }

  double q = 0.0;
  for (int s = 0; s < g.n_layers(); ++s) {
    const Matrix& a = g.layers[s];
    double m = layer_edge_count(a);
    double layer_q = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (z[i] == z[j])
          layer_q += a(i, j) - m * shared(i) * shared(j) / (2.0 * total_edges * total_edges);
    q += layer_q / (2.0 * m);
  }
  return q / g.n_layers();
}

namespace {

void check_features(const Matrix& features, const CommunityAssignment& assignment) {
  if (static_cast<int>(features.rows()) != assignment.n_nodes())
    throw LengthMismatch("feature rows do not match assignment length");
  if ((features.array() < 0.0).any())
    throw NegativeFeature("similarity indices require non-negative features");
}

std::vector<std::vector<int>> community_members(const CommunityAssignment& assignment) {
  std::vector<std::vector<int>> members(assignment.k);
  for (int i = 0; i < assignment.n_nodes(); ++i) members[assignment.labels[i]].push_back(i);
  return members;
}

}  // namespace

double kl_similarity_index(const Matrix& features, const CommunityAssignment& assignment) {
  check_features(features, assignment);
  auto members = community_members(assignment);
  const int F = static_cast<int>(features.cols());

  double network = 0.0;
  for (const auto& c : members) {
    double score = 0.0;
    for (int i : c)
      for (int j : c)
        for (int f = 0; f < F; ++f)
          score += features(i, f) * std::log((features(i, f) + 1.0) / (features(j, f) + 1.0));
    network += score / (static_cast<double>(c.size()) * c.size());
  }
  return network / assignment.k;
}

double js_similarity_index(const Matrix& features, const CommunityAssignment& assignment) {
  check_features(features, assignment);
  auto members = community_members(assignment);
  const int F = static_cast<int>(features.cols());

  double network = 0.0;
  for (const auto& c : members) {
    double score = 0.0;
    for (int i : c)
      for (int j : c)
        for (int f = 0; f < F; ++f) {
          double hi = features(i, f), hj = features(j, f);
          double mid = hi + hj + 2.0;
          score += hi * std::log(2.0 * (hi + 1.0) / mid) + hj * std::log(2.0 * (hj + 1.0) / mid);
        }
    network += score / (static_cast<double>(c.size()) * c.size());
  }
  return network / (2.0 * assignment.k);
}

Matrix attitude_shares(const CommunityAssignment& assignment, const std::vector<Attitude>& attitudes) {
  if (attitudes.size() != assignment.labels.size())
    throw LengthMismatch("attitudes length does not match assignment length");
  Matrix shares = Matrix::Zero(assignment.k, 3);
  std::vector<int> counts(assignment.k, 0);
  for (std::size_t i = 0; i < attitudes.size(); ++i) {
    shares(assignment.labels[i], static_cast<int>(attitudes[i])) += 1.0;
    ++counts[assignment.labels[i]];
  }
  for (int c = 0; c < assignment.k; ++c)
    if (counts[c] > 0) shares.row(c) /= counts[c];
  return shares;
}

}  // namespace mlcd
