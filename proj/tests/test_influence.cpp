#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "mlcd/errors.hpp"
#include "mlcd/influence.hpp"
#include "test_helpers.hpp"

using namespace mlcd;
using namespace mlcd::testing;

namespace {

MultiLayerGraph one_layer(const Matrix& a) {
  MultiLayerGraph g;
  g.n_nodes = static_cast<int>(a.rows());
  g.layers.push_back(a);
  return g;
}

Matrix cycle_graph(int n) {
  Matrix a = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, (i + 1) % n) = 1.0;
    a((i + 1) % n, i) = 1.0;
  }
  return a;
}

Matrix star_graph(int n) {
  Matrix a = Matrix::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    a(0, i) = 1.0;
    a(i, 0) = 1.0;
  }
  return a;
}

// direct re-implementation of the damped iteration, plain loops
Vector oracle_influence(const MultiLayerGraph& g, double damping, double eps, int max_iter) {
  const int n = g.n_nodes;
  std::vector<std::vector<double>> uni(n, std::vector<double>(n, 0.0));
  for (const Matrix& a : g.layers) {
    for (int i = 0; i < n; ++i) {
      double deg = 0.0;
      for (int j = 0; j < n; ++j) deg += a(i, j);
      for (int j = 0; j < n; ++j) {
        double v = (i == j) ? deg : a(i, j);
        uni[i][j] = std::max(uni[i][j], v);
      }
    }
  }
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += uni[i][j];
    if (row > 0.0)
      for (int j = 0; j < n; ++j) m[i][j] = uni[i][j] / row;
  }
  std::vector<double> ec(n, 0.0);
  double total = 0.0;
  for (const Matrix& a : g.layers)
    for (int i = 0; i < n; ++i) {
      double deg = 0.0;
      for (int j = 0; j < n; ++j) deg += a(i, j);
      ec[i] += deg / (n - 1);
    }
  for (double v : ec) total += v;
  for (double& v : ec) v /= total;

  for (int it = 0; it < max_iter; ++it) {
    std::vector<double> next(n, 0.0);
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += m[i][j] * ec[j];
      next[i] = damping * acc + (1.0 - damping) * ec[i];
    }
    double delta = 0.0;
    for (int i = 0; i < n; ++i) delta = std::max(delta, std::abs(next[i] - ec[i]));
    ec = next;
    if (delta < eps) break;
  }
  Vector out(n);
  for (int i = 0; i < n; ++i) out(i) = ec[i];
  return out;
}

}  // namespace

TEST_CASE("regular graph stays at the uniform fixed point") {
  auto g = one_layer(cycle_graph(8));
  auto scores = eigen_influence(g);
  CHECK(scores.converged);
  CHECK(scores.iterations_used == 1);
  for (int i = 0; i < 8; ++i) CHECK(scores.scores(i) == doctest::Approx(1.0 / 8).epsilon(1e-12));
}

TEST_CASE("star center outranks every leaf") {
  auto g = one_layer(star_graph(5));
  auto scores = eigen_influence(g);
  CHECK(scores.converged);
  for (int leaf = 1; leaf < 5; ++leaf) CHECK(scores.scores(0) > scores.scores(leaf));

  Vector oracle = oracle_influence(g, 0.85, 1e-8, 1000);
  CHECK((scores.scores - oracle).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("influence matches the loop oracle on random multilayer graphs") {
  for (int seed = 0; seed < 5; ++seed) {
    auto g = random_graph(25, 2, 0.15, 3200 + seed);
    auto scores = eigen_influence(g);
    Vector oracle = oracle_influence(g, 0.85, 1e-8, 1000);
    CHECK((scores.scores - oracle).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(scores.scores.minCoeff() >= 0.0);
  }
}

TEST_CASE("duplicated layers rank like a single layer") {
  auto base = random_graph(20, 1, 0.2, 5);
  MultiLayerGraph doubled = base;
  doubled.layers.push_back(base.layers[0]);

  auto s1 = eigen_influence(base);
  auto s2 = eigen_influence(doubled);
  // union is idempotent; only the init scale differs, so rankings agree
  std::vector<int> r1(20);
  std::iota(r1.begin(), r1.end(), 0);
  std::vector<int> r2(r1);
  std::sort(r1.begin(), r1.end(), [&](int a, int b) { return s1.scores(a) > s1.scores(b); });
  std::sort(r2.begin(), r2.end(), [&](int a, int b) { return s2.scores(a) > s2.scores(b); });
  CHECK(r1 == r2);
}

TEST_CASE("scores permute with node relabeling") {
  auto g = random_graph(15, 2, 0.25, 6);
  auto base = eigen_influence(g);

  Rng rng(7);
  std::vector<int> perm(15);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = 14; i > 0; --i) std::swap(perm[i], perm[static_cast<int>(rng.index(i + 1))]);
  MultiLayerGraph pg;
  pg.n_nodes = 15;
  for (const Matrix& a : g.layers) {
    Matrix b(15, 15);
    for (int i = 0; i < 15; ++i)
      for (int j = 0; j < 15; ++j) b(perm[i], perm[j]) = a(i, j);
    pg.layers.push_back(std::move(b));
  }
  auto mapped = eigen_influence(pg);
  for (int i = 0; i < 15; ++i)
    CHECK(mapped.scores(perm[i]) == doctest::Approx(base.scores(i)).epsilon(1e-12));
}

TEST_CASE("influence rank correlates positively with union neighbor counts") {
  int positive = 0;
  for (int seed = 0; seed < 10; ++seed) {
    auto g = random_graph(40, 2, 0.1, 7000 + seed);
    auto scores = eigen_influence(g);
    auto counts = max_neighbor_counts(g);

    // Spearman rank correlation
    auto ranks = [](const std::vector<double>& v) {
      std::vector<int> idx(v.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return v[a] < v[b]; });
      std::vector<double> r(v.size());
      for (std::size_t i = 0; i < idx.size(); ++i) r[idx[i]] = static_cast<double>(i);
      return r;
    };
    std::vector<double> s(40), c(40);
    for (int i = 0; i < 40; ++i) {
      s[i] = scores.scores(i);
      c[i] = static_cast<double>(counts[i]);
    }
    auto rs = ranks(s), rc = ranks(c);
    double ms = 0, mc = 0;
    for (int i = 0; i < 40; ++i) {
      ms += rs[i];
      mc += rc[i];
    }
    ms /= 40;
    mc /= 40;
    double cov = 0, vs = 0, vc = 0;
    for (int i = 0; i < 40; ++i) {
      cov += (rs[i] - ms) * (rc[i] - mc);
      vs += (rs[i] - ms) * (rs[i] - ms);
      vc += (rc[i] - mc) * (rc[i] - mc);
    }
    if (cov / std::sqrt(vs * vc) > 0.0) ++positive;
  }
  CHECK(positive == 10);
}

TEST_CASE("isolated nodes are flagged and scored zero influence flow") {
  Matrix a = Matrix::Zero(4, 4);
  a(0, 1) = a(1, 0) = 1.0;  // nodes 2 and 3 isolated
  auto g = one_layer(a);
  auto scores = eigen_influence(g);
  CHECK(scores.isolated_nodes == 2);
  CHECK(scores.converged);
}

TEST_CASE("edgeless graphs are rejected") {
  MultiLayerGraph g;
  g.n_nodes = 3;
  g.layers.push_back(Matrix::Zero(3, 3));
  CHECK_THROWS_AS(eigen_influence(g), IsolatedAllNodes);
}

TEST_CASE("top influencer selection arithmetic") {
  InfluenceScores s;
  s.scores = Vector::LinSpaced(775, 775.0, 1.0);  // node 0 highest
  CHECK(top_influencers(s, 0.0, 775).empty());
  CHECK(top_influencers(s, 0.2, 775).size() == 155);
  CHECK(top_influencers(s, 0.02, 775).size() == 16);

  auto all = top_influencers(s, 1.0, 775);
  CHECK(all.size() == 775);
  CHECK(all.front() == 0);
  CHECK(all.back() == 774);
}

TEST_CASE("top influencer ties break toward the lower id") {
  InfluenceScores s;
  s.scores = Vector::Ones(6);
  auto top = top_influencers(s, 0.5, 6);
  CHECK(top == std::vector<int>{0, 1, 2});
}

TEST_CASE("max neighbor counts") {
  // single layer: counts equal degrees
  auto g = random_graph(12, 1, 0.3, 8);
  auto counts = max_neighbor_counts(g);
  for (int i = 0; i < 12; ++i) CHECK(counts[i] == static_cast<int>(layer_degrees(g.layers[0])(i)));

  // disjoint neighborhoods across layers add up
  Matrix a = Matrix::Zero(5, 5), b = Matrix::Zero(5, 5);
  a(0, 1) = a(1, 0) = 1.0;
  b(0, 2) = b(2, 0) = 1.0;
  MultiLayerGraph two;
  two.n_nodes = 5;
  two.layers = {a, b};
  CHECK(max_neighbor_counts(two)[0] == 2);

  // random two-layer instance vs a set-union oracle
  auto g2 = random_graph(18, 2, 0.25, 9);
  auto got = max_neighbor_counts(g2);
  for (int i = 0; i < 18; ++i) {
    std::set<int> uni;
    for (const Matrix& layer : g2.layers)
      for (int j = 0; j < 18; ++j)
        if (layer(i, j) != 0.0) uni.insert(j);
    CHECK(got[i] == static_cast<int>(uni.size()));
  }
}
