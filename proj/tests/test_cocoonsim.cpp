#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "mlcd/errors.hpp"
#include "mlcd/influence.hpp"
#include "mlcd/simulate.hpp"
#include "test_helpers.hpp"

using namespace mlcd;
using namespace mlcd::testing;

namespace {

// path graph on n nodes in two identical layers
MultiLayerGraph path_graph2(int n) {
  Matrix a = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = 1.0;
  MultiLayerGraph g;
  g.n_nodes = n;
  g.layers = {a, a};
  return g;
}

InfluenceScores uniform_scores(int n) {
  InfluenceScores s;
  s.scores = Vector::Ones(n) / n;
  s.converged = true;
  return s;
}

InfluenceScores ranked_scores(int n) {
  InfluenceScores s;
  s.scores = Vector::LinSpaced(n, static_cast<double>(n), 1.0);  // node 0 on top
  s.converged = true;
  return s;
}

SimParams table_params() {
  SimParams p;  // library defaults
  return p;
}

}  // namespace

TEST_CASE("init leaves attitudes alone when eta is zero") {
  std::vector<Attitude> att(10, Attitude::Negative);
  SimParams p = table_params();
  p.eta = 0.0;
  p.theta = 0.3;
  Rng rng(1);
  auto state = init_states(att, uniform_scores(10), p, rng);
  CHECK(state.intervened.empty());
  for (auto a : state.attitudes) CHECK(a == Attitude::Negative);
}

TEST_CASE("theta one marks every node insusceptible") {
  std::vector<Attitude> att(7, Attitude::Neutral);
  SimParams p = table_params();
  p.theta = 1.0;
  Rng rng(2);
  auto state = init_states(att, uniform_scores(7), p, rng);
  for (auto s : state.susceptibility) CHECK(s == Susceptibility::Insusceptible);
}

TEST_CASE("intervention on a community replaces ceil(eta * community size) nodes") {
  const int n = 30;
  std::vector<Attitude> att(n, Attitude::Negative);
  std::vector<int> community;
  for (int i = 0; i < 13; ++i) community.push_back(i);

  SimParams p = table_params();
  p.eta = 0.25;
  Rng rng(3);
  auto state = init_states(att, ranked_scores(n), p, rng, community);
  CHECK(state.intervened.size() == 4);  // ceil(0.25 * 13)
  for (int id : state.intervened) {
    CHECK(id < 13);  // only community members replaced
    CHECK(state.attitudes[id] == Attitude::Positive);
  }
}

TEST_CASE("lambda_p closed forms") {
  auto g = path_graph2(3);  // node 1 has neighbors 0 and 2
  SimParams p = table_params();
  p.alpha = 0.3;
  p.gamma1 = 1.5;

  SimulationState state;
  state.attitudes = {Attitude::Positive, Attitude::Neutral, Attitude::Positive};
  state.susceptibility.assign(3, Susceptibility::Susceptible);

  // two positive neighbors, susceptible: 1 - (1 - 0.45)^2
  CHECK(lambda_p(1, state, g, p) == doctest::Approx(0.6975).epsilon(1e-12));

  // insusceptible node: gamma forced to 1
  state.susceptibility[1] = Susceptibility::Insusceptible;
  state.attitudes = {Attitude::Positive, Attitude::Neutral, Attitude::Negative};
  CHECK(lambda_p(1, state, g, p) == doctest::Approx(0.3).epsilon(1e-12));

  // no positive neighbors; two negative ones at gamma = 1
  state.attitudes = {Attitude::Negative, Attitude::Neutral, Attitude::Negative};
  CHECK(lambda_p(1, state, g, p) == 0.0);
  CHECK(lambda_n(1, state, g, p) == doctest::Approx(0.51).epsilon(1e-12));
}

TEST_CASE("lambda_s closed forms") {
  auto g = path_graph2(3);
  SimParams p = table_params();
  p.diff_rate = 0.3;
  p.gamma2 = 1.5;

  SimulationState state;
  state.attitudes = {Attitude::Negative, Attitude::Neutral, Attitude::Negative};
  state.susceptibility = {Susceptibility::Susceptible, Susceptibility::Insusceptible,
                          Susceptibility::Insusceptible};
  // neutral node, one susceptible neighbor: gamma2 * diffRate
  CHECK(lambda_s(1, state, g, p) == doctest::Approx(0.45).epsilon(1e-12));

  // non-neutral node: gamma2 = 1
  state.attitudes[1] = Attitude::Negative;
  CHECK(lambda_s(1, state, g, p) == doctest::Approx(0.3).epsilon(1e-12));

  // no susceptible neighbors
  state.susceptibility[0] = Susceptibility::Insusceptible;
  CHECK(lambda_s(1, state, g, p) == 0.0);

  // saturation: every neighbor susceptible at high diff rate
  const int n = 9;
  MultiLayerGraph full;
  full.n_nodes = n;
  Matrix complete = Matrix::Constant(n, n, 1.0);
  complete.diagonal().setZero();
  full.layers = {complete, complete};
  SimulationState sat;
  sat.attitudes.assign(n, Attitude::Negative);
  sat.susceptibility.assign(n, Susceptibility::Susceptible);
  sat.susceptibility[0] = Susceptibility::Insusceptible;
  SimParams hp = table_params();
  hp.diff_rate = 0.999999;
  hp.gamma2 = 1.0;
  CHECK(lambda_s(0, sat, full, hp) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("all transitions freeze when the driving rates vanish") {
  auto g = path_graph2(6);
  SimParams p = table_params();
  p.alpha = 0.0;      // lambdas vanish
  p.diff_rate = 0.0;  // lambda_s vanishes
  p.s_rate = 0.0;
  p.r2 = 0.3;  // susceptible -> insusceptible still possible

  SimulationState state;
  state.attitudes = {Attitude::Positive, Attitude::Negative, Attitude::Neutral,
                     Attitude::Positive, Attitude::Negative, Attitude::Neutral};
  state.susceptibility.assign(6, Susceptibility::Insusceptible);

  Rng rng(5);
  auto next = step(state, g, p, rng);
  CHECK(next.attitudes == state.attitudes);
  CHECK(next.susceptibility == state.susceptibility);  // nothing can leave insusceptible
}

TEST_CASE("uniform positive attitudes are absorbing on the relation layer") {
  auto g = path_graph2(8);
  SimParams p = table_params();
  SimulationState state;
  state.attitudes.assign(8, Attitude::Positive);
  state.susceptibility.assign(8, Susceptibility::Susceptible);
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    state = step(state, g, p, rng);
    for (auto a : state.attitudes) CHECK(a == Attitude::Positive);
  }
}

TEST_CASE("neutral transition frequencies match the closed form") {
  // node 1 neutral with one positive and one negative neighbor
  auto g = path_graph2(3);
  SimParams p = table_params();
  p.alpha = 0.3;
  p.gamma1 = 1.0;
  p.r1 = 0.3;

  SimulationState state;
  state.attitudes = {Attitude::Positive, Attitude::Neutral, Attitude::Negative};
  state.susceptibility.assign(3, Susceptibility::Insusceptible);  // keeps gamma at 1

  const int trials = 100000;
  int to_pos = 0, to_neg = 0;
  Rng rng(7);
  for (int t = 0; t < trials; ++t) {
    auto next = step(state, g, p, rng);
    if (next.attitudes[1] == Attitude::Positive) ++to_pos;
    if (next.attitudes[1] == Attitude::Negative) ++to_neg;
  }
  double expected = 0.3 * 0.3;  // r1 * lambda
  CHECK(std::abs(to_pos / static_cast<double>(trials) - expected) < 0.01);
  CHECK(std::abs(to_neg / static_cast<double>(trials) - expected) < 0.01);
}

TEST_CASE("zero epochs produce only the initial record") {
  auto g = path_graph2(5);
  SimParams p = table_params();
  p.epochs = 0;
  std::vector<Attitude> att(5, Attitude::Neutral);
  auto traj = run(g, att, uniform_scores(5), p);
  CHECK(traj.fractions.size() == 1);
}

TEST_CASE("with no susceptible seeds the insusceptible fraction stays 1") {
  auto g = path_graph2(12);
  SimParams p = table_params();
  p.theta = 1.0;
  p.s_rate = 0.0;
  p.r2 = 0.2;
  p.epochs = 25;
  std::vector<Attitude> att(12, Attitude::Negative);
  auto traj = run(g, att, uniform_scores(12), p);
  for (const auto& f : traj.fractions) CHECK(f[4] == doctest::Approx(1.0));
}

TEST_CASE("trajectories are deterministic per seed") {
  auto g = random_graph(30, 2, 0.15, 4);
  SimParams p = table_params();
  p.eta = 0.1;
  p.epochs = 20;
  p.rng_seed = 99;
  std::vector<Attitude> att(30);
  for (int i = 0; i < 30; ++i) att[i] = static_cast<Attitude>(i % 3);
  auto scores = eigen_influence(g);

  auto t1 = run(g, att, scores, p);
  auto t2 = run(g, att, scores, p);
  REQUIRE(t1.fractions.size() == t2.fractions.size());
  for (std::size_t i = 0; i < t1.fractions.size(); ++i)
    for (int j = 0; j < 5; ++j) CHECK(t1.fractions[i][j] == t2.fractions[i][j]);
  CHECK(t1.final_state.attitudes == t2.final_state.attitudes);
}

TEST_CASE("attitude fractions always sum to one") {
  auto g = random_graph(25, 2, 0.2, 8);
  SimParams p = table_params();
  p.epochs = 15;
  std::vector<Attitude> att(25, Attitude::Neutral);
  for (int i = 0; i < 8; ++i) att[i] = Attitude::Positive;
  for (int i = 8; i < 16; ++i) att[i] = Attitude::Negative;
  auto traj = run(g, att, eigen_influence(g), p);
  for (const auto& f : traj.fractions) {
    CHECK(f[0] + f[1] + f[2] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f[3] + f[4] == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("transition probabilities stay in the unit interval") {
  Rng prng(11);
  auto g = random_graph(15, 2, 0.3, 12);
  for (int trial = 0; trial < 200; ++trial) {
    SimParams p;
    p.alpha = prng.uniform(0.01, 0.99);
    p.beta = prng.uniform(0.01, 0.99);
    p.r1 = prng.uniform(0.01, 0.49);
    p.gamma1 = prng.uniform(1.0, 1.0 / p.alpha);
    p.diff_rate = prng.uniform(0.01, 0.99);
    p.s_rate = prng.uniform(0.0, 0.99);
    p.r2 = prng.uniform(0.01, 0.99);
    p.gamma2 = prng.uniform(1.0, 1.0 / p.diff_rate);
    p.validate();

    SimulationState state;
    state.attitudes.resize(15);
    state.susceptibility.resize(15);
    for (int i = 0; i < 15; ++i) {
      state.attitudes[i] = static_cast<Attitude>(prng.index(3));
      state.susceptibility[i] = static_cast<Susceptibility>(prng.index(2));
    }
    for (int i = 0; i < 15; ++i) {
      double lp = lambda_p(i, state, g, p);
      double ln = lambda_n(i, state, g, p);
      double ls = lambda_s(i, state, g, p);
      CHECK(lp >= 0.0);
      CHECK(lp <= 1.0);
      CHECK(ln >= 0.0);
      CHECK(ln <= 1.0);
      CHECK(ls >= 0.0);
      CHECK(ls <= 1.0);
      // neutral exit probabilities never exceed one combined
      CHECK(p.r1 * lp + p.r1 * ln < 1.0);
    }
  }
}

TEST_CASE("adding a positive neighbor never lowers lambda_p") {
  const int n = 6;
  Matrix a = Matrix::Zero(n, n);
  for (int j = 1; j < n; ++j) a(0, j) = a(j, 0) = 1.0;  // star around node 0
  MultiLayerGraph g;
  g.n_nodes = n;
  g.layers = {a, a};
  SimParams p = table_params();

  SimulationState state;
  state.attitudes.assign(n, Attitude::Negative);
  state.susceptibility.assign(n, Susceptibility::Susceptible);
  double prev = lambda_p(0, state, g, p);
  for (int j = 1; j < n; ++j) {
    state.attitudes[j] = Attitude::Positive;
    double cur = lambda_p(0, state, g, p);
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("a closed consensus community keeps its attitude mix") {
  // two disjoint triangles in both layers; triangle one all negative
  MultiLayerGraph g;
  g.n_nodes = 6;
  g.layers = {two_triangles(), two_triangles()};
  SimParams p = table_params();
  p.epochs = 30;
  std::vector<Attitude> att{Attitude::Negative, Attitude::Negative, Attitude::Negative,
                            Attitude::Positive, Attitude::Positive, Attitude::Positive};
  auto traj = run(g, att, uniform_scores(6), p);
  for (int i = 0; i < 3; ++i) CHECK(traj.final_state.attitudes[i] == Attitude::Negative);
  for (int i = 3; i < 6; ++i) CHECK(traj.final_state.attitudes[i] == Attitude::Positive);
}

TEST_CASE("frozen intervened nodes keep the replacement attitude") {
  auto g = random_graph(20, 2, 0.3, 21);
  SimParams p = table_params();
  p.eta = 0.2;
  p.epochs = 25;
  p.freeze_intervened = true;
  std::vector<Attitude> att(20, Attitude::Negative);
  auto traj = run(g, att, eigen_influence(g), p);
  for (int id : traj.final_state.intervened)
    CHECK(traj.final_state.attitudes[id] == Attitude::Positive);
}

TEST_CASE("sweep emits one row per cell and community") {
  auto g = random_graph(30, 2, 0.2, 31);
  std::vector<Attitude> att(30);
  for (int i = 0; i < 30; ++i) att[i] = static_cast<Attitude>(i % 3);
  SimParams p = table_params();
  p.epochs = 5;

  std::vector<double> etas{0.0, 0.05, 0.10, 0.15, 0.20, 0.25};
  std::vector<double> thetas{0.1, 0.2, 0.3, 0.4, 0.5};
  auto rows = intervention_sweep(g, att, eigen_influence(g), p, etas, thetas, 20);
  CHECK(rows.size() == 30);  // 6 x 5 cells, single community
  for (const auto& row : rows)
    CHECK(row.pos_mean + row.neg_mean + row.neu_mean == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("sweep is deterministic and honors the target community") {
  auto g = random_graph(24, 2, 0.25, 41);
  std::vector<Attitude> att(24, Attitude::Negative);
  SimParams p = table_params();
  p.epochs = 6;
  CommunityAssignment assignment;
  assignment.labels.assign(24, 0);
  for (int i = 12; i < 24; ++i) assignment.labels[i] = 1;
  assignment.k = 2;

  auto rows1 = intervention_sweep(g, att, eigen_influence(g), p, {0.0, 0.2}, {0.1}, 5,
                                  assignment, 0);
  auto rows2 = intervention_sweep(g, att, eigen_influence(g), p, {0.0, 0.2}, {0.1}, 5,
                                  assignment, 0);
  REQUIRE(rows1.size() == rows2.size());
  for (std::size_t i = 0; i < rows1.size(); ++i) {
    CHECK(rows1[i].pos_mean == rows2[i].pos_mean);
    CHECK(rows1[i].pos_std == rows2[i].pos_std);
  }
  CHECK(rows1.size() == 4);  // 2 cells x 2 communities
}

TEST_CASE("parameter validation rejects out-of-range rates") {
  SimParams p = table_params();
  p.r1 = 0.5;
  CHECK_THROWS_AS(p.validate(), InvalidConfig);
  p = table_params();
  p.gamma1 = 4.0;  // above 1/alpha for alpha = 0.3
  CHECK_THROWS_AS(p.validate(), InvalidConfig);
  p = table_params();
  p.theta = 1.2;
  CHECK_THROWS_AS(p.validate(), InvalidConfig);
}
