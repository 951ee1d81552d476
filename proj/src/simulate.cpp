#include "mlcd/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mlcd/errors.hpp"

namespace mlcd {

namespace {

const Matrix& relation_layer(const MultiLayerGraph& g) { return g.layers.front(); }

const Matrix& similarity_layer_of(const MultiLayerGraph& g) {
  return g.layers.size() > 1 ? g.layers[1] : g.layers[0];
}

int ceil_fraction(double fraction, int n) {
  int count = static_cast<int>(std::ceil(fraction * n - 1e-9));
  return std::clamp(count, 0, n);
}

}  // namespace

void SimParams::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidConfig("alpha must lie in (0,1)");
  if (!(beta > 0.0 && beta < 1.0)) throw InvalidConfig("beta must lie in (0,1)");
  if (!(r1 > 0.0 && r1 < 0.5)) throw InvalidConfig("r1 must lie in (0,0.5)");
  if (!(gamma1 >= 1.0 && gamma1 <= 1.0 / alpha))
    throw InvalidConfig("gamma1 must lie in [1, 1/alpha]");
  if (!(diff_rate > 0.0 && diff_rate < 1.0)) throw InvalidConfig("diff_rate must lie in (0,1)");
  if (!(s_rate >= 0.0 && s_rate < 1.0)) throw InvalidConfig("s_rate must lie in [0,1)");
  if (!(r2 > 0.0 && r2 < 1.0)) throw InvalidConfig("r2 must lie in (0,1)");
  if (!(gamma2 >= 1.0 && gamma2 <= 1.0 / diff_rate))
    throw InvalidConfig("gamma2 must lie in [1, 1/diff_rate]");
  if (!(theta >= 0.0 && theta <= 1.0)) throw InvalidConfig("theta must lie in [0,1]");
  if (!(eta >= 0.0 && eta <= 1.0)) throw InvalidConfig("eta must lie in [0,1]");
  if (epochs < 0) throw InvalidConfig("epochs must be >= 0");
}

SimulationState init_states(const std::vector<Attitude>& attitudes_in,
                            const InfluenceScores& influence, const SimParams& params, Rng& rng,
                            const std::vector<int>& target) {
  const int n = static_cast<int>(attitudes_in.size());
  if (influence.scores.size() != n)
    throw LengthMismatch("influence scores do not match attitude count");

  SimulationState state;
  state.attitudes = attitudes_in;
  state.susceptibility.assign(n, Susceptibility::Susceptible);

  std::vector<int> pool = target;
  if (pool.empty()) {
    pool.resize(n);
    std::iota(pool.begin(), pool.end(), 0);
  }
  std::sort(pool.begin(), pool.end(), [&](int a, int b) {
    if (influence.scores(a) != influence.scores(b))
      return influence.scores(a) > influence.scores(b);
    return a < b;
  });
  int replaced = ceil_fraction(params.eta, static_cast<int>(pool.size()));
  for (int r = 0; r < replaced; ++r) {
    state.attitudes[pool[r]] = params.intervention_attitude;
    state.intervened.push_back(pool[r]);
  }

  int insusceptible = ceil_fraction(params.theta, n);
  for (std::size_t idx : rng.sample_without_replacement(n, insusceptible))
    state.susceptibility[idx] = Susceptibility::Insusceptible;
  return state;
}

namespace {

double exposure(int node, const Matrix& layer, const std::vector<Attitude>& attitudes,
                Attitude which, double gamma_rate) {
  double keep = 1.0;
  for (int j = 0; j < layer.cols(); ++j)
    if (layer(node, j) != 0.0 && attitudes[j] == which) keep *= 1.0 - gamma_rate;
  return 1.0 - keep;
}

}  // namespace

double lambda_p(int node, const SimulationState& state, const MultiLayerGraph& g,
                const SimParams& params) {
  double gamma =
      state.susceptibility[node] == Susceptibility::Susceptible ? params.gamma1 : 1.0;
  return exposure(node, relation_layer(g), state.attitudes, Attitude::Positive,
                  gamma * params.alpha);
}

double lambda_n(int node, const SimulationState& state, const MultiLayerGraph& g,
                const SimParams& params) {
  double gamma =
      state.susceptibility[node] == Susceptibility::Susceptible ? params.gamma1 : 1.0;
  return exposure(node, relation_layer(g), state.attitudes, Attitude::Negative,
                  gamma * params.alpha);
}

double lambda_s(int node, const SimulationState& state, const MultiLayerGraph& g,
                const SimParams& params) {
  double gamma = state.attitudes[node] == Attitude::Neutral ? params.gamma2 : 1.0;
  const Matrix& layer = similarity_layer_of(g);
  double keep = 1.0;
  for (int j = 0; j < layer.cols(); ++j)
    if (layer(node, j) != 0.0 && state.susceptibility[j] == Susceptibility::Susceptible)
      keep *= 1.0 - gamma * params.diff_rate;
  return 1.0 - keep;
}

SimulationState step(const SimulationState& state, const MultiLayerGraph& g,
                     const SimParams& params, Rng& rng) {
  const int n = static_cast<int>(state.attitudes.size());
  SimulationState next = state;
  next.step = state.step + 1;

  std::vector<bool> frozen(n, false);
  if (params.freeze_intervened)
    for (int id : state.intervened) frozen[id] = true;

  // relation layer: attitude flips pass through neutral; beta gates the
  // retreat of a polarized view, r1 gates neutral picking a side
  for (int i = 0; i < n; ++i) {
    if (frozen[i]) continue;
    switch (state.attitudes[i]) {
      case Attitude::Positive:
        if (rng.uniform() < params.beta * lambda_n(i, state, g, params))
          next.attitudes[i] = Attitude::Neutral;
        break;
      case Attitude::Negative:
        if (rng.uniform() < params.beta * lambda_p(i, state, g, params))
          next.attitudes[i] = Attitude::Neutral;
        break;
      case Attitude::Neutral: {
        double to_pos = params.r1 * lambda_p(i, state, g, params);
        double to_neg = params.r1 * lambda_n(i, state, g, params);
        double u = rng.uniform();
        if (u < to_pos)
          next.attitudes[i] = Attitude::Positive;
        else if (u < to_pos + to_neg)
          next.attitudes[i] = Attitude::Negative;
        break;
      }
    }
  }

  // similarity layer: neighbor-driven transitions, then spontaneous toggles
  for (int i = 0; i < n; ++i) {
    if (state.susceptibility[i] == Susceptibility::Susceptible) {
      if (rng.uniform() < params.r2) next.susceptibility[i] = Susceptibility::Insusceptible;
    } else {
      if (rng.uniform() < lambda_s(i, state, g, params))
        next.susceptibility[i] = Susceptibility::Susceptible;
    }
  }
  for (int i = 0; i < n; ++i)
    if (rng.uniform() < params.s_rate)
      next.susceptibility[i] = next.susceptibility[i] == Susceptibility::Susceptible
                                   ? Susceptibility::Insusceptible
                                   : Susceptibility::Susceptible;
  return next;
}

namespace {

std::array<double, 5> state_fractions(const SimulationState& state) {
  const double n = static_cast<double>(state.attitudes.size());
  std::array<double, 5> f{};
  for (Attitude a : state.attitudes) {
    if (a == Attitude::Positive) f[0] += 1.0;
    else if (a == Attitude::Neutral) f[1] += 1.0;
    else f[2] += 1.0;
  }
  for (Susceptibility s : state.susceptibility)
    (s == Susceptibility::Susceptible ? f[3] : f[4]) += 1.0;
  for (double& x : f) x /= n;
  return f;
}

}  // namespace

Trajectory run(const MultiLayerGraph& g, const std::vector<Attitude>& attitudes,
               const InfluenceScores& influence, const SimParams& params,
               const std::vector<int>& target) {
  params.validate();
  if (g.layers.empty()) throw EmptyLayer("simulation needs at least one layer");
  if (static_cast<int>(attitudes.size()) != g.n_nodes)
    throw LengthMismatch("attitude count does not match node count");

  Rng rng(params.rng_seed);
  SimulationState state = init_states(attitudes, influence, params, rng, target);

  Trajectory traj;
  traj.fractions.reserve(params.epochs + 1);
  traj.fractions.push_back(state_fractions(state));
  for (int t = 0; t < params.epochs; ++t) {
    state = step(state, g, params, rng);
    traj.fractions.push_back(state_fractions(state));
  }
  traj.final_state = std::move(state);
  return traj;
}

std::vector<SweepRow> intervention_sweep(const MultiLayerGraph& g,
                                         const std::vector<Attitude>& attitudes,
                                         const InfluenceScores& influence,
                                         const SimParams& base_params,
                                         const std::vector<double>& etas,
                                         const std::vector<double>& thetas, int seeds,
                                         const std::optional<CommunityAssignment>& assignment,
                                         std::optional<int> target_community) {
  if (etas.empty() || thetas.empty()) throw InvalidConfig("eta/theta grids must be non-empty");
  if (seeds < 1) throw InvalidConfig("need at least one seed per cell");
  if (target_community && !assignment)
    throw InvalidConfig("target community requires a community assignment");

  CommunityAssignment communities;
  if (assignment) {
    communities = *assignment;
  } else {
    communities.labels.assign(g.n_nodes, 0);
    communities.k = 1;
  }

  std::vector<int> target;
  if (target_community) {
    if (*target_community < 0 || *target_community >= communities.k)
      throw InvalidConfig("target community out of range");
    for (int i = 0; i < g.n_nodes; ++i)
      if (communities.labels[i] == *target_community) target.push_back(i);
  }

  std::vector<SweepRow> rows;
  int cell_index = 0;
  for (double eta : etas) {
    for (double theta : thetas) {
      // accumulate per community: sum and sum of squares of final shares
      Matrix acc = Matrix::Zero(communities.k, 3);
      Matrix acc2 = Matrix::Zero(communities.k, 3);
      for (int s = 0; s < seeds; ++s) {
        SimParams params = base_params;
        params.eta = eta;
        params.theta = theta;
        params.rng_seed = splitmix64(splitmix64(base_params.rng_seed + cell_index) + s);
        Trajectory traj = run(g, attitudes, influence, params, target);
        Matrix shares = attitude_shares(communities, traj.final_state.attitudes);
        acc += shares;
        acc2 += shares.cwiseProduct(shares);
      }
      for (int c = 0; c < communities.k; ++c) {
        SweepRow row;
        row.eta = eta;
        row.theta = theta;
        row.community = c;
        auto stat = [&](int col, double& mean, double& sd) {
          mean = acc(c, col) / seeds;
          double var = acc2(c, col) / seeds - mean * mean;
          sd = std::sqrt(std::max(0.0, var));
        };
        stat(0, row.pos_mean, row.pos_std);
        stat(1, row.neu_mean, row.neu_std);
        stat(2, row.neg_mean, row.neg_std);
        rows.push_back(row);
      }
      ++cell_index;
    }
  }
  return rows;
}

}  // namespace mlcd
