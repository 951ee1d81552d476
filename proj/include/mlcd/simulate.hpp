#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "mlcd/attitude.hpp"
#include "mlcd/graph.hpp"
#include "mlcd/influence.hpp"
#include "mlcd/metrics.hpp"
#include "mlcd/rng.hpp"

namespace mlcd {

enum class Susceptibility { Susceptible = 0, Insusceptible = 1 };

struct SimParams {
  double alpha = 0.3;      // relation-layer propagation rate
  double beta = 0.2;       // acceptance rate
  double r1 = 0.3;         // neutral transition rate, < 0.5
  double gamma1 = 1.5;     // inter-layer coefficient, in [1, 1/alpha]
  double diff_rate = 0.3;  // similarity-layer propagation rate
  double s_rate = 0.2;     // spontaneous susceptibility toggle rate
  double r2 = 0.2;         // recovery rate (susceptible -> insusceptible)
  double gamma2 = 1.5;     // inter-layer coefficient, in [1, 1/diff_rate]
  double theta = 0.1;      // initial insusceptible fraction
  double eta = 0.0;        // intervention fraction
  int epochs = 50;
  std::uint64_t rng_seed = 0;
  Attitude intervention_attitude = Attitude::Positive;
  bool freeze_intervened = false;  // keep replaced attitudes fixed during the run

  void validate() const;  // throws InvalidConfig
};

struct SimulationState {
  std::vector<Attitude> attitudes;
  std::vector<Susceptibility> susceptibility;
  std::vector<int> intervened;  // node ids whose attitude was replaced
  int step = 0;
};

// Per-step fractions: positive, neutral, negative, susceptible, insusceptible.
struct Trajectory {
  std::vector<std::array<double, 5>> fractions;  // length epochs + 1
  SimulationState final_state;
};

// Replaces the attitudes of the ceil(eta * |target|) top influencers (within
// `target`, or all nodes when target is empty) and marks a seeded sample of
// ceil(theta * N) nodes insusceptible.
SimulationState init_states(const std::vector<Attitude>& attitudes_in,
                            const InfluenceScores& influence, const SimParams& params, Rng& rng,
                            const std::vector<int>& target = {});

// Probability that node i adopts exposure to positive (lambda_p) or negative
// (lambda_n) neighbors on the relation layer; gamma1 applies only to
// susceptible nodes.
double lambda_p(int node, const SimulationState& state, const MultiLayerGraph& g,
                const SimParams& params);
double lambda_n(int node, const SimulationState& state, const MultiLayerGraph& g,
                const SimParams& params);

// Probability that an insusceptible node turns susceptible, driven by
// susceptible neighbors on the similarity layer; gamma2 applies only to
// attitude-neutral nodes.
double lambda_s(int node, const SimulationState& state, const MultiLayerGraph& g,
                const SimParams& params);

// One synchronous update of both layers; all lambdas read the pre-step state.
SimulationState step(const SimulationState& state, const MultiLayerGraph& g,
                     const SimParams& params, Rng& rng);

Trajectory run(const MultiLayerGraph& g, const std::vector<Attitude>& attitudes,
               const InfluenceScores& influence, const SimParams& params,
               const std::vector<int>& target = {});

struct SweepRow {
  double eta = 0.0;
  double theta = 0.0;
  int community = 0;
  // mean/std of final shares over seeds
  double pos_mean = 0.0, pos_std = 0.0;
  double neg_mean = 0.0, neg_std = 0.0;
  double neu_mean = 0.0, neu_std = 0.0;
};

// Grid sweep over (eta, theta); every cell runs `seeds` simulations with
// RNGs derived from (base seed, cell index, seed index) and reports final
// attitude shares per community (whole graph = community 0 when no
// assignment is given). Intervention is restricted to `target_community`
// when it is set.
std::vector<SweepRow> intervention_sweep(const MultiLayerGraph& g,
                                         const std::vector<Attitude>& attitudes,
                                         const InfluenceScores& influence,
                                         const SimParams& base_params,
                                         const std::vector<double>& etas,
                                         const std::vector<double>& thetas, int seeds,
                                         const std::optional<CommunityAssignment>& assignment =
                                             std::nullopt,
                                         std::optional<int> target_community = std::nullopt);

}  // namespace mlcd
