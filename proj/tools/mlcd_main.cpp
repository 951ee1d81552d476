// mlcd: multi-layer community detection, influence ranking and
// intervention simulation. Subcommands: gen, detect, metrics, rank,
// simulate, sweep. Every run is deterministic for a fixed --seed and
// writes a run-manifest.json next to its outputs.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "mlcd/attitude.hpp"
#include "mlcd/errors.hpp"
#include "mlcd/gae.hpp"
#include "mlcd/influence.hpp"
#include "mlcd/io.hpp"
#include "mlcd/kmeans.hpp"
#include "mlcd/metrics.hpp"
#include "mlcd/sbm.hpp"
#include "mlcd/similarity.hpp"
#include "mlcd/simulate.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace mlcd;

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

void require_file(const fs::path& path) {
  if (!fs::exists(path)) throw IoError("input file not found: " + path.string());
}

void write_manifest(const fs::path& dir, const std::string& subcommand, const json& config) {
  json manifest;
  manifest["subcommand"] = subcommand;
  manifest["config"] = config;
  auto out = open_out(dir / "run-manifest.json");
  out << manifest.dump(2) << '\n';
}

// "a:b:step" (inclusive ends) or a single value
std::vector<double> parse_grid(const std::string& expr) {
  std::vector<double> values;
  auto first = expr.find(':');
  if (first == std::string::npos) {
    values.push_back(std::stod(expr));
    return values;
  }
  auto second = expr.find(':', first + 1);
  if (second == std::string::npos)
    throw InvalidConfig("grid must be 'start:stop:step', got '" + expr + "'");
  double start = std::stod(expr.substr(0, first));
  double stop = std::stod(expr.substr(first + 1, second - first - 1));
  double step = std::stod(expr.substr(second + 1));
  if (step <= 0.0) throw InvalidConfig("grid step must be positive");
  for (double v = start; v <= stop + 1e-9; v += step) values.push_back(v);
  return values;
}

std::vector<Attitude> read_attitudes_csv(const fs::path& path, int n_nodes) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<int> seen(n_nodes, 0);
  std::vector<Attitude> attitudes(n_nodes, Attitude::Neutral);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": expected 'node_id,attitude'");
    int id = std::stoi(line.substr(0, comma));
    if (id < 0 || id >= n_nodes)
      throw BadNodeId("attitude row for out-of-range node id " + std::to_string(id));
    std::string label = line.substr(comma + 1);
    while (!label.empty() && (label.back() == '\r' || label.back() == ' ')) label.pop_back();
    attitudes[id] = attitude_from_string(label);
    seen[id] = 1;
  }
  for (int i = 0; i < n_nodes; ++i)
    if (!seen[i]) throw ParseError(path.string() + ": missing attitude for node " + std::to_string(i));
  return attitudes;
}

void write_attitudes_csv(const std::vector<Attitude>& attitudes, const fs::path& path) {
  auto out = open_out(path);
  for (std::size_t i = 0; i < attitudes.size(); ++i)
    out << i << ',' << to_string(attitudes[i]) << '\n';
}

// Shared graph-loading options for the analysis subcommands.
struct GraphInput {
  std::vector<std::string> edge_files;
  std::string features_file;
  bool add_similarity = false;
  int add_knn = 0;
  std::uint64_t seed = 0;

  MultiLayerGraph load() const {
    if (edge_files.empty()) throw InvalidConfig("at least one --edges file is required");
    for (const auto& f : edge_files) require_file(f);
    if (!features_file.empty()) require_file(features_file);

    std::vector<std::vector<std::pair<int, int>>> edge_sets;
    int n = 0;
    for (const auto& f : edge_files) {
      edge_sets.push_back(read_edge_pairs(f));
      for (auto [u, v] : edge_sets.back()) n = std::max({n, u + 1, v + 1});
    }
    MultiLayerGraph g;
    if (!features_file.empty()) {
      Matrix feats = read_features_csv(features_file);
      n = std::max(n, static_cast<int>(feats.rows()));
      g.features = std::move(feats);
    }
    g.n_nodes = n;
    for (const auto& edges : edge_sets) g.layers.push_back(edges_to_adjacency(edges, n));

    if (add_similarity) {
      if (!g.features) throw InvalidConfig("--add-similarity requires --features");
      g.layers.push_back(similarity_layer(*g.features, splitmix64(seed + 0xA11CE)));
    }
    if (add_knn > 0) {
      if (!g.features) throw InvalidConfig("--add-knn requires --features");
      g.layers.push_back(knn_layer(*g.features, add_knn));
    }
    g.validate();
    return g;
  }

  json to_json() const {
    json j;
    j["edges"] = edge_files;
    if (!features_file.empty()) j["features"] = features_file;
    if (add_similarity) j["add_similarity"] = true;
    if (add_knn > 0) j["add_knn"] = add_knn;
    return j;
  }
};

void add_graph_options(CLI::App* cmd, GraphInput& input) {
  cmd->add_option("--edges", input.edge_files, "edge-list file, one per layer (repeatable)")
      ->required();
  cmd->add_option("--features", input.features_file, "node feature CSV");
  cmd->add_flag("--add-similarity", input.add_similarity,
                "append a cosine-probability similarity layer built from --features");
  cmd->add_option("--add-knn", input.add_knn, "append a mutual-kNN layer with this k");
}

json metrics_json(const MultiLayerGraph& g, const CommunityAssignment& assignment,
                  const std::optional<CommunityAssignment>& truth) {
  json m;
  if (truth) m["nmi"] = nmi(*truth, assignment);
  m["q_nm"] = q_nm(g, assignment);
  m["q_sd"] = q_sd(g, assignment);
  if (g.features) {
    m["kl_index"] = kl_similarity_index(*g.features, assignment);
    m["js_index"] = js_similarity_index(*g.features, assignment);
  }
  return m;
}

// ---------------------------------------------------------------- gen ----

struct GenArgs {
  std::string out;
  bool benchmark_suite = false;
  int nodes = 300;
  int layers = 3;
  int communities = 2;
  double mean_degree = 10.0;
  double ratio = 6.0;
  std::uint64_t seed = 0;
};

void write_dataset(const MultiLayerGraph& g, const fs::path& dir) {
  fs::create_directories(dir);
  for (int l = 0; l < g.n_layers(); ++l)
    write_edge_list(g.layers[l], dir / ("layer" + std::to_string(l) + ".edges"));
  if (g.labels) write_labels_csv(*g.labels, dir / "labels.csv");
}

int cmd_gen(const GenArgs& args) {
  fs::create_directories(args.out);
  json config;
  config["seed"] = args.seed;
  if (args.benchmark_suite) {
    config["benchmark_suite"] = true;
    for (const auto& [g, name] : benchmark_suite(args.seed))
      write_dataset(g, fs::path(args.out) / name);
  } else {
    config["nodes"] = args.nodes;
    config["layers"] = args.layers;
    config["communities"] = args.communities;
    config["mean_degree"] = args.mean_degree;
    config["ratio"] = args.ratio;
    auto res = generate_mlsbm(planted_config(args.nodes, args.layers, args.communities,
                                             args.mean_degree, args.ratio, args.seed));
    write_dataset(res.graph, args.out);
  }
  write_manifest(args.out, "gen", config);
  return 0;
}

// ------------------------------------------------------------- detect ----

struct DetectArgs {
  GraphInput input;
  std::string labels_file;
  std::string out;
  std::string variant = "mge";
  std::string decoder;  // "", "linear", "tanh"
  int k = 0;
  std::string select_k_range;
  int epochs = 200;
  double learning_rate = 1e-3;
  int hidden_dim = 32;
  int embed_dim = 16;
  std::uint64_t seed = 0;
  bool dump_embeddings = false;
};

int cmd_detect(const DetectArgs& args) {
  if (args.k == 0 && args.select_k_range.empty())
    throw InvalidConfig("one of --k or --select-k is required");
  if (!args.labels_file.empty()) require_file(args.labels_file);

  MultiLayerGraph g = args.input.load();

  TrainConfig cfg;
  cfg.variant = args.variant == "ige" ? Variant::IGE : Variant::MGE;
  if (args.decoder == "linear") cfg.decoder = Decoder::Linear;
  if (args.decoder == "tanh") cfg.decoder = Decoder::Tanh;
  cfg.epochs = args.epochs;
  cfg.learning_rate = args.learning_rate;
  cfg.hidden_dim = args.hidden_dim;
  cfg.embed_dim = args.embed_dim;
  cfg.rng_seed = args.seed;

  fs::create_directories(args.out);
  fs::path out_dir(args.out);

  ModularityTensor bt = build_modularity_tensor(g);
  EmbeddingSet emb = train(g, bt, cfg);

  int chosen_k = args.k;
  if (!args.select_k_range.empty()) {
    auto colon = args.select_k_range.find(':');
    if (colon == std::string::npos)
      throw InvalidConfig("--select-k wants MIN:MAX, got '" + args.select_k_range + "'");
    int k_min = std::stoi(args.select_k_range.substr(0, colon));
    int k_max = std::stoi(args.select_k_range.substr(colon + 1));
    if (k_min < 2 || k_min > k_max) throw InvalidConfig("need 2 <= k_min <= k_max");

    auto curve_out = open_out(out_dir / "qcurve.csv");
    curve_out << "k,q_nm\n";
    double best_q = -1e300;
    chosen_k = k_min;
    for (int k = k_min; k <= k_max; ++k) {
      KMeansResult km = kmeans(emb.fused, k, cfg.rng_seed, 10);
      CommunityAssignment a{std::move(km.labels), km.k};
      double q = q_nm(g, a);
      curve_out << k << ',' << fmt(q) << '\n';
      if (q > best_q) {
        best_q = q;
        chosen_k = k;
      }
    }
  }

  KMeansResult km = kmeans(emb.fused, chosen_k, cfg.rng_seed, 10);
  CommunityAssignment assignment{std::move(km.labels), km.k};
  write_labels_csv(assignment.labels, out_dir / "labels.csv");

  {
    auto loss_out = open_out(out_dir / "losscurve.csv");
    loss_out << "epoch,loss\n";
    for (std::size_t e = 0; e < emb.loss_history.size(); ++e)
      loss_out << e << ',' << fmt(emb.loss_history[e]) << '\n';
  }
  if (args.dump_embeddings) write_features_csv(emb.fused, out_dir / "embeddings.csv");

  std::optional<CommunityAssignment> truth;
  if (!args.labels_file.empty())
    truth = make_assignment(read_labels_csv(args.labels_file, g.n_nodes));
  {
    auto metrics_out = open_out(out_dir / "metrics.json");
    metrics_out << metrics_json(g, assignment, truth).dump(2) << '\n';
  }

  json config = args.input.to_json();
  config["variant"] = args.variant;
  config["k"] = chosen_k;
  if (!args.select_k_range.empty()) config["select_k"] = args.select_k_range;
  config["epochs"] = args.epochs;
  config["learning_rate"] = args.learning_rate;
  config["hidden_dim"] = args.hidden_dim;
  config["embed_dim"] = args.embed_dim;
  config["seed"] = args.seed;
  write_manifest(out_dir, "detect", config);
  return 0;
}

// ------------------------------------------------------------ metrics ----

struct MetricsArgs {
  GraphInput input;
  std::string labels_pred;
  std::string labels_true;
  std::string out;
};

int cmd_metrics(const MetricsArgs& args) {
  require_file(args.labels_pred);
  if (!args.labels_true.empty()) require_file(args.labels_true);

  MultiLayerGraph g = args.input.load();
  auto assignment = make_assignment(read_labels_csv(args.labels_pred, g.n_nodes));
  std::optional<CommunityAssignment> truth;
  if (!args.labels_true.empty())
    truth = make_assignment(read_labels_csv(args.labels_true, g.n_nodes));

  json m = metrics_json(g, assignment, truth);
  if (args.out.empty()) {
    std::printf("%s\n", m.dump(2).c_str());
  } else {
    fs::create_directories(args.out);
    auto out = open_out(fs::path(args.out) / "metrics.json");
    out << m.dump(2) << '\n';
    json config = args.input.to_json();
    config["labels_pred"] = args.labels_pred;
    if (!args.labels_true.empty()) config["labels_true"] = args.labels_true;
    write_manifest(args.out, "metrics", config);
  }
  return 0;
}

// --------------------------------------------------------------- rank ----

struct RankArgs {
  GraphInput input;
  std::string out;
  double top = 1.0;
  double damping = 0.85;
  double eps = 1e-8;
  int max_iter = 1000;
  bool plain_adjacency = false;
};

int cmd_rank(const RankArgs& args) {
  MultiLayerGraph g = args.input.load();
  auto scores = eigen_influence(g, args.damping, args.eps, args.max_iter, !args.plain_adjacency);
  auto order = top_influencers(scores, args.top, g.n_nodes);

  fs::create_directories(args.out);
  auto out = open_out(fs::path(args.out) / "influence.csv");
  out << "node_id,score,rank\n";
  for (std::size_t r = 0; r < order.size(); ++r)
    out << order[r] << ',' << fmt(scores.scores(order[r])) << ',' << r + 1 << '\n';

  json config = args.input.to_json();
  config["top"] = args.top;
  config["damping"] = args.damping;
  config["plain_adjacency"] = args.plain_adjacency;
  write_manifest(args.out, "rank", config);
  return 0;
}

// ------------------------------------------------- simulate and sweep ----

struct SimArgs {
  GraphInput input;
  std::string attitudes_file;
  std::string labels_pred;
  int community = -1;
  std::string out;
  SimParams params;
  std::string intervention = "positive";
  // sweep-only
  std::string eta_grid = "0:0.25:0.05";
  std::string theta_grid = "0.1";
  int seeds = 20;
};

void add_sim_options(CLI::App* cmd, SimArgs& args) {
  add_graph_options(cmd, args.input);
  cmd->add_option("--attitudes", args.attitudes_file, "CSV node_id,attitude")->required();
  cmd->add_option("--labels-pred", args.labels_pred, "community labels CSV");
  cmd->add_option("--community", args.community, "restrict intervention to this community");
  cmd->add_option("--alpha", args.params.alpha, "relation-layer propagation rate");
  cmd->add_option("--beta", args.params.beta, "acceptance rate");
  cmd->add_option("--r1", args.params.r1, "neutral transition rate");
  cmd->add_option("--gamma1", args.params.gamma1, "inter-layer coefficient 1");
  cmd->add_option("--diff-rate", args.params.diff_rate, "similarity-layer propagation rate");
  cmd->add_option("--s-rate", args.params.s_rate, "spontaneous susceptibility toggle rate");
  cmd->add_option("--r2", args.params.r2, "recovery rate");
  cmd->add_option("--gamma2", args.params.gamma2, "inter-layer coefficient 2");
  cmd->add_option("--epochs", args.params.epochs, "simulation steps");
  cmd->add_option("--intervention-attitude", args.intervention, "positive|neutral|negative");
  cmd->add_flag("--freeze-intervened", args.params.freeze_intervened,
                "keep replaced attitudes fixed");
  cmd->add_option("--out", args.out, "output directory")->required();
}

struct SimSetup {
  MultiLayerGraph graph;
  std::vector<Attitude> attitudes;
  InfluenceScores influence;
  std::optional<CommunityAssignment> assignment;
  std::vector<int> target;
};

SimSetup prepare_sim(SimArgs& args) {
  require_file(args.attitudes_file);
  if (!args.labels_pred.empty()) require_file(args.labels_pred);

  SimSetup setup;
  setup.graph = args.input.load();
  setup.attitudes = read_attitudes_csv(args.attitudes_file, setup.graph.n_nodes);
  setup.influence = eigen_influence(setup.graph);
  args.params.intervention_attitude = attitude_from_string(args.intervention);

  if (!args.labels_pred.empty())
    setup.assignment = make_assignment(read_labels_csv(args.labels_pred, setup.graph.n_nodes));
  if (args.community >= 0) {
    if (!setup.assignment)
      throw InvalidConfig("--community requires --labels-pred");
    if (args.community >= setup.assignment->k)
      throw InvalidConfig("community " + std::to_string(args.community) + " out of range");
    for (int i = 0; i < setup.graph.n_nodes; ++i)
      if (setup.assignment->labels[i] == args.community) setup.target.push_back(i);
  }
  return setup;
}

json sim_config_json(const SimArgs& args) {
  json config = args.input.to_json();
  config["attitudes"] = args.attitudes_file;
  if (!args.labels_pred.empty()) config["labels_pred"] = args.labels_pred;
  if (args.community >= 0) config["community"] = args.community;
  config["alpha"] = args.params.alpha;
  config["beta"] = args.params.beta;
  config["r1"] = args.params.r1;
  config["gamma1"] = args.params.gamma1;
  config["diff_rate"] = args.params.diff_rate;
  config["s_rate"] = args.params.s_rate;
  config["r2"] = args.params.r2;
  config["gamma2"] = args.params.gamma2;
  config["theta"] = args.params.theta;
  config["epochs"] = args.params.epochs;
  config["seed"] = args.params.rng_seed;
  config["intervention_attitude"] = args.intervention;
  config["freeze_intervened"] = args.params.freeze_intervened;
  return config;
}

int cmd_simulate(SimArgs& args) {
  SimSetup setup = prepare_sim(args);
  Trajectory traj = run(setup.graph, setup.attitudes, setup.influence, args.params, setup.target);

  fs::create_directories(args.out);
  fs::path out_dir(args.out);
  {
    auto out = open_out(out_dir / "trajectory.csv");
    out << "step,pos,neu,neg,susceptible,insusceptible\n";
    for (std::size_t t = 0; t < traj.fractions.size(); ++t) {
      const auto& f = traj.fractions[t];
      out << t << ',' << fmt(f[0]) << ',' << fmt(f[1]) << ',' << fmt(f[2]) << ',' << fmt(f[3])
          << ',' << fmt(f[4]) << '\n';
    }
  }
  write_attitudes_csv(traj.final_state.attitudes, out_dir / "final_attitudes.csv");

  json config = sim_config_json(args);
  config["eta"] = args.params.eta;
  write_manifest(out_dir, "simulate", config);
  return 0;
}

int cmd_sweep(SimArgs& args) {
  SimSetup setup = prepare_sim(args);
  std::vector<double> etas = parse_grid(args.eta_grid);
  std::vector<double> thetas = parse_grid(args.theta_grid);

  std::optional<int> target_community;
  if (args.community >= 0) target_community = args.community;
  auto rows = intervention_sweep(setup.graph, setup.attitudes, setup.influence, args.params,
                                 etas, thetas, args.seeds, setup.assignment, target_community);

  fs::create_directories(args.out);
  auto out = open_out(fs::path(args.out) / "sweep.csv");
  out << "eta,theta,community,pos_mean,pos_std,neg_mean,neg_std,neu_mean,neu_std\n";
  for (const auto& r : rows)
    out << fmt(r.eta) << ',' << fmt(r.theta) << ',' << r.community << ',' << fmt(r.pos_mean)
        << ',' << fmt(r.pos_std) << ',' << fmt(r.neg_mean) << ',' << fmt(r.neg_std) << ','
        << fmt(r.neu_mean) << ',' << fmt(r.neu_std) << '\n';

  json config = sim_config_json(args);
  config["eta_grid"] = args.eta_grid;
  config["theta_grid"] = args.theta_grid;
  config["sweep_seeds"] = args.seeds;
  write_manifest(args.out, "sweep", config);
  return 0;
}

bool is_input_error(const std::exception& e) {
  return dynamic_cast<const IoError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
         dynamic_cast<const DuplicateNodeId*>(&e) || dynamic_cast<const BadNodeId*>(&e) ||
         dynamic_cast<const InvalidConfig*>(&e) || dynamic_cast<const BadK*>(&e) ||
         dynamic_cast<const BadRank*>(&e) || dynamic_cast<const LengthMismatch*>(&e) ||
         dynamic_cast<const ZeroFeatureRow*>(&e) || dynamic_cast<const EmptyLayer*>(&e) ||
         dynamic_cast<const ShapeMismatch*>(&e);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-layer network community detection and cocoon intervention toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value config file; CLI flags take precedence");
  app.allow_config_extras(false);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate planted multi-layer benchmark graphs");
  gen->add_option("--out", gen_args.out, "output directory")->required();
  gen->add_flag("--benchmark-suite", gen_args.benchmark_suite, "emit the three benchmark sizes");
  gen->add_option("--nodes", gen_args.nodes, "node count");
  gen->add_option("--layers", gen_args.layers, "layer count");
  gen->add_option("--communities", gen_args.communities, "planted community count");
  gen->add_option("--mean-degree", gen_args.mean_degree, "target mean degree per layer");
  gen->add_option("--ratio", gen_args.ratio, "within:between probability ratio");
  gen->add_option("--seed", gen_args.seed, "rng seed");

  DetectArgs detect_args;
  auto* detect = app.add_subcommand("detect", "train a detector and write community labels");
  add_graph_options(detect, detect_args.input);
  detect->add_option("--labels", detect_args.labels_file, "ground-truth labels CSV (adds NMI)");
  detect->add_option("--variant", detect_args.variant, "ige|mge")
      ->check(CLI::IsMember({"ige", "mge"}));
  detect->add_option("--decoder", detect_args.decoder, "linear|tanh (default per variant)")
      ->check(CLI::IsMember({"", "linear", "tanh"}));
  detect->add_option("--k", detect_args.k, "community count");
  detect->add_option("--select-k", detect_args.select_k_range, "sweep MIN:MAX and keep the best Q");
  detect->add_option("--epochs", detect_args.epochs, "training epochs");
  detect->add_option("--lr", detect_args.learning_rate, "learning rate");
  detect->add_option("--hidden-dim", detect_args.hidden_dim, "stage-1 width");
  detect->add_option("--embed-dim", detect_args.embed_dim, "stage-2 width");
  detect->add_option("--seed", detect_args.seed, "rng seed");
  detect->add_flag("--dump-embeddings", detect_args.dump_embeddings, "write embeddings.csv");
  detect->add_option("--out", detect_args.out, "output directory")->required();

  MetricsArgs metrics_args;
  auto* metrics = app.add_subcommand("metrics", "score a partition");
  add_graph_options(metrics, metrics_args.input);
  metrics->add_option("--labels-pred", metrics_args.labels_pred, "partition to score")->required();
  metrics->add_option("--labels-true", metrics_args.labels_true, "ground truth (adds NMI)");
  metrics->add_option("--out", metrics_args.out, "output directory (default: stdout)");

  RankArgs rank_args;
  auto* rank = app.add_subcommand("rank", "influence scores via damped eigenvector centrality");
  add_graph_options(rank, rank_args.input);
  rank->add_option("--top", rank_args.top, "keep the top fraction of nodes");
  rank->add_option("--damping", rank_args.damping, "damping factor");
  rank->add_option("--eps", rank_args.eps, "convergence threshold");
  rank->add_option("--max-iter", rank_args.max_iter, "iteration cap");
  rank->add_flag("--plain-adjacency", rank_args.plain_adjacency,
                 "use A instead of D + A per layer");
  rank->add_option("--out", rank_args.out, "output directory")->required();

  SimArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "run the two-layer Markov intervention model");
  add_sim_options(simulate, sim_args);
  simulate->add_option("--eta", sim_args.params.eta, "intervention fraction");
  simulate->add_option("--theta", sim_args.params.theta, "initial insusceptible fraction");
  simulate->add_option("--seed", sim_args.params.rng_seed, "rng seed");

  SimArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "grid sweep over eta and theta");
  add_sim_options(sweep, sweep_args);
  sweep->add_option("--eta", sweep_args.eta_grid, "eta grid start:stop:step");
  sweep->add_option("--theta", sweep_args.theta_grid, "theta grid start:stop:step");
  sweep->add_option("--seeds", sweep_args.seeds, "seeds per cell");
  sweep->add_option("--seed", sweep_args.params.rng_seed, "master rng seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    sim_args.input.seed = sim_args.params.rng_seed;
    sweep_args.input.seed = sweep_args.params.rng_seed;
    detect_args.input.seed = detect_args.seed;
    if (gen->parsed()) return cmd_gen(gen_args);
    if (detect->parsed()) return cmd_detect(detect_args);
    if (metrics->parsed()) return cmd_metrics(metrics_args);
    if (rank->parsed()) return cmd_rank(rank_args);
    if (simulate->parsed()) return cmd_simulate(sim_args);
    if (sweep->parsed()) return cmd_sweep(sweep_args);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return is_input_error(e) ? 2 : 1;
  }
  return 0;
}
