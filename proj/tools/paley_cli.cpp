// Command-line front end for the Paley sum graph simulation library.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "paley/cayley_graph.hpp"
#include "paley/clique_solver.hpp"
#include "paley/fourier_probe.hpp"
#include "paley/harness.hpp"
#include "paley/independence_lab.hpp"
#include "paley/number_theory.hpp"
#include "paley/rng.hpp"
#include "paley/second_moment.hpp"
#include "paley/sign_models.hpp"

namespace {

struct CommonOpts {
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::uint64_t trials = 0;
  bool trials_set = false;
  std::vector<std::uint64_t> primes;
  double c = 0.0;
  bool c_set = false;
  std::uint64_t q = 0;
  bool q_set = false;
  double epsilon = 0.0;
  bool epsilon_set = false;
  std::string out;
  std::string format = "json";
  std::string config_path;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--seed", o.seed, "master seed")->each([&](const std::string&) {
    o.seed_set = true;
  });
  cmd->add_option("--trials", o.trials, "number of Monte Carlo trials")
      ->each([&](const std::string&) { o.trials_set = true; });
  cmd->add_option("--primes", o.primes, "list of prime moduli")->delimiter(',');
  cmd->add_option("--c", o.c, "window rule coefficient in (0, 0.5)")
      ->each([&](const std::string&) { o.c_set = true; });
  cmd->add_option("--Q", o.q, "explicit window size override")
      ->each([&](const std::string&) { o.q_set = true; });
  cmd->add_option("--epsilon", o.epsilon, "epsilon parameter")
      ->each([&](const std::string&) { o.epsilon_set = true; });
  cmd->add_option("--out", o.out, "output path (default stdout)");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--config", o.config_path, "flat key=value config file");
}

// Config file first, CLI flags override.
paley::ExperimentConfig make_config(const CommonOpts& o) {
  paley::ExperimentConfig cfg;
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + o.config_path);
    cfg = paley::load_config_file(in);
  }
  if (o.seed_set) cfg.master_seed = o.seed;
  if (o.trials_set) cfg.trials = o.trials;
  if (!o.primes.empty()) cfg.primes = o.primes;
  if (o.c_set) cfg.c = o.c;
  if (o.q_set) cfg.q_override = o.q;
  if (o.epsilon_set) cfg.epsilon = o.epsilon;
  if (!o.out.empty()) cfg.output_path = o.out;
  return cfg;
}

class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

paley::SignFunction sample_for(const std::string& model, std::uint64_t n,
                               std::uint64_t q, std::uint64_t seed) {
  paley::Model m = paley::model_from_name(model);
  switch (m) {
    case paley::Model::multiplicative:
      return paley::sample_multiplicative(n, q, seed);
    case paley::Model::iid:
      return paley::sample_iid(n, seed);
    case paley::Model::character:
      return paley::character_function(n);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo experiments on multiplicative random models of the Paley sum graph"};
  app.require_subcommand(1);

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "emit one sign function as JSON");
  CommonOpts sample_opts;
  std::string sample_model = "multiplicative";
  std::uint64_t sample_n = 0;
  add_common(sample_cmd, sample_opts);
  sample_cmd->add_option("--model", sample_model, "multiplicative|iid|character");
  sample_cmd->add_option("--N", sample_n, "prime modulus")->required();

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "emit the sum graph edge list");
  CommonOpts graph_opts;
  std::string graph_model = "multiplicative";
  std::uint64_t graph_n = 0;
  add_common(graph_cmd, graph_opts);
  graph_cmd->add_option("--model", graph_model, "multiplicative|iid|character");
  graph_cmd->add_option("--N", graph_n, "prime modulus")->required();

  // clique
  auto* clique_cmd = app.add_subcommand("clique", "solve one max-clique instance");
  CommonOpts clique_opts;
  std::string clique_model = "multiplicative";
  std::uint64_t clique_n = 0;
  std::uint64_t clique_max_nodes = 0;
  double clique_time_limit = 0.0;
  bool clique_greedy = false;
  std::uint64_t clique_restarts = 100;
  add_common(clique_cmd, clique_opts);
  clique_cmd->add_option("--model", clique_model, "multiplicative|iid|character");
  clique_cmd->add_option("--N", clique_n, "prime modulus")->required();
  clique_cmd->add_option("--max-nodes", clique_max_nodes, "search node budget");
  clique_cmd->add_option("--time-limit-ms", clique_time_limit, "search time budget");
  clique_cmd->add_flag("--greedy", clique_greedy, "randomized greedy instead of exact");
  clique_cmd->add_option("--restarts", clique_restarts, "greedy restarts");

  // concentration
  auto* conc_cmd = app.add_subcommand(
      "concentration", "clique-number distribution across models and trials");
  CommonOpts conc_opts;
  std::vector<std::string> conc_models;
  add_common(conc_cmd, conc_opts);
  conc_cmd->add_option("--models", conc_models, "models to run")->delimiter(',');

  // borel-cantelli
  auto* bc_cmd = app.add_subcommand(
      "borel-cantelli", "rare-event frequency of the all-positive window");
  CommonOpts bc_opts;
  add_common(bc_cmd, bc_opts);

  // paley-scan
  auto* scan_cmd = app.add_subcommand("paley-scan", "least quadratic nonresidue scan");
  CommonOpts scan_opts;
  std::uint64_t scan_limit = 100000;
  add_common(scan_cmd, scan_opts);
  scan_cmd->add_option("--limit", scan_limit, "scan primes up to this bound");

  // character-baseline
  auto* char_cmd = app.add_subcommand(
      "character-baseline", "clique numbers of the true Paley sum graphs");
  CommonOpts char_opts;
  add_common(char_cmd, char_opts);

  // fourier
  auto* fourier_cmd = app.add_subcommand(
      "fourier", "windowed Fourier supremum scan or tail probability estimate");
  CommonOpts fourier_opts;
  std::uint64_t fourier_n = 0;
  double fourier_level = 1.0;
  bool fourier_tail = false;
  add_common(fourier_cmd, fourier_opts);
  fourier_cmd->add_option("--N", fourier_n, "prime modulus")->required();
  fourier_cmd->add_option("--level", fourier_level, "target level l")->required();
  fourier_cmd->add_flag("--tail", fourier_tail,
                        "Monte Carlo tail frequency instead of one scan");

  // independence
  auto* indep_cmd = app.add_subcommand(
      "independence", "Legendre-symbol pattern counts and both variances");
  CommonOpts indep_opts;
  std::uint64_t indep_x = 10000;
  std::uint64_t indep_y = 13;
  add_common(indep_cmd, indep_opts);
  indep_cmd->add_option("--x", indep_x, "count primes up to x");
  indep_cmd->add_option("--y", indep_y, "symbol window bound y");

  // second-moment
  auto* sm_cmd = app.add_subcommand(
      "second-moment", "enumerate the distinct-sums family and check E[R]");
  CommonOpts sm_opts;
  std::uint64_t sm_n = 101;
  std::uint64_t sm_k = 3;
  add_common(sm_cmd, sm_opts);
  sm_cmd->add_option("--N", sm_n, "prime modulus");
  sm_cmd->add_option("--k", sm_k, "set size k");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sample_cmd) {
      auto cfg = make_config(sample_opts);
      std::uint64_t q = sample_opts.q_set ? sample_opts.q : cfg.window_for(sample_n);
      auto f = sample_for(sample_model, sample_n, q, cfg.master_seed);
      OutputSink sink(cfg.output_path);
      sink.stream() << paley::to_json(f).dump(2) << '\n';
    } else if (*graph_cmd) {
      auto cfg = make_config(graph_opts);
      std::uint64_t q = graph_opts.q_set ? graph_opts.q : cfg.window_for(graph_n);
      auto f = sample_for(graph_model, graph_n, q, cfg.master_seed);
      auto g = paley::build_graph(f);
      OutputSink sink(cfg.output_path);
      paley::write_edge_list(sink.stream(), g);
    } else if (*clique_cmd) {
      auto cfg = make_config(clique_opts);
      std::uint64_t q = clique_opts.q_set ? clique_opts.q : cfg.window_for(clique_n);
      auto f = sample_for(clique_model, clique_n, q, cfg.master_seed);
      auto g = paley::build_graph(f);
      paley::CliqueResult result;
      if (clique_greedy) {
        result = paley::max_clique_greedy(g, clique_restarts, cfg.master_seed);
      } else {
        paley::SearchBudget budget{clique_max_nodes, clique_time_limit};
        result = paley::max_clique_exact(g, budget);
      }
      OutputSink sink(cfg.output_path);
      sink.stream() << paley::to_json(result).dump(2) << '\n';
    } else if (*conc_cmd) {
      auto cfg = make_config(conc_opts);
      if (!conc_models.empty()) {
        cfg.models.clear();
        for (const auto& m : conc_models) cfg.models.push_back(paley::model_from_name(m));
      }
      auto records = paley::run_concentration(cfg);
      OutputSink sink(cfg.output_path);
      if (conc_opts.format == "csv") {
        paley::write_summary_csv(sink.stream(), paley::summarize(records));
      } else {
        paley::write_records_jsonl(sink.stream(), records);
      }
    } else if (*bc_cmd) {
      auto cfg = make_config(bc_opts);
      cfg.models = {paley::Model::multiplicative};
      auto summaries = paley::run_borel_cantelli(cfg);
      OutputSink sink(cfg.output_path);
      for (const auto& s : summaries) sink.stream() << paley::to_json(s).dump() << '\n';
    } else if (*scan_cmd) {
      auto records = paley::nt::least_qnr_scan(scan_limit);
      OutputSink sink(scan_opts.out);
      paley::nt::write_qnr_csv(sink.stream(), records);
    } else if (*char_cmd) {
      auto cfg = make_config(char_opts);
      auto records = paley::run_character_baseline(cfg);
      OutputSink sink(cfg.output_path);
      if (char_opts.format == "csv") {
        paley::write_summary_csv(sink.stream(), paley::summarize(records));
      } else {
        paley::write_records_jsonl(sink.stream(), records);
      }
    } else if (*fourier_cmd) {
      auto cfg = make_config(fourier_opts);
      std::uint64_t q = fourier_opts.q_set ? fourier_opts.q : cfg.window_for(fourier_n);
      OutputSink sink(cfg.output_path);
      if (fourier_tail) {
        auto est = paley::tail_probability_estimate(
            fourier_n, q, fourier_level, cfg.trials, cfg.master_seed);
        sink.stream() << nlohmann::json{{"N", fourier_n},
                                        {"Q", q},
                                        {"level", fourier_level},
                                        {"trials", est.trials},
                                        {"hits", est.hits},
                                        {"frequency", est.frequency},
                                        {"ci_low", est.ci_low},
                                        {"ci_high", est.ci_high}}
                             .dump(2)
                      << '\n';
      } else {
        auto f = paley::sample_multiplicative(fourier_n, q, cfg.master_seed);
        auto g = paley::window_g(f);
        auto scan = paley::sup_fourier(g, fourier_level);
        sink.stream() << paley::to_json(scan).dump(2) << '\n';
      }
    } else if (*indep_cmd) {
      OutputSink sink(indep_opts.out);
      if (indep_opts.format == "csv") {
        auto t = paley::indep::count_patterns(indep_x, indep_y);
        paley::indep::write_counts_csv(sink.stream(), t);
      } else {
        sink.stream() << paley::indep::summary_json(indep_x, indep_y).dump(2) << '\n';
      }
    } else if (*sm_cmd) {
      auto cfg = make_config(sm_opts);
      auto u = paley::enumerate_U(sm_n, sm_k);
      std::uint64_t trials = cfg.trials;
      double sum_r = 0.0;
      std::uint64_t q = cfg.q_override.value_or(paley::default_q(sm_n, cfg.c));
      for (std::uint64_t t = 0; t < trials; ++t) {
        std::uint64_t seed = paley::derive_subseed(cfg.master_seed, sm_n, t);
        auto f = paley::sample_multiplicative(sm_n, q, seed);
        sum_r += static_cast<double>(paley::count_R(f, u));
      }
      OutputSink sink(cfg.output_path);
      sink.stream() << nlohmann::json{{"N", sm_n},
                                      {"k", sm_k},
                                      {"family_size", u.count},
                                      {"expected_R", paley::expected_R(u)},
                                      {"trials", trials},
                                      {"mean_R", trials ? sum_r / static_cast<double>(trials) : 0.0}}
                           .dump(2)
                    << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
