#include "paley/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "paley/cayley_graph.hpp"
#include "paley/number_theory.hpp"
#include "paley/rng.hpp"

namespace paley {

std::uint64_t ExperimentConfig::window_for(std::uint64_t n) const {
  if (q_override) return *q_override;
  return default_q(n, c);
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw std::domain_error("config: trials must be >= 1");
  if (primes.empty()) throw std::domain_error("config: no primes listed");
  if (c <= 0.0 || c >= 0.5) throw std::domain_error("config: c must lie in (0, 0.5)");
  for (std::uint64_t n : primes) {
    if (!nt::is_prime(n)) {
      throw std::domain_error("config: " + std::to_string(n) + " is not prime");
    }
    if (2 * window_for(n) >= n) {
      throw std::domain_error("config: Q(N) >= N/2 at N = " + std::to_string(n));
    }
  }
}

nlohmann::json to_json(const ExperimentRecord& r) {
  nlohmann::json j{{"schema", kSchemaVersion},
                   {"N", r.n},
                   {"Q", r.q},
                   {"model", model_name(r.model)},
                   {"trial_index", r.trial_index},
                   {"seed", r.seed},
                   {"omega", r.omega},
                   {"optimal", r.optimal}};
  if (r.all_small_primes_positive) {
    j["all_small_primes_positive"] = *r.all_small_primes_positive;
  }
  return j;
}

ExperimentRecord record_from_json(const nlohmann::json& j) {
  ExperimentRecord r;
  r.n = j.at("N").get<std::uint64_t>();
  r.q = j.at("Q").get<std::uint64_t>();
  r.model = model_from_name(j.at("model").get<std::string>());
  r.trial_index = j.at("trial_index").get<std::uint64_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.omega = j.at("omega").get<std::uint64_t>();
  r.optimal = j.at("optimal").get<bool>();
  r.elapsed_ms = j.value("elapsed_ms", 0.0);
  if (j.contains("all_small_primes_positive")) {
    r.all_small_primes_positive = j.at("all_small_primes_positive").get<bool>();
  }
  return r;
}

namespace {

bool all_small_primes_positive(const SignFunction& f) {
  auto pl = nt::sieve_primes(f.q);
  for (std::uint64_t p : pl.primes) {
    if (f.values[p] != 1) return false;
  }
  return true;
}

}  // namespace

std::vector<ExperimentRecord> run_concentration(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<ExperimentRecord> records;
  for (std::uint64_t n : cfg.primes) {
    std::uint64_t q = cfg.window_for(n);
    for (Model model : cfg.models) {
      for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
        ExperimentRecord rec;
        rec.n = n;
        rec.model = model;
        rec.trial_index = trial;
        rec.seed = derive_subseed(cfg.master_seed, n, trial);

        SignFunction f;
        switch (model) {
          case Model::multiplicative:
            rec.q = q;
            f = sample_multiplicative(n, q, rec.seed);
            rec.all_small_primes_positive = all_small_primes_positive(f);
            break;
          case Model::iid:
            f = sample_iid(n, rec.seed);
            break;
          case Model::character:
            f = character_function(n);
            break;
        }
        SumGraph g = build_graph(f);
        CliqueResult cr = max_clique_exact(g, cfg.solver_budget);
        rec.omega = cr.size;
        rec.optimal = cr.optimal;
        rec.elapsed_ms = cr.elapsed_ms;
        records.push_back(std::move(rec));

        if (model == Model::character) break;  // deterministic, one trial
      }
    }
  }
  return records;
}

std::vector<BorelCantelliSummary> run_borel_cantelli(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<BorelCantelliSummary> out;
  for (std::uint64_t n : cfg.primes) {
    BorelCantelliSummary s;
    s.n = n;
    s.q = cfg.window_for(n);
    s.pi_q = nt::sieve_primes(s.q).primes.size();
    s.trials = cfg.trials;
    s.predicted_probability = std::exp2(-static_cast<double>(s.pi_q));

    for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
      std::uint64_t seed = derive_subseed(cfg.master_seed, n, trial);
      SignFunction f = sample_multiplicative(n, s.q, seed);
      if (all_small_primes_positive(f)) ++s.event_count;
    }
    s.observed_frequency =
        static_cast<double>(s.event_count) / static_cast<double>(s.trials);
    double p = s.observed_frequency;
    double half = 2.5758 * std::sqrt(p * (1.0 - p) / static_cast<double>(s.trials));
    s.ci_low = std::max(0.0, p - half);
    s.ci_high = std::min(1.0, p + half);

    // forced all-+1 sample: {1, ..., floor(Q/2)} must span a clique
    Conditioning cond;
    for (std::uint64_t prime : nt::sieve_primes(s.q).primes) cond.forced[prime] = 1;
    SignFunction forced =
        sample_multiplicative_conditioned(n, s.q, cfg.master_seed, cond);
    SumGraph g = build_graph(forced);
    s.forced_clique_size = s.q / 2;
    std::vector<std::uint64_t> candidate;
    for (std::uint64_t v = 1; v <= s.forced_clique_size; ++v) candidate.push_back(v);
    s.forced_clique_verified = is_clique(g, candidate);
    out.push_back(std::move(s));
  }
  return out;
}

nlohmann::json to_json(const BorelCantelliSummary& s) {
  return nlohmann::json{{"schema", kSchemaVersion},
                        {"N", s.n},
                        {"Q", s.q},
                        {"pi_Q", s.pi_q},
                        {"trials", s.trials},
                        {"event_count", s.event_count},
                        {"observed_frequency", s.observed_frequency},
                        {"predicted_probability", s.predicted_probability},
                        {"ci_low", s.ci_low},
                        {"ci_high", s.ci_high},
                        {"forced_clique_size", s.forced_clique_size},
                        {"forced_clique_verified", s.forced_clique_verified}};
}

namespace {

double quantile(std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0.0;
  double idx = p * static_cast<double>(sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(idx);
  std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  double frac = idx - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

}  // namespace

std::vector<SummaryRow> summarize(const std::vector<ExperimentRecord>& records) {
  if (records.empty()) throw std::domain_error("summarize: empty record set");
  // group by (N, model), preserving first-appearance order
  std::vector<SummaryRow> rows;
  for (const auto& rec : records) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const SummaryRow& r) {
      return r.n == rec.n && r.model == rec.model;
    });
    if (it == rows.end()) {
      SummaryRow row;
      row.n = rec.n;
      row.model = rec.model;
      rows.push_back(row);
    }
  }
  for (auto& row : rows) {
    std::vector<double> omegas;
    std::uint64_t optimal_count = 0;
    for (const auto& rec : records) {
      if (rec.n != row.n || rec.model != row.model) continue;
      omegas.push_back(static_cast<double>(rec.omega));
      if (rec.optimal) ++optimal_count;
    }
    std::sort(omegas.begin(), omegas.end());
    row.count = omegas.size();
    row.omega_min = static_cast<std::uint64_t>(omegas.front());
    row.omega_max = static_cast<std::uint64_t>(omegas.back());
    double sum = 0.0;
    for (double w : omegas) sum += w;
    row.omega_mean = sum / static_cast<double>(omegas.size());
    row.omega_median = quantile(omegas, 0.5);
    row.omega_q25 = quantile(omegas, 0.25);
    row.omega_q75 = quantile(omegas, 0.75);
    row.fraction_optimal =
        static_cast<double>(optimal_count) / static_cast<double>(omegas.size());
    row.omega_over_log2n = row.omega_mean / std::log2(static_cast<double>(row.n));
  }
  return rows;
}

std::vector<ExperimentRecord> run_character_baseline(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<ExperimentRecord> records;
  for (std::uint64_t n : cfg.primes) {
    ExperimentRecord rec;
    rec.n = n;
    rec.model = Model::character;
    SignFunction f = character_function(n);
    SumGraph g = build_graph(f);
    CliqueResult cr = max_clique_exact(g, cfg.solver_budget);
    rec.omega = cr.size;
    rec.optimal = cr.optimal;
    rec.elapsed_ms = cr.elapsed_ms;
    records.push_back(std::move(rec));
  }
  return records;
}

void write_records_jsonl(std::ostream& os,
                         const std::vector<ExperimentRecord>& records) {
  for (const auto& rec : records) os << to_json(rec).dump() << '\n';
}

std::vector<ExperimentRecord> read_records_jsonl(std::istream& is) {
  std::vector<ExperimentRecord> records;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    records.push_back(record_from_json(nlohmann::json::parse(line)));
  }
  return records;
}

void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows) {
  os << "N,model,count,omega_min,omega_max,omega_mean,omega_median,"
        "omega_q25,omega_q75,fraction_optimal,omega_over_log2N\n";
  for (const auto& r : rows) {
    os << r.n << ',' << model_name(r.model) << ',' << r.count << ','
       << r.omega_min << ',' << r.omega_max << ',' << r.omega_mean << ','
       << r.omega_median << ',' << r.omega_q25 << ',' << r.omega_q75 << ','
       << r.fraction_optimal << ',' << r.omega_over_log2n << '\n';
  }
}

ExperimentConfig load_config_file(std::istream& is) {
  ExperimentConfig cfg;
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) continue;

    if (key == "primes") {
      std::istringstream ss(value);
      std::string tok;
      while (std::getline(ss, tok, ',')) cfg.primes.push_back(std::stoull(trim(tok)));
    } else if (key == "models") {
      cfg.models.clear();
      std::istringstream ss(value);
      std::string tok;
      while (std::getline(ss, tok, ',')) cfg.models.push_back(model_from_name(trim(tok)));
    } else if (key == "c") {
      cfg.c = std::stod(value);
    } else if (key == "Q") {
      cfg.q_override = std::stoull(value);
    } else if (key == "trials") {
      cfg.trials = std::stoull(value);
    } else if (key == "master_seed" || key == "seed") {
      cfg.master_seed = std::stoull(value);
    } else if (key == "epsilon") {
      cfg.epsilon = std::stod(value);
    } else if (key == "max_nodes") {
      cfg.solver_budget.max_nodes = std::stoull(value);
    } else if (key == "time_limit_ms") {
      cfg.solver_budget.time_limit_ms = std::stod(value);
    } else if (key == "out" || key == "output_path") {
      cfg.output_path = value;
    } else {
      throw std::domain_error("config: unknown key '" + key + "'");
    }
  }
  return cfg;
}

}  // namespace paley
