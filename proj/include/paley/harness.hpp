#ifndef PALEY_HARNESS_HPP
#define PALEY_HARNESS_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "paley/clique_solver.hpp"
#include "paley/sign_models.hpp"

namespace paley {

inline constexpr int kSchemaVersion = 1;

struct ExperimentConfig {
  std::vector<std::uint64_t> primes;
  std::vector<Model> models{Model::multiplicative, Model::iid};
  double c = 0.25;  // window rule coefficient, Q = round(c log2 N log2 log2 N)
  std::optional<std::uint64_t> q_override;
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;
  double epsilon = 0.1;
  SearchBudget solver_budget;
  std::string output_path;

  std::uint64_t window_for(std::uint64_t n) const;
  void validate() const;
};

struct ExperimentRecord {
  std::uint64_t n = 0;
  std::uint64_t q = 0;
  Model model = Model::iid;
  std::uint64_t trial_index = 0;
  std::uint64_t seed = 0;
  std::uint64_t omega = 0;
  bool optimal = false;
  std::optional<bool> all_small_primes_positive;  // multiplicative model only
  double elapsed_ms = 0.0;
};

nlohmann::json to_json(const ExperimentRecord& r);
ExperimentRecord record_from_json(const nlohmann::json& j);

// One trial per (N, model, trial_index): derive sub-seed, sample, build the
// graph, solve for the clique number. Deterministic in master_seed.
std::vector<ExperimentRecord> run_concentration(const ExperimentConfig& cfg);

struct BorelCantelliSummary {
  std::uint64_t n = 0;
  std::uint64_t q = 0;
  std::uint64_t pi_q = 0;
  std::uint64_t trials = 0;
  std::uint64_t event_count = 0;  // all primes <= Q drew +1
  double observed_frequency = 0.0;
  double predicted_probability = 0.0;  // exact 2^{-pi(Q)}
  double ci_low = 0.0;                 // 99% binomial CI on the frequency
  double ci_high = 0.0;
  // verification on the forced all-+1 sample
  std::uint64_t forced_clique_size = 0;  // floor(Q/2)
  bool forced_clique_verified = false;
};

std::vector<BorelCantelliSummary> run_borel_cantelli(const ExperimentConfig& cfg);

nlohmann::json to_json(const BorelCantelliSummary& s);

struct SummaryRow {
  std::uint64_t n = 0;
  Model model = Model::iid;
  std::uint64_t count = 0;
  std::uint64_t omega_min = 0;
  std::uint64_t omega_max = 0;
  double omega_mean = 0.0;
  double omega_median = 0.0;
  double omega_q25 = 0.0;
  double omega_q75 = 0.0;
  double fraction_optimal = 0.0;
  double omega_over_log2n = 0.0;  // mean omega / log2 N
};

std::vector<SummaryRow> summarize(const std::vector<ExperimentRecord>& records);

// Clique numbers of the true Paley sum graphs (deterministic, one record
// per prime; model tag = character).
std::vector<ExperimentRecord> run_character_baseline(const ExperimentConfig& cfg);

void write_records_jsonl(std::ostream& os, const std::vector<ExperimentRecord>& records);
std::vector<ExperimentRecord> read_records_jsonl(std::istream& is);
void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows);

// Flat key-value config file (`key = value` lines, `#` comments).
ExperimentConfig load_config_file(std::istream& is);

}  // namespace paley

#endif
