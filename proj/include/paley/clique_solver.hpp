#ifndef PALEY_CLIQUE_SOLVER_HPP
#define PALEY_CLIQUE_SOLVER_HPP

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "paley/cayley_graph.hpp"

namespace paley {

struct SearchBudget {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  double time_limit_ms = 0.0;   // 0 = unlimited
};

struct CliqueResult {
  std::uint64_t size = 0;
  std::vector<std::uint64_t> witness;
  bool optimal = false;
  std::uint64_t nodes_expanded = 0;
  double elapsed_ms = 0.0;
};

// Branch and bound with greedy-coloring upper bounds over bitset candidate
// sets. Deterministic: initial order by descending degree, ties toward the
// lower vertex index.
CliqueResult max_clique_exact(const SumGraph& g, const SearchBudget& budget = {});

// Exhaustive subset search, n <= 30. Always optimal.
CliqueResult brute_force_max_clique(const SumGraph& g);

// Randomized greedy extension from shuffled vertex orders. Never claims
// optimality; the witness is always a valid clique.
CliqueResult max_clique_greedy(const SumGraph& g, std::uint64_t restarts,
                               std::uint64_t seed);

// Greedy-coloring upper bound on the clique number of the whole graph.
std::uint64_t coloring_upper_bound(const SumGraph& g);

nlohmann::json to_json(const CliqueResult& r);

}  // namespace paley

#endif
