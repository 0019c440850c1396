#include <doctest.h>

#include "paley/cayley_graph.hpp"
#include "paley/clique_solver.hpp"
#include "paley/errors.hpp"
#include "paley/rng.hpp"

using namespace paley;

namespace {

SumGraph graph_from_edges(std::uint64_t n,
                          const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
  SumGraph g;
  g.n = n;
  g.row_words = (n + 63) / 64;
  g.bits.assign(g.n * g.row_words, 0);
  for (auto [u, v] : edges) {
    g.row(u)[v / 64] |= 1ULL << (v % 64);
    g.row(v)[u / 64] |= 1ULL << (u % 64);
  }
  return g;
}

SumGraph complete_graph(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  for (std::uint64_t u = 0; u < n; ++u)
    for (std::uint64_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return graph_from_edges(n, edges);
}

// random graph with edge probability numer/denom
SumGraph random_graph(std::uint64_t n, WordStream& ws, std::uint64_t numer,
                      std::uint64_t denom) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  for (std::uint64_t u = 0; u < n; ++u) {
    for (std::uint64_t v = u + 1; v < n; ++v) {
      if (bounded(ws, denom) < numer) edges.emplace_back(u, v);
    }
  }
  return graph_from_edges(n, edges);
}

}  // namespace

TEST_CASE("exact solver on trivial graphs") {
  SumGraph k8 = complete_graph(8);
  CliqueResult r = max_clique_exact(k8);
  CHECK(r.size == 8);
  CHECK(r.optimal);
  CHECK(is_clique(k8, r.witness));

  SumGraph edgeless = graph_from_edges(6, {});
  r = max_clique_exact(edgeless);
  CHECK(r.size == 1);
  CHECK(r.optimal);
}

TEST_CASE("brute force on trivial graphs") {
  // 5-cycle
  SumGraph c5 = graph_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(brute_force_max_clique(c5).size == 2);

  // K4 minus one edge
  SumGraph k4m = graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(brute_force_max_clique(k4m).size == 3);

  SumGraph big = complete_graph(31);
  CHECK_THROWS_AS(brute_force_max_clique(big), CapacityError);
}

TEST_CASE("exact equals brute force on 200 random graphs") {
  WordStream ws(31337);
  for (int trial = 0; trial < 200; ++trial) {
    std::uint64_t n = 5 + bounded(ws, 20);           // n in [5, 24]
    std::uint64_t numer = 1 + bounded(ws, 9);        // density in [0.1, 0.9]
    SumGraph g = random_graph(n, ws, numer, 10);
    CliqueResult exact = max_clique_exact(g);
    CliqueResult brute = brute_force_max_clique(g);
    CAPTURE(trial);
    CAPTURE(n);
    CHECK(exact.size == brute.size);
    CHECK(exact.optimal);
    CHECK(is_clique(g, exact.witness));
    CHECK(is_clique(g, brute.witness));
    CHECK(exact.witness.size() == exact.size);
  }
}

TEST_CASE("greedy solver") {
  SumGraph k9 = complete_graph(9);
  CliqueResult r = max_clique_greedy(k9, 3, 17);
  CHECK(r.size == 9);
  CHECK_FALSE(r.optimal);

  SumGraph edgeless = graph_from_edges(5, {});
  CHECK(max_clique_greedy(edgeless, 1, 17).size == 1);

  CHECK_THROWS_AS(max_clique_greedy(k9, 0, 17), std::domain_error);

  // dominance: greedy never exceeds the exact optimum
  WordStream ws(555);
  for (int trial = 0; trial < 100; ++trial) {
    std::uint64_t n = 8 + bounded(ws, 12);
    SumGraph g = random_graph(n, ws, 5, 10);
    CliqueResult greedy = max_clique_greedy(g, 5, ws.next());
    CliqueResult exact = max_clique_exact(g);
    CHECK(greedy.size <= exact.size);
    CHECK(is_clique(g, greedy.witness));
  }
}

TEST_CASE("monotone under edge augmentation") {
  WordStream ws(777);
  for (int trial = 0; trial < 50; ++trial) {
    std::uint64_t n = 10 + bounded(ws, 8);
    SumGraph g = random_graph(n, ws, 4, 10);
    std::uint64_t before = max_clique_exact(g).size;
    // add a random missing edge
    std::uint64_t u = bounded(ws, n);
    std::uint64_t v = bounded(ws, n);
    if (u != v && !g.adjacent(u, v)) {
      g.row(u)[v / 64] |= 1ULL << (v % 64);
      g.row(v)[u / 64] |= 1ULL << (u % 64);
    }
    CHECK(max_clique_exact(g).size >= before);
  }
}

TEST_CASE("solver determinism") {
  WordStream ws(808);
  SumGraph g = random_graph(40, ws, 5, 10);
  CliqueResult a = max_clique_exact(g);
  CliqueResult b = max_clique_exact(g);
  CHECK(a.size == b.size);
  CHECK(a.witness == b.witness);
  CHECK(a.nodes_expanded == b.nodes_expanded);
}

TEST_CASE("budget exhaustion reports a valid lower bound") {
  WordStream ws(909);
  SumGraph g = random_graph(120, ws, 5, 10);
  SearchBudget tiny;
  tiny.max_nodes = 5;
  CliqueResult r = max_clique_exact(g, tiny);
  CHECK_FALSE(r.optimal);
  CHECK(r.size >= 1);
  CHECK(is_clique(g, r.witness));
  CHECK(r.size <= max_clique_exact(g).size);
}

TEST_CASE("coloring upper bound dominates the clique number") {
  WordStream ws(111);
  for (int trial = 0; trial < 20; ++trial) {
    SumGraph g = random_graph(30, ws, 5, 10);
    CHECK(coloring_upper_bound(g) >= max_clique_exact(g).size);
  }
}
