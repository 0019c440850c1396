#include <doctest.h>

#include <cmath>
#include <sstream>

#include "paley/cayley_graph.hpp"
#include "paley/rng.hpp"

using namespace paley;

namespace {

SignFunction constant_function(std::uint64_t n, int sign) {
  SignFunction f;
  f.n = n;
  f.model = Model::iid;
  f.values.assign(n, static_cast<std::int8_t>(sign));
  return f;
}

}  // namespace

TEST_CASE("complete and empty graphs") {
  SumGraph complete = build_graph(constant_function(11, 1));
  for (std::uint64_t u = 0; u < 11; ++u) {
    CHECK_FALSE(complete.adjacent(u, u));
    for (std::uint64_t v = 0; v < 11; ++v) {
      if (u != v) CHECK(complete.adjacent(u, v));
    }
  }
  CHECK(complete.edge_count() == 11 * 10 / 2);

  SumGraph empty = build_graph(constant_function(11, -1));
  CHECK(empty.edge_count() == 0);
}

TEST_CASE("hand-evaluated 5-vertex graph") {
  SignFunction f;
  f.n = 5;
  f.model = Model::iid;
  f.values = {1, -1, 1, -1, 1};
  SumGraph g = build_graph(f);
  CHECK(g.adjacent(0, 2));        // f(2) = +1
  CHECK_FALSE(g.adjacent(0, 1));  // f(1) = -1
  CHECK(g.adjacent(1, 4));        // 1+4 = 0 mod 5, f(0) = +1
  CHECK(g.adjacent(2, 3));        // 2+3 = 0 mod 5
  CHECK_FALSE(g.adjacent(1, 2));  // f(3) = -1
}

TEST_CASE("adjacency symmetric and loop-free") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SignFunction f = sample_iid(101, seed);
    SumGraph g = build_graph(f);
    for (std::uint64_t u = 0; u < g.n; ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      for (std::uint64_t v = u + 1; v < g.n; ++v) {
        CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        std::uint64_t s = (u + v) % g.n;
        CHECK(g.adjacent(u, v) == (f.values[s] == 1));
      }
    }
  }
}

TEST_CASE("character graph has no zero-sum edges") {
  SignFunction chi = character_function(13);
  SumGraph g = build_graph(chi);
  for (std::uint64_t x = 1; x < 13; ++x) {
    CHECK_FALSE(g.adjacent(x, 13 - x));
  }
}

TEST_CASE("restricted_sumset") {
  std::vector<std::uint64_t> a{1, 2};
  CHECK(restricted_sumset(a, 101) == std::vector<std::uint64_t>{3});

  std::vector<std::uint64_t> single{5};
  CHECK(restricted_sumset(single, 101).empty());

  std::vector<std::uint64_t> b{1, 2, 4};
  CHECK(restricted_sumset(b, 101) == std::vector<std::uint64_t>{3, 5, 6});

  // wraparound
  std::vector<std::uint64_t> c{3, 4};
  CHECK(restricted_sumset(c, 5) == std::vector<std::uint64_t>{2});
}

TEST_CASE("is_clique agrees with the sumset formulation") {
  WordStream ws(404);
  for (int trial = 0; trial < 100; ++trial) {
    SignFunction f = sample_iid(101, ws.next());
    SumGraph g = build_graph(f);
    std::vector<std::uint64_t> a;
    std::uint64_t size = 2 + bounded(ws, 6);
    while (a.size() < size) {
      std::uint64_t v = bounded(ws, 101);
      bool dup = false;
      for (std::uint64_t u : a) dup |= (u == v);
      if (!dup) a.push_back(v);
    }
    bool clique = is_clique(g, a);
    bool sumset_pos = true;
    for (std::uint64_t s : restricted_sumset(a, 101)) {
      if (f.values[s] != 1) sumset_pos = false;
    }
    CHECK(clique == sumset_pos);
  }
}

TEST_CASE("trivial cliques") {
  SumGraph g = build_graph(constant_function(9 + 2, 1));  // K_11
  std::vector<std::uint64_t> empty;
  CHECK(is_clique(g, empty));
  std::vector<std::uint64_t> singleton{3};
  CHECK(is_clique(g, singleton));
  std::vector<std::uint64_t> all{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  CHECK(is_clique(g, all));
}

TEST_CASE("iid edge density near one half") {
  SignFunction f = sample_iid(10007, 2024);
  SumGraph g = build_graph(f);
  double pairs = 10007.0 * 10006.0 / 2.0;
  double density = static_cast<double>(g.edge_count()) / pairs;
  // each residue s carries exactly (N-1)/2 pairs, so density = #{f=1}/N
  double sigma = 0.5 / std::sqrt(10007.0);
  CHECK(std::abs(density - 0.5) < 4.0 * sigma);
}

TEST_CASE("edge list export") {
  SignFunction f;
  f.n = 5;
  f.model = Model::iid;
  f.values = {1, -1, 1, -1, 1};
  SumGraph g = build_graph(f);
  std::ostringstream os;
  write_edge_list(os, g);
  std::istringstream is(os.str());
  std::string line;
  std::uint64_t count = 0;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::uint64_t u, v;
    ls >> u >> v;
    CHECK(u < v);
    CHECK(g.adjacent(u, v));
    ++count;
  }
  CHECK(count == g.edge_count());
}
