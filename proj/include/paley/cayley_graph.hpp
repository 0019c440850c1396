#ifndef PALEY_CAYLEY_GRAPH_HPP
#define PALEY_CAYLEY_GRAPH_HPP

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "paley/sign_models.hpp"

namespace paley {

// Undirected sum graph on Z/NZ with packed bitset adjacency rows.
// Edge {x,y}, x != y, iff the generating sign at (x+y mod N) is +1.
struct SumGraph {
  std::uint64_t n = 0;
  std::size_t row_words = 0;
  std::vector<std::uint64_t> bits;  // n rows, row_words words each

  Model model = Model::iid;
  std::uint64_t q = 0;
  std::uint64_t seed = 0;
  bool has_seed = false;

  const std::uint64_t* row(std::uint64_t v) const { return bits.data() + v * row_words; }
  std::uint64_t* row(std::uint64_t v) { return bits.data() + v * row_words; }

  bool adjacent(std::uint64_t u, std::uint64_t v) const {
    return (row(u)[v / 64] >> (v % 64)) & 1;
  }

  std::uint64_t degree(std::uint64_t v) const;
  std::uint64_t edge_count() const;
};

SumGraph build_graph(const SignFunction& f);

// {a + a' mod N : a, a' in A, a != a'}, ascending without duplicates.
std::vector<std::uint64_t> restricted_sumset(std::span<const std::uint64_t> a,
                                             std::uint64_t n);

bool is_clique(const SumGraph& g, std::span<const std::uint64_t> a);

// `u v` per line, 0-indexed, u < v.
void write_edge_list(std::ostream& os, const SumGraph& g);

}  // namespace paley

#endif
