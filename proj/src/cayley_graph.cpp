#include "paley/cayley_graph.hpp"

#include <algorithm>
#include <bit>

namespace paley {

std::uint64_t SumGraph::degree(std::uint64_t v) const {
  std::uint64_t d = 0;
  const std::uint64_t* r = row(v);
  for (std::size_t w = 0; w < row_words; ++w) d += std::popcount(r[w]);
  return d;
}

std::uint64_t SumGraph::edge_count() const {
  std::uint64_t total = 0;
  for (std::uint64_t v = 0; v < n; ++v) total += degree(v);
  return total / 2;
}

SumGraph build_graph(const SignFunction& f) {
  SumGraph g;
  g.n = f.n;
  g.row_words = (f.n + 63) / 64;
  g.bits.assign(g.n * g.row_words, 0);
  g.model = f.model;
  g.q = f.q;
  g.seed = f.seed;
  g.has_seed = f.has_seed;

  for (std::uint64_t x = 0; x < g.n; ++x) {
    for (std::uint64_t y = x + 1; y < g.n; ++y) {
      std::uint64_t s = x + y;
      if (s >= g.n) s -= g.n;
      if (f.values[s] == 1) {
        g.row(x)[y / 64] |= 1ULL << (y % 64);
        g.row(y)[x / 64] |= 1ULL << (x % 64);
      }
    }
  }
  return g;
}

std::vector<std::uint64_t> restricted_sumset(std::span<const std::uint64_t> a,
                                             std::uint64_t n) {
  std::vector<std::uint64_t> out;
  out.reserve(a.size() * (a.size() > 0 ? a.size() - 1 : 0) / 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      std::uint64_t s = (a[i] % n) + (a[j] % n);
      if (s >= n) s -= n;
      out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_clique(const SumGraph& g, std::span<const std::uint64_t> a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] == a[j]) continue;
      if (!g.adjacent(a[i], a[j])) return false;
    }
  }
  return true;
}

void write_edge_list(std::ostream& os, const SumGraph& g) {
  for (std::uint64_t u = 0; u < g.n; ++u) {
    for (std::uint64_t v = u + 1; v < g.n; ++v) {
      if (g.adjacent(u, v)) os << u << ' ' << v << '\n';
    }
  }
}

}  // namespace paley
