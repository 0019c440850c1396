#include "paley/clique_solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "paley/errors.hpp"
#include "paley/rng.hpp"

namespace paley {

namespace {

using Clock = std::chrono::steady_clock;

inline void bs_set(std::uint64_t* b, std::size_t i) { b[i / 64] |= 1ULL << (i % 64); }
inline void bs_clear(std::uint64_t* b, std::size_t i) { b[i / 64] &= ~(1ULL << (i % 64)); }
inline bool bs_test(const std::uint64_t* b, std::size_t i) {
  return (b[i / 64] >> (i % 64)) & 1;
}

inline bool bs_empty(const std::uint64_t* b, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w)
    if (b[w]) return false;
  return true;
}

inline void bs_and(std::uint64_t* dst, const std::uint64_t* a,
                   const std::uint64_t* b, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) dst[w] = a[w] & b[w];
}

// Exact max-clique search state. Vertices are renumbered by descending
// degree up front; adjacency is re-packed in that order so candidate sets
// stay word-parallel.
struct ExactSearch {
  std::size_t n;
  std::size_t words;
  std::vector<std::uint64_t> adj;        // renumbered adjacency, n rows
  std::vector<std::uint64_t> order;      // internal index -> original vertex

  std::vector<std::uint64_t> cand_buf;   // candidate bitsets, one per depth
  std::vector<std::uint64_t> color_buf;  // coloring scratch, 2 bitsets per depth
  std::vector<std::uint64_t> class_buf;  // color classes, shared across depths
  std::vector<std::uint32_t> vert_list;  // color-sorted candidates per depth
  std::vector<std::uint32_t> col_list;
  std::vector<std::uint32_t> current;

  std::uint64_t best = 0;
  std::vector<std::uint32_t> best_clique;
  std::uint64_t nodes = 0;

  std::uint64_t max_nodes;
  Clock::time_point deadline;
  bool has_deadline;
  bool aborted = false;

  const std::uint64_t* adj_row(std::size_t v) const { return adj.data() + v * words; }

  bool out_of_budget() {
    if (max_nodes && nodes >= max_nodes) return true;
    if (has_deadline && (nodes & 1023) == 0 && Clock::now() >= deadline) return true;
    return false;
  }

  // Move v into a color class below `threshold` by the standard two-swap:
  // find a class c1 < threshold where v has a single neighbor w, then a class
  // c2 < threshold (c2 != c1) with no neighbor of w. Returns the new color or
  // 0 when no swap exists.
  std::uint32_t renumber(std::size_t v, std::uint32_t threshold) {
    const std::uint64_t* vrow = adj_row(v);
    for (std::uint32_t c1 = 1; c1 < threshold; ++c1) {
      std::uint64_t* class1 = class_buf.data() + c1 * words;
      std::size_t w = n;
      int hits = 0;
      for (std::size_t k = 0; k < words && hits < 2; ++k) {
        std::uint64_t inter = class1[k] & vrow[k];
        while (inter) {
          w = k * 64 + static_cast<std::size_t>(std::countr_zero(inter));
          inter &= inter - 1;
          if (++hits == 2) break;
        }
      }
      if (hits == 0) {
        bs_set(class1, v);
        return c1;
      }
      if (hits != 1) continue;
      const std::uint64_t* wrow = adj_row(w);
      for (std::uint32_t c2 = c1 + 1; c2 < threshold; ++c2) {
        std::uint64_t* class2 = class_buf.data() + c2 * words;
        bool clash = false;
        for (std::size_t k = 0; k < words; ++k) {
          if (class2[k] & wrow[k]) {
            clash = true;
            break;
          }
        }
        if (!clash) {
          bs_clear(class1, w);
          bs_set(class2, w);
          bs_set(class1, v);
          return c1;
        }
      }
    }
    return 0;
  }

  // Greedy sequential coloring of the candidate set with recoloring of
  // vertices that land at or above `threshold`. Fills vert/col lists in
  // nondecreasing color order and returns the number of listed vertices.
  std::size_t color_sort(const std::uint64_t* cand, std::uint32_t threshold,
                         std::uint32_t* verts, std::uint32_t* cols,
                         std::uint64_t* scratch) {
    std::uint64_t* uncolored = scratch;
    std::uint64_t* cls = scratch + words;
    std::copy(cand, cand + words, uncolored);
    std::size_t count = 0;
    std::uint32_t color = 0;
    // color_of doubles as the output order; low colors first, renumbered
    // vertices appended to their new class position later via counting sort
    std::uint32_t* color_of = cols;  // reuse: filled per list slot below
    (void)color_of;
    while (!bs_empty(uncolored, words)) {
      ++color;
      std::uint64_t* cur_class = class_buf.data() + color * words;
      std::fill(cur_class, cur_class + words, 0);
      std::copy(uncolored, uncolored + words, cls);
      while (true) {
        std::size_t v = n;
        for (std::size_t w = 0; w < words; ++w) {
          if (cls[w]) {
            v = w * 64 + static_cast<std::size_t>(std::countr_zero(cls[w]));
            break;
          }
        }
        if (v >= n) break;
        bs_clear(uncolored, v);
        bs_clear(cls, v);
        const std::uint64_t* row = adj_row(v);
        for (std::size_t w = v / 64; w < words; ++w) cls[w] &= ~row[w];
        std::uint32_t assigned = color;
        if (color >= threshold && threshold > 1) {
          std::uint32_t moved = renumber(v, threshold);
          if (moved != 0) assigned = moved;
        }
        if (assigned == color) bs_set(cur_class, v);
        verts[count] = static_cast<std::uint32_t>(v);
        cols[count] = assigned;
        ++count;
      }
    }
    // restore nondecreasing color order after renumber moves
    if (count > 1) {
      std::uint32_t* vtmp = verts;
      std::uint32_t* ctmp = cols;
      bool sorted = true;
      for (std::size_t i = 1; i < count; ++i) {
        if (ctmp[i] < ctmp[i - 1]) {
          sorted = false;
          break;
        }
      }
      if (!sorted) {
        // stable insertion by color; lists are short and nearly sorted
        for (std::size_t i = 1; i < count; ++i) {
          std::uint32_t cv = ctmp[i];
          std::uint32_t vv = vtmp[i];
          std::size_t j = i;
          while (j > 0 && ctmp[j - 1] > cv) {
            ctmp[j] = ctmp[j - 1];
            vtmp[j] = vtmp[j - 1];
            --j;
          }
          ctmp[j] = cv;
          vtmp[j] = vv;
        }
      }
    }
    return count;
  }

  void expand(std::size_t depth, std::uint64_t* cand) {
    ++nodes;
    if (out_of_budget()) {
      aborted = true;
      return;
    }
    std::uint32_t* verts = vert_list.data() + depth * n;
    std::uint32_t* cols = col_list.data() + depth * n;
    std::uint32_t threshold =
        best >= depth ? static_cast<std::uint32_t>(best - depth + 1) : 1;
    std::size_t count = color_sort(cand, threshold, verts, cols,
                                   color_buf.data() + depth * 2 * words);

    for (std::size_t i = count; i-- > 0;) {
      if (depth + cols[i] <= best) return;
      std::uint32_t v = verts[i];
      current[depth] = v;
      std::uint64_t* next = cand_buf.data() + (depth + 1) * words;
      bs_and(next, cand, adj_row(v), words);
      if (bs_empty(next, words)) {
        if (depth + 1 > best) {
          best = depth + 1;
          best_clique.assign(current.begin(), current.begin() + depth + 1);
        }
      } else {
        expand(depth + 1, next);
        if (aborted) return;
      }
      bs_clear(cand, v);
    }
  }
};

std::vector<std::uint64_t> degree_order(const SumGraph& g) {
  std::vector<std::uint64_t> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::uint64_t> deg(g.n);
  for (std::uint64_t v = 0; v < g.n; ++v) deg[v] = g.degree(v);
  std::stable_sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
    if (deg[a] != deg[b]) return deg[a] > deg[b];
    return a < b;
  });
  return order;
}

// Deterministic greedy clique along a given order; used for the initial
// incumbent of the exact search.
std::vector<std::uint32_t> greedy_seed_clique(const SumGraph& g,
                                              const std::vector<std::uint64_t>& order,
                                              const std::vector<std::uint64_t>& pos) {
  std::vector<std::uint32_t> clique;
  for (std::uint64_t v : order) {
    bool ok = true;
    for (std::uint32_t u : clique) {
      if (!g.adjacent(v, order[u])) {
        ok = false;
        break;
      }
    }
    if (ok) clique.push_back(static_cast<std::uint32_t>(pos[v]));
  }
  return clique;
}

}  // namespace

CliqueResult max_clique_exact(const SumGraph& g, const SearchBudget& budget) {
  auto t0 = Clock::now();
  CliqueResult result;
  if (g.n == 0) {
    result.optimal = true;
    return result;
  }

  ExactSearch s;
  s.n = g.n;
  s.words = (g.n + 63) / 64;
  s.order = degree_order(g);
  std::vector<std::uint64_t> pos(g.n);
  for (std::size_t i = 0; i < g.n; ++i) pos[s.order[i]] = i;

  s.adj.assign(s.n * s.words, 0);
  for (std::size_t i = 0; i < s.n; ++i) {
    const std::uint64_t* row = g.row(s.order[i]);
    for (std::size_t j = 0; j < s.n; ++j) {
      if ((row[s.order[j] / 64] >> (s.order[j] % 64)) & 1) {
        bs_set(s.adj.data() + i * s.words, j);
      }
    }
  }

  std::size_t max_depth = s.n + 2;
  s.cand_buf.assign(max_depth * s.words, 0);
  s.color_buf.assign(max_depth * 2 * s.words, 0);
  s.class_buf.assign((s.n + 2) * s.words, 0);
  s.vert_list.assign(max_depth * s.n, 0);
  s.col_list.assign(max_depth * s.n, 0);
  s.current.assign(max_depth, 0);

  s.max_nodes = budget.max_nodes;
  s.has_deadline = budget.time_limit_ms > 0.0;
  if (s.has_deadline) {
    s.deadline = t0 + std::chrono::microseconds(
                          static_cast<std::int64_t>(budget.time_limit_ms * 1000.0));
  }

  std::vector<std::uint32_t> seed = greedy_seed_clique(g, s.order, pos);
  s.best = seed.size();
  s.best_clique = seed;

  // warm start: randomized greedy restarts with a fixed internal seed keep
  // the search deterministic while tightening the initial bound
  if (g.n > 64) {
    CliqueResult warm = max_clique_greedy(g, 512, kGolden ^ g.n);
    if (warm.size > s.best) {
      s.best = warm.size;
      s.best_clique.clear();
      for (std::uint64_t v : warm.witness) {
        s.best_clique.push_back(static_cast<std::uint32_t>(pos[v]));
      }
    }
  }

  std::uint64_t* root = s.cand_buf.data();
  for (std::size_t i = 0; i < s.n; ++i) bs_set(root, i);
  s.expand(0, root);

  result.size = s.best;
  result.witness.reserve(s.best_clique.size());
  for (std::uint32_t v : s.best_clique) result.witness.push_back(s.order[v]);
  std::sort(result.witness.begin(), result.witness.end());
  result.optimal = !s.aborted;
  result.nodes_expanded = s.nodes;
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return result;
}

namespace {

struct BruteSearch {
  const std::vector<std::uint64_t>* adj;
  std::uint64_t best_mask = 0;
  int best = 0;

  void recurse(std::uint64_t cand, std::uint64_t cur, int size) {
    if (cand == 0) {
      if (size > best) {
        best = size;
        best_mask = cur;
      }
      return;
    }
    std::uint64_t v = static_cast<std::uint64_t>(std::countr_zero(cand));
    std::uint64_t bit = 1ULL << v;
    recurse(cand & ~bit & (*adj)[v], cur | bit, size + 1);
    recurse(cand & ~bit, cur, size);
  }
};

}  // namespace

CliqueResult brute_force_max_clique(const SumGraph& g) {
  if (g.n > 30) {
    throw CapacityError("brute_force_max_clique: n must be <= 30");
  }
  auto t0 = Clock::now();
  std::vector<std::uint64_t> adj(g.n, 0);
  for (std::uint64_t u = 0; u < g.n; ++u) {
    for (std::uint64_t v = 0; v < g.n; ++v) {
      if (u != v && g.adjacent(u, v)) adj[u] |= 1ULL << v;
    }
  }
  BruteSearch s;
  s.adj = &adj;
  s.recurse(g.n == 64 ? ~0ULL : (1ULL << g.n) - 1, 0, 0);

  CliqueResult result;
  result.size = static_cast<std::uint64_t>(s.best);
  for (std::uint64_t v = 0; v < g.n; ++v) {
    if ((s.best_mask >> v) & 1) result.witness.push_back(v);
  }
  result.optimal = true;
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return result;
}

CliqueResult max_clique_greedy(const SumGraph& g, std::uint64_t restarts,
                               std::uint64_t seed) {
  if (restarts < 1) {
    throw std::domain_error("max_clique_greedy: restarts must be >= 1");
  }
  auto t0 = Clock::now();
  WordStream ws(seed);
  std::vector<std::uint64_t> order(g.n);
  std::size_t words = (g.n + 63) / 64;
  std::vector<std::uint64_t> cand(words);

  CliqueResult result;
  for (std::uint64_t r = 0; r < restarts; ++r) {
    std::iota(order.begin(), order.end(), 0);
    for (std::uint64_t i = g.n; i > 1; --i) {
      std::uint64_t j = bounded(ws, i);
      std::swap(order[i - 1], order[j]);
    }
    std::vector<std::uint64_t> clique;
    std::fill(cand.begin(), cand.end(), ~0ULL);
    for (std::uint64_t v : order) {
      if (!bs_test(cand.data(), v)) continue;
      clique.push_back(v);
      bs_and(cand.data(), cand.data(), g.row(v), words);
    }
    if (clique.size() > result.size) {
      result.size = clique.size();
      std::sort(clique.begin(), clique.end());
      result.witness = std::move(clique);
    }
  }
  result.optimal = false;
  result.nodes_expanded = restarts;
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return result;
}

std::uint64_t coloring_upper_bound(const SumGraph& g) {
  if (g.n == 0) return 0;
  std::size_t words = (g.n + 63) / 64;
  std::vector<std::uint64_t> uncolored(words, 0);
  for (std::uint64_t v = 0; v < g.n; ++v) bs_set(uncolored.data(), v);
  std::vector<std::uint64_t> cls(words);
  std::uint64_t colors = 0;
  while (!bs_empty(uncolored.data(), words)) {
    ++colors;
    std::copy(uncolored.begin(), uncolored.end(), cls.begin());
    for (std::size_t w = 0; w < words; ++w) {
      while (cls[w]) {
        std::uint64_t v = w * 64 + static_cast<std::uint64_t>(std::countr_zero(cls[w]));
        if (v >= g.n) {
          cls[w] = 0;
          break;
        }
        bs_clear(uncolored.data(), v);
        bs_clear(cls.data(), v);
        const std::uint64_t* row = g.row(v);
        for (std::size_t w2 = w; w2 < words; ++w2) cls[w2] &= ~row[w2];
      }
    }
  }
  return colors;
}

nlohmann::json to_json(const CliqueResult& r) {
  return nlohmann::json{{"size", r.size},
                        {"witness", r.witness},
                        {"optimal", r.optimal},
                        {"nodes_expanded", r.nodes_expanded},
                        {"elapsed_ms", r.elapsed_ms}};
}

}  // namespace paley
