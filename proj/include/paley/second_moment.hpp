#ifndef PALEY_SECOND_MOMENT_HPP
#define PALEY_SECOND_MOMENT_HPP

#include <cstdint>
#include <ostream>
#include <vector>

#include "paley/sign_models.hpp"

namespace paley {

// Family of k-subsets of [ceil(N/4), floor(N/2)] whose pairwise sums of
// distinct elements are all distinct (|A +^ A| = k(k-1)/2).
struct UFamily {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t interval_lo = 0;
  std::uint64_t interval_hi = 0;
  std::vector<std::vector<std::uint32_t>> members;
  std::uint64_t count = 0;
};

UFamily enumerate_U(std::uint64_t n, std::uint64_t k,
                    std::uint64_t candidate_cap = 10'000'000);

// Number of members whose restricted sumset lies in {x : f(x) = +1}.
std::uint64_t count_R(const SignFunction& f, const UFamily& u);

// U.count * 2^{-k(k-1)/2}; exact for the multiplicative model since the
// members' sums avoid [1, Q].
double expected_R(const UFamily& u);

// JSON lines, one member per line.
void write_ufamily_jsonl(std::ostream& os, const UFamily& u);

}  // namespace paley

#endif
