#ifndef PALEY_INDEPENDENCE_LAB_HPP
#define PALEY_INDEPENDENCE_LAB_HPP

#include <cstdint>
#include <ostream>
#include <vector>

#include <json.hpp>

namespace paley::indep {

inline constexpr std::size_t kMaxPatternBits = 20;

// Counts of Legendre-symbol patterns over primes p with y < p <= x.
// Pattern bit i corresponds to the i-th prime q <= y, set iff (q/p) = +1.
struct CountTable {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::size_t pattern_bits = 0;
  std::vector<std::uint64_t> counts;  // size 2^pattern_bits
  std::uint64_t total = 0;
};

// Coefficients N^(m) over divisors m of the primorial P_y, indexed by the
// same bitmask convention (bit i set iff the i-th prime divides m).
struct DivisorSpectrum {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::vector<std::uint64_t> primes;   // primes <= y
  std::vector<double> coefficients;    // size 2^pi(y)
};

// (legendre(q,p)) over primes q <= y, in ascending q order. Requires p > y.
std::vector<int> symbol_vector(std::uint64_t p, std::uint64_t y);

CountTable count_patterns(std::uint64_t x, std::uint64_t y);

// Var_s N(s) with uniform measure over all 2^pi(y) patterns.
double variance_direct(const CountTable& t);

DivisorSpectrum divisor_spectrum(std::uint64_t x, std::uint64_t y);

// sum over m != 1 of N^(m)^2.
double variance_parseval(const DivisorSpectrum& spec);

// Pattern counts reconstructed from the spectrum via the inverse transform
// N(s) = sum_{m | P_y} N^(m) prod_{q|m} s_q.
std::vector<double> reconstruct_counts(const DivisorSpectrum& spec);

// Exact null-model variance 2^{-pi(y)} (1 - 2^{-pi(y)}) * total for iid
// uniform symbol vectors.
double baseline_variance(std::uint64_t x, std::uint64_t y);

// Primes p in (x, 2x] whose symbol vector at y is all +1; for these
// least_qnr(p) > y by multiplicativity.
std::vector<std::uint64_t> montgomery_search(std::uint64_t x, std::uint64_t y);

void write_counts_csv(std::ostream& os, const CountTable& t);
void write_spectrum_csv(std::ostream& os, const DivisorSpectrum& spec);

// {x, y, variance_direct, variance_parseval, baseline, ratio}
nlohmann::json summary_json(std::uint64_t x, std::uint64_t y);

}  // namespace paley::indep

#endif
