#ifndef PALEY_NUMBER_THEORY_HPP
#define PALEY_NUMBER_THEORY_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

namespace paley::nt {

inline constexpr std::uint64_t kDefaultSieveCap = 100'000'000ULL;

struct PrimeList {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;

  // pi(x) for x <= limit.
  std::size_t count_upto(std::uint64_t x) const;
};

PrimeList sieve_primes(std::uint64_t limit, std::uint64_t cap = kDefaultSieveCap);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Euler's criterion; p must be an odd prime. Result in {-1, 0, +1}.
int legendre_symbol(std::int64_t a, std::uint64_t p);

// Binary reciprocity; n must be odd and positive.
int jacobi_symbol(std::int64_t a, std::uint64_t n);

// {x^2 mod p : 1 <= x <= p-1}, ascending; size (p-1)/2.
std::vector<std::uint64_t> quadratic_residues(std::uint64_t p);

// Smallest a >= 2 with (a/p) = -1. Always prime.
std::uint64_t least_qnr(std::uint64_t p);

struct QnrRecord {
  std::uint64_t p = 0;
  std::uint64_t lqnr = 0;
  std::optional<double> ratio;  // lqnr / (log2 p * log2 log2 log2 p)
  bool is_running_max = false;
};

std::vector<QnrRecord> least_qnr_scan(std::uint64_t limit);

// CSV with header `p,lqnr,ratio` (ratio column empty when undefined).
void write_qnr_csv(std::ostream& os, const std::vector<QnrRecord>& records);

}  // namespace paley::nt

#endif
