#include "paley/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "paley/errors.hpp"

namespace paley::nt {

std::size_t PrimeList::count_upto(std::uint64_t x) const {
  auto it = std::upper_bound(primes.begin(), primes.end(), x);
  return static_cast<std::size_t>(it - primes.begin());
}

PrimeList sieve_primes(std::uint64_t limit, std::uint64_t cap) {
  if (limit > cap) {
    throw CapacityError("sieve_primes: limit " + std::to_string(limit) +
                        " exceeds cap " + std::to_string(cap));
  }
  PrimeList out;
  out.limit = limit;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p * p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  for (std::uint64_t p = 2; p <= limit; ++p)
    if (!composite[p]) out.primes.push_back(p);
  return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // Sufficient witness set for all n < 2^64 (Sorenson & Webster).
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

int legendre_symbol(std::int64_t a, std::uint64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw std::domain_error("legendre_symbol: modulus must be an odd prime");
  }
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  std::uint64_t ar = static_cast<std::uint64_t>(r);
  if (ar == 0) return 0;
  std::uint64_t e = pow_mod(ar, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

int jacobi_symbol(std::int64_t a, std::uint64_t n) {
  if (n == 0 || (n & 1) == 0) {
    throw std::domain_error("jacobi_symbol: modulus must be odd and positive");
  }
  std::int64_t r = a % static_cast<std::int64_t>(n);
  if (r < 0) r += static_cast<std::int64_t>(n);
  std::uint64_t u = static_cast<std::uint64_t>(r);
  int sign = 1;
  while (u != 0) {
    while ((u & 1) == 0) {
      u >>= 1;
      std::uint64_t m8 = n & 7;
      if (m8 == 3 || m8 == 5) sign = -sign;
    }
    std::swap(u, n);
    if ((u & 3) == 3 && (n & 3) == 3) sign = -sign;
    u %= n;
  }
  return n == 1 ? sign : 0;
}

std::vector<std::uint64_t> quadratic_residues(std::uint64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw std::domain_error("quadratic_residues: modulus must be an odd prime");
  }
  std::vector<bool> seen(p, false);
  for (std::uint64_t x = 1; x <= (p - 1) / 2; ++x) {
    seen[mul_mod(x, x, p)] = true;
  }
  std::vector<std::uint64_t> out;
  out.reserve((p - 1) / 2);
  for (std::uint64_t r = 1; r < p; ++r)
    if (seen[r]) out.push_back(r);
  return out;
}

std::uint64_t least_qnr(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw std::domain_error("least_qnr: p must be an odd prime >= 3");
  }
  for (std::uint64_t a = 2;; ++a) {
    if (legendre_symbol(static_cast<std::int64_t>(a), p) == -1) return a;
  }
}

namespace {

// p is already known prime here; skips the primality recheck in legendre_symbol.
std::uint64_t least_qnr_unchecked(std::uint64_t p) {
  for (std::uint64_t a = 2;; ++a) {
    if (pow_mod(a, (p - 1) / 2, p) != 1) return a;
  }
}

}  // namespace

std::vector<QnrRecord> least_qnr_scan(std::uint64_t limit) {
  if (limit < 7) {
    throw std::domain_error("least_qnr_scan: limit must be >= 7");
  }
  PrimeList pl = sieve_primes(limit);
  std::vector<QnrRecord> out;
  std::uint64_t running_max = 0;
  for (std::uint64_t p : pl.primes) {
    if (p == 2) continue;
    QnrRecord rec;
    rec.p = p;
    rec.lqnr = least_qnr_unchecked(p);
    double l1 = std::log2(static_cast<double>(p));
    double l2 = std::log2(l1);
    if (l2 > 0) {
      double l3 = std::log2(l2);
      double denom = l1 * l3;
      if (denom > 0) rec.ratio = static_cast<double>(rec.lqnr) / denom;
    }
    if (rec.lqnr > running_max) {
      running_max = rec.lqnr;
      rec.is_running_max = true;
    }
    out.push_back(rec);
  }
  return out;
}

void write_qnr_csv(std::ostream& os, const std::vector<QnrRecord>& records) {
  os << "p,lqnr,ratio\n";
  for (const auto& r : records) {
    os << r.p << ',' << r.lqnr << ',';
    if (r.ratio) os << *r.ratio;
    os << '\n';
  }
}

}  // namespace paley::nt
