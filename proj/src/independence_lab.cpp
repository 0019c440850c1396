#include "paley/independence_lab.hpp"

#include <bit>
#include <stdexcept>

#include "paley/errors.hpp"
#include "paley/number_theory.hpp"

namespace paley::indep {

namespace {

// Bitmask of (q/p) signs over primes q <= y (bit set iff +1). p must exceed y.
std::uint32_t pattern_of(std::uint64_t p, const std::vector<std::uint64_t>& qs) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (nt::pow_mod(qs[i], (p - 1) / 2, p) == 1) bits |= 1u << i;
  }
  return bits;
}

std::vector<std::uint64_t> small_primes(std::uint64_t y) {
  auto pl = nt::sieve_primes(y);
  if (pl.primes.size() > kMaxPatternBits) {
    throw CapacityError("pattern width pi(y) = " + std::to_string(pl.primes.size()) +
                        " exceeds " + std::to_string(kMaxPatternBits));
  }
  return pl.primes;
}

}  // namespace

std::vector<int> symbol_vector(std::uint64_t p, std::uint64_t y) {
  if (p <= y) {
    throw std::domain_error("symbol_vector: requires p > y");
  }
  if (p == 2 || !nt::is_prime(p)) {
    throw std::domain_error("symbol_vector: p must be an odd prime");
  }
  auto qs = small_primes(y);
  std::vector<int> out;
  out.reserve(qs.size());
  for (std::uint64_t q : qs) {
    out.push_back(nt::legendre_symbol(static_cast<std::int64_t>(q), p));
  }
  return out;
}

CountTable count_patterns(std::uint64_t x, std::uint64_t y) {
  if (y >= x) throw std::domain_error("count_patterns: requires y < x");
  auto qs = small_primes(y);
  CountTable t;
  t.x = x;
  t.y = y;
  t.pattern_bits = qs.size();
  t.counts.assign(std::size_t{1} << t.pattern_bits, 0);
  auto pl = nt::sieve_primes(x);
  for (std::uint64_t p : pl.primes) {
    if (p <= y || p == 2) continue;
    ++t.counts[pattern_of(p, qs)];
    ++t.total;
  }
  // y < 2 keeps p = 2 in range; its pattern is empty only if pi(y) = 0
  if (y < 2 && t.pattern_bits == 0 && x >= 2) {
    ++t.counts[0];
    ++t.total;
  }
  return t;
}

double variance_direct(const CountTable& t) {
  double patterns = static_cast<double>(t.counts.size());
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t c : t.counts) {
    double v = static_cast<double>(c);
    sum += v;
    sum_sq += v * v;
  }
  double mean = sum / patterns;
  return sum_sq / patterns - mean * mean;
}

DivisorSpectrum divisor_spectrum(std::uint64_t x, std::uint64_t y) {
  CountTable t = count_patterns(x, y);
  DivisorSpectrum spec;
  spec.x = x;
  spec.y = y;
  spec.primes = small_primes(y);
  std::size_t size = t.counts.size();
  spec.coefficients.assign(size, 0.0);

  // N^(m) = 2^{-pi(y)} sum_p prod_{q|m} (q/p); the product for a prime with
  // pattern s is (-1)^{popcount(m & ~s)}.
  for (std::uint32_t s = 0; s < size; ++s) {
    if (t.counts[s] == 0) continue;
    double c = static_cast<double>(t.counts[s]);
    for (std::uint32_t m = 0; m < size; ++m) {
      int parity = std::popcount(m & ~s & static_cast<std::uint32_t>(size - 1)) & 1;
      spec.coefficients[m] += parity ? -c : c;
    }
  }
  double scale = 1.0 / static_cast<double>(size);
  for (double& v : spec.coefficients) v *= scale;
  return spec;
}

double variance_parseval(const DivisorSpectrum& spec) {
  if (spec.coefficients.size() != (std::size_t{1} << spec.primes.size())) {
    throw std::domain_error("variance_parseval: incomplete spectrum");
  }
  double sum = 0.0;
  for (std::size_t m = 1; m < spec.coefficients.size(); ++m) {
    sum += spec.coefficients[m] * spec.coefficients[m];
  }
  return sum;
}

std::vector<double> reconstruct_counts(const DivisorSpectrum& spec) {
  std::size_t size = spec.coefficients.size();
  std::vector<double> counts(size, 0.0);
  for (std::uint32_t s = 0; s < size; ++s) {
    double acc = 0.0;
    for (std::uint32_t m = 0; m < size; ++m) {
      int parity = std::popcount(m & ~s & static_cast<std::uint32_t>(size - 1)) & 1;
      acc += parity ? -spec.coefficients[m] : spec.coefficients[m];
    }
    counts[s] = acc;
  }
  return counts;
}

double baseline_variance(std::uint64_t x, std::uint64_t y) {
  if (x < 4) throw std::domain_error("baseline_variance: requires x >= 4");
  CountTable t = count_patterns(x, y);
  double inv = 1.0 / static_cast<double>(std::size_t{1} << t.pattern_bits);
  return inv * (1.0 - inv) * static_cast<double>(t.total);
}

std::vector<std::uint64_t> montgomery_search(std::uint64_t x, std::uint64_t y) {
  if (y >= x) throw std::domain_error("montgomery_search: requires y < x");
  auto qs = small_primes(y);
  std::uint32_t all_ones =
      qs.empty() ? 0 : static_cast<std::uint32_t>((std::size_t{1} << qs.size()) - 1);
  auto pl = nt::sieve_primes(2 * x);
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : pl.primes) {
    if (p <= x || p == 2) continue;
    if (pattern_of(p, qs) == all_ones) out.push_back(p);
  }
  return out;
}

void write_counts_csv(std::ostream& os, const CountTable& t) {
  os << "pattern,count\n";
  for (std::size_t s = 0; s < t.counts.size(); ++s) {
    // pattern rendered as +/- string, lowest prime first
    std::string repr;
    for (std::size_t i = 0; i < t.pattern_bits; ++i) {
      repr += ((s >> i) & 1) ? '+' : '-';
    }
    os << repr << ',' << t.counts[s] << '\n';
  }
}

void write_spectrum_csv(std::ostream& os, const DivisorSpectrum& spec) {
  os << "m,coefficient\n";
  for (std::size_t mask = 0; mask < spec.coefficients.size(); ++mask) {
    std::uint64_t m = 1;
    for (std::size_t i = 0; i < spec.primes.size(); ++i) {
      if ((mask >> i) & 1) m *= spec.primes[i];
    }
    os << m << ',' << spec.coefficients[mask] << '\n';
  }
}

nlohmann::json summary_json(std::uint64_t x, std::uint64_t y) {
  CountTable t = count_patterns(x, y);
  DivisorSpectrum spec = divisor_spectrum(x, y);
  double direct = variance_direct(t);
  double parseval = variance_parseval(spec);
  double baseline = baseline_variance(x, y);
  return nlohmann::json{{"x", x},
                        {"y", y},
                        {"variance_direct", direct},
                        {"variance_parseval", parseval},
                        {"baseline", baseline},
                        {"ratio", baseline > 0 ? direct / baseline : 0.0}};
}

}  // namespace paley::indep
