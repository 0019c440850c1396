#include "paley/fourier_probe.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "paley/rng.hpp"

namespace paley {

std::size_t WindowedSignal::nonzero_count() const {
  std::size_t c = 0;
  for (std::int8_t s : samples)
    if (s != 0) ++c;
  return c;
}

WindowedSignal window_g(const SignFunction& f) {
  if (f.q < 1) throw std::domain_error("window_g: Q must be >= 1");
  if (2 * f.q >= f.n) throw std::domain_error("window_g: requires 2Q < N");
  WindowedSignal g;
  g.q = f.q;
  g.samples.resize(3 * f.q + 1);
  std::int64_t n = static_cast<std::int64_t>(f.n);
  for (std::int64_t x = -static_cast<std::int64_t>(f.q);
       x <= 2 * static_cast<std::int64_t>(f.q); ++x) {
    std::int64_t r = x % n;
    if (r < 0) r += n;
    g.samples[static_cast<std::size_t>(x + static_cast<std::int64_t>(f.q))] =
        f.values[static_cast<std::size_t>(r)];
  }
  return g;
}

namespace {

// Pairwise (tree) accumulation of the exponential-sum terms.
std::complex<double> pairwise_sum(std::span<const std::complex<double>> terms) {
  if (terms.size() <= 8) {
    std::complex<double> s = 0.0;
    for (const auto& t : terms) s += t;
    return s;
  }
  std::size_t half = terms.size() / 2;
  return pairwise_sum(terms.subspan(0, half)) + pairwise_sum(terms.subspan(half));
}

}  // namespace

std::complex<double> fourier_coefficient(const WindowedSignal& g, double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<std::complex<double>> terms;
  terms.reserve(g.samples.size());
  std::int64_t qi = static_cast<std::int64_t>(g.q);
  for (std::size_t i = 0; i < g.samples.size(); ++i) {
    if (g.samples[i] == 0) continue;
    double n = static_cast<double>(static_cast<std::int64_t>(i) - qi);
    double phase = -two_pi * theta * n;
    terms.emplace_back(static_cast<double>(g.samples[i]) * std::cos(phase),
                       static_cast<double>(g.samples[i]) * std::sin(phase));
  }
  if (terms.empty()) return {0.0, 0.0};
  return pairwise_sum(terms);
}

FourierScan sup_fourier(const WindowedSignal& g, double level,
                        double grid_constant) {
  if (level <= 0.0 || level > static_cast<double>(g.q)) {
    throw std::domain_error("sup_fourier: need 0 < l <= Q");
  }
  FourierScan scan;
  scan.q = g.q;
  scan.level = level;
  double q2 = static_cast<double>(g.q) * static_cast<double>(g.q);
  scan.grid_step = level / (grid_constant * q2);
  auto steps = static_cast<std::uint64_t>(std::floor(grid_constant * q2 / level));
  for (std::uint64_t j = 0; j <= steps; ++j) {
    double theta = static_cast<double>(j) * scan.grid_step;
    double mag = std::abs(fourier_coefficient(g, theta));
    if (mag > scan.grid_max) {
      scan.grid_max = mag;
      scan.argmax_theta = theta;
    }
  }
  scan.certified_sup_bound = scan.grid_max + level / 2.0;
  return scan;
}

double witness_lower_bound(const WindowedSignal& g,
                           std::span<const std::int64_t> c,
                           std::span<const std::int64_t> d) {
  for (std::int64_t ci : c) {
    for (std::int64_t di : d) {
      if (g.at(ci + di) != 1) {
        throw std::domain_error(
            "witness_lower_bound: C+D must lie in the window with samples +1");
      }
    }
  }
  return std::sqrt(static_cast<double>(c.size()) * static_cast<double>(d.size()));
}

TailEstimate tail_probability_estimate(std::uint64_t n, std::uint64_t q,
                                       double level, std::uint64_t trials,
                                       std::uint64_t seed) {
  if (trials < 1) throw std::domain_error("tail_probability_estimate: trials >= 1");
  TailEstimate est;
  est.trials = trials;
  if (level <= 0.0) throw std::domain_error("tail_probability_estimate: level > 0");
  double q2 = static_cast<double>(q) * static_cast<double>(q);
  double step = level / (80.0 * q2);
  auto steps = static_cast<std::uint64_t>(std::floor(80.0 * q2 / level));
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::uint64_t sub = derive_subseed(seed, n, t);
    SignFunction f = sample_multiplicative(n, q, sub);
    WindowedSignal g = window_g(f);
    // event detection only: stop at the first grid point reaching the level
    if (level > static_cast<double>(g.samples.size())) continue;
    for (std::uint64_t j = 0; j <= steps; ++j) {
      double mag = std::abs(fourier_coefficient(g, static_cast<double>(j) * step));
      if (mag >= level) {
        ++est.hits;
        break;
      }
    }
  }
  est.frequency = static_cast<double>(est.hits) / static_cast<double>(trials);
  double p = est.frequency;
  double half = 2.5758 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  est.ci_low = std::max(0.0, p - half);
  est.ci_high = std::min(1.0, p + half);
  return est;
}

nlohmann::json to_json(const FourierScan& s) {
  return nlohmann::json{{"Q", s.q},
                        {"l", s.level},
                        {"grid_step", s.grid_step},
                        {"grid_max", s.grid_max},
                        {"argmax_theta", s.argmax_theta},
                        {"certified_sup_bound", s.certified_sup_bound}};
}

}  // namespace paley
