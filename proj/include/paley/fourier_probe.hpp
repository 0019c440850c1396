#ifndef PALEY_FOURIER_PROBE_HPP
#define PALEY_FOURIER_PROBE_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "paley/sign_models.hpp"

namespace paley {

// Restriction of a sign function to the integer window [-Q, 2Q], zero
// outside. samples[i] holds the value at n = i - Q.
struct WindowedSignal {
  std::uint64_t q = 0;
  std::vector<std::int8_t> samples;  // length 3Q+1

  int at(std::int64_t n) const {
    std::int64_t i = n + static_cast<std::int64_t>(q);
    if (i < 0 || i >= static_cast<std::int64_t>(samples.size())) return 0;
    return samples[static_cast<std::size_t>(i)];
  }
  std::size_t nonzero_count() const;
};

struct FourierScan {
  std::uint64_t q = 0;
  double level = 0.0;      // l
  double grid_step = 0.0;  // l / (grid_constant * Q^2)
  double grid_max = 0.0;
  double argmax_theta = 0.0;
  double certified_sup_bound = 0.0;  // grid_max + l/2
};

WindowedSignal window_g(const SignFunction& f);

// ghat(theta) = sum_{n=-Q}^{2Q} g(n) e(-theta n), e(psi) = exp(2 pi i psi).
std::complex<double> fourier_coefficient(const WindowedSignal& g, double theta);

// Evaluates |ghat| on the grid theta_j = j*l/(grid_constant*Q^2). The grid is
// fine enough that any theta is within l/2 of a grid value of |ghat|, so
// grid_max + l/2 bounds the true supremum.
FourierScan sup_fourier(const WindowedSignal& g, double level,
                        double grid_constant = 80.0);

// sqrt(|C| * |D|); requires C+D inside the window with all samples +1.
// The supremum of |ghat| is at least this value.
double witness_lower_bound(const WindowedSignal& g,
                           std::span<const std::int64_t> c,
                           std::span<const std::int64_t> d);

struct TailEstimate {
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double frequency = 0.0;
  double ci_low = 0.0;   // 99% normal-approximation binomial interval
  double ci_high = 0.0;
};

// Monte Carlo frequency of {grid_max >= level} over independent
// multiplicative-model samples.
TailEstimate tail_probability_estimate(std::uint64_t n, std::uint64_t q,
                                       double level, std::uint64_t trials,
                                       std::uint64_t seed);

nlohmann::json to_json(const FourierScan& s);

}  // namespace paley

#endif
