#include <doctest.h>

#include <cmath>
#include <complex>

#include "paley/fourier_probe.hpp"
#include "paley/number_theory.hpp"
#include "paley/rng.hpp"

using namespace paley;

namespace {

SignFunction all_ones(std::uint64_t n, std::uint64_t q) {
  SignFunction f;
  f.n = n;
  f.q = q;
  f.model = Model::multiplicative;
  f.values.assign(n, 1);
  return f;
}

// direct unvectorized re-evaluation of ghat
std::complex<double> ghat_direct(const WindowedSignal& g, double theta) {
  std::complex<double> sum = 0.0;
  for (std::int64_t n = -static_cast<std::int64_t>(g.q);
       n <= 2 * static_cast<std::int64_t>(g.q); ++n) {
    double phase = -2.0 * M_PI * theta * static_cast<double>(n);
    sum += static_cast<double>(g.at(n)) * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return sum;
}

}  // namespace

TEST_CASE("window extraction") {
  SignFunction f = sample_multiplicative(211, 20, 3);
  WindowedSignal g = window_g(f);
  CHECK(g.samples.size() == 61);
  CHECK(g.at(-1) == f.values[210]);  // -1 mod 211
  CHECK(g.at(0) == f.values[0]);
  CHECK(g.at(40) == f.values[40]);
  CHECK(g.at(-21) == 0);  // outside the window
  CHECK(g.at(41) == 0);

  // spot checks against direct evaluation
  WordStream ws(5);
  for (int i = 0; i < 20; ++i) {
    std::int64_t n = static_cast<std::int64_t>(bounded(ws, 61)) - 20;
    std::int64_t r = ((n % 211) + 211) % 211;
    CHECK(g.at(n) == f.values[static_cast<std::uint64_t>(r)]);
  }

  SignFunction all = all_ones(211, 20);
  WindowedSignal gw = window_g(all);
  for (auto s : gw.samples) CHECK(s == 1);

  SignFunction too_wide = all_ones(41, 21);
  CHECK_THROWS_AS(window_g(too_wide), std::domain_error);
}

TEST_CASE("fourier coefficient basics") {
  WindowedSignal g = window_g(all_ones(211, 20));
  CHECK(std::abs(fourier_coefficient(g, 0.0) - std::complex<double>(61.0, 0.0)) < 1e-9);
  // 1-periodic in integer frequencies
  CHECK(std::abs(fourier_coefficient(g, 1.0) - fourier_coefficient(g, 0.0)) < 1e-9);

  WordStream ws(9);
  SignFunction f = sample_multiplicative(211, 20, 11);
  WindowedSignal h = window_g(f);
  for (int i = 0; i < 50; ++i) {
    double theta = static_cast<double>(ws.next() % 1000000) / 1000000.0;
    // triangle inequality
    CHECK(std::abs(fourier_coefficient(h, theta)) <= 61.0 + 1e-9);
    // matches the direct sum
    CHECK(std::abs(fourier_coefficient(h, theta) - ghat_direct(h, theta)) < 1e-9);
  }
}

TEST_CASE("conjugate symmetry") {
  SignFunction f = sample_multiplicative(211, 25, 123);
  WindowedSignal g = window_g(f);
  WordStream ws(77);
  for (int i = 0; i < 100; ++i) {
    double theta = static_cast<double>(ws.next() % 1000000) / 1000000.0;
    auto a = fourier_coefficient(g, 1.0 - theta);
    auto b = std::conj(fourier_coefficient(g, theta));
    CHECK(std::abs(a - b) < 1e-9);
  }
}

TEST_CASE("sup_fourier certificate") {
  WindowedSignal ones = window_g(all_ones(211, 20));
  FourierScan scan = sup_fourier(ones, 5.0);
  CHECK(scan.grid_max == doctest::Approx(61.0));
  CHECK(scan.argmax_theta == 0.0);
  CHECK(scan.certified_sup_bound == doctest::Approx(63.5));

  SignFunction f = sample_multiplicative(401, 30, 2718);
  WindowedSignal g = window_g(f);
  double level = 6.0;
  FourierScan s = sup_fourier(g, level);
  WordStream ws(314);
  for (int i = 0; i < 50; ++i) {
    double theta = static_cast<double>(ws.next() % 1000000) / 1000000.0;
    CHECK(std::abs(fourier_coefficient(g, theta)) <= s.certified_sup_bound + 1e-9);
  }

  // continuity certificate at random theta against the nearest grid point
  for (int i = 0; i < 1000; ++i) {
    double theta = static_cast<double>(ws.next() % 1000000) / 1000000.0;
    double j = std::round(theta / s.grid_step);
    double theta_j = j * s.grid_step;
    double diff = std::abs(fourier_coefficient(g, theta) - fourier_coefficient(g, theta_j));
    CHECK(diff <= level / 2.0 + 1e-9);
  }

  // halving l: finer grid max cannot drop by more than the spacing allows
  FourierScan fine = sup_fourier(g, level / 2.0);
  CHECK(fine.grid_max >= s.grid_max - level / 2.0);

  CHECK_THROWS_AS(sup_fourier(g, 31.0), std::domain_error);  // l > Q
  CHECK_THROWS_AS(sup_fourier(g, 0.0), std::domain_error);
}

TEST_CASE("windowed parseval") {
  // (1/M) sum_j |ghat(j/M)|^2 = number of nonzero samples, M > window span
  SignFunction f = sample_multiplicative(401, 30, 999);
  WindowedSignal g = window_g(f);
  const int m = 10000;
  double sum = 0.0;
  for (int j = 0; j < m; ++j) {
    double mag = std::abs(fourier_coefficient(g, static_cast<double>(j) / m));
    sum += mag * mag;
  }
  double integral = sum / m;
  double expected = static_cast<double>(g.nonzero_count());
  CHECK(std::abs(integral - expected) / expected < 1e-3);
}

TEST_CASE("witness lower bound") {
  SignFunction f = all_ones(401, 30);
  WindowedSignal g = window_g(f);

  std::vector<std::int64_t> c0{0};
  CHECK(witness_lower_bound(g, c0, c0) == doctest::Approx(1.0));

  std::vector<std::int64_t> c{1, 2, 3, 4};
  std::vector<std::int64_t> d{5, 6, 7, 8};
  CHECK(witness_lower_bound(g, c, d) == doctest::Approx(4.0));

  // out of window
  std::vector<std::int64_t> far{100};
  CHECK_THROWS_AS(witness_lower_bound(g, far, d), std::domain_error);

  // sample not +1 on C+D
  SignFunction neg = all_ones(401, 30);
  neg.values[7] = -1;
  WindowedSignal gn = window_g(neg);
  std::vector<std::int64_t> c3{3};
  std::vector<std::int64_t> d4{4};
  CHECK_THROWS_AS(witness_lower_bound(gn, c3, d4), std::domain_error);

  // the scan certifies at least sqrt(|C||D|)
  FourierScan s = sup_fourier(g, 8.0);
  CHECK(s.certified_sup_bound >= witness_lower_bound(g, c, d));
}

TEST_CASE("tail probability estimate") {
  // impossible level
  TailEstimate zero = tail_probability_estimate(211, 10, 100.0, 50, 1);
  CHECK(zero.frequency == 0.0);

  // trivially reachable level: |ghat(0)| >= 1 since 3Q+1 is odd
  TailEstimate one = tail_probability_estimate(211, 10, 0.0001, 50, 1);
  CHECK(one.frequency == 1.0);
}

TEST_CASE("tail estimate matches the exact all-ones-window probability") {
  // At l = 3Q+1 the event {grid_max >= l} requires every window sample to be
  // +1. Enumerating the window's degrees of freedom: samples on [-Q,2Q]
  // split into the multiplicative block [1,Q] (all +1 iff every prime <= Q
  // drew +1, probability 2^-pi(Q)) and 2Q+1 iid positions, so
  // P = 2^-(pi(Q) + 2Q + 1).
  const std::uint64_t q = 2;  // pi(2) = 1, 5 iid positions -> P = 2^-6
  const std::uint64_t n = 1009;
  const double level = 3.0 * q + 1.0;
  const std::uint64_t trials = 20000;
  TailEstimate est = tail_probability_estimate(n, q, level, trials, 77);
  double exact = std::exp2(-(1.0 + 2.0 * q + 1.0));
  double sigma = std::sqrt(exact * (1.0 - exact) / static_cast<double>(trials));
  CHECK(std::abs(est.frequency - exact) < 4.0 * sigma);
}
