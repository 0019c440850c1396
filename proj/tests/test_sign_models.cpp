#include <doctest.h>

#include <cmath>

#include "paley/number_theory.hpp"
#include "paley/rng.hpp"
#include "paley/sign_models.hpp"

using namespace paley;

TEST_CASE("multiplicative sample basic contract") {
  SignFunction f = sample_multiplicative(101, 20, 12345);
  CHECK(f.model == Model::multiplicative);
  CHECK(f.values.size() == 101);
  CHECK(f.values[1] == 1);
  CHECK(f.values[4] == 1);
  CHECK(f.values[9] == 1);
  CHECK(f.values[16] == 1);
  CHECK(f.values[6] == f.values[2] * f.values[3]);
  CHECK(f.values[12] == f.values[2] * f.values[2] * f.values[3]);
  for (std::uint64_t x = 0; x < 101; ++x) {
    CHECK((f.values[x] == 1 || f.values[x] == -1));
  }

  SignFunction again = sample_multiplicative(101, 20, 12345);
  CHECK(f.values == again.values);
  SignFunction other = sample_multiplicative(101, 20, 12346);
  CHECK(f.values != other.values);
}

TEST_CASE("multiplicative sample rejects bad windows") {
  CHECK_THROWS_AS(sample_multiplicative(101, 0, 1), std::domain_error);
  CHECK_THROWS_AS(sample_multiplicative(101, 51, 1), std::domain_error);  // Q >= N/2
  CHECK_THROWS_AS(sample_multiplicative(100, 10, 1), std::domain_error);  // composite N
}

TEST_CASE("verify_multiplicativity") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    SignFunction f = sample_multiplicative(211, 30, seed);
    CHECK(verify_multiplicativity(f));
  }

  SignFunction f = sample_multiplicative(211, 30, 5);
  f.values[4] = -1;
  CHECK_FALSE(verify_multiplicativity(f));

  SignFunction q1 = sample_multiplicative(211, 1, 5);
  CHECK(verify_multiplicativity(q1));  // vacuous

  SignFunction iid = sample_iid(211, 5);
  CHECK_THROWS_AS(verify_multiplicativity(iid), std::domain_error);
}

TEST_CASE("iid sample") {
  SignFunction f = sample_iid(10007, 99);
  CHECK(f.model == Model::iid);
  CHECK(f.q == 0);
  double sum = 0;
  for (auto v : f.values) sum += v;
  double mean = sum / 10007.0;
  // 3 sigma band for the empirical mean of 10007 fair signs
  CHECK(std::abs(mean) < 0.03);
  CHECK(sample_iid(10007, 99).values == f.values);
}

TEST_CASE("character function") {
  SignFunction f = character_function(7);
  CHECK(f.values[0] == 0);
  // squares mod 7 = {1,2,4}
  CHECK(f.values[1] == 1);
  CHECK(f.values[2] == 1);
  CHECK(f.values[3] == -1);
  CHECK(f.values[4] == 1);
  CHECK(f.values[5] == -1);
  CHECK(f.values[6] == -1);

  SignFunction g = character_function(1009);
  int sum = 0;
  for (std::uint64_t x = 1; x < 1009; ++x) sum += g.values[x];
  CHECK(sum == 0);
  // character multiplicativity
  for (std::uint64_t a = 1; a < 60; ++a) {
    for (std::uint64_t b = 1; b < 60; ++b) {
      CHECK(g.values[a * b % 1009] == g.values[a] * g.values[b]);
    }
  }
  CHECK_THROWS_AS(character_function(2), std::domain_error);
}

TEST_CASE("conditioned sampling") {
  Conditioning all_pos;
  for (std::uint64_t p : nt::sieve_primes(20).primes) all_pos.forced[p] = 1;
  SignFunction f = sample_multiplicative_conditioned(101, 20, 7, all_pos);
  for (std::uint64_t x = 1; x <= 20; ++x) CHECK(f.values[x] == 1);

  SignFunction empty_cond = sample_multiplicative_conditioned(101, 20, 7, {});
  CHECK(empty_cond.values == sample_multiplicative(101, 20, 7).values);

  Conditioning neg2;
  neg2.forced[2] = -1;
  SignFunction g = sample_multiplicative_conditioned(101, 20, 7, neg2);
  CHECK(g.values[2] == -1);
  CHECK(g.values[4] == 1);
  CHECK(g.values[8] == -1);

  Conditioning bad;
  bad.forced[4] = 1;  // not prime
  CHECK_THROWS_AS(sample_multiplicative_conditioned(101, 20, 7, bad), std::domain_error);
  Conditioning too_big;
  too_big.forced[23] = 1;  // > Q
  CHECK_THROWS_AS(sample_multiplicative_conditioned(101, 20, 7, too_big),
                  std::domain_error);
}

TEST_CASE("marginals at non-square window positions are uniform") {
  // frequency of +1 at x over many seeds; 4 sigma band around 1/2
  const int trials = 10000;
  for (std::uint64_t x : {2ULL, 3ULL, 6ULL, 12ULL}) {
    int pos = 0;
    for (int s = 0; s < trials; ++s) {
      SignFunction f = sample_multiplicative(211, 20, 1000 + static_cast<std::uint64_t>(s));
      if (f.values[x] == 1) ++pos;
    }
    double freq = static_cast<double>(pos) / trials;
    CAPTURE(x);
    CHECK(std::abs(freq - 0.5) < 4.0 * 0.5 / std::sqrt(static_cast<double>(trials)));
  }
}

TEST_CASE("word stream matches the pinned derivation") {
  // worked example of the documented bit-exact scheme
  std::uint64_t state = derive_subseed(0, 101, 0);
  CHECK(state == 101 * kGolden);
  WordStream ws(state);
  CHECK(ws.next() == mix64(state));
  CHECK(ws.next() == mix64(state + kGolden));

  // sign of x is bit (x % 64) of word (x / 64)
  SignFunction f = sample_iid(101, state);
  std::uint64_t w0 = mix64(state);
  for (std::uint64_t x = 0; x < 64; ++x) {
    CHECK(f.values[x] == (((w0 >> x) & 1) ? 1 : -1));
  }
  std::uint64_t w1 = mix64(state + kGolden);
  for (std::uint64_t x = 64; x < 101; ++x) {
    CHECK(f.values[x] == (((w1 >> (x - 64)) & 1) ? 1 : -1));
  }
}

TEST_CASE("json round trip") {
  SignFunction f = sample_multiplicative(211, 30, 77);
  auto j = to_json(f);
  SignFunction back = sign_function_from_json(j);
  CHECK(back.n == f.n);
  CHECK(back.q == f.q);
  CHECK(back.model == f.model);
  CHECK(back.seed == f.seed);
  CHECK(back.values == f.values);

  SignFunction chi = character_function(101);
  SignFunction chi_back = sign_function_from_json(to_json(chi));
  CHECK(chi_back.values == chi.values);
  CHECK(chi_back.values[0] == 0);

  Conditioning cond;
  cond.forced[3] = -1;
  SignFunction forced = sample_multiplicative_conditioned(211, 30, 9, cond);
  SignFunction forced_back = sign_function_from_json(to_json(forced));
  CHECK(forced_back.conditioning.forced == cond.forced);
  CHECK(forced_back.values == forced.values);
}

TEST_CASE("default window rule") {
  CHECK(default_q(3, 0.25) >= 1);
  // Q = round(0.25 * log2(1009) * log2(log2(1009))) = round(0.25*9.98*3.32) = 8
  CHECK(default_q(1009, 0.25) == 8);
  CHECK(default_q(1009, 0.45) == 15);
}
