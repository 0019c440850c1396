#include "paley/second_moment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "paley/errors.hpp"
#include "paley/number_theory.hpp"

namespace paley {

namespace {

double binomial_approx(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (std::uint64_t i = 0; i < k; ++i) {
    r *= static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  return r;
}

}  // namespace

UFamily enumerate_U(std::uint64_t n, std::uint64_t k, std::uint64_t candidate_cap) {
  if (k < 2) throw std::domain_error("enumerate_U: k must be >= 2");
  if (!nt::is_prime(n)) throw std::domain_error("enumerate_U: N must be prime");
  UFamily u;
  u.n = n;
  u.k = k;
  u.interval_lo = (n + 3) / 4;  // ceil(N/4)
  u.interval_hi = n / 2;        // floor(N/2)
  std::uint64_t width = u.interval_hi - u.interval_lo + 1;
  double candidates = binomial_approx(width, k);
  if (candidates > static_cast<double>(candidate_cap)) {
    throw CapacityError("enumerate_U: " + std::to_string(static_cast<std::uint64_t>(candidates)) +
                        " candidate sets exceed cap " + std::to_string(candidate_cap));
  }

  // Elements stay in [N/4, N/2], so pairwise sums stay in (N/2, N) and never
  // wrap; distinctness can be tested over plain integers.
  std::vector<std::uint32_t> pick(k);
  std::vector<char> sum_seen(2 * u.interval_hi + 1, 0);
  std::vector<std::uint32_t> sums;
  sums.reserve(k * (k - 1) / 2);

  auto recurse = [&](auto&& self, std::uint64_t depth, std::uint64_t next) -> void {
    if (depth == k) {
      u.members.emplace_back(pick);
      return;
    }
    for (std::uint64_t v = next; v <= u.interval_hi; ++v) {
      bool ok = true;
      std::size_t added = 0;
      for (std::uint64_t i = 0; i < depth; ++i) {
        std::uint32_t s = pick[i] + static_cast<std::uint32_t>(v);
        if (sum_seen[s]) {
          ok = false;
          break;
        }
        sum_seen[s] = 1;
        sums.push_back(s);
        ++added;
      }
      if (ok) {
        pick[depth] = static_cast<std::uint32_t>(v);
        self(self, depth + 1, v + 1);
      }
      for (std::size_t i = 0; i < added; ++i) {
        sum_seen[sums.back()] = 0;
        sums.pop_back();
      }
    }
  };
  recurse(recurse, 0, u.interval_lo);
  u.count = u.members.size();
  return u;
}

std::uint64_t count_R(const SignFunction& f, const UFamily& u) {
  if (f.n != u.n) throw std::domain_error("count_R: modulus mismatch");
  if (f.model == Model::multiplicative && 2 * f.q >= f.n) {
    throw std::domain_error("count_R: requires Q < N/2");
  }
  std::uint64_t r = 0;
  for (const auto& a : u.members) {
    bool all_pos = true;
    for (std::size_t i = 0; i < a.size() && all_pos; ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        std::uint64_t s = static_cast<std::uint64_t>(a[i]) + a[j];
        if (s >= u.n) s -= u.n;
        if (f.values[s] != 1) {
          all_pos = false;
          break;
        }
      }
    }
    if (all_pos) ++r;
  }
  return r;
}

double expected_R(const UFamily& u) {
  double pairs = static_cast<double>(u.k * (u.k - 1) / 2);
  return static_cast<double>(u.count) * std::exp2(-pairs);
}

void write_ufamily_jsonl(std::ostream& os, const UFamily& u) {
  for (const auto& a : u.members) {
    nlohmann::json j = a;
    os << j.dump() << '\n';
  }
}

}  // namespace paley
