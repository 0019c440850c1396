#ifndef PALEY_SIGN_MODELS_HPP
#define PALEY_SIGN_MODELS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace paley {

enum class Model { multiplicative, iid, character };

std::string model_name(Model m);
Model model_from_name(const std::string& name);

// Forced signs at primes <= Q, applied before the multiplicative extension.
struct Conditioning {
  std::map<std::uint64_t, int> forced;
};

// Sign function on Z/NZ. Values are in {-1,+1}, except the character model
// which carries 0 at index 0.
struct SignFunction {
  std::uint64_t n = 0;
  std::uint64_t q = 0;  // 0 for models without a multiplicative window
  Model model = Model::iid;
  std::uint64_t seed = 0;
  bool has_seed = false;
  Conditioning conditioning;
  std::vector<std::int8_t> values;

  int at(std::uint64_t x) const { return values[x % n]; }
};

SignFunction sample_multiplicative(std::uint64_t n, std::uint64_t q,
                                   std::uint64_t seed);

SignFunction sample_multiplicative_conditioned(std::uint64_t n, std::uint64_t q,
                                               std::uint64_t seed,
                                               const Conditioning& cond);

SignFunction sample_iid(std::uint64_t n, std::uint64_t seed);

// True quadratic character (x/N); value 0 at x = 0.
SignFunction character_function(std::uint64_t n);

// Checks values[a*b] == values[a]*values[b] for all a,b >= 2 with a*b <= Q.
bool verify_multiplicativity(const SignFunction& f);

// Default window rule Q = max(1, round(c * log2 N * log2 log2 N)).
std::uint64_t default_q(std::uint64_t n, double c = 0.25);

nlohmann::json to_json(const SignFunction& f);
SignFunction sign_function_from_json(const nlohmann::json& j);

}  // namespace paley

#endif
