#include "paley/sign_models.hpp"

#include <cmath>
#include <stdexcept>

#include "paley/number_theory.hpp"
#include "paley/rng.hpp"

namespace paley {

std::string model_name(Model m) {
  switch (m) {
    case Model::multiplicative: return "multiplicative";
    case Model::iid: return "iid";
    case Model::character: return "character";
  }
  throw std::logic_error("model_name: bad tag");
}

Model model_from_name(const std::string& name) {
  if (name == "multiplicative") return Model::multiplicative;
  if (name == "iid") return Model::iid;
  if (name == "character") return Model::character;
  throw std::domain_error("unknown model name: " + name);
}

namespace {

void check_prime_modulus(std::uint64_t n) {
  if (n < 3 || !nt::is_prime(n)) {
    throw std::domain_error("modulus must be a prime >= 3");
  }
}

// Independent uniform signs for every residue: sign(x) = +1 iff bit (x mod 64)
// of word(x / 64) is set.
std::vector<std::int8_t> iid_signs(std::uint64_t n, std::uint64_t seed) {
  std::vector<std::int8_t> values(n);
  WordStream ws(seed);
  std::uint64_t word = 0;
  for (std::uint64_t x = 0; x < n; ++x) {
    if (x % 64 == 0) word = ws.next();
    values[x] = (word >> (x % 64)) & 1 ? 1 : -1;
  }
  return values;
}

}  // namespace

SignFunction sample_iid(std::uint64_t n, std::uint64_t seed) {
  check_prime_modulus(n);
  SignFunction f;
  f.n = n;
  f.q = 0;
  f.model = Model::iid;
  f.seed = seed;
  f.has_seed = true;
  f.values = iid_signs(n, seed);
  return f;
}

SignFunction sample_multiplicative_conditioned(std::uint64_t n, std::uint64_t q,
                                               std::uint64_t seed,
                                               const Conditioning& cond) {
  check_prime_modulus(n);
  if (q < 1 || 2 * q >= n) {
    throw std::domain_error("window must satisfy 1 <= Q < N/2");
  }
  for (const auto& [p, s] : cond.forced) {
    if (p > q || !nt::is_prime(p)) {
      throw std::domain_error("conditioning keys must be primes <= Q");
    }
    if (s != 1 && s != -1) {
      throw std::domain_error("conditioning values must be +-1");
    }
  }

  SignFunction f;
  f.n = n;
  f.q = q;
  f.model = Model::multiplicative;
  f.seed = seed;
  f.has_seed = true;
  f.conditioning = cond;
  f.values = iid_signs(n, seed);

  // Smallest-prime-factor sieve on [2, q].
  std::vector<std::uint32_t> spf(q + 1, 0);
  for (std::uint64_t p = 2; p <= q; ++p) {
    if (spf[p] != 0) continue;
    for (std::uint64_t m = p; m <= q; m += p) {
      if (spf[m] == 0) spf[m] = static_cast<std::uint32_t>(p);
    }
  }

  f.values[1] = 1;
  for (std::uint64_t x = 2; x <= q; ++x) {
    if (spf[x] == x) {
      // prime: the iid draw is its sign unless forced
      auto it = cond.forced.find(x);
      if (it != cond.forced.end()) f.values[x] = static_cast<std::int8_t>(it->second);
    } else {
      f.values[x] = static_cast<std::int8_t>(f.values[spf[x]] * f.values[x / spf[x]]);
    }
  }
  return f;
}

SignFunction sample_multiplicative(std::uint64_t n, std::uint64_t q,
                                   std::uint64_t seed) {
  return sample_multiplicative_conditioned(n, q, seed, Conditioning{});
}

SignFunction character_function(std::uint64_t n) {
  if (n == 2) throw std::domain_error("character_function: N must be odd");
  check_prime_modulus(n);
  SignFunction f;
  f.n = n;
  f.q = 0;
  f.model = Model::character;
  f.has_seed = false;
  f.values.assign(n, -1);
  f.values[0] = 0;
  for (std::uint64_t x = 1; x <= (n - 1) / 2; ++x) {
    f.values[nt::mul_mod(x, x, n)] = 1;
  }
  return f;
}

bool verify_multiplicativity(const SignFunction& f) {
  if (f.model != Model::multiplicative) {
    throw std::domain_error("verify_multiplicativity: not a multiplicative model");
  }
  for (std::uint64_t a = 2; a * a <= f.q; ++a) {
    for (std::uint64_t b = a; a * b <= f.q; ++b) {
      if (f.values[a * b] != f.values[a] * f.values[b]) return false;
    }
  }
  return true;
}

std::uint64_t default_q(std::uint64_t n, double c) {
  double l = std::log2(static_cast<double>(n));
  if (l <= 1.0) return 1;
  double raw = c * l * std::log2(l);
  auto q = static_cast<std::uint64_t>(std::llround(raw));
  return q < 1 ? 1 : q;
}

namespace {

constexpr char kB64Alphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::string base64_encode(const std::vector<std::uint8_t>& data) {
  std::string out;
  out.reserve((data.size() + 2) / 3 * 4);
  std::size_t i = 0;
  while (i + 3 <= data.size()) {
    std::uint32_t v = (data[i] << 16) | (data[i + 1] << 8) | data[i + 2];
    out += kB64Alphabet[(v >> 18) & 63];
    out += kB64Alphabet[(v >> 12) & 63];
    out += kB64Alphabet[(v >> 6) & 63];
    out += kB64Alphabet[v & 63];
    i += 3;
  }
  if (i + 1 == data.size()) {
    std::uint32_t v = data[i] << 16;
    out += kB64Alphabet[(v >> 18) & 63];
    out += kB64Alphabet[(v >> 12) & 63];
    out += "==";
  } else if (i + 2 == data.size()) {
    std::uint32_t v = (data[i] << 16) | (data[i + 1] << 8);
    out += kB64Alphabet[(v >> 18) & 63];
    out += kB64Alphabet[(v >> 12) & 63];
    out += kB64Alphabet[(v >> 6) & 63];
    out += '=';
  }
  return out;
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
  auto value_of = [](char c) -> int {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+') return 62;
    if (c == '/') return 63;
    if (c == '=') return -1;
    throw std::domain_error("base64_decode: bad character");
  };
  std::vector<std::uint8_t> out;
  std::uint32_t acc = 0;
  int bits = 0;
  for (char c : text) {
    int v = value_of(c);
    if (v < 0) break;
    acc = (acc << 6) | static_cast<std::uint32_t>(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<std::uint8_t>((acc >> bits) & 0xFF));
    }
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const SignFunction& f) {
  nlohmann::json j;
  j["schema"] = 1;
  j["model"] = model_name(f.model);
  j["N"] = f.n;
  j["Q"] = f.q;
  if (f.has_seed) j["seed"] = f.seed;
  if (!f.conditioning.forced.empty()) {
    nlohmann::json forced = nlohmann::json::object();
    for (const auto& [p, s] : f.conditioning.forced) forced[std::to_string(p)] = s;
    j["forced"] = forced;
  }
  std::vector<std::uint8_t> packed((f.values.size() + 7) / 8, 0);
  for (std::size_t x = 0; x < f.values.size(); ++x) {
    if (f.values[x] == 1) packed[x / 8] |= static_cast<std::uint8_t>(1u << (x % 8));
  }
  j["values_base64"] = base64_encode(packed);
  if (f.model == Model::character) j["zero_index"] = 0;
  return j;
}

SignFunction sign_function_from_json(const nlohmann::json& j) {
  SignFunction f;
  f.model = model_from_name(j.at("model").get<std::string>());
  f.n = j.at("N").get<std::uint64_t>();
  f.q = j.at("Q").get<std::uint64_t>();
  if (j.contains("seed")) {
    f.seed = j.at("seed").get<std::uint64_t>();
    f.has_seed = true;
  }
  if (j.contains("forced")) {
    for (const auto& [key, val] : j.at("forced").items()) {
      f.conditioning.forced[std::stoull(key)] = val.get<int>();
    }
  }
  std::vector<std::uint8_t> packed = base64_decode(j.at("values_base64").get<std::string>());
  if (packed.size() < (f.n + 7) / 8) {
    throw std::domain_error("sign_function_from_json: packed values too short");
  }
  f.values.resize(f.n);
  for (std::uint64_t x = 0; x < f.n; ++x) {
    f.values[x] = (packed[x / 8] >> (x % 8)) & 1 ? 1 : -1;
  }
  if (j.contains("zero_index")) {
    f.values[j.at("zero_index").get<std::uint64_t>()] = 0;
  }
  return f;
}

}  // namespace paley
