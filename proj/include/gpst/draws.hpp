#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "gpst/localization.hpp"

namespace gpst {

inline uint64_t fnv1a(std::string_view s, uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline uint64_t sub_seed(uint64_t base, std::string_view pair, std::string_view auto_name,
                         std::string_view topic) {
  uint64_t h = fnv1a(pair);
  h = fnv1a("/", h);
  h = fnv1a(auto_name, h);
  h = fnv1a("/", h);
  h = fnv1a(topic, h);
  return h ^ (base + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

// mt19937_64 plus a hand-rolled uniform so draw streams do not depend on the
// standard library's distribution implementations.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}
  double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }  // [0,1)
  double sym() { return 2.0 * uniform() - 1.0; }
  cplx zbox() {
    const double re = sym();
    return {re, sym()};
  }
};

BiInvariantSignal random_signal(const GelfandPair& pair, Rng& rng);
BiInvariantSignal random_unit_signal(const GelfandPair& pair, Rng& rng);
Window random_unit_window(const GelfandPair& pair, Rng& rng);
SymbolFunction random_symbol(const GelfandPair& pair, const SphericalDual& dual, Rng& rng);
SymbolFunction random_unit_symbol(const GelfandPair& pair, const SphericalDual& dual, Rng& rng);

}  // namespace gpst
