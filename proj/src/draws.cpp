#include "gpst/draws.hpp"

namespace gpst {

BiInvariantSignal random_signal(const GelfandPair& pair, Rng& rng) {
  BiInvariantSignal f;
  f.class_values.resize(pair.dim());
  for (cplx& z : f.class_values) z = rng.zbox();
  return f;
}

BiInvariantSignal random_unit_signal(const GelfandPair& pair, Rng& rng) {
  BiInvariantSignal f = random_signal(pair, rng);
  double n = class_l2_norm(pair.cosets, f.class_values);
  if (n < 1e-12) {  // essentially impossible, but keep the draw well-defined
    f.class_values[0] = 1.0;
    n = class_l2_norm(pair.cosets, f.class_values);
  }
  for (cplx& z : f.class_values) z /= n;
  return f;
}

Window random_unit_window(const GelfandPair& pair, Rng& rng) {
  BiInvariantSignal w = random_unit_signal(pair, rng);
  return window_from_classes(pair, w.class_values);
}

SymbolFunction random_symbol(const GelfandPair& pair, const SphericalDual& dual, Rng& rng) {
  SymbolFunction u;
  u.time_size = pair.g().order;
  u.dual_size = dual.size();
  u.values.resize(static_cast<size_t>(u.time_size) * u.dual_size);
  for (cplx& z : u.values) z = rng.zbox();
  return u;
}

SymbolFunction random_unit_symbol(const GelfandPair& pair, const SphericalDual& dual,
                                  Rng& rng) {
  SymbolFunction u = random_symbol(pair, dual, rng);
  double n = symbol_norm(dual, u, 2.0);
  if (n < 1e-12) {
    u.values[0] = 1.0;
    n = symbol_norm(dual, u, 2.0);
  }
  for (cplx& z : u.values) z /= n;
  return u;
}

}  // namespace gpst
