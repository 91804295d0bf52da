#include "gpst/localization.hpp"

#include <cmath>

namespace gpst {

SymbolFunction constant_symbol(const GelfandPair& pair, const SphericalDual& dual,
                               cplx value) {
  SymbolFunction u;
  u.time_size = pair.g().order;
  u.dual_size = dual.size();
  u.values.assign(static_cast<size_t>(u.time_size) * u.dual_size, value);
  return u;
}

SymbolFunction conj_symbol(const SymbolFunction& u) {
  SymbolFunction out = u;
  for (cplx& z : out.values) z = std::conj(z);
  return out;
}

LocalizationOperator build_localization(const GelfandPair& pair, const SphericalDual& dual,
                                        const SymbolFunction& u, const Window& theta,
                                        const GroupAutomorphism& alpha) {
  const FiniteGroup& g = pair.g();
  const int n = g.order;
  const int s = dual.size();
  const int d = pair.dim();
  if (u.time_size != n || u.dual_size != s)
    fail(errc::dimension_mismatch, "symbol shape != |G| x |S+|");

  std::vector<CVec> phi_g(s);
  for (int p = 0; p < s; ++p) phi_g[p] = expand(pair, dual.functions[p].class_values);
  const double root_delta = std::sqrt(alpha.delta_alpha);

  LocalizationOperator op;
  op.class_matrix = DenseMatrix(d, d);
  op.raw_columns = DenseMatrix(n, d);

  for (int j = 0; j < d; ++j) {
    BiInvariantSignal basis;
    basis.class_values.assign(d, cplx(0.0, 0.0));
    basis.class_values[j] = 1.0;
    const TimePhaseCoefficients c = stockwell_forward(pair, dual, basis, theta, alpha, false);

    CVec raw(n, cplx(0.0, 0.0));
    for (int p = 0; p < s; ++p) {
      if (!dual.positive_definite[p]) continue;
      const double mu = dual.weights[p];
      for (int x = 0; x < n; ++x) {
        cplx acc(0.0, 0.0);
        for (int t = 0; t < n; ++t)
          acc += u.at(t, p) * c.at(t, p) * theta.on_group[alpha.perm[g.mul[g.inv[t]][x]]];
        raw[x] += mu * root_delta * phi_g[p][x] * acc;
      }
    }

    CVec means(d, cplx(0.0, 0.0));
    for (int x = 0; x < n; ++x) means[pair.cosets.class_of[x]] += raw[x];
    for (int l = 0; l < d; ++l) means[l] /= static_cast<double>(pair.cosets.class_sizes[l]);

    double leak2 = 0.0;
    for (int x = 0; x < n; ++x) {
      op.raw_columns.at(x, j) = raw[x];
      leak2 += std::norm(raw[x] - means[pair.cosets.class_of[x]]);
    }
    op.bi_invariance_leakage = std::max(op.bi_invariance_leakage, std::sqrt(leak2));
    for (int l = 0; l < d; ++l) op.class_matrix.at(l, j) = means[l];
  }
  return op;
}

BiInvariantSignal apply(const GelfandPair& pair, const LocalizationOperator& op,
                        const BiInvariantSignal& f) {
  const int d = pair.dim();
  if (op.class_matrix.rows != d || static_cast<int>(f.class_values.size()) != d)
    fail(errc::dimension_mismatch, "operator/signal dimensions differ");
  BiInvariantSignal out;
  out.class_values.assign(d, cplx(0.0, 0.0));
  for (int l = 0; l < d; ++l)
    for (int j = 0; j < d; ++j)
      out.class_values[l] += op.class_matrix.at(l, j) * f.class_values[j];
  return out;
}

DenseMatrix orthonormal_matrix(const GelfandPair& pair, const LocalizationOperator& op) {
  const int d = pair.dim();
  DenseMatrix a(d, d);
  for (int l = 0; l < d; ++l)
    for (int j = 0; j < d; ++j)
      a.at(l, j) = op.class_matrix.at(l, j) *
                   std::sqrt(static_cast<double>(pair.cosets.class_sizes[l]) /
                             static_cast<double>(pair.cosets.class_sizes[j]));
  return a;
}

double operator_norm(const GelfandPair& pair, const LocalizationOperator& op) {
  return spectral_norm(orthonormal_matrix(pair, op));
}

double symbol_norm(const SphericalDual& dual, const SymbolFunction& u, double p) {
  if (std::isnan(p) || p < 1.0)
    fail(errc::bad_exponent, "exponent must lie in [1, inf]");
  if (u.dual_size != dual.size())
    fail(errc::dimension_mismatch, "symbol dual size != |S+|");
  if (std::isinf(p)) {
    double v = 0.0;
    for (const cplx& z : u.values) v = std::max(v, std::abs(z));
    return v;
  }
  double acc = 0.0;
  for (int t = 0; t < u.time_size; ++t)
    for (int q = 0; q < u.dual_size; ++q)
      acc += dual.weights[q] * std::pow(std::abs(u.at(t, q)), p);
  return std::pow(acc, 1.0 / p);
}

OperatorReport bound_suite(const GelfandPair& pair, const SphericalDual& dual,
                           const SymbolFunction& u, const Window& theta,
                           const GroupAutomorphism& alpha) {
  if (std::abs(theta.l2norm - 1.0) > 1e-12)
    fail(errc::window_not_unit, "bound suite requires a unit window");

  const LocalizationOperator op = build_localization(pair, dual, u, theta, alpha);

  OperatorReport r;
  r.operator_norm = operator_norm(pair, op);
  r.bi_invariance_leakage = op.bi_invariance_leakage;

  const std::pair<const char*, double> exponents[] = {
      {"1", 1.0},   {"1.25", 1.25}, {"1.5", 1.5}, {"2", 2.0},
      {"2.5", 2.5}, {"4", 4.0},     {"8", 8.0},   {"inf", INFINITY}};
  for (const auto& [key, p] : exponents) r.symbol_norms[key] = symbol_norm(dual, u, p);

  r.bound_margins["4.1"] = r.symbol_norms["2"] - r.operator_norm;
  r.bound_margins["4.3"] = r.symbol_norms["1"] - r.operator_norm;
  r.bound_margins["4.4"] = r.symbol_norms["inf"] - r.operator_norm;
  double grid_margin = INFINITY;
  for (const char* key : {"1.25", "1.5", "2.5", "4", "8"})
    grid_margin = std::min(grid_margin, r.symbol_norms[key] - r.operator_norm);
  r.bound_margins["4.5"] = grid_margin;

  r.adjoint_residual = adjoint_check(pair, dual, u, theta, alpha);
  return r;
}

double adjoint_check(const GelfandPair& pair, const SphericalDual& dual,
                     const SymbolFunction& u, const Window& theta,
                     const GroupAutomorphism& alpha) {
  const DenseMatrix a = orthonormal_matrix(pair, build_localization(pair, dual, u, theta, alpha));
  const DenseMatrix b = orthonormal_matrix(
      pair, build_localization(pair, dual, conj_symbol(u), theta, alpha));
  return spectral_norm(matrix_difference(adjoint_matrix(a), b));
}

}  // namespace gpst
