#include "gpst/stockwell.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gpst {

namespace {

void require_finite(const CVec& v, const char* what) {
  for (const cplx& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      fail(errc::schema_error, std::string(what) + " contains a non-finite entry");
}

std::vector<CVec> expanded_sphericals(const GelfandPair& pair, const SphericalDual& dual) {
  std::vector<CVec> out(dual.size());
  for (int p = 0; p < dual.size(); ++p) out[p] = expand(pair, dual.functions[p].class_values);
  return out;
}

double atom_residual(const GelfandPair& pair, const SphericalDual& dual, const CVec& f_g,
                     const Window& theta, const GroupAutomorphism& alpha,
                     const TimePhaseCoefficients& c) {
  const FiniteGroup& g = pair.g();
  const CVec dilated = dilation(g, alpha, theta.on_group);
  double residual = 0.0;
  for (int t = 0; t < g.order; ++t) {
    const CVec shifted = translation(g, t, dilated);
    for (int p = 0; p < dual.size(); ++p) {
      const CVec atom = modulation(pair, dual.functions[p], shifted);
      residual = std::max(residual, std::abs(c.at(t, p) - inner(f_g, atom)));
    }
  }
  return residual;
}

}  // namespace

Window make_window(const GelfandPair& pair, const CVec& values_on_group, double tol) {
  require_finite(values_on_group, "window");
  Window w;
  w.class_values = to_classes(pair, values_on_group, tol).class_values;
  w.on_group = values_on_group;
  w.l2norm = l2_norm(values_on_group);
  return w;
}

Window window_from_classes(const GelfandPair& pair, const CVec& class_values) {
  require_finite(class_values, "window");
  Window w;
  w.on_group = expand(pair, class_values);
  w.class_values = class_values;
  w.l2norm = l2_norm(w.on_group);
  return w;
}

CVec modulation(const GelfandPair& pair, const SphericalFunction& phi, const CVec& f) {
  if (f.size() != static_cast<size_t>(pair.g().order))
    fail(errc::dimension_mismatch, "function length != |G|");
  CVec out(f.size());
  for (size_t x = 0; x < f.size(); ++x)
    out[x] = phi.class_values[pair.cosets.class_of[x]] * f[x];
  return out;
}

CVec translation(const FiniteGroup& g, int t, const CVec& f) {
  if (f.size() != static_cast<size_t>(g.order))
    fail(errc::dimension_mismatch, "function length != |G|");
  if (t < 0 || t >= g.order) fail(errc::schema_error, "translation element out of range");
  CVec out(f.size());
  const int ti = g.inv[t];
  for (int x = 0; x < g.order; ++x) out[x] = f[g.mul[ti][x]];
  return out;
}

CVec dilation(const FiniteGroup& g, const GroupAutomorphism& alpha, const CVec& f) {
  if (f.size() != static_cast<size_t>(g.order))
    fail(errc::dimension_mismatch, "function length != |G|");
  const double scale = std::sqrt(alpha.delta_alpha);
  CVec out(f.size());
  for (int x = 0; x < g.order; ++x) out[x] = scale * f[alpha.perm[x]];
  return out;
}

Atom make_atom(const GelfandPair& pair, const SphericalDual& dual, const Window& theta,
               const GroupAutomorphism& alpha, int t, int phi) {
  if (phi < 0 || phi >= dual.size()) fail(errc::schema_error, "spherical index out of range");
  Atom a;
  a.t = t;
  a.phi = phi;
  a.values = modulation(pair, dual.functions[phi],
                        translation(pair.g(), t, dilation(pair.g(), alpha, theta.on_group)));
  return a;
}

TimePhaseCoefficients stockwell_forward(const GelfandPair& pair, const SphericalDual& dual,
                                        const BiInvariantSignal& f, const Window& theta,
                                        const GroupAutomorphism& alpha, bool verify) {
  const FiniteGroup& g = pair.g();
  const int n = g.order;
  const int s = dual.size();
  const CVec f_g = expand(pair, f);
  const std::vector<CVec> phi_g = expanded_sphericals(pair, dual);
  const double root_delta = std::sqrt(alpha.delta_alpha);

  TimePhaseCoefficients c;
  c.time_size = n;
  c.dual_size = s;
  c.values.assign(static_cast<size_t>(n) * s, cplx(0.0, 0.0));

  CVec shifted(n);
  for (int t = 0; t < n; ++t) {
    const int ti = g.inv[t];
    for (int x = 0; x < n; ++x) shifted[x] = theta.on_group[alpha.perm[g.mul[ti][x]]];
    for (int p = 0; p < s; ++p) {
      cplx acc(0.0, 0.0);
      for (int x = 0; x < n; ++x) acc += f_g[x] * std::conj(phi_g[p][x]) * std::conj(shifted[x]);
      c.at(t, p) = root_delta * acc;
    }
  }

  if (verify) {
    c.factorization_residual = atom_residual(pair, dual, f_g, theta, alpha, c);
    const double tol = 1e-12 * std::max(1.0, l2_norm(f_g) * theta.l2norm);
    if (!(c.factorization_residual <= tol))
      throw std::runtime_error(
          "internal consistency: coefficient/atom factorization residual " +
          std::to_string(c.factorization_residual) + " exceeds " + std::to_string(tol));
  }
  return c;
}

BiInvariantSignal stockwell_inverse(const GelfandPair& pair, const SphericalDual& dual,
                                    const TimePhaseCoefficients& c, const Window& theta,
                                    const GroupAutomorphism& alpha, double* leakage) {
  const FiniteGroup& g = pair.g();
  const int n = g.order;
  const int s = dual.size();
  if (c.time_size != n || c.dual_size != s)
    fail(errc::dimension_mismatch, "coefficient array shape != |G| x |S+|");
  if (theta.l2norm == 0.0) fail(errc::zero_window, "window has zero L2 norm");

  const std::vector<CVec> phi_g = expanded_sphericals(pair, dual);
  const double scale = std::sqrt(alpha.delta_alpha) / (theta.l2norm * theta.l2norm);

  CVec raw(n, cplx(0.0, 0.0));
  for (int p = 0; p < s; ++p) {
    if (!dual.positive_definite[p]) continue;
    const double mu = dual.weights[p];
    for (int x = 0; x < n; ++x) {
      cplx acc(0.0, 0.0);
      for (int t = 0; t < n; ++t)
        acc += c.at(t, p) * theta.on_group[alpha.perm[g.mul[g.inv[t]][x]]];
      raw[x] += mu * phi_g[p][x] * acc;
    }
  }
  for (cplx& z : raw) z *= scale;

  BiInvariantSignal out;
  out.class_values.assign(pair.dim(), cplx(0.0, 0.0));
  for (int x = 0; x < n; ++x) out.class_values[pair.cosets.class_of[x]] += raw[x];
  for (int j = 0; j < pair.dim(); ++j)
    out.class_values[j] /= static_cast<double>(pair.cosets.class_sizes[j]);

  if (leakage) {
    double s2 = 0.0;
    for (int x = 0; x < n; ++x)
      s2 += std::norm(raw[x] - out.class_values[pair.cosets.class_of[x]]);
    *leakage = std::sqrt(s2);
  }
  return out;
}

double eq8_residual(const GelfandPair& pair, const SphericalDual& dual,
                    const BiInvariantSignal& f, const Window& theta,
                    const GroupAutomorphism& alpha, const TimePhaseCoefficients& c) {
  if (c.time_size != pair.g().order || c.dual_size != dual.size())
    fail(errc::dimension_mismatch, "coefficient array shape != |G| x |S+|");
  return atom_residual(pair, dual, expand(pair, f), theta, alpha, c);
}

cplx coefficient_inner(const SphericalDual& dual, const TimePhaseCoefficients& a,
                       const TimePhaseCoefficients& b) {
  if (a.time_size != b.time_size || a.dual_size != b.dual_size ||
      a.dual_size != dual.size())
    fail(errc::dimension_mismatch, "coefficient arrays must share a shape");
  cplx acc(0.0, 0.0);
  for (int t = 0; t < a.time_size; ++t)
    for (int p = 0; p < a.dual_size; ++p)
      acc += dual.weights[p] * a.at(t, p) * std::conj(b.at(t, p));
  return acc;
}

double coefficient_l2(const SphericalDual& dual, const TimePhaseCoefficients& c) {
  return std::sqrt(std::max(0.0, coefficient_inner(dual, c, c).real()));
}

double coefficient_sup(const TimePhaseCoefficients& c) {
  double v = 0.0;
  for (const cplx& z : c.values) v = std::max(v, std::abs(z));
  return v;
}

ReproducingKernel reproducing_kernel(const GelfandPair& pair, const SphericalDual& dual,
                                     const Window& theta, const GroupAutomorphism& alpha) {
  if (std::abs(theta.l2norm - 1.0) > 1e-12)
    fail(errc::window_not_unit, "reproducing kernel requires a unit window");
  const FiniteGroup& g = pair.g();
  const int n = g.order;
  const int s = dual.size();

  std::vector<CVec> atoms(static_cast<size_t>(n) * s);
  const CVec dilated = dilation(g, alpha, theta.on_group);
  for (int t = 0; t < n; ++t) {
    const CVec shifted = translation(g, t, dilated);
    for (int p = 0; p < s; ++p)
      atoms[static_cast<size_t>(t) * s + p] = modulation(pair, dual.functions[p], shifted);
  }

  ReproducingKernel ker;
  ker.time_size = n;
  ker.dual_size = s;
  ker.k = DenseMatrix(n * s, n * s);
  for (int i = 0; i < n * s; ++i)
    for (int j = 0; j < n * s; ++j) ker.k.at(i, j) = std::conj(inner(atoms[i], atoms[j]));
  return ker;
}

TimePhaseCoefficients kernel_apply(const SphericalDual& dual, const ReproducingKernel& kernel,
                                   const TimePhaseCoefficients& f) {
  const int n = kernel.time_size;
  const int s = kernel.dual_size;
  if (f.time_size != n || f.dual_size != s || s != dual.size())
    fail(errc::dimension_mismatch, "coefficient array shape != kernel shape");
  TimePhaseCoefficients out;
  out.time_size = n;
  out.dual_size = s;
  out.values.assign(static_cast<size_t>(n) * s, cplx(0.0, 0.0));
  for (int i = 0; i < n * s; ++i) {
    cplx acc(0.0, 0.0);
    for (int tau = 0; tau < n; ++tau)
      for (int q = 0; q < s; ++q)
        acc += dual.weights[q] * kernel.k.at(i, tau * s + q) * f.at(tau, q);
    out.values[i] = acc;
  }
  return out;
}

double kernel_hermitian_deviation(const ReproducingKernel& kernel) {
  double v = 0.0;
  const int m = kernel.k.rows;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j)
      v = std::max(v, std::abs(kernel.k.at(i, j) - std::conj(kernel.k.at(j, i))));
  return v;
}

DenseMatrix transform_matrix(const GelfandPair& pair, const SphericalDual& dual,
                             const Window& theta, const GroupAutomorphism& alpha) {
  const int n = pair.g().order;
  const int s = dual.size();
  const int d = pair.dim();
  DenseMatrix m(n * s, d);
  for (int j = 0; j < d; ++j) {
    BiInvariantSignal basis;
    basis.class_values.assign(d, cplx(0.0, 0.0));
    basis.class_values[j] =
        1.0 / std::sqrt(static_cast<double>(pair.cosets.class_sizes[j]));
    const TimePhaseCoefficients c =
        stockwell_forward(pair, dual, basis, theta, alpha, false);
    for (int t = 0; t < n; ++t)
      for (int p = 0; p < s; ++p)
        m.at(t * s + p, j) = std::sqrt(dual.weights[p]) * c.at(t, p);
  }
  return m;
}

DenseMatrix classic_stransform(const CVec& signal, const CVec& window, long multiplier) {
  const int n = static_cast<int>(signal.size());
  if (n == 0) fail(errc::dimension_mismatch, "empty signal");
  if (window.size() != signal.size())
    fail(errc::dimension_mismatch, "window length != signal length");
  const long mm = ((multiplier % n) + n) % n;
  if (std::gcd(mm, static_cast<long>(n)) != 1)
    fail(errc::not_a_unit,
         "multiplier " + std::to_string(multiplier) + " is not a unit mod " +
             std::to_string(n));

  DenseMatrix out(n, n);
  const double tau = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (int t = 0; t < n; ++t)
    for (int k = 0; k < n; ++k) {
      cplx acc(0.0, 0.0);
      for (int x = 0; x < n; ++x) {
        const cplx chi = std::polar(1.0, -tau * static_cast<double>((k * x) % n));
        const int shift = static_cast<int>((mm * ((x - t + n) % n)) % n);
        acc += signal[x] * chi * std::conj(window[shift]);
      }
      out.at(t, k) = acc;
    }
  return out;
}

}  // namespace gpst
