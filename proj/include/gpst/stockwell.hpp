#pragma once

#include "gpst/linalg.hpp"
#include "gpst/spherical.hpp"

namespace gpst {

// Bi-invariant analysis window, kept both as a function on G and as class
// values.  Norms use counting measure.
struct Window {
  CVec on_group;
  CVec class_values;
  double l2norm = 0.0;
};

Window make_window(const GelfandPair& pair, const CVec& values_on_group, double tol = 1e-12);
Window window_from_classes(const GelfandPair& pair, const CVec& class_values);

// theta_{alpha,phi,t} = M_phi T_t D_alpha theta
struct Atom {
  CVec values;
  int t = 0;
  int phi = 0;
};

CVec modulation(const GelfandPair& pair, const SphericalFunction& phi, const CVec& f);
CVec translation(const FiniteGroup& g, int t, const CVec& f);
CVec dilation(const FiniteGroup& g, const GroupAutomorphism& alpha, const CVec& f);

Atom make_atom(const GelfandPair& pair, const SphericalDual& dual, const Window& theta,
               const GroupAutomorphism& alpha, int t, int phi);

// Coefficients over G x S+ carrying the measure (counting) x mu.  Stored
// row-major with t outermost.  factorization_residual records the largest
// deviation between the direct sum and the atom inner product observed
// while the array was filled.
struct TimePhaseCoefficients {
  int time_size = 0;
  int dual_size = 0;
  CVec values;
  double factorization_residual = 0.0;

  cplx at(int t, int p) const { return values[static_cast<size_t>(t) * dual_size + p]; }
  cplx& at(int t, int p) { return values[static_cast<size_t>(t) * dual_size + p]; }
};

TimePhaseCoefficients stockwell_forward(const GelfandPair& pair, const SphericalDual& dual,
                                        const BiInvariantSignal& f, const Window& theta,
                                        const GroupAutomorphism& alpha, bool verify = true);

// f(x) = (delta^{1/2}/||theta||^2) sum_phi mu sum_t c(t,phi) phi(x) theta(alpha(t^{-1}x)),
// projected onto the bi-invariant subspace; the L2 norm of the discarded
// component is written to *leakage when given.
BiInvariantSignal stockwell_inverse(const GelfandPair& pair, const SphericalDual& dual,
                                    const TimePhaseCoefficients& c, const Window& theta,
                                    const GroupAutomorphism& alpha, double* leakage = nullptr);

// max_(t,phi) |c(t,phi) - <f, theta_{alpha,phi,t}>| with atoms rebuilt from
// the operator composition.
double eq8_residual(const GelfandPair& pair, const SphericalDual& dual,
                    const BiInvariantSignal& f, const Window& theta,
                    const GroupAutomorphism& alpha, const TimePhaseCoefficients& c);

cplx coefficient_inner(const SphericalDual& dual, const TimePhaseCoefficients& a,
                       const TimePhaseCoefficients& b);
double coefficient_l2(const SphericalDual& dual, const TimePhaseCoefficients& c);
double coefficient_sup(const TimePhaseCoefficients& c);

// k(t,phi,tau,psi) = conj(<theta_{alpha,phi,t}, theta_{alpha,psi,tau}>),
// flattened with row (t*|S+|+phi) and column (tau*|S+|+psi).
struct ReproducingKernel {
  int time_size = 0;
  int dual_size = 0;
  DenseMatrix k;
};

ReproducingKernel reproducing_kernel(const GelfandPair& pair, const SphericalDual& dual,
                                     const Window& theta, const GroupAutomorphism& alpha);
TimePhaseCoefficients kernel_apply(const SphericalDual& dual, const ReproducingKernel& kernel,
                                   const TimePhaseCoefficients& f);
double kernel_hermitian_deviation(const ReproducingKernel& kernel);

// The transform as a matrix between orthonormal coordinates: columns are the
// images of 1_{C_j}/sqrt(|C_j|), rows are scaled by sqrt(mu(phi)) so the
// Euclidean norms match the weighted L2 norms on both sides.
DenseMatrix transform_matrix(const GelfandPair& pair, const SphericalDual& dual,
                             const Window& theta, const GroupAutomorphism& alpha);

// Cyclic-group S-transform: rows t, columns the frequency index k of the
// character exp(2 pi i k x / N); multiplier must be a unit mod N.
DenseMatrix classic_stransform(const CVec& signal, const CVec& window, long multiplier);

}  // namespace gpst
