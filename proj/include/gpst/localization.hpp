#pragma once

#include <map>
#include <string>

#include "gpst/stockwell.hpp"

namespace gpst {

// Symbol u on G x S+, row-major with t outermost; norms are weighted by the
// product measure (counting on G) x mu.
struct SymbolFunction {
  int time_size = 0;
  int dual_size = 0;
  CVec values;

  cplx at(int t, int p) const { return values[static_cast<size_t>(t) * dual_size + p]; }
  cplx& at(int t, int p) { return values[static_cast<size_t>(t) * dual_size + p]; }
};

SymbolFunction constant_symbol(const GelfandPair& pair, const SphericalDual& dual, cplx value);
SymbolFunction conj_symbol(const SymbolFunction& u);

// L^u f = sum_phi mu(phi) sum_t u(t,phi) (S f)(t,phi) theta_{alpha,phi,t},
// assembled on the double-coset indicator basis.  The raw columns (before
// the bi-invariant projection) are kept so the projection loss is
// observable; leakage is the largest column L2 loss.
struct LocalizationOperator {
  DenseMatrix class_matrix;  // d x d in indicator coordinates
  DenseMatrix raw_columns;   // |G| x d, unprojected images of the indicators
  double bi_invariance_leakage = 0.0;
};

LocalizationOperator build_localization(const GelfandPair& pair, const SphericalDual& dual,
                                        const SymbolFunction& u, const Window& theta,
                                        const GroupAutomorphism& alpha);

BiInvariantSignal apply(const GelfandPair& pair, const LocalizationOperator& op,
                        const BiInvariantSignal& f);

// Same operator expressed in the orthonormal basis 1_{C_j}/sqrt(|C_j|);
// its largest singular value is the L2(G//K) operator norm.
DenseMatrix orthonormal_matrix(const GelfandPair& pair, const LocalizationOperator& op);
double operator_norm(const GelfandPair& pair, const LocalizationOperator& op);

// (sum_t sum_phi mu |u|^p)^{1/p}, p = inf as the max; p < 1 is rejected.
double symbol_norm(const SphericalDual& dual, const SymbolFunction& u, double p);

struct OperatorReport {
  double operator_norm = 0.0;
  std::map<std::string, double> symbol_norms;   // keys "1", "1.25", ..., "inf"
  std::map<std::string, double> bound_margins;  // keys "4.1", "4.3", "4.4", "4.5"
  double adjoint_residual = 0.0;
  double bi_invariance_leakage = 0.0;
};

// Builds the operator, compares its norm against the L1/L2/Linf/Lp symbol
// norms, and measures the adjoint identity.  Requires a unit window.
OperatorReport bound_suite(const GelfandPair& pair, const SphericalDual& dual,
                           const SymbolFunction& u, const Window& theta,
                           const GroupAutomorphism& alpha);

// || (L^u)^* - L^{conj u} || on L2(G//K)
double adjoint_check(const GelfandPair& pair, const SphericalDual& dual,
                     const SymbolFunction& u, const Window& theta,
                     const GroupAutomorphism& alpha);

}  // namespace gpst
