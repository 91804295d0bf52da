#pragma once

#include <memory>

#include "gpst/group.hpp"

namespace gpst {

// (G, K) together with its double-coset partition.  `certified` records
// whether the bi-invariant convolution algebra was found to be commutative;
// a false value is a legitimate result, not an error.
struct GelfandPair {
  std::shared_ptr<const FiniteGroup> group;
  Subgroup k;
  DoubleCosetPartition cosets;
  std::vector<int> inverse_class;  // class id of x^{-1} for x in class i
  bool certified = false;

  const FiniteGroup& g() const { return *group; }
  int dim() const { return cosets.count(); }
};

GelfandPair certify_gelfand(std::shared_ptr<const FiniteGroup> g,
                            const std::vector<int>& k_members);
GelfandPair certify_gelfand(const FiniteGroup& g, const std::vector<int>& k_members);

// c[i][j][l] with 1_{C_i} * 1_{C_j} = sum_l c[i][j][l] 1_{C_l}.
std::vector<std::vector<std::vector<double>>> hecke_structure(const GelfandPair& pair);

// Values on double-coset classes; identity-class entry is exactly 1.
struct SphericalFunction {
  CVec class_values;
};

struct SphericalDual {
  std::vector<SphericalFunction> functions;  // one per double coset
  std::vector<double> weights;               // Plancherel weights, strictly positive
  std::vector<uint8_t> positive_definite;
  int size() const { return static_cast<int>(functions.size()); }
};

// One spherical function per double coset, obtained by simultaneously
// diagonalizing the commuting Hecke multiplication matrices.  Throws
// NotGelfand for uncertified pairs and DegenerateDiagonalization if the
// retry budget is exhausted.
std::vector<SphericalFunction> spherical_functions(const GelfandPair& pair);

// Gram-matrix test: phi is positive-definite iff [phi(x_n^{-1} x_m)] is
// Hermitian positive semidefinite (min eigenvalue >= -1e-10).
bool check_positive_definite(const FiniteGroup& g, const CVec& phi);

// Weights solving the inversion formula exactly on every double-coset
// indicator; fills the positive-definite mask.  Throws SingularSystem when
// the solve fails or the residual exceeds 1e-12.
SphericalDual plancherel_weights(const GelfandPair& pair,
                                 std::vector<SphericalFunction> sphericals);

// Complex values per double-coset class.
struct BiInvariantSignal {
  CVec class_values;
};

// Collapse a group function to class values; max in-class deviation above
// tol raises NotBiInvariant.
BiInvariantSignal to_classes(const GelfandPair& pair, const CVec& f, double tol = 1e-12);
CVec expand(const GelfandPair& pair, const BiInvariantSignal& s);
CVec expand(const GelfandPair& pair, const CVec& class_values);

// fhat(phi) = sum_x f(x) phi(x^{-1})
CVec spherical_ft(const GelfandPair& pair, const SphericalDual& dual,
                  const BiInvariantSignal& f);
CVec spherical_ft(const GelfandPair& pair, const SphericalDual& dual, const CVec& f_on_group,
                  double tol = 1e-12);

// f(x) = sum_phi mu(phi) fhat(phi) phi(x), summed over the positive-definite subset
BiInvariantSignal spherical_ift(const GelfandPair& pair, const SphericalDual& dual,
                                const CVec& fhat);

// L^2(G//K) inner product / norm in class coordinates (counting measure on G).
cplx class_inner(const DoubleCosetPartition& cosets, const CVec& a, const CVec& b);
double class_l2_norm(const DoubleCosetPartition& cosets, const CVec& a);

// mu-weighted inner product over the dual.
cplx dual_inner(const SphericalDual& dual, const CVec& a, const CVec& b);

}  // namespace gpst
