#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "gpst/error.hpp"

namespace gpst {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

/// A complex-valued function on the group, one value per element index.
using GroupFunction = CVec;

/// Finite group given by a validated Cayley table. Elements are the indices
/// 0..order-1 and the Haar measure is counting measure (weight 1 each).
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> mul;  // mul[x][y] = x*y
  int identity = 0;
  std::vector<int> inv;

  int op(int x, int y) const { return mul[x][y]; }
};

/// Validates the table (unit, inverses, associativity; associativity is
/// exhaustive up to order 512 and sampled on 10^6 triples above that).
/// Throws NoIdentity / NoInverse / NotAssociative with a witness.
FiniteGroup build_group(const std::vector<std::vector<int>>& mul_table);

struct Subgroup {
  std::vector<int> members;      // ascending
  std::vector<uint8_t> mask;     // size |G|
  bool contains(int x) const { return mask[x] != 0; }
  int size() const { return static_cast<int>(members.size()); }
};

/// Throws MissingIdentity or NotClosed (naming the witness pair).
Subgroup check_subgroup(const FiniteGroup& g, std::vector<int> members);

/// delta_alpha is always 1 on a finite group (counting measure is invariant
/// under any bijection); the field is kept so the dilation scale appears
/// explicitly in the transform formulas.
struct GroupAutomorphism {
  std::vector<int> perm;
  double delta_alpha = 1.0;
  int operator()(int x) const { return perm[x]; }
};

GroupAutomorphism check_automorphism(const FiniteGroup& g, std::vector<int> perm);
GroupAutomorphism identity_automorphism(const FiniteGroup& g);

struct DoubleCosetPartition {
  std::vector<int> class_of;               // |G| entries
  std::vector<std::vector<int>> classes;   // members ascending; class 0 = KeK
  std::vector<int> class_sizes;
  int count() const { return static_cast<int>(classes.size()); }
};

DoubleCosetPartition double_cosets(const FiniteGroup& g, const Subgroup& k);

/// (f*h)(x) = sum_y f(y) h(y^{-1} x)
CVec convolve(const FiniteGroup& g, const CVec& f, const CVec& h);

/// Orthogonal projection onto the span of double-coset indicators; equals
/// averaging f(k x k') over K x K, i.e. the mean of f over each class.
CVec bi_invariant_project(const DoubleCosetPartition& cosets, const CVec& f);

double l1_norm(const CVec& f);
double l2_norm(const CVec& f);
cplx inner(const CVec& f, const CVec& g);  // sum_x f(x) conj(g(x))

}  // namespace gpst
