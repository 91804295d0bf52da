#pragma once

#include "gpst/group.hpp"

namespace gpst {

// Row-major dense complex matrix; the few spots that need factorizations
// convert to Eigen internally.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  CVec values;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), values(static_cast<size_t>(r) * c) {}
  cplx at(int r, int c) const { return values[static_cast<size_t>(r) * cols + c]; }
  cplx& at(int r, int c) { return values[static_cast<size_t>(r) * cols + c]; }
};

std::vector<double> singular_values(const DenseMatrix& m);
double spectral_norm(const DenseMatrix& m);
int numeric_rank(const DenseMatrix& m, double threshold);
DenseMatrix adjoint_matrix(const DenseMatrix& m);
DenseMatrix matrix_difference(const DenseMatrix& a, const DenseMatrix& b);
double max_abs(const DenseMatrix& m);

}  // namespace gpst
