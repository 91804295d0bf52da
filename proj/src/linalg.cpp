#include "gpst/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace gpst {

namespace {

Eigen::MatrixXcd to_eigen(const DenseMatrix& m) {
  Eigen::MatrixXcd out(m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) out(r, c) = m.at(r, c);
  return out;
}

}  // namespace

std::vector<double> singular_values(const DenseMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return {};
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

double spectral_norm(const DenseMatrix& m) {
  const std::vector<double> sv = singular_values(m);
  return sv.empty() ? 0.0 : sv.front();
}

int numeric_rank(const DenseMatrix& m, double threshold) {
  int rank = 0;
  for (double s : singular_values(m))
    if (s > threshold) ++rank;
  return rank;
}

DenseMatrix adjoint_matrix(const DenseMatrix& m) {
  DenseMatrix out(m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) out.at(c, r) = std::conj(m.at(r, c));
  return out;
}

DenseMatrix matrix_difference(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    fail(errc::dimension_mismatch, "matrix shapes differ");
  DenseMatrix out(a.rows, a.cols);
  for (size_t i = 0; i < a.values.size(); ++i) out.values[i] = a.values[i] - b.values[i];
  return out;
}

double max_abs(const DenseMatrix& m) {
  double v = 0.0;
  for (const cplx& z : m.values) v = std::max(v, std::abs(z));
  return v;
}

}  // namespace gpst
