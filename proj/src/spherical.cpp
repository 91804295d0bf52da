#include "gpst/spherical.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace gpst {

namespace {

using Tensor = std::vector<std::vector<std::vector<double>>>;

// c[i][j][l] = #{ y in C_i : y^{-1} x in C_j } for any fixed x in C_l.
Tensor structure_constants(const FiniteGroup& g, const DoubleCosetPartition& p) {
  const int d = p.count();
  Tensor c(d, std::vector<std::vector<double>>(d, std::vector<double>(d, 0.0)));
  for (int l = 0; l < d; ++l) {
    const int x = p.classes[l][0];
    for (int i = 0; i < d; ++i)
      for (int y : p.classes[i]) c[i][p.class_of[g.mul[g.inv[y]][x]]][l] += 1.0;
  }
  return c;
}

double uniform_pm1(std::mt19937_64& rng) {
  // raw-bit construction keeps streams identical across standard libraries
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

}  // namespace

GelfandPair certify_gelfand(std::shared_ptr<const FiniteGroup> g,
                            const std::vector<int>& k_members) {
  GelfandPair pair;
  pair.group = std::move(g);
  pair.k = check_subgroup(*pair.group, k_members);
  pair.cosets = double_cosets(*pair.group, pair.k);
  const int d = pair.dim();
  pair.inverse_class.resize(d);
  for (int j = 0; j < d; ++j)
    pair.inverse_class[j] = pair.cosets.class_of[pair.group->inv[pair.cosets.classes[j][0]]];

  const Tensor c = structure_constants(*pair.group, pair.cosets);
  pair.certified = true;
  for (int i = 0; i < d && pair.certified; ++i)
    for (int j = 0; j < i && pair.certified; ++j)
      for (int l = 0; l < d; ++l)
        if (c[i][j][l] != c[j][i][l]) {
          pair.certified = false;
          break;
        }
  return pair;
}

GelfandPair certify_gelfand(const FiniteGroup& g, const std::vector<int>& k_members) {
  return certify_gelfand(std::make_shared<const FiniteGroup>(g), k_members);
}

std::vector<std::vector<std::vector<double>>> hecke_structure(const GelfandPair& pair) {
  return structure_constants(pair.g(), pair.cosets);
}

std::vector<SphericalFunction> spherical_functions(const GelfandPair& pair) {
  if (!pair.certified)
    fail(errc::not_gelfand, "bi-invariant algebra is not commutative");
  const FiniteGroup& g = pair.g();
  const int d = pair.dim();
  const Tensor c = structure_constants(g, pair.cosets);

  // Multiplication matrices in the orthonormal basis 1_{C_l}/sqrt(|C_l|),
  // where they are normal (the algebra is commutative and closed under
  // the adjoint f(x) -> conj(f(x^{-1}))).
  std::vector<Eigen::MatrixXd> a(d, Eigen::MatrixXd(d, d));
  for (int i = 0; i < d; ++i)
    for (int l = 0; l < d; ++l)
      for (int j = 0; j < d; ++j)
        a[i](l, j) = c[i][j][l] * std::sqrt(static_cast<double>(pair.cosets.class_sizes[l]) /
                                            static_cast<double>(pair.cosets.class_sizes[j]));

  std::mt19937_64 rng(0x5ca1ab1e0ddball);
  std::string last_issue = "no attempt made";
  for (int attempt = 0; attempt < 8; ++attempt) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < d; ++i) m += uniform_pm1(rng) * a[i];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m.cast<cplx>());
    if (es.info() != Eigen::Success) {
      last_issue = "eigensolver failed to converge";
      continue;
    }

    bool separated = true;
    for (int p = 0; p < d && separated; ++p)
      for (int q = p + 1; q < d; ++q)
        if (std::abs(es.eigenvalues()(p) - es.eigenvalues()(q)) < 1e-8) {
          separated = false;
          break;
        }
    if (!separated) {
      last_issue = "eigenvalue collision";
      continue;
    }

    std::vector<SphericalFunction> out(d);
    bool ok = true;
    for (int p = 0; p < d && ok; ++p) {
      Eigen::VectorXcd v = es.eigenvectors().col(p);
      // back to indicator coordinates: value on class l is v_l / sqrt(|C_l|)
      CVec w(d);
      for (int l = 0; l < d; ++l)
        w[l] = v(l) / std::sqrt(static_cast<double>(pair.cosets.class_sizes[l]));
      if (std::abs(w[pair.cosets.class_of[g.identity]]) < 1e-8) {
        last_issue = "eigenvector vanishes at the identity class";
        ok = false;
        break;
      }
      const cplx scale = w[pair.cosets.class_of[g.identity]];
      for (cplx& z : w) z /= scale;

      // functional equation on class representatives (its value depends on
      // x, y only through their classes)
      for (int ax = 0; ax < d && ok; ++ax)
        for (int ay = 0; ay < d; ++ay) {
          const int x = pair.cosets.classes[ax][0];
          const int y = pair.cosets.classes[ay][0];
          cplx s(0.0, 0.0);
          for (int kk : pair.k.members) s += w[pair.cosets.class_of[g.mul[g.mul[x][kk]][y]]];
          s /= static_cast<double>(pair.k.size());
          if (std::abs(s - w[ax] * w[ay]) > 1e-10) {
            last_issue = "functional equation residual too large";
            ok = false;
            break;
          }
        }
      out[p].class_values = std::move(w);
    }
    if (!ok) continue;

    std::sort(out.begin(), out.end(),
              [](const SphericalFunction& lhs, const SphericalFunction& rhs) {
                for (size_t l = 0; l < lhs.class_values.size(); ++l) {
                  const cplx a = lhs.class_values[l], b = rhs.class_values[l];
                  if (std::abs(a.real() - b.real()) > 1e-9) return a.real() > b.real();
                  if (std::abs(a.imag() - b.imag()) > 1e-9) return a.imag() > b.imag();
                }
                return false;
              });
    return out;
  }
  fail(errc::degenerate_diagonalization, "retry budget exhausted: " + last_issue);
}

bool check_positive_definite(const FiniteGroup& g, const CVec& phi) {
  if (static_cast<int>(phi.size()) != g.order)
    fail(errc::dimension_mismatch, "function length != |G|");
  const int n = g.order;
  Eigen::MatrixXcd gram(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) gram(a, b) = phi[g.mul[g.inv[a]][b]];
  if ((gram - gram.adjoint()).cwiseAbs().maxCoeff() > 1e-10) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      (gram + gram.adjoint().eval()) * 0.5, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -1e-10;
}

SphericalDual plancherel_weights(const GelfandPair& pair,
                                 std::vector<SphericalFunction> sphericals) {
  const int d = pair.dim();
  if (static_cast<int>(sphericals.size()) != d)
    fail(errc::dimension_mismatch, "need one spherical function per double coset");

  // Inversion on the indicator 1_K evaluated at the identity class, one
  // equation per indicator: sum_phi mu(phi) omega_phi(C_j^{-1}) = delta_j0 / |C_j|.
  Eigen::MatrixXcd m(d, d);
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(d);
  const int id_class = pair.cosets.class_of[pair.g().identity];
  for (int j = 0; j < d; ++j)
    for (int p = 0; p < d; ++p)
      m(j, p) = sphericals[p].class_values[pair.inverse_class[j]];
  b(id_class) = 1.0 / static_cast<double>(pair.cosets.class_sizes[id_class]);

  Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
  if (!lu.isInvertible())
    fail(errc::singular_system, "inversion system is rank-deficient");
  Eigen::VectorXcd mu = lu.solve(b);

  SphericalDual dual;
  dual.weights.resize(d);
  for (int p = 0; p < d; ++p) {
    if (std::abs(mu(p).imag()) > 1e-10 || mu(p).real() <= 0.0)
      fail(errc::singular_system,
           "weight " + std::to_string(p) + " is not a positive real");
    dual.weights[p] = mu(p).real();
  }

  // The one-point equations pin mu; require the full inversion identity on
  // every indicator at every class.
  double residual = 0.0;
  for (int j = 0; j < d; ++j)
    for (int l = 0; l < d; ++l) {
      cplx s(0.0, 0.0);
      for (int p = 0; p < d; ++p)
        s += dual.weights[p] * sphericals[p].class_values[pair.inverse_class[j]] *
             sphericals[p].class_values[l];
      s *= static_cast<double>(pair.cosets.class_sizes[j]);
      residual = std::max(residual, std::abs(s - (j == l ? 1.0 : 0.0)));
    }
  if (residual > 1e-12)
    fail(errc::singular_system,
         "inversion residual " + std::to_string(residual) + " exceeds 1e-12");

  dual.positive_definite.resize(d);
  for (int p = 0; p < d; ++p)
    dual.positive_definite[p] =
        check_positive_definite(pair.g(), expand(pair, sphericals[p].class_values)) ? 1 : 0;
  dual.functions = std::move(sphericals);
  return dual;
}

BiInvariantSignal to_classes(const GelfandPair& pair, const CVec& f, double tol) {
  if (static_cast<int>(f.size()) != pair.g().order)
    fail(errc::dimension_mismatch, "function length != |G|");
  const int d = pair.dim();
  BiInvariantSignal s;
  s.class_values.assign(d, cplx(0.0, 0.0));
  for (int j = 0; j < d; ++j) {
    for (int x : pair.cosets.classes[j]) s.class_values[j] += f[x];
    s.class_values[j] /= static_cast<double>(pair.cosets.class_sizes[j]);
  }
  double dev = 0.0;
  for (int x = 0; x < pair.g().order; ++x)
    dev = std::max(dev, std::abs(f[x] - s.class_values[pair.cosets.class_of[x]]));
  if (dev > tol)
    fail(errc::not_bi_invariant,
         "max class deviation " + std::to_string(dev) + " exceeds tolerance");
  return s;
}

CVec expand(const GelfandPair& pair, const CVec& class_values) {
  if (static_cast<int>(class_values.size()) != pair.dim())
    fail(errc::dimension_mismatch, "class vector length != class count");
  CVec f(pair.g().order);
  for (int x = 0; x < pair.g().order; ++x) f[x] = class_values[pair.cosets.class_of[x]];
  return f;
}

CVec expand(const GelfandPair& pair, const BiInvariantSignal& s) {
  return expand(pair, s.class_values);
}

CVec spherical_ft(const GelfandPair& pair, const SphericalDual& dual,
                  const BiInvariantSignal& f) {
  const int d = pair.dim();
  if (static_cast<int>(f.class_values.size()) != d)
    fail(errc::dimension_mismatch, "class vector length != class count");
  CVec out(dual.size(), cplx(0.0, 0.0));
  for (int p = 0; p < dual.size(); ++p)
    for (int j = 0; j < d; ++j)
      out[p] += f.class_values[j] * static_cast<double>(pair.cosets.class_sizes[j]) *
                dual.functions[p].class_values[pair.inverse_class[j]];
  return out;
}

CVec spherical_ft(const GelfandPair& pair, const SphericalDual& dual, const CVec& f_on_group,
                  double tol) {
  return spherical_ft(pair, dual, to_classes(pair, f_on_group, tol));
}

BiInvariantSignal spherical_ift(const GelfandPair& pair, const SphericalDual& dual,
                                const CVec& fhat) {
  if (static_cast<int>(fhat.size()) != dual.size())
    fail(errc::dimension_mismatch, "spectrum length != dual size");
  BiInvariantSignal f;
  f.class_values.assign(pair.dim(), cplx(0.0, 0.0));
  for (int p = 0; p < dual.size(); ++p) {
    if (!dual.positive_definite[p]) continue;
    for (int l = 0; l < pair.dim(); ++l)
      f.class_values[l] += dual.weights[p] * fhat[p] * dual.functions[p].class_values[l];
  }
  return f;
}

cplx class_inner(const DoubleCosetPartition& cosets, const CVec& a, const CVec& b) {
  if (a.size() != b.size() || static_cast<int>(a.size()) != cosets.count())
    fail(errc::dimension_mismatch, "class vectors must match the class count");
  cplx s(0.0, 0.0);
  for (size_t j = 0; j < a.size(); ++j)
    s += static_cast<double>(cosets.class_sizes[j]) * a[j] * std::conj(b[j]);
  return s;
}

double class_l2_norm(const DoubleCosetPartition& cosets, const CVec& a) {
  return std::sqrt(std::max(0.0, class_inner(cosets, a, a).real()));
}

cplx dual_inner(const SphericalDual& dual, const CVec& a, const CVec& b) {
  if (a.size() != b.size() || static_cast<int>(a.size()) != dual.size())
    fail(errc::dimension_mismatch, "spectra must match the dual size");
  cplx s(0.0, 0.0);
  for (size_t p = 0; p < a.size(); ++p) s += dual.weights[p] * a[p] * std::conj(b[p]);
  return s;
}

}  // namespace gpst
