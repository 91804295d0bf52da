#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "doctest.h"
#include "gpst/catalog.hpp"
#include "gpst/draws.hpp"
#include "gpst/stockwell.hpp"
#include "oracles.hpp"

using namespace gpst;

namespace {

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return errc::schema_error;
}

CVec delta(int n, int x) {
  CVec f(n, cplx(0.0, 0.0));
  f[x] = 1.0;
  return f;
}

// frequency index of a cyclic-group spherical function, read off at class 1
int character_index(const CatalogEntry& e, int p) {
  const int n = e.pair.g().order;
  const cplx v = e.dual.functions[p].class_values[e.pair.cosets.class_of[1]];
  const double turns = std::arg(v) * n / (2.0 * oracles::kPi);
  return (static_cast<int>(std::lround(turns)) % n + n) % n;
}

}  // namespace

TEST_SUITE("stockwell") {

TEST_CASE("modulation multiplies by spherical values") {
  const CatalogEntry& e = get_pair("cyclic-4");
  // find the character with omega(1) = i
  int p1 = -1;
  for (int p = 0; p < 4; ++p)
    if (character_index(e, p) == 1) p1 = p;
  REQUIRE(p1 >= 0);
  const CVec out = modulation(e.pair, e.dual.functions[p1], delta(4, 2));
  CHECK(std::abs(out[2] - cplx(-1.0, 0.0)) < 1e-12);  // i^2 = -1
  CHECK(std::abs(out[0]) < 1e-15);

  // the trivial spherical leaves signals unchanged
  const CatalogEntry& s3 = get_pair("sym-3");
  int p0 = -1;
  for (int p = 0; p < 2; ++p)
    if (std::abs(s3.dual.functions[p].class_values[1] - cplx(1.0, 0.0)) < 1e-9) p0 = p;
  REQUIRE(p0 >= 0);
  Rng rng(2);
  CVec f(6);
  for (auto& v : f) v = rng.zbox();
  const CVec same = modulation(s3.pair, s3.dual.functions[p0], f);
  for (int x = 0; x < 6; ++x) CHECK(std::abs(same[x] - f[x]) < 1e-12);
}

TEST_CASE("translation moves point masses by left multiplication") {
  const FiniteGroup g = build_group(cyclic_table(8));
  const CVec out = translation(g, 2, delta(8, 1));
  for (int x = 0; x < 8; ++x)
    CHECK(std::abs(out[x] - (x == 3 ? cplx(1.0, 0.0) : cplx(0.0, 0.0))) < 1e-15);
  CHECK(code_of([&] { translation(g, 9, delta(8, 0)); }) == errc::schema_error);
}

TEST_CASE("dilation composes with the automorphism") {
  const FiniteGroup g = build_group(cyclic_table(8));
  std::vector<int> m3(8);
  for (int x = 0; x < 8; ++x) m3[x] = (3 * x) % 8;
  const GroupAutomorphism a = check_automorphism(g, m3);
  const CVec out = dilation(g, a, delta(8, 1));
  // (D f)(x) = f(3x), nonzero exactly at x = 3 since 3*3 = 1 mod 8
  for (int x = 0; x < 8; ++x)
    CHECK(std::abs(out[x] - (x == 3 ? cplx(1.0, 0.0) : cplx(0.0, 0.0))) < 1e-15);

  const GroupAutomorphism id = identity_automorphism(g);
  Rng rng(4);
  CVec f(8);
  for (auto& v : f) v = rng.zbox();
  const CVec same = dilation(g, id, f);
  for (int x = 0; x < 8; ++x) CHECK(std::abs(same[x] - f[x]) < 1e-15);
}

TEST_CASE("atoms compose modulation, translation and dilation") {
  const CatalogEntry& e = get_pair("dihedral-4");
  Rng rng(6);
  const Window theta = random_unit_window(e.pair, rng);
  const GroupAutomorphism* alpha = e.find_automorphism("id");
  REQUIRE(alpha != nullptr);
  const FiniteGroup& g = e.pair.g();
  for (int t : {0, 3, 5})
    for (int p = 0; p < e.dual.size(); ++p) {
      const Atom atom = make_atom(e.pair, e.dual, theta, *alpha, t, p);
      CHECK(atom.t == t);
      CHECK(atom.phi == p);
      const CVec phi_g = expand(e.pair, e.dual.functions[p].class_values);
      for (int x = 0; x < g.order; ++x) {
        const cplx want = phi_g[x] * theta.on_group[g.mul[g.inv[t]][x]];
        CHECK(std::abs(atom.values[x] - want) < 1e-13);
      }
    }
  CHECK(code_of([&] { make_atom(e.pair, e.dual, theta, *alpha, 0, 99); }) == errc::schema_error);
}

TEST_CASE("windows must be bi-invariant and finite") {
  const CatalogEntry& s3 = get_pair("sym-3");
  CHECK(code_of([&] { make_window(s3.pair, delta(6, 0)); }) == errc::not_bi_invariant);
  CVec bad(6, cplx(1.0, 0.0));
  bad[3] = cplx(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK(code_of([&] { make_window(s3.pair, bad); }) == errc::schema_error);

  const Window w = window_from_classes(s3.pair, {cplx(0.5, 0.0), cplx(0.0, 0.0)});
  CHECK(w.l2norm == doctest::Approx(std::sqrt(2.0 * 0.25)));
  CHECK(std::abs(w.on_group[0] - cplx(0.5, 0.0)) < 1e-15);
}

TEST_CASE("point window reads the signal off along the diagonal") {
  const CatalogEntry& e = get_pair("cyclic-8");
  const Window theta = make_window(e.pair, delta(8, 0));
  Rng rng(8);
  const BiInvariantSignal f = random_signal(e.pair, rng);
  for (const char* an : {"id", "m3"}) {
    const GroupAutomorphism* alpha = e.find_automorphism(an);
    REQUIRE(alpha != nullptr);
    const TimePhaseCoefficients c = stockwell_forward(e.pair, e.dual, f, theta, *alpha);
    for (int t = 0; t < 8; ++t)
      for (int p = 0; p < e.dual.size(); ++p) {
        const cplx want = f.class_values[e.pair.cosets.class_of[t]] *
                          std::conj(e.dual.functions[p].class_values[e.pair.cosets.class_of[t]]);
        CHECK(std::abs(c.at(t, p) - want) < 1e-13);
      }
  }
}

TEST_CASE("forward transform always verifies against its atoms") {
  const CatalogEntry& e = get_pair("sym-4");
  Rng rng(10);
  const Window theta = random_unit_window(e.pair, rng);
  const BiInvariantSignal f = random_unit_signal(e.pair, rng);
  const GroupAutomorphism* alpha = e.find_automorphism("c01");
  REQUIRE(alpha != nullptr);
  const TimePhaseCoefficients c = stockwell_forward(e.pair, e.dual, f, theta, *alpha);
  CHECK(c.factorization_residual <= 1e-12);
  CHECK(eq8_residual(e.pair, e.dual, f, theta, *alpha, c) <= 1e-12);
}

TEST_CASE("zero signal maps to zero coefficients") {
  const CatalogEntry& e = get_pair("dihedral-6");
  Rng rng(12);
  const Window theta = random_unit_window(e.pair, rng);
  BiInvariantSignal zero;
  zero.class_values.assign(e.pair.dim(), cplx(0.0, 0.0));
  const GroupAutomorphism* alpha = e.find_automorphism("id");
  const TimePhaseCoefficients c = stockwell_forward(e.pair, e.dual, zero, theta, *alpha);
  CHECK(coefficient_sup(c) == doctest::Approx(0.0));
}

TEST_CASE("transform is an isometry onto coefficients for abelian groups") {
  for (const char* name : {"cyclic-4", "cyclic-8"}) {
    const CatalogEntry& e = get_pair(name);
    Rng rng(14);
    for (const auto& [an, alpha] : e.automorphisms) {
      (void)an;
      const Window theta = random_unit_window(e.pair, rng);
      for (int trial = 0; trial < 25; ++trial) {
        const BiInvariantSignal f = random_signal(e.pair, rng);
        const TimePhaseCoefficients c = stockwell_forward(e.pair, e.dual, f, theta, alpha);
        CHECK(coefficient_l2(e.dual, c) ==
              doctest::Approx(class_l2_norm(e.pair.cosets, f.class_values)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("round trip is exact on abelian pairs") {
  for (const char* name : {"cyclic-4", "cyclic-8", "cyclic-16"}) {
    const CatalogEntry& e = get_pair(name);
    Rng rng(16);
    for (const auto& [an, alpha] : e.automorphisms) {
      (void)an;
      const Window theta = random_unit_window(e.pair, rng);
      const BiInvariantSignal f = random_signal(e.pair, rng);
      const TimePhaseCoefficients c = stockwell_forward(e.pair, e.dual, f, theta, alpha);
      double leakage = -1.0;
      const BiInvariantSignal back = stockwell_inverse(e.pair, e.dual, c, theta, alpha, &leakage);
      for (int j = 0; j < e.pair.dim(); ++j)
        CHECK(std::abs(back.class_values[j] - f.class_values[j]) < 1e-11);
      CHECK(leakage >= 0.0);
      CHECK(leakage < 1e-10);
    }
  }
}

TEST_CASE("round trip on a nonabelian pair stays finite and bi-invariant") {
  const CatalogEntry& e = get_pair("sym-3");
  Rng rng(18);
  const Window theta = random_unit_window(e.pair, rng);
  const BiInvariantSignal f = random_unit_signal(e.pair, rng);
  const GroupAutomorphism* alpha = e.find_automorphism("id");
  const TimePhaseCoefficients c = stockwell_forward(e.pair, e.dual, f, theta, *alpha);
  double leakage = -1.0;
  const BiInvariantSignal back = stockwell_inverse(e.pair, e.dual, c, theta, *alpha, &leakage);
  double dev = 0.0;
  for (int j = 0; j < e.pair.dim(); ++j) {
    CHECK(std::isfinite(back.class_values[j].real()));
    dev = std::max(dev, std::abs(back.class_values[j] - f.class_values[j]));
  }
  CHECK(leakage >= 0.0);
  // the exact inversion identity is an abelian phenomenon; here it degrades
  // but must stay bounded for a unit signal and unit window
  CHECK(dev < 10.0);
}

TEST_CASE("inverse edge cases") {
  const CatalogEntry& e = get_pair("cyclic-4");
  const GroupAutomorphism* alpha = e.find_automorphism("id");

  TimePhaseCoefficients zero;
  zero.time_size = 4;
  zero.dual_size = 4;
  zero.values.assign(16, cplx(0.0, 0.0));
  const Window theta = window_from_classes(e.pair, CVec(4, cplx(0.5, 0.0)));
  const BiInvariantSignal out = stockwell_inverse(e.pair, e.dual, zero, theta, *alpha);
  for (const cplx& v : out.class_values) CHECK(std::abs(v) < 1e-15);

  const Window dead = window_from_classes(e.pair, CVec(4, cplx(0.0, 0.0)));
  CHECK(code_of([&] { stockwell_inverse(e.pair, e.dual, zero, dead, *alpha); }) ==
        errc::zero_window);

  TimePhaseCoefficients bad;
  bad.time_size = 3;
  bad.dual_size = 4;
  bad.values.assign(12, cplx(0.0, 0.0));
  CHECK(code_of([&] { stockwell_inverse(e.pair, e.dual, bad, theta, *alpha); }) ==
        errc::dimension_mismatch);
}

TEST_CASE("reproducing kernel on an abelian pair") {
  const CatalogEntry& e = get_pair("cyclic-4");
  Rng rng(20);
  const Window theta = random_unit_window(e.pair, rng);
  const GroupAutomorphism* alpha = e.find_automorphism("m3");
  REQUIRE(alpha != nullptr);
  const ReproducingKernel ker = reproducing_kernel(e.pair, e.dual, theta, *alpha);

  CHECK(kernel_hermitian_deviation(ker) < 1e-12);
  // every atom of a unit window on an abelian pair is itself a unit vector
  for (int i = 0; i < ker.k.rows; ++i)
    CHECK(std::abs(ker.k.at(i, i) - cplx(1.0, 0.0)) < 1e-12);

  // the kernel reproduces transforms of bi-invariant signals
  const BiInvariantSignal f = random_signal(e.pair, rng);
  const TimePhaseCoefficients c = stockwell_forward(e.pair, e.dual, f, theta, *alpha);
  const TimePhaseCoefficients back = kernel_apply(e.dual, ker, c);
  for (int i = 0; i < 16; ++i) CHECK(std::abs(back.values[i] - c.values[i]) < 1e-11);
}

TEST_CASE("kernel requires a unit window") {
  const CatalogEntry& e = get_pair("cyclic-4");
  const Window half = window_from_classes(e.pair, CVec(4, cplx(0.25, 0.0)));
  const GroupAutomorphism* alpha = e.find_automorphism("id");
  CHECK(code_of([&] { reproducing_kernel(e.pair, e.dual, half, *alpha); }) ==
        errc::window_not_unit);
}

TEST_CASE("transform matrix is injective with near-unit spectrum on abelian pairs") {
  const CatalogEntry& e = get_pair("cyclic-8");
  Rng rng(22);
  const Window theta = random_unit_window(e.pair, rng);
  const GroupAutomorphism* alpha = e.find_automorphism("m5");
  REQUIRE(alpha != nullptr);
  const DenseMatrix m = transform_matrix(e.pair, e.dual, theta, *alpha);
  CHECK(m.rows == 64);
  CHECK(m.cols == 8);
  CHECK(numeric_rank(m, 1e-9) == 8);
  for (double s : singular_values(m)) CHECK(s == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("transform matrix keeps full rank on a nonabelian pair") {
  const CatalogEntry& e = get_pair("sym-3");
  Rng rng(24);
  for (int trial = 0; trial < 3; ++trial) {
    const Window theta = random_unit_window(e.pair, rng);
    const GroupAutomorphism* alpha = e.find_automorphism("id");
    const DenseMatrix m = transform_matrix(e.pair, e.dual, theta, *alpha);
    CHECK(numeric_rank(m, 1e-9) == e.pair.dim());
  }
}

TEST_CASE("classic cyclic transform matches the general machinery") {
  const CatalogEntry& e = get_pair("cyclic-16");
  Rng rng(26);
  const Window theta = random_unit_window(e.pair, rng);
  CVec signal(16);
  for (auto& v : signal) v = rng.zbox();
  BiInvariantSignal f;
  f.class_values.resize(16);
  for (int x = 0; x < 16; ++x) f.class_values[e.pair.cosets.class_of[x]] = signal[x];

  const GroupAutomorphism* alpha = e.find_automorphism("m3");
  REQUIRE(alpha != nullptr);
  const TimePhaseCoefficients c = stockwell_forward(e.pair, e.dual, f, theta, *alpha);
  const DenseMatrix classic = classic_stransform(signal, theta.on_group, 3);

  for (int p = 0; p < e.dual.size(); ++p) {
    const int k = character_index(e, p);
    for (int t = 0; t < 16; ++t) CHECK(std::abs(c.at(t, p) - classic.at(t, k)) < 1e-11);
  }
}

TEST_CASE("classic transform edge cases") {
  CHECK(code_of([] {
          classic_stransform(CVec(16, cplx(1.0, 0.0)), CVec(16, cplx(1.0, 0.0)), 2);
        }) == errc::not_a_unit);
  CHECK(code_of([] { classic_stransform({}, {}, 1); }) == errc::dimension_mismatch);

  // a single sample: every multiplier is a unit and the result is f(0) conj(w(0))
  const DenseMatrix one = classic_stransform({cplx(2.0, 1.0)}, {cplx(0.0, 3.0)}, 5);
  CHECK(one.rows == 1);
  CHECK(std::abs(one.at(0, 0) - cplx(2.0, 1.0) * std::conj(cplx(0.0, 3.0))) < 1e-14);

  // point window: row t is f(t) times the conjugate character row
  CVec sig(8);
  Rng rng(28);
  for (auto& v : sig) v = rng.zbox();
  CVec w(8, cplx(0.0, 0.0));
  w[0] = 1.0;
  const DenseMatrix st = classic_stransform(sig, w, 1);
  for (int t = 0; t < 8; ++t)
    for (int k = 0; k < 8; ++k) {
      const cplx want = sig[t] * std::conj(oracles::cyclic_character(8, k, t));
      CHECK(std::abs(st.at(t, k) - want) < 1e-12);
    }
}

}  // TEST_SUITE
