#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "gpst/catalog.hpp"
#include "gpst/spherical.hpp"
#include "oracles.hpp"

using namespace gpst;

namespace {

const std::vector<std::string>& all_names() {
  static const std::vector<std::string> names = list_pairs();
  return names;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("catalog lists twelve pairs in a stable order") {
  const std::vector<std::string> want = {
      "cyclic-4",  "cyclic-8",  "cyclic-16",   "dihedral-4",  "dihedral-6", "dihedral-8",
      "sym-3",     "sym-4",     "sym-5",       "hypercube-2", "hypercube-3", "full-s3"};
  CHECK(all_names() == want);
}

TEST_CASE("unknown names are rejected") {
  try {
    get_pair("cyclic-5");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::unknown_pair);
  }
}

TEST_CASE("every entry is certified with a complete dual") {
  for (const std::string& name : all_names()) {
    INFO("pair ", name);
    const CatalogEntry& e = get_pair(name);
    CHECK(e.name == name);
    CHECK(e.pair.certified);
    CHECK(e.dual.size() == e.pair.dim());
    double total = 0.0;
    for (double w : e.dual.weights) {
      CHECK(w > 0.0);
      total += w;
    }
    CHECK(total == doctest::Approx(1.0 / e.pair.k.size()));
    for (uint8_t pd : e.dual.positive_definite) CHECK(pd == 1);
    // identity class value of every spherical function is one
    for (int p = 0; p < e.dual.size(); ++p)
      CHECK(std::abs(e.dual.functions[p].class_values[0] - cplx(1.0, 0.0)) < 1e-12);
  }
}

TEST_CASE("inversion formula holds on every indicator of every entry") {
  for (const std::string& name : all_names()) {
    INFO("pair ", name);
    const CatalogEntry& e = get_pair(name);
    const int d = e.pair.dim();
    for (int j = 0; j < d; ++j) {
      BiInvariantSignal b;
      b.class_values.assign(d, cplx(0.0, 0.0));
      b.class_values[j] = 1.0;
      const BiInvariantSignal back =
          spherical_ift(e.pair, e.dual, spherical_ft(e.pair, e.dual, b));
      for (int l = 0; l < d; ++l)
        CHECK(std::abs(back.class_values[l] - b.class_values[l]) < 1e-12);
    }
  }
}

TEST_CASE("every automorphism preserves the subgroup") {
  for (const std::string& name : all_names()) {
    const CatalogEntry& e = get_pair(name);
    REQUIRE(!e.automorphisms.empty());
    CHECK(e.automorphisms.front().first == "id");
    for (const auto& [an, a] : e.automorphisms) {
      INFO("pair ", name, " automorphism ", an);
      CHECK(a.delta_alpha == 1.0);
      for (int k : e.pair.k.members) CHECK(e.pair.k.mask[a.perm[k]]);
    }
  }
}

TEST_CASE("cyclic entries expose the unit multipliers") {
  const CatalogEntry& c8 = get_pair("cyclic-8");
  REQUIRE(c8.automorphisms.size() == 4);
  CHECK(c8.automorphisms[0].first == "id");
  CHECK(c8.automorphisms[1].first == "m3");
  CHECK(c8.automorphisms[2].first == "m5");
  CHECK(c8.automorphisms[3].first == "m7");
  CHECK(c8.find_automorphism("m5")->perm[2] == 2);  // 5*2 = 10 = 2 mod 8
  CHECK(c8.find_automorphism("nope") == nullptr);

  CHECK(get_pair("cyclic-4").automorphisms.size() == 2);
  CHECK(get_pair("cyclic-16").automorphisms.size() == 8);
  CHECK(get_pair("cyclic-8").abelian);
}

TEST_CASE("dihedral sphericals are the rotation cosines") {
  const CatalogEntry& e = get_pair("dihedral-6");
  REQUIRE(e.pair.dim() == 4);
  CHECK(e.pair.cosets.class_sizes == std::vector<int>{2, 4, 4, 2});
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j < 4; ++j) {
      const double want = std::cos(2.0 * oracles::kPi * k * j / 6.0);
      CHECK(std::abs(e.dual.functions[k].class_values[j] - cplx(want, 0.0)) < 1e-10);
    }
  CHECK(e.dual.weights[0] == doctest::Approx(1.0 / 12.0));
  CHECK(e.dual.weights[1] == doctest::Approx(1.0 / 6.0));
  CHECK(e.dual.weights[2] == doctest::Approx(1.0 / 6.0));
  CHECK(e.dual.weights[3] == doctest::Approx(1.0 / 12.0));
  CHECK_FALSE(e.abelian);
}

TEST_CASE("symmetric pairs have the two-point spectrum") {
  for (int n : {3, 4, 5}) {
    const CatalogEntry& e = get_pair("sym-" + std::to_string(n));
    INFO("n = ", n);
    REQUIRE(e.pair.dim() == 2);
    const int fact_nm1 = e.pair.k.size();
    CHECK(e.pair.cosets.class_sizes ==
          std::vector<int>{fact_nm1, (n - 1) * fact_nm1});
    // trivial first, then the standard spherical with value -1/(n-1)
    CHECK(std::abs(e.dual.functions[0].class_values[1] - cplx(1.0, 0.0)) < 1e-10);
    CHECK(std::abs(e.dual.functions[1].class_values[1] - cplx(-1.0 / (n - 1.0), 0.0)) < 1e-10);
    const double order = static_cast<double>(e.pair.g().order);
    CHECK(e.dual.weights[0] == doctest::Approx(1.0 / order));
    CHECK(e.dual.weights[1] == doctest::Approx((n - 1.0) / order));
  }
}

TEST_CASE("hypercube sphericals are normalized Krawtchouk values") {
  for (int n : {2, 3}) {
    const CatalogEntry& e = get_pair("hypercube-" + std::to_string(n));
    INFO("n = ", n);
    REQUIRE(e.pair.dim() == n + 1);
    const double order = static_cast<double>(e.pair.g().order);
    for (int k = 0; k <= n; ++k) {
      for (int j = 0; j <= n; ++j) {
        const double want = oracles::krawtchouk(n, k, j) / oracles::binom(n, k);
        CHECK(std::abs(e.dual.functions[k].class_values[j] - cplx(want, 0.0)) < 1e-10);
      }
      CHECK(e.dual.weights[k] == doctest::Approx(oracles::binom(n, k) / order));
    }
    // classes are Hamming spheres: |C_j| = C(n, j) |K|
    for (int j = 0; j <= n; ++j)
      CHECK(e.pair.cosets.class_sizes[j] ==
            static_cast<int>(oracles::binom(n, j)) * e.pair.k.size());
  }
}

TEST_CASE("the degenerate full pair has a single trivial function") {
  const CatalogEntry& e = get_pair("full-s3");
  CHECK(e.pair.dim() == 1);
  CHECK(e.dual.size() == 1);
  CHECK(std::abs(e.dual.functions[0].class_values[0] - cplx(1.0, 0.0)) < 1e-14);
  CHECK(e.dual.weights[0] == doctest::Approx(1.0 / 6.0));
  CHECK(e.pair.k.size() == 6);
}

TEST_CASE("catalog sphericals are positive definite as functions on G") {
  for (const char* name : {"cyclic-8", "dihedral-6", "sym-4", "hypercube-3"}) {
    const CatalogEntry& e = get_pair(name);
    for (int p = 0; p < e.dual.size(); ++p) {
      INFO("pair ", name, " function ", p);
      CHECK(check_positive_definite(e.pair.g(), expand(e.pair, e.dual.functions[p].class_values)));
    }
  }
}

TEST_CASE("table generators validate their arguments") {
  CHECK(cyclic_table(1) == std::vector<std::vector<int>>{{0}});
  const auto klein = dihedral_table(2);
  CHECK(klein.size() == 4);
  CHECK(build_group(klein).order == 4);
  CHECK(symmetric_table(1) == std::vector<std::vector<int>>{{0}});
  CHECK(hyperoctahedral_table(1).size() == 2);

  auto code_of = [](const std::function<void()>& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return errc::unknown_pair;
  };
  CHECK(code_of([] { cyclic_table(0); }) == errc::schema_error);
  CHECK(code_of([] { dihedral_table(1); }) == errc::schema_error);
  CHECK(code_of([] { symmetric_table(0); }) == errc::schema_error);
  CHECK(code_of([] { hyperoctahedral_table(9); }) == errc::schema_error);
}

TEST_CASE("largest entries stay within the desk-scale budget") {
  CHECK(get_pair("sym-5").pair.g().order == 120);
  CHECK(get_pair("hypercube-3").pair.g().order == 48);
  CHECK(get_pair("cyclic-16").pair.g().order == 16);
  for (const std::string& name : all_names())
    CHECK(get_pair(name).pair.g().order <= 384);
}

}  // TEST_SUITE
