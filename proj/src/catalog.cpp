#include "gpst/catalog.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace gpst {

namespace {

std::vector<std::vector<int>> perms_lex(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> units_mod(int n) {
  std::vector<int> out;
  for (int a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) out.push_back(a);
  return out;
}

std::vector<int> conjugation_perm(const FiniteGroup& g, int t) {
  std::vector<int> perm(g.order);
  for (int x = 0; x < g.order; ++x) perm[x] = g.mul[g.mul[t][x]][g.inv[t]];
  return perm;
}

bool table_abelian(const std::vector<std::vector<int>>& mul) {
  for (size_t x = 0; x < mul.size(); ++x)
    for (size_t y = 0; y < x; ++y)
      if (mul[x][y] != mul[y][x]) return false;
  return true;
}

void add_automorphism(CatalogEntry& e, const std::string& name, std::vector<int> perm) {
  GroupAutomorphism a = check_automorphism(e.pair.g(), std::move(perm));
  for (int k : e.pair.k.members)
    if (!e.pair.k.mask[a.perm[k]])
      fail(errc::schema_error, "catalog automorphism '" + name + "' does not preserve K");
  e.automorphisms.emplace_back(name, std::move(a));
}

CatalogEntry finish_entry(CatalogEntry e) {
  e.abelian = table_abelian(e.pair.g().mul);
  e.dual = plancherel_weights(e.pair, spherical_functions(e.pair));
  return e;
}

CatalogEntry build_cyclic(const std::string& name, int n) {
  CatalogEntry e;
  e.name = name;
  e.notes = "Z_" + std::to_string(n) +
            " with trivial K; spherical functions are the characters and the "
            "automorphisms are the unit multipliers";
  e.pair = certify_gelfand(std::make_shared<const FiniteGroup>(build_group(cyclic_table(n))),
                           {0});
  for (int a : units_mod(n)) {
    std::vector<int> perm(n);
    for (int x = 0; x < n; ++x) perm[x] = (a * x) % n;
    add_automorphism(e, a == 1 ? "id" : "m" + std::to_string(a), std::move(perm));
  }
  if (n == 1) add_automorphism(e, "id", {0});
  return finish_entry(std::move(e));
}

CatalogEntry build_dihedral(const std::string& name, int n) {
  CatalogEntry e;
  e.name = name;
  e.notes = "dihedral group of order " + std::to_string(2 * n) +
            ", K generated by one reflection; rotation-part unit multipliers fix K";
  e.pair = certify_gelfand(
      std::make_shared<const FiniteGroup>(build_group(dihedral_table(n))), {0, n});
  for (int a : units_mod(n)) {
    std::vector<int> perm(2 * n);
    for (int eps = 0; eps < 2; ++eps)
      for (int j = 0; j < n; ++j) perm[eps * n + j] = eps * n + (a * j) % n;
    add_automorphism(e, a == 1 ? "id" : "m" + std::to_string(a), std::move(perm));
  }
  return finish_entry(std::move(e));
}

CatalogEntry build_symmetric(const std::string& name, int n, bool full_k) {
  CatalogEntry e;
  e.name = name;
  e.notes = full_k ? "(S_3, S_3): degenerate pair with a single double coset"
                   : "(S_" + std::to_string(n) + ", S_" + std::to_string(n - 1) +
                         ") with K the stabilizer of the last point";
  const std::vector<std::vector<int>> perms = perms_lex(n);
  e.pair = certify_gelfand(
      std::make_shared<const FiniteGroup>(build_group(symmetric_table(n))), [&] {
        std::vector<int> members;
        for (size_t i = 0; i < perms.size(); ++i)
          if (full_k || perms[i][n - 1] == n - 1) members.push_back(static_cast<int>(i));
        return members;
      }());
  add_automorphism(e, "id", identity_automorphism(e.pair.g()).perm);
  // conjugation by the transposition (0 1), which fixes the stabilizer of n-1
  std::vector<int> swap01(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  const int t = static_cast<int>(
      std::lower_bound(perms.begin(), perms.end(), swap01) - perms.begin());
  add_automorphism(e, "c01", conjugation_perm(e.pair.g(), t));
  return finish_entry(std::move(e));
}

CatalogEntry build_hypercube(const std::string& name, int n) {
  CatalogEntry e;
  e.name = name;
  e.notes = "(Z_2^" + std::to_string(n) + " semidirect S_" + std::to_string(n) +
            ", S_" + std::to_string(n) +
            "): cube-graph isometries; double cosets are Hamming spheres";
  const int fact = static_cast<int>(perms_lex(n).size());
  std::vector<int> members(fact);
  std::iota(members.begin(), members.end(), 0);
  e.pair = certify_gelfand(
      std::make_shared<const FiniteGroup>(build_group(hyperoctahedral_table(n))), members);
  add_automorphism(e, "id", identity_automorphism(e.pair.g()).perm);
  const std::vector<std::vector<int>> perms = perms_lex(n);
  std::vector<int> swap01(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  const int t = static_cast<int>(
      std::lower_bound(perms.begin(), perms.end(), swap01) - perms.begin());
  add_automorphism(e, "c01", conjugation_perm(e.pair.g(), t));
  return finish_entry(std::move(e));
}

CatalogEntry build_entry(const std::string& name) {
  if (name == "cyclic-4") return build_cyclic(name, 4);
  if (name == "cyclic-8") return build_cyclic(name, 8);
  if (name == "cyclic-16") return build_cyclic(name, 16);
  if (name == "dihedral-4") return build_dihedral(name, 4);
  if (name == "dihedral-6") return build_dihedral(name, 6);
  if (name == "dihedral-8") return build_dihedral(name, 8);
  if (name == "sym-3") return build_symmetric(name, 3, false);
  if (name == "sym-4") return build_symmetric(name, 4, false);
  if (name == "sym-5") return build_symmetric(name, 5, false);
  if (name == "hypercube-2") return build_hypercube(name, 2);
  if (name == "hypercube-3") return build_hypercube(name, 3);
  if (name == "full-s3") return build_symmetric(name, 3, true);
  fail(errc::unknown_pair, name);
}

}  // namespace

const GroupAutomorphism* CatalogEntry::find_automorphism(const std::string& a) const {
  for (const auto& [n, perm] : automorphisms)
    if (n == a) return &perm;
  return nullptr;
}

std::vector<std::string> list_pairs() {
  return {"cyclic-4",   "cyclic-8",   "cyclic-16",   "dihedral-4",  "dihedral-6",
          "dihedral-8", "sym-3",      "sym-4",       "sym-5",       "hypercube-2",
          "hypercube-3", "full-s3"};
}

const CatalogEntry& get_pair(const std::string& name) {
  static std::mutex guard;
  static std::map<std::string, std::unique_ptr<const CatalogEntry>> cache;
  std::lock_guard<std::mutex> lock(guard);
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, std::make_unique<const CatalogEntry>(build_entry(name))).first;
  return *it->second;
}

std::vector<std::vector<int>> cyclic_table(int n) {
  if (n < 1) fail(errc::schema_error, "cyclic order must be positive");
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  return mul;
}

std::vector<std::vector<int>> dihedral_table(int n) {
  if (n < 2) fail(errc::schema_error, "dihedral rotation order must be at least 2");
  // element eps*n + j stands for r^j s^eps
  const int order = 2 * n;
  std::vector<std::vector<int>> mul(order, std::vector<int>(order));
  for (int e1 = 0; e1 < 2; ++e1)
    for (int j1 = 0; j1 < n; ++j1)
      for (int e2 = 0; e2 < 2; ++e2)
        for (int j2 = 0; j2 < n; ++j2) {
          const int j = (j1 + (e1 ? n - j2 : j2)) % n;
          mul[e1 * n + j1][e2 * n + j2] = ((e1 + e2) % 2) * n + j;
        }
  return mul;
}

std::vector<std::vector<int>> symmetric_table(int n) {
  if (n < 1) fail(errc::schema_error, "symmetric degree must be positive");
  const std::vector<std::vector<int>> perms = perms_lex(n);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int order = static_cast<int>(perms.size());
  std::vector<std::vector<int>> mul(order, std::vector<int>(order));
  std::vector<int> z(n);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      for (int i = 0; i < n; ++i) z[i] = perms[x][perms[y][i]];
      mul[x][y] = index[z];
    }
  return mul;
}

std::vector<std::vector<int>> hyperoctahedral_table(int n) {
  if (n < 1 || n > 8) fail(errc::schema_error, "hyperoctahedral degree out of range");
  const std::vector<std::vector<int>> perms = perms_lex(n);
  const int fact = static_cast<int>(perms.size());
  const int masks = 1 << n;

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < fact; ++i) index[perms[i]] = i;
  std::vector<std::vector<int>> comp(fact, std::vector<int>(fact));
  std::vector<int> z(n);
  for (int x = 0; x < fact; ++x)
    for (int y = 0; y < fact; ++y) {
      for (int i = 0; i < n; ++i) z[i] = perms[x][perms[y][i]];
      comp[x][y] = index[z];
    }
  // sigma acting on bit vectors: bit sigma(j) of the image is bit j of w
  std::vector<std::vector<int>> act(fact, std::vector<int>(masks, 0));
  for (int s = 0; s < fact; ++s)
    for (int w = 0; w < masks; ++w) {
      int v = 0;
      for (int j = 0; j < n; ++j)
        if (w >> j & 1) v |= 1 << perms[s][j];
      act[s][w] = v;
    }

  const int order = masks * fact;
  std::vector<std::vector<int>> mul(order, std::vector<int>(order));
  for (int v = 0; v < masks; ++v)
    for (int s = 0; s < fact; ++s)
      for (int w = 0; w < masks; ++w)
        for (int t = 0; t < fact; ++t)
          mul[v * fact + s][w * fact + t] = (v ^ act[s][w]) * fact + comp[s][t];
  return mul;
}

}  // namespace gpst
