#include "gpst/group.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace gpst {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_associative: return "NotAssociative";
    case errc::no_identity: return "NoIdentity";
    case errc::no_inverse: return "NoInverse";
    case errc::not_closed: return "NotClosed";
    case errc::missing_identity: return "MissingIdentity";
    case errc::not_bijection: return "NotBijection";
    case errc::not_homomorphism: return "NotHomomorphism";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_bi_invariant: return "NotBiInvariant";
    case errc::not_gelfand: return "NotGelfand";
    case errc::degenerate_diagonalization: return "DegenerateDiagonalization";
    case errc::singular_system: return "SingularSystem";
    case errc::zero_window: return "ZeroWindow";
    case errc::window_not_unit: return "WindowNotUnit";
    case errc::not_a_unit: return "NotAUnit";
    case errc::bad_exponent: return "BadExponent";
    case errc::unknown_pair: return "UnknownPair";
    case errc::parse_error: return "ParseError";
    case errc::schema_error: return "SchemaError";
  }
  return "Error";
}

namespace {

void check_associativity(const FiniteGroup& g) {
  const int n = g.order;
  auto probe = [&](int x, int y, int z) {
    if (g.mul[g.mul[x][y]][z] != g.mul[x][g.mul[y][z]])
      fail(errc::not_associative,
           "witness triple (" + std::to_string(x) + ", " + std::to_string(y) +
               ", " + std::to_string(z) + ")");
  };
  if (n <= 512) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) probe(x, y, z);
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    for (long i = 0; i < 1'000'000; ++i)
      probe(static_cast<int>(rng() % n), static_cast<int>(rng() % n),
            static_cast<int>(rng() % n));
  }
}

}  // namespace

FiniteGroup build_group(const std::vector<std::vector<int>>& mul_table) {
  const int n = static_cast<int>(mul_table.size());
  if (n == 0) fail(errc::schema_error, "empty multiplication table");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(mul_table[x].size()) != n)
      fail(errc::schema_error, "row " + std::to_string(x) + " has wrong length");
    for (int y = 0; y < n; ++y)
      if (mul_table[x][y] < 0 || mul_table[x][y] >= n)
        fail(errc::schema_error, "entry (" + std::to_string(x) + ", " +
                                     std::to_string(y) + ") out of range");
  }

  FiniteGroup g;
  g.order = n;
  g.mul = mul_table;

  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool unit = true;
    for (int x = 0; x < n; ++x)
      if (g.mul[c][x] != x || g.mul[x][c] != x) {
        unit = false;
        break;
      }
    if (unit) e = c;
  }
  if (e < 0) fail(errc::no_identity, "no two-sided unit row/column");
  g.identity = e;

  g.inv.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (g.mul[x][y] == e && g.mul[y][x] == e) {
        g.inv[x] = y;
        break;
      }
    if (g.inv[x] < 0)
      fail(errc::no_inverse, "element " + std::to_string(x) + " has no inverse");
  }

  check_associativity(g);
  return g;
}

Subgroup check_subgroup(const FiniteGroup& g, std::vector<int> members) {
  if (members.empty()) fail(errc::missing_identity, "empty member list");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  Subgroup k;
  k.mask.assign(g.order, 0);
  for (int m : members) {
    if (m < 0 || m >= g.order)
      fail(errc::schema_error, "member " + std::to_string(m) + " out of range");
    k.mask[m] = 1;
  }
  if (!k.mask[g.identity]) fail(errc::missing_identity, "identity not a member");
  for (int a : members)
    for (int b : members) {
      if (!k.mask[g.mul[a][b]])
        fail(errc::not_closed, "witness pair (" + std::to_string(a) + ", " +
                                   std::to_string(b) + ") -> " +
                                   std::to_string(g.mul[a][b]));
    }
  for (int a : members)
    if (!k.mask[g.inv[a]])
      fail(errc::not_closed, "inverse of " + std::to_string(a) + " missing");
  k.members = std::move(members);
  return k;
}

GroupAutomorphism check_automorphism(const FiniteGroup& g, std::vector<int> perm) {
  const int n = g.order;
  if (static_cast<int>(perm.size()) != n)
    fail(errc::not_bijection, "permutation length != group order");
  std::vector<uint8_t> seen(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v])
      fail(errc::not_bijection, "map is not a bijection on element indices");
    seen[v] = 1;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (perm[g.mul[x][y]] != g.mul[perm[x]][perm[y]])
        fail(errc::not_homomorphism,
             "witness pair (" + std::to_string(x) + ", " + std::to_string(y) + ")");
  GroupAutomorphism a;
  a.perm = std::move(perm);
  a.delta_alpha = 1.0;
  return a;
}

GroupAutomorphism identity_automorphism(const FiniteGroup& g) {
  GroupAutomorphism a;
  a.perm.resize(g.order);
  for (int x = 0; x < g.order; ++x) a.perm[x] = x;
  return a;
}

DoubleCosetPartition double_cosets(const FiniteGroup& g, const Subgroup& k) {
  const int n = g.order;
  DoubleCosetPartition p;
  p.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (p.class_of[x] >= 0) continue;
    const int id = p.count();
    std::vector<int> cls;
    for (int a : k.members) {
      const int ax = g.mul[a][x];
      for (int b : k.members) {
        const int y = g.mul[ax][b];
        if (p.class_of[y] < 0) {
          p.class_of[y] = id;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    p.class_sizes.push_back(static_cast<int>(cls.size()));
    p.classes.push_back(std::move(cls));
  }
  return p;
}

CVec convolve(const FiniteGroup& g, const CVec& f, const CVec& h) {
  const int n = g.order;
  if (static_cast<int>(f.size()) != n || static_cast<int>(h.size()) != n)
    fail(errc::dimension_mismatch, "convolve operands must have length |G|");
  CVec out(n, cplx(0.0, 0.0));
  for (int y = 0; y < n; ++y) {
    const cplx fy = f[y];
    if (fy == cplx(0.0, 0.0)) continue;
    const int yi = g.inv[y];
    const auto& row = g.mul[yi];
    for (int x = 0; x < n; ++x) out[x] += fy * h[row[x]];
  }
  return out;
}

CVec bi_invariant_project(const DoubleCosetPartition& cosets, const CVec& f) {
  if (f.size() != cosets.class_of.size())
    fail(errc::dimension_mismatch, "function length != |G|");
  const int d = cosets.count();
  CVec means(d, cplx(0.0, 0.0));
  for (size_t x = 0; x < f.size(); ++x) means[cosets.class_of[x]] += f[x];
  for (int i = 0; i < d; ++i) means[i] /= static_cast<double>(cosets.class_sizes[i]);
  CVec out(f.size());
  for (size_t x = 0; x < f.size(); ++x) out[x] = means[cosets.class_of[x]];
  return out;
}

double l1_norm(const CVec& f) {
  double s = 0.0;
  for (const cplx& v : f) s += std::abs(v);
  return s;
}

double l2_norm(const CVec& f) {
  double s = 0.0;
  for (const cplx& v : f) s += std::norm(v);
  return std::sqrt(s);
}

cplx inner(const CVec& f, const CVec& g) {
  if (f.size() != g.size())
    fail(errc::dimension_mismatch, "inner product operands differ in length");
  cplx s(0.0, 0.0);
  for (size_t i = 0; i < f.size(); ++i) s += f[i] * std::conj(g[i]);
  return s;
}

}  // namespace gpst
