#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gpst/spherical.hpp"

namespace gpst {

struct CatalogEntry {
  std::string name;
  GelfandPair pair;
  SphericalDual dual;
  // named automorphisms, "id" always present and first; all preserve K
  std::vector<std::pair<std::string, GroupAutomorphism>> automorphisms;
  bool abelian = false;  // true iff G itself is abelian
  std::string notes;

  const GroupAutomorphism* find_automorphism(const std::string& name) const;
};

std::vector<std::string> list_pairs();
const CatalogEntry& get_pair(const std::string& name);

// Cayley-table generators used by the catalog, exposed for reuse in tests.
std::vector<std::vector<int>> cyclic_table(int n);
std::vector<std::vector<int>> dihedral_table(int n);         // order 2n
std::vector<std::vector<int>> symmetric_table(int n);        // S_n in lexicographic order
std::vector<std::vector<int>> hyperoctahedral_table(int n);  // Z_2^n semidirect S_n

}  // namespace gpst
