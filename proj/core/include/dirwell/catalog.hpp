#pragma once

#include <string>
#include <vector>

#include "dirwell/problem.hpp"

namespace dirwell {

struct CatalogEntry {
  std::string name;
  std::string summary;
  // Finite-dimensional stand-in for an infinite-dimensional original; the
  // directional structure is preserved but values are not a reproduction.
  bool analog = false;
};

const std::vector<CatalogEntry>& catalog_entries();

bool catalog_has(const std::string& name);

// Default problem for a catalog name, including anchor, sample box, budget
// and seed. Throws Errc::unknown_builtin for names not in the catalog.
Problem catalog_problem(const std::string& name);

}  // namespace dirwell
