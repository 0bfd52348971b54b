#ifndef RAMAC_CATALOG_HPP
#define RAMAC_CATALOG_HPP

#include <string>
#include <vector>

#include "ramac/tower.hpp"

namespace ramac {

// The built-in demonstration towers; demo/*.json carries the same list for
// the CLI.
struct CatalogEntry {
  std::string name;
  int p;
  int f;
  std::vector<std::string> rhs;
};

const std::vector<CatalogEntry>& catalog();

Tower build_tower(const CatalogEntry& entry);

}  // namespace ramac

#endif
