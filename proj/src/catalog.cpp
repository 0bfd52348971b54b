#include "ramac/catalog.hpp"

#include "ramac/expr.hpp"

namespace ramac {

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"p2b1", 2, 1, {"t^-1"}},
      {"p2b3", 2, 1, {"t^-3"}},
      {"p3b1", 3, 1, {"t^-1"}},
      {"p3b2", 3, 1, {"t^-2"}},
      {"p5b2", 5, 1, {"t^-2"}},
      {"p2b1b3", 2, 1, {"t^-1", "t^-3"}},
      {"p3b1b2", 3, 1, {"t^-1", "t^-2"}},
  };
  return entries;
}

Tower build_tower(const CatalogEntry& entry) {
  const FqField& F = FqField::get(entry.p, entry.f);
  std::vector<LaurentPoly> rhs;
  rhs.reserve(entry.rhs.size());
  for (const auto& s : entry.rhs) rhs.push_back(parse_base_element(s, F));
  return Tower(F, rhs);
}

}  // namespace ramac
