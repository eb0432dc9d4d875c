#pragma once

// Exhaustive catalogs of small posets and S-posets up to isomorphism.
// Generation order is deterministic: by size, then by the first labelled
// representative met in the enumeration.

#include <cstddef>
#include <vector>

#include "poswfs/limits.hpp"
#include "poswfs/types.hpp"

namespace poswfs {

inline constexpr std::size_t kMaxPosetCatalog = 6;
inline constexpr std::size_t kMaxSPosetCatalog = 4;

/// Posets with exactly n elements up to isomorphism, named "a", "b", ...
/// Throws BudgetError for n > 6.
std::vector<Poset> enumerate_posets(std::size_t n, const Limits& limits = {});
/// Posets with 1..n elements.
std::vector<Poset> enumerate_posets_up_to(std::size_t n, const Limits& limits = {});

struct CatalogOptions {
  /// Keep only the trivial action on each poset.
  bool trivial_only = false;
};

struct Catalog {
  PomonoidRef pomonoid;
  std::vector<SPosetRef> objects;
  std::size_t max_size = 0;
  bool exact_size = false;
  CatalogOptions options;
};

/// S-posets with exactly n elements up to isomorphism. Throws BudgetError
/// for n > 4.
Catalog enumerate_s_posets(const PomonoidRef& s, std::size_t n, CatalogOptions options = {},
                           const Limits& limits = {});
/// S-posets with 1..n elements.
Catalog catalog_up_to(const PomonoidRef& s, std::size_t n, CatalogOptions options = {},
                      const Limits& limits = {});

/// Every S-poset map between catalog objects, by (dom, cod) index and then
/// table order.
std::vector<SPosetMap> all_maps(const Catalog& catalog, const Limits& limits = {});
/// The S-poset embeddings among all_maps.
std::vector<SPosetMap> all_embeddings(const Catalog& catalog, const Limits& limits = {});

}  // namespace poswfs
