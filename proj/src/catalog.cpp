#include "poswfs/catalog.hpp"

#include <set>
#include <string>

#include "poswfs/morphism_classes.hpp"
#include "poswfs/order.hpp"
#include "poswfs/s_poset.hpp"

namespace poswfs {

namespace {

std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return names;
}

}  // namespace

std::vector<Poset> enumerate_posets(std::size_t n, const Limits& limits) {
  if (n > kMaxPosetCatalog) throw BudgetError("poset catalog size", kMaxPosetCatalog);
  if (n == 0) return {};
  // Every finite poset has a natural labelling, so strict relations i < j
  // with i < j as indices cover all isomorphism types.
  std::vector<std::pair<Elem, Elem>> slots;
  for (Elem i = 0; i < n; ++i)
    for (Elem j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  const auto names = letters(n);
  std::set<std::vector<Subset>> seen;
  std::vector<Poset> out;
  for (Subset rel = 0; rel < (Subset{1} << slots.size()); ++rel) {
    std::vector<Subset> up(n);
    for (Elem i = 0; i < n; ++i) up[i] = bit(i);
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (contains(rel, static_cast<Elem>(k))) up[slots[k].first] |= bit(slots[k].second);
    bool transitive = true;
    for (Elem i = 0; i < n && transitive; ++i)
      for_each_member(up[i], [&](Elem j) { transitive = transitive && is_subset(up[j], up[i]); });
    if (!transitive) continue;
    Poset p(names, up);
    if (seen.insert(canonical_form(p, limits)).second) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Poset> enumerate_posets_up_to(std::size_t n, const Limits& limits) {
  std::vector<Poset> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& p : enumerate_posets(k, limits)) out.push_back(std::move(p));
  return out;
}

Catalog enumerate_s_posets(const PomonoidRef& s, std::size_t n, CatalogOptions options,
                           const Limits& limits) {
  if (n > kMaxSPosetCatalog) throw BudgetError("S-poset catalog size", kMaxSPosetCatalog);
  Catalog catalog{s, {}, n, true, options};
  const auto m = static_cast<Elem>(s->size());
  const Elem e = s->identity();
  std::set<std::pair<std::vector<Subset>, std::vector<Elem>>> seen;
  for (const Poset& p : enumerate_posets(n, limits)) {
    const auto k = static_cast<Elem>(p.size());
    auto keep = [&](std::vector<Elem> act) {
      SPoset obj(s, p, std::move(act));
      if (seen.insert(canonical_form(obj, limits)).second)
        catalog.objects.push_back(std::make_shared<const SPoset>(std::move(obj)));
    };
    if (options.trivial_only) {
      std::vector<Elem> act(k * m);
      for (Elem a = 0; a < k; ++a)
        for (Elem x = 0; x < m; ++x) act[a * m + x] = a;
      keep(std::move(act));
      continue;
    }
    // Odometer over the entries a*x with x != 1; a*1 = a is forced.
    std::vector<std::size_t> free;
    std::vector<Elem> act(k * m, 0);
    for (Elem a = 0; a < k; ++a)
      for (Elem x = 0; x < m; ++x) {
        if (x == e)
          act[a * m + x] = a;
        else
          free.push_back(a * m + x);
      }
    while (true) {
      if (validate_s_poset(*s, p, act)) keep(act);
      std::size_t i = 0;
      while (i < free.size() && ++act[free[i]] == k) act[free[i++]] = 0;
      if (i == free.size()) break;
    }
  }
  return catalog;
}

Catalog catalog_up_to(const PomonoidRef& s, std::size_t n, CatalogOptions options,
                      const Limits& limits) {
  Catalog catalog{s, {}, n, false, options};
  for (std::size_t k = 1; k <= n; ++k) {
    Catalog part = enumerate_s_posets(s, k, options, limits);
    for (auto& obj : part.objects) catalog.objects.push_back(std::move(obj));
  }
  return catalog;
}

std::vector<SPosetMap> all_maps(const Catalog& catalog, const Limits& limits) {
  std::vector<SPosetMap> out;
  for (const auto& a : catalog.objects)
    for (const auto& b : catalog.objects)
      for (auto& f : hom_s_poset(a, b, limits)) out.push_back(std::move(f));
  return out;
}

std::vector<SPosetMap> all_embeddings(const Catalog& catalog, const Limits& limits) {
  std::vector<SPosetMap> out;
  for (auto& f : all_maps(catalog, limits))
    if (is_s_poset_embedding(f)) out.push_back(std::move(f));
  return out;
}

}  // namespace poswfs
