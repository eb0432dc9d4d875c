#include "poswfs/s_poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "poswfs/hom_search.hpp"
#include "poswfs/order.hpp"

namespace poswfs {

namespace {

Witness named(std::string kind, std::vector<std::string> elements) {
  return Witness{std::move(kind), std::move(elements), {}};
}

void check_same_pomonoid(const SPoset& a, const SPoset& b) {
  if (a.over_ref() != b.over_ref() && !a.over().same_as(b.over()))
    throw StructuralError("S-posets over different pomonoids");
}

SPosetRef make_spo(const PomonoidRef& s, std::vector<std::string> names, std::vector<Subset> up,
                   std::vector<Elem> act) {
  return std::make_shared<const SPoset>(s, Poset(std::move(names), std::move(up)), std::move(act));
}

}  // namespace

ClassReport validate_s_poset(const Pomonoid& s, const Poset& carrier, std::span<const Elem> act) {
  const auto n = static_cast<Elem>(carrier.size());
  const auto m = static_cast<Elem>(s.size());
  if (act.size() != static_cast<std::size_t>(n) * m)
    throw StructuralError("action table is not |A| x |S|");
  for (Elem v : act)
    if (v >= n) throw StructuralError("action table leaves the carrier");
  auto at = [&](Elem a, Elem x) { return act[a * m + x]; };
  const Poset& so = s.order();

  for (Elem a = 0; a < n; ++a)
    if (at(a, s.identity()) != a) return ClassReport::fail(named("unit", {carrier.name(a)}));
  for (Elem a = 0; a < n; ++a)
    for (Elem x = 0; x < m; ++x)
      for (Elem y = 0; y < m; ++y)
        if (at(a, s.mul(x, y)) != at(at(a, x), y))
          return ClassReport::fail(
              named("associativity", {carrier.name(a), so.name(x), so.name(y)}));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!carrier.leq(a, b)) continue;
      for (Elem x = 0; x < m; ++x)
        for (Elem y = 0; y < m; ++y)
          if (so.leq(x, y) && !carrier.leq(at(a, x), at(b, y)))
            return ClassReport::fail(named(
                "monotonicity", {carrier.name(a), carrier.name(b), so.name(x), so.name(y)}));
    }
  return ClassReport::pass();
}

ClassReport validate_s_poset_map(const SPosetMap& f) {
  if (!f.dom || !f.cod) throw StructuralError("map without domain or codomain");
  check_same_pomonoid(*f.dom, *f.cod);
  if (auto r = is_monotone(f.underlying()); !r) return r;
  const Pomonoid& s = f.dom->over();
  for (Elem a = 0; a < f.dom->size(); ++a)
    for (Elem x = 0; x < s.size(); ++x)
      if (f(f.dom->act(a, x)) != f.cod->act(f(a), x))
        return ClassReport::fail(named("equivariance", {f.dom->name(a), s.order().name(x)}));
  return ClassReport::pass();
}

SPosetMap make_s_poset_map(SPosetRef dom, SPosetRef cod, std::vector<Elem> table) {
  SPosetMap f{std::move(dom), std::move(cod), std::move(table)};
  if (auto r = validate_s_poset_map(f); !r) {
    std::string detail = r.witness->kind;
    for (const auto& e : r.witness->elements) detail += " " + e;
    throw StructuralError("not an S-poset map: " + detail);
  }
  return f;
}

SPosetRef trivial_action(const Poset& p, const PomonoidRef& s) {
  std::vector<Elem> act(p.size() * s->size());
  for (Elem a = 0; a < p.size(); ++a)
    for (Elem x = 0; x < s->size(); ++x) act[a * s->size() + x] = a;
  return std::make_shared<const SPoset>(s, p, std::move(act));
}

SPosetRef regular_s_poset(const PomonoidRef& s) {
  std::vector<Elem> act(s->mult_table().begin(), s->mult_table().end());
  return std::make_shared<const SPoset>(s, s->order(), std::move(act));
}

SPosetMap identity_map(const SPosetRef& a) {
  std::vector<Elem> table(a->size());
  std::iota(table.begin(), table.end(), 0);
  return SPosetMap{a, a, std::move(table)};
}

SPosetMap compose(const SPosetMap& g, const SPosetMap& f) {
  if (!same_object(f.cod, g.dom)) throw StructuralError("maps are not composable");
  std::vector<Elem> table(f.table.size());
  for (std::size_t a = 0; a < table.size(); ++a) table[a] = g(f(static_cast<Elem>(a)));
  return SPosetMap{f.dom, g.cod, std::move(table)};
}

Coproduct disjoint_union(const SPosetRef& a, const SPosetRef& b) {
  check_same_pomonoid(*a, *b);
  const auto na = static_cast<Elem>(a->size());
  const auto nb = static_cast<Elem>(b->size());
  const auto m = a->over().size();
  std::vector<std::string> names;
  std::vector<Subset> up;
  std::vector<Elem> act((na + nb) * m);
  for (Elem x = 0; x < na; ++x) {
    names.push_back("L:" + a->name(x));
    up.push_back(a->carrier().up(x));
    for (Elem s = 0; s < m; ++s) act[x * m + s] = a->act(x, s);
  }
  for (Elem y = 0; y < nb; ++y) {
    names.push_back("R:" + b->name(y));
    up.push_back(b->carrier().up(y) << na);
    for (Elem s = 0; s < m; ++s) act[(na + y) * m + s] = na + b->act(y, s);
  }
  auto sum = make_spo(a->over_ref(), std::move(names), std::move(up), std::move(act));
  std::vector<Elem> left(na), right(nb);
  std::iota(left.begin(), left.end(), 0);
  std::iota(right.begin(), right.end(), na);
  return Coproduct{sum, SPosetMap{a, sum, std::move(left)}, SPosetMap{b, sum, std::move(right)}};
}

Product product(const SPosetRef& a, const SPosetRef& b) {
  check_same_pomonoid(*a, *b);
  const auto na = static_cast<Elem>(a->size());
  const auto nb = static_cast<Elem>(b->size());
  if (static_cast<std::size_t>(na) * nb > kMaxElements)
    throw BudgetError("product carrier size", kMaxElements);
  const auto m = a->over().size();
  std::vector<std::string> names;
  std::vector<Subset> up;
  std::vector<Elem> act(na * nb * m);
  std::vector<Elem> pl, pr;
  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < nb; ++y) {
      names.push_back("(" + a->name(x) + "," + b->name(y) + ")");
      Subset row = 0;
      for_each_member(a->carrier().up(x), [&](Elem x2) {
        for_each_member(b->carrier().up(y), [&](Elem y2) { row |= bit(x2 * nb + y2); });
      });
      up.push_back(row);
      for (Elem s = 0; s < m; ++s) act[(x * nb + y) * m + s] = a->act(x, s) * nb + b->act(y, s);
      pl.push_back(x);
      pr.push_back(y);
    }
  auto prod = make_spo(a->over_ref(), std::move(names), std::move(up), std::move(act));
  return Product{prod, SPosetMap{prod, a, std::move(pl)}, SPosetMap{prod, b, std::move(pr)}};
}

SPosetMap copair(const Coproduct& sum, const SPosetMap& f, const SPosetMap& g) {
  if (!same_object(f.dom, sum.in_left.dom) || !same_object(g.dom, sum.in_right.dom) ||
      !same_object(f.cod, g.cod))
    throw StructuralError("copairing of incompatible maps");
  std::vector<Elem> table(f.table);
  table.insert(table.end(), g.table.begin(), g.table.end());
  return SPosetMap{sum.sum, f.cod, std::move(table)};
}

SPosetMap pair_maps(const Product& prod, const SPosetMap& f, const SPosetMap& g) {
  if (!same_object(f.dom, g.dom) || !same_object(f.cod, prod.proj_left.cod) ||
      !same_object(g.cod, prod.proj_right.cod))
    throw StructuralError("pairing of incompatible maps");
  std::vector<Elem> table(f.table.size());
  for (Elem a = 0; a < table.size(); ++a) table[a] = prod.pair(f(a), g(a));
  return SPosetMap{f.dom, prod.product, std::move(table)};
}

std::optional<Fibre> fibre(const SPosetMap& f, Elem b) {
  if (b >= f.cod->size()) throw StructuralError("fibre over an element outside the codomain");
  Subset mask = 0;
  for (Elem a = 0; a < f.dom->size(); ++a)
    if (f(a) == b) mask |= bit(a);
  if (mask == 0) return std::nullopt;
  auto [poset, members] = induced_subposet(f.dom->carrier(), mask);
  Fibre out{std::move(poset), std::move(members), mask, true, nullptr};
  const auto m = f.dom->over().size();
  for (Elem a : out.members)
    for (Elem s = 0; s < m; ++s)
      if (!contains(mask, f.dom->act(a, s))) out.is_sub_s_poset = false;
  if (out.is_sub_s_poset) {
    std::vector<Elem> local(f.dom->size(), 0);
    for (Elem i = 0; i < out.members.size(); ++i) local[out.members[i]] = i;
    std::vector<Elem> act;
    for (Elem a : out.members)
      for (Elem s = 0; s < m; ++s) act.push_back(local[f.dom->act(a, s)]);
    out.restricted = std::make_shared<const SPoset>(f.dom->over_ref(), out.poset, std::move(act));
  }
  return out;
}

std::size_t for_each_hom(const SPoset& a, const SPoset& b, std::span<const Subset> allowed,
                         const Limits& limits,
                         const std::function<bool(const std::vector<Elem>&)>& visit) {
  HomSearch search(a, b);
  if (!allowed.empty()) {
    if (allowed.size() != a.size()) throw StructuralError("restriction size mismatch");
    for (Elem x = 0; x < a.size(); ++x) search.restrict(x, allowed[x]);
  }
  return search.run(limits.hom_nodes, visit);
}

std::optional<SPosetMap> first_hom(const SPosetRef& a, const SPosetRef& b,
                                   std::span<const Subset> allowed, const Limits& limits) {
  std::optional<SPosetMap> found;
  for_each_hom(*a, *b, allowed, limits, [&](const std::vector<Elem>& t) {
    found = SPosetMap{a, b, t};
    return false;
  });
  return found;
}

std::vector<SPosetMap> hom_s_poset(const SPosetRef& a, const SPosetRef& b, const Limits& limits) {
  std::vector<SPosetMap> out;
  for_each_hom(*a, *b, {}, limits, [&](const std::vector<Elem>& t) {
    out.push_back(SPosetMap{a, b, t});
    return true;
  });
  return out;
}

std::vector<MonotoneMap> monotone_maps(const PosetRef& a, const PosetRef& b, const Limits& limits) {
  std::vector<MonotoneMap> out;
  HomSearch search(*a, *b);
  search.run(limits.hom_nodes, [&](const std::vector<Elem>& t) {
    out.push_back(MonotoneMap{a, b, t});
    return true;
  });
  return out;
}

std::optional<Elem> Exponential::index_of(const std::vector<Elem>& table) const {
  auto it = std::lower_bound(tables.begin(), tables.end(), table);
  if (it == tables.end() || *it != table) return std::nullopt;
  return static_cast<Elem>(it - tables.begin());
}

Exponential exponential(const SPosetRef& a, const SPosetRef& b, const Limits& limits) {
  check_same_pomonoid(*a, *b);
  const PomonoidRef& s = a->over_ref();
  Product domain = product(regular_s_poset(s), a);
  const SPoset& sa = *domain.product;

  std::vector<std::vector<Elem>> tables;
  for_each_hom(sa, *b, {}, limits, [&](const std::vector<Elem>& t) {
    tables.push_back(t);
    return true;
  });
  if (tables.size() > kMaxElements) throw BudgetError("exponential carrier size", kMaxElements);
  if (tables.empty()) throw InternalInconsistency("hom(S x A, B) is empty for nonempty B");

  const auto n = static_cast<Elem>(tables.size());
  const auto m = static_cast<Elem>(s->size());
  const auto na = static_cast<Elem>(a->size());
  std::vector<std::string> names;
  std::vector<Subset> up(n, 0);
  for (Elem i = 0; i < n; ++i) {
    std::string name = "[";
    for (std::size_t k = 0; k < tables[i].size(); ++k)
      name += (k ? "," : "") + b->name(tables[i][k]);
    names.push_back(name + "]");
    for (Elem j = 0; j < n; ++j) {
      bool le = true;
      for (std::size_t k = 0; le && k < tables[i].size(); ++k)
        le = b->carrier().leq(tables[i][k], tables[j][k]);
      if (le) up[i] |= bit(j);
    }
  }
  Exponential out{nullptr, std::move(tables), std::move(domain)};
  std::vector<Elem> act(n * m);
  for (Elem i = 0; i < n; ++i)
    for (Elem x = 0; x < m; ++x) {
      std::vector<Elem> shifted(out.tables[i].size());
      for (Elem t = 0; t < m; ++t)
        for (Elem e = 0; e < na; ++e) shifted[t * na + e] = out.tables[i][s->mul(x, t) * na + e];
      auto idx = out.index_of(shifted);
      if (!idx) throw InternalInconsistency("exponential action leaves hom(S x A, B)");
      act[i * m + x] = *idx;
    }
  out.object = make_spo(s, std::move(names), std::move(up), std::move(act));
  return out;
}

Quotient quotient_theta(const SPosetRef& a) {
  const auto n = static_cast<Elem>(a->size());
  const auto m = static_cast<Elem>(a->over().size());
  std::vector<Elem> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Elem x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](Elem x, Elem y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  for (Elem x = 0; x < n; ++x)
    for (Elem s = 0; s < m; ++s) unite(x, a->act(x, s));

  // Repeat: induce the relation on classes, close it transitively, merge
  // classes lying on a cycle. Stops once the induced relation is antisymmetric.
  while (true) {
    std::vector<Subset> cls_mask(n, 0);
    for (Elem x = 0; x < n; ++x) cls_mask[find(x)] |= bit(x);
    std::vector<Elem> reps;
    for (Elem x = 0; x < n; ++x)
      if (find(x) == x) reps.push_back(x);
    const auto k = reps.size();
    std::vector<Subset> rel(k, 0);
    std::vector<Elem> cls_of(n);
    for (Elem i = 0; i < k; ++i) for_each_member(cls_mask[reps[i]], [&](Elem x) { cls_of[x] = i; });
    for (Elem x = 0; x < n; ++x)
      for_each_member(a->carrier().up(x), [&](Elem y) { rel[cls_of[x]] |= bit(cls_of[y]); });
    for (Elem mid = 0; mid < k; ++mid)
      for (Elem i = 0; i < k; ++i)
        if (contains(rel[i], mid)) rel[i] |= rel[mid];
    bool merged = false;
    for (Elem i = 0; i < k; ++i)
      for (Elem j = i + 1; j < k; ++j)
        if (contains(rel[i], j) && contains(rel[j], i)) {
          unite(reps[i], reps[j]);
          merged = true;
        }
    if (merged) continue;

    std::vector<std::string> names;
    std::vector<Subset> classes;
    for (Elem i = 0; i < k; ++i) {
      names.push_back("[" + subset_name(a->carrier(), cls_mask[reps[i]]).substr(1));
      names.back().back() = ']';
      classes.push_back(cls_mask[reps[i]]);
    }
    auto q = std::make_shared<const Poset>(std::move(names), std::move(rel));
    return Quotient{q, MonotoneMap{PosetRef(a, &a->carrier()), q, std::move(cls_of)},
                    std::move(classes)};
  }
}

namespace {

using SKey = std::pair<std::vector<Subset>, std::vector<Elem>>;

SKey relabeled(const SPoset& a, const std::vector<Elem>& perm) {
  const auto n = a.size();
  const auto m = a.over().size();
  SKey key{std::vector<Subset>(n), std::vector<Elem>(n * m)};
  for (Elem x = 0; x < n; ++x) {
    Subset up = 0;
    for_each_member(a.carrier().up(x), [&](Elem y) { up |= bit(perm[y]); });
    key.first[perm[x]] = up;
    for (Elem s = 0; s < m; ++s) key.second[perm[x] * m + s] = perm[a.act(x, s)];
  }
  return key;
}

}  // namespace

std::pair<std::vector<Subset>, std::vector<Elem>> canonical_form(const SPoset& a,
                                                                 const Limits& limits) {
  if (a.size() > limits.max_perm_size)
    throw BudgetError("S-poset isomorphism search", limits.max_perm_size);
  std::vector<Elem> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  SKey best = relabeled(a, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    auto key = relabeled(a, perm);
    if (key < best) best = std::move(key);
  }
  return best;
}

std::optional<std::vector<Elem>> find_isomorphism(const SPoset& a, const SPoset& b,
                                                  const Limits& limits) {
  if (a.size() != b.size() || !a.over().same_as(b.over())) return std::nullopt;
  if (a.size() > limits.max_perm_size)
    throw BudgetError("S-poset isomorphism search", limits.max_perm_size);
  const SKey target{std::vector<Subset>(b.carrier().up_sets().begin(), b.carrier().up_sets().end()),
                    std::vector<Elem>(b.act_table().begin(), b.act_table().end())};
  std::vector<Elem> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabeled(a, perm) == target) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool are_isomorphic(const SPoset& a, const SPoset& b, const Limits& limits) {
  if (a.size() != b.size() || !a.over().same_as(b.over())) return false;
  return canonical_form(a, limits) == canonical_form(b, limits);
}

SPosetRef renamed(const SPoset& a, std::vector<std::string> names) {
  return make_spo(a.over_ref(), std::move(names),
                  std::vector<Subset>(a.carrier().up_sets().begin(), a.carrier().up_sets().end()),
                  std::vector<Elem>(a.act_table().begin(), a.act_table().end()));
}

}  // namespace poswfs
