#include "poswfs/order.hpp"

#include <algorithm>
#include <numeric>

namespace poswfs {

namespace {

Witness elements_witness(std::string kind, const std::vector<std::string>& names,
                         std::initializer_list<Elem> elems) {
  Witness w{std::move(kind), {}, {}};
  for (Elem e : elems) w.elements.push_back(names[e]);
  return w;
}

Witness subset_witness(std::string kind, const Poset& p, Subset a) {
  Witness w{std::move(kind), {}, {}};
  for_each_member(a, [&](Elem e) { w.elements.push_back(p.name(e)); });
  return w;
}

Subset relabel(Subset s, const std::vector<Elem>& perm) {
  Subset out = 0;
  for_each_member(s, [&](Elem e) { out |= bit(perm[e]); });
  return out;
}

void require_perm_budget(std::size_t n, const Limits& limits) {
  if (n > limits.max_perm_size)
    throw BudgetError("isomorphism search over " + std::to_string(n) + " elements",
                      limits.max_perm_size);
}

}  // namespace

ClassReport validate_order(const std::vector<std::string>& names, std::span<const Subset> up) {
  const auto n = static_cast<Elem>(names.size());
  if (up.size() != names.size()) throw StructuralError("relation size does not match element count");
  if (n == 0) return ClassReport::fail(Witness{"nonempty", {}, {}});
  for (Elem a = 0; a < n; ++a)
    if (!contains(up[a], a)) return ClassReport::fail(elements_witness("reflexivity", names, {a}));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (contains(up[a], b) && contains(up[b], a))
        return ClassReport::fail(elements_witness("antisymmetry", names, {a, b}));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (!contains(up[a], b)) continue;
      if (Subset missing = up[b] & ~up[a]; missing != 0)
        return ClassReport::fail(elements_witness("transitivity", names, {a, b, lowest(missing)}));
    }
  }
  return ClassReport::pass();
}

ClassReport validate_poset(const std::vector<std::string>& names,
                           const std::vector<std::vector<bool>>& leq) {
  if (leq.size() != names.size())
    throw StructuralError("relation matrix has " + std::to_string(leq.size()) + " rows for " +
                          std::to_string(names.size()) + " elements");
  if (names.size() > kMaxElements) throw StructuralError("at most 64 elements are supported");
  std::vector<Subset> up(names.size(), 0);
  for (std::size_t i = 0; i < leq.size(); ++i) {
    if (leq[i].size() != names.size()) throw StructuralError("relation matrix is not square");
    for (std::size_t j = 0; j < leq[i].size(); ++j)
      if (leq[i][j]) up[i] |= bit(static_cast<Elem>(j));
  }
  return validate_order(names, up);
}

ClassReport is_monotone(const MonotoneMap& f) {
  if (!f.dom || !f.cod) throw StructuralError("map without domain or codomain");
  if (f.table.size() != f.dom->size())
    throw StructuralError("map table is not total on its domain");
  for (Elem y : f.table)
    if (y >= f.cod->size()) throw StructuralError("map table leaves its codomain");
  const Poset& d = *f.dom;
  for (Elem a = 0; a < d.size(); ++a) {
    for (Elem b = 0; b < d.size(); ++b) {
      if (a != b && d.leq(a, b) && !f.cod->leq(f(a), f(b)))
        return ClassReport::fail(elements_witness("monotonicity", d.names(), {a, b}));
    }
  }
  return ClassReport::pass();
}

MonotoneMap make_monotone_map(PosetRef dom, PosetRef cod, std::vector<Elem> table) {
  MonotoneMap f{std::move(dom), std::move(cod), std::move(table)};
  if (auto r = is_monotone(f); !r)
    throw StructuralError("map is not monotone at (" + r.witness->elements[0] + ", " +
                          r.witness->elements[1] + ")");
  return f;
}

bool is_order_embedding(const MonotoneMap& f) {
  if (!is_monotone(f)) return false;
  const Poset& d = *f.dom;
  Subset seen = 0;
  for (Elem a = 0; a < d.size(); ++a) {
    if (contains(seen, f(a))) return false;
    seen |= bit(f(a));
  }
  for (Elem a = 0; a < d.size(); ++a)
    for (Elem b = 0; b < d.size(); ++b)
      if (d.leq(a, b) != f.cod->leq(f(a), f(b))) return false;
  return true;
}

Subset upper_bounds(const Poset& p, Subset a) {
  Subset u = p.all();
  for_each_member(a, [&](Elem e) { u &= p.up(e); });
  return u;
}

Subset lower_bounds(const Poset& p, Subset a) {
  Subset l = p.all();
  for_each_member(a, [&](Elem e) { l &= p.down(e); });
  return l;
}

Subset lu_closure(const Poset& p, Subset a) { return lower_bounds(p, upper_bounds(p, a)); }

std::optional<Elem> maximum_in(const Poset& p, Subset a) {
  for (Subset m = a; m != 0; m &= m - 1) {
    const Elem e = lowest(m);
    if (is_subset(a, p.down(e))) return e;
  }
  return std::nullopt;
}

std::optional<Elem> minimum_in(const Poset& p, Subset a) {
  for (Subset m = a; m != 0; m &= m - 1) {
    const Elem e = lowest(m);
    if (is_subset(a, p.up(e))) return e;
  }
  return std::nullopt;
}

std::optional<Elem> inf_of(const Poset& p, Subset a) { return maximum_in(p, lower_bounds(p, a)); }
std::optional<Elem> sup_of(const Poset& p, Subset a) { return minimum_in(p, upper_bounds(p, a)); }
std::optional<Elem> bottom_of(const Poset& p) { return minimum_in(p, p.all()); }
std::optional<Elem> top_of(const Poset& p) { return maximum_in(p, p.all()); }

bool is_down_closed_subset(const Poset& p, Subset a) {
  bool ok = true;
  for_each_member(a, [&](Elem e) { ok = ok && is_subset(p.down(e), a); });
  return ok;
}

bool is_up_closed_subset(const Poset& p, Subset a) {
  bool ok = true;
  for_each_member(a, [&](Elem e) { ok = ok && is_subset(p.up(e), a); });
  return ok;
}

ClassReport is_complete_by_subsets(const Poset& p) {
  if (p.size() > 30) throw BudgetError("subset scan for completeness", 30);
  // Largest subsets first, so the reported witness is a maximal failing family.
  for (Subset a = p.all();; --a) {
    if (!sup_of(p, a)) return ClassReport::fail(subset_witness("no-sup", p, a));
    if (!inf_of(p, a)) return ClassReport::fail(subset_witness("no-inf", p, a));
    if (a == 0) break;
  }
  return ClassReport::pass();
}

ClassReport is_complete_by_lattice(const Poset& p) {
  if (!top_of(p)) return ClassReport::fail(subset_witness("no-top", p, 0));
  if (!bottom_of(p)) return ClassReport::fail(subset_witness("no-bottom", p, 0));
  for (Elem a = 0; a < p.size(); ++a) {
    for (Elem b = a + 1; b < p.size(); ++b) {
      const Subset pair = bit(a) | bit(b);
      if (!sup_of(p, pair)) return ClassReport::fail(subset_witness("no-sup", p, pair));
      if (!inf_of(p, pair)) return ClassReport::fail(subset_witness("no-inf", p, pair));
    }
  }
  return ClassReport::pass();
}

ClassReport is_complete(const Poset& p, const Limits& limits) {
  return p.size() <= limits.complete_subset_cutoff ? is_complete_by_subsets(p)
                                                    : is_complete_by_lattice(p);
}

std::string subset_name(const Poset& p, Subset a) {
  std::string out = "{";
  bool first = true;
  for_each_member(a, [&](Elem e) {
    if (!first) out += ",";
    out += p.name(e);
    first = false;
  });
  return out + "}";
}

Completion macneille_completion(const PosetRef& p) {
  constexpr std::size_t kMaxScan = 20;
  if (p->size() > kMaxScan) throw BudgetError("MacNeille subset scan", kMaxScan);
  std::vector<Subset> closed;
  for (Subset a = 0; a <= p->all(); ++a)
    if (lu_closure(*p, a) == a) closed.push_back(a);
  std::sort(closed.begin(), closed.end(), [](Subset x, Subset y) {
    return cardinality(x) != cardinality(y) ? cardinality(x) < cardinality(y) : x < y;
  });

  std::vector<std::string> names;
  std::vector<Subset> up(closed.size(), 0);
  for (Elem i = 0; i < closed.size(); ++i) {
    names.push_back(subset_name(*p, closed[i]));
    for (Elem j = 0; j < closed.size(); ++j)
      if (is_subset(closed[i], closed[j])) up[i] |= bit(j);
  }
  auto completion = std::make_shared<const Poset>(std::move(names), std::move(up));

  std::vector<Elem> table(p->size());
  for (Elem a = 0; a < p->size(); ++a) {
    const auto it = std::find(closed.begin(), closed.end(), p->down(a));
    table[a] = static_cast<Elem>(it - closed.begin());
  }
  return Completion{completion, std::move(closed), MonotoneMap{p, completion, std::move(table)}};
}

std::pair<Poset, std::vector<Elem>> induced_subposet(const Poset& p, Subset a) {
  std::vector<Elem> members;
  for_each_member(a, [&](Elem e) { members.push_back(e); });
  std::vector<std::string> names;
  std::vector<Subset> up(members.size(), 0);
  for (Elem i = 0; i < members.size(); ++i) {
    names.push_back(p.name(members[i]));
    for (Elem j = 0; j < members.size(); ++j)
      if (p.leq(members[i], members[j])) up[i] |= bit(j);
  }
  return {Poset(std::move(names), std::move(up)), std::move(members)};
}

Poset dual(const Poset& p) {
  std::vector<Subset> up(p.size());
  for (Elem a = 0; a < p.size(); ++a) up[a] = p.down(a);
  return Poset(p.names(), std::move(up));
}

std::vector<Subset> canonical_form(const Poset& p, const Limits& limits) {
  require_perm_budget(p.size(), limits);
  std::vector<Elem> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Subset> best;
  std::vector<Subset> key(p.size());
  do {
    for (Elem a = 0; a < p.size(); ++a) key[perm[a]] = relabel(p.up(a), perm);
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::optional<std::vector<Elem>> find_isomorphism(const Poset& a, const Poset& b,
                                                  const Limits& limits) {
  if (a.size() != b.size()) return std::nullopt;
  require_perm_budget(a.size(), limits);
  std::vector<Elem> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Elem x = 0; ok && x < a.size(); ++x) ok = relabel(a.up(x), perm) == b.up(perm[x]);
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool are_isomorphic(const Poset& a, const Poset& b, const Limits& limits) {
  return find_isomorphism(a, b, limits).has_value();
}

}  // namespace poswfs
