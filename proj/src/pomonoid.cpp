#include "poswfs/pomonoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "poswfs/catalog.hpp"
#include "poswfs/order.hpp"

namespace poswfs {

namespace {

Witness named(std::string kind, const Poset& p, std::initializer_list<Elem> elems) {
  Witness w{std::move(kind), {}, {}};
  for (Elem e : elems) w.elements.push_back(p.name(e));
  return w;
}

PomonoidRef build(std::string name, Poset order, std::vector<std::vector<Elem>> rows,
                  Elem identity) {
  std::vector<Elem> mult;
  for (const auto& r : rows) mult.insert(mult.end(), r.begin(), r.end());
  return std::make_shared<const Pomonoid>(std::move(name), std::move(order), std::move(mult),
                                          identity);
}

Poset named_chain(std::vector<std::string> names) {
  std::vector<Subset> up;
  for (std::size_t i = 0; i < names.size(); ++i)
    up.push_back(full_subset(names.size()) & ~full_subset(i));
  return Poset(std::move(names), std::move(up));
}

Poset named_antichain(std::vector<std::string> names) {
  std::vector<Subset> up;
  for (Elem i = 0; i < names.size(); ++i) up.push_back(bit(i));
  return Poset(std::move(names), std::move(up));
}

using MonoidKey = std::pair<std::vector<Subset>, std::vector<Elem>>;

MonoidKey relabeled(const Poset& order, std::span<const Elem> mult, Elem identity,
                    const std::vector<Elem>& perm) {
  const auto n = order.size();
  MonoidKey key{std::vector<Subset>(n), std::vector<Elem>(n * n + 1)};
  for (Elem a = 0; a < n; ++a) {
    Subset up = 0;
    for_each_member(order.up(a), [&](Elem b) { up |= bit(perm[b]); });
    key.first[perm[a]] = up;
    for (Elem b = 0; b < n; ++b) key.second[perm[a] * n + perm[b]] = perm[mult[a * n + b]];
  }
  key.second[n * n] = perm[identity];
  return key;
}

MonoidKey canonical_key(const Poset& order, std::span<const Elem> mult, Elem identity) {
  std::vector<Elem> perm(order.size());
  std::iota(perm.begin(), perm.end(), 0);
  MonoidKey best;
  bool first = true;
  do {
    auto key = relabeled(order, mult, identity, perm);
    if (first || key < best) best = std::move(key);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

ClassReport validate_pomonoid(const Poset& order, std::span<const Elem> mult, Elem identity) {
  const auto n = static_cast<Elem>(order.size());
  if (mult.size() != static_cast<std::size_t>(n) * n)
    throw StructuralError("multiplication table is not |S| x |S|");
  if (identity >= n) throw StructuralError("identity is not a carrier element");
  for (Elem v : mult)
    if (v >= n) throw StructuralError("multiplication table leaves the carrier");
  auto mul = [&](Elem s, Elem t) { return mult[s * n + t]; };

  for (Elem s = 0; s < n; ++s)
    if (mul(identity, s) != s || mul(s, identity) != s)
      return ClassReport::fail(named("identity", order, {s}));
  for (Elem s = 0; s < n; ++s)
    for (Elem t = 0; t < n; ++t)
      for (Elem u = 0; u < n; ++u)
        if (mul(mul(s, t), u) != mul(s, mul(t, u)))
          return ClassReport::fail(named("associativity", order, {s, t, u}));
  for (Elem s = 0; s < n; ++s)
    for (Elem t = 0; t < n; ++t) {
      if (!order.leq(s, t)) continue;
      for (Elem s2 = 0; s2 < n; ++s2)
        for (Elem t2 = 0; t2 < n; ++t2)
          if (order.leq(s2, t2) && !order.leq(mul(s, s2), mul(t, t2)))
            return ClassReport::fail(named("compatibility", order, {s, t, s2, t2}));
    }
  return ClassReport::pass();
}

bool identity_is_bottom(const Pomonoid& s) {
  return s.order().up(s.identity()) == s.order().all();
}

bool is_pogroup(const Pomonoid& s) {
  for (Elem a = 0; a < s.size(); ++a) {
    bool has_inverse = false;
    for (Elem b = 0; b < s.size() && !has_inverse; ++b)
      has_inverse = s.mul(a, b) == s.identity() && s.mul(b, a) == s.identity();
    if (!has_inverse) return false;
  }
  return true;
}

PomonoidRef named_pomonoid(std::string_view name) {
  static const std::map<std::string, PomonoidRef, std::less<>> registry = [] {
    std::map<std::string, PomonoidRef, std::less<>> r;
    r["trivial"] = build("trivial", Poset::singleton("1"), {{0}}, 0);
    r["u2"] = build("u2", named_chain({"1", "s"}), {{0, 1}, {1, 1}}, 0);
    r["u2-discrete"] = build("u2-discrete", named_antichain({"1", "s"}), {{0, 1}, {1, 1}}, 0);
    r["chain3"] = build("chain3", named_chain({"1", "s", "t"}), {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}, 0);
    r["z2"] = build("z2", named_antichain({"1", "g"}), {{0, 1}, {1, 0}}, 0);
    return r;
  }();
  if (auto it = registry.find(name); it != registry.end()) return it->second;
  throw StructuralError("unknown pomonoid '" + std::string(name) + "'");
}

std::vector<std::string> pomonoid_names() { return {"chain3", "trivial", "u2", "u2-discrete", "z2"}; }

std::vector<PomonoidRef> enumerate_pomonoids(std::size_t n, const Limits& limits) {
  if (n > 3) throw BudgetError("pomonoid enumeration size", 3);
  std::map<MonoidKey, PomonoidRef> found;
  std::vector<PomonoidRef> out;
  for (std::size_t k = 1; k <= n; ++k) {
    for (const Poset& shape : enumerate_posets(k, limits)) {
      for (Elem e = 0; e < k; ++e) {
        // Relabel so that the identity is named "1".
        std::vector<std::string> labels(k);
        for (Elem i = 0, next = 1; i < k; ++i)
          labels[i] = i == e ? "1" : "m" + std::to_string(next++);
        Poset order(labels, std::vector<Subset>(shape.up_sets().begin(), shape.up_sets().end()));

        std::vector<std::pair<Elem, Elem>> free;
        for (Elem s = 0; s < k; ++s)
          for (Elem t = 0; t < k; ++t)
            if (s != e && t != e) free.emplace_back(s, t);
        std::vector<Elem> mult(k * k, 0);
        for (Elem s = 0; s < k; ++s) {
          mult[e * k + s] = s;
          mult[s * k + e] = s;
        }
        std::vector<Elem> digits(free.size(), 0);
        while (true) {
          for (std::size_t i = 0; i < free.size(); ++i)
            mult[free[i].first * k + free[i].second] = digits[i];
          if (validate_pomonoid(order, mult, e)) {
            auto key = canonical_key(order, mult, e);
            if (!found.count(key)) {
              auto m = std::make_shared<const Pomonoid>(
                  "p" + std::to_string(k) + "-" + std::to_string(out.size()), order, mult, e);
              found.emplace(std::move(key), m);
              out.push_back(m);
            }
          }
          std::size_t i = 0;
          while (i < digits.size() && ++digits[i] == k) digits[i++] = 0;
          if (i == digits.size()) break;
        }
      }
    }
  }
  return out;
}

bool are_isomorphic(const Pomonoid& a, const Pomonoid& b, const Limits& limits) {
  if (a.size() != b.size()) return false;
  if (a.size() > limits.max_perm_size) throw BudgetError("pomonoid isomorphism", limits.max_perm_size);
  return canonical_key(a.order(), a.mult_table(), a.identity()) ==
         canonical_key(b.order(), b.mult_table(), b.identity());
}

}  // namespace poswfs
