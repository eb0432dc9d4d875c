#pragma once

// S-posets and S-poset maps: validation, the object-level constructions
// (trivial action, disjoint union, product, fibres, exponentials, the
// poset reflection A/theta) and hom-set enumeration.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "poswfs/limits.hpp"
#include "poswfs/report.hpp"
#include "poswfs/types.hpp"

namespace poswfs {

/// Unit and associativity of the action, and monotonicity in both
/// arguments. Throws StructuralError on a table of the wrong shape.
ClassReport validate_s_poset(const Pomonoid& s, const Poset& carrier, std::span<const Elem> act);
/// Monotone and equivariant. Throws StructuralError on a non-total table or
/// when dom and cod are acted on by different pomonoids.
ClassReport validate_s_poset_map(const SPosetMap& f);
/// Validating constructor; throws StructuralError on an invalid table.
SPosetMap make_s_poset_map(SPosetRef dom, SPosetRef cod, std::vector<Elem> table);

SPosetRef trivial_action(const Poset& p, const PomonoidRef& s);
/// S acting on itself by right multiplication.
SPosetRef regular_s_poset(const PomonoidRef& s);

SPosetMap identity_map(const SPosetRef& a);
/// g after f. Throws StructuralError unless cod f is dom g.
SPosetMap compose(const SPosetMap& g, const SPosetMap& f);

struct Coproduct {
  SPosetRef sum;
  SPosetMap in_left;
  SPosetMap in_right;
};

/// Tagged union with no cross relations; left elements come first.
Coproduct disjoint_union(const SPosetRef& a, const SPosetRef& b);

struct Product {
  SPosetRef product;
  SPosetMap proj_left;
  SPosetMap proj_right;
  /// Index of (a, b) in the product.
  Elem pair(Elem a, Elem b) const { return a * static_cast<Elem>(proj_right.cod->size()) + b; }
};

/// Componentwise order, diagonal action; (a, b) has index a*|B| + b.
Product product(const SPosetRef& a, const SPosetRef& b);
/// Copairing [f, g]: sum -> common codomain.
SPosetMap copair(const Coproduct& sum, const SPosetMap& f, const SPosetMap& g);
/// Pairing <f, g>: common domain -> product.
SPosetMap pair_maps(const Product& prod, const SPosetMap& f, const SPosetMap& g);

struct Fibre {
  Poset poset;
  /// Positions of the fibre's elements in dom f.
  std::vector<Elem> members;
  Subset mask = 0;
  bool is_sub_s_poset = false;
  /// The restricted action when the fibre is closed under it.
  SPosetRef restricted;
};

/// f^{-1}(b) with the induced order; std::nullopt marks an empty fibre.
std::optional<Fibre> fibre(const SPosetMap& f, Elem b);

/// Calls visit(table) for every S-poset map table A -> B in lexicographic
/// order, restricted per element by `allowed` (empty span: unrestricted).
/// Stops early when visit returns false.
std::size_t for_each_hom(const SPoset& a, const SPoset& b, std::span<const Subset> allowed,
                         const Limits& limits,
                         const std::function<bool(const std::vector<Elem>&)>& visit);
std::optional<SPosetMap> first_hom(const SPosetRef& a, const SPosetRef& b,
                                   std::span<const Subset> allowed, const Limits& limits = {});

/// All monotone equivariant maps A -> B in lexicographic table order.
std::vector<SPosetMap> hom_s_poset(const SPosetRef& a, const SPosetRef& b, const Limits& limits = {});
/// All monotone maps between plain posets.
std::vector<MonotoneMap> monotone_maps(const PosetRef& a, const PosetRef& b,
                                       const Limits& limits = {});

struct Exponential {
  SPosetRef object;
  /// Each element as a table over S x A (index s*|A| + a).
  std::vector<std::vector<Elem>> tables;
  Product domain;  // S x A
  std::optional<Elem> index_of(const std::vector<Elem>& table) const;
};

/// B^A = hom(S x A, B) with pointwise order and (f s)(t, a) = f(st, a).
Exponential exponential(const SPosetRef& a, const SPosetRef& b, const Limits& limits = {});

struct Quotient {
  PosetRef poset;
  MonotoneMap eta;
  /// Members of each class, as a mask over A.
  std::vector<Subset> classes;
};

/// Poset reflection of A under the identification a ~ a*s.
Quotient quotient_theta(const SPosetRef& a);

/// Least (up-sets, action) key over all relabelings of the carrier.
std::pair<std::vector<Subset>, std::vector<Elem>> canonical_form(const SPoset& a,
                                                                 const Limits& limits = {});
bool are_isomorphic(const SPoset& a, const SPoset& b, const Limits& limits = {});
/// Explicit S-poset isomorphism a -> b as a table.
std::optional<std::vector<Elem>> find_isomorphism(const SPoset& a, const SPoset& b,
                                                  const Limits& limits = {});

/// Rebuild an S-poset over the same pomonoid with its elements renamed.
SPosetRef renamed(const SPoset& a, std::vector<std::string> names);

}  // namespace poswfs
