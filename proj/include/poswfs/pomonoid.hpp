#pragma once

#include <span>
#include <string>
#include <vector>

#include "poswfs/limits.hpp"
#include "poswfs/report.hpp"
#include "poswfs/types.hpp"

namespace poswfs {

/// Associativity, identity and order-compatibility of a raw multiplication
/// table. Throws StructuralError on a table of the wrong shape.
ClassReport validate_pomonoid(const Poset& order, std::span<const Elem> mult, Elem identity);

/// 1 <= s for every s.
bool identity_is_bottom(const Pomonoid& s);
/// Every element has a two-sided inverse.
bool is_pogroup(const Pomonoid& s);

/// Built-in pomonoids: "trivial", "u2" ({1<s}, ss=s), "u2-discrete"
/// ({1,s} unordered, ss=s), "chain3" ({1<s<t}, xy=max), "z2" ({1,g}
/// unordered, gg=1). Throws StructuralError for other names.
PomonoidRef named_pomonoid(std::string_view name);
std::vector<std::string> pomonoid_names();

/// All pomonoids with at most n elements, up to isomorphism (n <= 3).
std::vector<PomonoidRef> enumerate_pomonoids(std::size_t n, const Limits& limits = {});

bool are_isomorphic(const Pomonoid& a, const Pomonoid& b, const Limits& limits = {});

}  // namespace poswfs
