#pragma once

// Finite posets: validation, monotone maps, order-embeddings, bounds,
// completeness and the Dedekind-MacNeille completion.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poswfs/limits.hpp"
#include "poswfs/report.hpp"
#include "poswfs/types.hpp"

namespace poswfs {

/// Checks the three order axioms (and nonemptiness) of a raw relation.
/// Throws StructuralError when the matrix is not square over `names`.
ClassReport validate_poset(const std::vector<std::string>& names,
                           const std::vector<std::vector<bool>>& leq);
/// Same check over up-set masks.
ClassReport validate_order(const std::vector<std::string>& names, std::span<const Subset> up);

/// Throws StructuralError on a table that is not total into the codomain.
ClassReport is_monotone(const MonotoneMap& f);
/// Validating constructor.
MonotoneMap make_monotone_map(PosetRef dom, PosetRef cod, std::vector<Elem> table);
bool is_order_embedding(const MonotoneMap& f);

Subset upper_bounds(const Poset& p, Subset a);
Subset lower_bounds(const Poset& p, Subset a);
Subset lu_closure(const Poset& p, Subset a);

std::optional<Elem> inf_of(const Poset& p, Subset a);
std::optional<Elem> sup_of(const Poset& p, Subset a);
std::optional<Elem> bottom_of(const Poset& p);
std::optional<Elem> top_of(const Poset& p);
/// Greatest / least element of the subset itself, if any.
std::optional<Elem> maximum_in(const Poset& p, Subset a);
std::optional<Elem> minimum_in(const Poset& p, Subset a);

bool is_down_closed_subset(const Poset& p, Subset a);
bool is_up_closed_subset(const Poset& p, Subset a);

/// Every subset has an inf and a sup. Uses the subset scan below
/// limits.complete_subset_cutoff and the bounded-lattice criterion above.
ClassReport is_complete(const Poset& p, const Limits& limits = {});
ClassReport is_complete_by_subsets(const Poset& p);
ClassReport is_complete_by_lattice(const Poset& p);

struct Completion {
  PosetRef completion;
  /// Bitmask of the original elements for each completion element.
  std::vector<Subset> members;
  /// a -> principal down-set of a.
  MonotoneMap embedding;
};

/// LU-closed subsets ordered by inclusion, with a -> down(a). The carrier is
/// ordered by (cardinality, mask). Throws BudgetError above 20 elements.
Completion macneille_completion(const PosetRef& p);

/// Subposet on a nonempty mask, with the positional index map back into p.
std::pair<Poset, std::vector<Elem>> induced_subposet(const Poset& p, Subset a);

Poset dual(const Poset& p);

/// Lexicographically least up-set vector over all relabelings.
std::vector<Subset> canonical_form(const Poset& p, const Limits& limits = {});
bool are_isomorphic(const Poset& a, const Poset& b, const Limits& limits = {});
/// Explicit order-isomorphism a -> b if one exists.
std::optional<std::vector<Elem>> find_isomorphism(const Poset& a, const Poset& b,
                                                  const Limits& limits = {});

/// Display "{a,b}" for a subset.
std::string subset_name(const Poset& p, Subset a);

}  // namespace poswfs
