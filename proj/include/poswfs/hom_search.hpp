#pragma once

// Backtracking enumeration of monotone (and, for S-posets, equivariant)
// function tables with forward checking over bitmask domains. Tables are
// produced in lexicographic order of the index vector.

#include <cstdint>
#include <span>
#include <vector>

#include "poswfs/errors.hpp"
#include "poswfs/types.hpp"

namespace poswfs {

class HomSearch {
 public:
  /// Monotone maps between plain posets.
  HomSearch(const Poset& dom, const Poset& cod);
  /// S-poset maps. Throws StructuralError when the pomonoids differ.
  HomSearch(const SPoset& dom, const SPoset& cod);

  /// Intersect the admissible values of a with `allowed`.
  void restrict(Elem a, Subset allowed) { domains_[a] &= allowed; }
  void fix(Elem a, Elem value) { domains_[a] &= bit(value); }
  bool infeasible() const;

  /// Calls visit(table) for each admissible table until it returns false.
  /// Returns the number of tables visited. Each tried candidate value counts
  /// as one node; exceeding `node_budget` throws BudgetError.
  template <class Visitor>
  std::size_t run(std::uint64_t node_budget, Visitor&& visit);

 private:
  bool assign(Elem a, Elem value, Subset* next);
  template <class Visitor>
  bool descend(Elem a, Visitor& visit);

  const Poset* dom_;
  const Poset* cod_;
  std::span<const Elem> dom_act_;
  std::span<const Elem> cod_act_;
  std::size_t acts_ = 0;
  std::size_t n_ = 0;
  std::vector<Subset> domains_;
  std::vector<Subset> stack_;
  std::vector<Elem> table_;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_ = 0;
  std::size_t visited_ = 0;
};

template <class Visitor>
std::size_t HomSearch::run(std::uint64_t node_budget, Visitor&& visit) {
  budget_ = node_budget;
  nodes_ = 0;
  visited_ = 0;
  if (n_ == 0 || infeasible()) return 0;
  stack_.assign((n_ + 1) * n_, 0);
  std::copy(domains_.begin(), domains_.end(), stack_.begin());
  table_.assign(n_, 0);
  descend(0, visit);
  return visited_;
}

template <class Visitor>
bool HomSearch::descend(Elem a, Visitor& visit) {
  if (a == n_) {
    ++visited_;
    return visit(static_cast<const std::vector<Elem>&>(table_));
  }
  const Subset* level = &stack_[a * n_];
  Subset* next = &stack_[(a + 1) * n_];
  for (Subset cands = level[a]; cands != 0; cands &= cands - 1) {
    if (++nodes_ > budget_) throw BudgetError("hom-set enumeration", budget_);
    const Elem c = lowest(cands);
    std::copy(level, level + n_, next);
    if (!assign(a, c, next)) continue;
    table_[a] = c;
    if (!descend(a + 1, visit)) return false;
  }
  return true;
}

}  // namespace poswfs
