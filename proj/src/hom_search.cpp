#include "poswfs/hom_search.hpp"

namespace poswfs {

HomSearch::HomSearch(const Poset& dom, const Poset& cod)
    : dom_(&dom), cod_(&cod), n_(dom.size()), domains_(dom.size(), cod.all()) {}

HomSearch::HomSearch(const SPoset& dom, const SPoset& cod)
    : dom_(&dom.carrier()),
      cod_(&cod.carrier()),
      dom_act_(dom.act_table()),
      cod_act_(cod.act_table()),
      acts_(dom.over().size()),
      n_(dom.size()),
      domains_(dom.size(), cod.carrier().all()) {
  if (&dom.over() != &cod.over() && !dom.over().same_as(cod.over()))
    throw StructuralError("S-posets over different pomonoids");
}

bool HomSearch::infeasible() const {
  for (Subset d : domains_)
    if (d == 0) return true;
  return false;
}

bool HomSearch::assign(Elem a, Elem value, Subset* next) {
  for (std::size_t s = 0; s < acts_; ++s) {
    const Elem k = dom_act_[a * acts_ + s];
    const Elem y = cod_act_[value * acts_ + s];
    if (k < a) {
      if (table_[k] != y) return false;
    } else if (k == a) {
      if (y != value) return false;
    } else {
      next[k] &= bit(y);
      if (next[k] == 0) return false;
    }
  }
  const Subset later = full_subset(n_) & ~full_subset(a + 1);
  for (Subset m = dom_->up(a) & later; m != 0; m &= m - 1) {
    const Elem k = lowest(m);
    next[k] &= cod_->up(value);
    if (next[k] == 0) return false;
  }
  for (Subset m = dom_->down(a) & later; m != 0; m &= m - 1) {
    const Elem k = lowest(m);
    next[k] &= cod_->down(value);
    if (next[k] == 0) return false;
  }
  return true;
}

}  // namespace poswfs
