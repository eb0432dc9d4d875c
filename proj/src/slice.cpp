#include "poswfs/slice.hpp"

#include <algorithm>
#include <set>

#include "poswfs/hom_search.hpp"
#include "poswfs/morphism_classes.hpp"

namespace poswfs {

namespace {

std::vector<Subset> fibre_masks(const SPosetMap& f) {
  std::vector<Subset> masks(f.cod->size(), 0);
  for (Elem x = 0; x < f.dom->size(); ++x) masks[f(x)] |= bit(x);
  return masks;
}

Witness pair_witness(std::string kind, const SPosetMap& f, Elem x, Elem b) {
  return Witness{std::move(kind), {f.dom->name(x), f.cod->name(b)}, {}};
}

bool has_trivial_action(const SPoset& b) {
  for (Elem y = 0; y < b.size(); ++y)
    for (Elem s = 0; s < b.over().size(); ++s)
      if (b.act(y, s) != y) return false;
  return true;
}

std::string table_name(const std::vector<Elem>& table, const Poset& cod, char open, char close) {
  std::string name(1, open);
  for (std::size_t k = 0; k < table.size(); ++k) name += (k ? "," : "") + cod.name(table[k]);
  return name + close;
}

}  // namespace

ClassReport is_fibration(const SPosetMap& f) {
  const Poset& x = f.dom->carrier();
  const Poset& b = f.cod->carrier();
  const auto masks = fibre_masks(f);
  for (Elem e = 0; e < x.size(); ++e) {
    for (Elem base = 0; base < b.size(); ++base) {
      if (!b.leq(f(e), base)) continue;
      if (!minimum_in(x, masks[base] & x.up(e)))
        return ClassReport::fail(pair_witness("no-minimum", f, e, base));
    }
  }
  return ClassReport::pass();
}

ClassReport is_cofibration(const SPosetMap& f) {
  const Poset& x = f.dom->carrier();
  const Poset& b = f.cod->carrier();
  const auto masks = fibre_masks(f);
  for (Elem e = 0; e < x.size(); ++e) {
    for (Elem base = 0; base < b.size(); ++base) {
      if (!b.leq(base, f(e))) continue;
      if (!maximum_in(x, masks[base] & x.down(e)))
        return ClassReport::fail(pair_witness("no-maximum", f, e, base));
    }
  }
  return ClassReport::pass();
}

std::vector<FibreStatus> fibre_statuses(const SPosetMap& f, const Limits& limits) {
  std::vector<FibreStatus> out;
  const auto masks = fibre_masks(f);
  for (Elem b = 0; b < f.cod->size(); ++b) {
    if (masks[b] == 0) {
      out.push_back({b, true, false});
      continue;
    }
    auto [poset, members] = induced_subposet(f.dom->carrier(), masks[b]);
    out.push_back({b, false, is_complete(poset, limits).verdict});
  }
  return out;
}

ClassReport fibres_complete(const SPosetMap& f, const Limits& limits) {
  for (const auto& st : fibre_statuses(f, limits)) {
    if (st.complete) continue;
    return ClassReport::fail(
        Witness{st.empty ? "empty-fibre" : "incomplete-fibre", {f.cod->name(st.base_point)}, {}});
  }
  return ClassReport::pass();
}

ClassReport is_topological(const SPosetMap& f, const Limits& limits) {
  const Poset& x = f.dom->carrier();
  const Poset& b = f.cod->carrier();
  if (x.size() > limits.topological_max)
    throw BudgetError("topological check family enumeration", limits.topological_max);
  const auto masks = fibre_masks(f);
  for (Elem base = 0; base < b.size(); ++base) {
    Subset above = 0;  // x with base <= f(x)
    Subset below = 0;  // y with f(y) <= base
    for (Elem e = 0; e < x.size(); ++e) {
      if (b.leq(base, f(e))) above |= bit(e);
      if (b.leq(f(e), base)) below |= bit(e);
    }
    // Every family F within `above`, including the empty one.
    for (Subset fam = above;; fam = (fam - 1) & above) {
      const Subset candidates = below & lower_bounds(x, fam);
      const auto lift = maximum_in(x, candidates);
      if (!lift || !contains(masks[base], *lift)) {
        Witness w{"no-initial-lift", {b.name(base)}, {}};
        for_each_member(fam, [&](Elem e) { w.elements.push_back(x.name(e)); });
        return ClassReport::fail(std::move(w));
      }
      if (fam == 0) break;
    }
  }
  return ClassReport::pass();
}

FibrewiseReport fibrewise_report(const SPosetMap& f, const Limits& limits) {
  return FibrewiseReport{fibre_statuses(f, limits), fibres_complete(f, limits), is_fibration(f),
                         is_cofibration(f), is_topological(f, limits)};
}

SectionsObject sections_object(const SliceObject& sl, const Limits& limits) {
  const SPosetMap& f = sl.f;
  const PomonoidRef& s = f.dom->over_ref();
  Product domain = product(regular_s_poset(s), f.cod);
  const auto nb = static_cast<Elem>(f.cod->size());
  const auto m = static_cast<Elem>(s->size());
  const auto masks = fibre_masks(f);
  std::vector<Subset> allowed(domain.product->size());
  for (Elem t = 0; t < m; ++t)
    for (Elem b = 0; b < nb; ++b) allowed[domain.pair(t, b)] = masks[b];

  SectionsObject out{nullptr, {}, domain};
  for_each_hom(*domain.product, *f.dom, allowed, limits, [&](const std::vector<Elem>& t) {
    out.tables.push_back(t);
    return true;
  });
  if (out.tables.empty()) return out;
  if (out.tables.size() > kMaxElements) throw BudgetError("sections object size", kMaxElements);

  const auto n = static_cast<Elem>(out.tables.size());
  const Poset& x = f.dom->carrier();
  std::vector<std::string> names;
  std::vector<Subset> up(n, 0);
  for (Elem i = 0; i < n; ++i) {
    names.push_back(table_name(out.tables[i], x, '[', ']'));
    for (Elem j = 0; j < n; ++j) {
      bool le = true;
      for (std::size_t k = 0; le && k < out.tables[i].size(); ++k)
        le = x.leq(out.tables[i][k], out.tables[j][k]);
      if (le) up[i] |= bit(j);
    }
  }
  std::vector<Elem> act(n * m);
  for (Elem i = 0; i < n; ++i)
    for (Elem a = 0; a < m; ++a) {
      std::vector<Elem> shifted(out.tables[i].size());
      for (Elem t = 0; t < m; ++t)
        for (Elem b = 0; b < nb; ++b)
          shifted[domain.pair(t, b)] = out.tables[i][domain.pair(s->mul(a, t), b)];
      auto it = std::lower_bound(out.tables.begin(), out.tables.end(), shifted);
      if (it == out.tables.end() || *it != shifted)
        throw InternalInconsistency("sections object is not closed under the action");
      act[i * m + a] = static_cast<Elem>(it - out.tables.begin());
    }
  out.object = std::make_shared<const SPoset>(s, Poset(std::move(names), std::move(up)),
                                              std::move(act));
  return out;
}

ClassReport pairing_is_section(const SliceObject& sl, const Limits& limits) {
  const SPosetMap& f = sl.f;
  Product xb = product(f.dom, f.cod);
  const auto masks = fibre_masks(f);
  std::vector<Subset> allowed(xb.product->size());
  for (Elem x = 0; x < f.dom->size(); ++x)
    for (Elem b = 0; b < f.cod->size(); ++b) allowed[xb.pair(x, b)] = masks[b];
  for (Elem x = 0; x < f.dom->size(); ++x) allowed[xb.pair(x, f(x))] &= bit(x);
  if (auto r = first_hom(xb.product, f.dom, allowed, limits))
    return ClassReport::pass(Witness{"retraction", {}, {{"retraction", *r}}});
  return ClassReport::fail(Witness{"no-retraction", {}, {}});
}

Elem min_in_fibre(const SliceObject& sl, const SPosetMap& r, Elem x, Elem b) {
  const SPosetMap& f = sl.f;
  const Poset& xp = f.dom->carrier();
  if (!f.cod->carrier().leq(f(x), b)) throw PreconditionError("min_in_fibre needs f(x) <= b");
  if (r.dom->size() != f.dom->size() * f.cod->size())
    throw PreconditionError("retraction is not defined on X x B");
  const Elem xb = r(x * static_cast<Elem>(f.cod->size()) + b);
  if (f(xb) != b) throw InternalInconsistency("r(x, b) is not in the fibre over b");
  if (!xp.leq(x, xb)) throw InternalInconsistency("r(x, b) is not above x");
  for (Elem y = 0; y < xp.size(); ++y)
    if (f(y) == b && xp.leq(x, y) && !xp.leq(xb, y))
      throw InternalInconsistency("r(x, b) is not the minimum of its fibre above x");
  return xb;
}

std::optional<Elem> CofreeObject::index_of(const std::vector<Elem>& table) const {
  auto it = std::lower_bound(tables.begin(), tables.end(), table);
  if (it == tables.end() || *it != table) return std::nullopt;
  return static_cast<Elem>(it - tables.begin());
}

CofreeObject cofree_object(const PosetRef& q, const PomonoidRef& s, const Limits& limits) {
  CofreeObject out;
  HomSearch search(s->order(), *q);
  search.run(limits.hom_nodes, [&](const std::vector<Elem>& t) {
    out.tables.push_back(t);
    return true;
  });
  if (out.tables.size() > kMaxElements) throw BudgetError("cofree object size", kMaxElements);
  const auto n = static_cast<Elem>(out.tables.size());
  const auto m = static_cast<Elem>(s->size());
  std::vector<std::string> names;
  std::vector<Subset> up(n, 0);
  for (Elem i = 0; i < n; ++i) {
    names.push_back(table_name(out.tables[i], *q, '<', '>'));
    for (Elem j = 0; j < n; ++j) {
      bool le = true;
      for (Elem t = 0; le && t < m; ++t) le = q->leq(out.tables[i][t], out.tables[j][t]);
      if (le) up[i] |= bit(j);
    }
  }
  std::vector<Elem> act(n * m);
  for (Elem i = 0; i < n; ++i)
    for (Elem a = 0; a < m; ++a) {
      std::vector<Elem> shifted(m);
      for (Elem t = 0; t < m; ++t) shifted[t] = out.tables[i][s->mul(a, t)];
      auto idx = out.index_of(shifted);
      if (!idx) throw InternalInconsistency("cofree action leaves the monotone maps");
      act[i * m + a] = *idx;
    }
  out.object = std::make_shared<const SPoset>(s, Poset(std::move(names), std::move(up)),
                                              std::move(act));
  return out;
}

Envelope regular_injective_envelope(const SliceObject& sl, const Limits& limits) {
  const SPosetMap& f = sl.f;
  const SPoset& a = *f.dom;
  const PomonoidRef& s = a.over_ref();
  Completion completion = macneille_completion(PosetRef(f.dom, &a.carrier()));
  CofreeObject cofree = cofree_object(completion.completion, s, limits);
  Product prod = product(cofree.object, f.cod);

  const auto m = static_cast<Elem>(s->size());
  std::vector<Elem> table(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    std::vector<Elem> phi(m);
    for (Elem t = 0; t < m; ++t) phi[t] = completion.embedding(a.act(x, t));
    auto idx = cofree.index_of(phi);
    if (!idx) throw InternalInconsistency("s -> down(a s) is not monotone");
    table[x] = prod.pair(*idx, f(x));
  }
  SPosetMap embedding{f.dom, prod.product, std::move(table)};
  if (!is_s_poset_embedding(embedding))
    throw InternalInconsistency("envelope map is not an S-poset embedding");
  if (compose(prod.proj_right, embedding).table != f.table)
    throw InternalInconsistency("envelope triangle does not commute");
  SliceObject env{prod.proj_right};
  return Envelope{std::move(completion), std::move(cofree), std::move(prod), std::move(env),
                  std::move(embedding)};
}

Factorization emb_top_factorization(const SPosetMap& f) {
  if (!has_trivial_action(*f.dom) || !has_trivial_action(*f.cod))
    throw PreconditionError("emb-top factorization needs trivially acted ends");
  const PomonoidRef& s = f.dom->over_ref();
  Completion c = macneille_completion(PosetRef(f.dom, &f.dom->carrier()));
  Product prod = product(trivial_action(*c.completion, s), f.cod);
  std::vector<Elem> table(f.dom->size());
  for (Elem x = 0; x < f.dom->size(); ++x) table[x] = prod.pair(c.embedding(x), f(x));
  return Factorization{SPosetMap{f.dom, prod.product, std::move(table)}, prod.proj_right};
}

CharacterizationResult characterization_check(const SliceObject& f, std::span<const SPosetMap> h,
                                              const Limits& limits) {
  CharacterizationResult out;
  out.lhs_report = is_slice_injective(f.f, h, limits);
  out.slice_injective = out.lhs_report.verdict;
  out.pairing_section = pairing_is_section(f, limits).verdict;
  auto sections = sections_object(f, limits);
  out.sections_empty = sections.object == nullptr;
  if (!out.sections_empty)
    out.sections_injective = is_injective_object(sections.object, h, limits).verdict;
  if (out.sections_empty)
    out.outcome = CharacterizationOutcome::sections_empty;
  else
    out.outcome = out.slice_injective == out.rhs() ? CharacterizationOutcome::agree
                                                   : CharacterizationOutcome::disagree;
  return out;
}

SliceObject functor_G_B(const MonotoneMap& l, const SPosetRef& base) {
  if (!(base->carrier() == *l.cod) || !has_trivial_action(*base))
    throw PreconditionError("G_B needs the trivially acted base over cod l");
  if (!is_monotone(l)) throw StructuralError("G_B applied to a non-monotone map");
  auto total = trivial_action(*l.dom, base->over_ref());
  return SliceObject{SPosetMap{total, base, l.table}};
}

SliceObject functor_G_B(const MonotoneMap& l, const PomonoidRef& s) {
  return functor_G_B(l, trivial_action(*l.cod, s));
}

HBResult functor_H_B(const SliceObject& sl) {
  const SPosetMap& f = sl.f;
  if (!has_trivial_action(*f.cod)) throw PreconditionError("H_B needs a trivially acted base");
  Quotient q = quotient_theta(f.dom);
  std::vector<Elem> table(q.classes.size());
  for (Elem c = 0; c < q.classes.size(); ++c) {
    const Elem first = lowest(q.classes[c]);
    table[c] = f(first);
    for_each_member(q.classes[c], [&](Elem a) {
      if (f(a) != table[c]) throw InternalInconsistency("H_B(f) is not well defined on A/theta");
    });
  }
  MonotoneMap hb{q.poset, PosetRef(f.cod, &f.cod->carrier()), std::move(table)};
  if (!is_monotone(hb)) throw InternalInconsistency("H_B(f) is not monotone");
  return HBResult{std::move(q), std::move(hb)};
}

ClassReport adjunction_check(const SliceObject& sl, const MonotoneMap& l, AdjunctionCounts* counts,
                             const Limits& limits) {
  const SPosetMap& f = sl.f;
  if (!(f.cod->carrier() == *l.cod)) throw PreconditionError("l and f have different bases");
  SliceObject g = functor_G_B(l, f.cod);
  HBResult hb = functor_H_B(sl);
  const Poset& p = *l.dom;

  std::vector<Subset> over_b(l.cod->size(), 0);
  for (Elem y = 0; y < p.size(); ++y) over_b[l(y)] |= bit(y);

  // hom_{Pos-S/B}(f, G_B l)
  std::vector<std::vector<Elem>> s_side;
  {
    std::vector<Subset> allowed(f.dom->size());
    for (Elem a = 0; a < f.dom->size(); ++a) allowed[a] = over_b[f(a)];
    for_each_hom(*f.dom, *g.f.dom, allowed, limits, [&](const std::vector<Elem>& t) {
      s_side.push_back(t);
      return true;
    });
  }
  // hom_{Pos/B}(H_B f, l)
  std::set<std::vector<Elem>> pos_side;
  {
    HomSearch search(*hb.quotient.poset, p);
    for (Elem c = 0; c < hb.quotient.classes.size(); ++c) search.restrict(c, over_b[hb.map(c)]);
    search.run(limits.hom_nodes, [&](const std::vector<Elem>& t) {
      pos_side.insert(t);
      return true;
    });
  }
  if (counts) *counts = {pos_side.size(), s_side.size()};

  std::set<std::vector<Elem>> images;
  for (const auto& h : s_side) {
    std::vector<Elem> hbar(hb.quotient.classes.size());
    for (Elem c = 0; c < hbar.size(); ++c) {
      hbar[c] = h[lowest(hb.quotient.classes[c])];
      bool constant = true;
      for_each_member(hb.quotient.classes[c], [&](Elem a) { constant = constant && h[a] == hbar[c]; });
      if (!constant)
        return ClassReport::fail(Witness{"transpose-ill-defined", {hb.quotient.poset->name(c)},
                                         {{"h", SPosetMap{f.dom, g.f.dom, h}}}});
    }
    if (!pos_side.count(hbar))
      return ClassReport::fail(
          Witness{"transpose-outside-hom", {}, {{"h", SPosetMap{f.dom, g.f.dom, h}}}});
    if (!images.insert(hbar).second)
      return ClassReport::fail(
          Witness{"transpose-not-injective", {}, {{"h", SPosetMap{f.dom, g.f.dom, h}}}});
  }
  if (images.size() != pos_side.size())
    return ClassReport::fail(Witness{"transpose-not-surjective", {}, {}});
  return ClassReport::pass();
}

}  // namespace poswfs
