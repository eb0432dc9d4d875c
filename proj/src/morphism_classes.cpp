#include "poswfs/morphism_classes.hpp"

#include <vector>

#include "poswfs/order.hpp"

namespace poswfs {

namespace {

Subset closed_under_action_violation(const SPoset& a, Subset mask) {
  Subset bad = 0;
  for_each_member(mask, [&](Elem x) {
    for (Elem s = 0; s < a.over().size(); ++s)
      if (!contains(mask, a.act(x, s))) bad |= bit(x);
  });
  return bad;
}

}  // namespace

bool is_injective(const SPosetMap& f) {
  return cardinality(f.image()) == f.table.size();
}

bool is_surjective(const SPosetMap& f) { return f.image() == f.cod->carrier().all(); }

bool is_s_poset_embedding(const SPosetMap& f) {
  return validate_s_poset_map(f) && is_order_embedding(f.underlying());
}

bool is_down_closed_embedding(const SPosetMap& f) {
  if (!is_s_poset_embedding(f)) return false;
  const Subset im = f.image();
  return is_down_closed_subset(f.cod->carrier(), im) &&
         closed_under_action_violation(*f.cod, im) == 0;
}

ClassReport is_split_epi(const SPosetMap& f, const Limits& limits) {
  std::vector<Subset> allowed(f.cod->size(), 0);
  for (Elem a = 0; a < f.dom->size(); ++a) allowed[f(a)] |= bit(a);
  if (auto g = first_hom(f.cod, f.dom, allowed, limits))
    return ClassReport::pass(Witness{"section", {}, {{"section", *g}}});
  return ClassReport::fail(Witness{"no-section", {}, {}});
}

ClassReport is_split_mono(const SPosetMap& f, const Limits& limits) {
  if (!is_injective(f)) return ClassReport::fail(Witness{"not-injective", {}, {}});
  std::vector<Subset> allowed(f.cod->size(), f.dom->carrier().all());
  for (Elem a = 0; a < f.dom->size(); ++a) allowed[f(a)] = bit(a);
  if (auto g = first_hom(f.cod, f.dom, allowed, limits))
    return ClassReport::pass(Witness{"retraction", {}, {{"retraction", *g}}});
  return ClassReport::fail(Witness{"no-retraction", {}, {}});
}

bool is_unitary_mono(const SPosetMap& f) {
  if (!is_injective(f)) throw PreconditionError("unitary check of a non-injective map");
  const Subset im = f.image();
  const SPoset& y = *f.cod;
  for (Elem e = 0; e < y.size(); ++e) {
    if (contains(im, e)) continue;
    for (Elem s = 0; s < y.over().size(); ++s)
      if (contains(im, y.act(e, s))) return false;
  }
  return true;
}

std::optional<SummandDecomposition> direct_summand_decomposition(const SPosetMap& f) {
  if (!is_s_poset_embedding(f))
    throw PreconditionError("direct-summand decomposition of a non-embedding");
  const SPoset& y = *f.cod;
  const Subset im = f.image();
  const Subset rest = y.carrier().all() & ~im;
  if (closed_under_action_violation(y, im) != 0) return std::nullopt;
  if (closed_under_action_violation(y, rest) != 0) return std::nullopt;
  bool crossing = false;
  for_each_member(im, [&](Elem e) {
    if ((y.carrier().up(e) | y.carrier().down(e)) & rest) crossing = true;
  });
  if (crossing) return std::nullopt;

  if (rest == 0) {
    std::vector<Elem> inverse(y.size());
    for (Elem a = 0; a < f.dom->size(); ++a) inverse[f(a)] = a;
    return SummandDecomposition{nullptr, f.dom, SPosetMap{f.cod, f.dom, std::move(inverse)}, f};
  }

  auto [poset, members] = induced_subposet(y.carrier(), rest);
  std::vector<Elem> local(y.size(), 0);
  for (Elem i = 0; i < members.size(); ++i) local[members[i]] = i;
  std::vector<Elem> act;
  for (Elem e : members)
    for (Elem s = 0; s < y.over().size(); ++s) act.push_back(local[y.act(e, s)]);
  auto complement = std::make_shared<const SPoset>(y.over_ref(), std::move(poset), std::move(act));

  Coproduct sum = disjoint_union(f.dom, complement);
  const auto nx = static_cast<Elem>(f.dom->size());
  std::vector<Elem> from(sum.sum->size()), to(y.size());
  for (Elem a = 0; a < nx; ++a) from[a] = f(a);
  for (Elem i = 0; i < members.size(); ++i) from[nx + i] = members[i];
  for (Elem i = 0; i < from.size(); ++i) to[from[i]] = i;
  return SummandDecomposition{complement, sum.sum, SPosetMap{f.cod, sum.sum, std::move(to)},
                              SPosetMap{sum.sum, f.cod, std::move(from)}};
}

ClassReport is_retract_of(const SPosetMap& g, const SPosetMap& f, const Limits& limits) {
  if (!same_object(g.dom, f.dom)) throw StructuralError("retract check needs a shared domain");
  const SPosetRef& b = f.cod;
  const SPosetRef& c = g.cod;
  // alpha g = f fixes alpha on im g.
  std::vector<Subset> alpha_allowed(c->size(), b->carrier().all());
  for (Elem a = 0; a < g.dom->size(); ++a) alpha_allowed[g(a)] &= bit(f(a));
  std::optional<ClassReport> found;
  for_each_hom(*c, *b, alpha_allowed, limits, [&](const std::vector<Elem>& alpha) {
    // beta alpha = 1 and beta f = g fix beta on im alpha and im f.
    std::vector<Subset> beta_allowed(b->size(), c->carrier().all());
    for (Elem x = 0; x < c->size(); ++x) beta_allowed[alpha[x]] &= bit(x);
    for (Elem a = 0; a < f.dom->size(); ++a) beta_allowed[f(a)] &= bit(g(a));
    if (auto beta = first_hom(b, c, beta_allowed, limits)) {
      found = ClassReport::pass(
          Witness{"retract", {}, {{"alpha", SPosetMap{c, b, alpha}}, {"beta", *beta}}});
      return false;
    }
    return true;
  });
  if (found) return *found;
  return ClassReport::fail(Witness{"no-retract", {}, {}});
}

}  // namespace poswfs
