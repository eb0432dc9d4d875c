#include "poswfs/lifting.hpp"

#include <algorithm>

#include "poswfs/morphism_classes.hpp"
#include "poswfs/order.hpp"

namespace poswfs {

namespace {

std::vector<Subset> diagonal_domains(const LiftingSquare& sq) {
  const SPoset& b = *sq.l.cod;
  std::vector<Subset> allowed(b.size(), 0);
  for (Elem c = 0; c < sq.r.dom->size(); ++c) allowed[sq.r(c)] |= bit(c);
  std::vector<Subset> out(b.size());
  for (Elem y = 0; y < b.size(); ++y) out[y] = allowed[sq.v(y)];
  for (Elem a = 0; a < sq.l.dom->size(); ++a) out[sq.l(a)] &= bit(sq.u(a));
  return out;
}

}  // namespace

bool commutes(const LiftingSquare& sq) {
  for (Elem a = 0; a < sq.l.dom->size(); ++a)
    if (sq.r(sq.u(a)) != sq.v(sq.l(a))) return false;
  return true;
}

LiftingSquare make_square(SPosetMap l, SPosetMap r, SPosetMap u, SPosetMap v) {
  for (const SPosetMap* m : {&l, &r, &u, &v})
    if (!validate_s_poset_map(*m)) throw StructuralError("square side is not an S-poset map");
  if (!same_object(l.dom, u.dom) || !same_object(u.cod, r.dom) || !same_object(l.cod, v.dom) ||
      !same_object(v.cod, r.cod))
    throw StructuralError("square sides do not fit together");
  LiftingSquare sq{std::move(l), std::move(r), std::move(u), std::move(v)};
  if (!commutes(sq)) throw StructuralError("square does not commute");
  return sq;
}

bool is_diagonal(const LiftingSquare& sq, const SPosetMap& d) {
  if (d.table.size() != sq.l.cod->size() || !validate_s_poset_map(d)) return false;
  for (Elem a = 0; a < sq.l.dom->size(); ++a)
    if (d(sq.l(a)) != sq.u(a)) return false;
  for (Elem b = 0; b < sq.l.cod->size(); ++b)
    if (sq.r(d(b)) != sq.v(b)) return false;
  return true;
}

std::optional<SPosetMap> find_diagonal(const LiftingSquare& sq, const Limits& limits) {
  const auto allowed = diagonal_domains(sq);
  return first_hom(sq.l.cod, sq.r.dom, allowed, limits);
}

std::size_t count_diagonals(const LiftingSquare& sq, std::size_t stop_after, const Limits& limits) {
  const auto allowed = diagonal_domains(sq);
  std::size_t count = 0;
  for_each_hom(*sq.l.cod, *sq.r.dom, allowed, limits, [&](const std::vector<Elem>&) {
    return ++count < stop_after;
  });
  return count;
}

void for_each_square(const SPosetMap& l, const SPosetMap& r, const Limits& limits,
                     const std::function<bool(const LiftingSquare&)>& visit) {
  const SPosetRef& a = l.dom;
  const SPosetRef& b = l.cod;
  const SPosetRef& c = r.dom;
  const SPosetRef& d = r.cod;
  bool stop = false;
  for_each_hom(*a, *c, {}, limits, [&](const std::vector<Elem>& u) {
    std::vector<Subset> v_allowed(b->size(), d->carrier().all());
    for (Elem x = 0; x < a->size(); ++x) v_allowed[l(x)] &= bit(r(u[x]));
    for_each_hom(*b, *d, v_allowed, limits, [&](const std::vector<Elem>& v) {
      stop = !visit(LiftingSquare{l, r, SPosetMap{a, c, u}, SPosetMap{b, d, v}});
      return !stop;
    });
    return !stop;
  });
}

ClassReport diagonalizes(const SPosetMap& l, const SPosetMap& r, const Limits& limits) {
  std::optional<ClassReport> failure;
  for_each_square(l, r, limits, [&](const LiftingSquare& sq) {
    if (find_diagonal(sq, limits)) return true;
    failure = ClassReport::fail(Witness{"unliftable-square", {}, {{"u", sq.u}, {"v", sq.v}}});
    return false;
  });
  return failure ? *failure : ClassReport::pass();
}

Factorization cd_es_factorization(const SPosetMap& f) {
  Coproduct sum = disjoint_union(f.dom, f.cod);
  return Factorization{sum.in_left, copair(sum, f, identity_map(f.cod))};
}

Factorization image_factorization(const SPosetMap& f) {
  const Subset im = f.image();
  auto [poset, members] = induced_subposet(f.cod->carrier(), im);
  std::vector<Elem> local(f.cod->size(), 0);
  for (Elem i = 0; i < members.size(); ++i) local[members[i]] = i;
  const auto m = f.cod->over().size();
  std::vector<Elem> act;
  for (Elem y : members)
    for (Elem s = 0; s < m; ++s) act.push_back(local[f.cod->act(y, s)]);
  auto mid = std::make_shared<const SPoset>(f.cod->over_ref(), std::move(poset), std::move(act));
  std::vector<Elem> onto(f.dom->size());
  for (Elem a = 0; a < f.dom->size(); ++a) onto[a] = local[f(a)];
  return Factorization{SPosetMap{f.dom, mid, std::move(onto)},
                       SPosetMap{mid, f.cod, std::move(members)}};
}

SPosetMap cd_es_diagonal(const LiftingSquare& sq, std::optional<SPosetMap> section,
                         const Limits& limits) {
  if (!is_down_closed_embedding(sq.l))
    throw PreconditionError("left side of the square is not a down-closed embedding");
  auto dec = direct_summand_decomposition(sq.l);
  if (!dec)
    throw PreconditionError("image of the left side is not a direct summand of its codomain");
  if (!section) {
    auto split = is_split_epi(sq.r, limits);
    if (!split) throw PreconditionError("right side of the square is not a split epimorphism");
    section = *split.witness->map("section");
  }
  const SPosetMap& h = *section;
  if (compose(sq.r, h).table != identity_map(sq.r.cod).table)
    throw PreconditionError("supplied map is not a section of the right side");

  // k on X + Z: u on X, h v on Z.
  const auto nx = static_cast<Elem>(sq.l.dom->size());
  std::vector<Elem> k(dec->sum->size());
  for (Elem i = 0; i < k.size(); ++i)
    k[i] = i < nx ? sq.u(i) : h(sq.v(dec->from_sum(i)));
  std::vector<Elem> d(sq.l.cod->size());
  for (Elem b = 0; b < d.size(); ++b) d[b] = k[dec->to_sum(b)];
  SPosetMap diagonal{sq.l.cod, sq.r.dom, std::move(d)};
  if (!is_diagonal(sq, diagonal))
    throw InternalInconsistency("constructed diagonal fails a triangle identity");
  return diagonal;
}

LiftingSquare non_split_witness_square(const SPosetMap& f) {
  Coproduct sum = disjoint_union(f.dom, f.cod);
  return LiftingSquare{sum.in_left, f, identity_map(f.dom), copair(sum, f, identity_map(f.cod))};
}

ClassReport is_injective_object(const SPosetRef& i, std::span<const SPosetMap> h,
                                const Limits& limits) {
  for (const SPosetMap& emb : h) {
    std::optional<ClassReport> failure;
    for_each_hom(*emb.dom, *i, {}, limits, [&](const std::vector<Elem>& u) {
      std::vector<Subset> allowed(emb.cod->size(), i->carrier().all());
      for (Elem a = 0; a < emb.dom->size(); ++a) allowed[emb(a)] &= bit(u[a]);
      if (first_hom(emb.cod, i, allowed, limits)) return true;
      failure = ClassReport::fail(
          Witness{"no-extension", {}, {{"h", emb}, {"u", SPosetMap{emb.dom, i, u}}}});
      return false;
    });
    if (failure) return *failure;
  }
  return ClassReport::pass();
}

ClassReport is_slice_injective(const SPosetMap& f, std::span<const SPosetMap> h,
                               const Limits& limits) {
  for (const SPosetMap& emb : h) {
    auto r = diagonalizes(emb, f, limits);
    if (!r) {
      r.witness->maps.insert(r.witness->maps.begin(), {"h", emb});
      return r;
    }
  }
  return ClassReport::pass();
}

WfsReport verify_wfs(const WfsCheck& check, std::span<const SPosetRef> objects,
                     const Limits& limits) {
  WfsReport report;
  report.objects = objects.size();
  auto note = [&](std::string condition, std::vector<std::pair<std::string, SPosetMap>> maps) {
    ++report.counterexample_count;
    if (report.counterexamples.size() < check.max_counterexamples)
      report.counterexamples.push_back({std::move(condition), std::move(maps)});
  };

  // Maps grouped by (dom, cod) object index, in catalog order.
  struct Entry {
    std::size_t dom, cod;
    SPosetMap map;
    bool in_left, in_right;
  };
  std::vector<Entry> maps;
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < objects.size(); ++j) {
      try {
        for (auto& m : hom_s_poset(objects[i], objects[j], limits))
          maps.push_back({i, j, std::move(m), false, false});
      } catch (const BudgetError&) {
        report.complete = false;
      }
    }
  for (auto& e : maps) {
    e.in_left = check.left(e.map);
    e.in_right = check.right(e.map);
  }
  report.maps = maps.size();
  report.left_maps = static_cast<std::size_t>(
      std::count_if(maps.begin(), maps.end(), [](const Entry& e) { return e.in_left; }));
  report.right_maps = static_cast<std::size_t>(
      std::count_if(maps.begin(), maps.end(), [](const Entry& e) { return e.in_right; }));

  // (1) factorization
  for (const auto& e : maps) {
    auto fac = check.factorize(e.map);
    const bool ok = compose(fac.right, fac.left).table == e.map.table && check.left(fac.left) &&
                    check.right(fac.right);
    if (!ok) {
      report.factorization_ok = false;
      note("factorization", {{"f", e.map}, {"left", fac.left}, {"right", fac.right}});
    }
  }

  // (2) lifting
  for (const auto& l : maps) {
    if (!l.in_left) continue;
    for (const auto& r : maps) {
      if (!r.in_right) continue;
      ++report.pairs_checked;
      try {
        for_each_square(l.map, r.map, limits, [&](const LiftingSquare& sq) {
          ++report.squares_checked;
          const std::size_t n = count_diagonals(sq, check.require_unique_diagonals ? 2 : 1, limits);
          if (n == 0) {
            report.lifting_ok = false;
            note("lifting", {{"l", sq.l}, {"r", sq.r}, {"u", sq.u}, {"v", sq.v}});
            return false;
          }
          if (check.require_unique_diagonals && n > 1) {
            report.unique_diagonals_ok = false;
            note("unique-diagonal", {{"l", sq.l}, {"r", sq.r}, {"u", sq.u}, {"v", sq.v}});
          }
          return true;
        });
      } catch (const BudgetError&) {
        report.complete = false;
      }
    }
  }

  // Split flags per map, used by the retract conditions.
  std::vector<char> split_mono(maps.size(), 0), split_epi(maps.size(), 0);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    try {
      split_mono[k] = is_split_mono(maps[k].map, limits).verdict;
      split_epi[k] = is_split_epi(maps[k].map, limits).verdict;
    } catch (const BudgetError&) {
      report.complete = false;
    }
  }

  // (3a) alpha f in L, alpha split mono => f in L
  // (3b) f' beta in R, beta split epi => f' in R
  for (const auto& f : maps) {
    for (std::size_t k = 0; k < maps.size(); ++k) {
      const auto& other = maps[k];
      if (!f.in_left && split_mono[k] && other.dom == f.cod) {
        if (check.left(compose(other.map, f.map))) {
          report.left_retract_closed = false;
          note("left-retract", {{"f", f.map}, {"alpha", other.map}});
        }
      }
      if (!f.in_right && split_epi[k] && other.cod == f.dom) {
        if (check.right(compose(f.map, other.map))) {
          report.right_retract_closed = false;
          note("right-retract", {{"f", f.map}, {"beta", other.map}});
        }
      }
    }
  }
  return report;
}

}  // namespace poswfs
