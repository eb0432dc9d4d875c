#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "poswfs/catalog.hpp"
#include "poswfs/lifting.hpp"
#include "poswfs/morphism_classes.hpp"
#include "poswfs/order.hpp"
#include "poswfs/pomonoid.hpp"
#include "poswfs/slice.hpp"

using namespace poswfs;

namespace {

PomonoidRef u2() { return named_pomonoid("u2"); }
PomonoidRef trivial() { return named_pomonoid("trivial"); }

SPosetRef flat(Poset p, const PomonoidRef& s = trivial()) {
  return trivial_action(std::move(p), s);
}

Poset chain2() { return Poset({"0", "1"}, {0b11, 0b10}); }

PosetRef pref(Poset p) { return std::make_shared<const Poset>(std::move(p)); }

// The non-fibration a -> 0, b -> 1 from the 2-antichain onto the 2-chain.
SPosetMap antichain_onto_chain() { return SPosetMap{flat(Poset::antichain(2)), flat(chain2()), {0, 1}}; }

// Naive fibration: for f(x) <= b the set {x' | f(x') = b, x <= x'} has a
// least element.
bool naive_fibration(const SPosetMap& f, bool dual) {
  const auto mx = oracle::matrix_of(f.dom->carrier());
  const auto mb = oracle::matrix_of(f.cod->carrier());
  auto le = [&](const oracle::Matrix& m, unsigned a, unsigned b) { return dual ? m[b][a] : m[a][b]; };
  for (unsigned x = 0; x < f.dom->size(); ++x)
    for (unsigned b = 0; b < f.cod->size(); ++b) {
      if (!le(mb, f(x), b)) continue;
      std::vector<unsigned> set;
      for (unsigned y = 0; y < f.dom->size(); ++y)
        if (f(y) == b && le(mx, x, y)) set.push_back(y);
      const bool has_min = std::any_of(set.begin(), set.end(), [&](unsigned m) {
        return std::all_of(set.begin(), set.end(), [&](unsigned y) { return le(mx, m, y); });
      });
      if (!has_min) return false;
    }
  return true;
}

bool naive_fibres_complete(const SPosetMap& f) {
  const auto mx = oracle::matrix_of(f.dom->carrier());
  for (unsigned b = 0; b < f.cod->size(); ++b) {
    std::vector<unsigned> idx;
    for (unsigned x = 0; x < f.dom->size(); ++x)
      if (f(x) == b) idx.push_back(x);
    if (idx.empty()) return false;
    oracle::Matrix m(idx.size(), std::vector<bool>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m[i][j] = mx[idx[i]][idx[j]];
    if (!oracle::complete(m)) return false;
  }
  return true;
}

// Naive topological test straight from the initial-lift definition.
bool naive_topological(const SPosetMap& f) {
  const auto mx = oracle::matrix_of(f.dom->carrier());
  const auto mb = oracle::matrix_of(f.cod->carrier());
  const std::size_t n = f.dom->size();
  for (unsigned b = 0; b < f.cod->size(); ++b)
    for (unsigned long fam = 0; fam < (1UL << n); ++fam) {
      auto members = oracle::members(fam, n);
      if (!std::all_of(members.begin(), members.end(), [&](unsigned x) { return mb[b][f(x)]; }))
        continue;
      auto below_all = [&](unsigned y) {
        return std::all_of(members.begin(), members.end(), [&](unsigned x) { return mx[y][x]; });
      };
      std::size_t lifts = 0;
      for (unsigned c = 0; c < n; ++c) {
        if (f(c) != b || !below_all(c)) continue;
        bool initial = true;
        for (unsigned y = 0; y < n; ++y)
          if (mb[f(y)][b] && below_all(y) && !mx[y][c]) initial = false;
        lifts += initial;
      }
      if (lifts != 1) return false;
    }
  return true;
}

std::vector<SPosetMap> maps_of(const char* pomonoid, std::size_t n) {
  return all_maps(catalog_up_to(named_pomonoid(pomonoid), n));
}

}  // namespace

TEST_CASE("is_fibration and is_cofibration examples") {
  auto x = flat(chain2());
  CHECK(is_fibration(identity_map(x)).verdict);
  CHECK(is_cofibration(identity_map(x)).verdict);

  Product xb = product(x, flat(chain2()));
  CHECK(is_fibration(xb.proj_right).verdict);
  CHECK(is_cofibration(xb.proj_right).verdict);

  auto bad = is_fibration(antichain_onto_chain());
  REQUIRE_FALSE(bad.verdict);
  CHECK(bad.witness->kind == "no-minimum");
  CHECK(bad.witness->elements == std::vector<std::string>{"a", "1"});

  // Order dual: the antichain onto the reversed chain, a -> 1, b -> 0.
  auto co = is_cofibration(SPosetMap{flat(Poset::antichain(2)), flat(chain2()), {1, 0}});
  REQUIRE_FALSE(co.verdict);
  CHECK(co.witness->kind == "no-maximum");
}

TEST_CASE("fibration checks agree with the naive definitions") {
  for (const char* name : {"trivial", "u2"})
    for (const auto& f : maps_of(name, 3)) {
      CHECK(is_fibration(f).verdict == naive_fibration(f, false));
      CHECK(is_cofibration(f).verdict == naive_fibration(f, true));
      CHECK(fibres_complete(f).verdict == naive_fibres_complete(f));
    }
}

TEST_CASE("fibres_complete examples and the empty-fibre convention") {
  auto x = flat(chain2());
  CHECK(fibres_complete(identity_map(x)).verdict);
  CHECK(fibres_complete(product(x, flat(Poset::antichain(2))).proj_right).verdict);
  auto anti = fibres_complete(product(flat(Poset::antichain(2)), x).proj_right);
  REQUIRE_FALSE(anti.verdict);
  CHECK(anti.witness->kind == "incomplete-fibre");

  auto point = flat(Poset::singleton());
  SPosetMap bottom{point, x, {0}};
  auto empty = fibres_complete(bottom);
  REQUIRE_FALSE(empty.verdict);
  CHECK(empty.witness->kind == "empty-fibre");
  auto statuses = fibre_statuses(bottom);
  REQUIRE(statuses.size() == 2);
  CHECK_FALSE(statuses[0].empty);
  CHECK(statuses[1].empty);
  CHECK_FALSE(statuses[1].complete);
}

TEST_CASE("is_topological examples") {
  auto x = flat(chain2());
  CHECK(is_topological(identity_map(x)).verdict);
  Completion c = macneille_completion(pref(Poset::antichain(2)));
  auto diamond = flat(*c.completion);
  CHECK(is_topological(product(diamond, x).proj_right).verdict);
  auto bad = is_topological(antichain_onto_chain());
  REQUIRE_FALSE(bad.verdict);
  CHECK(bad.witness->kind == "no-initial-lift");

  Limits small;
  small.topological_max = 2;
  CHECK_THROWS_AS(is_topological(identity_map(flat(Poset::chain(3))), small), BudgetError);
}

TEST_CASE("is_topological agrees with the initial-lift definition") {
  for (const char* name : {"trivial", "u2"})
    for (const auto& f : maps_of(name, 3)) CHECK(is_topological(f).verdict == naive_topological(f));
}

TEST_CASE("over the trivial monoid: slice injectivity, fibrewise and topological agree") {
  Catalog cat = catalog_up_to(trivial(), 3);
  auto emb = all_embeddings(cat);
  for (const auto& f : all_maps(cat)) {
    const bool inj = is_slice_injective(f, emb).verdict;
    const bool fibrewise = fibrewise_report(f).fibrewise_ok();
    CHECK(inj == fibrewise);
    CHECK(inj == is_topological(f).verdict);
  }
}

TEST_CASE("slice injectivity implies topological and complete sub-S-poset fibres") {
  // Test embeddings one size up: against size-2 embeddings alone the
  // 2-antichain -> point still looks injective.
  auto emb = all_embeddings(catalog_up_to(u2(), 3));
  for (const auto& f : maps_of("u2", 2)) {
    if (!is_slice_injective(f, emb).verdict) continue;
    CHECK(is_topological(f).verdict);
    CHECK(is_cofibration(f).verdict);
    for (Elem b = 0; b < f.cod->size(); ++b) {
      auto fb = fibre(f, b);
      if (!fb || !fb->restricted) continue;
      CHECK(is_complete(fb->poset).verdict);
      CHECK(is_injective_object(fb->restricted, emb).verdict);
    }
  }
}

TEST_CASE("topological maps between trivially acted S-posets over a pogroup are slice injective") {
  auto z2 = named_pomonoid("z2");
  Catalog cat = catalog_up_to(z2, 2, CatalogOptions{true});
  Catalog all = catalog_up_to(z2, 2);
  auto emb = all_embeddings(all);
  for (const auto& f : all_maps(cat))
    if (is_topological(f).verdict) CHECK(is_slice_injective(f, emb).verdict);
}

TEST_CASE("sections_object examples") {
  for (const auto& b : catalog_up_to(trivial(), 3).objects) {
    SectionsObject s = sections_object(SliceObject{identity_map(b)});
    REQUIRE(s.object);
    CHECK(s.object->size() == 1);
  }
  auto point = flat(Poset::singleton());
  auto b = flat(chain2());
  SectionsObject proj = sections_object(SliceObject{product(point, b).proj_right});
  REQUIRE(proj.object);
  CHECK(proj.object->size() == 1);

  CHECK_FALSE(sections_object(SliceObject{antichain_onto_chain()}).object);
}

TEST_CASE("sections_object matches filtered exhaustive homs") {
  for (const char* name : {"u2", "trivial"})
    for (const auto& f : maps_of(name, 2)) {
      SectionsObject s = sections_object(SliceObject{f});
      auto sb = product(regular_s_poset(f.dom->over_ref()), f.cod);
      std::vector<std::vector<Elem>> naive;
      for (const auto& h : oracle::homs(*sb.product, *f.dom)) {
        bool over_b = true;
        for (Elem p = 0; p < sb.product->size(); ++p) over_b = over_b && f(h[p]) == sb.proj_right(p);
        if (!over_b) continue;
        std::vector<Elem> t(sb.product->size());
        for (Elem tt = 0; tt < f.dom->over().size(); ++tt)
          for (Elem bb = 0; bb < f.cod->size(); ++bb)
            t[tt * f.cod->size() + bb] = h[sb.pair(tt, bb)];
        naive.push_back(t);
      }
      std::sort(naive.begin(), naive.end());
      auto got = s.tables;
      std::sort(got.begin(), got.end());
      CHECK(got == naive);
      CHECK(static_cast<bool>(s.object) == !naive.empty());
      if (!s.object) continue;
      CHECK(validate_s_poset(s.object->over(), s.object->carrier(), s.object->act_table()).verdict);
      // Pointwise order and the shifted action.
      for (Elem i = 0; i < got.size(); ++i) {
        for (Elem j = 0; j < got.size(); ++j) {
          bool pointwise = true;
          for (std::size_t k = 0; k < got[i].size(); ++k)
            pointwise = pointwise && f.dom->carrier().leq(s.tables[i][k], s.tables[j][k]);
          CHECK(s.object->carrier().leq(i, j) == pointwise);
        }
        const auto& mon = s.object->over();
        for (Elem sv = 0; sv < mon.size(); ++sv)
          for (Elem tt = 0; tt < mon.size(); ++tt)
            for (Elem bb = 0; bb < f.cod->size(); ++bb)
              CHECK(s.tables[s.object->act(i, sv)][tt * f.cod->size() + bb] ==
                    s.tables[i][mon.mul(sv, tt) * f.cod->size() + bb]);
      }
    }
}

TEST_CASE("pairing_is_section and min_in_fibre") {
  auto x = flat(chain2());
  auto id = pairing_is_section(SliceObject{identity_map(x)});
  REQUIRE(id.verdict);
  const SPosetMap& r = *id.witness->map("retraction");
  CHECK(min_in_fibre(SliceObject{identity_map(x)}, r, 0, 0) == 0);
  CHECK_THROWS_AS(min_in_fibre(SliceObject{identity_map(x)}, r, 1, 0), PreconditionError);

  auto point = flat(Poset::singleton());
  CHECK(pairing_is_section(SliceObject{product(point, x).proj_right}).verdict);
  CHECK_FALSE(pairing_is_section(SliceObject{antichain_onto_chain()}).verdict);
}

TEST_CASE("a retraction of the pairing yields fibre minima everywhere") {
  std::size_t sections = 0;
  for (const char* name : {"u2", "trivial"})
    for (const auto& f : maps_of(name, 3)) {
      SliceObject so{f};
      auto rep = pairing_is_section(so);
      if (!rep.verdict) continue;
      ++sections;
      CHECK(is_fibration(f).verdict);
      const SPosetMap& r = *rep.witness->map("retraction");
      for (Elem x = 0; x < f.dom->size(); ++x)
        for (Elem b = 0; b < f.cod->size(); ++b)
          if (f.cod->carrier().leq(f(x), b)) CHECK_NOTHROW(min_in_fibre(so, r, x, b));
    }
  CHECK(sections > 0);
}

TEST_CASE("regular_injective_envelope examples") {
  auto point = flat(Poset::singleton());
  Envelope one = regular_injective_envelope(SliceObject{identity_map(point)});
  CHECK(one.envelope.f.dom->size() == 1);

  auto anti = flat(Poset::antichain(2));
  Envelope d = regular_injective_envelope(SliceObject{SPosetMap{anti, point, {0, 0}}});
  Completion c = macneille_completion(pref(Poset::antichain(2)));
  CHECK(are_isomorphic(d.envelope.f.dom->carrier(), *c.completion));

  auto s = regular_s_poset(u2());
  auto upoint = trivial_action(Poset::singleton(), u2());
  Envelope e = regular_injective_envelope(SliceObject{SPosetMap{s, upoint, {0, 0}}});
  CHECK(are_isomorphic(*e.completion.completion, chain2()));
  // Monotone maps U2 -> 2-chain.
  CHECK(e.cofree.tables.size() == 3);
  CHECK(is_s_poset_embedding(e.embedding));
  auto emb = all_embeddings(catalog_up_to(u2(), 3));
  CHECK(is_slice_injective(e.envelope.f, emb).verdict);
}

TEST_CASE("envelope embeddings commute over B on every catalog map") {
  // completion^(S) x B outgrows 64 elements at size 3 for two-element S.
  for (auto [name, n] : {std::pair{"trivial", 3}, {"u2", 2}, {"z2", 2}, {"u2-discrete", 2}})
    for (const auto& f : maps_of(name, n)) {
      Envelope env = regular_injective_envelope(SliceObject{f});
      CHECK(is_s_poset_embedding(env.embedding));
      CHECK(validate_s_poset_map(env.embedding).verdict);
      CHECK(compose(env.envelope.f, env.embedding).table == f.table);
    }
}

TEST_CASE("characterization_check examples") {
  Catalog cat = catalog_up_to(trivial(), 3);
  auto emb = all_embeddings(cat);
  auto x = flat(chain2());

  auto id = characterization_check(SliceObject{identity_map(x)}, emb);
  CHECK(id.slice_injective);
  CHECK(id.rhs());
  CHECK(id.outcome == CharacterizationOutcome::agree);

  auto bad = characterization_check(SliceObject{antichain_onto_chain()}, emb);
  CHECK_FALSE(bad.slice_injective);
  CHECK_FALSE(bad.rhs());

  auto point = flat(Poset::singleton());
  Envelope env = regular_injective_envelope(SliceObject{SPosetMap{flat(Poset::antichain(2)), point, {0, 0}}});
  auto e = characterization_check(env.envelope, emb);
  CHECK(e.slice_injective);
  CHECK(e.rhs());
}

TEST_CASE("emb_top_factorization") {
  Limits wide;
  wide.topological_max = 20;
  for (const auto& f : maps_of("trivial", 3)) {
    Factorization fac = emb_top_factorization(f);
    CHECK(compose(fac.right, fac.left).table == f.table);
    CHECK(is_s_poset_embedding(fac.left));
    CHECK(is_topological(fac.right, wide).verdict);
  }
  auto s = regular_s_poset(u2());
  CHECK_THROWS_AS(emb_top_factorization(identity_map(s)), PreconditionError);
}

TEST_CASE("G_B and H_B examples") {
  auto b = pref(chain2());
  MonotoneMap id{b, b, {0, 1}};
  SliceObject g = functor_G_B(id, u2());
  CHECK(g.f.table == id.table);
  for (Elem a = 0; a < 2; ++a) CHECK(g.f.dom->act(a, 1) == a);

  HBResult h = functor_H_B(g);
  CHECK(h.quotient.poset->size() == 2);
  CHECK(h.map.table == id.table);

  auto s = regular_s_poset(u2());
  auto point = trivial_action(Poset::singleton(), u2());
  HBResult collapse = functor_H_B(SliceObject{SPosetMap{s, point, {0, 0}}});
  CHECK(collapse.quotient.poset->size() == 1);
  for (Elem a = 0; a < s->size(); ++a) CHECK(collapse.map.table[collapse.quotient.eta(a)] == 0);

  CHECK_THROWS_AS(functor_H_B(SliceObject{identity_map(s)}), PreconditionError);
}

TEST_CASE("adjunction transposition is a bijection and matches exhaustive counts") {
  std::size_t instances = 0;
  Catalog cat = catalog_up_to(u2(), 2);
  for (const Poset& bp : enumerate_posets_up_to(2)) {
    auto bref = pref(bp);
    auto base = trivial_action(bp, u2());
    for (const auto& a : cat.objects)
      for (const auto& fmap : hom_s_poset(a, base)) {
        SliceObject f{fmap};
        HBResult hb = functor_H_B(f);
        for (const Poset& pp : enumerate_posets_up_to(2))
          for (const auto& l : monotone_maps(pref(pp), bref)) {
            AdjunctionCounts counts;
            CHECK(adjunction_check(f, l, &counts).verdict);
            SliceObject gl = functor_G_B(l, base);
            std::size_t s_side = 0;
            for (const auto& h : oracle::homs(*a, *gl.f.dom)) {
              bool over = true;
              for (Elem x = 0; x < a->size(); ++x) over = over && l.table[h[x]] == fmap(x);
              s_side += over;
            }
            std::size_t p_side = 0;
            const auto mq = oracle::matrix_of(*hb.quotient.poset);
            const auto mp = oracle::matrix_of(pp);
            oracle::for_each_function(hb.quotient.poset->size(), pp.size(), [&](const oracle::Table& k) {
              if (!oracle::monotone(mq, mp, k)) return;
              for (Elem c = 0; c < k.size(); ++c)
                if (l.table[k[c]] != hb.map.table[c]) return;
              ++p_side;
            });
            CHECK(counts.s_pos_side == s_side);
            CHECK(counts.pos_side == p_side);
            CHECK(s_side == p_side);
            ++instances;
          }
      }
  }
  CHECK(instances > 0);
}
