#include <doctest.h>

#include <fstream>

#include "oracles.hpp"
#include "poswfs/catalog.hpp"
#include "poswfs/json_io.hpp"
#include "poswfs/lifting.hpp"
#include "poswfs/morphism_classes.hpp"
#include "poswfs/order.hpp"
#include "poswfs/pomonoid.hpp"

using namespace poswfs;

namespace {

PomonoidRef u2() { return named_pomonoid("u2"); }

SPosetRef flat(Poset p, const PomonoidRef& s = named_pomonoid("trivial")) {
  return trivial_action(std::move(p), s);
}

Poset chain2() { return Poset({"0", "1"}, {0b11, 0b10}); }

LiftingSquare load_square(const std::string& file) {
  std::ifstream in(std::string(POSWFS_DATA_DIR) + "/examples/" + file);
  REQUIRE(in);
  return square_from_json(Json::parse(in));
}

void check_triangles(const LiftingSquare& sq, const SPosetMap& d) {
  CHECK(validate_s_poset_map(d).verdict);
  CHECK(compose(d, sq.l).table == sq.u.table);
  CHECK(compose(sq.r, d).table == sq.v.table);
}

}  // namespace

TEST_CASE("find_diagonal: identity square") {
  auto x = flat(chain2());
  auto id = identity_map(x);
  auto d = find_diagonal(make_square(id, id, id, id));
  REQUIRE(d.has_value());
  CHECK(d->table == id.table);
}

TEST_CASE("find_diagonal: absent when the diagonal would need a <= b") {
  auto chain = flat(chain2());
  auto anti = flat(Poset::antichain(2));
  auto top = flat(Poset::singleton("1"));
  SPosetMap l{top, chain, {1}};                // {1} into 0 < 1, not down-closed
  SPosetMap r{anti, chain, {0, 1}};            // a -> 0, b -> 1
  SPosetMap u{top, anti, {1}};                 // 1 -> b
  SPosetMap v = identity_map(chain);
  LiftingSquare sq = make_square(l, r, u, v);
  CHECK_FALSE(find_diagonal(sq).has_value());
  CHECK(count_diagonals(sq, 10) == 0);
  CHECK(oracle::count_diagonals(l, r, u.table, v.table) == 0);
}

TEST_CASE("make_square rejects non-commuting data") {
  auto chain = flat(chain2());
  auto id = identity_map(chain);
  SPosetMap flip{chain, chain, {1, 1}};
  CHECK_FALSE(commutes(LiftingSquare{id, id, id, flip}));
  CHECK_THROWS_AS(make_square(id, id, id, flip), StructuralError);
}

TEST_CASE("find_diagonal agrees with exhaustive search and satisfies both triangles") {
  Catalog cat = catalog_up_to(u2(), 2);
  auto maps = all_maps(cat);
  std::size_t squares = 0;
  for (const auto& l : maps)
    for (const auto& r : maps)
      for_each_square(l, r, {}, [&](const LiftingSquare& sq) {
        ++squares;
        auto d = find_diagonal(sq);
        const auto naive = oracle::count_diagonals(l, r, sq.u.table, sq.v.table);
        CHECK(d.has_value() == (naive > 0));
        CHECK(count_diagonals(sq, 1000) == naive);
        if (d) check_triangles(sq, *d);
        return true;
      });
  CHECK(squares > 0);
}

TEST_CASE("diagonalizes: identities on either side") {
  Catalog cat = catalog_up_to(u2(), 2);
  for (const auto& f : all_maps(cat)) {
    CHECK(diagonalizes(f, identity_map(f.cod)).verdict);
    CHECK(diagonalizes(identity_map(f.dom), f).verdict);
  }
}

TEST_CASE("diagonalizes agrees with the exhaustive lifting oracle") {
  for (const char* name : {"u2", "trivial"}) {
    Catalog cat = catalog_up_to(named_pomonoid(name), 2);
    auto maps = all_maps(cat);
    for (const auto& l : maps)
      for (const auto& r : maps) {
        auto rep = diagonalizes(l, r);
        CHECK(rep.verdict == oracle::lifts(l, r));
        if (rep.verdict) continue;
        LiftingSquare sq = make_square(l, r, *rep.witness->map("u"), *rep.witness->map("v"));
        CHECK_FALSE(find_diagonal(sq).has_value());
      }
  }
}

TEST_CASE("a down-closed embedding that does not lift against a split epi") {
  LiftingSquare sq = load_square("unliftable_square.json");
  REQUIRE(identity_is_bottom(sq.l.dom->over()));
  CHECK(is_down_closed_embedding(sq.l));
  CHECK(is_split_epi(sq.r).verdict);
  CHECK_FALSE(find_diagonal(sq).has_value());
  CHECK(oracle::count_diagonals(sq.l, sq.r, sq.u.table, sq.v.table) == 0);
  CHECK_FALSE(diagonalizes(sq.l, sq.r).verdict);
  // The constructive diagonal needs a summand decomposition that is absent.
  CHECK_THROWS_AS(cd_es_diagonal(sq), PreconditionError);
}

TEST_CASE("cd_es_factorization examples") {
  auto point = flat(Poset::singleton());
  Factorization one = cd_es_factorization(identity_map(point));
  CHECK(are_isomorphic(one.left.cod->carrier(), Poset::antichain(2)));
  CHECK(one.right.table == std::vector<Elem>{0, 0});

  auto s = regular_s_poset(u2());
  auto upoint = trivial_action(Poset::singleton(), u2());
  Factorization bang = cd_es_factorization(SPosetMap{s, upoint, {0, 0}});
  CHECK(bang.left.cod->size() == 3);
}

TEST_CASE("cd_es_factorization post-conditions over the catalogs") {
  for (const char* name : {"u2", "trivial", "u2-discrete"}) {
    Catalog cat = catalog_up_to(named_pomonoid(name), 3);
    for (const auto& f : all_maps(cat)) {
      Factorization fac = cd_es_factorization(f);
      CHECK(compose(fac.right, fac.left).table == f.table);
      CHECK(is_down_closed_embedding(fac.left));
      CHECK(is_split_epi(fac.right).verdict);
      CHECK(validate_s_poset_map(fac.left).verdict);
      CHECK(validate_s_poset_map(fac.right).verdict);
    }
  }
}

TEST_CASE("cd_es_diagonal examples") {
  auto x = flat(chain2());
  auto z = flat(Poset::antichain(2));
  Coproduct xz = disjoint_union(x, z);
  auto c = xz.sum;
  // r = id, so k is (u on X, v on Z) with u = v l.
  SPosetMap v{c, c, {1, 1, 2, 3}};
  SPosetMap u = compose(v, xz.in_left);
  LiftingSquare sq = make_square(xz.in_left, identity_map(c), u, v);
  SPosetMap k = cd_es_diagonal(sq);
  CHECK(k.table == v.table);

  // Factorization square: l = i, r = f, u = 1, v = fbar. The section of r
  // exists exactly when f splits.
  Catalog cat = catalog_up_to(u2(), 3);
  for (const auto& f : all_maps(cat)) {
    Factorization fac = cd_es_factorization(f);
    LiftingSquare fsq = make_square(fac.left, f, identity_map(f.dom), fac.right);
    if (is_split_epi(f).verdict)
      check_triangles(fsq, cd_es_diagonal(fsq));
    else
      CHECK_THROWS_AS(cd_es_diagonal(fsq), PreconditionError);
  }
}

TEST_CASE("cd_es_diagonal is a diagonal whenever the decomposition exists") {
  Catalog cat = catalog_up_to(u2(), 2);
  auto maps = all_maps(cat);
  std::size_t built = 0;
  for (const auto& l : maps) {
    if (!is_down_closed_embedding(l) || !direct_summand_decomposition(l)) continue;
    for (const auto& r : maps) {
      if (!is_split_epi(r).verdict) continue;
      for_each_square(l, r, {}, [&](const LiftingSquare& sq) {
        check_triangles(sq, cd_es_diagonal(sq));
        ++built;
        return true;
      });
    }
  }
  CHECK(built > 0);
  auto chain = flat(chain2());
  auto id = identity_map(chain);
  SPosetMap collapse{chain, chain, {0, 0}};
  // l not down-closed-embedding.
  CHECK_THROWS_AS(cd_es_diagonal(make_square(collapse, id, collapse, collapse)), PreconditionError);
}

TEST_CASE("non_split_witness_square: diagonal exactly when f splits") {
  auto chain = flat(chain2());
  auto anti = flat(Poset::antichain(2));
  CHECK(find_diagonal(non_split_witness_square(identity_map(chain))).has_value());
  CHECK_FALSE(find_diagonal(non_split_witness_square(SPosetMap{anti, chain, {0, 1}})).has_value());

  for (const char* name : {"u2", "trivial", "z2"}) {
    Catalog cat = catalog_up_to(named_pomonoid(name), 3);
    for (const auto& f : all_maps(cat)) {
      LiftingSquare sq = non_split_witness_square(f);
      CHECK(commutes(sq));
      CHECK(is_s_poset_embedding(sq.l));
      auto split = is_split_epi(f);
      auto d = find_diagonal(sq);
      CHECK(d.has_value() == split.verdict);
      if (split.verdict) {
        // (id on A, g on B) is a diagonal.
        const SPosetMap& g = *split.witness->map("section");
        std::vector<Elem> h(sq.l.cod->size());
        for (Elem a = 0; a < f.dom->size(); ++a) h[sq.l(a)] = a;
        for (Elem b = 0; b < f.cod->size(); ++b) h[f.dom->size() + b] = g(b);
        CHECK(is_diagonal(sq, SPosetMap{sq.l.cod, f.dom, h}));
      }
    }
  }
}

TEST_CASE("is_injective_object examples") {
  Catalog cat = catalog_up_to(named_pomonoid("trivial"), 3);
  auto emb = all_embeddings(cat);
  CHECK(is_injective_object(flat(Poset::singleton()), emb).verdict);
  auto anti = is_injective_object(flat(Poset::antichain(2)), emb);
  REQUIRE_FALSE(anti.verdict);
  CHECK(anti.witness->map("h") != nullptr);
  CHECK(anti.witness->map("u") != nullptr);
  CHECK(is_injective_object(flat(chain2()), emb).verdict);
}

TEST_CASE("injectivity against embeddings matches completeness for small posets") {
  Catalog cat = catalog_up_to(named_pomonoid("trivial"), 3);
  auto emb = all_embeddings(cat);
  for (const auto& x : cat.objects)
    CHECK(is_injective_object(x, emb).verdict == is_complete(x->carrier()).verdict);
}

TEST_CASE("is_slice_injective examples") {
  Catalog cat = catalog_up_to(u2(), 2);
  auto emb = all_embeddings(cat);
  for (const auto& b : cat.objects) {
    CHECK(is_slice_injective(identity_map(b), emb).verdict);
    auto point = trivial_action(Poset::singleton(), u2());
    Product pb = product(point, b);
    CHECK(is_slice_injective(pb.proj_right, emb).verdict);
  }
  auto chain = flat(chain2());
  auto anti = flat(Poset::antichain(2));
  SPosetMap f{anti, chain, {0, 1}};
  std::vector<SPosetMap> h{non_split_witness_square(f).l};
  CHECK_FALSE(is_slice_injective(f, h).verdict);
}

TEST_CASE("is_slice_injective is diagonalizes against every map in the class") {
  Catalog cat = catalog_up_to(u2(), 2);
  auto maps = all_maps(cat);
  auto emb = all_embeddings(cat);
  for (const auto& f : maps) {
    bool all = true;
    for (const auto& h : emb)
      all = all && diagonalizes(h, f).verdict;
    CHECK(is_slice_injective(f, emb).verdict == all);
  }
}

TEST_CASE("verify_wfs: surjections and embeddings with unique diagonals") {
  Catalog cat = catalog_up_to(named_pomonoid("trivial"), 3);
  WfsCheck check{[](const SPosetMap& f) { return is_surjective(f); },
                 [](const SPosetMap& f) { return is_s_poset_embedding(f); }, image_factorization,
                 true};
  WfsReport r = verify_wfs(check, cat.objects);
  CHECK(r.factorization_ok);
  CHECK(r.lifting_ok);
  CHECK(r.unique_diagonals_ok);
  CHECK(r.complete);
  CHECK(r.pairs_checked > 0);
}

TEST_CASE("verify_wfs lifting flag matches the exhaustive oracle") {
  Catalog cat = catalog_up_to(u2(), 2);
  WfsCheck check{[](const SPosetMap& f) { return is_down_closed_embedding(f); },
                 [](const SPosetMap& f) { return is_split_epi(f).verdict; }, cd_es_factorization};
  WfsReport r = verify_wfs(check, cat.objects);
  bool naive = true;
  for (const auto& l : all_maps(cat))
    for (const auto& rr : all_maps(cat))
      if (is_down_closed_embedding(l) && is_split_epi(rr).verdict)
        naive = naive && oracle::lifts(l, rr);
  CHECK(r.lifting_ok == naive);
  CHECK(r.factorization_ok);
  CHECK(r.complete);
}

TEST_CASE("verify_wfs flags exhausted budgets as incomplete") {
  Catalog cat = catalog_up_to(u2(), 3);
  Limits tight;
  tight.hom_nodes = 5;
  WfsCheck check{[](const SPosetMap& f) { return is_down_closed_embedding(f); },
                 [](const SPosetMap& f) { return is_split_epi(f).verdict; }, cd_es_factorization};
  WfsReport r = verify_wfs(check, cat.objects, tight);
  CHECK_FALSE(r.complete);
  CHECK_FALSE(r.verdict());
}
