#include "poswfs/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <set>
#include <thread>

#include "poswfs/catalog.hpp"
#include "poswfs/morphism_classes.hpp"
#include "poswfs/order.hpp"
#include "poswfs/pomonoid.hpp"
#include "poswfs/s_poset.hpp"
#include "poswfs/slice.hpp"

namespace poswfs {

namespace {

constexpr std::size_t kExamplesPerCheck = 8;

/// Results land at their own index, so the output order never depends on
/// scheduling. The lowest-index exception is rethrown.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, unsigned threads, F&& f) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned k = threads ? threads : std::max(1U, std::thread::hardware_concurrency());
  k = static_cast<unsigned>(std::min<std::size_t>(k, std::max<std::size_t>(n, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < k; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct Finding {
  std::string check;
  bool ok;
  Json example;
};

struct InstanceResult {
  std::vector<Finding> findings;
  std::map<std::string, std::size_t> counters;

  void add(std::string check, bool ok, Json example = nullptr) {
    findings.push_back({std::move(check), ok, ok ? Json(nullptr) : std::move(example)});
  }
  void count(const std::string& counter, std::size_t by = 1) { counters[counter] += by; }
};

struct Check {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<Json> examples;
};

Json maps_of(std::initializer_list<std::pair<const char*, const SPosetMap*>> maps) {
  Json out = Json::object();
  for (const auto& [label, m] : maps) out[label] = to_json(*m);
  return out;
}

Json catalog_json(const std::vector<SPosetRef>& objects) {
  Json out = Json::array();
  for (const auto& o : objects) out.push_back(to_json(*o));
  return out;
}

class Suite {
 public:
  Suite(std::string id, const SuiteParams& params)
      : id_(std::move(id)), params_(params), limits_(params.limits) {
    manifest_.command = "suite " + id_;
    if (params.pomonoid) manifest_.command += " --pomonoid " + *params.pomonoid;
    if (params.max_size) manifest_.command += " --max-size " + std::to_string(*params.max_size);
    manifest_.budgets = limits_;
  }

  const Limits& limits() const { return limits_; }
  std::size_t size(std::size_t fallback) const { return params_.max_size.value_or(fallback); }
  std::string pomonoid_name(const char* fallback) const {
    return params_.pomonoid.value_or(fallback);
  }
  PomonoidRef pomonoid(const char* fallback) const {
    return named_pomonoid(pomonoid_name(fallback));
  }

  void budget_exhausted() { manifest_.budget_exhausted = true; }
  void scale(const std::string& key, Json value) { scale_[key] = std::move(value); }
  void detail(const std::string& key, Json value) { details_[key] = std::move(value); }

  void digest(const std::string& label, const Json& input) {
    manifest_.input_digests[label] = fnv1a_digest(input.dump());
  }
  void digest(const std::string& label, const std::vector<SPosetRef>& objects) {
    digest(label, catalog_json(objects));
  }

  void absorb(InstanceResult&& r) {
    for (auto& f : r.findings) {
      Check& c = checks_[f.check];
      ++c.checked;
      if (f.ok) continue;
      ++c.failures;
      if (c.examples.size() < kExamplesPerCheck) c.examples.push_back(std::move(f.example));
    }
    for (const auto& [k, v] : r.counters) counters_[k] += v;
  }

  template <class F>
  void run(std::size_t n, F&& f) {
    for (auto& r : parallel_map<InstanceResult>(n, params_.threads, std::forward<F>(f)))
      absorb(std::move(r));
  }

  SuiteRun finish() {
    bool pass = !checks_.empty();
    Json checks = Json::object();
    Json summary = Json::object();
    for (const auto& [name, c] : checks_) {
      pass = pass && c.failures == 0;
      checks[name] = Json{{"checked", c.checked},
                          {"failures", c.failures},
                          {"verdict", c.failures == 0 ? "PASS" : "FAIL"},
                          {"examples", c.examples}};
      summary[name] = Json{{"checked", c.checked}, {"failures", c.failures}};
    }
    manifest_.verdict = pass ? "PASS" : "FAIL";
    manifest_.summary = Json{{"checks", summary}, {"counters", counters_}};
    Json report{{"suite", id_},
                {"verdict", manifest_.verdict},
                {"scale", scale_},
                {"checks", std::move(checks)},
                {"counters", counters_},
                {"details", details_},
                {"manifest", to_json(manifest_)}};
    return SuiteRun{std::move(manifest_), std::move(report)};
  }

 private:
  std::string id_;
  const SuiteParams& params_;
  Limits limits_;
  RunManifest manifest_;
  std::map<std::string, Check> checks_;
  std::map<std::string, std::size_t> counters_;
  Json scale_ = Json::object();
  Json details_ = Json::object();
};

Poset diamond() {
  // 0 < a, b < 1
  return Poset({"0", "a", "b", "1"}, {0b1111, 0b1010, 0b1100, 0b1000});
}

template <class Pred>
std::vector<SPosetMap> filtered(const std::vector<SPosetMap>& maps, Pred&& pred) {
  std::vector<SPosetMap> out;
  for (const auto& m : maps)
    if (pred(m)) out.push_back(m);
  return out;
}

// ---------------------------------------------------------------------------

void macneille_suite(Suite& s) {
  const auto n = s.size(5);
  const auto posets = enumerate_posets_up_to(n, s.limits());
  Json inputs = Json::array();
  for (const auto& p : posets) inputs.push_back(to_json(p));
  s.digest("posets<=" + std::to_string(n), inputs);
  s.scale("posets", posets.size());
  s.scale("max_size", n);

  s.run(posets.size(), [&](std::size_t i) {
    InstanceResult r;
    const Poset& p = posets[i];
    const Json ex{{"poset", to_json(p)}};
    Completion c = macneille_completion(std::make_shared<const Poset>(p));
    const bool by_subsets = is_complete_by_subsets(*c.completion).verdict;
    const bool by_lattice = is_complete_by_lattice(*c.completion).verdict;
    r.add("completion-complete", by_subsets && by_lattice, ex);
    r.add("completeness-routes-agree",
          is_complete_by_subsets(p).verdict == is_complete_by_lattice(p).verdict, ex);
    r.add("down-embedding", is_order_embedding(c.embedding), ex);
    if (is_complete(p, s.limits())) {
      r.count("complete-inputs");
      r.add("complete-fixed-point", are_isomorphic(*c.completion, p, s.limits()), ex);
    }
    return r;
  });

  InstanceResult named;
  auto two = std::make_shared<const Poset>(Poset::antichain(2));
  Completion c2 = macneille_completion(two);
  named.add("antichain2-diamond", are_isomorphic(*c2.completion, diamond(), s.limits()),
            Json{{"completion", to_json(*c2.completion)}});
  for (std::size_t k = 1; k <= n; ++k) {
    auto chain = std::make_shared<const Poset>(Poset::chain(k));
    Completion ck = macneille_completion(chain);
    named.add("chain-fixed-point", are_isomorphic(*ck.completion, *chain, s.limits()),
              Json{{"chain", k}, {"completion", to_json(*ck.completion)}});
  }
  s.absorb(std::move(named));
}

void lemma_downclosed_suite(Suite& s) {
  std::vector<std::string> names{"trivial", "u2", "chain3"};
  if (auto p = s.pomonoid_name(""); !p.empty()) names = {p};
  const auto n = s.size(3);
  s.scale("pomonoids", names);
  s.scale("max_size", n);
  for (const auto& name : names) {
    PomonoidRef pom = named_pomonoid(name);
    InstanceResult bottom;
    bottom.add("identity-bottom", identity_is_bottom(*pom), Json{{"pomonoid", name}});
    s.absorb(std::move(bottom));

    Catalog cat = catalog_up_to(pom, n, {}, s.limits());
    s.digest("catalog:" + name + "<=" + std::to_string(n), cat.objects);
    const auto embeddings = all_embeddings(cat, s.limits());
    s.run(embeddings.size(), [&](std::size_t i) {
      InstanceResult r;
      const SPosetMap& e = embeddings[i];
      r.count("embeddings:" + name);
      if (!is_down_closed_embedding(e)) return r;
      r.count("down-closed:" + name);
      const Json ex{{"pomonoid", name}, {"map", to_json(e)}};
      r.add("direct-summand", direct_summand_decomposition(e).has_value(), ex);
      r.add("unitary", is_unitary_mono(e), ex);
      return r;
    });
  }
}

void wfs_cd_es_suite(Suite& s) {
  PomonoidRef pom = s.pomonoid("u2");
  const auto n = s.size(3);
  Catalog cat = catalog_up_to(pom, n, {}, s.limits());
  s.digest("catalog:" + pom->name() + "<=" + std::to_string(n), cat.objects);
  s.scale("pomonoid", pom->name());
  s.scale("max_size", n);
  s.scale("label", "verified at scale n=" + std::to_string(n));

  WfsCheck check{named_class("cd", s.limits()), named_class("es", s.limits()),
                 named_factorizer("cd-es")};
  WfsReport wr = verify_wfs(check, cat.objects, s.limits());
  s.detail("wfs", to_json(wr));
  InstanceResult conditions;
  auto first_of = [&](const std::string& condition) {
    for (const auto& c : wr.counterexamples)
      if (c.condition == condition) {
        Json maps = Json::object();
        for (const auto& [label, m] : c.maps) maps[label] = to_json(m);
        return maps;
      }
    return Json(nullptr);
  };
  conditions.add("wfs-factorization", wr.factorization_ok, first_of("factorization"));
  conditions.add("wfs-lifting", wr.lifting_ok, first_of("lifting"));
  conditions.add("wfs-left-retract-closed", wr.left_retract_closed, first_of("left-retract"));
  conditions.add("wfs-right-retract-closed", wr.right_retract_closed, first_of("right-retract"));
  conditions.add("wfs-complete", wr.complete);
  if (!wr.complete) s.budget_exhausted();
  s.absorb(std::move(conditions));

  const auto maps = all_maps(cat, s.limits());
  const auto left = filtered(maps, [](const SPosetMap& m) { return is_down_closed_embedding(m); });
  std::vector<SPosetMap> right, sections;
  for (const auto& m : maps) {
    auto split = is_split_epi(m, s.limits());
    if (!split) continue;
    right.push_back(m);
    sections.push_back(*split.witness->map("section"));
  }
  s.scale("left_maps", left.size());
  s.scale("right_maps", right.size());

  s.run(left.size(), [&](std::size_t i) {
    InstanceResult r;
    const SPosetMap& l = left[i];
    for (std::size_t k = 0; k < right.size(); ++k) {
      const SPosetMap& rm = right[k];
      r.count("pairs");
      auto lifts = diagonalizes(l, rm, s.limits());
      Json pair_ex = nullptr;
      if (!lifts) {
        pair_ex = maps_of({{"l", &l}, {"r", &rm}});
        pair_ex["u"] = to_json(*lifts.witness->map("u"));
        pair_ex["v"] = to_json(*lifts.witness->map("v"));
      }
      r.add("pair-diagonalizes", lifts.verdict, std::move(pair_ex));
      for_each_square(l, rm, s.limits(), [&](const LiftingSquare& sq) {
        r.count("squares");
        bool ok = false;
        std::string reason;
        try {
          ok = is_diagonal(sq, cd_es_diagonal(sq, sections[k], s.limits()));
          if (!ok) reason = "triangle";
        } catch (const PreconditionError& e) {
          reason = e.what();
        } catch (const InternalInconsistency& e) {
          reason = e.what();
        }
        Json ex = nullptr;
        if (!ok) {
          ex = maps_of({{"l", &sq.l}, {"r", &sq.r}, {"u", &sq.u}, {"v", &sq.v}});
          ex["reason"] = reason;
        }
        r.add("constructive-diagonal", ok, std::move(ex));
        return true;
      });
    }
    return r;
  });
}

void emb_box_split_suite(Suite& s) {
  PomonoidRef pom = s.pomonoid("u2");
  const auto n = s.size(3);
  Catalog cat = catalog_up_to(pom, n, {}, s.limits());
  s.digest("catalog:" + pom->name() + "<=" + std::to_string(n), cat.objects);
  s.scale("pomonoid", pom->name());
  s.scale("max_size", n);
  const auto maps = all_maps(cat, s.limits());
  s.run(maps.size(), [&](std::size_t i) {
    InstanceResult r;
    const SPosetMap& f = maps[i];
    const bool lifts = find_diagonal(non_split_witness_square(f), s.limits()).has_value();
    const bool split = is_split_epi(f, s.limits()).verdict;
    r.count("maps");
    if (split) r.count("split-epi");
    r.add("diagonal-iff-split", lifts == split,
          Json{{"f", to_json(f)}, {"diagonal", lifts}, {"split", split}});
    return r;
  });
}

void fibrewise_equivalence_suite(Suite& s) {
  PomonoidRef pom = s.pomonoid("trivial");
  const auto n = s.size(3);
  Catalog cat = catalog_up_to(pom, n, {}, s.limits());
  s.digest("catalog:" + pom->name() + "<=" + std::to_string(n), cat.objects);
  s.scale("pomonoid", pom->name());
  s.scale("max_size", n);
  const auto maps = all_maps(cat, s.limits());
  const auto h = all_embeddings(cat, s.limits());
  s.scale("embeddings", h.size());
  s.run(maps.size(), [&](std::size_t i) {
    InstanceResult r;
    const SPosetMap& f = maps[i];
    const auto inj = is_slice_injective(f, h, s.limits());
    const auto fw = fibrewise_report(f, s.limits());
    const bool top = fw.topological.verdict;
    r.count("maps");
    if (inj) r.count("slice-injective");
    if (fw.fibrewise_ok()) r.count("fibrewise");
    if (top) r.count("topological");
    Json ex{{"f", to_json(f)},
            {"slice_injective", to_json(inj)},
            {"fibrewise", fw.fibrewise_ok()},
            {"topological", top}};
    r.add("three-way-agreement", inj.verdict == fw.fibrewise_ok() && top == fw.fibrewise_ok(), ex);
    return r;
  });
}

/// Maps A -> B with A from the full catalog and B trivially acted.
std::vector<SPosetMap> slice_family(Suite& s, const PomonoidRef& pom, std::size_t n) {
  Catalog a = catalog_up_to(pom, n, {}, s.limits());
  Catalog b = catalog_up_to(pom, n, {true}, s.limits());
  s.digest("catalog:" + pom->name() + "<=" + std::to_string(n), a.objects);
  s.digest("catalog:" + pom->name() + "-trivial<=" + std::to_string(n), b.objects);
  std::vector<SPosetMap> out;
  for (const auto& x : a.objects)
    for (const auto& y : b.objects)
      for (auto& f : hom_s_poset(x, y, s.limits())) out.push_back(std::move(f));
  return out;
}

std::vector<SPosetMap> embedding_class(Suite& s, const PomonoidRef& pom, std::size_t n) {
  Catalog c = catalog_up_to(pom, n, {}, s.limits());
  s.digest("embeddings:" + pom->name() + "<=" + std::to_string(n), c.objects);
  return all_embeddings(c, s.limits());
}

void envelope_injective_suite(Suite& s) {
  PomonoidRef pom = s.pomonoid("u2");
  const auto n = s.size(2);
  const auto family = slice_family(s, pom, n);
  const auto h = embedding_class(s, pom, 3);
  s.scale("pomonoid", pom->name());
  s.scale("max_size", n);
  s.scale("slices", family.size());
  s.scale("embeddings", h.size());
  s.run(family.size(), [&](std::size_t i) {
    InstanceResult r;
    const SPosetMap& f = family[i];
    Envelope env = regular_injective_envelope(SliceObject{f}, s.limits());
    const Json ex{{"f", to_json(f)}};
    r.add("embedding-valid",
          validate_s_poset_map(env.embedding).verdict && is_s_poset_embedding(env.embedding), ex);
    r.add("triangle", compose(env.envelope.f, env.embedding).table == f.table, ex);
    auto inj = is_slice_injective(env.envelope.f, h, s.limits());
    Json inj_ex = ex;
    inj_ex["report"] = to_json(inj);
    r.add("envelope-injective", inj.verdict, std::move(inj_ex));
    r.count("envelope-elements", env.envelope.total()->size());
    return r;
  });
}

void characterization_suite(Suite& s) {
  PomonoidRef pom = s.pomonoid("u2");
  const auto n = s.size(2);
  const auto family = slice_family(s, pom, n);
  const auto h = embedding_class(s, pom, 3);
  s.scale("pomonoid", pom->name());
  s.scale("max_size", n);
  s.scale("slices", family.size());
  s.scale("embeddings", h.size());
  s.run(family.size(), [&](std::size_t i) {
    InstanceResult r;
    const SPosetMap& f = family[i];
    auto c = characterization_check(SliceObject{f}, h, s.limits());
    switch (c.outcome) {
      case CharacterizationOutcome::agree: r.count("agree"); break;
      case CharacterizationOutcome::disagree: r.count("disagree"); break;
      case CharacterizationOutcome::sections_empty: r.count("sections-empty"); break;
    }
    if (c.slice_injective) r.count("slice-injective");
    r.add("no-hard-disagreement", c.outcome != CharacterizationOutcome::disagree,
          Json{{"f", to_json(f)},
               {"slice_injective", to_json(c.lhs_report)},
               {"pairing_section", c.pairing_section},
               {"sections_injective", c.sections_injective}});
    return r;
  });
}

void adjunction_suite(Suite& s) {
  PomonoidRef pom = s.pomonoid("u2");
  const auto n = s.size(2);
  Catalog cat = catalog_up_to(pom, n, {}, s.limits());
  Catalog theta_cat = catalog_up_to(pom, std::max<std::size_t>(n, 3), {}, s.limits());
  const auto posets = enumerate_posets_up_to(n, s.limits());
  s.digest("catalog:" + pom->name() + "<=" + std::to_string(n), cat.objects);
  s.scale("pomonoid", pom->name());
  s.scale("max_size", n);
  auto point = std::make_shared<const Poset>(Poset::singleton());
  SPosetRef base = trivial_action(*point, pom);

  struct Job {
    SPosetRef a;
    std::size_t p;
  };
  std::vector<Job> jobs;
  for (const auto& a : cat.objects)
    for (std::size_t p = 0; p < posets.size(); ++p) jobs.push_back({a, p});
  s.run(jobs.size(), [&](std::size_t i) {
    InstanceResult r;
    const Job& job = jobs[i];
    auto pp = std::make_shared<const Poset>(posets[job.p]);
    MonotoneMap l{pp, point, std::vector<Elem>(pp->size(), 0)};
    SPosetMap f{job.a, base, std::vector<Elem>(job.a->size(), 0)};
    AdjunctionCounts counts;
    auto bij = adjunction_check(SliceObject{f}, l, &counts, s.limits());
    r.count("pairs");
    r.count("hom-pos", counts.pos_side);
    r.count("hom-s-pos", counts.s_pos_side);
    r.add("transpose-bijection", bij.verdict,
          Json{{"f", to_json(f)}, {"l", to_json(l)}, {"report", to_json(bij)}});
    return r;
  });

  InstanceResult round_trip;
  for (const auto& p : posets) {
    auto pp = std::make_shared<const Poset>(p);
    MonotoneMap l{pp, point, std::vector<Elem>(pp->size(), 0)};
    HBResult hb = functor_H_B(functor_G_B(l, base));
    auto iso = find_isomorphism(*hb.quotient.poset, p, s.limits());
    bool ok = iso.has_value();
    for (Elem c = 0; ok && c < hb.map.table.size(); ++c) ok = hb.map(c) == l((*iso)[c]);
    round_trip.add("H-after-G-is-identity", ok, Json{{"l", to_json(l)}});
  }
  s.absorb(std::move(round_trip));

  struct ThetaJob {
    SPosetRef a;
    std::size_t p;
  };
  std::vector<ThetaJob> theta_jobs;
  for (const auto& a : theta_cat.objects)
    for (std::size_t p = 0; p < posets.size(); ++p) theta_jobs.push_back({a, p});
  s.run(theta_jobs.size(), [&](std::size_t i) {
    InstanceResult r;
    const ThetaJob& job = theta_jobs[i];
    Quotient q = quotient_theta(job.a);
    auto pp = std::make_shared<const Poset>(posets[job.p]);
    SPosetRef target = trivial_action(*pp, pom);
    const auto s_maps = hom_s_poset(job.a, target, s.limits());
    const auto factors = monotone_maps(q.poset, pp, s.limits());
    std::set<std::vector<Elem>> factor_tables;
    for (const auto& k : factors) factor_tables.insert(k.table);
    bool ok = s_maps.size() == factors.size() && is_monotone(q.eta).verdict;
    for (Elem a = 0; ok && a < job.a->size(); ++a)
      for (Elem x = 0; ok && x < pom->size(); ++x) ok = q.eta(job.a->act(a, x)) == q.eta(a);
    for (const auto& g : s_maps) {
      if (!ok) break;
      std::vector<Elem> k(q.classes.size());
      for (Elem c = 0; c < k.size(); ++c) k[c] = g(lowest(q.classes[c]));
      for (Elem a = 0; ok && a < job.a->size(); ++a) ok = k[q.eta(a)] == g(a);
      ok = ok && factor_tables.count(k) == 1;
    }
    r.add("theta-universal", ok,
          Json{{"a", to_json(*job.a)}, {"p", to_json(*pp)}, {"s_maps", s_maps.size()},
               {"factors", factors.size()}});
    return r;
  });
}

void pogroup_topological_suite(Suite& s) {
  PomonoidRef pom = s.pomonoid("z2");
  const auto n = s.size(3);
  Catalog cat = catalog_up_to(pom, n, {true}, s.limits());
  s.digest("catalog:" + pom->name() + "-trivial<=" + std::to_string(n), cat.objects);
  const auto h = embedding_class(s, pom, n);
  s.scale("pomonoid", pom->name());
  s.scale("max_size", n);
  s.scale("embeddings", h.size());
  InstanceResult group;
  group.add("pogroup", is_pogroup(*pom), Json{{"pomonoid", pom->name()}});
  s.absorb(std::move(group));

  // The factorization's middle object is completion(X) x B, larger than X.
  Limits wide = s.limits();
  wide.topological_max = std::max<std::size_t>(wide.topological_max, 20);
  const auto maps = all_maps(cat, s.limits());
  s.run(maps.size(), [&](std::size_t i) {
    InstanceResult r;
    const SPosetMap& f = maps[i];
    r.count("maps");
    const Json ex{{"f", to_json(f)}};
    if (is_topological(f, s.limits())) {
      r.count("topological");
      auto inj = is_slice_injective(f, h, s.limits());
      Json inj_ex = ex;
      inj_ex["report"] = to_json(inj);
      r.add("topological-implies-injective", inj.verdict, std::move(inj_ex));
    }
    Factorization fac = emb_top_factorization(f);
    const bool ok = is_s_poset_embedding(fac.left) && is_topological(fac.right, wide).verdict &&
                    compose(fac.right, fac.left).table == f.table;
    r.add("emb-top-factorization", ok, ex);
    return r;
  });
}

void cartesian_closed_suite(Suite& s) {
  const auto n = s.size(2);
  struct Triple {
    SPosetRef a, b, c;
  };
  std::vector<Triple> triples;
  for (const char* name : {"trivial", "u2"}) {
    Catalog cat = catalog_up_to(named_pomonoid(name), n, {}, s.limits());
    s.digest(std::string("catalog:") + name + "<=" + std::to_string(n), cat.objects);
    for (const auto& a : cat.objects)
      for (const auto& b : cat.objects)
        for (const auto& c : cat.objects) triples.push_back({a, b, c});
  }
  s.scale("max_size", n);
  s.scale("triples", triples.size());
  s.run(triples.size(), [&](std::size_t i) {
    InstanceResult r;
    const Triple& t = triples[i];
    const Pomonoid& pom = t.a->over();
    Product ab = product(t.a, t.b);
    Exponential cb = exponential(t.b, t.c, s.limits());
    const auto uncurried = hom_s_poset(ab.product, t.c, s.limits());
    const auto curried = hom_s_poset(t.a, cb.object, s.limits());
    r.count("triples");
    r.count("homs", uncurried.size());

    bool ok = uncurried.size() == curried.size();
    std::set<std::vector<Elem>> images;
    for (const auto& g : uncurried) {
      if (!ok) break;
      std::vector<Elem> k(t.a->size());
      for (Elem a = 0; ok && a < t.a->size(); ++a) {
        std::vector<Elem> tbl(cb.domain.product->size());
        for (Elem x = 0; x < pom.size(); ++x)
          for (Elem b = 0; b < t.b->size(); ++b)
            tbl[cb.domain.pair(x, b)] = g(ab.pair(t.a->act(a, x), b));
        auto idx = cb.index_of(tbl);
        ok = idx.has_value();
        if (ok) k[a] = *idx;
      }
      if (!ok) break;
      SPosetMap km{t.a, cb.object, k};
      ok = validate_s_poset_map(km).verdict && images.insert(k).second;
      // uncurry(curry g) = g
      for (Elem a = 0; ok && a < t.a->size(); ++a)
        for (Elem b = 0; ok && b < t.b->size(); ++b)
          ok = cb.tables[k[a]][cb.domain.pair(pom.identity(), b)] == g(ab.pair(a, b));
    }
    for (const auto& k : curried) {
      if (!ok) break;
      std::vector<Elem> g(ab.product->size());
      for (Elem a = 0; a < t.a->size(); ++a)
        for (Elem b = 0; b < t.b->size(); ++b)
          g[ab.pair(a, b)] = cb.tables[k(a)][cb.domain.pair(pom.identity(), b)];
      ok = validate_s_poset_map(SPosetMap{ab.product, t.c, g}).verdict && images.count(k.table);
    }
    r.add("currying-bijection", ok,
          Json{{"a", to_json(*t.a)}, {"b", to_json(*t.b)}, {"c", to_json(*t.c)},
               {"hom_product", uncurried.size()}, {"hom_exponential", curried.size()}});
    return r;
  });
}

using SuiteFn = void (*)(Suite&);

const std::map<std::string, SuiteFn, std::less<>>& suite_table() {
  static const std::map<std::string, SuiteFn, std::less<>> table{
      {"adjunction", adjunction_suite},
      {"cartesian-closed", cartesian_closed_suite},
      {"characterization", characterization_suite},
      {"emb-box-split", emb_box_split_suite},
      {"envelope-injective", envelope_injective_suite},
      {"fibrewise-equivalence", fibrewise_equivalence_suite},
      {"lemma-downclosed", lemma_downclosed_suite},
      {"macneille", macneille_suite},
      {"pogroup-topological", pogroup_topological_suite},
      {"wfs-cd-es", wfs_cd_es_suite},
  };
  return table;
}

}  // namespace

ClassPredicate named_class(std::string_view name, const Limits& limits) {
  if (name == "emb") return [](const SPosetMap& f) { return is_s_poset_embedding(f); };
  if (name == "cd") return [](const SPosetMap& f) { return is_down_closed_embedding(f); };
  if (name == "es")
    return [limits](const SPosetMap& f) { return is_split_epi(f, limits).verdict; };
  if (name == "split-mono")
    return [limits](const SPosetMap& f) { return is_split_mono(f, limits).verdict; };
  if (name == "unitary")
    return [](const SPosetMap& f) { return is_injective(f) && is_unitary_mono(f); };
  if (name == "surj") return [](const SPosetMap& f) { return is_surjective(f); };
  if (name == "top")
    return [limits](const SPosetMap& f) { return is_topological(f, limits).verdict; };
  throw StructuralError("unknown morphism class '" + std::string(name) + "'");
}

std::vector<std::string> class_names() {
  return {"cd", "emb", "es", "split-mono", "surj", "top", "unitary"};
}

Factorizer named_factorizer(std::string_view name) {
  if (name == "cd-es") return cd_es_factorization;
  if (name == "surj-emb") return image_factorization;
  if (name == "emb-top") return emb_top_factorization;
  throw StructuralError("unknown factorization system '" + std::string(name) + "'");
}

std::vector<std::string> factorizer_names() { return {"cd-es", "emb-top", "surj-emb"}; }

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : suite_table()) out.push_back(id);
    return out;
  }();
  return ids;
}

SuiteRun run_suite(std::string_view id, const SuiteParams& params) {
  auto it = suite_table().find(id);
  if (it == suite_table().end()) throw StructuralError("unknown suite '" + std::string(id) + "'");
  Suite suite(std::string(id), params);
  it->second(suite);
  return suite.finish();
}

Json to_json(const RunManifest& m) {
  return Json{{"command", m.command},
              {"input_digests", m.input_digests},
              {"budgets",
               Json{{"hom_nodes", m.budgets.hom_nodes},
                    {"max_perm_size", m.budgets.max_perm_size},
                    {"complete_subset_cutoff", m.budgets.complete_subset_cutoff},
                    {"topological_max", m.budgets.topological_max}}},
              {"deterministic", m.deterministic},
              {"budget_exhausted", m.budget_exhausted},
              {"verdict", m.verdict},
              {"summary", m.summary}};
}

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace poswfs
