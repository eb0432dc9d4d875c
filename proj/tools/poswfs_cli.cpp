// poswfs: command-line front end. Every command prints one JSON document
// (to stdout, or to --out) and exits 0 on PASS, 1 on FAIL, 2 on malformed
// input or unmet preconditions, 3 when a search budget is exhausted and 4 on
// an internal inconsistency.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "poswfs/catalog.hpp"
#include "poswfs/json_io.hpp"
#include "poswfs/morphism_classes.hpp"
#include "poswfs/order.hpp"
#include "poswfs/pomonoid.hpp"
#include "poswfs/s_poset.hpp"
#include "poswfs/slice.hpp"
#include "poswfs/suites.hpp"

using namespace poswfs;

namespace {

enum Exit : int { kPass = 0, kFail = 1, kStructural = 2, kBudget = 3, kInternal = 4 };

struct Global {
  std::optional<std::uint64_t> hom_budget;
  std::string registry;
  std::string out;

  Limits limits() const {
    Limits l = Limits::from_env();
    if (hom_budget) l.hom_nodes = *hom_budget;
    return l;
  }
};

Json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot read '" + path + "'");
    buf << in.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw StructuralError("'" + path + "' is not valid JSON: " + e.what());
  }
}

PomonoidResolver resolver(const Global& g) {
  if (g.registry.empty()) return {};
  auto table = std::make_shared<std::map<std::string, PomonoidRef, std::less<>>>(
      load_registry(read_json(g.registry)));
  return [table](std::string_view name) -> PomonoidRef {
    auto it = table->find(name);
    return it == table->end() ? nullptr : it->second;
  };
}

PomonoidRef pomonoid_arg(const Global& g, const std::string& name) {
  if (auto r = resolver(g))
    if (auto s = r(name)) return s;
  return named_pomonoid(name);
}

int emit(const Global& g, const Json& j, bool pass) {
  const std::string text = dump(j);
  if (g.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(g.out, std::ios::binary);
    if (!out) throw StructuralError("cannot write '" + g.out + "'");
    out << text;
  }
  return pass ? kPass : kFail;
}

Json maybe(const std::optional<SPosetMap>& m) { return m ? to_json(*m) : Json(nullptr); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite S-poset toolkit: lifting, factorization systems and slice injectivity"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--hom-budget", g.hom_budget,
                 "Hom-search node budget (default 10^7, or POSWFS_BUDGET)");
  app.add_option("--registry", g.registry, "Pomonoid registry JSON resolving \"over\" names");
  app.add_option("-o,--out", g.out, "Write the JSON result here instead of stdout");

  std::string file, file2, kind, method = "auto", system, klass, left, right, pomonoid = "u2";
  std::string what = "posets", suite_id;
  std::size_t size = 3;
  std::optional<std::size_t> max_size;
  unsigned threads = 0;
  bool up_to = false, trivial_only = false, unique = false;

  auto* validate = app.add_subcommand("validate", "Check the axioms of a poset, pomonoid, S-poset, map or square");
  validate->add_option("file", file, "JSON file ('-' for stdin)")->required();

  auto* complete = app.add_subcommand("complete", "Completeness check and MacNeille completion of a poset");
  complete->add_option("file", file)->required();
  complete->add_option("--method", method)->check(CLI::IsMember({"auto", "subsets", "lattice"}));

  auto* factor = app.add_subcommand("factor", "Factor a map through a named system");
  factor->add_option("--map", file)->required();
  factor->add_option("--system", system)->required()->check(CLI::IsMember(factorizer_names()));

  auto* lift = app.add_subcommand("lift", "Search a diagonal for a commutative square");
  lift->add_option("--square", file)->required();

  auto* check_class = app.add_subcommand("check-class", "Membership of a map in a named class");
  check_class->add_option("--class", klass)->required()->check(CLI::IsMember(class_names()));
  check_class->add_option("--map", file)->required();

  auto* fibrewise = app.add_subcommand("fibrewise", "Fibre completeness, (co)fibration and topological checks");
  fibrewise->add_option("--map", file)->required();

  auto* envelope = app.add_subcommand("envelope", "Regular-injective envelope of a slice object");
  envelope->add_option("--slice", file)->required();

  auto* adjoint = app.add_subcommand("adjoint-check", "Transpose bijection for G_B -| H_B");
  adjoint->add_option("--slice", file)->required();
  adjoint->add_option("--monotone", file2)->required();

  auto* wfs = app.add_subcommand("wfs-verify", "Finite-scale weak factorization system check");
  wfs->add_option("--left", left)->required()->check(CLI::IsMember(class_names()));
  wfs->add_option("--right", right)->required()->check(CLI::IsMember(class_names()));
  wfs->add_option("--factorization", system, "Factorization (default: cd-es)");
  wfs->add_option("--pomonoid", pomonoid);
  wfs->add_option("--max-size", size);
  wfs->add_flag("--unique", unique, "Also require unique diagonals");

  auto* enumerate = app.add_subcommand("enumerate", "List catalogs up to isomorphism");
  enumerate->add_option("--what", what)->check(CLI::IsMember({"posets", "s-posets", "pomonoids"}));
  enumerate->add_option("--pomonoid", pomonoid);
  enumerate->add_option("--size", size);
  enumerate->add_flag("--up-to", up_to, "All sizes from 1 to --size");
  enumerate->add_flag("--trivial-only", trivial_only, "Only trivial actions");

  auto* suite = app.add_subcommand("suite", "Run a named verification suite");
  suite->add_option("id", suite_id)->required()->check(CLI::IsMember(suite_ids()));
  suite->add_option("--pomonoid", pomonoid);
  suite->add_option("--max-size", max_size);
  suite->add_option("--threads", threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kStructural;
  }

  try {
    const Limits limits = g.limits();
    const auto resolve = resolver(g);

    if (*validate) {
      auto r = validate_json(read_json(file), resolve);
      return emit(g, to_json(r), r.verdict);
    }
    if (*complete) {
      Poset p = poset_from_json(read_json(file));
      ClassReport r = method == "subsets"   ? is_complete_by_subsets(p)
                      : method == "lattice" ? is_complete_by_lattice(p)
                                            : is_complete(p, limits);
      Completion c = macneille_completion(std::make_shared<const Poset>(p));
      Json emb = Json::object();
      for (Elem a = 0; a < p.size(); ++a) emb[p.name(a)] = c.completion->name(c.embedding(a));
      return emit(g, Json{{"complete", to_json(r)},
                          {"completion", to_json(*c.completion)},
                          {"embedding", emb}},
                  r.verdict);
    }
    if (*factor) {
      SPosetMap f = s_poset_map_from_json(read_json(file), resolve);
      Factorization fac = named_factorizer(system)(f);
      const bool composite = compose(fac.right, fac.left).table == f.table;
      return emit(g, Json{{"left", to_json(fac.left)}, {"right", to_json(fac.right)},
                          {"composite_ok", composite}},
                  composite);
    }
    if (*lift) {
      LiftingSquare sq = square_from_json(read_json(file), resolve);
      auto d = find_diagonal(sq, limits);
      return emit(g, Json{{"diagonal", maybe(d)},
                          {"diagonals", count_diagonals(sq, 1000, limits)},
                          {"verdict", d ? "PASS" : "FAIL"}},
                  d.has_value());
    }
    if (*check_class) {
      SPosetMap f = s_poset_map_from_json(read_json(file), resolve);
      ClassReport r;
      if (klass == "es")
        r = is_split_epi(f, limits);
      else if (klass == "split-mono")
        r = is_split_mono(f, limits);
      else if (klass == "top")
        r = is_topological(f, limits);
      else
        r.verdict = named_class(klass, limits)(f);
      Json out = to_json(r);
      out["class"] = klass;
      return emit(g, out, r.verdict);
    }
    if (*fibrewise) {
      SPosetMap f = s_poset_map_from_json(read_json(file), resolve);
      auto r = fibrewise_report(f, limits);
      return emit(g, to_json(r, f), r.fibrewise_ok());
    }
    if (*envelope) {
      SPosetMap f = s_poset_map_from_json(read_json(file), resolve);
      Envelope env = regular_injective_envelope(SliceObject{f}, limits);
      return emit(g, Json{{"embedding", to_json(env.embedding)},
                          {"envelope", to_json(env.envelope.f)},
                          {"completion", to_json(*env.completion.completion)}},
                  true);
    }
    if (*adjoint) {
      SPosetMap f = s_poset_map_from_json(read_json(file), resolve);
      MonotoneMap l = monotone_map_from_json(read_json(file2));
      AdjunctionCounts counts;
      auto r = adjunction_check(SliceObject{f}, l, &counts, limits);
      Json out = to_json(r);
      out["hom_pos"] = counts.pos_side;
      out["hom_s_pos"] = counts.s_pos_side;
      return emit(g, out, r.verdict);
    }
    if (*wfs) {
      Catalog cat = catalog_up_to(pomonoid_arg(g, pomonoid), size, {}, limits);
      WfsCheck check{named_class(left, limits), named_class(right, limits),
                     named_factorizer(system.empty() ? "cd-es" : system), unique};
      WfsReport r = verify_wfs(check, cat.objects, limits);
      Json out = to_json(r);
      out["label"] = "verified at scale n=" + std::to_string(size);
      out["pomonoid"] = pomonoid;
      const int code = emit(g, out, r.verdict());
      return r.complete ? code : kBudget;
    }
    if (*enumerate) {
      Json items = Json::array();
      if (what == "posets") {
        for (const auto& p : up_to ? enumerate_posets_up_to(size, limits) : enumerate_posets(size, limits))
          items.push_back(to_json(p));
      } else if (what == "pomonoids") {
        for (const auto& s : enumerate_pomonoids(size, limits)) items.push_back(to_json(*s));
      } else {
        auto s = pomonoid_arg(g, pomonoid);
        CatalogOptions opts{trivial_only};
        Catalog cat = up_to ? catalog_up_to(s, size, opts, limits)
                            : enumerate_s_posets(s, size, opts, limits);
        for (const auto& o : cat.objects) items.push_back(to_json(*o));
      }
      return emit(g, Json{{"count", items.size()}, {"items", items}}, true);
    }
    if (*suite) {
      SuiteParams params;
      if (suite->count("--pomonoid")) params.pomonoid = pomonoid;
      params.max_size = max_size;
      params.limits = limits;
      params.threads = threads;
      SuiteRun run = run_suite(suite_id, params);
      const int code = emit(g, run.report, run.pass());
      return run.manifest.budget_exhausted ? kBudget : code;
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kStructural;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kStructural;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kInternal;
  }
  return kStructural;
}
