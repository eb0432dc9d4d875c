#include "poswfs/json_io.hpp"

#include "poswfs/order.hpp"
#include "poswfs/pomonoid.hpp"
#include "poswfs/s_poset.hpp"

namespace poswfs {

namespace {

const Json& field(const Json& j, std::string_view key) {
  if (!j.is_object()) throw StructuralError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw StructuralError("missing field '" + std::string(key) + "'");
  return *it;
}

std::string text(const Json& j, std::string_view what) {
  if (!j.is_string()) throw StructuralError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

/// Splits "x,y" into a pair of names known to `left` and `right`. Names may
/// themselves contain commas, so every split point is tried.
std::pair<Elem, Elem> split_key(const std::string& key, const Poset& left, const Poset& right) {
  std::optional<std::pair<Elem, Elem>> found;
  for (std::size_t pos = key.find(','); pos != std::string::npos; pos = key.find(',', pos + 1)) {
    auto a = left.find(std::string_view(key).substr(0, pos));
    auto b = right.find(std::string_view(key).substr(pos + 1));
    if (!a || !b) continue;
    if (found) throw StructuralError("ambiguous table key '" + key + "'");
    found = std::make_pair(*a, *b);
  }
  if (!found) throw StructuralError("table key '" + key + "' does not name a pair");
  return *found;
}

Json pair_table(const Poset& left, const Poset& right, const Poset& values,
                std::span<const Elem> table) {
  Json out = Json::object();
  for (Elem a = 0; a < left.size(); ++a)
    for (Elem b = 0; b < right.size(); ++b)
      out[left.name(a) + "," + right.name(b)] = values.name(table[a * right.size() + b]);
  return out;
}

std::vector<Elem> read_pair_table(const Json& j, const Poset& left, const Poset& right,
                                  const Poset& values, std::string_view what) {
  if (!j.is_object()) throw StructuralError(std::string(what) + " must be an object");
  std::vector<Elem> table(left.size() * right.size());
  std::vector<bool> seen(table.size(), false);
  for (const auto& [key, value] : j.items()) {
    auto [a, b] = split_key(key, left, right);
    const std::size_t idx = a * right.size() + b;
    if (seen[idx]) throw StructuralError("duplicate table key '" + key + "'");
    seen[idx] = true;
    table[idx] = values.at(text(value, what));
  }
  for (bool s : seen)
    if (!s) throw StructuralError(std::string(what) + " table is not total");
  return table;
}

Json map_table(const Poset& dom, const Poset& cod, std::span<const Elem> table) {
  Json out = Json::object();
  for (Elem a = 0; a < dom.size(); ++a) out[dom.name(a)] = cod.name(table[a]);
  return out;
}

std::vector<Elem> read_map_table(const Json& j, const Poset& dom, const Poset& cod) {
  if (!j.is_object()) throw StructuralError("map table must be an object");
  std::vector<Elem> table(dom.size());
  std::vector<bool> seen(dom.size(), false);
  for (const auto& [key, value] : j.items()) {
    const Elem a = dom.at(key);
    seen[a] = true;
    table[a] = cod.at(text(value, "map value"));
  }
  for (bool s : seen)
    if (!s) throw StructuralError("map table is not total");
  return table;
}

std::pair<std::vector<std::string>, std::vector<std::vector<bool>>> read_relation(const Json& j) {
  const Json& elements = field(j, "elements");
  const Json& leq = field(j, "leq");
  if (!elements.is_array() || !leq.is_array()) throw StructuralError("poset fields must be arrays");
  std::vector<std::string> names;
  for (const auto& e : elements) names.push_back(text(e, "element name"));
  std::vector<std::vector<bool>> matrix;
  for (const auto& row : leq) {
    if (!row.is_array()) throw StructuralError("leq rows must be arrays");
    std::vector<bool> r;
    for (const auto& v : row) {
      if (!v.is_boolean()) throw StructuralError("leq entries must be booleans");
      r.push_back(v.get<bool>());
    }
    if (r.size() != names.size()) throw StructuralError("relation matrix is not square");
    matrix.push_back(std::move(r));
  }
  if (matrix.size() != names.size()) throw StructuralError("relation matrix is not square");
  return {std::move(names), std::move(matrix)};
}

PomonoidRef resolve_name(std::string_view name, const PomonoidResolver& resolve) {
  if (resolve) {
    if (auto s = resolve(name)) return s;
  }
  return named_pomonoid(name);
}

Json maps_json(const std::vector<std::pair<std::string, SPosetMap>>& maps) {
  Json out = Json::object();
  for (const auto& [label, m] : maps) out[label] = to_json(m);
  return out;
}

}  // namespace

Json to_json(const Poset& p) {
  Json leq = Json::array();
  for (Elem a = 0; a < p.size(); ++a) {
    Json row = Json::array();
    for (Elem b = 0; b < p.size(); ++b) row.push_back(p.leq(a, b));
    leq.push_back(std::move(row));
  }
  return Json{{"elements", p.names()}, {"leq", std::move(leq)}};
}

Poset poset_from_json(const Json& j) {
  auto [names, matrix] = read_relation(j);
  return Poset::from_matrix(std::move(names), matrix);
}

Json to_json(const Pomonoid& s) {
  const Poset& o = s.order();
  return Json{{"carrier", to_json(o)},
              {"identity", o.name(s.identity())},
              {"mult", pair_table(o, o, o, s.mult_table())},
              {"name", s.name()}};
}

PomonoidRef pomonoid_from_json(const Json& j, const PomonoidResolver& resolve) {
  if (j.is_string()) return resolve_name(j.get<std::string>(), resolve);
  Poset order = poset_from_json(field(j, "carrier"));
  const Elem identity = order.at(text(field(j, "identity"), "identity"));
  auto mult = read_pair_table(field(j, "mult"), order, order, order, "mult");
  std::string name = j.contains("name") ? text(j["name"], "name") : "inline";
  return std::make_shared<const Pomonoid>(std::move(name), std::move(order), std::move(mult),
                                          identity);
}

Json to_json(const SPoset& a) {
  Json out = to_json(a.carrier());
  const Pomonoid& s = a.over();
  bool builtin = false;
  try {
    builtin = named_pomonoid(s.name())->same_as(s);
  } catch (const StructuralError&) {
  }
  out["over"] = builtin ? Json(s.name()) : to_json(s);
  out["act"] = pair_table(a.carrier(), s.order(), a.carrier(), a.act_table());
  return out;
}

SPosetRef s_poset_from_json(const Json& j, const PomonoidResolver& resolve) {
  Poset carrier = poset_from_json(j);
  if (!j.contains("over")) return trivial_action(carrier, named_pomonoid("trivial"));
  PomonoidRef s = pomonoid_from_json(j["over"], resolve);
  std::vector<Elem> act;
  if (j.contains("act")) {
    act = read_pair_table(j["act"], carrier, s->order(), carrier, "act");
  } else {
    for (Elem a = 0; a < carrier.size(); ++a)
      for (Elem x = 0; x < s->size(); ++x) act.push_back(a);
  }
  return std::make_shared<const SPoset>(std::move(s), std::move(carrier), std::move(act));
}

Json to_json(const SPosetMap& f) {
  return Json{{"dom", to_json(*f.dom)},
              {"cod", to_json(*f.cod)},
              {"table", map_table(f.dom->carrier(), f.cod->carrier(), f.table)}};
}

Json to_json(const MonotoneMap& f) {
  return Json{{"dom", to_json(*f.dom)},
              {"cod", to_json(*f.cod)},
              {"table", map_table(*f.dom, *f.cod, f.table)}};
}

SPosetMap s_poset_map_from_json(const Json& j, const PomonoidResolver& resolve) {
  SPosetRef dom = s_poset_from_json(field(j, "dom"), resolve);
  SPosetRef cod = s_poset_from_json(field(j, "cod"), resolve);
  auto table = read_map_table(field(j, "table"), dom->carrier(), cod->carrier());
  return make_s_poset_map(std::move(dom), std::move(cod), std::move(table));
}

MonotoneMap monotone_map_from_json(const Json& j) {
  auto dom = std::make_shared<const Poset>(poset_from_json(field(j, "dom")));
  auto cod = std::make_shared<const Poset>(poset_from_json(field(j, "cod")));
  auto table = read_map_table(field(j, "table"), *dom, *cod);
  return make_monotone_map(std::move(dom), std::move(cod), std::move(table));
}

Json to_json(const LiftingSquare& sq) {
  return Json{{"l", to_json(sq.l)}, {"r", to_json(sq.r)}, {"u", to_json(sq.u)}, {"v", to_json(sq.v)}};
}

namespace {

LiftingSquare square_from_json_unchecked(const Json& j, const PomonoidResolver& resolve) {
  return LiftingSquare{s_poset_map_from_json(field(j, "l"), resolve),
                       s_poset_map_from_json(field(j, "r"), resolve),
                       s_poset_map_from_json(field(j, "u"), resolve),
                       s_poset_map_from_json(field(j, "v"), resolve)};
}

}  // namespace

LiftingSquare square_from_json(const Json& j, const PomonoidResolver& resolve) {
  return make_square(s_poset_map_from_json(field(j, "l"), resolve),
                     s_poset_map_from_json(field(j, "r"), resolve),
                     s_poset_map_from_json(field(j, "u"), resolve),
                     s_poset_map_from_json(field(j, "v"), resolve));
}

Json to_json(const Witness& w) {
  return Json{{"kind", w.kind}, {"elements", w.elements}, {"maps", maps_json(w.maps)}};
}

Json to_json(const ClassReport& r) {
  Json out{{"verdict", r.verdict ? "PASS" : "FAIL"}};
  out["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return out;
}

Json to_json(const WfsReport& r) {
  Json ces = Json::array();
  for (const auto& c : r.counterexamples)
    ces.push_back(Json{{"condition", c.condition}, {"maps", maps_json(c.maps)}});
  return Json{{"verdict", r.verdict() ? "PASS" : "FAIL"},
              {"factorization", r.factorization_ok},
              {"lifting", r.lifting_ok},
              {"left_retract_closed", r.left_retract_closed},
              {"right_retract_closed", r.right_retract_closed},
              {"unique_diagonals", r.unique_diagonals_ok},
              {"complete", r.complete},
              {"objects", r.objects},
              {"maps", r.maps},
              {"left_maps", r.left_maps},
              {"right_maps", r.right_maps},
              {"pairs_checked", r.pairs_checked},
              {"squares_checked", r.squares_checked},
              {"counterexample_count", r.counterexample_count},
              {"counterexamples", std::move(ces)}};
}

Json to_json(const FibrewiseReport& r, const SPosetMap& f) {
  Json fibres = Json::array();
  for (const auto& st : r.fibres)
    fibres.push_back(Json{{"base_point", f.cod->name(st.base_point)},
                          {"empty", st.empty},
                          {"complete", st.complete}});
  return Json{{"verdict", r.fibrewise_ok() ? "PASS" : "FAIL"},
              {"fibres", std::move(fibres)},
              {"fibres_complete", to_json(r.fibres_complete)},
              {"fibration", to_json(r.fibration)},
              {"cofibration", to_json(r.cofibration)},
              {"topological", to_json(r.topological)}};
}

std::map<std::string, PomonoidRef, std::less<>> load_registry(const Json& j) {
  if (!j.is_object()) throw StructuralError("registry must be an object");
  std::map<std::string, PomonoidRef, std::less<>> out;
  for (const auto& [name, body] : j.items()) {
    Json named = body;
    named["name"] = name;
    out.emplace(name, pomonoid_from_json(named));
  }
  return out;
}

Json registry_json() {
  Json out = Json::object();
  for (const auto& name : pomonoid_names()) {
    Json body = to_json(*named_pomonoid(name));
    body.erase("name");
    out[name] = std::move(body);
  }
  return out;
}

JsonKind json_kind(const Json& j) {
  if (!j.is_object()) throw StructuralError("expected a JSON object");
  if (j.contains("l") && j.contains("r")) return JsonKind::square;
  if (j.contains("dom")) return JsonKind::map;
  if (j.contains("mult")) return JsonKind::pomonoid;
  if (j.contains("act") || j.contains("over")) return JsonKind::s_poset;
  return JsonKind::poset;
}

ClassReport validate_json(const Json& j, const PomonoidResolver& resolve) {
  switch (json_kind(j)) {
    case JsonKind::poset: {
      auto [names, matrix] = read_relation(j);
      return validate_poset(names, matrix);
    }
    case JsonKind::pomonoid: {
      const Json& carrier = field(j, "carrier");
      auto [names, matrix] = read_relation(carrier);
      if (auto r = validate_poset(names, matrix); !r) return r;
      Poset order = Poset::from_matrix(std::move(names), matrix);
      const Elem identity = order.at(text(field(j, "identity"), "identity"));
      auto mult = read_pair_table(field(j, "mult"), order, order, order, "mult");
      return validate_pomonoid(order, mult, identity);
    }
    case JsonKind::s_poset: {
      auto [names, matrix] = read_relation(j);
      if (auto r = validate_poset(names, matrix); !r) return r;
      if (!j.contains("act")) return ClassReport::pass();
      Poset carrier = Poset::from_matrix(std::move(names), matrix);
      PomonoidRef s = pomonoid_from_json(field(j, "over"), resolve);
      auto act = read_pair_table(j["act"], carrier, s->order(), carrier, "act");
      return validate_s_poset(*s, carrier, act);
    }
    case JsonKind::map: {
      for (const char* end : {"dom", "cod"})
        if (auto r = validate_json(field(j, end), resolve); !r) {
          r.witness->kind = std::string(end) + ":" + r.witness->kind;
          return r;
        }
      SPosetRef dom = s_poset_from_json(j["dom"], resolve);
      SPosetRef cod = s_poset_from_json(j["cod"], resolve);
      auto table = read_map_table(field(j, "table"), dom->carrier(), cod->carrier());
      return validate_s_poset_map(SPosetMap{dom, cod, std::move(table)});
    }
    case JsonKind::square:
      for (const char* side : {"l", "r", "u", "v"})
        if (auto r = validate_json(field(j, side), resolve); !r) {
          r.witness->kind = std::string(side) + ":" + r.witness->kind;
          return r;
        }
      if (!commutes(square_from_json_unchecked(j, resolve)))
        return ClassReport::fail(Witness{"square-does-not-commute", {}, {}});
      return ClassReport::pass();
  }
  return ClassReport::pass();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace poswfs
