#pragma once

// JSON forms of every value type. Keys come out sorted (nlohmann::json
// stores objects in std::map), and no floating point is ever written.
//
//   Poset     {"elements": [...], "leq": [[bool]]}      leq[i][j] = e_i <= e_j
//   Pomonoid  {"carrier": Poset, "identity": "1", "mult": {"s,t": "st"}}
//   SPoset    Poset fields + "act": {"a,s": "as"}, "over": name | Pomonoid
//   Map       {"dom": ..., "cod": ..., "table": {"a": "x"}}

#include <functional>
#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "poswfs/lifting.hpp"
#include "poswfs/report.hpp"
#include "poswfs/slice.hpp"
#include "poswfs/types.hpp"

namespace poswfs {

using Json = nlohmann::json;

/// Resolves a pomonoid name inside "over". Defaults to the built-in table.
using PomonoidResolver = std::function<PomonoidRef(std::string_view)>;

/// Name -> pomonoid map read from a registry file {"name": Pomonoid, ...}.
std::map<std::string, PomonoidRef, std::less<>> load_registry(const Json& j);
Json registry_json();

Json to_json(const Poset& p);
Json to_json(const Pomonoid& s);
/// "over" is written as the name when it denotes the built-in pomonoid of
/// that name, inline otherwise.
Json to_json(const SPoset& a);
Json to_json(const SPosetMap& f);
Json to_json(const MonotoneMap& f);
Json to_json(const LiftingSquare& sq);
Json to_json(const Witness& w);
Json to_json(const ClassReport& r);
Json to_json(const WfsReport& r);
Json to_json(const FibrewiseReport& r, const SPosetMap& f);

/// Parsers throw StructuralError on malformed input, including names that
/// do not resolve and tables that violate the axioms.
Poset poset_from_json(const Json& j);
PomonoidRef pomonoid_from_json(const Json& j, const PomonoidResolver& resolve = {});
SPosetRef s_poset_from_json(const Json& j, const PomonoidResolver& resolve = {});
/// The map is validated (monotone and equivariant).
SPosetMap s_poset_map_from_json(const Json& j, const PomonoidResolver& resolve = {});
MonotoneMap monotone_map_from_json(const Json& j);
LiftingSquare square_from_json(const Json& j, const PomonoidResolver& resolve = {});

enum class JsonKind { poset, pomonoid, s_poset, map, square };
/// Decided by the fields present: l/r, dom, mult, act/over, else poset.
JsonKind json_kind(const Json& j);
/// Axiom check of any value form, with the validator's witness. Malformed
/// JSON (missing fields, unknown names) still throws StructuralError.
ClassReport validate_json(const Json& j, const PomonoidResolver& resolve = {});

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace poswfs
