#include "poswfs/types.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "poswfs/order.hpp"
#include "poswfs/pomonoid.hpp"
#include "poswfs/s_poset.hpp"

namespace poswfs {

namespace {

std::string describe(const ClassReport& r) {
  std::ostringstream os;
  if (!r.witness) return "invalid";
  os << r.witness->kind;
  if (!r.witness->elements.empty()) {
    os << " (";
    for (std::size_t i = 0; i < r.witness->elements.size(); ++i)
      os << (i ? ", " : "") << r.witness->elements[i];
    os << ")";
  }
  return os.str();
}

}  // namespace

Poset::Poset(std::vector<std::string> names, std::vector<Subset> up)
    : names_(std::move(names)), up_(std::move(up)) {
  if (names_.size() > kMaxElements)
    throw StructuralError("poset has " + std::to_string(names_.size()) +
                          " elements; at most 64 are supported");
  if (up_.size() != names_.size())
    throw StructuralError("relation size does not match element count");
  std::set<std::string_view> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw StructuralError("duplicate element name '" + n + "'");
  const Subset all = full_subset(names_.size());
  for (Subset row : up_)
    if (!is_subset(row, all)) throw StructuralError("relation refers to an element out of range");
  if (auto report = validate_order(names_, up_); !report)
    throw StructuralError("not a partial order: " + describe(report));
  down_.assign(names_.size(), 0);
  for (Elem a = 0; a < names_.size(); ++a)
    for_each_member(up_[a], [&](Elem b) { down_[b] |= bit(a); });
}

Poset Poset::from_matrix(std::vector<std::string> names,
                         const std::vector<std::vector<bool>>& leq) {
  if (leq.size() != names.size())
    throw StructuralError("relation matrix has " + std::to_string(leq.size()) +
                          " rows for " + std::to_string(names.size()) + " elements");
  std::vector<Subset> up(names.size(), 0);
  for (std::size_t i = 0; i < leq.size(); ++i) {
    if (leq[i].size() != names.size()) throw StructuralError("relation matrix is not square");
    for (std::size_t j = 0; j < leq[i].size(); ++j)
      if (leq[i][j]) up[i] |= bit(static_cast<Elem>(j));
  }
  return Poset(std::move(names), std::move(up));
}

Poset Poset::chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<Subset> up;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    up.push_back(full_subset(n) & ~full_subset(i));
  }
  return Poset(std::move(names), std::move(up));
}

Poset Poset::antichain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<Subset> up;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
    up.push_back(bit(static_cast<Elem>(i)));
  }
  return Poset(std::move(names), std::move(up));
}

Poset Poset::singleton(std::string name) { return Poset({std::move(name)}, {Subset{1}}); }

std::optional<Elem> Poset::find(std::string_view name) const {
  for (Elem i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Elem Poset::at(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw StructuralError("unknown element '" + std::string(name) + "'");
}

Pomonoid::Pomonoid(std::string name, Poset order, std::vector<Elem> mult, Elem identity)
    : name_(std::move(name)), order_(std::move(order)), mult_(std::move(mult)), identity_(identity) {
  if (auto report = validate_pomonoid(order_, mult_, identity_); !report)
    throw StructuralError("not a pomonoid: " + describe(report));
}

SPoset::SPoset(PomonoidRef over, Poset carrier, std::vector<Elem> act)
    : over_(std::move(over)), carrier_(std::move(carrier)), act_(std::move(act)) {
  if (!over_) throw StructuralError("S-poset without an acting pomonoid");
  if (auto report = validate_s_poset(*over_, carrier_, act_); !report)
    throw StructuralError("not an S-poset: " + describe(report));
}

MonotoneMap SPosetMap::underlying() const {
  return MonotoneMap{PosetRef(dom, &dom->carrier()), PosetRef(cod, &cod->carrier()), table};
}

Subset SPosetMap::image() const {
  Subset s = 0;
  for (Elem y : table) s |= bit(y);
  return s;
}

bool same_map(const SPosetMap& f, const SPosetMap& g) {
  return f.table == g.table && same_object(f.dom, g.dom) && same_object(f.cod, g.cod);
}

}  // namespace poswfs
