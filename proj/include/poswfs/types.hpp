#pragma once

// Core value types: finite posets, pomonoids, S-posets and the maps between
// them. Elements are positional indices into one value; subsets are bitmasks.

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "poswfs/errors.hpp"

namespace poswfs {

using Elem = std::uint32_t;
using Subset = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

constexpr Subset bit(Elem e) noexcept { return Subset{1} << e; }
constexpr bool contains(Subset s, Elem e) noexcept { return ((s >> e) & 1U) != 0; }
constexpr Subset full_subset(std::size_t n) noexcept {
  return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}
constexpr bool is_subset(Subset a, Subset b) noexcept { return (a & ~b) == 0; }
inline std::size_t cardinality(Subset s) noexcept { return static_cast<std::size_t>(std::popcount(s)); }
inline Elem lowest(Subset s) noexcept { return static_cast<Elem>(std::countr_zero(s)); }

/// Calls fn(e) for each member of s in increasing order.
template <class Fn>
void for_each_member(Subset s, Fn&& fn) {
  for (; s != 0; s &= s - 1) fn(lowest(s));
}

/// Finite nonempty partial order. leq(a, b) is stored twice, as up-sets and
/// as down-sets, so both directions of a scan are a single mask.
class Poset {
 public:
  Poset() = default;
  /// Throws StructuralError unless `up` describes a nonempty partial order
  /// over `names` (up[a] has bit b set iff a <= b).
  Poset(std::vector<std::string> names, std::vector<Subset> up);

  static Poset from_matrix(std::vector<std::string> names,
                           const std::vector<std::vector<bool>>& leq);
  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);
  static Poset singleton(std::string name = "*");

  std::size_t size() const noexcept { return names_.size(); }
  bool leq(Elem a, Elem b) const noexcept { return contains(up_[a], b); }
  Subset up(Elem a) const noexcept { return up_[a]; }
  Subset down(Elem a) const noexcept { return down_[a]; }
  Subset all() const noexcept { return full_subset(size()); }
  std::span<const Subset> up_sets() const noexcept { return up_; }

  const std::string& name(Elem a) const { return names_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Elem> find(std::string_view name) const;
  /// Throws StructuralError for an unknown name.
  Elem at(std::string_view name) const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
};

using PosetRef = std::shared_ptr<const Poset>;

/// A candidate function table between posets. Monotonicity is checked by
/// is_monotone / make_monotone_map, not assumed by the constructor.
struct MonotoneMap {
  PosetRef dom;
  PosetRef cod;
  std::vector<Elem> table;

  Elem operator()(Elem a) const { return table[a]; }
};

/// Finite pomonoid: order, multiplication table and identity. The
/// constructor validates every axiom and throws StructuralError on failure.
class Pomonoid {
 public:
  Pomonoid(std::string name, Poset order, std::vector<Elem> mult, Elem identity);

  const std::string& name() const noexcept { return name_; }
  const Poset& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  Elem identity() const noexcept { return identity_; }
  Elem mul(Elem s, Elem t) const noexcept { return mult_[s * size() + t]; }
  std::span<const Elem> mult_table() const noexcept { return mult_; }

  /// Structural equality; the display name does not participate.
  bool same_as(const Pomonoid& other) const noexcept {
    return identity_ == other.identity_ && mult_ == other.mult_ && order_ == other.order_;
  }

 private:
  std::string name_;
  Poset order_;
  std::vector<Elem> mult_;
  Elem identity_ = 0;
};

using PomonoidRef = std::shared_ptr<const Pomonoid>;

/// Poset with a monotone right action of a pomonoid. act(a, s) = a*s.
class SPoset {
 public:
  /// Throws StructuralError when the action axioms fail.
  SPoset(PomonoidRef over, Poset carrier, std::vector<Elem> act);

  const Pomonoid& over() const noexcept { return *over_; }
  const PomonoidRef& over_ref() const noexcept { return over_; }
  const Poset& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  Elem act(Elem a, Elem s) const noexcept { return act_[a * over_->size() + s]; }
  std::span<const Elem> act_table() const noexcept { return act_; }
  const std::string& name(Elem a) const { return carrier_.name(a); }

  bool same_as(const SPoset& other) const noexcept {
    return (over_ == other.over_ || over_->same_as(*other.over_)) && act_ == other.act_ &&
           carrier_ == other.carrier_;
  }

 private:
  PomonoidRef over_;
  Poset carrier_;
  std::vector<Elem> act_;
};

using SPosetRef = std::shared_ptr<const SPoset>;

inline bool same_object(const SPosetRef& a, const SPosetRef& b) {
  return a == b || a->same_as(*b);
}

/// Candidate S-poset map. Validity is checked by validate_s_poset_map.
struct SPosetMap {
  SPosetRef dom;
  SPosetRef cod;
  std::vector<Elem> table;

  Elem operator()(Elem a) const { return table[a]; }
  /// The underlying monotone map; shares ownership with dom/cod.
  MonotoneMap underlying() const;
  /// Image as a subset of cod.
  Subset image() const;
};

/// Equal tables between the same objects.
bool same_map(const SPosetMap& f, const SPosetMap& g);

}  // namespace poswfs
