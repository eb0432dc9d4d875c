#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poswfs/types.hpp"

namespace poswfs {

/// Evidence attached to a verdict: the failing elements (by name), or the
/// constructive maps (sections, retractions, diagonals, squares).
struct Witness {
  std::string kind;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, SPosetMap>> maps;

  const SPosetMap* map(std::string_view label) const {
    for (const auto& [name, m] : maps)
      if (name == label) return &m;
    return nullptr;
  }
};

struct ClassReport {
  bool verdict = false;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return verdict; }

  static ClassReport pass() { return {true, std::nullopt}; }
  static ClassReport pass(Witness w) { return {true, std::move(w)}; }
  static ClassReport fail(Witness w) { return {false, std::move(w)}; }
};

}  // namespace poswfs
