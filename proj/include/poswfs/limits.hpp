#pragma once

#include <cstdint>
#include <cstdlib>

namespace poswfs {

/// Search bounds shared by every exhaustive procedure.
struct Limits {
  /// Candidate-table prefix nodes per hom-set enumeration.
  std::uint64_t hom_nodes = 10'000'000;
  /// Largest carrier for permutation-based isomorphism search.
  std::size_t max_perm_size = 8;
  /// is_complete uses the exhaustive subset scan up to this size.
  std::size_t complete_subset_cutoff = 20;
  /// is_topological enumerates all 2^|X| families up to this size.
  std::size_t topological_max = 12;

  /// Defaults, with hom_nodes overridden by POSWFS_BUDGET when it parses.
  static Limits from_env() {
    Limits l;
    if (const char* env = std::getenv("POSWFS_BUDGET")) {
      char* end = nullptr;
      const auto v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) l.hom_nodes = v;
    }
    return l;
  }
};

}  // namespace poswfs
