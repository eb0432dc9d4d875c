#pragma once

// The diagonalization relation l □ r, diagonal search, the constructive
// (C_D, E_S) factorization and diagonal, injectivity against a class of
// maps, and the finite verification harness for weak factorization systems.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "poswfs/limits.hpp"
#include "poswfs/report.hpp"
#include "poswfs/s_poset.hpp"
#include "poswfs/types.hpp"

namespace poswfs {

/// Commutative square  A -u-> C,  l: A -> B,  r: C -> D,  B -v-> D.
struct LiftingSquare {
  SPosetMap l;
  SPosetMap r;
  SPosetMap u;
  SPosetMap v;
};

bool commutes(const LiftingSquare& sq);
/// Validating constructor: shapes, maps and commutativity.
LiftingSquare make_square(SPosetMap l, SPosetMap r, SPosetMap u, SPosetMap v);
/// d l = u and r d = v, with d an S-poset map.
bool is_diagonal(const LiftingSquare& sq, const SPosetMap& d);

/// First diagonal in table order, or std::nullopt when none exists.
std::optional<SPosetMap> find_diagonal(const LiftingSquare& sq, const Limits& limits = {});
/// Number of diagonals, stopping once `stop_after` have been seen.
std::size_t count_diagonals(const LiftingSquare& sq, std::size_t stop_after,
                            const Limits& limits = {});

/// Visits every commutative square on (l, r): u in table order, then each
/// compatible v. Stops when visit returns false.
void for_each_square(const SPosetMap& l, const SPosetMap& r, const Limits& limits,
                     const std::function<bool(const LiftingSquare&)>& visit);

/// l □ r. On failure the witness carries the first unliftable square as
/// maps "u" and "v".
ClassReport diagonalizes(const SPosetMap& l, const SPosetMap& r, const Limits& limits = {});

struct Factorization {
  SPosetMap left;
  SPosetMap right;
};

/// f = fbar i with i: X -> X + Y the left injection and fbar = [f, 1_Y].
Factorization cd_es_factorization(const SPosetMap& f);
/// Through the image with the order induced from the codomain.
Factorization image_factorization(const SPosetMap& f);

/// The diagonal k = (u on X, h v on the complement), transported along the
/// direct-summand decomposition of l. `section` defaults to the first
/// section of r. Throws PreconditionError when l is not a down-closed
/// embedding, when the decomposition is absent, or when r does not split.
SPosetMap cd_es_diagonal(const LiftingSquare& sq, std::optional<SPosetMap> section = std::nullopt,
                         const Limits& limits = {});

/// l = A -> A + B, r = f, u = 1_A, v = [f, 1_B]. Has a diagonal iff f
/// splits.
LiftingSquare non_split_witness_square(const SPosetMap& f);

/// For every h: U -> V in `h` and u: U -> I some s: V -> I has s h = u.
/// Witness maps "h" and "u" on failure.
ClassReport is_injective_object(const SPosetRef& i, std::span<const SPosetMap> h,
                                const Limits& limits = {});
/// f: X -> B is injective in Pos-S/B against `h`: h □ f for every h.
ClassReport is_slice_injective(const SPosetMap& f, std::span<const SPosetMap> h,
                               const Limits& limits = {});

using ClassPredicate = std::function<bool(const SPosetMap&)>;
using Factorizer = std::function<Factorization(const SPosetMap&)>;

struct WfsCounterexample {
  std::string condition;
  std::vector<std::pair<std::string, SPosetMap>> maps;
};

struct WfsReport {
  bool factorization_ok = true;
  bool lifting_ok = true;
  bool left_retract_closed = true;
  bool right_retract_closed = true;
  bool unique_diagonals_ok = true;
  /// False when a search ran out of budget; the flags above then cover only
  /// what was checked.
  bool complete = true;
  std::size_t objects = 0;
  std::size_t maps = 0;
  std::size_t left_maps = 0;
  std::size_t right_maps = 0;
  std::size_t pairs_checked = 0;
  std::size_t squares_checked = 0;
  std::size_t counterexample_count = 0;
  std::vector<WfsCounterexample> counterexamples;

  bool verdict() const {
    return factorization_ok && lifting_ok && left_retract_closed && right_retract_closed &&
           unique_diagonals_ok && complete;
  }
};

struct WfsCheck {
  ClassPredicate left;
  ClassPredicate right;
  Factorizer factorize;
  bool require_unique_diagonals = false;
  std::size_t max_counterexamples = 16;
};

/// Factorization, lifting and both retract-closure conditions over every
/// map between the given objects. A finite-scale check, not a proof.
WfsReport verify_wfs(const WfsCheck& check, std::span<const SPosetRef> objects,
                     const Limits& limits = {});

}  // namespace poswfs
