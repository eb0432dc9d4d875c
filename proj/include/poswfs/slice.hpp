#pragma once

// Slice-category machinery over a fixed base B: fibrewise completeness,
// (co)fibrations, topological maps, sections objects, the pairing
// <1_X, f>, the regular-injective envelope and the G_B -| H_B adjunction.

#include <optional>
#include <span>
#include <vector>

#include "poswfs/lifting.hpp"
#include "poswfs/limits.hpp"
#include "poswfs/order.hpp"
#include "poswfs/report.hpp"
#include "poswfs/s_poset.hpp"

namespace poswfs {

/// An object of Pos-S/B: a map into its distinguished base B = cod f.
struct SliceObject {
  SPosetMap f;

  const SPosetRef& base() const noexcept { return f.cod; }
  const SPosetRef& total() const noexcept { return f.dom; }
};

/// For f(x) <= b, {x' in f^-1(b) | x <= x'} has a minimum. Witness (x, b).
ClassReport is_fibration(const SPosetMap& f);
/// For f(x) >= b, {x' in f^-1(b) | x' <= x} has a maximum. Witness (x, b).
ClassReport is_cofibration(const SPosetMap& f);

struct FibreStatus {
  Elem base_point;
  /// Empty fibres count as incomplete.
  bool empty;
  bool complete;
};

struct FibrewiseReport {
  std::vector<FibreStatus> fibres;
  ClassReport fibres_complete;
  ClassReport fibration;
  ClassReport cofibration;
  ClassReport topological;

  bool fibrewise_ok() const {
    return fibres_complete.verdict && fibration.verdict && cofibration.verdict;
  }
};

/// Completeness of every fibre; the witness names the first failing base
/// point (kind "empty-fibre" or "incomplete-fibre").
ClassReport fibres_complete(const SPosetMap& f, const Limits& limits = {});
std::vector<FibreStatus> fibre_statuses(const SPosetMap& f, const Limits& limits = {});

/// Every structured source b <= f(x), x in F, has an initial lift x* in
/// f^-1(b). Enumerates all families F; throws BudgetError above
/// limits.topological_max elements. Witness: b followed by F.
ClassReport is_topological(const SPosetMap& f, const Limits& limits = {});

FibrewiseReport fibrewise_report(const SPosetMap& f, const Limits& limits = {});

struct SectionsObject {
  /// Absent when f has no generalized section.
  SPosetRef object;
  /// Each element as a table over S x B (index t*|B| + b).
  std::vector<std::vector<Elem>> tables;
  Product domain;  // S x B
};

/// S_B(f) = {h in hom(S x B, X) | f h = pi_B}, a sub-S-poset of X^B.
SectionsObject sections_object(const SliceObject& f, const Limits& limits = {});

/// Search r: X x B -> X with r <1_X, f> = 1_X and f r = pi_B. Witness map
/// "retraction" (over the product X x B).
ClassReport pairing_is_section(const SliceObject& f, const Limits& limits = {});

/// x_b = r(x, b), checked to be the minimum of {x' in f^-1(b) | x <= x'}.
/// Throws PreconditionError when f(x) is not below b, and
/// InternalInconsistency when x_b is not that minimum.
Elem min_in_fibre(const SliceObject& f, const SPosetMap& r, Elem x, Elem b);

/// The S-poset of monotone maps S -> Q with (phi s)(t) = phi(st).
struct CofreeObject {
  SPosetRef object;
  /// Each element as a table over S.
  std::vector<std::vector<Elem>> tables;
  std::optional<Elem> index_of(const std::vector<Elem>& table) const;
};
CofreeObject cofree_object(const PosetRef& q, const PomonoidRef& s, const Limits& limits = {});

struct Envelope {
  Completion completion;  // of the carrier of A
  CofreeObject cofree;    // completion^(S)
  Product product;        // completion^(S) x B
  SliceObject envelope;   // second projection
  SPosetMap embedding;    // a -> (s -> down(a s), f(a))
};

/// Embeds f: A -> B into the second projection completion(A)^(S) x B -> B.
/// The embedding, its equivariance and the triangle are checked; a failure
/// throws InternalInconsistency.
Envelope regular_injective_envelope(const SliceObject& f, const Limits& limits = {});

/// The plain-poset (Emb, Top) factorization lifted along the trivial action:
/// X -> completion(X) x B -> B, first map <down(-), f>, second the
/// projection. Throws PreconditionError unless X and B are trivially acted.
Factorization emb_top_factorization(const SPosetMap& f);

enum class CharacterizationOutcome { agree, disagree, sections_empty };

struct CharacterizationResult {
  bool slice_injective = false;
  bool pairing_section = false;
  bool sections_empty = false;
  bool sections_injective = false;
  CharacterizationOutcome outcome = CharacterizationOutcome::agree;
  ClassReport lhs_report;

  bool rhs() const { return pairing_section && !sections_empty && sections_injective; }
};

/// Both sides of the slice-injectivity characterization against `h`.
CharacterizationResult characterization_check(const SliceObject& f, std::span<const SPosetMap> h,
                                              const Limits& limits = {});

/// G_B: equip l: P -> B with the trivial action of s on both ends.
SliceObject functor_G_B(const MonotoneMap& l, const PomonoidRef& s);
/// Cached G_B when the base S-poset is already built (it must carry the
/// trivial action with carrier l.cod).
SliceObject functor_G_B(const MonotoneMap& l, const SPosetRef& base);

struct HBResult {
  Quotient quotient;
  MonotoneMap map;  // A/theta -> B
};

/// H_B(f) = fbar: A/theta -> B with fbar[a] = f(a). Throws
/// PreconditionError unless B carries the trivial action.
HBResult functor_H_B(const SliceObject& f);

struct AdjunctionCounts {
  std::size_t pos_side = 0;    // hom_{Pos/B}(H_B f, l)
  std::size_t s_pos_side = 0;  // hom_{Pos-S/B}(f, G_B l)
};

/// The transposition h -> hbar, hbar[a] = h(a), is a bijection
/// hom_{Pos-S/B}(f, G_B l) -> hom_{Pos/B}(H_B f, l).
ClassReport adjunction_check(const SliceObject& f, const MonotoneMap& l,
                             AdjunctionCounts* counts = nullptr, const Limits& limits = {});

}  // namespace poswfs
