#pragma once

// Membership predicates for the morphism classes of Pos-S: embeddings (Emb),
// down-closed embeddings (C_D), split epis (E_S), split monos, unitary monos,
// retracts, and the direct-summand decomposition of an embedding.

#include <optional>

#include "poswfs/limits.hpp"
#include "poswfs/report.hpp"
#include "poswfs/s_poset.hpp"
#include "poswfs/types.hpp"

namespace poswfs {

bool is_injective(const SPosetMap& f);
bool is_surjective(const SPosetMap& f);

bool is_s_poset_embedding(const SPosetMap& f);
/// Embedding whose image is a down-set closed under the action.
bool is_down_closed_embedding(const SPosetMap& f);

/// Witness "section": the first g (table order) with f g = id.
ClassReport is_split_epi(const SPosetMap& f, const Limits& limits = {});
/// Witness "retraction": the first g with g f = id.
ClassReport is_split_mono(const SPosetMap& f, const Limits& limits = {});

/// y in im f whenever y*s in im f. Throws PreconditionError unless f is
/// injective.
bool is_unitary_mono(const SPosetMap& f);

struct SummandDecomposition {
  /// Y \ im f, absent when f is onto.
  SPosetRef complement;
  /// dom f + complement (just dom f when the complement is empty).
  SPosetRef sum;
  /// Inverse isomorphisms cod f <-> sum; from_sum restricts to f on dom f.
  SPosetMap to_sum;
  SPosetMap from_sum;
};

/// cod f = im f + complement as S-posets, when the image and its complement
/// are both action-closed and no order relation crosses between them.
/// Throws PreconditionError unless f is an S-poset embedding.
std::optional<SummandDecomposition> direct_summand_decomposition(const SPosetMap& f);

/// g: A -> C is a retract of f: A -> B when some alpha: C -> B and
/// beta: B -> C satisfy beta alpha = 1, alpha g = f, beta f = g.
/// Witness maps "alpha" and "beta".
ClassReport is_retract_of(const SPosetMap& g, const SPosetMap& f, const Limits& limits = {});

}  // namespace poswfs
