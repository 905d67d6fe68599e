#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "indeco/poset.hpp"

namespace indeco {

/// Relabeling-invariant identifier of a poset's isomorphism class:
/// size byte followed by the row-major relation-matrix bits of the
/// canonically relabeled poset, packed into bytes.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    auto operator<=>(const CanonicalForm&) const = default;
    std::string hex() const;
};

/// Invariant-based vertex refinement followed by backtracking to the
/// lexicographically least relation matrix.  Throws SizeBoundError past
/// the bound.
CanonicalForm canonical_form(const Poset& p, int max_n = 10);

/// The canonically relabeled poset itself (same labeling canonical_form
/// commits to).
Poset canonicalize(const Poset& p, int max_n = 10);

Poset relabel(const Poset& p, const std::vector<int>& perm);

/// All posets on n elements, one per isomorphism class, sorted by canonical
/// form.  Generated by extending (n-1)-posets with a new maximal element
/// over each down-closed subset, deduplicated per level.
std::vector<Poset> all_posets(int n, int max_n = 9);

/// Independent generation strategy for cross-checking: extends with an
/// element carrying an arbitrary valid (down-set, up-set) pair, so every
/// n-poset is reached from every one of its deletions.
std::vector<Poset> all_posets_general(int n, int max_n = 7);

/// Raw brute force over all antisymmetric relation assignments on unordered
/// pairs, keeping the transitive ones; the slowest and most independent
/// oracle.  Throws SizeBoundError past n = 5.
std::vector<Poset> all_posets_matrix_scan(int n);

/// Order-isomorphism mapping a1 -> a2, b1 -> b2.
bool isomorphic_pinned(const PinnedTriple& t1, const PinnedTriple& t2);

/// Order-embedding (injective, x < y iff images ordered the same way) of
/// t1.poset into t2.poset with a1 -> a2, b1 -> b2.
bool embeds_pinned(const PinnedTriple& t1, const PinnedTriple& t2);

bool isomorphic(const Poset& p, const Poset& q);

}  // namespace indeco
