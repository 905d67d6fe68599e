#pragma once

#include <vector>

#include "indeco/poset.hpp"

namespace indeco {

/// Every element outside s compares identically (same direction, or
/// incomparable) to all elements of s.  Empty sets, singletons and the full
/// ground set are autonomous.
bool is_order_autonomous(const Poset& p, Subset s);

/// Smallest order-autonomous superset of s, by iteratively absorbing any
/// outside element that distinguishes two current members.
Subset module_closure(const Poset& p, Subset s);

/// module_closure restricted to a universe: the closure is taken inside the
/// induced subposet on `universe` (s must be contained in it).
Subset module_closure_within(const Poset& p, Subset s, Subset universe);

struct SeriesSplit {
    bool decomposable = false;
    Subset lower = 0;  // L of the witness partition L (+) U
    Subset upper = 0;
};

/// True iff the poset splits as L (+) U with every element of L strictly
/// below every element of U, both nonempty.  Decided via incomparability
/// graph components; the witness split is reconstructed explicitly.
SeriesSplit is_series_decomposable(const Poset& p);

/// The incomparability graph is connected.
bool is_co_connected(const Poset& p);

/// No order-autonomous subset A with 1 < |A| < n.  Posets of size <= 2 are
/// indecomposable by convention.  Uses module-closure growth over pairs.
bool is_indecomposable(const Poset& p);

/// is_indecomposable for the induced subposet on `s`, without materializing
/// the restriction.
bool is_indecomposable_within(const Poset& p, Subset s);

/// Independent ground truth: exhaustive scan over all 2^n subsets.
/// Throws SizeBoundError past the bound.
bool indecomposable_oracle(const Poset& p, int max_n = 12);

enum class VerdictKind {
    indecomposable,
    disconnected,
    series_decomposable,
    has_nontrivial_autonomous,
};

struct DecompositionVerdict {
    VerdictKind kind;
    // disconnected: witness = one connected component;
    // series_decomposable: witness = L, witness2 = U;
    // has_nontrivial_autonomous: witness = the offending module.
    Subset witness = 0;
    Subset witness2 = 0;
};

DecompositionVerdict decomposition_verdict(const Poset& p);

const char* verdict_kind_name(VerdictKind k);

}  // namespace indeco
