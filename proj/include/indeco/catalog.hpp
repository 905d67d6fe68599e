#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indeco/poset.hpp"

namespace indeco {

enum class CatalogKind {
    N,
    N_hat,
    B,
    B_hat,
    B_tilde,
    B_prime,
    B_dprime,
    X_member,
    Fence,
    VCover,
};

const char* catalog_kind_name(CatalogKind k);
std::optional<CatalogKind> catalog_kind_from_name(const std::string& name);

enum class XEnd { bottom, top };

struct CatalogEntry {
    CatalogKind kind;
    bool dual = false;
    bool bx_swapped = false;   // forbidden-set families: pin b placed at x
    bool ab_swapped = false;   // V-covers: roles of a and b interchanged
    PinnedTriple triple;
    std::vector<XEnd> peel;    // X_member: extension sequence applied to the base N
    int fence_length = 0;      // Fence: |elements|; VCover: |F|
    int l_elem = -1, d_elem = -1, h_elem = -1;  // VCover pins

    std::string describe() const;
};

/// The seven labeled forbidden sets with pinned chain a < b, optionally
/// dualized (pins swapped so a < b is preserved) and/or with b placed at
/// the x position.  Throws UnknownName for kinds outside the seven.
CatalogEntry figure2_make(CatalogKind name, bool dual = false, bool bx_swapped = false);

/// The unique catalog identity (name, dual, bx_swapped) that t is
/// pinned-isomorphic to, if any.  Requires a < b in t.
std::optional<CatalogEntry> figure2_recognize(const PinnedTriple& t);

/// The four-element base of the recursively built family: an N with a
/// minimal pin a and maximal pin b.
CatalogEntry x_base();

/// Grow a family member by one element: a new minimum below everything but
/// the current pin a (which it replaces as pin), or dually a new maximum.
CatalogEntry x_extend(const CatalogEntry& e, XEnd end);

/// All family members of size <= max_size, one per pinned-isomorphism
/// class, each carrying its peel sequence.
std::vector<CatalogEntry> x_generate(int max_size);

/// Membership by recursive peeling, backtracking over the at-most-two
/// choices; fills the peel sequence on success.
bool x_recognize(const PinnedTriple& t, std::vector<XEnd>* peel = nullptr);

/// Alternating fence on k elements (a < f2 > f3 < ...), endpoints pinned.
/// k >= 2; throws BadLength below that.
CatalogEntry fence_make(int k);

/// t.poset is a fence whose endpoints are the pins (in either role).
bool fence_recognize(const PinnedTriple& t);

/// V-cover with fence length |F| = fence_length >= 1: ^l \ {l} splits into
/// the singleton {a} and a fence F from b to h with h maximal in F and
/// ^d \ {d} = {h}; b = h when fence_length = 1.
CatalogEntry v_cover_make(int fence_length);

/// Definitional check, also accepting the dual and the a/b role
/// interchange; the returned entry reports which variant matched and the
/// l, d, h pins.  Throws KindMismatch when the pins are comparable.
std::optional<CatalogEntry> v_cover_recognize(const PinnedTriple& t);

/// Every (name, dual, bx_swapped) combination of the seven forbidden sets,
/// in a fixed deterministic order.
std::vector<CatalogEntry> figure2_all();

}  // namespace indeco
