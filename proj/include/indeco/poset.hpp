#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "indeco/errors.hpp"

namespace indeco {

// Subsets of a poset's ground set as membership bitmasks over 0..n-1.
using Subset = std::uint32_t;

constexpr int kMaxElements = 31;

constexpr Subset full_subset(int n) { return (Subset{1} << n) - 1; }
constexpr int subset_size(Subset s) { return std::popcount(s); }
constexpr bool subset_contains(Subset s, int i) { return (s >> i) & 1u; }

std::vector<int> subset_elements(Subset s);

/// A finite strict order on elements 0..n-1, stored as the full strict
/// comparability relation (not just Hasse covers).  Immutable after
/// construction; all invariants (irreflexive, antisymmetric, transitive)
/// hold by construction.
class Poset {
  public:
    /// The empty poset; placeholder state for default-constructed holders.
    Poset() : n_(0) {}

    /// Transitive closure of the given strict relations.  Pairs may be
    /// covers or arbitrary x < y statements.  Throws CycleError if the
    /// closure would force x < x, IndexError on out-of-range indices.
    static Poset from_relations(int n, std::span<const std::pair<int, int>> pairs);
    static Poset from_relations(int n, std::initializer_list<std::pair<int, int>> pairs);

    /// Assembles a poset from prebuilt above-masks.  The masks must already
    /// be a valid strict order; checked, throws PosetError otherwise.
    static Poset from_closed_masks(std::vector<Subset> above);

    int size() const { return n_; }
    Subset ground_set() const { return full_subset(n_); }

    bool less(int x, int y) const { return subset_contains(above_[x], y); }
    bool comparable(int x, int y) const { return less(x, y) || less(y, x); }

    /// All y with x < y, as a mask.
    Subset above(int x) const { return above_[x]; }
    /// All y with y < x, as a mask.
    Subset below(int x) const { return below_[x]; }
    /// All y comparable to x, as a mask (x excluded).
    Subset comparables(int x) const { return above_[x] | below_[x]; }

    bool is_minimal(int x) const { return below_[x] == 0; }
    bool is_maximal(int x) const { return above_[x] == 0; }

    Poset dual() const;

    /// Restriction to s, elements relabeled 0..|s|-1 in ascending original
    /// index.  Second component maps new index -> original index.
    std::pair<Poset, std::vector<int>> induced(Subset s) const;

    /// (x, y) pairs with y an upper cover of x (x < y, nothing strictly
    /// between), in ascending (x, y) order.
    std::vector<std::pair<int, int>> hasse_covers() const;

    /// { t : a < t < b }; empty when a is not below b.
    Subset open_interval(int a, int b) const;

    /// Shortest path length between a and b in the comparability graph;
    /// nullopt when a and b lie in different connected components.
    std::optional<int> fence_distance(int a, int b) const;

    /// Maximum cardinality of a chain a = k1 < ... < km = b.
    /// Throws NotAChain unless a < b.
    int longest_chain_between(int a, int b) const;

    bool is_connected() const;

    /// The full relation as (x, y) pairs with x < y, ascending.
    std::vector<std::pair<int, int>> relation_pairs() const;

    bool operator==(const Poset& other) const = default;

  private:
    Poset(int n, std::vector<Subset> above, std::vector<Subset> below)
        : n_(n), above_(std::move(above)), below_(std::move(below)) {}

    int n_;
    std::vector<Subset> above_;
    std::vector<Subset> below_;
};

/// A poset with two distinguished elements.  Depending on the use site the
/// pins form a 2-chain (a < b) or a 2-antichain; operations validate the
/// shape they need.
struct PinnedTriple {
    Poset poset;
    int a;
    int b;

    bool pins_chain() const { return poset.less(a, b); }
    bool pins_antichain() const { return !poset.comparable(a, b); }
};

}  // namespace indeco
