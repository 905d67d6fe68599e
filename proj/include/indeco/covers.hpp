#pragma once

#include <cstdint>
#include <vector>

#include "indeco/poset.hpp"

namespace indeco {

struct CoverStats {
    std::uint64_t subsets_examined = 0;
    std::uint64_t pruned = 0;
};

struct CoverResult {
    Subset seed = 0;
    std::vector<Subset> covers;    // containment-minimal indecomposable proper supersets
    std::vector<Subset> smallest;  // minimum-cardinality indecomposable proper supersets
    CoverStats stats;
};

/// Precomputed indecomposability verdicts for every subset of one poset.
/// Shared across the many seed queries a verification run makes.
class SubsetVerdicts {
  public:
    explicit SubsetVerdicts(const Poset& p);
    bool indecomposable(Subset s) const { return verdicts_[s]; }
    const Poset& poset() const { return p_; }

  private:
    Poset p_;
    std::vector<bool> verdicts_;
};

/// All indecomposable subsets S with seed <= S and |S| <= max_size,
/// in ascending membership-mask order.
std::vector<Subset> indecomposable_supersets(const Poset& p, Subset seed, int max_size);

/// Containment-minimal indecomposable proper supersets of seed.
/// Throws SeedNotIndecomposable unless the seed induces an indecomposable
/// subposet.
CoverResult upper_covers(const Poset& p, Subset seed);
CoverResult upper_covers(const SubsetVerdicts& v, Subset seed);

/// Minimum-cardinality indecomposable proper supersets of seed.
/// Throws NoSuperset when none exists at all.
CoverResult smallest_supersets(const Poset& p, Subset seed);
CoverResult smallest_supersets(const SubsetVerdicts& v, Subset seed);

/// An indecomposable U with p_subset < U <= t and |U| = |p_subset| + 2.
/// Preconditions: t indecomposable, induced(p_subset) indecomposable,
/// 4 <= |p_subset| <= |t| - 2.  Throws PreconditionViolated on violated
/// preconditions and WitnessNotFound when no such U exists (which would
/// falsify the +2 growth theorem).
Subset st_gap2_witness(const Poset& t, Subset p_subset);
Subset st_gap2_witness(const SubsetVerdicts& v, Subset p_subset);

}  // namespace indeco
