#include "indeco/covers.hpp"

#include <algorithm>

#include "indeco/decomposition.hpp"

namespace indeco {

SubsetVerdicts::SubsetVerdicts(const Poset& p) : p_(p), verdicts_(std::size_t{1} << p.size()) {
    for (Subset s = 1; s <= p.ground_set(); ++s)
        verdicts_[s] = is_indecomposable_within(p, s);
}

namespace {

// Iterate supersets of seed: seed | (submask over the complement).
template <typename F>
void for_each_superset(Subset seed, Subset ground, F&& f) {
    Subset comp = ground & ~seed;
    Subset extra = 0;
    while (true) {
        f(seed | extra);
        if (extra == comp) break;
        extra = (extra - comp) & comp;  // next submask in ascending order
    }
}

std::vector<Subset> supersets_impl(const Poset& p, const SubsetVerdicts* memo, Subset seed,
                                   int max_size, CoverStats* stats) {
    if (seed == 0) throw EmptySelection("superset search needs a nonempty seed");
    std::vector<Subset> out;
    for_each_superset(seed, p.ground_set(), [&](Subset s) {
        if (stats) ++stats->subsets_examined;
        if (subset_size(s) > max_size) {
            if (stats) ++stats->pruned;
            return;
        }
        bool indec = memo ? memo->indecomposable(s) : is_indecomposable_within(p, s);
        if (indec) out.push_back(s);
    });
    std::sort(out.begin(), out.end());
    return out;
}

CoverResult covers_impl(const Poset& p, const SubsetVerdicts* memo, Subset seed) {
    bool seed_ok = memo ? memo->indecomposable(seed) : is_indecomposable_within(p, seed);
    if (!seed_ok) throw SeedNotIndecomposable("seed does not induce an indecomposable subposet");
    CoverResult res;
    res.seed = seed;
    auto all = supersets_impl(p, memo, seed, p.size(), &res.stats);
    // Candidates in ascending mask order are not size-sorted; order by size
    // so each candidate only needs checking against minimal ones found so far.
    std::stable_sort(all.begin(), all.end(),
                     [](Subset a, Subset b) { return subset_size(a) < subset_size(b); });
    for (Subset s : all) {
        if (s == seed) continue;
        bool has_smaller = std::any_of(res.covers.begin(), res.covers.end(),
                                       [&](Subset c) { return (c & ~s) == 0; });
        if (!has_smaller) res.covers.push_back(s);
    }
    std::sort(res.covers.begin(), res.covers.end());
    if (!res.covers.empty()) {
        int best = p.size() + 1;
        for (Subset c : res.covers) best = std::min(best, subset_size(c));
        for (Subset c : res.covers)
            if (subset_size(c) == best) res.smallest.push_back(c);
    }
    return res;
}

Subset gap2_impl(const Poset& t, const SubsetVerdicts* memo, Subset p_subset) {
    auto indec = [&](Subset s) {
        return memo ? memo->indecomposable(s) : is_indecomposable_within(t, s);
    };
    const int n = t.size();
    const int k = subset_size(p_subset);
    if (!indec(t.ground_set()))
        throw PreconditionViolated("ambient poset is not indecomposable");
    if (k < 4 || k > n - 2)
        throw PreconditionViolated("need 4 <= |P| <= |T| - 2, got |P| = " + std::to_string(k) +
                                   ", |T| = " + std::to_string(n));
    if (!indec(p_subset)) throw PreconditionViolated("P does not induce an indecomposable subposet");
    auto comp = subset_elements(t.ground_set() & ~p_subset);
    for (size_t i = 0; i < comp.size(); ++i)
        for (size_t j = i + 1; j < comp.size(); ++j) {
            Subset u = p_subset | (Subset{1} << comp[i]) | (Subset{1} << comp[j]);
            if (indec(u)) return u;
        }
    throw WitnessNotFound("no indecomposable superset of size |P| + 2 exists");
}

}  // namespace

std::vector<Subset> indecomposable_supersets(const Poset& p, Subset seed, int max_size) {
    return supersets_impl(p, nullptr, seed, max_size, nullptr);
}

CoverResult upper_covers(const Poset& p, Subset seed) { return covers_impl(p, nullptr, seed); }

CoverResult upper_covers(const SubsetVerdicts& v, Subset seed) {
    return covers_impl(v.poset(), &v, seed);
}

CoverResult smallest_supersets(const Poset& p, Subset seed) {
    CoverResult res = covers_impl(p, nullptr, seed);
    if (res.smallest.empty()) throw NoSuperset("seed has no indecomposable proper superset");
    return res;
}

CoverResult smallest_supersets(const SubsetVerdicts& v, Subset seed) {
    CoverResult res = covers_impl(v.poset(), &v, seed);
    if (res.smallest.empty()) throw NoSuperset("seed has no indecomposable proper superset");
    return res;
}

Subset st_gap2_witness(const Poset& t, Subset p_subset) { return gap2_impl(t, nullptr, p_subset); }

Subset st_gap2_witness(const SubsetVerdicts& v, Subset p_subset) {
    return gap2_impl(v.poset(), &v, p_subset);
}

}  // namespace indeco
