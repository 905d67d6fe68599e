#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "indeco/catalog.hpp"
#include "indeco/covers.hpp"
#include "indeco/decomposition.hpp"
#include "indeco/enumeration.hpp"

using namespace indeco;

namespace {

// 4-fence a<f2>f3<b (elements 0..3) plus a fifth element below both pins
Poset surprise_example() {
    return Poset::from_relations(5, {{0, 1}, {2, 1}, {2, 3}, {4, 0}, {4, 3}});
}

Subset mask(std::initializer_list<int> elems) {
    Subset s = 0;
    for (int e : elems) s |= Subset{1} << e;
    return s;
}

}  // namespace

TEST_CASE("indecomposable_supersets") {
    Poset n = figure2_make(CatalogKind::N).triple.poset;
    auto supers = indecomposable_supersets(n, mask({0, 1}), 4);
    // the seed itself and the whole N
    CHECK(supers == std::vector<Subset>{mask({0, 1}), n.ground_set()});

    Poset f4 = fence_make(4).triple.poset;
    auto fsup = indecomposable_supersets(f4, mask({0, 3}), 4);
    CHECK(fsup == std::vector<Subset>{mask({0, 3}), f4.ground_set()});

    // size cap respected
    CHECK(indecomposable_supersets(n, mask({0, 1}), 2) ==
          std::vector<Subset>{mask({0, 1})});
}

TEST_CASE("upper_covers of the N seed") {
    Poset n = figure2_make(CatalogKind::N).triple.poset;
    CoverResult res = upper_covers(n, mask({0, 1}));
    CHECK(res.covers == std::vector<Subset>{n.ground_set()});
    CHECK(res.smallest == std::vector<Subset>{n.ground_set()});
}

TEST_CASE("upper_covers of the B' seed witnesses the size-9 bound") {
    Poset bp = figure2_make(CatalogKind::B_prime).triple.poset;
    CoverResult res = upper_covers(bp, mask({0, 1}));
    REQUIRE(res.covers.size() == 1);
    CHECK(res.covers[0] == bp.ground_set());
    CHECK(subset_size(res.covers[0]) == 9);
    CHECK(bp.longest_chain_between(0, 1) == 2);

    // the double-primed set is decomposable, so it cannot play this role:
    // in fact no indecomposable subset properly contains its seed at all
    Poset b2 = figure2_make(CatalogKind::B_dprime).triple.poset;
    CHECK_FALSE(is_indecomposable(b2));
    CHECK(upper_covers(b2, mask({0, 1})).covers.empty());
    CHECK_THROWS_AS(smallest_supersets(b2, mask({0, 1})), NoSuperset);
}

TEST_CASE("the surprising 2-antichain example") {
    Poset t = surprise_example();
    REQUIRE(is_indecomposable(t));
    // pins 0 and 3 form an antichain at fence distance 2 (via element 4)
    CHECK_FALSE(t.comparable(0, 3));
    CHECK(t.fence_distance(0, 3) == 2);
    CoverResult res = upper_covers(t, mask({0, 3}));
    CHECK(std::count(res.covers.begin(), res.covers.end(), mask({0, 1, 2, 3})) == 1);
    CoverResult sm = smallest_supersets(t, mask({0, 3}));
    // the 4-fence {0,1,2,3} is among the smallest supersets even though
    // d(0,3) = 2; the other one, {0,2,3,4}, is a fence-length-1 V-cover
    CHECK(std::count(sm.smallest.begin(), sm.smallest.end(), mask({0, 1, 2, 3})) == 1);
    auto [sub, m] = t.induced(mask({0, 1, 2, 3}));
    CHECK(fence_recognize(PinnedTriple{sub, 0, 3}));
    for (Subset s : sm.smallest) {
        CHECK(subset_size(s) == 4);
        auto [q, qmap] = t.induced(s);
        auto idx = [&](int orig) {
            return int(std::lower_bound(qmap.begin(), qmap.end(), orig) - qmap.begin());
        };
        PinnedTriple triple{q, idx(0), idx(3)};
        CHECK((fence_recognize(triple) || v_cover_recognize(triple).has_value()));
    }
}

TEST_CASE("smallest_supersets of V-cover and fence seeds") {
    CatalogEntry v1 = v_cover_make(1);
    Subset seed = (Subset{1} << v1.triple.a) | (Subset{1} << v1.triple.b);
    CoverResult res = smallest_supersets(v1.triple.poset, seed);
    CHECK(res.smallest == std::vector<Subset>{v1.triple.poset.ground_set()});

    Poset f6 = fence_make(6).triple.poset;
    CoverResult fres = smallest_supersets(f6, mask({0, 5}));
    CHECK(fres.smallest == std::vector<Subset>{f6.ground_set()});
}

TEST_CASE("error conditions") {
    Poset n = figure2_make(CatalogKind::N).triple.poset;
    // a 3-element seed inducing a decomposable subposet
    CHECK_THROWS_AS(upper_covers(n, mask({0, 1, 2})), SeedNotIndecomposable);
    // seed = full set: no proper superset exists
    CHECK_THROWS_AS(smallest_supersets(n, n.ground_set()), NoSuperset);
    CHECK(upper_covers(n, n.ground_set()).covers.empty());
}

TEST_CASE("st_gap2_witness") {
    Poset bp = figure2_make(CatalogKind::B_prime).triple.poset;
    // {b, x, u, v1} induces a 4-fence inside B'
    Subset p = mask({1, 2, 5, 6});
    REQUIRE(is_indecomposable_within(bp, p));
    Subset u = st_gap2_witness(bp, p);
    CHECK(subset_size(u) == 6);
    CHECK((p & ~u) == 0);
    CHECK(is_indecomposable_within(bp, u));

    // |P| = |T| violates the range
    Poset f6 = fence_make(6).triple.poset;
    CHECK_THROWS_AS(st_gap2_witness(f6, f6.ground_set()), PreconditionViolated);
    // decomposable P rejected ({0,1,2,4} leaves element 4 isolated)
    CHECK_THROWS_AS(st_gap2_witness(f6, mask({0, 1, 2, 4})), PreconditionViolated);
}

TEST_CASE("any indecomposable 4-subset of an indecomposable 6-poset grows to the whole set") {
    for (const Poset& t : all_posets(6)) {
        if (!is_indecomposable(t)) continue;
        SubsetVerdicts memo(t);
        for (Subset p = 1; p < t.ground_set(); ++p) {
            if (subset_size(p) != 4 || !memo.indecomposable(p)) continue;
            CHECK(st_gap2_witness(memo, p) == t.ground_set());
        }
    }
}

TEST_CASE("cover soundness and minimality (all n <= 6, 2-element seeds)") {
    for (int n = 3; n <= 6; ++n)
        for (const Poset& t : all_posets(n)) {
            SubsetVerdicts memo(t);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    Subset seed = mask({a, b});
                    CoverResult res = upper_covers(memo, seed);
                    for (Subset h : res.covers) {
                        CHECK(is_indecomposable_within(t, h));
                        CHECK((seed & ~h) == 0);
                        CHECK(h != seed);
                        // minimality by exhaustive scan
                        for (Subset w = seed + 1; w < h; ++w)
                            if ((seed & ~w) == 0 && (w & ~h) == 0 && w != h &&
                                w != seed)
                                CHECK_FALSE(memo.indecomposable(w));
                    }
                    // deterministic ascending order
                    CHECK(std::is_sorted(res.covers.begin(), res.covers.end()));
                    if (res.covers.empty()) {
                        // no indecomposable proper superset at all
                        CHECK_THROWS_AS(smallest_supersets(memo, seed), NoSuperset);
                        continue;
                    }
                    // smallest members are themselves upper covers
                    CoverResult sm = smallest_supersets(memo, seed);
                    for (Subset s : sm.smallest) {
                        CHECK(std::count(res.covers.begin(), res.covers.end(), s) == 1);
                        for (Subset h : res.covers)
                            CHECK(subset_size(s) <= subset_size(h));
                    }
                    CHECK(std::is_sorted(sm.smallest.begin(), sm.smallest.end()));
                }
        }
}

TEST_CASE("corollary bound holds for 2-chain seeds (n <= 6)") {
    for (int n = 3; n <= 6; ++n)
        for (const Poset& t : all_posets(n)) {
            SubsetVerdicts memo(t);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (!t.less(a, b)) continue;
                    int bound = std::max(2 * t.longest_chain_between(a, b), 9);
                    for (Subset h : upper_covers(memo, mask({a, b})).covers)
                        CHECK(subset_size(h) <= bound);
                }
        }
}
