#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "indeco/catalog.hpp"
#include "indeco/decomposition.hpp"
#include "indeco/enumeration.hpp"

using namespace indeco;

TEST_CASE("figure2_make N") {
    CatalogEntry n = figure2_make(CatalogKind::N);
    CHECK(n.triple.poset.size() == 4);
    CHECK(n.triple.a == 0);
    CHECK(n.triple.b == 1);
    // exactly a<b, a<x, l<b
    CHECK(n.triple.poset.relation_pairs() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {3, 1}});
    CHECK(n.triple.pins_chain());
}

TEST_CASE("figure2_make sizes") {
    CHECK(figure2_make(CatalogKind::N).triple.poset.size() == 4);
    CHECK(figure2_make(CatalogKind::N_hat).triple.poset.size() == 5);
    CHECK(figure2_make(CatalogKind::B).triple.poset.size() == 6);
    CHECK(figure2_make(CatalogKind::B_hat).triple.poset.size() == 7);
    CHECK(figure2_make(CatalogKind::B_tilde).triple.poset.size() == 8);
    CHECK(figure2_make(CatalogKind::B_prime).triple.poset.size() == 9);
    CHECK(figure2_make(CatalogKind::B_dprime).triple.poset.size() == 9);
    CHECK_THROWS_AS(figure2_make(CatalogKind::Fence), UnknownName);
}

TEST_CASE("figure2_make dual and swap keep a chain pin pair") {
    for (const CatalogEntry& e : figure2_all()) {
        CHECK(e.triple.pins_chain());
        // every entry except the double-primed one is indecomposable; that
        // one has the order-autonomous block {1, 2, 5, 6, 8} by construction
        bool expect = e.kind != CatalogKind::B_dprime;
        CHECK(is_indecomposable(e.triple.poset) == expect);
        CHECK(indecomposable_oracle(e.triple.poset) == expect);
    }
    CatalogEntry nd = figure2_make(CatalogKind::N, /*dual=*/true);
    CHECK(isomorphic(nd.triple.poset, figure2_make(CatalogKind::N).triple.poset.dual()));
    CHECK(nd.triple.poset.less(nd.triple.a, nd.triple.b));
}

TEST_CASE("the double-primed entry is decomposable with a known block") {
    Poset p = figure2_make(CatalogKind::B_dprime).triple.poset;
    Subset block = 0b101100110;  // elements 1, 2, 5, 6, 8
    CHECK(is_order_autonomous(p, block));
    CHECK_FALSE(is_indecomposable(p));
    CHECK_FALSE(indecomposable_oracle(p));
    // the primed entry, by contrast, is the indecomposable size-9 witness
    CHECK(is_indecomposable(figure2_make(CatalogKind::B_prime).triple.poset));
}

TEST_CASE("figure2_all covers every flag combination once") {
    auto all = figure2_all();
    CHECK(all.size() == 28);
    std::set<std::string> ids;
    for (const CatalogEntry& e : all) CHECK(ids.insert(e.describe()).second);
}

TEST_CASE("figure2_recognize round trips") {
    // N is pinned-self-dual (it is the 4-fence), so the recognizer may
    // normalize flags; the returned identity must reconstruct the triple.
    for (const CatalogEntry& e : figure2_all()) {
        auto r = figure2_recognize(e.triple);
        REQUIRE(r.has_value());
        CHECK(r->kind == e.kind);
        CHECK(isomorphic_pinned(
            figure2_make(r->kind, r->dual, r->bx_swapped).triple, e.triple));
    }
    CHECK_FALSE(figure2_recognize(x_extend(x_base(), XEnd::bottom).triple).has_value());
    // antichain pins are never a figure-2 identity
    PinnedTriple anti{fence_make(4).triple.poset, 0, 3};
    CHECK_FALSE(figure2_recognize(anti).has_value());
}

TEST_CASE("x_base") {
    CatalogEntry base = x_base();
    CHECK(base.kind == CatalogKind::X_member);
    CHECK(base.triple.poset.size() == 4);
    CHECK(is_indecomposable(base.triple.poset));
    CHECK(base.triple.poset.is_minimal(base.triple.a));
    CHECK(base.triple.poset.is_maximal(base.triple.b));
    // a is a lower cover of b
    CHECK(base.triple.poset.less(base.triple.a, base.triple.b));
    CHECK(base.triple.poset.open_interval(base.triple.a, base.triple.b) == 0);
    CHECK(isomorphic_pinned(base.triple, figure2_make(CatalogKind::N).triple));
}

TEST_CASE("x_extend grows by one and stays indecomposable") {
    CatalogEntry e = x_base();
    for (int step = 0; step < 6; ++step) {
        XEnd end = step % 2 == 0 ? XEnd::bottom : XEnd::top;
        CatalogEntry grown = x_extend(e, end);
        CHECK(grown.triple.poset.size() == e.triple.poset.size() + 1);
        CHECK(is_indecomposable(grown.triple.poset));
        CHECK(grown.peel.size() == e.peel.size() + 1);
        CHECK(grown.peel.back() == end);
        e = grown;
    }
    CHECK(e.triple.poset.size() == 10);
    CHECK_THROWS_AS(x_extend(fence_make(4), XEnd::bottom), KindMismatch);
}

TEST_CASE("bottom extension semantics") {
    CatalogEntry base = x_base();
    CatalogEntry x5 = x_extend(base, XEnd::bottom);
    const Poset& p = x5.triple.poset;
    int a_new = x5.triple.a;
    int a_old = base.triple.a;
    CHECK(p.is_minimal(a_new));
    CHECK_FALSE(p.comparable(a_new, a_old));
    for (int y = 0; y < p.size(); ++y)
        if (y != a_new && y != a_old) CHECK(p.less(a_new, y));
}

TEST_CASE("x_generate") {
    CHECK(x_generate(4).size() == 1);
    CHECK_THROWS_AS(x_generate(3), SizeBoundError);
    auto g7 = x_generate(7);
    // Figure-1 chain X (size 5), Y (size 6), Z (size 7)
    CatalogEntry x = x_extend(x_base(), XEnd::bottom);
    CatalogEntry y = x_extend(x, XEnd::top);
    CatalogEntry z = x_extend(y, XEnd::top);
    for (const CatalogEntry& probe : {x, y, z})
        CHECK(std::any_of(g7.begin(), g7.end(), [&](const CatalogEntry& e) {
            return isomorphic_pinned(e.triple, probe.triple);
        }));
    // one pinned-iso class each
    for (size_t i = 0; i < g7.size(); ++i)
        for (size_t j = i + 1; j < g7.size(); ++j)
            CHECK_FALSE(isomorphic_pinned(g7[i].triple, g7[j].triple));
    // every member indecomposable up to size 10
    for (const CatalogEntry& e : x_generate(10))
        CHECK(is_indecomposable(e.triple.poset));
}

TEST_CASE("x_recognize") {
    std::vector<XEnd> peel;
    CHECK(x_recognize(x_base().triple, &peel));
    CHECK(peel.empty());

    for (const CatalogEntry& e : figure2_all())
        if (e.kind != CatalogKind::N) CHECK_FALSE(x_recognize(e.triple));

    PinnedTriple anti{fence_make(4).triple.poset, 0, 3};
    CHECK_FALSE(x_recognize(anti));

    // peel certificate replays to the same triple
    for (const CatalogEntry& e : x_generate(8)) {
        std::vector<XEnd> steps;
        REQUIRE(x_recognize(e.triple, &steps));
        CatalogEntry rebuilt = x_base();
        for (XEnd s : steps) rebuilt = x_extend(rebuilt, s);
        CHECK(isomorphic_pinned(rebuilt.triple, e.triple));
    }
}

TEST_CASE("x recognizer/generator equivalence (sizes <= 6)") {
    for (int s = 4; s <= 6; ++s) {
        auto members = x_generate(s);
        std::vector<CatalogEntry> at_size;
        for (CatalogEntry& e : members)
            if (e.triple.poset.size() == s) at_size.push_back(std::move(e));
        std::vector<PinnedTriple> accepted;
        for (const Poset& p : all_posets(s))
            for (int a = 0; a < s; ++a)
                for (int b = 0; b < s; ++b) {
                    if (a == b) continue;
                    PinnedTriple t{p, a, b};
                    if (!x_recognize(t)) continue;
                    bool dup =
                        std::any_of(accepted.begin(), accepted.end(),
                                    [&](const PinnedTriple& o) {
                                        return isomorphic_pinned(t, o);
                                    });
                    if (!dup) accepted.push_back(t);
                }
        CHECK(accepted.size() == at_size.size());
        for (const PinnedTriple& t : accepted)
            CHECK(std::any_of(at_size.begin(), at_size.end(),
                              [&](const CatalogEntry& e) {
                                  return isomorphic_pinned(t, e.triple);
                              }));
    }
}

TEST_CASE("fence_make") {
    CatalogEntry f4 = fence_make(4);
    CHECK(f4.triple.poset.relation_pairs() ==
          std::vector<std::pair<int, int>>{{0, 1}, {2, 1}, {2, 3}});
    CHECK(f4.triple.a == 0);
    CHECK(f4.triple.b == 3);
    CHECK(f4.fence_length == 4);
    CHECK_THROWS_AS(fence_make(1), BadLength);
    for (int k = 4; k <= 10; ++k) {
        CHECK(is_indecomposable(fence_make(k).triple.poset));
        CHECK(indecomposable_oracle(fence_make(k).triple.poset));
    }
    // 2- and 3-element fences are decomposable as posets but constructible
    CHECK(fence_make(2).triple.poset.size() == 2);
    CHECK_FALSE(is_indecomposable(fence_make(3).triple.poset));
}

TEST_CASE("fence_recognize") {
    for (int k = 2; k <= 8; ++k) {
        CatalogEntry f = fence_make(k);
        CHECK(fence_recognize(f.triple));
        // either endpoint assignment works
        CHECK(fence_recognize(PinnedTriple{f.triple.poset, f.triple.b, f.triple.a}));
        // interior pins do not
        if (k >= 3) CHECK_FALSE(fence_recognize(PinnedTriple{f.triple.poset, 0, 1}));
    }
    // the 3-fence is recognized; the k >= 4 threshold is the caller's concern
    CatalogEntry f3 = fence_make(3);
    CHECK(fence_recognize(f3.triple));
    CHECK(f3.triple.poset.size() < 4);
    CHECK_FALSE(fence_recognize(x_base().triple));
    CHECK_FALSE(fence_recognize(PinnedTriple{Poset::from_relations(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}), 0, 3}));
}

TEST_CASE("v_cover_make") {
    CatalogEntry v1 = v_cover_make(1);
    CHECK(v1.triple.poset.size() == 4);
    // {l<a, l<b, d<b}
    CHECK(v1.triple.poset.relation_pairs() ==
          std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {3, 1}});
    CHECK(v1.h_elem == 1);  // b = h allowed at fence length 1
    CHECK(v1.triple.pins_antichain());
    CHECK_THROWS_AS(v_cover_make(0), BadLength);
    for (int fl = 1; fl <= 6; ++fl) {
        CatalogEntry v = v_cover_make(fl);
        CHECK(v.triple.poset.size() == fl + 3);
        CHECK(is_indecomposable(v.triple.poset));
        CHECK(indecomposable_oracle(v.triple.poset));
        CHECK(v.fence_length == fl);
    }
}

TEST_CASE("v_cover structural postconditions") {
    for (int fl = 1; fl <= 6; ++fl) {
        CatalogEntry v = v_cover_make(fl);
        const Poset& p = v.triple.poset;
        // exactly two minimal elements: l and d
        std::vector<int> minimals;
        for (int x = 0; x < p.size(); ++x)
            if (p.is_minimal(x)) minimals.push_back(x);
        CHECK(minimals.size() == 2);
        CHECK(std::count(minimals.begin(), minimals.end(), v.l_elem) == 1);
        CHECK(std::count(minimals.begin(), minimals.end(), v.d_elem) == 1);
        // up-set of d is exactly {h}
        CHECK(p.above(v.d_elem) == (Subset{1} << v.h_elem));
        // l lies below a, b and h
        CHECK(p.less(v.l_elem, v.triple.a));
        CHECK(p.less(v.l_elem, v.triple.b));
        CHECK(p.less(v.l_elem, v.h_elem));
    }
}

TEST_CASE("v_cover_recognize") {
    for (int fl = 1; fl <= 6; ++fl) {
        CatalogEntry v = v_cover_make(fl);
        auto r = v_cover_recognize(v.triple);
        REQUIRE(r.has_value());
        CHECK(r->fence_length == fl);
        CHECK_FALSE(r->dual);
        CHECK_FALSE(r->ab_swapped);
        CHECK(r->l_elem == v.l_elem);
        CHECK(r->d_elem == v.d_elem);
        CHECK(r->h_elem == v.h_elem);

        // a/b interchange
        auto rs = v_cover_recognize(PinnedTriple{v.triple.poset, v.triple.b, v.triple.a});
        REQUIRE(rs.has_value());
        CHECK(rs->ab_swapped);

        // dual
        auto rd = v_cover_recognize(PinnedTriple{v.triple.poset.dual(), v.triple.a, v.triple.b});
        REQUIRE(rd.has_value());
        CHECK(rd->dual);
    }
    // a fence is not a V-cover
    CHECK_FALSE(v_cover_recognize(fence_make(4).triple).has_value());
    CHECK_THROWS_AS(v_cover_recognize(x_base().triple), KindMismatch);
}

TEST_CASE("catalog kind names round trip") {
    for (CatalogKind k :
         {CatalogKind::N, CatalogKind::N_hat, CatalogKind::B, CatalogKind::B_hat,
          CatalogKind::B_tilde, CatalogKind::B_prime, CatalogKind::B_dprime,
          CatalogKind::X_member, CatalogKind::Fence, CatalogKind::VCover})
        CHECK(catalog_kind_from_name(catalog_kind_name(k)) == k);
    CHECK_FALSE(catalog_kind_from_name("nonsense").has_value());
}
