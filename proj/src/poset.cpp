#include "indeco/poset.hpp"

#include <algorithm>
#include <queue>

namespace indeco {

std::vector<int> subset_elements(Subset s) {
    std::vector<int> out;
    for (int i = 0; s >> i; ++i)
        if (subset_contains(s, i)) out.push_back(i);
    return out;
}

Poset Poset::from_relations(int n, std::span<const std::pair<int, int>> pairs) {
    if (n < 1 || n > kMaxElements)
        throw IndexError("element count must be in 1.." + std::to_string(kMaxElements) +
                         ", got " + std::to_string(n));
    std::vector<Subset> above(n, 0);
    for (auto [x, y] : pairs) {
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw IndexError("relation index out of range: " + std::to_string(x) + " < " +
                             std::to_string(y));
        if (x == y) throw CycleError("relation " + std::to_string(x) + " < itself");
        above[x] |= Subset{1} << y;
    }
    // Warshall closure over the above-masks.
    for (int k = 0; k < n; ++k)
        for (int x = 0; x < n; ++x)
            if (subset_contains(above[x], k)) above[x] |= above[k];
    for (int x = 0; x < n; ++x)
        if (subset_contains(above[x], x))
            throw CycleError("closure puts element " + std::to_string(x) + " below itself");
    return from_closed_masks(std::move(above));
}

Poset Poset::from_relations(int n, std::initializer_list<std::pair<int, int>> pairs) {
    return from_relations(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.end()));
}

Poset Poset::from_closed_masks(std::vector<Subset> above) {
    const int n = static_cast<int>(above.size());
    if (n < 1 || n > kMaxElements) throw IndexError("invalid element count");
    std::vector<Subset> below(n, 0);
    for (int x = 0; x < n; ++x) {
        if (above[x] & ~full_subset(n)) throw IndexError("above-mask out of range");
        if (subset_contains(above[x], x)) throw PosetError("relation not irreflexive");
        for (int y = 0; y < n; ++y)
            if (subset_contains(above[x], y)) {
                if (subset_contains(above[y], x)) throw PosetError("relation not antisymmetric");
                if (above[y] & ~above[x]) throw PosetError("relation not transitive");
                below[y] |= Subset{1} << x;
            }
    }
    return Poset(n, std::move(above), std::move(below));
}

Poset Poset::dual() const {
    return Poset(n_, below_, above_);
}

std::pair<Poset, std::vector<int>> Poset::induced(Subset s) const {
    if (s == 0) throw EmptySelection("induced subposet of the empty selection");
    if (s & ~ground_set()) throw IndexError("selection out of range");
    std::vector<int> map = subset_elements(s);
    const int m = static_cast<int>(map.size());
    std::vector<Subset> above(m, 0), below(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (less(map[i], map[j])) {
                above[i] |= Subset{1} << j;
                below[j] |= Subset{1} << i;
            }
    return {Poset(m, std::move(above), std::move(below)), std::move(map)};
}

std::vector<std::pair<int, int>> Poset::hasse_covers() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (less(x, y) && (above_[x] & below_[y]) == 0) out.emplace_back(x, y);
    return out;
}

Subset Poset::open_interval(int a, int b) const {
    return above_[a] & below_[b];
}

std::optional<int> Poset::fence_distance(int a, int b) const {
    if (a == b) return 0;
    std::vector<int> dist(n_, -1);
    dist[a] = 0;
    std::queue<int> q;
    q.push(a);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : subset_elements(comparables(x)))
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                if (y == b) return dist[y];
                q.push(y);
            }
    }
    return std::nullopt;
}

int Poset::longest_chain_between(int a, int b) const {
    if (!less(a, b)) throw NotAChain("longest_chain_between requires a < b");
    // Longest path over the interval, elements in index order are not
    // topologically sorted, so memoize.
    std::vector<int> memo(n_, -1);
    // chain length in elements from x up to b, x assumed <= b in the order
    auto rec = [&](auto&& self, int x) -> int {
        if (x == b) return 1;
        int& m = memo[x];
        if (m >= 0) return m;
        int best = 0;
        for (int y : subset_elements(above_[x] & (below_[b] | (Subset{1} << b))))
            best = std::max(best, self(self, y));
        return m = best + 1;
    };
    return rec(rec, a);
}

bool Poset::is_connected() const {
    Subset seen = 1;  // element 0
    Subset frontier = 1;
    while (frontier) {
        Subset next = 0;
        for (int x : subset_elements(frontier)) next |= comparables(x);
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == ground_set();
}

std::vector<std::pair<int, int>> Poset::relation_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (less(x, y)) out.emplace_back(x, y);
    return out;
}

}  // namespace indeco
