#include "indeco/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace indeco {

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

namespace {

// Iterated invariant refinement; returns label-invariant class ranks.
std::vector<int> refine_classes(const Poset& p) {
    const int n = p.size();
    std::vector<int> rank(n, 0);
    {
        std::vector<std::pair<std::pair<int, int>, int>> sig(n);
        for (int v = 0; v < n; ++v)
            sig[v] = {{subset_size(p.below(v)), subset_size(p.above(v))}, v};
        std::sort(sig.begin(), sig.end());
        int r = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[i].first != sig[i - 1].first) ++r;
            rank[sig[i].second] = r;
        }
    }
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{rank[v]};
            std::vector<int> lo, hi;
            for (int u : subset_elements(p.below(v))) lo.push_back(rank[u]);
            for (int u : subset_elements(p.above(v))) hi.push_back(rank[u]);
            std::sort(lo.begin(), lo.end());
            std::sort(hi.begin(), hi.end());
            s.push_back(-1);
            s.insert(s.end(), lo.begin(), lo.end());
            s.push_back(-1);
            s.insert(s.end(), hi.begin(), hi.end());
            sig[v] = {std::move(s), v};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int r = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++r;
            next[sorted[i].second] = r;
        }
        if (next == rank) break;
        rank = std::move(next);
    }
    return rank;
}

// Lexicographically least labeling.  The per-position code chunk combines
// the refinement class rank of the placed vertex with its relation bits to
// the already placed prefix; only chunk-minimal candidates are explored,
// with twin candidates collapsed.
struct Canonicalizer {
    const Poset& p;
    int n;
    std::vector<int> rank;
    std::vector<int> perm;       // position -> vertex, current path
    std::vector<std::uint64_t> chunks;
    std::vector<int> best_perm;
    std::vector<std::uint64_t> best_chunks;
    bool have_best = false;

    explicit Canonicalizer(const Poset& poset)
        : p(poset), n(poset.size()), rank(refine_classes(poset)), perm(n), chunks(n) {}

    std::uint64_t chunk_of(int v, int pos) const {
        std::uint64_t c = static_cast<std::uint64_t>(rank[v]) << (2 * pos);
        for (int i = 0; i < pos; ++i) {
            std::uint64_t bits = (p.less(perm[i], v) ? 2u : 0u) | (p.less(v, perm[i]) ? 1u : 0u);
            c |= bits << (2 * (pos - 1 - i));
        }
        return c;
    }

    // Sign of chunks[0..pos) versus best_chunks[0..pos).
    int prefix_cmp(int pos) const {
        for (int i = 0; i < pos; ++i) {
            if (chunks[i] < best_chunks[i]) return -1;
            if (chunks[i] > best_chunks[i]) return 1;
        }
        return 0;
    }

    void dfs(int pos, Subset used) {
        if (pos == n) {
            if (!have_best || prefix_cmp(n) < 0) {
                best_perm = perm;
                best_chunks = chunks;
                have_best = true;
            }
            return;
        }
        std::uint64_t mn = ~std::uint64_t{0};
        for (int v = 0; v < n; ++v)
            if (!subset_contains(used, v)) mn = std::min(mn, chunk_of(v, pos));
        if (have_best) {
            // best may have improved since this branch was entered
            int cmp = prefix_cmp(pos);
            if (cmp > 0 || (cmp == 0 && mn > best_chunks[pos])) return;
        }
        std::vector<int> tried;
        for (int v = 0; v < n; ++v) {
            if (subset_contains(used, v) || chunk_of(v, pos) != mn) continue;
            bool twin = std::any_of(tried.begin(), tried.end(), [&](int u) {
                return p.above(u) == p.above(v) && p.below(u) == p.below(v);
            });
            if (twin) continue;
            tried.push_back(v);
            perm[pos] = v;
            chunks[pos] = mn;
            dfs(pos + 1, used | (Subset{1} << v));
        }
    }

    std::vector<int> run() {
        dfs(0, 0);
        return best_perm;
    }
};

std::vector<int> canonical_labeling(const Poset& p, int max_n) {
    if (p.size() > max_n)
        throw SizeBoundError("canonical_form bound " + std::to_string(max_n) +
                             " exceeded by n = " + std::to_string(p.size()));
    Canonicalizer c(p);
    return c.run();
}

}  // namespace

Poset relabel(const Poset& p, const std::vector<int>& perm) {
    // perm: new index -> original vertex
    const int n = p.size();
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    std::vector<Subset> above(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.less(perm[i], perm[j])) above[i] |= Subset{1} << j;
    return Poset::from_closed_masks(std::move(above));
}

Poset canonicalize(const Poset& p, int max_n) {
    return relabel(p, canonical_labeling(p, max_n));
}

CanonicalForm canonical_form(const Poset& p, int max_n) {
    Poset c = canonicalize(p, max_n);
    const int n = c.size();
    CanonicalForm form;
    form.bytes.push_back(static_cast<std::uint8_t>(n));
    int bitpos = 0;
    std::uint8_t cur = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j && c.less(i, j)) cur |= std::uint8_t(1u << bitpos);
            if (++bitpos == 8) {
                form.bytes.push_back(cur);
                cur = 0;
                bitpos = 0;
            }
        }
    if (bitpos) form.bytes.push_back(cur);
    return form;
}

namespace {

bool is_down_closed(const Poset& p, Subset s) {
    for (int x : subset_elements(s))
        if (p.below(x) & ~s) return false;
    return true;
}

bool is_up_closed(const Poset& p, Subset s) {
    for (int x : subset_elements(s))
        if (p.above(x) & ~s) return false;
    return true;
}

// Parent with one new element z appended, down < z < up.
Poset extend(const Poset& parent, Subset down, Subset up) {
    const int n = parent.size();
    std::vector<Subset> above(n + 1, 0);
    for (int x = 0; x < n; ++x) {
        above[x] = parent.above(x);
        if (subset_contains(down, x)) above[x] |= Subset{1} << n;
    }
    above[n] = up;
    return Poset::from_closed_masks(std::move(above));
}

std::vector<Poset> sorted_by_canon(std::map<CanonicalForm, Poset>&& dedup) {
    std::vector<Poset> out;
    out.reserve(dedup.size());
    for (auto& [form, poset] : dedup) out.push_back(std::move(poset));
    return out;
}

}  // namespace

std::vector<Poset> all_posets(int n, int max_n) {
    if (n < 1) throw SizeBoundError("all_posets requires n >= 1");
    if (n > max_n)
        throw SizeBoundError("all_posets bound " + std::to_string(max_n) +
                             " exceeded by n = " + std::to_string(n));
    std::vector<Poset> level{Poset::from_relations(1, {})};
    for (int k = 2; k <= n; ++k) {
        std::map<CanonicalForm, Poset> dedup;
        for (const Poset& parent : level)
            for (Subset d = 0; d <= parent.ground_set(); ++d) {
                if (!is_down_closed(parent, d)) continue;
                Poset child = extend(parent, d, 0);
                dedup.try_emplace(canonical_form(child, n), std::move(child));
            }
        level = sorted_by_canon(std::move(dedup));
    }
    return level;
}

std::vector<Poset> all_posets_general(int n, int max_n) {
    if (n < 1) throw SizeBoundError("all_posets_general requires n >= 1");
    if (n > max_n)
        throw SizeBoundError("all_posets_general bound " + std::to_string(max_n) +
                             " exceeded by n = " + std::to_string(n));
    std::vector<Poset> level{Poset::from_relations(1, {})};
    for (int k = 2; k <= n; ++k) {
        std::map<CanonicalForm, Poset> dedup;
        for (const Poset& parent : level)
            for (Subset d = 0; d <= parent.ground_set(); ++d) {
                if (!is_down_closed(parent, d)) continue;
                for (Subset u = 0; u <= parent.ground_set(); ++u) {
                    if (u & d) continue;
                    if (!is_up_closed(parent, u)) continue;
                    // transitivity through the new element must already hold
                    bool ok = true;
                    for (int x : subset_elements(d))
                        if (u & ~parent.above(x)) {
                            ok = false;
                            break;
                        }
                    if (!ok) continue;
                    Poset child = extend(parent, d, u);
                    dedup.try_emplace(canonical_form(child, n), std::move(child));
                }
            }
        level = sorted_by_canon(std::move(dedup));
    }
    return level;
}

std::vector<Poset> all_posets_matrix_scan(int n) {
    if (n < 1 || n > 5)
        throw SizeBoundError("all_posets_matrix_scan handles only 1 <= n <= 5");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int m = static_cast<int>(pairs.size());
    std::map<CanonicalForm, Poset> dedup;
    std::vector<int> choice(m, 0);  // 0: incomparable, 1: i<j, 2: j<i
    while (true) {
        std::vector<Subset> above(n, 0);
        for (int k = 0; k < m; ++k) {
            auto [i, j] = pairs[k];
            if (choice[k] == 1) above[i] |= Subset{1} << j;
            if (choice[k] == 2) above[j] |= Subset{1} << i;
        }
        bool transitive = true;
        for (int x = 0; x < n && transitive; ++x)
            for (int y : subset_elements(above[x]))
                if (above[y] & ~above[x]) {
                    transitive = false;
                    break;
                }
        if (transitive) {
            Poset p = Poset::from_closed_masks(std::move(above));
            dedup.try_emplace(canonical_form(p, n), std::move(p));
        }
        int k = 0;
        while (k < m && choice[k] == 2) choice[k++] = 0;
        if (k == m) break;
        ++choice[k];
    }
    return sorted_by_canon(std::move(dedup));
}

namespace {

// Backtracking order-embedding with two prescribed images.
bool embed_search(const Poset& p, const Poset& q, std::vector<int>& image, Subset& used,
                  const std::vector<int>& order, size_t k) {
    if (k == order.size()) return true;
    int v = order[k];
    for (int w = 0; w < q.size(); ++w) {
        if (subset_contains(used, w)) continue;
        bool ok = true;
        for (int u = 0; u < p.size() && ok; ++u) {
            if (image[u] < 0 || u == v) continue;
            if (p.less(u, v) != q.less(image[u], w)) ok = false;
            if (p.less(v, u) != q.less(w, image[u])) ok = false;
        }
        if (!ok) continue;
        image[v] = w;
        used |= Subset{1} << w;
        if (embed_search(p, q, image, used, order, k + 1)) return true;
        image[v] = -1;
        used &= ~(Subset{1} << w);
    }
    return false;
}

bool embeds_impl(const PinnedTriple& t1, const PinnedTriple& t2) {
    const Poset& p = t1.poset;
    const Poset& q = t2.poset;
    if (p.size() > q.size()) return false;
    if (t1.a == t1.b || t2.a == t2.b) throw IndexError("pins must be distinct");
    std::vector<int> image(p.size(), -1);
    Subset used = 0;
    // seed the pins, then extend most-constrained-first
    image[t1.a] = t2.a;
    image[t1.b] = t2.b;
    used = (Subset{1} << t2.a) | (Subset{1} << t2.b);
    if (p.less(t1.a, t1.b) != q.less(t2.a, t2.b)) return false;
    if (p.less(t1.b, t1.a) != q.less(t2.b, t2.a)) return false;
    std::vector<int> order;
    for (int v = 0; v < p.size(); ++v)
        if (v != t1.a && v != t1.b) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return subset_size(p.comparables(x)) > subset_size(p.comparables(y));
    });
    return embed_search(p, q, image, used, order, 0);
}

}  // namespace

bool embeds_pinned(const PinnedTriple& t1, const PinnedTriple& t2) {
    return embeds_impl(t1, t2);
}

bool isomorphic_pinned(const PinnedTriple& t1, const PinnedTriple& t2) {
    // A bijective order-embedding is an isomorphism.
    return t1.poset.size() == t2.poset.size() && embeds_impl(t1, t2);
}

bool isomorphic(const Poset& p, const Poset& q) {
    if (p.size() != q.size()) return false;
    int bound = std::max(p.size(), 10);
    return canonical_form(p, bound) == canonical_form(q, bound);
}

}  // namespace indeco
