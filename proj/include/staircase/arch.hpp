#pragma once

// Arch systems and arch configurations: the Catalan-side pictures of the two
// domino cells, with the maps in both directions.  Arcs join positions whose
// values are consecutive; the whole domino becomes an interleaved pair of
// arch systems, and the 1324-avoidance of the domino becomes a single
// four-point forbidden pattern between the two systems.

#include <map>

#include "staircase/domino.hpp"

namespace staircase {

inline BigInt catalan(long n) { return binomial(2 * n, n) / BigInt(n + 1); }

struct ArchSystem {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // (i, j) with 1 <= i < j <= n, sorted

    void normalize() { std::sort(arcs.begin(), arcs.end()); }

    bool valid() const {
        std::vector<int> left(static_cast<size_t>(n) + 1, 0), right(static_cast<size_t>(n) + 1, 0);
        for (auto [i, j] : arcs) {
            if (i < 1 || j > n || i >= j) return false;
            if (++left[static_cast<size_t>(i)] > 1) return false;
            if (++right[static_cast<size_t>(j)] > 1) return false;
        }
        for (size_t x = 0; x < arcs.size(); ++x)
            for (size_t y = x + 1; y < arcs.size(); ++y) {
                auto [a, b] = arcs[x];
                auto [c, d] = arcs[y];
                if (a < c && c < b && b < d) return false;  // crossing
            }
        return true;
    }

    bool operator==(const ArchSystem& o) const { return n == o.n && arcs == o.arcs; }
    bool operator<(const ArchSystem& o) const {
        return n != o.n ? n < o.n : arcs < o.arcs;
    }
};

// Arcs of a permutation: (i, j) with i < j and p(j) = p(i) + 1.  Defined for
// any 213- or 132-avoider; for those the arcs never cross.
inline ArchSystem lambda_map(const Permutation& p) {
    if (detail::contains_vals(p.values, {2, 1, 3}) && detail::contains_vals(p.values, {1, 3, 2}))
        throw std::invalid_argument("lambda_map requires a 213- or 132-avoiding permutation");
    int n = p.size();
    std::vector<int> pos(static_cast<size_t>(n) + 2, 0);
    for (int i = 1; i <= n; ++i) pos[static_cast<size_t>(p(i))] = i;
    ArchSystem a{n, {}};
    for (int v = 1; v < n; ++v) {
        int i = pos[static_cast<size_t>(v)], j = pos[static_cast<size_t>(v + 1)];
        if (i < j) a.arcs.emplace_back(i, j);
    }
    a.normalize();
    assert(a.valid());
    return a;
}

namespace detail {

// Inverse construction, shared by both reading conventions.  A system splits
// at every gap no arc spans; splitting maps to the skew sum.  An unsplittable
// system on m > 1 points is a chain of arcs c0-c1-...-ck with arbitrary
// systems strictly inside each arc.  The chain points carry an increasing run
// of k+1 values -- the lowest values when run_low (yielding a 213-avoider),
// the highest otherwise (yielding a 132-avoider) -- and the inner blocks
// stack on the other side of the run, leftmost block on top.
inline std::vector<int> pi_values(int n, const std::vector<std::pair<int, int>>& arcs, bool run_low) {
    if (n == 0) return {};
    // gaps spanned by an arc
    std::vector<bool> spanned(static_cast<size_t>(n), false);  // gap g: between g and g+1
    for (auto [i, j] : arcs)
        for (int g = i; g < j; ++g) spanned[static_cast<size_t>(g)] = true;

    // components -> skew sum, leftmost on top
    std::vector<std::pair<int, int>> comps;
    int lo = 1;
    for (int g = 1; g <= n; ++g)
        if (g == n || !spanned[static_cast<size_t>(g)]) {
            comps.emplace_back(lo, g);
            lo = g + 1;
        }
    auto restrict_arcs = [&](int a, int b) {
        std::vector<std::pair<int, int>> sub;
        for (auto [i, j] : arcs)
            if (i >= a && j <= b) sub.emplace_back(i - a + 1, j - a + 1);
        return sub;
    };
    if (comps.size() > 1) {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(n));
        int above = n;  // size of the value band still unassigned above us
        for (auto [a, b] : comps) {
            int m = b - a + 1;
            int offset = above - m;
            for (int v : pi_values(m, restrict_arcs(a, b), run_low)) out.push_back(v + offset);
            above = offset;
        }
        return out;
    }

    if (n == 1) return {1};

    // chain of the single component: from point 1 follow left-end arcs
    std::vector<int> arc_from(static_cast<size_t>(n) + 1, 0);
    for (auto [i, j] : arcs) {
        assert(arc_from[static_cast<size_t>(i)] == 0);
        if (arc_from[static_cast<size_t>(i)] == 0) arc_from[static_cast<size_t>(i)] = j;
    }
    std::vector<int> chain{1};
    while (chain.back() != n) {
        int next = arc_from[static_cast<size_t>(chain.back())];
        assert(next != 0);
        chain.push_back(next);
    }
    int k = static_cast<int>(chain.size()) - 1;  // number of chain arcs

    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < k; ++i)
        blocks.push_back(pi_values(chain[static_cast<size_t>(i + 1)] - chain[static_cast<size_t>(i)] - 1,
                                   restrict_arcs(chain[static_cast<size_t>(i)] + 1,
                                                 chain[static_cast<size_t>(i + 1)] - 1),
                                   run_low));

    std::vector<int> out(static_cast<size_t>(n), 0);
    int run_base = run_low ? 0 : n - k - 1;  // run values run_base+1 .. run_base+k+1
    for (int i = 0; i <= k; ++i) out[static_cast<size_t>(chain[static_cast<size_t>(i)] - 1)] = run_base + i + 1;
    // blocks stack left-to-right downward on the far side of the run
    int above = run_low ? n : n - k - 1;
    for (int i = 0; i < k; ++i) {
        const auto& blk = blocks[static_cast<size_t>(i)];
        int m = static_cast<int>(blk.size());
        int offset = above - m;
        for (int t = 0; t < m; ++t)
            out[static_cast<size_t>(chain[static_cast<size_t>(i)] + t)] = blk[static_cast<size_t>(t)] + offset;
        above = offset;
    }
    return out;
}

}  // namespace detail

// The 213-avoiding permutation with lambda_map equal to the given system.
inline Permutation pi_213(const ArchSystem& a) {
    if (!a.valid()) throw std::invalid_argument("invalid arch system");
    return Permutation::unchecked(detail::pi_values(a.n, a.arcs, true));
}

// The 132-avoiding permutation with lambda_map equal to the given system.
inline Permutation pi_132(const ArchSystem& a) {
    if (!a.valid()) throw std::invalid_argument("invalid arch system");
    return Permutation::unchecked(detail::pi_values(a.n, a.arcs, false));
}

// Visit every arch system on n points.  Recursion: the first point is either
// arc-free, or starts an arc to some j with an independent system strictly
// inside and another on j..n (j may chain onward as a left end).
inline void enumerate_arch_systems(int n, const std::function<bool(const ArchSystem&)>& yield) {
    std::function<std::vector<std::vector<std::pair<int, int>>>(int, int)> gen =
        [&](int lo, int hi) -> std::vector<std::vector<std::pair<int, int>>> {
        std::vector<std::vector<std::pair<int, int>>> out;
        if (lo > hi) {
            out.push_back({});
            return out;
        }
        for (auto& rest : gen(lo + 1, hi)) out.push_back(std::move(rest));
        for (int j = lo + 1; j <= hi; ++j)
            for (const auto& inner : gen(lo + 1, j - 1))
                for (const auto& outer : gen(j, hi)) {
                    std::vector<std::pair<int, int>> arcs{{lo, j}};
                    arcs.insert(arcs.end(), inner.begin(), inner.end());
                    arcs.insert(arcs.end(), outer.begin(), outer.end());
                    out.push_back(std::move(arcs));
                }
        return out;
    };
    for (auto& arcs : gen(1, n)) {
        ArchSystem a{n, std::move(arcs)};
        a.normalize();
        if (!yield(a)) return;
    }
}

// ---------------------------------------------------------------------------
// Arch configurations: an upper and a lower system interleaved on one line.
// Arcs are stored on global indices; each system's point set is the set of
// indices carrying its side label.
// ---------------------------------------------------------------------------

enum class Side { Upper, Lower };

struct ArchConfiguration {
    int n = 0;
    std::vector<Side> sides;  // size n
    ArchSystem upper;         // arcs on global indices, Upper endpoints only
    ArchSystem lower;

    bool valid() const {
        if (static_cast<int>(sides.size()) != n) return false;
        if (upper.n != n || lower.n != n) return false;
        if (!upper.valid() || !lower.valid()) return false;
        for (auto [i, j] : upper.arcs)
            if (sides[static_cast<size_t>(i - 1)] != Side::Upper ||
                sides[static_cast<size_t>(j - 1)] != Side::Upper)
                return false;
        for (auto [i, j] : lower.arcs)
            if (sides[static_cast<size_t>(i - 1)] != Side::Lower ||
                sides[static_cast<size_t>(j - 1)] != Side::Lower)
                return false;
        return true;
    }

    bool operator==(const ArchConfiguration& o) const {
        return n == o.n && sides == o.sides && upper == o.upper && lower == o.lower;
    }
};

// A lower arc (a, c) interleaved with an upper arc (b, d) as a < b < c < d.
// This is the image of 1324 under the correspondence: such a configuration
// never comes from a domino.
inline bool has_forbidden_pattern(const ArchConfiguration& c) {
    for (auto [a, cc] : c.lower.arcs)
        for (auto [b, d] : c.upper.arcs)
            if (a < b && b < cc && cc < d) return true;
    return false;
}

namespace detail {

// global positions carrying one side label
inline std::vector<int> side_positions(const ArchConfiguration& c, Side s) {
    std::vector<int> pos;
    for (int i = 1; i <= c.n; ++i)
        if (c.sides[static_cast<size_t>(i - 1)] == s) pos.push_back(i);
    return pos;
}

// arcs of a global-index system relabeled to local indices within pos
inline ArchSystem to_local(const ArchSystem& global, const std::vector<int>& pos) {
    std::map<int, int> local;
    for (size_t i = 0; i < pos.size(); ++i) local[pos[i]] = static_cast<int>(i) + 1;
    ArchSystem a{static_cast<int>(pos.size()), {}};
    for (auto [i, j] : global.arcs) a.arcs.emplace_back(local.at(i), local.at(j));
    a.normalize();
    return a;
}

}  // namespace detail

inline ArchConfiguration arch_config_of_domino(const Domino& d) {
    if (!d.valid()) throw std::invalid_argument("invalid domino");
    int n = d.size();
    ArchConfiguration c;
    c.n = n;
    for (int i = 1; i <= n; ++i)
        c.sides.push_back(d.perm(i) >= d.threshold ? Side::Upper : Side::Lower);
    std::vector<int> up = detail::side_positions(c, Side::Upper);
    std::vector<int> low = detail::side_positions(c, Side::Lower);
    ArchSystem lu = lambda_map(d.top_cell());
    ArchSystem ll = lambda_map(d.bottom_cell());
    c.upper.n = c.lower.n = n;
    for (auto [i, j] : lu.arcs)
        c.upper.arcs.emplace_back(up[static_cast<size_t>(i - 1)], up[static_cast<size_t>(j - 1)]);
    for (auto [i, j] : ll.arcs)
        c.lower.arcs.emplace_back(low[static_cast<size_t>(i - 1)], low[static_cast<size_t>(j - 1)]);
    c.upper.normalize();
    c.lower.normalize();
    return c;
}

inline Domino domino_of_arch_config(const ArchConfiguration& c) {
    if (!c.valid()) throw std::invalid_argument("invalid arch configuration");
    if (has_forbidden_pattern(c))
        throw std::invalid_argument("configuration contains the forbidden pattern");
    std::vector<int> up = detail::side_positions(c, Side::Upper);
    std::vector<int> low = detail::side_positions(c, Side::Lower);
    Permutation top = pi_213(detail::to_local(c.upper, up));
    Permutation bottom = pi_132(detail::to_local(c.lower, low));
    int b = static_cast<int>(low.size());
    std::vector<int> vals(static_cast<size_t>(c.n), 0);
    for (size_t i = 0; i < up.size(); ++i)
        vals[static_cast<size_t>(up[i] - 1)] = top.values[i] + b;
    for (size_t i = 0; i < low.size(); ++i)
        vals[static_cast<size_t>(low[i] - 1)] = bottom.values[i];
    Domino d{Permutation::unchecked(std::move(vals)), b + 1};
    assert(d.valid());
    return d;
}

// Visit every forbidden-pattern-free configuration on n points: an oracle for
// the domino counts that never looks at permutations.
inline void enumerate_arch_configs(int n, const std::function<bool(const ArchConfiguration&)>& yield) {
    // iterate side words, then independent systems on each side
    for (long mask = 0; mask < (1L << n); ++mask) {
        ArchConfiguration base;
        base.n = n;
        std::vector<int> up, low;
        for (int i = 1; i <= n; ++i) {
            bool u = (mask >> (i - 1)) & 1;
            base.sides.push_back(u ? Side::Upper : Side::Lower);
            (u ? up : low).push_back(i);
        }
        bool keep_going = true;
        enumerate_arch_systems(static_cast<int>(up.size()), [&](const ArchSystem& su) {
            enumerate_arch_systems(static_cast<int>(low.size()), [&](const ArchSystem& sl) {
                ArchConfiguration c = base;
                c.upper.n = c.lower.n = n;
                for (auto [i, j] : su.arcs)
                    c.upper.arcs.emplace_back(up[static_cast<size_t>(i - 1)], up[static_cast<size_t>(j - 1)]);
                for (auto [i, j] : sl.arcs)
                    c.lower.arcs.emplace_back(low[static_cast<size_t>(i - 1)], low[static_cast<size_t>(j - 1)]);
                c.upper.normalize();
                c.lower.normalize();
                keep_going = yield(c);
                return keep_going;
            });
            return keep_going;
        });
        if (!keep_going) return;
    }
}

inline BigInt count_pattern_free_configs(int n) {
    BigInt c = 0;
    enumerate_arch_configs(n, [&](const ArchConfiguration& cfg) {
        if (!has_forbidden_pattern(cfg)) c += 1;
        return true;
    });
    return c;
}

// ---------------------------------------------------------------------------
// Concatenation.  Placing one configuration after another can create no new
// crossing and no forbidden pattern, so dominoes concatenate through their
// configurations; splitting at the seam recovers the operands.
// ---------------------------------------------------------------------------

inline ArchConfiguration concat(const ArchConfiguration& a, const ArchConfiguration& b) {
    ArchConfiguration c = a;
    c.n = a.n + b.n;
    c.sides.insert(c.sides.end(), b.sides.begin(), b.sides.end());
    c.upper.n = c.lower.n = c.n;
    for (auto [i, j] : b.upper.arcs) c.upper.arcs.emplace_back(i + a.n, j + a.n);
    for (auto [i, j] : b.lower.arcs) c.lower.arcs.emplace_back(i + a.n, j + a.n);
    return c;
}

// Split at the seam after position k; errors if an arc spans the seam.
inline std::pair<ArchConfiguration, ArchConfiguration> split_config(const ArchConfiguration& c, int k) {
    if (k < 0 || k > c.n) throw std::invalid_argument("split point out of range");
    ArchConfiguration a, b;
    a.n = k;
    b.n = c.n - k;
    a.sides.assign(c.sides.begin(), c.sides.begin() + k);
    b.sides.assign(c.sides.begin() + k, c.sides.end());
    a.upper.n = a.lower.n = a.n;
    b.upper.n = b.lower.n = b.n;
    auto distribute = [&](const ArchSystem& src, ArchSystem& first, ArchSystem& second) {
        for (auto [i, j] : src.arcs) {
            if (i <= k && j > k) throw std::invalid_argument("an arc spans the split point");
            if (j <= k)
                first.arcs.emplace_back(i, j);
            else
                second.arcs.emplace_back(i - k, j - k);
        }
    };
    distribute(c.upper, a.upper, b.upper);
    distribute(c.lower, a.lower, b.lower);
    return {a, b};
}

// The domino product: concatenate through the arch configurations.
inline Domino domino_concat(const Domino& d1, const Domino& d2) {
    return domino_of_arch_config(concat(arch_config_of_domino(d1), arch_config_of_domino(d2)));
}

}  // namespace staircase
