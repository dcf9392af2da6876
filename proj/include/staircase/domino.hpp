#pragma once

// Dominoes: a permutation avoiding 1324 together with a horizontal value cut,
// such that the values on/above the cut form a 213-avoider and the values
// below form a 132-avoider.  These are the two-cell building blocks of the
// staircase decomposition.

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "staircase/perm.hpp"
#include "staircase/series.hpp"

namespace staircase {

struct Domino {
    Permutation perm;
    int threshold = 1;  // values >= threshold live in the top cell; 1..n+1

    int size() const { return perm.size(); }

    // pattern of the entries with values >= threshold (the top, 213-avoiding cell)
    Permutation top_cell() const { return cell_pattern(true); }
    // pattern of the entries with values < threshold (the bottom, 132-avoiding cell)
    Permutation bottom_cell() const { return cell_pattern(false); }

    Permutation cell_pattern(bool top) const {
        std::vector<int> vals;
        for (int v : perm.values)
            if ((v >= threshold) == top) vals.push_back(v);
        std::vector<int> sorted = vals;
        std::sort(sorted.begin(), sorted.end());
        for (int& v : vals)
            v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
        return Permutation::unchecked(std::move(vals));
    }

    bool valid() const {
        if (threshold < 1 || threshold > perm.size() + 1) return false;
        if (detail::contains_vals(perm.values, {1, 3, 2, 4})) return false;
        if (detail::contains_vals(top_cell().values, {2, 1, 3})) return false;
        if (detail::contains_vals(bottom_cell().values, {1, 3, 2})) return false;
        return true;
    }

    bool operator==(const Domino& o) const { return perm == o.perm && threshold == o.threshold; }

    // Reverse positions and complement values; the cut flips with the values,
    // so the two cells trade places and roles.
    Domino rotate180() const {
        int n = perm.size();
        std::vector<int> vals(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            vals[static_cast<size_t>(n - 1 - i)] = n + 1 - perm.values[static_cast<size_t>(i)];
        return Domino{Permutation::unchecked(std::move(vals)), n + 2 - threshold};
    }
};

// Visit every domino of size n: for each 1324-avoider, the valid thresholds
// in ascending order.  Return false from yield to stop early.
inline void enumerate_dominoes(int n, const std::function<bool(const Domino&)>& yield) {
    Permutation p1324 = Permutation::from_text("1324");
    enumerate_avoiders(n, p1324, [&](const Permutation& p) {
        for (int r = 1; r <= n + 1; ++r) {
            Domino d{p, r};
            if (detail::contains_vals(d.top_cell().values, {2, 1, 3})) continue;
            if (detail::contains_vals(d.bottom_cell().values, {1, 3, 2})) continue;
            if (!yield(d)) return false;
        }
        return true;
    });
}

// Count dominoes of size n by direct enumeration, optionally partitioning
// the avoider stream across threads by first entry.
inline BigInt count_dominoes_brute(int n, int threads = 1) {
    if (n == 0) return 1;  // the empty permutation with its single cut
    Permutation p1324 = Permutation::from_text("1324");
    auto count_part = [&](int first) {
        BigInt c = 0;
        enumerate_avoiders(
            n, p1324,
            [&](const Permutation& p) {
                for (int r = 1; r <= n + 1; ++r) {
                    Domino d{p, r};
                    if (detail::contains_vals(d.top_cell().values, {2, 1, 3})) continue;
                    if (detail::contains_vals(d.bottom_cell().values, {1, 3, 2})) continue;
                    c += 1;
                }
                return true;
            },
            first);
        return c;
    };
    if (threads <= 1) {
        BigInt total = 0;
        for (int f = 1; f <= n; ++f) total += count_part(f);
        return total;
    }
    std::vector<BigInt> partial(static_cast<size_t>(n));
    std::vector<std::thread> pool;
    std::atomic<int> next{1};
    int nworkers = std::min(threads, n);
    for (int w = 0; w < nworkers; ++w)
        pool.emplace_back([&] {
            for (int f = next.fetch_add(1); f <= n; f = next.fetch_add(1))
                partial[static_cast<size_t>(f - 1)] = count_part(f);
        });
    for (auto& t : pool) t.join();
    BigInt total = 0;
    for (const BigInt& c : partial) total += c;
    return total;
}

// ---------------------------------------------------------------------------
// Leaf and strip statistics.
//
// A leaf of the top cell is a right-to-left maximum of its pattern; a leaf of
// the bottom cell is a left-to-right minimum.  Within one cell, the r
// non-leaf values cut the cell's value range into r+1 strips; a strip holding
// no leaf is empty.  The strip at the cell's gluing edge (bottom edge of the
// top cell, top edge of the bottom cell) may or may not be counted: the
// "medial" statistic excludes it, while the constrained counts below admit
// it.  The strip at the opposite edge always holds the cell's extreme entry,
// which is always a leaf, so it is never empty.
// ---------------------------------------------------------------------------

struct CellStats {
    int leaves = 0;          // RL maxima (top cell) or LR minima (bottom cell)
    int empty_medial = 0;    // empty strips, gluing-edge strip excluded
    int empty_with_edge = 0; // empty strips, gluing-edge strip included
};

namespace detail {

// Walk the cell's values from the gluing edge outward; non-leaf values close
// one strip and open the next, and a strip that saw no leaf is empty.
inline CellStats cell_stats(const std::vector<int>& pattern, bool top) {
    CellStats s;
    int n = static_cast<int>(pattern.size());
    std::vector<bool> is_leaf(static_cast<size_t>(n) + 1, false);
    if (top) {
        // right-to-left maxima
        int best = 0;
        for (int i = n - 1; i >= 0; --i)
            if (pattern[static_cast<size_t>(i)] > best) {
                best = pattern[static_cast<size_t>(i)];
                is_leaf[static_cast<size_t>(best)] = true;
                ++s.leaves;
            }
    } else {
        // left-to-right minima
        int best = n + 1;
        for (int i = 0; i < n; ++i)
            if (pattern[static_cast<size_t>(i)] < best) {
                best = pattern[static_cast<size_t>(i)];
                is_leaf[static_cast<size_t>(best)] = true;
                ++s.leaves;
            }
    }
    // Walk values from the gluing edge outward.  For the top cell the gluing
    // edge is at the bottom (value 1 side); for the bottom cell, at the top.
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    if (top)
        for (int v = 1; v <= n; ++v) order.push_back(v);
    else
        for (int v = n; v >= 1; --v) order.push_back(v);
    int strip_index = 0;  // strip 0 touches the gluing edge
    bool strip_has_leaf = false;
    auto close_strip = [&] {
        if (!strip_has_leaf) {
            ++s.empty_with_edge;
            if (strip_index > 0) ++s.empty_medial;
        }
    };
    for (int v : order) {
        if (is_leaf[static_cast<size_t>(v)]) {
            strip_has_leaf = true;
        } else {
            close_strip();
            ++strip_index;
            strip_has_leaf = false;
        }
    }
    close_strip();
    return s;
}

}  // namespace detail

struct DominoStats {
    CellStats top;
    CellStats bottom;
    int leaves() const { return top.leaves + bottom.leaves; }
    int empty_strips() const { return top.empty_medial + bottom.empty_medial; }
};

inline DominoStats stats(const Domino& d) {
    DominoStats s;
    s.top = detail::cell_stats(d.top_cell().values, true);
    s.bottom = detail::cell_stats(d.bottom_cell().values, false);
    return s;
}

// ---------------------------------------------------------------------------
// Split counts: dominoes refined by how many entries land in each cell.
// ---------------------------------------------------------------------------

inline int top_count(const Domino& d) {
    int t = 0;
    for (int v : d.perm.values)
        if (v >= d.threshold) ++t;
    return t;
}

// dominoes of size t + b with exactly t top entries and b bottom entries,
// by enumeration
inline BigInt count_dominoes_by_split_brute(int t, int b) {
    BigInt c = 0;
    enumerate_dominoes(t + b, [&](const Domino& d) {
        if (top_count(d) == t) c += 1;
        return true;
    });
    return c;
}

// same number from the functional equation with the top mark
inline BigInt count_dominoes_by_split(int t, int b, const MarkedSeries& split) {
    if (t < 0 || b < 0 || t + b > split.order)
        throw std::invalid_argument("split count outside series order");
    return split.coeff(t + b).coeff(t);
}

// dominoes of size 2m with an m/m split
inline BigInt count_balanced(int m, const MarkedSeries& split) {
    return count_dominoes_by_split(m, m, split);
}

// Balanced dominoes of size 2m in which each cell has at least ceil(alpha*m)
// leaves and at least ceil(beta*m) + 1 empty strips (edge strip admitted).
// Brute force; sizes past the ceiling are refused rather than left to run
// for hours.
inline BigInt count_constrained_balanced(int m, const Rational& alpha, const Rational& beta,
                                         int max_n = 9) {
    if (2 * m > max_n)
        throw std::invalid_argument("constrained balanced count: size exceeds enumeration ceiling");
    BigInt am_num = alpha.get_num() * m, bm_num = beta.get_num() * m;
    // ceil(p*m/q)
    auto ceil_frac = [](const BigInt& num, const BigInt& den) {
        BigInt q;
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return static_cast<int>(q.get_si());
    };
    int need_leaves = ceil_frac(am_num, alpha.get_den());
    int need_empty = ceil_frac(bm_num, beta.get_den()) + 1;
    BigInt c = 0;
    enumerate_dominoes(2 * m, [&](const Domino& d) {
        if (top_count(d) != m) return true;
        DominoStats s = stats(d);
        if (s.top.leaves >= need_leaves && s.bottom.leaves >= need_leaves &&
            s.top.empty_with_edge >= need_empty && s.bottom.empty_with_edge >= need_empty)
            c += 1;
        return true;
    });
    return c;
}

}  // namespace staircase
