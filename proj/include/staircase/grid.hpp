#pragma once

// Staircase griddings: chop a 1324-avoider into cells by index/value dividers
// so that the cells on the staircase diagonal avoid 213 and the cells just
// below it avoid 132.  The greedy construction proves every 1324-avoider fits.

#include "staircase/perm.hpp"

namespace staircase {

enum class CellLabel { Av213, Av132, Empty };

struct GriddedPermutation {
    Permutation perm;
    // boundaries in half-open convention: band k spans [div[k-1], div[k])
    std::vector<int> cols;  // 1 = c_1 <= ... <= c_{t+1} = n+1 (entry indices)
    std::vector<int> rows;  // 1 = r_1 <= ... <= r_{u+1} = n+1 (values)
    // labels[k][l]: column band k (left to right), row band l by ascending value
    std::vector<std::vector<CellLabel>> labels;

    int column_bands() const { return static_cast<int>(cols.size()) - 1; }
    int row_bands() const { return static_cast<int>(rows.size()) - 1; }

    // entries of one cell as a pattern
    Permutation cell_pattern(int k, int l) const {
        std::vector<int> vals;
        for (int i = cols[static_cast<size_t>(k)]; i < cols[static_cast<size_t>(k) + 1]; ++i) {
            int v = perm(i);
            if (v >= rows[static_cast<size_t>(l)] && v < rows[static_cast<size_t>(l) + 1])
                vals.push_back(v);
        }
        std::vector<int> sorted = vals;
        std::sort(sorted.begin(), sorted.end());
        for (int& v : vals)
            v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
        return Permutation::unchecked(std::move(vals));
    }
};

inline void check_dividers(const GriddedPermutation& g) {
    int n = g.perm.size();
    auto check = [n](const std::vector<int>& d) {
        if (d.size() < 2 || d.front() != 1 || d.back() != n + 1)
            throw std::invalid_argument("malformed dividers: wrong boundaries");
        for (size_t i = 1; i < d.size(); ++i)
            if (d[i] < d[i - 1]) throw std::invalid_argument("malformed dividers: not monotone");
    };
    check(g.cols);
    check(g.rows);
    if (static_cast<int>(g.labels.size()) != g.column_bands())
        throw std::invalid_argument("malformed dividers: label matrix shape");
    for (const auto& col : g.labels)
        if (static_cast<int>(col.size()) != g.row_bands())
            throw std::invalid_argument("malformed dividers: label matrix shape");
}

// True iff every cell's content belongs to the cell's class.
inline bool validate_gridding(const GriddedPermutation& g) {
    check_dividers(g);
    for (int k = 0; k < g.column_bands(); ++k)
        for (int l = 0; l < g.row_bands(); ++l) {
            Permutation cell = g.cell_pattern(k, l);
            switch (g.labels[static_cast<size_t>(k)][static_cast<size_t>(l)]) {
                case CellLabel::Empty:
                    if (cell.size() != 0) return false;
                    break;
                case CellLabel::Av213:
                    if (detail::contains_vals(cell.values, {2, 1, 3})) return false;
                    break;
                case CellLabel::Av132:
                    if (detail::contains_vals(cell.values, {1, 3, 2})) return false;
                    break;
            }
        }
    return true;
}

namespace detail {

// anchor trace of the greedy construction, for the invariant checks
struct GreedyResult {
    GriddedPermutation gridding;
    std::vector<int> anchors;  // indices of p_2, p_3, ... in selection order
};

inline GreedyResult greedy_grid_traced(const Permutation& sigma) {
    if (detail::contains_vals(sigma.values, {1, 3, 2, 4}))
        throw std::invalid_argument("greedy gridding requires a 1324-avoiding permutation");
    int n = sigma.size();
    std::vector<int> col_divs, row_divs;  // inserted dividers, in insertion order
    std::vector<int> anchors;
    int col_lo = 1;      // points right of the last column divider: index >= col_lo
    int row_hi = n + 1;  // points below the last row divider: value < row_hi
    for (int step = 2;; ++step) {
        if (step % 2 == 0) {
            // uppermost point acting as the 1 of a 213 whose three points all
            // have indices >= col_lo: the 1 sits in the middle, so we need an
            // earlier higher point (the 2) and a later still-higher point (the 3)
            int best = 0, best_idx = 0;
            for (int i = col_lo; i <= n; ++i) {
                int vi = sigma(i);
                bool acts = false;
                for (int a = col_lo; a < i && !acts; ++a) {
                    if (sigma(a) <= vi) continue;
                    for (int b = i + 1; b <= n; ++b)
                        if (sigma(b) > sigma(a)) {
                            acts = true;
                            break;
                        }
                }
                if (acts && vi > best) {
                    best = vi;
                    best_idx = i;
                }
            }
            if (best == 0) break;
            anchors.push_back(best_idx);
            row_divs.push_back(best + 1);  // row divider immediately above p_i
            row_hi = best + 1;
        } else {
            // leftmost point acting as the 2 of a 132 whose three points all
            // have values < row_hi: the 2 sits last, so we need an earlier
            // lower point (the 1) followed by a point above ours (the 3)
            int best_idx = 0;
            for (int i = 1; i <= n && best_idx == 0; ++i) {
                int vi = sigma(i);
                if (vi >= row_hi) continue;
                for (int a = 1; a < i && best_idx == 0; ++a) {
                    if (sigma(a) >= vi) continue;
                    for (int b = a + 1; b < i; ++b)
                        if (sigma(b) > vi && sigma(b) < row_hi) {
                            best_idx = i;
                            break;
                        }
                }
            }
            if (best_idx == 0) break;
            anchors.push_back(best_idx);
            col_divs.push_back(best_idx);  // column divider immediately left of p_i
            col_lo = best_idx;
        }
    }

    GriddedPermutation g;
    g.perm = sigma;
    g.cols.push_back(1);
    for (int c : col_divs) g.cols.push_back(c);
    g.cols.push_back(n + 1);
    g.rows.push_back(1);
    for (auto it = row_divs.rbegin(); it != row_divs.rend(); ++it) g.rows.push_back(*it);
    g.rows.push_back(n + 1);
    int t = g.column_bands(), u = g.row_bands();
    g.labels.assign(static_cast<size_t>(t), std::vector<CellLabel>(static_cast<size_t>(u), CellLabel::Empty));
    if (n > 0) {
        // column band k (1-based) holds staircase cell 2k-1 (Av213) in the k-th
        // row band from the top and cell 2k (Av132) in the next one down
        for (int k = 1; k <= t; ++k) {
            int top = u + 1 - k;  // ascending row index of the k-th band from the top
            if (top >= 1) g.labels[static_cast<size_t>(k - 1)][static_cast<size_t>(top - 1)] = CellLabel::Av213;
            if (top - 1 >= 1)
                g.labels[static_cast<size_t>(k - 1)][static_cast<size_t>(top - 2)] = CellLabel::Av132;
        }
    }
    return {std::move(g), std::move(anchors)};
}

}  // namespace detail

inline GriddedPermutation greedy_grid(const Permutation& sigma) {
    return detail::greedy_grid_traced(sigma).gridding;
}

// number of staircase (non-Empty) cells holding at least one entry
inline int cells_used(const GriddedPermutation& g) {
    int c = 0;
    for (int k = 0; k < g.column_bands(); ++k)
        for (int l = 0; l < g.row_bands(); ++l)
            if (g.labels[static_cast<size_t>(k)][static_cast<size_t>(l)] != CellLabel::Empty &&
                g.cell_pattern(k, l).size() > 0)
                ++c;
    return c;
}

}  // namespace staircase
