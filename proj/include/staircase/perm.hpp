#pragma once

// Permutations, pattern containment and avoider enumeration.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "staircase/bigint.hpp"

namespace staircase {

// One-line notation; values are a rearrangement of 1..n.
struct Permutation {
    std::vector<int> values;

    Permutation() = default;
    explicit Permutation(std::vector<int> v) : values(std::move(v)) {
        if (!is_valid()) throw std::invalid_argument("not a permutation of 1..n");
    }

    static Permutation unchecked(std::vector<int> v) {
        Permutation p;
        p.values = std::move(v);
        return p;
    }

    int size() const { return static_cast<int>(values.size()); }
    int operator()(int i) const { return values[static_cast<size_t>(i) - 1]; }  // 1-based
    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    bool is_valid() const {
        std::vector<char> seen(values.size() + 1, 0);
        for (int v : values) {
            if (v < 1 || v > size() || seen[static_cast<size_t>(v)]) return false;
            seen[static_cast<size_t>(v)] = 1;
        }
        return true;
    }

    // digit string for n <= 9, space-separated otherwise
    std::string to_text() const {
        std::string s;
        for (int i = 0; i < size(); ++i) {
            if (size() > 9 && i) s += ' ';
            s += std::to_string(values[static_cast<size_t>(i)]);
        }
        return s;
    }

    static Permutation from_text(const std::string& s) {
        std::vector<int> v;
        if (s.find(' ') == std::string::npos) {
            for (char c : s) {
                if (c < '1' || c > '9') throw std::invalid_argument("bad permutation text");
                v.push_back(c - '0');
            }
        } else {
            size_t pos = 0;
            while (pos < s.size()) {
                size_t next = s.find(' ', pos);
                if (next == std::string::npos) next = s.size();
                v.push_back(std::stoi(s.substr(pos, next - pos)));
                pos = next + 1;
            }
        }
        return Permutation(std::move(v));
    }

    Permutation reversed() const {
        std::vector<int> v(values.rbegin(), values.rend());
        return unchecked(std::move(v));
    }

    Permutation complemented() const {
        std::vector<int> v(values.size());
        for (size_t i = 0; i < values.size(); ++i) v[i] = size() + 1 - values[i];
        return unchecked(std::move(v));
    }
};

// sigma above-left of tau
inline Permutation skew_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(a.size() + b.size()));
    for (int x : a.values) v.push_back(x + b.size());
    for (int x : b.values) v.push_back(x);
    return Permutation::unchecked(std::move(v));
}

// Strictly increasing indices (1-based) of an occurrence in a host.
struct Occurrence {
    std::vector<int> indices;
    bool operator==(const Occurrence&) const = default;
};

namespace detail {

// Does `vals` contain an increasing (pattern 12) pair / decreasing pair?
inline bool contains_12(const std::vector<int>& vals) {
    int lo = INT32_MAX;
    for (int v : vals) {
        if (v > lo) return true;
        lo = std::min(lo, v);
    }
    return false;
}

inline bool contains_123(const std::vector<int>& vals) {
    int best1 = INT32_MAX, best2 = INT32_MAX;  // smallest end of a 1, of a 12
    for (int v : vals) {
        if (v > best2) return true;
        if (v > best1) best2 = std::min(best2, v);
        best1 = std::min(best1, v);
    }
    return false;
}

// Stack scan: 132 needs a value below some earlier ascent.
inline bool contains_132(const std::vector<int>& vals) {
    int n = static_cast<int>(vals.size());
    // For each j, the best (largest) value u < vals[j] seen before j gives a
    // potential "1"; then any later value strictly between u and vals[j] works.
    // Classic O(n) method: scan right-to-left with a stack of decreasing values.
    std::vector<int> stack;
    int third = INT32_MIN;  // candidate "2" of the 132 (value between 1 and 3)
    for (int i = n - 1; i >= 0; --i) {
        if (vals[static_cast<size_t>(i)] < third) return true;
        while (!stack.empty() && stack.back() < vals[static_cast<size_t>(i)]) {
            third = std::max(third, stack.back());
            stack.pop_back();
        }
        stack.push_back(vals[static_cast<size_t>(i)]);
    }
    return false;
}

// Pair scan with prefix minima / suffix maxima: an occurrence k l (k+1) (l+1)
// exists iff some positions i<j with vals[j]<vals[i] extend on both sides.
inline bool contains_1324(const std::vector<int>& vals) {
    int n = static_cast<int>(vals.size());
    if (n < 4) return false;
    std::vector<int> prefmin(static_cast<size_t>(n)), sufmax(static_cast<size_t>(n));
    prefmin[0] = vals[0];
    for (int i = 1; i < n; ++i)
        prefmin[static_cast<size_t>(i)] = std::min(prefmin[static_cast<size_t>(i) - 1], vals[static_cast<size_t>(i)]);
    sufmax[static_cast<size_t>(n - 1)] = vals[static_cast<size_t>(n - 1)];
    for (int i = n - 2; i >= 0; --i)
        sufmax[static_cast<size_t>(i)] = std::max(sufmax[static_cast<size_t>(i) + 1], vals[static_cast<size_t>(i)]);
    for (int j = 1; j <= n - 3; ++j)          // the "3"
        for (int k = j + 1; k <= n - 2; ++k)  // the "2"
            if (vals[static_cast<size_t>(k)] < vals[static_cast<size_t>(j)] &&
                prefmin[static_cast<size_t>(j) - 1] < vals[static_cast<size_t>(k)] &&
                sufmax[static_cast<size_t>(k) + 1] > vals[static_cast<size_t>(j)])
                return true;
    return false;
}

// Pruned backtracking over pattern positions; works for any pattern.
inline bool contains_general(const std::vector<int>& host, const std::vector<int>& pat) {
    int n = static_cast<int>(host.size()), k = static_cast<int>(pat.size());
    if (k == 0) return true;
    if (k > n) return false;
    std::vector<int> pick(static_cast<size_t>(k));  // host indices chosen so far
    std::function<bool(int, int)> go = [&](int p, int start) -> bool {
        if (p == k) return true;
        for (int i = start; i <= n - (k - p); ++i) {
            bool ok = true;
            for (int q = 0; q < p && ok; ++q) {
                bool ph = host[static_cast<size_t>(pick[static_cast<size_t>(q)])] < host[static_cast<size_t>(i)];
                bool pp = pat[static_cast<size_t>(q)] < pat[static_cast<size_t>(p)];
                if (ph != pp) ok = false;
            }
            if (ok) {
                pick[static_cast<size_t>(p)] = i;
                if (go(p + 1, i + 1)) return true;
            }
        }
        return false;
    };
    return go(0, 0);
}

inline bool contains_vals(const std::vector<int>& host, const std::vector<int>& pat);

// Length-3 patterns reduce to the 132 scan through reverse/complement symmetry.
inline bool contains_len3(const std::vector<int>& host, const std::vector<int>& pat) {
    auto rev = [](std::vector<int> v) { std::reverse(v.begin(), v.end()); return v; };
    auto cmp = [](std::vector<int> v) {
        int m = static_cast<int>(v.size());
        for (int& x : v) x = m + 1 - x;
        return v;
    };
    if (pat == std::vector<int>{1, 2, 3}) return contains_123(host);
    if (pat == std::vector<int>{3, 2, 1}) return contains_123(cmp(host));
    if (pat == std::vector<int>{1, 3, 2}) return contains_132(host);
    if (pat == std::vector<int>{2, 3, 1}) return contains_132(rev(host));      // reverse(231)=132
    if (pat == std::vector<int>{3, 1, 2}) return contains_132(cmp(host));      // complement(312)=132
    if (pat == std::vector<int>{2, 1, 3}) return contains_132(cmp(rev(host))); // rc(213)=132
    return contains_general(host, pat);
}

inline bool contains_vals(const std::vector<int>& host, const std::vector<int>& pat) {
    switch (pat.size()) {
        case 0: return true;
        case 1: return !host.empty();
        case 2:
            if (pat[0] < pat[1]) return contains_12(host);
            { std::vector<int> c(host); for (int& x : c) x = static_cast<int>(host.size()) + 1 - x; return contains_12(c); }
        case 3: return contains_len3(host, pat);
        default:
            if (pat == std::vector<int>{1, 3, 2, 4}) return contains_1324(host);
            return contains_general(host, pat);
    }
}

}  // namespace detail

inline bool contains(const Permutation& host, const Permutation& pattern) {
    return detail::contains_vals(host.values, pattern.values);
}

inline bool avoids(const Permutation& host, const Permutation& pattern) {
    return !contains(host, pattern);
}

// Subsequence (given as raw values) avoidance, for cell contents.
inline bool subseq_avoids(const std::vector<int>& vals, const std::vector<int>& pat) {
    return !detail::contains_vals(vals, pat);
}

// Occurrences in lexicographic index order, up to `limit` if given.
inline std::vector<Occurrence> find_occurrences(const Permutation& host,
                                                const Permutation& pattern,
                                                std::optional<size_t> limit = std::nullopt) {
    std::vector<Occurrence> out;
    int n = host.size(), k = pattern.size();
    if (k > n || (limit && *limit == 0)) return out;
    if (k == 0) {
        out.push_back(Occurrence{});
        return out;
    }
    std::vector<int> pick(static_cast<size_t>(k));
    std::function<bool(int, int)> go = [&](int p, int start) -> bool {
        if (p == k) {
            Occurrence o;
            for (int q = 0; q < k; ++q) o.indices.push_back(pick[static_cast<size_t>(q)] + 1);
            out.push_back(std::move(o));
            return limit && out.size() >= *limit;
        }
        for (int i = start; i <= n - (k - p); ++i) {
            bool ok = true;
            for (int q = 0; q < p && ok; ++q)
                if ((host.values[static_cast<size_t>(pick[static_cast<size_t>(q)])] < host.values[static_cast<size_t>(i)]) !=
                    (pattern.values[static_cast<size_t>(q)] < pattern.values[static_cast<size_t>(p)]))
                    ok = false;
            if (ok) {
                pick[static_cast<size_t>(p)] = i;
                if (go(p + 1, i + 1)) return true;
            }
        }
        return false;
    };
    go(0, 0);
    return out;
}

// Prefix-extension backtracking, yielding avoiders of length n in lexicographic
// order of one-line notation. The callback may return false to stop early.
// fixed_first, when nonzero, restricts to avoiders whose first entry is that
// value; enumeration streams parallelize by partitioning on it.
inline void enumerate_avoiders(int n, const Permutation& pattern,
                               const std::function<bool(const Permutation&)>& yield,
                               int fixed_first = 0) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    std::vector<int> prefix;
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    bool stop = false;
    std::function<void()> go = [&]() {
        if (stop) return;
        if (static_cast<int>(prefix.size()) == n) {
            if (!yield(Permutation::unchecked(prefix))) stop = true;
            return;
        }
        int lo = 1, hi = n;
        if (prefix.empty() && fixed_first) lo = hi = fixed_first;
        for (int v = lo; v <= hi && !stop; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            prefix.push_back(v);
            used[static_cast<size_t>(v)] = 1;
            if (!detail::contains_vals(prefix, pattern.values)) go();
            prefix.pop_back();
            used[static_cast<size_t>(v)] = 0;
        }
    };
    if (pattern.size() == 0) {
        // every nonempty prefix "contains" the empty pattern; only n=0 survives
        if (n == 0) yield(Permutation{});
        return;
    }
    go();
}

inline std::vector<Permutation> avoiders(int n, const Permutation& pattern) {
    std::vector<Permutation> out;
    enumerate_avoiders(n, pattern, [&](const Permutation& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

inline BigInt count_avoiders(int n, const Permutation& pattern) {
    BigInt c = 0;
    enumerate_avoiders(n, pattern, [&](const Permutation&) {
        ++c;
        return true;
    });
    return c;
}

// Ordered list of skew indecomposable components.
struct SkewDecomposition {
    std::vector<Permutation> components;
};

inline SkewDecomposition skew_decompose(const Permutation& p) {
    SkewDecomposition d;
    int n = p.size();
    int start = 0;      // 0-based start of current component
    int runmin = n + 1;
    for (int i = 0; i < n; ++i) {
        runmin = std::min(runmin, p.values[static_cast<size_t>(i)]);
        // first i+1 entries are exactly the top i+1 values iff runmin == n-i
        if (runmin == n - i) {
            std::vector<int> comp(p.values.begin() + start, p.values.begin() + i + 1);
            int shift = n - i - 1;  // values below this component
            for (int& v : comp) v -= shift;
            d.components.push_back(Permutation::unchecked(std::move(comp)));
            start = i + 1;
        }
    }
    return d;
}

inline Permutation skew_compose(const SkewDecomposition& d) {
    Permutation out;
    for (const auto& c : d.components) out = skew_sum(out, c);
    return out;
}

inline int skew_component_count(const Permutation& p) {
    int n = p.size(), count = 0, runmin = n + 1;
    for (int i = 0; i < n; ++i) {
        runmin = std::min(runmin, p.values[static_cast<size_t>(i)]);
        if (runmin == n - i) ++count;
    }
    return count;
}

// |C_{n,c}| = (c/n) * binom(2n-c-1, n-1): 213-avoiders (equally 132-avoiders)
// of length n with exactly c skew indecomposable components.
inline BigInt count_av213_by_components(long n, long c) {
    if (c < 1 || c > n) throw std::invalid_argument("invalid-range: need 1 <= c <= n");
    BigInt num = c * binomial(2 * n - c - 1, n - 1);
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), BigInt(n).get_mpz_t());
    if (r != 0) throw std::logic_error("Catalan forest count not integral");
    return q;
}

}  // namespace staircase
