#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nlie {

// Index tuples are 0-based internally; JSON and witnesses use 1-based.
using Tuple = std::vector<int>;

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int j = 1; j <= k; ++j) r = r * static_cast<std::uint64_t>(n - k + j) / j;
    return r;
}

// All strictly increasing k-tuples drawn from {0,...,d-1}, lexicographic.
inline std::vector<Tuple> increasing_tuples(int d, int k) {
    std::vector<Tuple> out;
    if (k < 0 || k > d) return out;
    Tuple t(k);
    for (int i = 0; i < k; ++i) t[i] = i;
    while (true) {
        out.push_back(t);
        int i = k - 1;
        while (i >= 0 && t[i] == d - k + i) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

// Sorts `t` ascending in place and returns the permutation sign,
// or 0 if two entries coincide.  Insertion sort: tuples are tiny.
inline int sort_with_sign(Tuple& t) {
    int sign = 1;
    for (std::size_t i = 1; i < t.size(); ++i) {
        for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
            if (t[j - 1] == t[j]) return 0;
            std::swap(t[j - 1], t[j]);
            sign = -sign;
        }
    }
    return sign;
}

// A (p, n-p)-unshuffle split of {0,...,n-1}: `sel` ascending, `rest` ascending.
struct Unshuffle {
    Tuple sel, rest;
    int sel_index_sum_1based; // sum of (sel[j]+1), i.e. positions counted from 1
};

inline std::vector<Unshuffle> unshuffles(int n, int p) {
    std::vector<Unshuffle> out;
    for (Tuple& sel : increasing_tuples(n, p)) {
        Unshuffle u;
        u.sel = std::move(sel);
        u.sel_index_sum_1based = 0;
        std::vector<char> in_sel(n, 0);
        for (int v : u.sel) {
            in_sel[v] = 1;
            u.sel_index_sum_1based += v + 1;
        }
        for (int v = 0; v < n; ++v)
            if (!in_sel[v]) u.rest.push_back(v);
        out.push_back(std::move(u));
    }
    return out;
}

// `t` with the entry at position `pos` removed.
inline Tuple erase_at(const Tuple& t, std::size_t pos) {
    Tuple r;
    r.reserve(t.size() - 1);
    for (std::size_t i = 0; i < t.size(); ++i)
        if (i != pos) r.push_back(t[i]);
    return r;
}

inline Tuple replace_at(const Tuple& t, std::size_t pos, int value) {
    Tuple r = t;
    r[pos] = value;
    return r;
}

inline std::string tuple_to_string(const Tuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += "e" + std::to_string(t[i] + 1);
    }
    return s + ")";
}

} // namespace nlie
