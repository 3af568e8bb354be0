#pragma once

// Test-only reference implementations. Deliberately naive and independent of
// the library code paths they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using seq_t = std::vector<std::int64_t>;

// Direct O(n^2) evaluation of every Erdos-Gallai inequality; d must be
// non-increasing. Parity is ignored.
inline std::vector<std::int64_t> eg_failures(const seq_t& d) {
    const auto n = static_cast<std::int64_t>(d.size());
    std::vector<std::int64_t> out;
    for (std::int64_t k = 1; k <= n; ++k) {
        std::int64_t lhs = 0;
        for (std::int64_t i = 0; i < k; ++i)
            lhs += d[static_cast<std::size_t>(i)];
        std::int64_t rhs = k * (k - 1);
        for (std::int64_t i = k; i < n; ++i)
            rhs += std::min(k, d[static_cast<std::size_t>(i)]);
        if (lhs > rhs)
            out.push_back(k);
    }
    return out;
}

inline bool eg_graphic(const seq_t& d) {
    std::int64_t sum = 0;
    for (auto v : d)
        sum += v;
    return sum % 2 == 0 && eg_failures(d).empty();
}

// Sorted (non-increasing) degree multisets of all labeled graphs on n
// vertices, by plain bitmask enumeration.
inline std::set<seq_t> realizable_multisets(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::set<seq_t> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        seq_t deg(static_cast<std::size_t>(n), 0);
        for (std::size_t e = 0; e < pairs.size(); ++e) {
            if (mask >> e & 1) {
                ++deg[static_cast<std::size_t>(pairs[e].first)];
                ++deg[static_cast<std::size_t>(pairs[e].second)];
            }
        }
        std::sort(deg.begin(), deg.end(), std::greater<>());
        out.insert(deg);
    }
    return out;
}

// r_k straight from its definition: sum_{i=1..k} (d_i + i * #{j : d_j = k-i}).
inline std::int64_t r_k(const seq_t& d, std::int64_t k) {
    std::int64_t r = 0;
    for (std::int64_t i = 1; i <= k; ++i) {
        r += d[static_cast<std::size_t>(i - 1)];
        r += i * std::count(d.begin(), d.end(), k - i);
    }
    return r;
}

// Random non-increasing positive sequence.
inline seq_t random_sequence(std::mt19937_64& rng, int max_n, int max_entry) {
    std::uniform_int_distribution<int> len(1, max_n);
    std::uniform_int_distribution<std::int64_t> val(1, max_entry);
    seq_t d(static_cast<std::size_t>(len(rng)));
    for (auto& v : d)
        v = val(rng);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

}  // namespace oracle
