#include "graphseq/graphicality.hpp"

#include <algorithm>

namespace graphseq {

namespace {

// Calls on_fail(k) for every k that violates the Erdos-Gallai inequality,
// stopping early when it returns false.
template <typename OnFail>
void scan_eg(const DegreeSequence& seq, OnFail&& on_fail) {
    const std::int64_t n = seq.n();
    auto d = seq.entries();

    // count_ge[k] = #{i : d_i >= k}; values above n behave like n since k <= n.
    std::vector<std::int64_t> count_ge(static_cast<std::size_t>(n) + 2, 0);
    for (degree_t v : d)
        ++count_ge[static_cast<std::size_t>(std::min<degree_t>(v, n))];
    for (std::int64_t k = n - 1; k >= 0; --k)
        count_ge[static_cast<std::size_t>(k)] += count_ge[static_cast<std::size_t>(k + 1)];

    std::vector<degree_t> prefix(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t i = 0; i < n; ++i)
        prefix[static_cast<std::size_t>(i + 1)] = prefix[static_cast<std::size_t>(i)] + d[static_cast<std::size_t>(i)];

    for (std::int64_t k = 1; k <= n; ++k) {
        // Entries at positions 1..w are >= k, the rest are < k.
        const std::int64_t w = count_ge[static_cast<std::size_t>(k)];
        const std::int64_t tail_start = std::max(k, w);
        const degree_t rhs = k * (k - 1) + k * std::max<std::int64_t>(0, w - k) +
                             (prefix[static_cast<std::size_t>(n)] - prefix[static_cast<std::size_t>(tail_start)]);
        if (prefix[static_cast<std::size_t>(k)] > rhs && !on_fail(k))
            return;
    }
}

}  // namespace

Verdict erdos_gallai(const DegreeSequence& seq) {
    if (!seq.even_sum())
        return Verdict::odd_sum();
    std::optional<std::int64_t> first;
    scan_eg(seq, [&](std::int64_t k) {
        first = k;
        return false;
    });
    return first ? Verdict::eg_fail(*first) : Verdict::ok();
}

std::vector<std::int64_t> eg_failing_indices(const DegreeSequence& seq) {
    std::vector<std::int64_t> out;
    scan_eg(seq, [&](std::int64_t k) {
        out.push_back(k);
        return true;
    });
    return out;
}

StrongIndexProfile strong_index_profile(const DegreeSequence& seq) {
    const std::int64_t n = seq.n();
    StrongIndexProfile p;

    // Strong indices form a prefix 1..k_m because d is non-increasing; k = 1
    // is always strong since d_1 >= 1.
    p.k_m = 1;
    while (p.k_m < n && seq[p.k_m + 1] >= p.k_m + 1)
        ++p.k_m;

    std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
    for (degree_t v : seq.entries()) {
        if (v < n)
            ++counts[static_cast<std::size_t>(v)];
    }
    for (degree_t v : seq.entries())
        ++p.n_j[v];

    // sum_{i=1..k} i * n_{k-i} = sum_{j<k} (k-j) n_j = k * below - weighted
    degree_t head = 0;
    std::int64_t below = 0;
    std::int64_t weighted = 0;
    for (std::int64_t k = 1; k <= p.k_m; ++k) {
        head += seq[k];
        const std::int64_t j = k - 1;
        below += counts[static_cast<std::size_t>(j)];
        weighted += j * counts[static_cast<std::size_t>(j)];
        p.r_k.emplace(k, head + k * below - weighted);
    }
    return p;
}

Verdict zz_rk_criterion(const DegreeSequence& seq) {
    if (!seq.even_sum())
        return Verdict::odd_sum();
    const std::int64_t n = seq.n();
    for (const auto& [k, r] : strong_index_profile(seq).r_k) {
        if (r > k * (n - 1))
            return Verdict::rk_fail(k);
    }
    return Verdict::ok();
}

std::optional<Graph> havel_hakimi_realize(const DegreeSequence& seq) {
    struct slot {
        degree_t residual;
        std::int64_t vertex;
    };
    auto before = [](const slot& x, const slot& y) {
        return x.residual != y.residual ? x.residual > y.residual : x.vertex < y.vertex;
    };

    const std::int64_t n = seq.n();
    std::vector<slot> order;
    order.reserve(static_cast<std::size_t>(n));
    for (std::int64_t v = 1; v <= n; ++v)
        order.push_back({seq[v], v});
    // Already in (residual desc, vertex asc) order since seq is non-increasing.

    std::vector<Graph::edge> edges;
    std::size_t head = 0;
    while (head < order.size() && order[head].residual > 0) {
        const slot top = order[head++];
        const auto need = static_cast<std::size_t>(top.residual);
        if (need > order.size() - head)
            return std::nullopt;
        auto first = order.begin() + static_cast<std::ptrdiff_t>(head);
        auto mid = first + static_cast<std::ptrdiff_t>(need);
        for (auto it = first; it != mid; ++it) {
            if (it->residual == 0)
                return std::nullopt;
            --it->residual;
            edges.emplace_back(top.vertex, it->vertex);
        }
        // Both halves stay sorted; a linear merge restores the global order.
        std::inplace_merge(first, mid, order.end(), before);
    }
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace graphseq
