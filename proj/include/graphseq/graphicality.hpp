#pragma once

#include <optional>
#include <vector>

#include "graphseq/types.hpp"

namespace graphseq {

// Erdos-Gallai: graphic iff the sum is even and for every k in 1..n
//   d_1 + ... + d_k <= k(k-1) + sum_{i>k} min(k, d_i).
// Parity is checked first; otherwise the smallest failing k is reported.
Verdict erdos_gallai(const DegreeSequence& seq);

// Every k violating the inequality above, ignoring parity. O(n) overall.
std::vector<std::int64_t> eg_failing_indices(const DegreeSequence& seq);

// k_m, the value counts n_j and r_k at every strong index (d_k >= k).
StrongIndexProfile strong_index_profile(const DegreeSequence& seq);

// Graphic iff the sum is even and r_k <= k(n-1) at every strong index k.
Verdict zz_rk_criterion(const DegreeSequence& seq);

// Havel-Hakimi realization. Vertex i carries degree d_i. The vertex with the
// largest residual degree is joined to the next largest residuals, ties going
// to the lowest vertex index. Returns nullopt when the sequence is not
// realizable.
std::optional<Graph> havel_hakimi_realize(const DegreeSequence& seq);

}  // namespace graphseq
