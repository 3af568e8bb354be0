#include "graphseq/types.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace graphseq {

std::string_view to_string(error_code code) {
    switch (code) {
    case error_code::empty_input: return "EMPTY_INPUT";
    case error_code::nonpositive_entry: return "NONPOSITIVE_ENTRY";
    case error_code::value_too_large: return "VALUE_TOO_LARGE";
    case error_code::parse_error: return "PARSE_ERROR";
    case error_code::out_of_domain: return "OUT_OF_DOMAIN";
    case error_code::bound_satisfied: return "BOUND_SATISFIED";
    case error_code::internal_guard: return "INTERNAL_GUARD";
    case error_code::internal_nonexhaustive: return "INTERNAL_NONEXHAUSTIVE";
    case error_code::limit_exceeded: return "LIMIT_EXCEEDED";
    }
    return "UNKNOWN";
}

std::string_view to_string(case_label c) {
    switch (c) {
    case case_label::I: return "I";
    case case_label::II: return "II";
    case case_label::III: return "III";
    case case_label::IV: return "IV";
    }
    return "?";
}

std::string_view to_string(verdict_reason r) {
    switch (r) {
    case verdict_reason::even_sum_ok: return "EVEN_SUM_OK";
    case verdict_reason::odd_sum: return "ODD_SUM";
    case verdict_reason::eg_fail: return "EG_FAIL";
    case verdict_reason::rk_fail: return "RK_FAIL";
    case verdict_reason::discriminant_neg: return "DISCRIMINANT_NEG";
    case verdict_reason::out_of_domain: return "OUT_OF_DOMAIN";
    }
    return "?";
}

DegreeSequence::DegreeSequence(std::vector<degree_t> entries)
    : entries_(std::move(entries)),
      sum_(std::accumulate(entries_.begin(), entries_.end(), degree_t{0})) {}

DegreeSequence normalize(std::vector<degree_t> raw) {
    if (raw.empty())
        throw error(error_code::empty_input, "degree sequence is empty");
    if (static_cast<degree_t>(raw.size()) > max_value)
        throw error(error_code::value_too_large,
                    "sequence length " + std::to_string(raw.size()) + " exceeds " +
                        std::to_string(max_value));
    for (degree_t d : raw) {
        if (d < 1)
            throw error(error_code::nonpositive_entry,
                        "entry " + std::to_string(d) + " is not a positive integer");
        if (d > max_value)
            throw error(error_code::value_too_large,
                        "entry " + std::to_string(d) + " exceeds " + std::to_string(max_value));
    }
    std::sort(raw.begin(), raw.end(), std::greater<>());
    return DegreeSequence(std::move(raw));
}

DegreeSequence from_runs(std::span<const std::pair<degree_t, std::int64_t>> runs) {
    std::int64_t total = 0;
    for (const auto& [value, count] : runs) {
        if (count < 0 || count > max_value || total + count > max_value)
            throw error(error_code::value_too_large, "run-length total exceeds " + std::to_string(max_value));
        total += count;
    }
    std::vector<degree_t> raw;
    raw.reserve(static_cast<std::size_t>(total));
    for (const auto& [value, count] : runs)
        raw.insert(raw.end(), static_cast<std::size_t>(count), value);
    return normalize(std::move(raw));
}

Triple Triple::make(degree_t a, degree_t b, std::int64_t n) {
    auto in_range = [](std::int64_t x) { return x >= 1 && x <= max_value; };
    if (!in_range(a) || !in_range(b) || !in_range(n)) {
        std::ostringstream msg;
        msg << "triple (a=" << a << ", b=" << b << ", n=" << n << ") needs every component in [1, "
            << max_value << "]";
        throw error(error_code::out_of_domain, msg.str());
    }
    return Triple{a, b, n};
}

void Graph::add_edge(std::int64_t u, std::int64_t v) {
    if (u == v)
        throw error(error_code::out_of_domain, "self-loop at vertex " + std::to_string(u));
    if (u < 1 || v < 1 || u > n_ || v > n_)
        throw error(error_code::out_of_domain, "edge endpoint outside [1, " + std::to_string(n_) + "]");
    edge e = std::minmax(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e)
        throw error(error_code::out_of_domain,
                    "duplicate edge " + std::to_string(e.first) + "-" + std::to_string(e.second));
    edges_.insert(it, e);
}

Graph Graph::from_edges(std::int64_t n, std::vector<edge> edges) {
    Graph g(n);
    for (auto& e : edges) {
        if (e.first == e.second)
            throw error(error_code::out_of_domain, "self-loop at vertex " + std::to_string(e.first));
        if (e.first < 1 || e.second < 1 || e.first > n || e.second > n)
            throw error(error_code::out_of_domain, "edge endpoint outside [1, " + std::to_string(n) + "]");
        if (e.first > e.second)
            std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw error(error_code::out_of_domain,
                    "duplicate edge " + std::to_string(dup->first) + "-" + std::to_string(dup->second));
    g.edges_ = std::move(edges);
    return g;
}

bool Graph::has_edge(std::int64_t u, std::int64_t v) const {
    return std::binary_search(edges_.begin(), edges_.end(), edge(std::minmax(u, v)));
}

std::vector<degree_t> Graph::degrees() const {
    std::vector<degree_t> deg(static_cast<std::size_t>(n_), 0);
    for (const auto& [u, v] : edges_) {
        ++deg[static_cast<std::size_t>(u - 1)];
        ++deg[static_cast<std::size_t>(v - 1)];
    }
    return deg;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos)
        return {};
    auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

degree_t parse_int(std::string_view tok, std::string_view whole) {
    tok = trim(tok);
    degree_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
        if (ec == std::errc::result_out_of_range)
            throw error(error_code::value_too_large, "integer out of range: '" + std::string(tok) + "'");
        throw error(error_code::parse_error,
                    "malformed token '" + std::string(tok) + "' in '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

DegreeSequence parse_sequence(std::string_view text) {
    if (trim(text).empty())
        throw error(error_code::empty_input, "degree sequence is empty");

    std::vector<std::pair<degree_t, std::int64_t>> runs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        auto caret = tok.find('^');
        if (caret == std::string_view::npos) {
            runs.emplace_back(parse_int(tok, text), 1);
        } else {
            degree_t value = parse_int(tok.substr(0, caret), text);
            std::int64_t count = parse_int(tok.substr(caret + 1), text);
            if (count < 1)
                throw error(error_code::parse_error,
                            "run length must be positive in '" + std::string(trim(tok)) + "'");
            runs.emplace_back(value, count);
        }
        pos = comma + 1;
    }
    // Validate values before materializing potentially long runs.
    for (const auto& [value, count] : runs) {
        if (value < 1)
            throw error(error_code::nonpositive_entry,
                        "entry " + std::to_string(value) + " is not a positive integer");
    }
    return from_runs(runs);
}

std::string format_sequence(const DegreeSequence& seq) {
    std::ostringstream out;
    auto e = seq.entries();
    bool first = true;
    for (std::size_t i = 0; i < e.size();) {
        std::size_t j = i;
        while (j < e.size() && e[j] == e[i])
            ++j;
        std::size_t run = j - i;
        auto emit = [&](const std::string& tok) {
            if (!first)
                out << ',';
            out << tok;
            first = false;
        };
        if (run >= 3) {
            emit(std::to_string(e[i]) + "^" + std::to_string(run));
        } else {
            for (std::size_t r = 0; r < run; ++r)
                emit(std::to_string(e[i]));
        }
        i = j;
    }
    return out.str();
}

}  // namespace graphseq
