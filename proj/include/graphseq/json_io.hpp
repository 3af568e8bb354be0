#pragma once

#include <string>

#include <json.hpp>

#include "graphseq/sweep.hpp"
#include "graphseq/types.hpp"
#include "graphseq/witness.hpp"

namespace graphseq {

// All objects use nlohmann::json's sorted key order and integers only, so
// dump() is canonical.
nlohmann::json to_json(const DegreeSequence& seq);
nlohmann::json to_json(const Triple& t);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const StrongIndexProfile& p);
nlohmann::json to_json(const WitnessReport& w);
nlohmann::json to_json(const Counterexample& c);

// Summary record only (no counterexample list).
nlohmann::json summary_json(const SweepReport& r, bool include_timing = true);

// One {"type":"counterexample",...} line per recorded counterexample followed
// by a {"type":"summary",...} line.
std::string to_jsonl(const SweepReport& r, bool include_timing = true);

// `u v` per line, 1-based, lexicographic.
std::string edge_list_text(const Graph& g);

}  // namespace graphseq
