#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rsm/prefs.hpp"
#include "rsm/random_stable.hpp"
#include "rsm/stable_lattice.hpp"

namespace rsm {

// A market plus the agent names used in documents.
struct MarketDocument {
    std::vector<std::string> firm_names;
    std::vector<std::string> worker_names;
    Market market;

    const std::vector<std::string>& names(Side s) const { return s == Side::Firm ? firm_names : worker_names; }
    friend bool operator==(const MarketDocument&, const MarketDocument&) = default;
};

// JSON market document:
//   {"firms": [...], "workers": [...],
//    "preferences": {"<agent>": {"ranked": [[...], ...]}
//                  | {"<agent>": {"responsive": {"quota": q, "priority": [...]}}}}
// Errors: MalformedDocument (bad JSON or schema, with position or JSON
// pointer), UnknownAgent, InvalidInput (duplicate names, invalid forms).
MarketDocument parse_market(std::string_view json_text);
std::string print_market(const MarketDocument& doc);

// JSON lottery document:
//   {"terms": [{"weight": "n/d", "matching": {"<firm>": ["<worker>", ...]}}]}
// Firms missing from a matching are unmatched. Errors additionally include
// BadWeight and WeightSum.
Lottery parse_lottery(std::string_view json_text, const MarketDocument& doc);
std::string print_lottery(const Lottery& x, const MarketDocument& doc);

// "1/4 ν1 + 1/2 ν2 + 1/4 ν4", labels are 1-based StableSet positions.
std::string format_lottery(const Lottery& x, const StableSet& ss);

// Label of a stable matching, "ν3".
std::string matching_label(std::size_t index);

// S(P) as a table: one row per stable matching, one column per firm.
std::string format_stable_table(const StableSet& ss, const MarketDocument& doc);

std::string format_set(AgentSet s, const std::vector<std::string>& names);

// Random market in which every agent has responsive preferences: quota in
// [1, max_quota] and a random priority over a random nonempty subset of the
// other side. Deterministic for a given seed.
MarketDocument generate_responsive_market(std::uint64_t seed, int num_firms, int num_workers, int max_quota);

}  // namespace rsm
