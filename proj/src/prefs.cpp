#include "rsm/prefs.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "rsm/error.hpp"

namespace rsm {

namespace {

std::string agent_label(AgentId a) {
    return std::string(a.side == Side::Firm ? "f" : "w") + std::to_string(a.index + 1);
}

void check_offer(const PreferenceRelation& pref, AgentSet offered) {
    if (!offered.subset_of(AgentSet::all(pref.opposite_count())))
        throw Error(ErrorKind::InvalidInput,
                    "offer for " + agent_label(pref.owner()) + " names an agent outside the opposite side");
}

// Ch over every subset of the opposite side, indexed by bitmask.
std::vector<AgentSet> choice_table(const PreferenceRelation& pref) {
    const int n = pref.opposite_count();
    if (n > kAxiomGuard)
        throw Error(ErrorKind::Capacity, "axiom check for " + agent_label(pref.owner()) + " needs <= " +
                                             std::to_string(kAxiomGuard) + " opposite-side agents, got " +
                                             std::to_string(n));
    std::vector<AgentSet> table(std::size_t{1} << n);
    for (std::uint32_t s = 0; s < table.size(); ++s) table[s] = pref.choice(AgentSet(s));
    return table;
}

// Lexicographic on priority ranks, a proper prefix ranking below its extension.
bool responsive_better(const std::vector<int>& a, const std::vector<int>& b) {
    const auto n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() > b.size();
}

}  // namespace

const char* to_string(SetPreference p) {
    switch (p) {
        case SetPreference::First: return "first";
        case SetPreference::Second: return "second";
        case SetPreference::Equal: return "equal";
        case SetPreference::Incomparable: return "incomparable";
    }
    return "?";
}

PreferenceRelation::PreferenceRelation(AgentId owner, int opposite_count, PreferenceForm form)
    : owner_(owner), opposite_count_(opposite_count), form_(std::move(form)) {
    if (opposite_count < 0 || opposite_count > AgentSet::kMaxAgents)
        throw Error(ErrorKind::InvalidInput, "opposite side size out of range");
    const AgentSet universe = AgentSet::all(opposite_count);
    const std::string who = agent_label(owner);
    if (const auto* ranked = std::get_if<RankedSubsets>(&form_)) {
        std::vector<AgentSet> seen = ranked->ranking;
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw Error(ErrorKind::InvalidInput, who + ": ranked list repeats a subset");
        for (AgentSet s : ranked->ranking)
            if (!s.subset_of(universe))
                throw Error(ErrorKind::InvalidInput, who + ": ranked subset names an unknown partner");
    } else {
        const auto& resp = std::get<Responsive>(form_);
        if (resp.quota < 0) throw Error(ErrorKind::InvalidInput, who + ": negative quota");
        AgentSet seen;
        for (int p : resp.priority) {
            if (p < 0 || p >= opposite_count)
                throw Error(ErrorKind::InvalidInput, who + ": priority names an unknown partner");
            if (seen.contains(p)) throw Error(ErrorKind::InvalidInput, who + ": priority list repeats a partner");
            seen.insert(p);
        }
    }
}

AgentSet PreferenceRelation::choice(AgentSet offered) const {
    check_offer(*this, offered);
    return choice_unchecked(offered);
}

AgentSet PreferenceRelation::choice_unchecked(AgentSet offered) const {
    if (const auto* ranked = std::get_if<RankedSubsets>(&form_)) {
        for (AgentSet s : ranked->ranking)
            if (s.subset_of(offered)) return s;
        return AgentSet{};
    }
    const auto& resp = std::get<Responsive>(form_);
    AgentSet chosen;
    int taken = 0;
    for (int p : resp.priority) {
        if (taken >= resp.quota) break;
        if (offered.contains(p)) {
            chosen.insert(p);
            ++taken;
        }
    }
    return chosen;
}

PreferenceRelation PreferenceRelation::expanded() const {
    if (!is_responsive()) return *this;
    const auto& resp = std::get<Responsive>(form_);
    const int n = static_cast<int>(resp.priority.size());
    if (n > kAxiomGuard)
        throw Error(ErrorKind::Capacity, agent_label(owner_) + ": priority list too long to expand");

    // Each subset of the priority list as its ascending rank vector.
    std::vector<std::vector<int>> ranks;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        if (std::popcount(mask) > resp.quota) continue;
        std::vector<int> r;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) r.push_back(i);
        ranks.push_back(std::move(r));
    }
    std::sort(ranks.begin(), ranks.end(), responsive_better);

    RankedSubsets out;
    out.ranking.reserve(ranks.size());
    for (const auto& r : ranks) {
        AgentSet s;
        for (int i : r) s.insert(resp.priority[i]);
        out.ranking.push_back(s);
    }
    return PreferenceRelation(owner_, opposite_count_, std::move(out));
}

SetPreference prefers_set(const PreferenceRelation& pref, AgentSet s, AgentSet t) {
    if (s == t) {
        check_offer(pref, s);
        return SetPreference::Equal;
    }
    const AgentSet chosen = pref.choice(s | t);
    if (chosen == s) return SetPreference::First;
    if (chosen == t) return SetPreference::Second;
    return SetPreference::Incomparable;
}

std::optional<SubstitutabilityWitness> substitutability_violation(const PreferenceRelation& pref) {
    const auto table = choice_table(pref);
    for (std::uint32_t s = 0; s < table.size(); ++s) {
        for (int b : table[s].members()) {
            const std::uint32_t bit = std::uint32_t{1} << b;
            // Every S' subset of S, largest first.
            for (std::uint32_t sub = s;; sub = (sub - 1) & s) {
                if (!table[sub | bit].contains(b))
                    return SubstitutabilityWitness{AgentSet(s), AgentSet(sub), b};
                if (sub == 0) break;
            }
        }
    }
    return std::nullopt;
}

std::optional<LadWitness> lad_violation(const PreferenceRelation& pref) {
    const auto table = choice_table(pref);
    for (std::uint32_t s = 0; s < table.size(); ++s) {
        const int size = table[s].size();
        for (std::uint32_t sub = s;; sub = (sub - 1) & s) {
            if (table[sub].size() > size) return LadWitness{AgentSet(s), AgentSet(sub)};
            if (sub == 0) break;
        }
    }
    return std::nullopt;
}

Market::Market(int num_firms, int num_workers, std::vector<PreferenceRelation> firm_prefs,
               std::vector<PreferenceRelation> worker_prefs)
    : num_firms_(num_firms),
      num_workers_(num_workers),
      firm_prefs_(std::move(firm_prefs)),
      worker_prefs_(std::move(worker_prefs)) {
    if (num_firms < 0 || num_workers < 0 || num_firms > AgentSet::kMaxAgents ||
        num_workers > AgentSet::kMaxAgents)
        throw Error(ErrorKind::InvalidInput, "market side size out of range");
    if (static_cast<int>(firm_prefs_.size()) != num_firms || static_cast<int>(worker_prefs_.size()) != num_workers)
        throw Error(ErrorKind::InvalidInput, "market needs exactly one preference per agent");
    for (int f = 0; f < num_firms; ++f) {
        const auto& p = firm_prefs_[f];
        if (p.owner() != AgentId{Side::Firm, f} || p.opposite_count() != num_workers)
            throw Error(ErrorKind::InvalidInput, "firm preference " + std::to_string(f + 1) + " does not fit the market");
    }
    for (int w = 0; w < num_workers; ++w) {
        const auto& p = worker_prefs_[w];
        if (p.owner() != AgentId{Side::Worker, w} || p.opposite_count() != num_firms)
            throw Error(ErrorKind::InvalidInput,
                        "worker preference " + std::to_string(w + 1) + " does not fit the market");
    }
}

const PreferenceRelation& Market::pref(AgentId a) const {
    const auto& list = prefs(a.side);
    if (a.index < 0 || a.index >= static_cast<int>(list.size()))
        throw Error(ErrorKind::InvalidInput, "agent index out of range");
    return list[a.index];
}

}  // namespace rsm
