#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "rsm/agent_set.hpp"

namespace rsm {

// Acceptable subsets listed best-first. Unlisted subsets are unacceptable:
// they rank below the empty set and are never chosen.
struct RankedSubsets {
    std::vector<AgentSet> ranking;
    friend bool operator==(const RankedSubsets&, const RankedSubsets&) = default;
};

// Top-q selection over a strict priority list of acceptable partners.
struct Responsive {
    int quota = 0;
    std::vector<int> priority;
    friend bool operator==(const Responsive&, const Responsive&) = default;
};

using PreferenceForm = std::variant<RankedSubsets, Responsive>;

enum class SetPreference { First, Second, Equal, Incomparable };

const char* to_string(SetPreference p);

class PreferenceRelation {
public:
    // Validates the form against the size of the opposite side.
    // Throws Error(InvalidInput) on duplicates or out-of-range agents.
    PreferenceRelation(AgentId owner, int opposite_count, PreferenceForm form);

    const AgentId& owner() const { return owner_; }
    int opposite_count() const { return opposite_count_; }
    const PreferenceForm& form() const { return form_; }
    bool is_responsive() const { return std::holds_alternative<Responsive>(form_); }

    // Ch(offered). Throws Error(InvalidInput) if offered names an agent
    // outside the opposite side.
    AgentSet choice(AgentSet offered) const;

    // Same ranking written out as RankedSubsets. For Responsive, subsets of
    // size <= quota are ordered lexicographically by priority rank, a proper
    // prefix ranking below its extensions.
    PreferenceRelation expanded() const;

    friend bool operator==(const PreferenceRelation&, const PreferenceRelation&) = default;

private:
    AgentSet choice_unchecked(AgentSet offered) const;

    AgentId owner_;
    int opposite_count_ = 0;
    PreferenceForm form_;
};

// The choice-based comparison used for stable-matching orders:
// S is weakly preferred to T iff S = Ch(S u T).
SetPreference prefers_set(const PreferenceRelation& pref, AgentSet s, AgentSet t);

// True iff S = Ch(S u T), i.e. First or Equal.
inline bool weakly_prefers(const PreferenceRelation& pref, AgentSet s, AgentSet t) {
    auto p = prefers_set(pref, s, t);
    return p == SetPreference::First || p == SetPreference::Equal;
}

// Exhaustive axiom checks are limited to this many opposite-side agents.
inline constexpr int kAxiomGuard = 16;

struct SubstitutabilityWitness {
    AgentSet offered;  // S, with b in Ch(S)
    AgentSet subset;   // S' subset of S, with b not in Ch(S' u {b})
    int agent = -1;    // b
};

struct LadWitness {
    AgentSet offered;  // S
    AgentSet subset;   // S' subset of S with |Ch(S')| > |Ch(S)|
};

// Empty optional on success. Throws Error(Capacity) above kAxiomGuard.
std::optional<SubstitutabilityWitness> substitutability_violation(const PreferenceRelation& pref);
std::optional<LadWitness> lad_violation(const PreferenceRelation& pref);

inline bool is_substitutable(const PreferenceRelation& pref) {
    return !substitutability_violation(pref).has_value();
}
inline bool satisfies_lad(const PreferenceRelation& pref) { return !lad_violation(pref).has_value(); }

// A market (F, W, P): side sizes and one preference per agent.
class Market {
public:
    Market(int num_firms, int num_workers, std::vector<PreferenceRelation> firm_prefs,
           std::vector<PreferenceRelation> worker_prefs);

    int num_firms() const { return num_firms_; }
    int num_workers() const { return num_workers_; }
    int count(Side s) const { return s == Side::Firm ? num_firms_ : num_workers_; }

    const PreferenceRelation& pref(AgentId a) const;
    const PreferenceRelation& firm(int f) const { return firm_prefs_[f]; }
    const PreferenceRelation& worker(int w) const { return worker_prefs_[w]; }
    const std::vector<PreferenceRelation>& prefs(Side s) const {
        return s == Side::Firm ? firm_prefs_ : worker_prefs_;
    }

    friend bool operator==(const Market&, const Market&) = default;

private:
    int num_firms_;
    int num_workers_;
    std::vector<PreferenceRelation> firm_prefs_;
    std::vector<PreferenceRelation> worker_prefs_;
};

}  // namespace rsm
