#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rsm/matching.hpp"
#include "rsm/prefs.hpp"

namespace rsm {

enum class Order { Greater, Less, Equal, Incomparable };

const char* to_string(Order o);

// Brute-force enumeration limit on |F| * |W|.
inline constexpr int kEnumerationGuard = 25;

// S(P) for one market, with both side orders precomputed.
//
// Matchings are sorted by edge code (lexicographic in firm rows), so indices
// are stable across runs and independent of how enumeration is scheduled.
class StableSet {
public:
    StableSet(const Market& market, std::vector<Matching> matchings);

    const Market& market() const { return market_; }
    std::size_t size() const { return matchings_.size(); }
    const Matching& operator[](std::size_t i) const { return matchings_[i]; }
    const std::vector<Matching>& matchings() const { return matchings_; }

    std::optional<std::size_t> index_of(const Matching& m) const;
    // Throws Error(Precondition) when m is not in the set.
    std::size_t require_index(const Matching& m) const;

    // Comparison of matching i against j under >=_F (resp. >=_W).
    Order cmp(Side side, std::size_t i, std::size_t j) const {
        return (side == Side::Firm ? cmp_f_ : cmp_w_)[i * size() + j];
    }
    Order cmp_f(std::size_t i, std::size_t j) const { return cmp(Side::Firm, i, j); }
    bool geq(Side side, std::size_t i, std::size_t j) const {
        const Order o = cmp(side, i, j);
        return o == Order::Greater || o == Order::Equal;
    }

    // Indices of the >=_F maximum and minimum.
    std::size_t top() const { return top_; }
    std::size_t bottom() const { return bottom_; }

    // Covering pairs (upper, lower) of >=_F.
    std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

private:
    Market market_;
    std::vector<Matching> matchings_;
    std::vector<Order> cmp_f_;
    std::vector<Order> cmp_w_;
    std::size_t top_ = 0;
    std::size_t bottom_ = 0;
};

// mu >=_X nu on the given side: every agent of X weakly prefers mu(a).
// Works for any two matchings of the market; no stability check.
Order compare_matchings(const Matching& a, const Matching& b, const Market& market, Side side);

// Enumerates every stable matching.
// Throws Error(Capacity) when |F|*|W| > kEnumerationGuard and
// Error(AxiomFailure) naming a witness when some preference fails an axiom.
StableSet enumerate_stable(const Market& market);

// Pointing-function operations. Side::Firm gives join_f / meet_f; the
// worker-side forms are the duals. All validate stability of the inputs
// (Error(Precondition)).
Matching join(const Matching& a, const Matching& b, const Market& market, Side side);
Matching meet(const Matching& a, const Matching& b, const Market& market, Side side);

inline Matching join_f(const Matching& a, const Matching& b, const Market& m) { return join(a, b, m, Side::Firm); }
inline Matching meet_f(const Matching& a, const Matching& b, const Market& m) { return meet(a, b, m, Side::Firm); }
inline Matching join_w(const Matching& a, const Matching& b, const Market& m) { return join(a, b, m, Side::Worker); }
inline Matching meet_w(const Matching& a, const Matching& b, const Market& m) { return meet(a, b, m, Side::Worker); }

// Ch over the union of assigned sets across the whole family at once.
// Throws Error(InvalidInput) on an empty family.
Matching multi_join(std::span<const Matching> family, const Market& market, Side side);
Matching multi_meet(std::span<const Matching> family, const Market& market, Side side);

namespace detail {
// Unchecked pointing function: side X computes Ch over unions for X's agents
// and derives the other side.
Matching pointing(std::span<const Matching> family, const Market& market, Side chooser);
}  // namespace detail

struct RhtReport {
    bool holds = true;
    // Partner count per agent in the first matching (firms then workers).
    std::vector<int> firm_counts;
    std::vector<int> worker_counts;
    std::optional<AgentId> violator;
};

// |mu(a)| is the same in every stable matching, for every agent.
RhtReport rht_check(const StableSet& ss);

// Graphviz rendering of the >=_F Hasse diagram. Nodes are labelled nu1..nuN
// in StableSet order, edges point from the better matching to the one it
// covers.
std::string hasse_dot(const StableSet& ss);

}  // namespace rsm
