#pragma once

#include <utility>
#include <vector>

#include "rsm/matching.hpp"
#include "rsm/rational.hpp"
#include "rsm/stable_lattice.hpp"

namespace rsm {

struct LotteryTerm {
    Rational weight;
    Matching matching;
    friend bool operator==(const LotteryTerm&, const LotteryTerm&) = default;
};

// A finite lottery over matchings. Weights are strictly positive, at most 1,
// and sum to exactly 1. Matchings may repeat; the canonical (decreasing)
// form produced by decompose never repeats them.
class Lottery {
public:
    // Throws Error(BadWeight) for a weight outside (0,1], Error(WeightSum)
    // when the weights do not add up to 1, Error(InvalidInput) when terms
    // are empty or sized for different markets.
    explicit Lottery(std::vector<LotteryTerm> terms);

    static Lottery degenerate(Matching m) { return Lottery({LotteryTerm{Rational(1), std::move(m)}}); }

    const std::vector<LotteryTerm>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    const LotteryTerm& operator[](std::size_t i) const { return terms_[i]; }

    friend bool operator==(const Lottery&, const Lottery&) = default;

private:
    std::vector<LotteryTerm> terms_;
};

// Sum of weight * incidence over the terms.
IncidenceMatrix expectation(const Lottery& x);

// True iff the matchings are in ss and strictly >=_F-decreasing.
bool is_canonical(const Lottery& x, const StableSet& ss);

// One pass of the decreasing decomposition, indices refer to the StableSet.
struct DecompositionStep {
    std::vector<std::size_t> candidates;        // B_k, ascending
    IncidenceMatrix residual;                   // x^k
    std::size_t top = 0;                        // mu_k, the >=_F join of B_k
    Rational alpha;                             // min of x^k over supp(mu_k)
    std::vector<std::pair<int, int>> tight;     // L_k: cells of mu_k where x^k = alpha
    std::vector<std::size_t> removed;           // C_k: candidates using a tight cell
};

struct DecompositionTrace {
    std::vector<std::size_t> support;  // A, the distinct matchings of the input
    std::vector<DecompositionStep> steps;
};

// Rewrites x as its unique lottery over a strictly >=_F-decreasing chain.
// Throws Error(Precondition) when a term is not in ss.
Lottery decompose(const Lottery& x, const StableSet& ss, DecompositionTrace* trace = nullptr);

// Common refinement of two decreasing lotteries on a shared weight vector.
struct SplitAlignment {
    std::vector<Rational> gamma;
    std::vector<Matching> mx;
    std::vector<Matching> my;

    std::size_t size() const { return gamma.size(); }
    friend bool operator==(const SplitAlignment&, const SplitAlignment&) = default;
};

// Merges the cumulative-weight breakpoints of both lotteries. Term l carries
// the matching of each input whose interval contains the l-th gap.
// Throws Error(Precondition) unless both inputs are canonical.
SplitAlignment split(const Lottery& x, const Lottery& y, const StableSet& ss);

// e = lcm of every weight denominator of x and y.
mpz_class common_denominator(const Lottery& x, const Lottery& y);

// Largest e that lcm_refine will materialize.
inline constexpr unsigned long kLcmGuard = 1u << 20;

// e terms of weight 1/e each. Throws Error(Precondition) unless both inputs
// are canonical and Error(Capacity) when e exceeds kLcmGuard.
SplitAlignment lcm_refine(const Lottery& x, const Lottery& y, const StableSet& ss);

// Merges equal consecutive matchings, summing their weights.
Lottery aggregate(const std::vector<Rational>& gamma, const std::vector<Matching>& matchings);

enum class Dominance { Equal, StronglyDominates, DominatedBy, Incomparable };

const char* to_string(Dominance d);

// x weakly dominates y for one agent: for every threshold set y_j(a),
// P_x(assigned set >=_a threshold) >= P_y(assigned set >=_a threshold).
// Inputs are canonicalized first.
bool weakly_dominates(const Lottery& x, const Lottery& y, AgentId agent, const StableSet& ss);
bool weakly_dominates(const Lottery& x, const Lottery& y, Side side, const StableSet& ss);

// Combines both directions of weakly_dominates.
Dominance dominates(const Lottery& x, const Lottery& y, AgentId agent, const StableSet& ss);
Dominance dominates(const Lottery& x, const Lottery& y, Side side, const StableSet& ss);

// Every aligned pair of split(x, y) satisfies mx_l >=_side my_l.
bool split_dominates(const Lottery& x, const Lottery& y, Side side, const StableSet& ss);

enum class CombineMethod { Split, Lcm };

// Termwise pointing-function join/meet over the aligned representation,
// returned in canonical form.
Lottery join_random(const Lottery& x, const Lottery& y, Side side, const StableSet& ss,
                    CombineMethod method = CombineMethod::Split);
Lottery meet_random(const Lottery& x, const Lottery& y, Side side, const StableSet& ss,
                    CombineMethod method = CombineMethod::Split);

struct RandomRhtReport {
    std::vector<Rational> x_rows, x_cols;
    std::vector<Rational> y_rows, y_cols;
    bool holds = false;
};

// Row and column sums of both expectation matrices, and whether they agree.
RandomRhtReport random_rht_check(const Lottery& x, const Lottery& y);

}  // namespace rsm
