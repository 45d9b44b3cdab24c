#include "rsm/random_stable.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rsm/error.hpp"

namespace rsm {

Lottery::Lottery(std::vector<LotteryTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw Error(ErrorKind::InvalidInput, "lottery needs at least one term");
    Rational total;
    for (const auto& t : terms_) {
        if (t.weight <= 0 || t.weight > 1)
            throw Error(ErrorKind::BadWeight, "lottery weight " + to_string(t.weight) + " is outside (0,1]");
        if (t.matching.num_firms() != terms_[0].matching.num_firms() ||
            t.matching.num_workers() != terms_[0].matching.num_workers())
            throw Error(ErrorKind::InvalidInput, "lottery terms belong to different markets");
        total += t.weight;
    }
    if (total != 1) throw Error(ErrorKind::WeightSum, "lottery weights sum to " + to_string(total) + ", not 1");
}

IncidenceMatrix expectation(const Lottery& x) {
    const Matching& first = x[0].matching;
    IncidenceMatrix out(first.num_firms(), first.num_workers());
    for (const auto& t : x.terms()) out.add_scaled(incidence(t.matching), t.weight);
    return out;
}

bool is_canonical(const Lottery& x, const StableSet& ss) {
    std::optional<std::size_t> prev;
    for (const auto& t : x.terms()) {
        auto idx = ss.index_of(t.matching);
        if (!idx) return false;
        if (prev && ss.cmp_f(*prev, *idx) != Order::Greater) return false;
        prev = idx;
    }
    return true;
}

namespace {

std::vector<std::size_t> term_indices(const Lottery& x, const StableSet& ss) {
    std::vector<std::size_t> out;
    out.reserve(x.size());
    for (const auto& t : x.terms()) out.push_back(ss.require_index(t.matching));
    return out;
}

std::size_t pointing_index(const std::vector<std::size_t>& family, const StableSet& ss, Side chooser) {
    std::vector<Matching> ms;
    ms.reserve(family.size());
    for (auto i : family) ms.push_back(ss[i]);
    const Matching m = detail::pointing(ms, ss.market(), chooser);
    auto idx = ss.index_of(m);
    if (!idx) throw std::logic_error("pointing function left the stable set: " + to_string(m));
    return *idx;
}

// A closed under pairwise >=_F joins and meets.
std::set<std::size_t> lattice_closure(const std::vector<std::size_t>& seed, const StableSet& ss) {
    std::set<std::size_t> closed(seed.begin(), seed.end());
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<std::size_t> now(closed.begin(), closed.end());
        for (std::size_t a = 0; a < now.size(); ++a) {
            for (std::size_t b = a + 1; b < now.size(); ++b) {
                for (Side chooser : {Side::Firm, Side::Worker}) {
                    if (closed.insert(pointing_index({now[a], now[b]}, ss, chooser)).second) grew = true;
                }
            }
        }
    }
    return closed;
}

void require_canonical(const Lottery& x, const StableSet& ss, const char* what) {
    if (!is_canonical(x, ss))
        throw Error(ErrorKind::Precondition, std::string(what) + " is not a strictly >=_F-decreasing lottery");
}

Lottery canonical_or_decompose(const Lottery& x, const StableSet& ss) {
    return is_canonical(x, ss) ? x : decompose(x, ss);
}

}  // namespace

Lottery decompose(const Lottery& x, const StableSet& ss, DecompositionTrace* trace) {
    const auto indices = term_indices(x, ss);
    std::vector<std::size_t> support(indices);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());

    const std::set<std::size_t> closure = lattice_closure(support, ss);
    std::vector<std::size_t> candidates(closure.begin(), closure.end());
    IncidenceMatrix residual = expectation(x);
    if (trace) {
        trace->support = support;
        trace->steps.clear();
    }

    std::vector<LotteryTerm> out;
    Rational remaining(1);  // product of (1 - alpha_l) over earlier steps
    while (true) {
        DecompositionStep step;
        step.candidates = candidates;
        step.residual = residual;
        step.top = pointing_index(candidates, ss, Side::Firm);
        const Matching& top = ss[step.top];

        if (top.edge_count() == 0) {
            // Every stable matching is empty, so the whole mass sits here.
            step.alpha = 1;
            step.removed = candidates;
        } else {
            bool first = true;
            for (int f = 0; f < top.num_firms(); ++f)
                for (int w : top.of_firm(f).members())
                    if (first || residual.at(f, w) < step.alpha) {
                        step.alpha = residual.at(f, w);
                        first = false;
                    }
            if (step.alpha <= 0)
                throw std::logic_error("decomposition: join of the candidates leaves the residual support");
            for (int f = 0; f < top.num_firms(); ++f)
                for (int w : top.of_firm(f).members())
                    if (residual.at(f, w) == step.alpha) step.tight.emplace_back(f, w);
            for (auto c : candidates) {
                const bool hit = std::any_of(step.tight.begin(), step.tight.end(),
                                             [&](auto cell) { return ss[c].has_edge(cell.first, cell.second); });
                if (hit) step.removed.push_back(c);
            }
        }

        std::vector<std::size_t> next;
        std::set_difference(candidates.begin(), candidates.end(), step.removed.begin(), step.removed.end(),
                            std::back_inserter(next));

        out.push_back(LotteryTerm{step.alpha * remaining, top});
        const Rational alpha = step.alpha;
        const std::size_t top_index = step.top;
        if (trace) trace->steps.push_back(std::move(step));

        if (next.empty()) {
            if (alpha != 1) throw std::logic_error("decomposition: candidates exhausted before the mass");
            break;
        }
        if (alpha == 1) throw std::logic_error("decomposition: mass exhausted with candidates left");
        residual.add_scaled(incidence(ss[top_index]), -alpha);
        const Rational scale = 1 / (1 - alpha);
        for (int f = 0; f < residual.rows(); ++f)
            for (int w = 0; w < residual.cols(); ++w) residual.at(f, w) *= scale;
        remaining *= 1 - alpha;
        candidates = std::move(next);
    }

    Lottery result(std::move(out));
    if (expectation(result) != expectation(x))
        throw std::logic_error("decomposition does not reproduce the expectation matrix");
    return result;
}

SplitAlignment split(const Lottery& x, const Lottery& y, const StableSet& ss) {
    require_canonical(x, ss, "split: first lottery");
    require_canonical(y, ss, "split: second lottery");

    SplitAlignment out;
    std::size_t i = 0, j = 0;
    Rational x_end = x[0].weight, y_end = y[0].weight, cursor;
    while (i < x.size() && j < y.size()) {
        const Rational next = std::min(x_end, y_end);
        out.gamma.push_back(next - cursor);
        out.mx.push_back(x[i].matching);
        out.my.push_back(y[j].matching);
        cursor = next;
        if (x_end == next && ++i < x.size()) x_end += x[i].weight;
        if (y_end == next && ++j < y.size()) y_end += y[j].weight;
    }
    return out;
}

mpz_class common_denominator(const Lottery& x, const Lottery& y) {
    mpz_class e = 1;
    for (const Lottery* l : {&x, &y})
        for (const auto& t : l->terms()) mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), t.weight.get_den_mpz_t());
    return e;
}

SplitAlignment lcm_refine(const Lottery& x, const Lottery& y, const StableSet& ss) {
    require_canonical(x, ss, "lcm_refine: first lottery");
    require_canonical(y, ss, "lcm_refine: second lottery");
    const mpz_class e = common_denominator(x, y);
    if (e > kLcmGuard)
        throw Error(ErrorKind::Capacity, "common denominator " + e.get_str() + " exceeds " + std::to_string(kLcmGuard));
    const unsigned long count = e.get_ui();

    auto expand = [&](const Lottery& l) {
        std::vector<Matching> seq;
        seq.reserve(count);
        for (const auto& t : l.terms()) {
            const mpz_class copies = t.weight.get_num() * (e / t.weight.get_den());
            for (unsigned long k = 0; k < copies.get_ui(); ++k) seq.push_back(t.matching);
        }
        return seq;
    };
    SplitAlignment out;
    out.gamma.assign(count, Rational(1, count));
    out.mx = expand(x);
    out.my = expand(y);
    return out;
}

Lottery aggregate(const std::vector<Rational>& gamma, const std::vector<Matching>& matchings) {
    if (gamma.size() != matchings.size()) throw Error(ErrorKind::InvalidInput, "aggregate: length mismatch");
    std::vector<LotteryTerm> terms;
    for (std::size_t l = 0; l < gamma.size(); ++l) {
        if (!terms.empty() && terms.back().matching == matchings[l])
            terms.back().weight += gamma[l];
        else
            terms.push_back(LotteryTerm{gamma[l], matchings[l]});
    }
    return Lottery(std::move(terms));
}

const char* to_string(Dominance d) {
    switch (d) {
        case Dominance::Equal: return "equal";
        case Dominance::StronglyDominates: return "dominates";
        case Dominance::DominatedBy: return "dominated";
        case Dominance::Incomparable: return "incomparable";
    }
    return "?";
}

namespace {

// Both lotteries already canonical.
bool weak_for_agent(const Lottery& x, const Lottery& y, AgentId agent, const Market& market) {
    const auto& pref = market.pref(agent);
    for (const auto& threshold_term : y.terms()) {
        const AgentSet threshold = threshold_term.matching.of(agent);
        Rational lhs, rhs;
        for (const auto& t : x.terms())
            if (weakly_prefers(pref, t.matching.of(agent), threshold)) lhs += t.weight;
        for (const auto& t : y.terms())
            if (weakly_prefers(pref, t.matching.of(agent), threshold)) rhs += t.weight;
        if (lhs < rhs) return false;
    }
    return true;
}

bool weak_for_side(const Lottery& x, const Lottery& y, Side side, const Market& market) {
    for (int i = 0; i < market.count(side); ++i)
        if (!weak_for_agent(x, y, AgentId{side, i}, market)) return false;
    return true;
}

Dominance combine(bool forward, bool backward) {
    if (forward && backward) return Dominance::Equal;
    if (forward) return Dominance::StronglyDominates;
    if (backward) return Dominance::DominatedBy;
    return Dominance::Incomparable;
}

}  // namespace

bool weakly_dominates(const Lottery& x, const Lottery& y, AgentId agent, const StableSet& ss) {
    return weak_for_agent(canonical_or_decompose(x, ss), canonical_or_decompose(y, ss), agent, ss.market());
}

bool weakly_dominates(const Lottery& x, const Lottery& y, Side side, const StableSet& ss) {
    return weak_for_side(canonical_or_decompose(x, ss), canonical_or_decompose(y, ss), side, ss.market());
}

Dominance dominates(const Lottery& x, const Lottery& y, AgentId agent, const StableSet& ss) {
    const Lottery xc = canonical_or_decompose(x, ss), yc = canonical_or_decompose(y, ss);
    return combine(weak_for_agent(xc, yc, agent, ss.market()), weak_for_agent(yc, xc, agent, ss.market()));
}

Dominance dominates(const Lottery& x, const Lottery& y, Side side, const StableSet& ss) {
    const Lottery xc = canonical_or_decompose(x, ss), yc = canonical_or_decompose(y, ss);
    return combine(weak_for_side(xc, yc, side, ss.market()), weak_for_side(yc, xc, side, ss.market()));
}

bool split_dominates(const Lottery& x, const Lottery& y, Side side, const StableSet& ss) {
    const SplitAlignment a = split(canonical_or_decompose(x, ss), canonical_or_decompose(y, ss), ss);
    for (std::size_t l = 0; l < a.size(); ++l)
        if (!ss.geq(side, ss.require_index(a.mx[l]), ss.require_index(a.my[l]))) return false;
    return true;
}

namespace {

Lottery combine_termwise(const Lottery& x, const Lottery& y, const StableSet& ss, CombineMethod method,
                         Side chooser) {
    const Lottery xc = canonical_or_decompose(x, ss), yc = canonical_or_decompose(y, ss);
    const SplitAlignment a = method == CombineMethod::Split ? split(xc, yc, ss) : lcm_refine(xc, yc, ss);
    std::vector<Matching> combined;
    combined.reserve(a.size());
    for (std::size_t l = 0; l < a.size(); ++l) {
        const Matching pair[] = {a.mx[l], a.my[l]};
        combined.push_back(detail::pointing(pair, ss.market(), chooser));
    }
    return canonical_or_decompose(aggregate(a.gamma, combined), ss);
}

}  // namespace

Lottery join_random(const Lottery& x, const Lottery& y, Side side, const StableSet& ss, CombineMethod method) {
    return combine_termwise(x, y, ss, method, side);
}

Lottery meet_random(const Lottery& x, const Lottery& y, Side side, const StableSet& ss, CombineMethod method) {
    return combine_termwise(x, y, ss, method, opposite(side));
}

RandomRhtReport random_rht_check(const Lottery& x, const Lottery& y) {
    const IncidenceMatrix ex = expectation(x), ey = expectation(y);
    RandomRhtReport r;
    r.x_rows = ex.row_sums();
    r.x_cols = ex.col_sums();
    r.y_rows = ey.row_sums();
    r.y_cols = ey.col_sums();
    r.holds = r.x_rows == r.y_rows && r.x_cols == r.y_cols;
    return r;
}

}  // namespace rsm
