#include "rsm/stable_lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rsm/error.hpp"

namespace rsm {

const char* to_string(Order o) {
    switch (o) {
        case Order::Greater: return "greater";
        case Order::Less: return "less";
        case Order::Equal: return "equal";
        case Order::Incomparable: return "incomparable";
    }
    return "?";
}

Order compare_matchings(const Matching& a, const Matching& b, const Market& market, Side side) {
    bool a_geq = true;
    bool b_geq = true;
    for (int i = 0; i < market.count(side); ++i) {
        const AgentId agent{side, i};
        switch (prefers_set(market.pref(agent), a.of(agent), b.of(agent))) {
            case SetPreference::Equal: break;
            case SetPreference::First: b_geq = false; break;
            case SetPreference::Second: a_geq = false; break;
            case SetPreference::Incomparable: return Order::Incomparable;
        }
    }
    if (a_geq && b_geq) return Order::Equal;
    if (a_geq) return Order::Greater;
    if (b_geq) return Order::Less;
    return Order::Incomparable;
}

StableSet::StableSet(const Market& market, std::vector<Matching> matchings)
    : market_(market), matchings_(std::move(matchings)) {
    std::sort(matchings_.begin(), matchings_.end());
    matchings_.erase(std::unique(matchings_.begin(), matchings_.end()), matchings_.end());
    if (matchings_.empty()) throw Error(ErrorKind::InvalidInput, "stable set cannot be empty");

    const std::size_t n = matchings_.size();
    cmp_f_.assign(n * n, Order::Equal);
    cmp_w_.assign(n * n, Order::Equal);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (Side side : {Side::Firm, Side::Worker}) {
                auto& table = side == Side::Firm ? cmp_f_ : cmp_w_;
                const Order o = compare_matchings(matchings_[i], matchings_[j], market, side);
                table[i * n + j] = o;
                table[j * n + i] = o == Order::Greater ? Order::Less : o == Order::Less ? Order::Greater : o;
            }
        }
    }

    auto extreme = [&](Order want) -> std::size_t {
        for (std::size_t i = 0; i < n; ++i) {
            bool all = true;
            for (std::size_t j = 0; j < n && all; ++j) all = i == j || cmp_f(i, j) == want;
            if (all) return i;
        }
        throw Error(ErrorKind::Precondition, "stable set has no >=_F extreme element");
    };
    top_ = extreme(Order::Greater);
    bottom_ = extreme(Order::Less);
}

std::optional<std::size_t> StableSet::index_of(const Matching& m) const {
    auto it = std::lower_bound(matchings_.begin(), matchings_.end(), m);
    if (it == matchings_.end() || *it != m) return std::nullopt;
    return static_cast<std::size_t>(it - matchings_.begin());
}

std::size_t StableSet::require_index(const Matching& m) const {
    if (auto i = index_of(m)) return *i;
    throw Error(ErrorKind::Precondition, "matching is not stable: " + to_string(m));
}

std::vector<std::pair<std::size_t, std::size_t>> StableSet::hasse_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (cmp_f(i, j) != Order::Greater) continue;
            bool covered = true;
            for (std::size_t k = 0; k < n && covered; ++k)
                covered = !(cmp_f(i, k) == Order::Greater && cmp_f(k, j) == Order::Greater);
            if (covered) edges.emplace_back(i, j);
        }
    }
    return edges;
}

namespace {

void require_axioms(const Market& market) {
    for (Side side : {Side::Firm, Side::Worker}) {
        const Side other = opposite(side);
        for (const auto& pref : market.prefs(side)) {
            const std::string who = std::string(side == Side::Firm ? "f" : "w") + std::to_string(pref.owner().index + 1);
            if (auto w = substitutability_violation(pref)) {
                throw Error(ErrorKind::AxiomFailure,
                            who + " is not substitutable: S=" + to_string(w->offered, other) +
                                " S'=" + to_string(w->subset, other) + " b=" +
                                to_string(AgentSet::of({w->agent}), other));
            }
            if (auto w = lad_violation(pref)) {
                throw Error(ErrorKind::AxiomFailure, who + " violates the law of aggregated demand: S=" +
                                                         to_string(w->offered, other) +
                                                         " S'=" + to_string(w->subset, other));
            }
        }
    }
}

// Rows a firm can hold without blocking the matching on its own.
std::vector<AgentSet> rational_rows(const PreferenceRelation& pref) {
    std::vector<AgentSet> rows;
    const std::uint32_t limit = std::uint32_t{1} << pref.opposite_count();
    for (std::uint32_t s = 0; s < limit; ++s)
        if (pref.choice(AgentSet(s)) == AgentSet(s)) rows.emplace_back(s);
    return rows;
}

}  // namespace

StableSet enumerate_stable(const Market& market) {
    const int nf = market.num_firms();
    const int nw = market.num_workers();
    if (nf * nw > kEnumerationGuard)
        throw Error(ErrorKind::Capacity, "enumeration needs |F|*|W| <= " + std::to_string(kEnumerationGuard) +
                                             ", got " + std::to_string(nf * nw));
    require_axioms(market);

    std::vector<std::vector<AgentSet>> candidates(nf);
    for (int f = 0; f < nf; ++f) candidates[f] = rational_rows(market.firm(f));

    std::vector<Matching> found;
    std::vector<AgentSet> rows(nf);
    // Odometer over the product of per-firm candidate rows.
    std::vector<std::size_t> pos(nf, 0);
    while (true) {
        for (int f = 0; f < nf; ++f) rows[f] = candidates[f][pos[f]];
        Matching m = Matching::from_firm_rows(nw, rows);
        if (is_stable(m, market)) found.push_back(std::move(m));
        int f = nf - 1;
        while (f >= 0 && ++pos[f] == candidates[f].size()) pos[f--] = 0;
        if (f < 0) break;
    }
    return StableSet(market, std::move(found));
}

namespace detail {

Matching pointing(std::span<const Matching> family, const Market& market, Side chooser) {
    if (family.empty()) throw Error(ErrorKind::InvalidInput, "join/meet of an empty family");
    const int n = market.count(chooser);
    std::vector<AgentSet> rows(n);
    for (int i = 0; i < n; ++i) {
        const AgentId agent{chooser, i};
        AgentSet pooled;
        for (const auto& m : family) pooled = pooled | m.of(agent);
        rows[i] = market.pref(agent).choice(pooled);
    }
    return chooser == Side::Firm ? Matching::from_firm_rows(market.num_workers(), std::move(rows))
                                 : Matching::from_worker_rows(market.num_firms(), std::move(rows));
}

}  // namespace detail

namespace {

void require_stable(std::span<const Matching> family, const Market& market) {
    for (const auto& m : family) {
        if (m.num_firms() != market.num_firms() || m.num_workers() != market.num_workers())
            throw Error(ErrorKind::InvalidInput, "matching does not fit the market");
        if (!is_stable(m, market)) throw Error(ErrorKind::Precondition, "matching is not stable: " + to_string(m));
    }
}

}  // namespace

Matching join(const Matching& a, const Matching& b, const Market& market, Side side) {
    const Matching pair[] = {a, b};
    return multi_join(pair, market, side);
}

Matching meet(const Matching& a, const Matching& b, const Market& market, Side side) {
    const Matching pair[] = {a, b};
    return multi_meet(pair, market, side);
}

Matching multi_join(std::span<const Matching> family, const Market& market, Side side) {
    if (family.empty()) throw Error(ErrorKind::InvalidInput, "join of an empty family");
    require_stable(family, market);
    return detail::pointing(family, market, side);
}

Matching multi_meet(std::span<const Matching> family, const Market& market, Side side) {
    if (family.empty()) throw Error(ErrorKind::InvalidInput, "meet of an empty family");
    require_stable(family, market);
    return detail::pointing(family, market, opposite(side));
}

RhtReport rht_check(const StableSet& ss) {
    RhtReport report;
    const Matching& first = ss[0];
    for (int f = 0; f < first.num_firms(); ++f) report.firm_counts.push_back(first.of_firm(f).size());
    for (int w = 0; w < first.num_workers(); ++w) report.worker_counts.push_back(first.of_worker(w).size());
    for (const auto& m : ss.matchings()) {
        for (int f = 0; f < m.num_firms() && report.holds; ++f) {
            if (m.of_firm(f).size() != report.firm_counts[f]) {
                report.holds = false;
                report.violator = AgentId{Side::Firm, f};
            }
        }
        for (int w = 0; w < m.num_workers() && report.holds; ++w) {
            if (m.of_worker(w).size() != report.worker_counts[w]) {
                report.holds = false;
                report.violator = AgentId{Side::Worker, w};
            }
        }
        if (!report.holds) break;
    }
    return report;
}

std::string hasse_dot(const StableSet& ss) {
    std::ostringstream out;
    out << "digraph stable_lattice {\n";
    out << "  rankdir=TB;\n";
    for (std::size_t i = 0; i < ss.size(); ++i)
        out << "  nu" << (i + 1) << " [label=\"nu" << (i + 1) << "\\n" << to_string(ss[i]) << "\"];\n";
    for (auto [hi, lo] : ss.hasse_edges()) out << "  nu" << (hi + 1) << " -> nu" << (lo + 1) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace rsm
