#include "rsm/matching.hpp"

#include <sstream>
#include <string>

#include "rsm/error.hpp"

namespace rsm {

Matching Matching::empty(int num_firms, int num_workers) {
    return Matching(num_workers, std::vector<AgentSet>(num_firms));
}

Matching Matching::from_edges(int num_firms, int num_workers, std::span<const std::pair<int, int>> edges) {
    std::vector<AgentSet> rows(num_firms);
    for (auto [f, w] : edges) {
        if (f < 0 || f >= num_firms || w < 0 || w >= num_workers)
            throw Error(ErrorKind::InvalidInput, "edge outside the market");
        rows[f].insert(w);
    }
    return Matching(num_workers, std::move(rows));
}

Matching Matching::from_firm_rows(int num_workers, std::vector<AgentSet> firm_rows) {
    const AgentSet universe = AgentSet::all(num_workers);
    for (AgentSet r : firm_rows)
        if (!r.subset_of(universe)) throw Error(ErrorKind::InvalidInput, "firm row names an unknown worker");
    return Matching(num_workers, std::move(firm_rows));
}

Matching Matching::from_worker_rows(int num_firms, std::vector<AgentSet> worker_rows) {
    const AgentSet universe = AgentSet::all(num_firms);
    std::vector<AgentSet> rows(num_firms);
    for (int w = 0; w < static_cast<int>(worker_rows.size()); ++w) {
        if (!worker_rows[w].subset_of(universe))
            throw Error(ErrorKind::InvalidInput, "worker row names an unknown firm");
        for (int f : worker_rows[w].members()) rows[f].insert(w);
    }
    return Matching(static_cast<int>(worker_rows.size()), std::move(rows));
}

Matching Matching::from_views(std::vector<AgentSet> firm_rows, std::vector<AgentSet> worker_rows) {
    const int nf = static_cast<int>(firm_rows.size());
    Matching m = from_firm_rows(static_cast<int>(worker_rows.size()), std::move(firm_rows));
    for (int w = 0; w < m.num_workers(); ++w) {
        if (!worker_rows[w].subset_of(AgentSet::all(nf)) || m.of_worker(w) != worker_rows[w])
            throw Error(ErrorKind::InvalidInput, "asymmetric matching at worker w" + std::to_string(w + 1));
    }
    return m;
}

AgentSet Matching::of_worker(int w) const {
    AgentSet s;
    for (int f = 0; f < num_firms(); ++f)
        if (firm_rows_[f].contains(w)) s.insert(f);
    return s;
}

int Matching::edge_count() const {
    int n = 0;
    for (AgentSet r : firm_rows_) n += r.size();
    return n;
}

std::uint64_t Matching::edge_code() const {
    std::uint64_t code = 0;
    for (AgentSet r : firm_rows_) code = (code << num_workers_) | r.bits();
    return code;
}

std::vector<Rational> IncidenceMatrix::row_sums() const {
    std::vector<Rational> out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i] += at(i, j);
    return out;
}

std::vector<Rational> IncidenceMatrix::col_sums() const {
    std::vector<Rational> out(cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[j] += at(i, j);
    return out;
}

void IncidenceMatrix::add_scaled(const IncidenceMatrix& other, const Rational& weight) {
    for (std::size_t k = 0; k < cells_.size(); ++k) cells_[k] += weight * other.cells_[k];
}

IncidenceMatrix incidence(const Matching& m) {
    IncidenceMatrix x(m.num_firms(), m.num_workers());
    for (int f = 0; f < m.num_firms(); ++f)
        for (int w : m.of_firm(f).members()) x.at(f, w) = 1;
    return x;
}

StabilityReport check_stability(const Matching& m, const Market& market) {
    if (m.num_firms() != market.num_firms() || m.num_workers() != market.num_workers())
        throw Error(ErrorKind::InvalidInput, "matching does not fit the market");

    std::vector<AgentSet> worker_rows(m.num_workers());
    for (int w = 0; w < m.num_workers(); ++w) worker_rows[w] = m.of_worker(w);

    StabilityReport report;
    for (int f = 0; f < m.num_firms(); ++f) {
        if (market.firm(f).choice(m.of_firm(f)) != m.of_firm(f)) {
            report.stable = false;
            report.blocking_agent = BlockingAgent{{Side::Firm, f}};
            return report;
        }
    }
    for (int w = 0; w < m.num_workers(); ++w) {
        if (market.worker(w).choice(worker_rows[w]) != worker_rows[w]) {
            report.stable = false;
            report.blocking_agent = BlockingAgent{{Side::Worker, w}};
            return report;
        }
    }
    for (int f = 0; f < m.num_firms(); ++f) {
        for (int w = 0; w < m.num_workers(); ++w) {
            if (m.has_edge(f, w)) continue;
            AgentSet firm_offer = m.of_firm(f);
            firm_offer.insert(w);
            if (!market.firm(f).choice(firm_offer).contains(w)) continue;
            AgentSet worker_offer = worker_rows[w];
            worker_offer.insert(f);
            if (!market.worker(w).choice(worker_offer).contains(f)) continue;
            report.stable = false;
            report.blocking_pair = BlockingPair{f, w};
            return report;
        }
    }
    return report;
}

std::string to_string(const Matching& m) {
    std::ostringstream out;
    for (int f = 0; f < m.num_firms(); ++f) {
        if (f) out << ' ';
        out << 'f' << (f + 1) << ':' << to_string(m.of_firm(f), Side::Worker);
    }
    return out.str();
}

}  // namespace rsm
