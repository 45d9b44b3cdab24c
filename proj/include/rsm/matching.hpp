#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rsm/agent_set.hpp"
#include "rsm/prefs.hpp"
#include "rsm/rational.hpp"

namespace rsm {

// A matching stored as its firm-side rows. The worker view is derived, so
// w in mu(f) <=> f in mu(w) holds by construction.
class Matching {
public:
    Matching() = default;

    static Matching empty(int num_firms, int num_workers);
    static Matching from_edges(int num_firms, int num_workers, std::span<const std::pair<int, int>> edges);
    static Matching from_firm_rows(int num_workers, std::vector<AgentSet> firm_rows);
    static Matching from_worker_rows(int num_firms, std::vector<AgentSet> worker_rows);
    // Both views given; throws Error(InvalidInput) unless they agree.
    static Matching from_views(std::vector<AgentSet> firm_rows, std::vector<AgentSet> worker_rows);

    int num_firms() const { return static_cast<int>(firm_rows_.size()); }
    int num_workers() const { return num_workers_; }

    AgentSet of_firm(int f) const { return firm_rows_[f]; }
    AgentSet of_worker(int w) const;
    AgentSet of(AgentId a) const { return a.side == Side::Firm ? of_firm(a.index) : of_worker(a.index); }
    const std::vector<AgentSet>& firm_rows() const { return firm_rows_; }

    bool has_edge(int f, int w) const { return firm_rows_[f].contains(w); }
    int edge_count() const;

    // Bit (F-1-f)*W + w, so the first firm's row is most significant.
    // Ordering by this code orders matchings lexicographically by firm rows.
    std::uint64_t edge_code() const;

    friend bool operator==(const Matching&, const Matching&) = default;
    friend auto operator<=>(const Matching& a, const Matching& b) {
        return a.firm_rows_ <=> b.firm_rows_;
    }

private:
    Matching(int num_workers, std::vector<AgentSet> rows) : num_workers_(num_workers), firm_rows_(std::move(rows)) {}

    int num_workers_ = 0;
    std::vector<AgentSet> firm_rows_;
};

// |F| x |W| grid of exact rationals.
class IncidenceMatrix {
public:
    IncidenceMatrix() = default;
    IncidenceMatrix(int rows, int cols) : rows_(rows), cols_(cols), cells_(std::size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return cells_[std::size_t(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return cells_[std::size_t(i) * cols_ + j]; }

    std::vector<Rational> row_sums() const;
    std::vector<Rational> col_sums() const;

    // this += weight * other
    void add_scaled(const IncidenceMatrix& other, const Rational& weight);

    friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> cells_;
};

IncidenceMatrix incidence(const Matching& m);

struct BlockingAgent {
    AgentId agent;
};
struct BlockingPair {
    int firm;
    int worker;
};

struct StabilityReport {
    bool stable = true;
    std::optional<BlockingAgent> blocking_agent;
    std::optional<BlockingPair> blocking_pair;
    explicit operator bool() const { return stable; }
};

// Individual rationality for every agent, then every (w, f) pair. Throws
// Error(InvalidInput) if the matching does not fit the market.
StabilityReport check_stability(const Matching& m, const Market& market);

inline bool is_stable(const Matching& m, const Market& market) { return check_stability(m, market).stable; }

// Rows as "{w1,w2}" strings, one per firm: "f1:{w1,w2} f2:{w3,w4}".
std::string to_string(const Matching& m);

}  // namespace rsm
