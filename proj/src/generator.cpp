#include <random>
#include <string>
#include <utility>

#include "rsm/error.hpp"
#include "rsm/io.hpp"

namespace rsm {

namespace {

// Modulo draws keep the stream identical across standard libraries;
// std::uniform_int_distribution is implementation-defined.
int draw(std::mt19937_64& rng, int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); }

std::vector<int> shuffled(std::mt19937_64& rng, int n) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[draw(rng, i + 1)]);
    return order;
}

// Quota in [1, max_quota]; each listed partner stays acceptable with
// probability 7/8, keeping at least one.
Responsive independent_form(std::mt19937_64& rng, int opposite_count, int max_quota) {
    const std::vector<int> order = shuffled(rng, opposite_count);
    Responsive form;
    form.quota = 1 + draw(rng, max_quota);
    for (int p : order)
        if (draw(rng, 8) != 0) form.priority.push_back(p);
    if (form.priority.empty() && !order.empty()) form.priority.push_back(order.front());
    return form;
}

// Cyclic priorities: workers sit on a cycle in random order, firm f ranks
// them starting at position f and the worker at position p ranks firms from
// p + 1 onwards. Every shift of the cycle is then stable in the square
// one-to-one case. Everyone shares one quota and lists the whole other side;
// an occasional adjacent swap adds noise.
Responsive cyclic_form(std::mt19937_64& rng, const std::vector<int>& labels, int start, int quota) {
    const int n = static_cast<int>(labels.size());
    std::vector<int> order;
    for (int k = 0; k < n; ++k) order.push_back(labels[(start + k) % n]);
    if (n > 1 && draw(rng, 4) == 0) {
        const int i = draw(rng, n - 1);
        std::swap(order[i], order[i + 1]);
    }
    return Responsive{quota, std::move(order)};
}

}  // namespace

MarketDocument generate_responsive_market(std::uint64_t seed, int num_firms, int num_workers, int max_quota) {
    if (num_firms < 1 || num_workers < 1 || num_firms * num_workers > kEnumerationGuard)
        throw Error(ErrorKind::Capacity, "generated markets must satisfy 1 <= |F|*|W| <= " +
                                             std::to_string(kEnumerationGuard));
    if (max_quota < 1) throw Error(ErrorKind::InvalidInput, "quota bound must be at least 1");

    std::mt19937_64 rng(seed);
    const bool independent = draw(rng, 4) == 0;
    const int shared_quota = 1 + draw(rng, max_quota);
    std::vector<int> firm_labels(num_firms);
    for (int f = 0; f < num_firms; ++f) firm_labels[f] = f;
    const std::vector<int> worker_labels = shuffled(rng, num_workers);
    std::vector<int> position(num_workers);
    for (int p = 0; p < num_workers; ++p) position[worker_labels[p]] = p;

    MarketDocument doc{{}, {}, Market(0, 0, {}, {})};
    std::vector<PreferenceRelation> firms, workers;
    for (int f = 0; f < num_firms; ++f) {
        doc.firm_names.push_back("f" + std::to_string(f + 1));
        firms.emplace_back(AgentId{Side::Firm, f}, num_workers,
                           independent ? independent_form(rng, num_workers, max_quota)
                                       : cyclic_form(rng, worker_labels, f % num_workers, shared_quota));
    }
    for (int w = 0; w < num_workers; ++w) {
        doc.worker_names.push_back("w" + std::to_string(w + 1));
        workers.emplace_back(AgentId{Side::Worker, w}, num_firms,
                             independent ? independent_form(rng, num_firms, max_quota)
                                         : cyclic_form(rng, firm_labels, (position[w] + 1) % num_firms, shared_quota));
    }
    doc.market = Market(num_firms, num_workers, std::move(firms), std::move(workers));
    return doc;
}

}  // namespace rsm
