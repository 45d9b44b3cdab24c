#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rsm/io.hpp"
#include "rsm/random_stable.hpp"
#include "rsm/stable_lattice.hpp"

#ifndef RSM_DATA_DIR
#error "RSM_DATA_DIR must point at the repository data/ directory"
#endif

namespace rsm::test {

inline std::string read_data(const std::string& relative) {
    std::ifstream in(std::string(RSM_DATA_DIR) + "/" + relative, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline MarketDocument reference_market() { return parse_market(read_data("reference/market.json")); }

// The four matchings nu1 > nu2, nu3 > nu4 of the reference market that form a
// diamond under >=_F, k = 1..4, worker indices 0-based.
inline Matching diamond(int k) {
    static const std::vector<std::vector<AgentSet>> rows = {
        {AgentSet::of({0, 1}), AgentSet::of({2, 3}), AgentSet::of({0, 2}), AgentSet::of({1, 3})},
        {AgentSet::of({0, 2}), AgentSet::of({1, 3}), AgentSet::of({2, 3}), AgentSet::of({0, 1})},
        {AgentSet::of({1, 3}), AgentSet::of({0, 2}), AgentSet::of({0, 1}), AgentSet::of({2, 3})},
        {AgentSet::of({2, 3}), AgentSet::of({0, 1}), AgentSet::of({1, 3}), AgentSet::of({0, 2})},
    };
    return Matching::from_firm_rows(4, rows.at(k - 1));
}

inline Lottery lottery(std::vector<std::pair<const char*, Matching>> terms) {
    std::vector<LotteryTerm> out;
    for (auto& [w, m] : terms) out.push_back(LotteryTerm{parse_rational(w), std::move(m)});
    return Lottery(std::move(out));
}

// x = 1/4 nu1 + 1/2 nu2 + 1/4 nu4 and y = 1/6 nu1 + 1/2 nu3 + 1/3 nu4.
inline Lottery example_x() { return lottery({{"1/4", diamond(1)}, {"1/2", diamond(2)}, {"1/4", diamond(4)}}); }
inline Lottery example_y() { return lottery({{"1/6", diamond(1)}, {"1/2", diamond(3)}, {"1/3", diamond(4)}}); }

// One generated market with its stable set.
struct CorpusMarket {
    std::uint64_t seed;
    MarketDocument doc;
    StableSet ss;
};

// Responsive markets up to 4 x 4 with quotas <= 2. Square shapes come up
// most often because unbalanced markets rarely have more than one stable
// matching.
inline CorpusMarket corpus_market(std::uint64_t seed) {
    static const std::pair<int, int> shapes[] = {{4, 4}, {3, 3}, {4, 4}, {2, 2}, {3, 4}, {4, 4},
                                                 {3, 3}, {4, 3}, {2, 3}, {3, 2}, {4, 4}, {3, 3},
                                                 {2, 4}, {4, 2}};
    const auto [nf, nw] = shapes[seed % std::size(shapes)];
    MarketDocument doc = generate_responsive_market(seed, nf, nw, 2);
    StableSet ss = enumerate_stable(doc.market);
    return CorpusMarket{seed, std::move(doc), std::move(ss)};
}

// The first count generated markets, in seed order, with at least two
// stable matchings. Lattice laws are vacuous on a single matching.
inline std::vector<CorpusMarket> corpus(int count) {
    std::vector<CorpusMarket> out;
    out.reserve(count);
    for (std::uint64_t s = 0; static_cast<int>(out.size()) < count; ++s) {
        CorpusMarket cm = corpus_market(s);
        if (cm.ss.size() > 1) out.push_back(std::move(cm));
    }
    return out;
}

// Random lottery over 1..4 stable matchings (repeats allowed) with integer
// weights 1..6, normalized.
inline Lottery random_lottery(std::mt19937_64& rng, const StableSet& ss) {
    const std::size_t terms = 1 + rng() % 4;
    std::vector<std::pair<Matching, long>> raw;
    long total = 0;
    for (std::size_t t = 0; t < terms; ++t) {
        const long w = 1 + static_cast<long>(rng() % 6);
        raw.emplace_back(ss[rng() % ss.size()], w);
        total += w;
    }
    std::vector<LotteryTerm> out;
    for (auto& [m, w] : raw) out.push_back(LotteryTerm{Rational(w, total), m});
    for (auto& t : out) t.weight.canonicalize();
    return Lottery(std::move(out));
}

}  // namespace rsm::test
