#include <gtest/gtest.h>

#include <random>

#include "rsm/error.hpp"
#include "rsm/prefs.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace rsm;

namespace {

constexpr int w1 = 0, w2 = 1, w3 = 2, w4 = 3;

PreferenceRelation ranked(std::vector<AgentSet> list, int n = 3) {
    return PreferenceRelation({Side::Firm, 0}, n, RankedSubsets{std::move(list)});
}

PreferenceRelation responsive(int quota, std::vector<int> priority, int n) {
    return PreferenceRelation({Side::Firm, 0}, n, Responsive{quota, std::move(priority)});
}

const PreferenceRelation& f1() {
    static const MarketDocument doc = test::reference_market();
    return doc.market.firm(0);
}

}  // namespace

TEST(Choice, ReferenceFirm1) {
    EXPECT_EQ(f1().choice(AgentSet::of({w1, w4})), AgentSet::of({w1}));
    EXPECT_EQ(f1().choice(AgentSet::of({w1, w2, w3, w4})), AgentSet::of({w1, w2}));
    EXPECT_EQ(f1().choice(AgentSet{}), AgentSet{});
}

TEST(Choice, MatchesBruteForceOracleOnEveryOffer) {
    const MarketDocument doc = test::reference_market();
    for (Side side : {Side::Firm, Side::Worker}) {
        for (const auto& pref : doc.market.prefs(side)) {
            for (std::uint32_t s = 0; s < 16; ++s) {
                EXPECT_EQ(oracle::to_set(pref.choice(AgentSet(s))), oracle::choice(pref, oracle::to_set(AgentSet(s))));
            }
        }
    }
}

TEST(Choice, RejectsAgentsOutsideOppositeSide) {
    try {
        f1().choice(AgentSet::of({4}));
        FAIL() << "expected an input error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
    }
}

TEST(Choice, ResponsiveTakesTopQuota) {
    const auto p = responsive(2, {w3, w1, w4}, 4);
    EXPECT_EQ(p.choice(AgentSet::of({w1, w2, w3, w4})), AgentSet::of({w3, w1}));
    EXPECT_EQ(p.choice(AgentSet::of({w2, w4})), AgentSet::of({w4}));
    EXPECT_EQ(p.choice(AgentSet::of({w2})), AgentSet{});
    EXPECT_EQ(responsive(0, {w1}, 4).choice(AgentSet::of({w1})), AgentSet{});
}

TEST(Choice, SubsetAndIdempotentExhaustively) {
    const MarketDocument doc = test::reference_market();
    std::vector<PreferenceRelation> prefs = doc.market.prefs(Side::Firm);
    prefs.push_back(responsive(2, {w3, w1, w4}, 4));
    prefs.push_back(ranked({AgentSet::of({w1, w2}), AgentSet::of({w3}), AgentSet::of({w1}), AgentSet::of({w2})}, 4));
    for (const auto& p : prefs) {
        for (std::uint32_t s = 0; s < 16; ++s) {
            const AgentSet c = p.choice(AgentSet(s));
            EXPECT_TRUE(c.subset_of(AgentSet(s)));
            EXPECT_EQ(p.choice(c), c);
        }
    }
}

TEST(Choice, ResponsiveExpansionAgreesWithOracleAndOriginal) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        order.resize(1 + rng() % n);
        const auto p = responsive(static_cast<int>(rng() % 3), order, n);
        const auto e = p.expanded();
        ASSERT_FALSE(e.is_responsive());
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            EXPECT_EQ(p.choice(AgentSet(s)), e.choice(AgentSet(s)));
            EXPECT_EQ(oracle::to_set(p.choice(AgentSet(s))),
                      oracle::responsive_choice(std::get<Responsive>(p.form()), oracle::to_set(AgentSet(s))));
        }
    }
}

TEST(PrefersSet, ReferenceFirm1) {
    EXPECT_EQ(prefers_set(f1(), AgentSet::of({w1, w2}), AgentSet::of({w3, w4})), SetPreference::First);
    EXPECT_EQ(prefers_set(f1(), AgentSet::of({w3, w4}), AgentSet::of({w1, w2})), SetPreference::Second);
    EXPECT_EQ(prefers_set(f1(), AgentSet::of({w1, w3}), AgentSet::of({w1, w3})), SetPreference::Equal);
}

// Ch_f1 of the union {w1,w2,w3,w4} is {w1,w2}, which is neither argument.
TEST(PrefersSet, UnionChoosesAThirdSetIsIncomparable) {
    const auto oracle_choice = oracle::choice(f1(), {w1, w2, w3, w4});
    ASSERT_EQ(oracle_choice, (oracle::Set{w1, w2}));
    EXPECT_EQ(prefers_set(f1(), AgentSet::of({w1, w3}), AgentSet::of({w2, w4})), SetPreference::Incomparable);
}

TEST(PrefersSet, PartialOrderOnSubstitutablePreference) {
    const MarketDocument doc = test::reference_market();
    for (const auto& p : doc.market.prefs(Side::Worker)) {
        auto geq = [&](std::uint32_t a, std::uint32_t b) { return weakly_prefers(p, AgentSet(a), AgentSet(b)); };
        for (std::uint32_t a = 0; a < 16; ++a) {
            EXPECT_EQ(prefers_set(p, AgentSet(a), AgentSet(a)), SetPreference::Equal);
            for (std::uint32_t b = 0; b < 16; ++b) {
                if (a != b) EXPECT_FALSE(geq(a, b) && geq(b, a));
                for (std::uint32_t c = 0; c < 16; ++c)
                    if (geq(a, b) && geq(b, c)) EXPECT_TRUE(geq(a, c)) << a << ' ' << b << ' ' << c;
            }
        }
    }
}

TEST(Axioms, ReferencePreferencesPass) {
    const MarketDocument doc = test::reference_market();
    for (Side side : {Side::Firm, Side::Worker}) {
        for (const auto& p : doc.market.prefs(side)) {
            EXPECT_TRUE(is_substitutable(p));
            EXPECT_TRUE(satisfies_lad(p));
        }
    }
}

TEST(Axioms, ResponsiveAlwaysPasses) {
    EXPECT_TRUE(is_substitutable(responsive(2, {3, 0, 5, 1}, 6)));
    EXPECT_TRUE(satisfies_lad(responsive(2, {3, 0, 5, 1}, 6)));
    EXPECT_TRUE(is_substitutable(responsive(0, {}, 6)));
}

TEST(Axioms, SubstitutabilityWitness) {
    const auto p = ranked({AgentSet::of({w1, w2}), AgentSet::of({w3}), AgentSet::of({w1}), AgentSet::of({w2})});
    const auto w = substitutability_violation(p);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->offered, AgentSet::of({w1, w2, w3}));
    EXPECT_EQ(w->subset, AgentSet::of({w1, w3}));
    EXPECT_EQ(w->agent, w1);
    // Re-check the witness with the oracle.
    EXPECT_TRUE(oracle::choice(p, {w1, w2, w3}).count(w1));
    EXPECT_FALSE(oracle::choice(p, {w1, w3}).count(w1));
}

TEST(Axioms, LadWitness) {
    const auto p = ranked({AgentSet::of({w1}), AgentSet::of({w2, w3}), AgentSet::of({w2}), AgentSet::of({w3})});
    EXPECT_TRUE(is_substitutable(p));
    const auto w = lad_violation(p);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->offered, AgentSet::of({w1, w2, w3}));
    EXPECT_EQ(w->subset, AgentSet::of({w2, w3}));
}

TEST(Axioms, CapacityGuard) {
    const auto p = responsive(1, {0}, kAxiomGuard + 1);
    try {
        is_substitutable(p);
        FAIL() << "expected a capacity error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Capacity);
    }
    EXPECT_THROW(satisfies_lad(p), Error);
}

TEST(PreferenceRelation, RejectsMalformedForms) {
    EXPECT_THROW(ranked({AgentSet::of({w1}), AgentSet::of({w1})}), Error);
    EXPECT_THROW(ranked({AgentSet::of({w4})}, 3), Error);
    EXPECT_THROW(responsive(1, {w1, w1}, 3), Error);
    EXPECT_THROW(responsive(1, {5}, 3), Error);
    EXPECT_THROW(responsive(-1, {w1}, 3), Error);
}
