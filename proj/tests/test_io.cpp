#include <gtest/gtest.h>

#include "rsm/error.hpp"
#include "rsm/io.hpp"
#include "support/fixtures.hpp"

using namespace rsm;

namespace {

const char* kTiny = R"({
  "firms": ["a", "b"],
  "workers": ["x", "y"],
  "preferences": {
    "a": {"responsive": {"quota": 1, "priority": ["x", "y"]}},
    "b": {"ranked": [["x", "y"], ["y"]]},
    "x": {"responsive": {"quota": 2, "priority": ["b", "a"]}},
    "y": {"ranked": [["a"]]}
  }
})";

ErrorKind market_error(const std::string& text) {
    try {
        parse_market(text);
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "accepted: " << text;
    return ErrorKind::InvalidInput;
}

std::string lottery_error(const std::string& text, std::string* message = nullptr) {
    static const MarketDocument doc = parse_market(kTiny);
    try {
        parse_lottery(text, doc);
    } catch (const Error& e) {
        if (message) *message = e.what();
        return error_category(e.kind());
    }
    return "accepted";
}

std::string with_pref(const std::string& a_pref) {
    return R"({"firms":["a"],"workers":["x"],"preferences":{"a":)" + a_pref + R"(,"x":{"ranked":[["a"]]}}})";
}

}  // namespace

TEST(MarketJson, ParsesBothForms) {
    const MarketDocument doc = parse_market(kTiny);
    EXPECT_EQ(doc.firm_names, (std::vector<std::string>{"a", "b"}));
    EXPECT_TRUE(doc.market.firm(0).is_responsive());
    EXPECT_FALSE(doc.market.firm(1).is_responsive());
    EXPECT_EQ(doc.market.firm(1).choice(AgentSet::of({0, 1})), AgentSet::of({0, 1}));
    EXPECT_EQ(doc.market.worker(0).choice(AgentSet::of({0, 1})), AgentSet::of({0, 1}));
    EXPECT_EQ(doc.market.worker(1).choice(AgentSet::of({1})), AgentSet{});
}

TEST(MarketJson, RoundTrips) {
    for (const MarketDocument& doc : {parse_market(kTiny), test::reference_market(), generate_responsive_market(3, 4, 3, 2)}) {
        const std::string text = print_market(doc);
        EXPECT_EQ(parse_market(text), doc);
        EXPECT_EQ(print_market(parse_market(text)), text);
    }
}

TEST(MarketJson, ErrorKinds) {
    EXPECT_EQ(market_error("{"), ErrorKind::MalformedDocument);
    EXPECT_EQ(market_error("[]"), ErrorKind::MalformedDocument);
    EXPECT_EQ(market_error(R"({"firms":["a"],"workers":["x"]})"), ErrorKind::MalformedDocument);
    EXPECT_EQ(market_error(with_pref(R"({"ranked":[["z"]]})")), ErrorKind::UnknownAgent);
    EXPECT_EQ(market_error(with_pref(R"({"ranked":[["a"]]})")), ErrorKind::UnknownAgent);
    EXPECT_EQ(market_error(with_pref(R"({"ranked":[["x","x"]]})")), ErrorKind::InvalidInput);
    EXPECT_EQ(market_error(with_pref(R"({"ranked":[["x"],["x"]]})")), ErrorKind::InvalidInput);
    EXPECT_EQ(market_error(with_pref(R"({"responsive":{"quota":-1,"priority":["x"]}})")),
              ErrorKind::MalformedDocument);
    EXPECT_EQ(market_error(with_pref(R"({"sorted":[]})")), ErrorKind::MalformedDocument);
    EXPECT_EQ(market_error(R"({"firms":["a"],"workers":["a"],"preferences":{}})"), ErrorKind::InvalidInput);
}

TEST(MarketJson, MalformedReportsLocation) {
    try {
        parse_market(with_pref(R"({"ranked":[["x", 3]]})"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("/preferences/a/ranked/0/1"), std::string::npos) << e.what();
    }
    try {
        parse_market("{\"firms\": [,]}");
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos) << e.what();
    }
}

TEST(LotteryJson, RoundTripsExample) {
    const MarketDocument doc = test::reference_market();
    const Lottery x = parse_lottery(test::read_data("reference/x.json"), doc);
    EXPECT_EQ(x, test::example_x());
    EXPECT_EQ(parse_lottery(print_lottery(x, doc), doc), x);
    EXPECT_EQ(parse_lottery(test::read_data("reference/y.json"), doc), test::example_y());
}

TEST(LotteryJson, MissingFirmsAreUnmatched) {
    static const MarketDocument doc = parse_market(kTiny);
    const Lottery x = parse_lottery(R"({"terms":[{"weight":"1","matching":{"b":["y"]}}]})", doc);
    EXPECT_EQ(x[0].matching.of_firm(0), AgentSet{});
    EXPECT_EQ(x[0].matching.of_firm(1), AgentSet::of({1}));
}

TEST(LotteryJson, ErrorKinds) {
    std::string msg;
    EXPECT_EQ(lottery_error(R"({"terms":[{"weight":"1/2","matching":{}},{"weight":"1/3","matching":{}}]})"),
              "weight_sum");
    EXPECT_EQ(lottery_error(R"({"terms":[{"weight":0.5,"matching":{}},{"weight":"1/2","matching":{}}]})", &msg),
              "bad_weight");
    EXPECT_NE(msg.find("/terms/0/weight"), std::string::npos) << msg;
    EXPECT_EQ(lottery_error(R"({"terms":[{"weight":"one","matching":{}}]})"), "bad_weight");
    EXPECT_EQ(lottery_error(R"({"terms":[{"weight":"1/0","matching":{}}]})"), "bad_weight");
    EXPECT_EQ(lottery_error(R"({"terms":[{"weight":"0","matching":{}},{"weight":"1","matching":{}}]})"),
              "bad_weight");
    EXPECT_EQ(lottery_error(R"({"terms":[{"weight":"1","matching":{"z":[]}}]})"), "unknown_agent");
    EXPECT_EQ(lottery_error(R"({"terms":[{"weight":"1","matching":{"x":[]}}]})"), "unknown_agent");
    EXPECT_EQ(lottery_error(R"({"terms":[{"weight":"1","matching":{"a":["b"]}}]})"), "unknown_agent");
    EXPECT_EQ(lottery_error(R"({"terms":[]})"), "invalid_input");
    EXPECT_EQ(lottery_error(R"({"terms":[{"weight":"1"}]})"), "malformed_document");
    EXPECT_EQ(lottery_error(R"({"terms":[{"weight":"2/2","matching":{}}]})"), "accepted");
}

TEST(Format, LotteryAndTable) {
    const MarketDocument doc = test::reference_market();
    const StableSet ss = enumerate_stable(doc.market);
    const std::string line = format_lottery(test::example_x(), ss);
    EXPECT_EQ(line, "1/4 " + matching_label(ss.require_index(test::diamond(1))) + " + 1/2 " +
                        matching_label(ss.require_index(test::diamond(2))) + " + 1/4 " +
                        matching_label(ss.require_index(test::diamond(4))));
    EXPECT_EQ(matching_label(0), "ν1");
    const std::string table = format_stable_table(ss, doc);
    EXPECT_NE(table.find("{w1,w2}"), std::string::npos);
    EXPECT_NE(table.find("ν16"), std::string::npos);
    EXPECT_EQ(format_set(AgentSet::of({0, 2}), doc.worker_names), "{w1,w3}");
}

TEST(Generator, DeterministicAndWellFormed) {
    const MarketDocument a = generate_responsive_market(42, 3, 4, 2);
    EXPECT_EQ(a, generate_responsive_market(42, 3, 4, 2));
    EXPECT_NE(a, generate_responsive_market(43, 3, 4, 2));
    for (Side side : {Side::Firm, Side::Worker}) {
        for (const auto& p : a.market.prefs(side)) {
            ASSERT_TRUE(p.is_responsive());
            const auto& r = std::get<Responsive>(p.form());
            EXPECT_GE(r.quota, 1);
            EXPECT_LE(r.quota, 2);
            EXPECT_FALSE(r.priority.empty());
            EXPECT_TRUE(is_substitutable(p));
            EXPECT_TRUE(satisfies_lad(p));
        }
    }
    EXPECT_GE(enumerate_stable(generate_responsive_market(1, 2, 2, 1).market).size(), 1u);
}

TEST(Generator, RejectsBadSizes) {
    EXPECT_THROW(generate_responsive_market(1, 0, 3, 1), Error);
    EXPECT_THROW(generate_responsive_market(1, 6, 5, 1), Error);
}
