#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "lexeu/conditioning.hpp"
#include "lexeu/error.hpp"

using namespace lexeu;
using lexeu::testing::act;
using lexeu::testing::m0;

TEST_CASE("Savage conditional is independent of the completion act") {
    auto m = m0();
    auto acts = enumerate_acts(m.space(), m.outcomes());
    auto a = Event::of(m.space(), {"s1", "s3"});
    auto f = act(m, "baca");
    auto g = act(m, "baaa");
    CHECK(savage_conditional(m, a, f, g) == Ordering::StrictlyPrefer);
    for (const auto& h : acts) {
        CHECK(lex_prefer(m, compose(f, a, h), compose(g, a, h)).ordering == Ordering::StrictlyPrefer);
    }
    CHECK(savage_verdict(m, a, f, g).deciding_level == 2u);
}

TEST_CASE("wedge instance: Savage strict but not strongly strict") {
    auto m = m0();
    auto v = strong_conditional_strict(m, Event::of(m.space(), {"s1", "s3"}), act(m, "baca"), act(m, "baaa"));
    CHECK(v.savage_strict);
    CHECK_FALSE(v.strong_strict);
    REQUIRE(v.failing_constant.has_value());
    CHECK(*v.failing_constant == 2);
    CHECK_FALSE(indexed_prefer(m, Event::of(m.space(), {"s1", "s3"}), act(m, "baca"), act(m, "baaa")).strict());
}

TEST_CASE("f against g on {s3,s4}") {
    auto m = m0();
    auto v = strong_conditional_strict(m, Event::of(m.space(), {"s3", "s4"}), act(m, "baca"), act(m, "abac"));
    CHECK(v.savage_strict);
    CHECK_FALSE(v.strong_strict);
    CHECK(v.failing_constant == std::optional<std::size_t>{2});
}

TEST_CASE("strong strictness succeeds with a witness per constant") {
    auto m = m0();
    auto a = Event::of(m.space(), {"s1", "s2"});
    auto v = strong_conditional_strict(m, a, act(m, "ccaa"), act(m, "aaaa"));
    CHECK(v.savage_strict);
    CHECK(v.strong_strict);
    CHECK_FALSE(v.failing_constant.has_value());
    CHECK(v.witnesses.size() == 3);
}

TEST_CASE("partition cap") {
    auto m = m0();
    StrongOptions opt;
    opt.partition_cap = 1;
    CHECK_THROWS_AS(strong_conditional_strict(m, Event::full(m.space()), act(m, "ccaa"), act(m, "aaaa"), opt),
                    CapExceeded);
}

TEST_CASE("fineness condition") {
    auto m = m0();
    auto s = m.space();
    CHECK_FALSE(fineness_sufficient(m, Event::of(s, {"s1", "s2"}), act(m, "caaa"), act(m, "aaaa")));
    CHECK_FALSE(fineness_sufficient(m, Event::of(s, {"s1", "s2"}), act(m, "aaaa"), act(m, "aaaa")));
    CHECK(fineness_sufficient(m, Event::of(s, {"s1", "s2"}), act(m, "ccaa"), act(m, "aaaa")));
}

TEST_CASE("observability report on M0") {
    auto m = m0();
    auto r = observability_check(m);
    CHECK(r.instances == 15u * 81u * 80u);
    CHECK(r.anomalies.empty());
    CHECK(r.implication_failures == 0);
    CHECK(r.fineness_failures == 29718);
    CHECK(r.equivalent + r.fineness_failures == r.instances);
    CHECK(r.sufficient_equivalent == r.sufficient_instances);
    CHECK(r.fineness_examples.size() == 50);
}

TEST_CASE("one fine level: every indexed-strict pair is observable") {
    std::vector<std::string> states;
    for (int i = 1; i <= 8; ++i) {
        states.push_back("s" + std::to_string(i));
    }
    LevelSpec level{states, std::vector<std::string>(8, "1/8"), {"0", "1"}};
    auto m = GsleuModel::build(states, {"a", "b"}, {level});
    auto acts = enumerate_acts(m.space(), m.outcomes());
    std::vector<Act> scope(acts.begin(), acts.begin() + 12);
    auto r = observability_check(m, scope);
    CHECK(r.anomalies.empty());
    CHECK(r.sufficient_equivalent == r.sufficient_instances);
}
