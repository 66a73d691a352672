#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "lexeu/error.hpp"

using namespace lexeu;
using lexeu::testing::m0;

namespace {

bool has_code(const ValidationReport& r, const std::string& code) {
    for (const auto& v : r.violations) {
        if (v.code == code) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("M0 is valid") {
    CHECK(validate_model(m0()).valid());
}

TEST_CASE("class_of picks the first level touched") {
    auto m = m0();
    CHECK(class_of(m, Event::of(m.space(), {"s2", "s3"})) == 1);
    CHECK(class_of(m, Event::of(m.space(), {"s3", "s4"})) == 2);
    CHECK(class_of(m, Event::of(m.space(), {"s4"})) == 3);
    CHECK(class_of(m, Event::empty(m.space())) == kTrivialClass);
    CHECK(class_label(kTrivialClass) == "trivial");
}

TEST_CASE("conditional measures") {
    auto m = m0();
    auto p = conditional_measure(m, Event::of(m.space(), {"s2", "s3"}));
    CHECK(p == std::vector<Rational>{0, 1, 0, 0});
    auto q = conditional_measure(m, Event::full(m.space()));
    CHECK(q == std::vector<Rational>{Rational(1, 2), Rational(1, 2), 0, 0});
    CHECK_THROWS_AS(conditional_measure(m, Event::empty(m.space())), EmptyEvent);
}

TEST_CASE("top-event chain of M0") {
    auto m = m0();
    auto chain = top_event_chain(m);
    REQUIRE(chain.size() == 3);
    CHECK(chain[0] == Event::full(m.space()));
    CHECK(chain[1] == Event::of(m.space(), {"s3", "s4"}));
    CHECK(chain[2] == Event::of(m.space(), {"s4"}));
}

TEST_CASE("validation reports each broken invariant") {
    const std::vector<std::string> s{"s1", "s2", "s3"};
    const std::vector<std::string> o{"a", "b"};
    SUBCASE("overlapping supports") {
        auto m = GsleuModel::build(s, o, {{{"s1", "s2"}, {"1/2", "1/2"}, {"0", "1"}}, {{"s2", "s3"}, {"1/2", "1/2"}, {"0", "1"}}});
        CHECK(has_code(validate_model(m), "supports not disjoint"));
    }
    SUBCASE("uncovered state") {
        auto m = GsleuModel::build(s, o, {{{"s1", "s2"}, {"1/2", "1/2"}, {"0", "1"}}});
        CHECK(has_code(validate_model(m), "supports do not cover states"));
    }
    SUBCASE("zero probability") {
        auto m = GsleuModel::build(s, o, {{{"s1", "s2", "s3"}, {"0", "1/2", "1/2"}, {"0", "1"}}});
        CHECK(has_code(validate_model(m), "probability not positive"));
    }
    SUBCASE("unnormalized") {
        auto m = GsleuModel::build(s, o, {{{"s1", "s2", "s3"}, {"1/2", "1/2", "1/2"}, {"0", "1"}}});
        CHECK(has_code(validate_model(m), "probability not normalized"));
    }
    SUBCASE("constant utility") {
        auto m = GsleuModel::build(s, o, {{{"s1", "s2", "s3"}, {"1/3", "1/3", "1/3"}, {"1", "1"}}});
        CHECK(has_code(validate_model(m), "utility constant"));
    }
    SUBCASE("utility orders differ across levels") {
        auto m = GsleuModel::build(s, o, {{{"s1"}, {"1"}, {"0", "1"}}, {{"s2", "s3"}, {"1/2", "1/2"}, {"1", "0"}}});
        CHECK(has_code(validate_model(m), "utility orders differ"));
        CHECK_THROWS_AS(require_valid(m), InvalidModel);
    }
    SUBCASE("no levels") {
        GsleuModel m(make_state_space(s), make_outcome_space(o), {});
        CHECK(has_code(validate_model(m), "no levels"));
    }
}

TEST_CASE("random models are valid") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        auto m = lexeu::testing::random_model(rng, {1, 6, 3, 4});
        INFO(validate_model(m).summary());
        CHECK(validate_model(m).valid());
    }
}
