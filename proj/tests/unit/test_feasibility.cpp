#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lexeu/error.hpp"
#include "lexeu/feasibility.hpp"

using namespace lexeu;

TEST_CASE("pinned point with no strict constraints") {
    ConstraintSystem sys({"x"});
    sys.add({{"x", 1}}, Relation::Geq, 0);
    sys.add({{"x", -1}}, Relation::Geq, 0);
    auto r = solve(sys);
    REQUIRE(r.feasible);
    CHECK(r.assignment == std::vector<Rational>{0});
    CHECK_FALSE(r.slack.has_value());
}

TEST_CASE("contradictory strict constraints") {
    ConstraintSystem sys({"x"});
    sys.add({{"x", 1}}, Relation::Gt, 0);
    sys.add({{"x", -1}}, Relation::Gt, 0);
    CHECK_FALSE(solve(sys).feasible);
    CHECK(fourier_motzkin_feasible(sys) == false);
}

TEST_CASE("slack maximization on a two-point simplex") {
    ConstraintSystem sys({"p1", "p2"});
    sys.add({{"p1", 1}, {"p2", 1}}, Relation::Eq, 1, "normalization");
    sys.add({{"p1", 1}, {"p2", -1}}, Relation::Gt, 0, "p1 > p2");
    sys.add({{"p2", 1}}, Relation::Gt, 0, "p2 > 0");
    auto r = solve(sys);
    REQUIRE(r.feasible);
    CHECK(r.assignment == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});
    CHECK(r.slack == Rational(1, 3));
    CHECK(r.assignment[0] - r.assignment[1] == *r.slack);
    CHECK(satisfies(sys, r.assignment));
    CHECK(fourier_motzkin_feasible(sys));
}

TEST_CASE("weak system empty") {
    ConstraintSystem sys({"x", "y"});
    sys.add({{"x", 1}, {"y", 1}}, Relation::Geq, 3);
    sys.add({{"x", 1}}, Relation::Geq, 0);
    sys.add({{"x", -1}, {"y", -1}}, Relation::Geq, -2);
    CHECK_FALSE(solve(sys).feasible);
    CHECK_FALSE(fourier_motzkin_feasible(sys));
}

TEST_CASE("free variables may go negative") {
    ConstraintSystem sys({"x"});
    sys.add({{"x", 1}}, Relation::Eq, -5);
    auto r = solve(sys);
    REQUIRE(r.feasible);
    CHECK(r.assignment[0] == -5);
}

TEST_CASE("solving is deterministic") {
    ConstraintSystem sys({"a", "b", "c"});
    sys.add({{"a", 1}, {"b", 1}, {"c", 1}}, Relation::Eq, 1);
    sys.add({{"a", 1}, {"b", -1}}, Relation::Gt, 0);
    sys.add({{"b", 1}, {"c", -1}}, Relation::Gt, 0);
    sys.add({{"c", 1}}, Relation::Gt, 0);
    auto x = solve(sys);
    auto y = solve(sys);
    CHECK(x.assignment == y.assignment);
    CHECK(x.slack == y.slack);
    CHECK(satisfies(sys, x.assignment));
}

TEST_CASE("maximize reports optimum, infeasibility and unboundedness") {
    ConstraintSystem sys({"x", "y"});
    sys.add({{"x", 1}}, Relation::Geq, 0);
    sys.add({{"y", 1}}, Relation::Geq, 0);
    sys.add({{"x", -1}, {"y", -2}}, Relation::Geq, -4);
    auto best = maximize(sys, {{"x", 1}, {"y", 1}});
    CHECK(best.status == OptimumResult::Status::Optimal);
    CHECK(best.value == 4);
    auto open = maximize(sys, {{"x", -1}, {"y", -1}});
    CHECK(open.value == 0);
    ConstraintSystem ray({"x"});
    ray.add({{"x", 1}}, Relation::Geq, 0);
    CHECK(maximize(ray, {{"x", 1}}).status == OptimumResult::Status::Unbounded);
    ray.add({{"x", -1}}, Relation::Geq, 1);
    CHECK(maximize(ray, {{"x", 1}}).status == OptimumResult::Status::Infeasible);
}

TEST_CASE("irreducible infeasible subsystem") {
    ConstraintSystem sys({"x", "y"});
    sys.add({{"y", 1}}, Relation::Geq, 0, "y >= 0");
    sys.add({{"x", 1}}, Relation::Gt, 1, "x > 1");
    sys.add({{"x", 1}, {"y", 1}}, Relation::Geq, -10, "slack row");
    sys.add({{"x", -1}}, Relation::Geq, -1, "x <= 1");
    auto core = infeasible_subsystem(sys);
    CHECK(core == std::vector<std::size_t>{1, 3});
    CHECK_FALSE(fourier_motzkin_feasible(sys.subsystem(core)));
    for (std::size_t drop = 0; drop < core.size(); ++drop) {
        auto rest = core;
        rest.erase(rest.begin() + static_cast<long>(drop));
        CHECK(fourier_motzkin_feasible(sys.subsystem(rest)));
    }
    ConstraintSystem ok({"x"});
    ok.add({{"x", 1}}, Relation::Geq, 0);
    CHECK_THROWS_AS(infeasible_subsystem(ok), MalformedSystem);
}

TEST_CASE("malformed systems and caps") {
    ConstraintSystem sys({"x"});
    CHECK_THROWS_AS(sys.add({{"z", 1}}, Relation::Geq, 0), MalformedSystem);
    CHECK_THROWS_AS(sys.add_variable("x"), MalformedSystem);
    CHECK_THROWS_AS(sys.index_of("q"), MalformedSystem);
    ConstraintSystem wide;
    for (int i = 0; i < 40; ++i) {
        wide.add_variable("v" + std::to_string(i));
    }
    CHECK_THROWS_AS(solve(wide), CapExceeded);
    CHECK_THROWS_AS(fourier_motzkin_feasible(wide), CapExceeded);
    sys.add({{"x", 1}}, Relation::Geq, 0);
    CHECK_THROWS_AS(solve(sys, {32, 0}), CapExceeded);
}
