#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "lexeu/error.hpp"
#include "lexeu/synthesis.hpp"
#include "planted.hpp"

using namespace lexeu;
using namespace lexeu::testing;

namespace {

PreferenceFamily m0_table() {
    return PreferenceFamily::table_backed(derive_table(m0()));
}

}  // namespace

TEST_CASE("hierarchy of the M0 table equals the model's class partition") {
    auto p = m0_table();
    auto inferred = infer_hierarchy(p);
    auto expected = class_partition(m0());
    REQUIRE(inferred.classes.size() == expected.classes.size());
    for (std::size_t k = 0; k < expected.classes.size(); ++k) {
        CHECK(inferred.classes[k] == expected.classes[k]);
    }
    CHECK(inferred.trivial == expected.trivial);
}

TEST_CASE("measures of the M0 classes") {
    auto p = m0_table();
    auto cp = infer_hierarchy(p);
    CHECK(infer_measure(p, 1, cp) == std::vector<Rational>{Rational(1, 2), Rational(1, 2), 0, 0});
    CHECK(infer_measure(p, 2, cp) == std::vector<Rational>{0, 0, 1, 0});
    CHECK(infer_measure(p, 3, cp) == std::vector<Rational>{0, 0, 0, 1});
}

TEST_CASE("class-1 utility is pinned by the table") {
    auto p = m0_table();
    auto cp = infer_hierarchy(p);
    auto fit = infer_utility(p, 1, cp, infer_measure(p, 1, cp));
    CHECK(fit.utility == std::vector<Rational>{0, Rational(1, 2), 1});
    CHECK(fit.strategy == "given-measure");
}

TEST_CASE("single-atom classes fix only the order of outcomes") {
    auto p = m0_table();
    auto cp = infer_hierarchy(p);
    auto fit = infer_utility(p, 2, cp, infer_measure(p, 2, cp));
    CHECK(fit.utility[0] == 0);
    CHECK(fit.utility[2] == 1);
    CHECK(fit.utility[1] > 0);
    CHECK(fit.utility[1] < 1);
}

TEST_CASE("two-outcome classes have utility {0, 1}") {
    auto m = GsleuModel::build({"s1", "s2"}, {"a", "b"}, {{{"s1", "s2"}, {"1/3", "2/3"}, {"5", "2"}}});
    auto p = PreferenceFamily::table_backed(derive_table(m));
    auto cp = infer_hierarchy(p);
    REQUIRE(cp.classes.size() == 1);
    CHECK(cp.classes[0].size() == 3);
    auto fit = infer_utility(p, 1, cp, infer_measure(p, 1, cp));
    CHECK(fit.utility == std::vector<Rational>{1, 0});
}

TEST_CASE("M0 round trip is verified") {
    auto p = m0_table();
    auto r = synthesize(p);
    CHECK(r.verified);
    CHECK(r.model.level_count() == 3);
    CHECK(validate_model(r.model).valid());
    CHECK_FALSE(first_mismatch(derive_table(r.model), p.table()).has_value());
    CHECK_FALSE(r.diagnostics.empty());
    auto f = act(m0(), "baca");
    auto g = act(m0(), "abac");
    auto v = lex_prefer(r.model, f, g);
    CHECK(v.ordering == Ordering::StrictlyPrefer);
    CHECK(v.deciding_level == 2u);
}

TEST_CASE("precheck rejects tables that break the axioms") {
    for (auto& d : planted_defects()) {
        if (d.target == AxiomId::QP || d.target == AxiomId::NULLITY || d.target == AxiomId::DOMINANCE) {
            continue;
        }
        INFO(d.description);
        auto p = PreferenceFamily::table_backed(d.table);
        CHECK_THROWS_AS(synthesize(p), AxiomPrecheckFailed);
    }
}

TEST_CASE("a non-additive comparative probability is unrepresentable") {
    auto p = PreferenceFamily::table_backed(non_additive_table());
    CHECK(check_all(p, AxiomSuite::Core).pass);
    CHECK(check_axiom(p, AxiomId::QP).status == AxiomStatus::Holds);
    try {
        synthesize(p);
        FAIL("expected Unrepresentable");
    } catch (const Unrepresentable& e) {
        REQUIRE_FALSE(e.core().empty());
        const auto core = e.system().subsystem(e.core());
        CHECK_FALSE(fourier_motzkin_feasible(core));
        for (std::size_t drop = 0; drop < e.core().size(); ++drop) {
            auto rest = e.core();
            rest.erase(rest.begin() + static_cast<long>(drop));
            CHECK(fourier_motzkin_feasible(e.system().subsystem(rest)));
        }
    }
}

TEST_CASE("random round trips") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 8; ++i) {
        auto m = random_model(rng, {2, 4, 3, 3});
        auto t = derive_table(m);
        auto r = synthesize(PreferenceFamily::table_backed(t));
        CHECK(r.verified);
        CHECK_FALSE(first_mismatch(t, derive_table(r.model)).has_value());
    }
}
