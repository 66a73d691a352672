#include "lexeu/axioms.hpp"

#include "lexeu/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>

namespace lexeu {

std::string_view to_string(AxiomId id) {
    switch (id) {
        case AxiomId::P0_5: return "P0.5";
        case AxiomId::P1_5: return "P1.5";
        case AxiomId::P2_5: return "P2.5";
        case AxiomId::P3_5: return "P3.5";
        case AxiomId::P4_5: return "P4.5";
        case AxiomId::P5_5: return "P5.5";
        case AxiomId::P6_5: return "P6.5";
        case AxiomId::SE: return "SE";
        case AxiomId::QP: return "QP";
        case AxiomId::NULLITY: return "NULLITY";
        case AxiomId::DOMINANCE: return "DOMINANCE";
    }
    return "?";
}

AxiomId parse_axiom_id(std::string_view text) {
    std::string upper(text);
    for (auto& c : upper) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    for (auto id : {AxiomId::P0_5, AxiomId::P1_5, AxiomId::P2_5, AxiomId::P3_5, AxiomId::P4_5, AxiomId::P5_5,
                    AxiomId::P6_5, AxiomId::SE, AxiomId::QP, AxiomId::NULLITY, AxiomId::DOMINANCE}) {
        if (upper == to_string(id)) {
            return id;
        }
    }
    throw ParseError("unknown axiom \"" + std::string(text) + "\"");
}

std::string_view to_string(AxiomStatus s) {
    switch (s) {
        case AxiomStatus::Holds: return "Holds";
        case AxiomStatus::Violated: return "Violated";
        case AxiomStatus::Informational: return "Informational";
    }
    return "?";
}

std::uint64_t AxiomReport::statistic(std::string_view name) const {
    for (const auto& [key, value] : statistics) {
        if (key == name) {
            return value;
        }
    }
    return 0;
}

PreferenceFamily PreferenceFamily::model_backed(const GsleuModel& m, const TableCaps& caps) {
    PreferenceFamily p;
    p.model_ = m;
    p.table_ = std::make_shared<const PreferenceTable>(derive_table(m, caps));
    p.analysis_ = std::make_shared<const TableAnalysis>(*p.table_);
    return p;
}

PreferenceFamily PreferenceFamily::table_backed(PreferenceTable t) {
    PreferenceFamily p;
    p.table_ = std::make_shared<const PreferenceTable>(std::move(t));
    p.analysis_ = std::make_shared<const TableAnalysis>(*p.table_);
    return p;
}

std::vector<AxiomId> suite_axioms(AxiomSuite suite) {
    std::vector<AxiomId> ids{AxiomId::P1_5, AxiomId::P2_5, AxiomId::P3_5, AxiomId::P4_5,
                             AxiomId::P5_5, AxiomId::SE,   AxiomId::P0_5};
    if (suite == AxiomSuite::All) {
        ids.insert(ids.end(), {AxiomId::QP, AxiomId::NULLITY, AxiomId::DOMINANCE, AxiomId::P6_5});
    }
    return ids;
}

namespace {

bool is_subset(Mask x, Mask y) { return (x & ~y) == 0; }

/// Shared view of a family used by checkers and replay.
struct View {
    const PreferenceTable& t;
    const TableAnalysis& an;
    std::size_t n;
    std::size_t m;
    std::uint64_t acts;
    Mask full;

    explicit View(const PreferenceFamily& p)
        : t(p.table()),
          an(p.analysis()),
          n(p.table().space()->size()),
          m(p.table().outcomes()->size()),
          acts(p.table().act_count()),
          full(p.table().space()->full_mask()) {}

    std::uint32_t T(Mask a, std::uint64_t f) const { return t.tier(a, f); }
    bool weak(Mask a, std::uint64_t f, std::uint64_t g) const { return T(a, f) <= T(a, g); }
    bool strict(Mask a, std::uint64_t f, std::uint64_t g) const { return T(a, f) < T(a, g); }
    std::uint64_t constant(std::size_t o) const { return an.constant_code(o); }
    bool null_at(Mask b, Mask a) const { return an.null_at(b, a); }

    /// B ≥_A C, elicited with the best and worst constants.
    std::uint64_t bet(Mask b) const { return an.bet_code(an.best_outcome(), b, an.worst_outcome()); }

    /// Literal quantifier rule: every E where g ≻_E f has E' ⊇ E in the chain with f ≻_E' g.
    bool lex_rule(std::uint64_t f, std::uint64_t g) const {
        const auto& chain = an.chain();
        for (auto e : chain) {
            if (!strict(e, g, f)) {
                continue;
            }
            bool rescued = false;
            for (auto e2 : chain) {
                if (is_subset(e, e2) && strict(e2, f, g)) {
                    rescued = true;
                    break;
                }
            }
            if (!rescued) {
                return false;
            }
        }
        return true;
    }

    bool weak_unconditional(std::uint64_t f, std::uint64_t g) const {
        return an.unconditional()[f] <= an.unconditional()[g];
    }

    /// SE first display premise for B.
    bool se_premise(Mask b) const {
        for (auto e : an.chain()) {
            if (is_subset(b, e) && !an.agree(e, e & ~b)) {
                return false;
            }
        }
        return true;
    }

    /// A ≫ B by the existential definition.
    bool dominates_exists(Mask a, Mask b) const {
        const Mask u = a | b;
        const Mask free = full & ~u;
        bool found = false;
        for_each_submask(free, [&](Mask extra) {
            const Mask c = u | extra;
            if (!found && !null_at(a, c) && null_at(b, c)) {
                found = true;
            }
        });
        return found;
    }

    bool dominates_union(Mask a, Mask b) const {
        return !null_at(a, a | b) && null_at(b, a | b);
    }

    /// Some partition of A into cells C has f ≻_A hCg and hCf ≻_A g on every cell.
    bool small_event_partition(Mask a, std::uint64_t f, std::uint64_t g, std::size_t h) const {
        std::vector<Mask> members;
        for (Mask r = a; r != 0; r &= r - 1) {
            members.push_back(r & (~r + 1));
        }
        const std::size_t k = members.size();
        const std::uint32_t all = (std::uint32_t{1} << k) - 1;
        std::vector<signed char> good(std::size_t{all} + 1, -1);
        const auto hc = constant(h);
        auto is_good = [&](std::uint32_t cell) {
            auto& memo = good[cell];
            if (memo < 0) {
                Mask states = 0;
                for (std::size_t i = 0; i < k; ++i) {
                    if ((cell >> i) & 1U) {
                        states |= members[i];
                    }
                }
                memo = strict(a, f, an.compose_code(hc, states, g)) && strict(a, an.compose_code(hc, states, f), g) ? 1 : 0;
            }
            return memo == 1;
        };
        std::vector<signed char> reach(std::size_t{all} + 1, 0);
        reach[0] = 1;
        for (std::uint32_t mask = 1; mask <= all; ++mask) {
            const std::uint32_t low = mask & (~mask + 1);
            const std::uint32_t rest = mask ^ low;
            for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
                const std::uint32_t cell = sub | low;
                if (reach[mask ^ cell] && is_good(cell)) {
                    reach[mask] = 1;
                    break;
                }
                if (sub == 0) {
                    break;
                }
            }
        }
        return reach[all] == 1;
    }
};

class Collector {
public:
    Collector(AxiomReport& r, std::size_t max) : r_(r), max_(max) {}
    bool wants_witness() const { return r_.witnesses.size() < max_; }
    void add(Witness w) {
        ++violations_;
        if (wants_witness()) {
            r_.witnesses.push_back(std::move(w));
        }
    }
    void count() { ++violations_; }
    std::uint64_t violations() const { return violations_; }

private:
    AxiomReport& r_;
    std::size_t max_;
    std::uint64_t violations_ = 0;
};

void check_p1(const View& v, AxiomReport& r, Collector& c) {
    std::uint64_t instances = 0;
    const std::uint64_t h = 0;
    for (Mask a = 1; a < v.full; ++a) {
        for (std::uint64_t f = 0; f < v.acts; ++f) {
            ++instances;
            const auto fah = v.an.compose_code(f, a, h);
            if (v.T(a, f) != v.T(a, fah)) {
                const bool f_worse = v.T(a, fah) < v.T(a, f);
                const auto worse = f_worse ? f : fah;
                const auto better = f_worse ? fah : f;
                c.add({"clause2", {a}, {worse, better, h}, {}});
            }
        }
    }
    r.statistics = {{"instances", instances}, {"violations", c.violations()}};
    r.regime = "exhaustive (tier of f at A equals tier of fAh for every h)";
}

void check_p2(const View& v, AxiomReport& r, Collector& c) {
    std::uint64_t instances = 0;
    std::uint64_t weak_violations = 0;
    std::uint64_t strict_violations = 0;
    for (Mask a = 1; a <= v.full; ++a) {
        for_each_submask(a, [&](Mask b) {
            if (b == 0 || b == a) {
                return;
            }
            const Mask rest = a & ~b;
            const bool nonnull = !v.null_at(b, a);
            const auto& ta = v.t.tiers(a);
            const auto& tb = v.t.tiers(b);
            const auto& tc = v.t.tiers(rest);
            for (std::uint64_t f = 0; f < v.acts; ++f) {
                for (std::uint64_t g = 0; g < v.acts; ++g) {
                    if (tb[f] > tb[g] || tc[f] > tc[g] || f == g) {
                        continue;
                    }
                    if (ta[f] > ta[g]) {
                        ++weak_violations;
                        c.add({"weak", {a, b}, {f, g}, {}});
                    } else if (nonnull && tb[f] < tb[g] && ta[f] == ta[g]) {
                        ++strict_violations;
                        c.add({"strict", {a, b}, {f, g}, {}});
                    }
                }
            }
            instances += v.acts * (v.acts - 1);
        });
        if (a == v.full) {
            break;
        }
    }
    r.statistics = {{"instances", instances},
                    {"weak_violations", weak_violations},
                    {"strict_violations", strict_violations}};
}

void check_p3(const View& v, AxiomReport& r, Collector& c) {
    std::uint64_t instances = 0;
    for (Mask a = 1; a <= v.full; ++a) {
        for (std::size_t x = 0; x < v.m; ++x) {
            for (std::size_t y = 0; y < v.m; ++y) {
                ++instances;
                if (v.weak(a, v.constant(x), v.constant(y)) != v.weak(v.full, v.constant(x), v.constant(y))) {
                    c.add({"monotonicity", {a}, {}, {x, y}});
                }
            }
        }
        if (a == v.full) {
            break;
        }
    }
    r.statistics = {{"instances", instances}, {"violations", c.violations()}};
}

void check_p4(const View& v, AxiomReport& r, Collector& c) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < v.m; ++x) {
        for (std::size_t y = 0; y < v.m; ++y) {
            if (v.strict(v.full, v.constant(x), v.constant(y))) {
                pairs.emplace_back(x, y);
            }
        }
    }
    std::vector<std::vector<std::uint64_t>> bets(pairs.size(), std::vector<std::uint64_t>(std::size_t{v.full} + 1));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        for (Mask b = 0; b <= v.full; ++b) {
            bets[p][b] = v.an.bet_code(pairs[p].first, b, pairs[p].second);
            if (b == v.full) {
                break;
            }
        }
    }
    std::uint64_t instances = 0;
    std::vector<char> verdict(pairs.size());
    for (Mask a = 1; a <= v.full; ++a) {
        for_each_submask(a, [&](Mask b) {
            for_each_submask(a, [&](Mask cc) {
                ++instances;
                std::size_t yes = pairs.size();
                std::size_t no = pairs.size();
                for (std::size_t p = 0; p < pairs.size(); ++p) {
                    verdict[p] = v.weak(a, bets[p][b], bets[p][cc]);
                    (verdict[p] ? yes : no) = p;
                }
                if (yes < pairs.size() && no < pairs.size()) {
                    c.add({"prize", {a, b, cc}, {},
                           {pairs[yes].first, pairs[yes].second, pairs[no].first, pairs[no].second}});
                }
            });
        });
        if (a == v.full) {
            break;
        }
    }
    r.statistics = {{"instances", instances}, {"strict_prize_pairs", pairs.size()}, {"violations", c.violations()}};
}

void check_p5(const View& v, AxiomReport& r, Collector& c) {
    bool found = false;
    for (std::size_t x = 0; x < v.m && !found; ++x) {
        for (std::size_t y = 0; y < v.m && !found; ++y) {
            found = v.strict(v.full, v.constant(x), v.constant(y));
        }
    }
    if (!found) {
        c.add({"nondegeneracy", {v.full}, {}, {}});
    }
    r.statistics = {{"constants", v.m}, {"violations", c.violations()}};
}

void check_se(const View& v, AxiomReport& r, Collector& c) {
    const auto& chain = v.an.chain();
    std::uint64_t vacuous = 0;
    std::uint64_t premise_false = 0;
    std::uint64_t instances = 0;
    for (Mask b = 0; b <= v.full; ++b) {
        bool any = false;
        for (auto e : chain) {
            any = any || is_subset(b, e);
        }
        if (!any) {
            ++vacuous;
        }
        if (!v.se_premise(b)) {
            ++premise_false;
        } else {
            for_each_submask(v.full & ~b, [&](Mask extra) {
                const Mask a = b | extra;
                ++instances;
                if (!v.an.agree(a, a & ~b)) {
                    c.add({"display1", {b, a}, {}, {}});
                }
            });
        }
        if (b == v.full) {
            break;
        }
    }
    for (Mask a = 0; a <= v.full; ++a) {
        for (auto e : chain) {
            if (!is_subset(e, a)) {
                continue;
            }
            ++instances;
            if (!v.an.agree(a, a & ~e) && !v.an.agree(a, e)) {
                c.add({"display2", {a, e}, {}, {}});
            }
        }
        if (a == v.full) {
            break;
        }
    }
    r.statistics = {{"chain_length", chain.size()},
                    {"chain_complete", v.an.chain_complete() ? 1U : 0U},
                    {"vacuous_display1", vacuous},
                    {"premise_false_display1", premise_false},
                    {"instances", instances},
                    {"violations", c.violations()}};
}

void check_p0(const View& v, AxiomReport& r, Collector& c) {
    std::uint64_t instances = 0;
    for (std::uint64_t f = 0; f < v.acts; ++f) {
        for (std::uint64_t g = 0; g < v.acts; ++g) {
            ++instances;
            if (v.lex_rule(f, g) != v.weak_unconditional(f, g)) {
                c.add({"rule", {}, {f, g}, {}});
            }
        }
    }
    r.statistics = {{"instances", instances},
                    {"unconditional_explicit", v.an.unconditional_explicit() ? 1U : 0U},
                    {"violations", c.violations()}};
}

void check_qp(const View& v, AxiomReport& r, Collector& c) {
    std::vector<std::uint64_t> bet(std::size_t{v.full} + 1);
    for (Mask b = 0; b <= v.full; ++b) {
        bet[b] = v.bet(b);
        if (b == v.full) {
            break;
        }
    }
    std::uint64_t instances = 0;
    for (Mask a = 1; a <= v.full; ++a) {
        auto q = [&](Mask b) { return v.T(a, bet[b]); };
        for_each_submask(a, [&](Mask b) {
            ++instances;
            if (!(q(b) <= q(0))) {
                c.add({"nonnegativity", {a, b}, {}, {}});
            }
        });
        ++instances;
        if (!(q(a) < q(0))) {
            c.add({"positivity", {a}, {}, {}});
        }
        for_each_submask(a, [&](Mask d) {
            if (d == 0) {
                return;
            }
            const Mask rest = a & ~d;
            for_each_submask(rest, [&](Mask b) {
                for_each_submask(rest, [&](Mask cc) {
                    ++instances;
                    if ((q(b) <= q(cc)) != (q(b | d) <= q(cc | d))) {
                        c.add({"additivity", {a, b, cc, d}, {}, {}});
                    }
                });
            });
        });
        if (a == v.full) {
            break;
        }
    }
    r.statistics = {{"instances", instances}, {"violations", c.violations()}};
    r.regime = "exhaustive (weak ordering holds by construction of tiers)";
}

void check_nullity(const View& v, AxiomReport& r, Collector& c) {
    std::uint64_t instances = 0;
    for (Mask a = 0; a <= v.full; ++a) {
        for_each_submask(a, [&](Mask b) {
            for_each_submask(b, [&](Mask cc) {
                ++instances;
                if (v.null_at(b, a) && !v.null_at(cc, a)) {
                    c.add({"subset", {a, b, cc}, {}, {}});
                }
                if (v.null_at(cc, a) && v.null_at(b & ~cc, a) && !v.null_at(b, a)) {
                    c.add({"union", {a, b, cc}, {}, {}});
                }
                if (v.null_at(cc, b) && !v.null_at(cc, a)) {
                    c.add({"transfer", {a, b, cc}, {}, {}});
                }
            });
        });
        if (a == v.full) {
            break;
        }
    }
    r.statistics = {{"instances", instances}, {"violations", c.violations()}};
}

void check_dominance(const View& v, AxiomReport& r, Collector& c) {
    const std::size_t events = std::size_t{v.full} + 1;
    std::vector<char> dom(events * events, 0);
    for (Mask cc = 0; cc <= v.full; ++cc) {
        for_each_submask(cc, [&](Mask a) {
            if (v.null_at(a, cc)) {
                return;
            }
            for_each_submask(cc, [&](Mask b) {
                if (v.null_at(b, cc)) {
                    dom[a * events + b] = 1;
                }
            });
        });
        if (cc == v.full) {
            break;
        }
    }
    auto d = [&](Mask a, Mask b) { return dom[a * events + b] != 0; };
    auto approx = [&](Mask a, Mask b) { return !d(a, b) && !d(b, a); };
    std::uint64_t instances = 0;
    for (Mask a = 0; a < events; ++a) {
        for (Mask b = 0; b < events; ++b) {
            ++instances;
            if (d(a, b) != v.dominates_union(a, b)) {
                c.add({"union_criterion", {a, b}, {}, {}});
            }
        }
        if (d(a, a)) {
            c.add({"irreflexive", {a}, {}, {}});
        }
        if (a != 0 && !d(a, 0)) {
            c.add({"empty", {a}, {}, {}});
        }
    }
    for (Mask a = 0; a < events; ++a) {
        for (Mask b = 0; b < events; ++b) {
            const bool ab = d(a, b);
            const bool eq_ab = approx(a, b);
            if (!ab && !eq_ab) {
                continue;
            }
            for (Mask cc = 0; cc < events; ++cc) {
                ++instances;
                if (ab && d(b, cc) && !d(a, cc)) {
                    c.add({"transitive", {a, b, cc}, {}, {}});
                }
                if (eq_ab && approx(b, cc) && !approx(a, cc)) {
                    c.add({"equivalence_transitive", {a, b, cc}, {}, {}});
                }
            }
        }
    }
    r.statistics = {{"instances", instances}, {"violations", c.violations()}};
}

void check_p6(const View& v, AxiomReport& r, Collector& c, const AxiomOptions& options) {
    // Count strict (A, f, g) pairs from tier sizes.
    std::uint64_t total = 0;
    std::vector<std::uint64_t> strict_pairs(std::size_t{v.full} + 1, 0);
    for (Mask a = 1; a <= v.full; ++a) {
        const auto& t = v.t.tiers(a);
        std::vector<std::uint64_t> sizes;
        for (auto x : t) {
            if (x >= sizes.size()) {
                sizes.resize(std::size_t{x} + 1, 0);
            }
            ++sizes[x];
        }
        std::uint64_t same = 0;
        for (auto s : sizes) {
            same += s * s;
        }
        strict_pairs[a] = (v.acts * v.acts - same) / 2;
        total += strict_pairs[a] * v.m;
        if (a == v.full) {
            break;
        }
    }
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    auto visit = [&](Mask a, std::uint64_t f, std::uint64_t g, std::size_t h) {
        ++instances;
        if (!v.small_event_partition(a, f, g, h)) {
            ++failures;
            c.add({"no_partition", {a}, {f, g}, {h}});
        }
    };
    if (total <= options.p6_instance_cap) {
        for (Mask a = 1; a <= v.full; ++a) {
            for (std::uint64_t f = 0; f < v.acts; ++f) {
                for (std::uint64_t g = 0; g < v.acts; ++g) {
                    if (v.strict(a, f, g)) {
                        for (std::size_t h = 0; h < v.m; ++h) {
                            visit(a, f, g, h);
                        }
                    }
                }
            }
            if (a == v.full) {
                break;
            }
        }
        r.regime = "exhaustive";
    } else {
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<Mask> pick_event(1, v.full);
        std::uniform_int_distribution<std::uint64_t> pick_act(0, v.acts - 1);
        std::uniform_int_distribution<std::size_t> pick_outcome(0, v.m - 1);
        std::uint64_t attempts = 0;
        while (instances < options.p6_instance_cap && attempts < options.p6_instance_cap * 64) {
            ++attempts;
            const Mask a = pick_event(rng);
            const auto f = pick_act(rng);
            const auto g = pick_act(rng);
            const auto h = pick_outcome(rng);
            if (v.strict(a, f, g)) {
                visit(a, f, g, h);
            }
        }
        r.regime = "sampled (" + std::to_string(instances) + " of " + std::to_string(total) + " instances, seed " +
                   std::to_string(options.seed) + ")";
    }
    r.statistics = {{"instances", instances}, {"population", total}, {"no_partition", failures}};
}

}  // namespace

AxiomReport check_axiom(const PreferenceFamily& p, AxiomId id, const AxiomOptions& options) {
    const View v(p);
    AxiomReport r;
    r.id = id;
    Collector c(r, options.max_witnesses);
    switch (id) {
        case AxiomId::P0_5: check_p0(v, r, c); break;
        case AxiomId::P1_5: check_p1(v, r, c); break;
        case AxiomId::P2_5: check_p2(v, r, c); break;
        case AxiomId::P3_5: check_p3(v, r, c); break;
        case AxiomId::P4_5: check_p4(v, r, c); break;
        case AxiomId::P5_5: check_p5(v, r, c); break;
        case AxiomId::P6_5: check_p6(v, r, c, options); break;
        case AxiomId::SE: check_se(v, r, c); break;
        case AxiomId::QP: check_qp(v, r, c); break;
        case AxiomId::NULLITY: check_nullity(v, r, c); break;
        case AxiomId::DOMINANCE: check_dominance(v, r, c); break;
    }
    if (id == AxiomId::P6_5) {
        r.status = AxiomStatus::Informational;
    } else {
        r.status = c.violations() == 0 ? AxiomStatus::Holds : AxiomStatus::Violated;
    }
    return r;
}

AxiomSummary check_all(const PreferenceFamily& p, AxiomSuite suite, const AxiomOptions& options) {
    AxiomSummary summary;
    for (auto id : suite_axioms(suite)) {
        summary.reports.push_back(check_axiom(p, id, options));
        if (summary.reports.back().status == AxiomStatus::Violated) {
            summary.pass = false;
        }
    }
    return summary;
}

bool replay_witness(const PreferenceFamily& p, AxiomId id, const Witness& w) {
    const View v(p);
    const auto& e = w.events;
    const auto& x = w.acts;
    const auto& o = w.outcomes;
    auto need = [&](std::size_t events, std::size_t acts, std::size_t outcomes) {
        if (e.size() < events || x.size() < acts || o.size() < outcomes) {
            throw ParseError("witness is missing components for clause " + w.clause);
        }
        for (auto mask : e) {
            if (!is_subset(mask, v.full)) {
                throw ParseError("witness event outside the state space");
            }
        }
        for (auto code : x) {
            if (code >= v.acts) {
                throw ParseError("witness act outside the act set");
            }
        }
        for (auto out : o) {
            if (out >= v.m) {
                throw ParseError("witness outcome outside the outcome space");
            }
        }
    };
    const auto& cl = w.clause;
    switch (id) {
        case AxiomId::P1_5:
            need(1, 3, 0);
            return v.weak(e[0], v.an.compose_code(x[0], e[0], x[2]), v.an.compose_code(x[1], e[0], x[2])) &&
                   !v.weak(e[0], x[0], x[1]);
        case AxiomId::P2_5: {
            need(2, 2, 0);
            const Mask a = e[0];
            const Mask b = e[1];
            if (!is_subset(b, a)) {
                return false;
            }
            const Mask rest = a & ~b;
            if (cl == "weak") {
                return v.weak(b, x[0], x[1]) && v.weak(rest, x[0], x[1]) && !v.weak(a, x[0], x[1]);
            }
            return !v.null_at(b, a) && v.strict(b, x[0], x[1]) && v.weak(rest, x[0], x[1]) &&
                   !v.strict(a, x[0], x[1]);
        }
        case AxiomId::P3_5:
            need(1, 0, 2);
            return e[0] != 0 && v.weak(e[0], v.constant(o[0]), v.constant(o[1])) !=
                                    v.weak(v.full, v.constant(o[0]), v.constant(o[1]));
        case AxiomId::P4_5: {
            need(3, 0, 4);
            const Mask a = e[0];
            if (!is_subset(e[1], a) || !is_subset(e[2], a)) {
                return false;
            }
            const bool pairs_ok = v.strict(v.full, v.constant(o[0]), v.constant(o[1])) &&
                                  v.strict(v.full, v.constant(o[2]), v.constant(o[3]));
            return pairs_ok &&
                   v.weak(a, v.an.bet_code(o[0], e[1], o[1]), v.an.bet_code(o[0], e[2], o[1])) &&
                   !v.weak(a, v.an.bet_code(o[2], e[1], o[3]), v.an.bet_code(o[2], e[2], o[3]));
        }
        case AxiomId::P5_5:
            for (std::size_t a = 0; a < v.m; ++a) {
                for (std::size_t b = 0; b < v.m; ++b) {
                    if (v.strict(v.full, v.constant(a), v.constant(b))) {
                        return false;
                    }
                }
            }
            return true;
        case AxiomId::SE: {
            need(2, 0, 0);
            const auto& chain = v.an.chain();
            if (cl == "display1") {
                const Mask b = e[0];
                const Mask a = e[1];
                return is_subset(b, a) && v.se_premise(b) && !v.an.agree(a, a & ~b);
            }
            const Mask a = e[0];
            const Mask ev = e[1];
            return std::find(chain.begin(), chain.end(), ev) != chain.end() && is_subset(ev, a) &&
                   !v.an.agree(a, a & ~ev) && !v.an.agree(a, ev);
        }
        case AxiomId::P0_5:
            need(0, 2, 0);
            return v.lex_rule(x[0], x[1]) != v.weak_unconditional(x[0], x[1]);
        case AxiomId::QP: {
            need(1, 0, 0);
            const Mask a = e[0];
            auto q = [&](Mask b) { return v.T(a, v.bet(b)); };
            if (cl == "positivity") {
                return a != 0 && !(q(a) < q(0));
            }
            if (cl == "nonnegativity") {
                need(2, 0, 0);
                return is_subset(e[1], a) && !(q(e[1]) <= q(0));
            }
            need(4, 0, 0);
            const Mask b = e[1];
            const Mask cc = e[2];
            const Mask d = e[3];
            if (!is_subset(b | cc | d, a) || (d & (b | cc)) != 0) {
                return false;
            }
            return (q(b) <= q(cc)) != (q(b | d) <= q(cc | d));
        }
        case AxiomId::NULLITY: {
            need(3, 0, 0);
            const Mask a = e[0];
            const Mask b = e[1];
            const Mask cc = e[2];
            if (!is_subset(cc, b) || !is_subset(b, a)) {
                return false;
            }
            if (cl == "subset") {
                return v.null_at(b, a) && !v.null_at(cc, a);
            }
            if (cl == "union") {
                return v.null_at(cc, a) && v.null_at(b & ~cc, a) && !v.null_at(b, a);
            }
            return v.null_at(cc, b) && !v.null_at(cc, a);
        }
        case AxiomId::DOMINANCE: {
            need(1, 0, 0);
            if (cl == "irreflexive") {
                return v.dominates_exists(e[0], e[0]);
            }
            if (cl == "empty") {
                return e[0] != 0 && !v.dominates_exists(e[0], 0);
            }
            need(2, 0, 0);
            if (cl == "union_criterion") {
                return v.dominates_exists(e[0], e[1]) != v.dominates_union(e[0], e[1]);
            }
            need(3, 0, 0);
            auto d = [&](Mask a, Mask b) { return v.dominates_exists(a, b); };
            if (cl == "transitive") {
                return d(e[0], e[1]) && d(e[1], e[2]) && !d(e[0], e[2]);
            }
            auto approx = [&](Mask a, Mask b) { return !d(a, b) && !d(b, a); };
            return approx(e[0], e[1]) && approx(e[1], e[2]) && !approx(e[0], e[2]);
        }
        case AxiomId::P6_5:
            need(1, 2, 1);
            return v.strict(e[0], x[0], x[1]) && !v.small_event_partition(e[0], x[0], x[1], o[0]);
    }
    return false;
}

std::string describe_witness(const PreferenceFamily& p, const Witness& w) {
    const auto& t = p.table();
    std::string out = w.clause + ":";
    for (auto e : w.events) {
        std::string labels;
        for (const auto& s : Event(t.space(), e).labels()) {
            labels += (labels.empty() ? "" : ",") + s;
        }
        out += " {" + labels + "}";
    }
    for (auto a : w.acts) {
        out += " " + t.act_names()[a] + "=" + t.act(a).to_string();
    }
    for (auto o : w.outcomes) {
        out += " " + t.outcomes()->label(o);
    }
    return out;
}

}  // namespace lexeu
