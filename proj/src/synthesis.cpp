#include "lexeu/synthesis.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lexeu {

namespace {

std::vector<AxiomId> hierarchy_axioms() {
    return {AxiomId::P1_5, AxiomId::P2_5, AxiomId::P3_5, AxiomId::P4_5, AxiomId::P5_5};
}

void precheck_axioms(const PreferenceFamily& p, const std::vector<AxiomId>& ids) {
    std::string failed;
    for (auto id : ids) {
        auto report = check_axiom(p, id, AxiomOptions{1, 0, 0});
        if (report.status == AxiomStatus::Violated) {
            failed += (failed.empty() ? "" : "; ") + std::string(to_string(id));
            if (!report.witnesses.empty()) {
                failed += " (" + describe_witness(p, report.witnesses.front()) + ")";
            }
        }
    }
    if (!failed.empty()) {
        throw AxiomPrecheckFailed("axioms violated: " + failed);
    }
}

Mask class_top(const ClassPartition& partition, std::size_t k) {
    if (k == 0 || k > partition.classes.size()) {
        return 0;
    }
    Mask top = 0;
    for (const auto& e : partition.classes[k - 1]) {
        top |= e.mask();
    }
    return top;
}

/** Class-local data shared by the linear systems of one class. */
struct ClassView {
    const PreferenceTable& t;
    const TableAnalysis& an;
    std::size_t n;
    std::size_t m;
    Mask top;
    Mask atoms;
    std::vector<std::size_t> states;
    std::size_t best;
    std::size_t worst;
    std::vector<std::uint64_t> place;

    ClassView(const PreferenceFamily& p, std::size_t k, const ClassPartition& partition)
        : t(p.table()),
          an(p.analysis()),
          n(p.table().space()->size()),
          m(p.table().outcomes()->size()),
          top(class_top(partition, k)),
          atoms(top & ~class_top(partition, k + 1)),
          best(0),
          worst(0),
          place(n, 1) {
        if (atoms == 0) {
            throw AxiomPrecheckFailed("class " + std::to_string(k) + " has no atoms");
        }
        for (std::size_t s = 0; s < n; ++s) {
            if ((atoms >> s) & 1U) {
                states.push_back(s);
            }
        }
        for (std::size_t s = n; s-- > 1;) {
            place[s - 1] = place[s] * m;
        }
        for (std::size_t o = 1; o < m; ++o) {
            const auto tier = t.tier(top, an.constant_code(o));
            if (tier < t.tier(top, an.constant_code(best))) {
                best = o;
            }
            if (tier >= t.tier(top, an.constant_code(worst))) {
                worst = o;
            }
        }
        if (t.tier(top, an.constant_code(best)) == t.tier(top, an.constant_code(worst))) {
            throw AxiomPrecheckFailed("constant acts tie at class " + std::to_string(k));
        }
    }

    std::size_t outcome(std::uint64_t code, std::size_t s) const { return (code / place[s]) % m; }
    std::string state(std::size_t s) const { return t.space()->label(s); }
    std::string label(std::size_t o) const { return t.outcomes()->label(o); }

    /// Acts grouped by tier at `event`, best first.
    std::vector<std::vector<std::uint64_t>> tiers(Mask event) const {
        std::vector<std::vector<std::uint64_t>> out;
        const auto& tier = t.tiers(event);
        for (std::uint64_t f = 0; f < tier.size(); ++f) {
            if (tier[f] >= out.size()) {
                out.resize(std::size_t{tier[f]} + 1);
            }
            out[tier[f]].push_back(f);
        }
        return out;
    }
};

/** Adds constraints to a system after scaling, skipping exact duplicates. */
class DedupBuilder {
public:
    explicit DedupBuilder(ConstraintSystem& sys) : sys_(sys) {}

    void add(std::vector<Rational> coef, Relation relation, Rational rhs, const std::string& label) {
        auto first = std::find_if(coef.begin(), coef.end(), [](const Rational& x) { return x != 0; });
        if (first == coef.end()) {
            const bool holds = relation == Relation::Geq ? 0 >= rhs : relation == Relation::Gt ? 0 > rhs : rhs == 0;
            if (holds) {
                return;
            }
        } else {
            Rational scale = 1 / abs(*first);
            if (relation == Relation::Eq && *first < 0) {
                scale = -scale;
            }
            for (auto& x : coef) {
                x *= scale;
            }
            rhs *= scale;
        }
        if (!seen_.emplace(static_cast<int>(relation), coef, rhs).second) {
            return;
        }
        LinearConstraint c;
        for (std::size_t j = 0; j < coef.size(); ++j) {
            if (coef[j] != 0) {
                c.coefficients[sys_.variables()[j]] = coef[j];
            }
        }
        c.relation = relation;
        c.rhs = rhs;
        c.label = label;
        sys_.add(std::move(c));
    }

private:
    ConstraintSystem& sys_;
    std::set<std::tuple<int, std::vector<Rational>, Rational>> seen_;
};

std::string event_text(const PreferenceTable& t, Mask mask) {
    std::string out = "{";
    bool first = true;
    for (const auto& label : Event(t.space(), mask).labels()) {
        out += (first ? "" : ",") + label;
        first = false;
    }
    return out + "}";
}

/// Adds "rep_t > rep_{t+1}" and "member = rep" for the tiers of `event`.
void add_tier_constraints(const ClassView& v, DedupBuilder& b, Mask event,
                          const std::function<std::vector<Rational>(std::uint64_t)>& linear) {
    const auto groups = v.tiers(event);
    std::vector<std::vector<Rational>> reps;
    const std::string where = " at " + event_text(v.t, event);
    for (const auto& group : groups) {
        reps.push_back(linear(group.front()));
        for (std::size_t i = 1; i < group.size(); ++i) {
            auto c = linear(group[i]);
            for (std::size_t j = 0; j < c.size(); ++j) {
                c[j] -= reps.back()[j];
            }
            b.add(std::move(c), Relation::Eq, 0,
                  v.t.act_names()[group[i]] + " ~ " + v.t.act_names()[group.front()] + where);
        }
        if (reps.size() >= 2) {
            auto c = reps[reps.size() - 2];
            for (std::size_t j = 0; j < c.size(); ++j) {
                c[j] -= reps.back()[j];
            }
            const auto& prev = groups[reps.size() - 2];
            b.add(std::move(c), Relation::Gt, 0,
                  v.t.act_names()[prev.front()] + " > " + v.t.act_names()[group.front()] + where);
        }
    }
}

/// Bets on subsets of the atoms plus positivity and normalization; variables p(s).
ConstraintSystem measure_system(const ClassView& v) {
    ConstraintSystem sys;
    for (auto s : v.states) {
        sys.add_variable("p(" + v.state(s) + ")");
    }
    DedupBuilder b(sys);
    const auto z = v.states.size();
    std::vector<Rational> ones(z, Rational(1));
    b.add(ones, Relation::Eq, 1, "normalization");
    for (std::size_t i = 0; i < z; ++i) {
        std::vector<Rational> unit(z);
        unit[i] = 1;
        b.add(unit, Relation::Gt, 0, "positivity of " + v.state(v.states[i]));
    }
    // Order subsets of the atoms by the bet (best on B, worst elsewhere) at the class top event.
    const auto worst_at_s = v.an.worst_outcome();
    const auto best_at_s = v.an.best_outcome();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ranked;  // (tier, local subset)
    for (std::uint32_t sub = 0; sub < (1U << z); ++sub) {
        Mask mask = 0;
        for (std::size_t i = 0; i < z; ++i) {
            if ((sub >> i) & 1U) {
                mask |= Mask{1} << v.states[i];
            }
        }
        ranked.emplace_back(v.t.tier(v.top, v.an.bet_code(best_at_s, mask, worst_at_s)), sub);
    }
    std::stable_sort(ranked.begin(), ranked.end());
    auto indicator = [&](std::uint32_t sub) {
        std::vector<Rational> c(z);
        for (std::size_t i = 0; i < z; ++i) {
            c[i] = (sub >> i) & 1U ? 1 : 0;
        }
        return c;
    };
    auto subset_text = [&](std::uint32_t sub) {
        Mask mask = 0;
        for (std::size_t i = 0; i < z; ++i) {
            if ((sub >> i) & 1U) {
                mask |= Mask{1} << v.states[i];
            }
        }
        return event_text(v.t, mask);
    };
    std::size_t rep = 0;
    for (std::size_t i = 1; i < ranked.size(); ++i) {
        auto c = indicator(ranked[rep].second);
        const auto d = indicator(ranked[i].second);
        for (std::size_t j = 0; j < z; ++j) {
            c[j] -= d[j];
        }
        if (ranked[i].first == ranked[rep].first) {
            b.add(std::move(c), Relation::Eq, 0,
                  "bet " + subset_text(ranked[rep].second) + " as probable as " + subset_text(ranked[i].second));
        } else {
            b.add(std::move(c), Relation::Gt, 0,
                  "bet " + subset_text(ranked[rep].second) + " more probable than " + subset_text(ranked[i].second));
            rep = i;
        }
    }
    return sys;
}

/// Every nonempty subset of the atoms, as an event mask.
std::vector<Mask> class_events(const ClassView& v) {
    std::vector<Mask> out;
    for_each_submask(v.atoms, [&](Mask w) {
        if (w != 0) {
            out.push_back(w);
        }
    });
    return out;
}

/// Utility system for a fixed measure; variables u(o).
ConstraintSystem utility_system(const ClassView& v, const std::vector<Rational>& measure) {
    ConstraintSystem sys;
    for (std::size_t o = 0; o < v.m; ++o) {
        sys.add_variable("u(" + v.label(o) + ")");
    }
    DedupBuilder b(sys);
    std::vector<Rational> unit(v.m);
    unit[v.worst] = 1;
    b.add(unit, Relation::Eq, 0, "u(worst) = 0");
    unit[v.worst] = 0;
    unit[v.best] = 1;
    b.add(unit, Relation::Eq, 1, "u(best) = 1");
    for (auto w : class_events(v)) {
        add_tier_constraints(v, b, w, [&](std::uint64_t f) {
            std::vector<Rational> c(v.m);
            for (auto s : v.states) {
                if ((w >> s) & 1U) {
                    c[v.outcome(f, s)] += measure[s];
                }
            }
            return c;
        });
    }
    return sys;
}

/// Measure system for a fixed utility: bets plus every indexed preference of the class.
ConstraintSystem measure_given_utility(const ClassView& v, const std::vector<Rational>& utility) {
    ConstraintSystem sys = measure_system(v);
    ConstraintSystem out(sys.variables());
    DedupBuilder b(out);
    for (const auto& c : sys.constraints()) {
        std::vector<Rational> coef(out.variables().size());
        for (const auto& [name, value] : c.coefficients) {
            coef[out.index_of(name)] = value;
        }
        b.add(std::move(coef), c.relation, c.rhs, c.label);
    }
    for (auto w : class_events(v)) {
        add_tier_constraints(v, b, w, [&](std::uint64_t f) {
            std::vector<Rational> c(v.states.size());
            for (std::size_t i = 0; i < v.states.size(); ++i) {
                if ((w >> v.states[i]) & 1U) {
                    c[i] = utility[v.outcome(f, v.states[i])];
                }
            }
            return c;
        });
    }
    return out;
}

/// Additive system with a separate utility per atom; variables phi(s,o) for o ≠ worst.
ConstraintSystem state_utility_system(const ClassView& v) {
    ConstraintSystem sys;
    std::vector<std::vector<std::size_t>> index(v.states.size(), std::vector<std::size_t>(v.m, SIZE_MAX));
    for (std::size_t i = 0; i < v.states.size(); ++i) {
        for (std::size_t o = 0; o < v.m; ++o) {
            if (o != v.worst) {
                index[i][o] = sys.add_variable("phi(" + v.state(v.states[i]) + "," + v.label(o) + ")");
            }
        }
    }
    DedupBuilder b(sys);
    const auto width = sys.variables().size();
    // The best-outcome weights play the role of the measure.
    const auto bets = measure_system(v);
    for (const auto& c : bets.constraints()) {
        std::vector<Rational> coef(width);
        for (const auto& [name, value] : c.coefficients) {
            coef[index[bets.index_of(name)][v.best]] = value;
        }
        b.add(std::move(coef), c.relation, c.rhs, c.label);
    }
    for (auto w : class_events(v)) {
        add_tier_constraints(v, b, w, [&](std::uint64_t f) {
            std::vector<Rational> c(width);
            for (std::size_t i = 0; i < v.states.size(); ++i) {
                const auto o = v.outcome(f, v.states[i]);
                if (((w >> v.states[i]) & 1U) && o != v.worst) {
                    c[index[i][o]] += 1;
                }
            }
            return c;
        });
    }
    return sys;
}

std::vector<Rational> spread_measure(const ClassView& v, const std::vector<Rational>& local) {
    std::vector<Rational> out(v.n);
    for (std::size_t i = 0; i < v.states.size(); ++i) {
        out[v.states[i]] = local[i];
    }
    return out;
}

[[noreturn]] void unrepresentable(const std::string& what, const ConstraintSystem& sys, const SolverCaps& caps) {
    auto core = infeasible_subsystem(sys, caps);
    throw Unrepresentable(what, sys, std::move(core));
}

}  // namespace

ClassPartition infer_hierarchy(const PreferenceFamily& p, bool precheck) {
    if (precheck) {
        precheck_axioms(p, hierarchy_axioms());
    }
    const auto& t = p.table();
    const auto& an = p.analysis();
    const Mask full = t.space()->full_mask();
    auto dominates = [&](Mask a, Mask b) { return !an.null_at(a, a | b) && an.null_at(b, a | b); };
    std::vector<Mask> reps;
    std::vector<std::vector<Mask>> groups;
    ClassPartition out;
    for (Mask a = 0; a <= full; ++a) {
        if (a == 0 || !dominates(a, 0)) {
            out.trivial.emplace_back(t.space(), a);
        } else {
            std::size_t g = 0;
            while (g < reps.size() && (dominates(a, reps[g]) || dominates(reps[g], a))) {
                ++g;
            }
            if (g == reps.size()) {
                reps.push_back(a);
                groups.emplace_back();
            }
            groups[g].push_back(a);
        }
        if (a == full) {
            break;
        }
    }
    std::vector<std::size_t> order(reps.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::vector<std::size_t> below(reps.size(), 0);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (auto r : reps) {
            below[i] += dominates(reps[i], r) ? 1 : 0;
        }
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return below[x] > below[y]; });
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = 0; j < order.size(); ++j) {
            const bool above = dominates(reps[order[i]], reps[order[j]]);
            if ((i < j) != above) {
                throw AxiomPrecheckFailed("dominance between classes is not a strict total order");
            }
        }
        for (auto a : groups[order[i]]) {
            for (auto b : groups[order[i]]) {
                if (dominates(a, b)) {
                    throw AxiomPrecheckFailed("events " + event_text(t, a) + " and " + event_text(t, b) +
                                              " share a class but one dominates the other");
                }
            }
        }
        out.classes.emplace_back();
        for (auto a : groups[order[i]]) {
            out.classes.back().emplace_back(t.space(), a);
        }
    }
    return out;
}

std::vector<Rational> infer_measure(const PreferenceFamily& p, std::size_t k, const ClassPartition& partition,
                                    const SolverCaps& caps) {
    const ClassView v(p, k, partition);
    const auto sys = measure_system(v);
    const auto result = solve(sys, caps);
    if (!result.feasible) {
        unrepresentable("no additive measure agrees with the bets of class " + std::to_string(k), sys, caps);
    }
    return spread_measure(v, result.assignment);
}

ClassFit infer_utility(const PreferenceFamily& p, std::size_t k, const ClassPartition& partition,
                       const std::vector<Rational>& measure, const SynthesisOptions& options) {
    const ClassView v(p, k, partition);
    ClassFit fit;
    auto try_measure = [&](const std::vector<Rational>& candidate) {
        ++fit.attempts;
        const auto result = solve(utility_system(v, candidate), options.solver);
        if (result.feasible) {
            fit.measure = candidate;
            fit.utility = result.assignment;
        }
        return result.feasible;
    };
    if (try_measure(measure)) {
        fit.strategy = "given-measure";
        return fit;
    }
    // Separate per-atom utilities are linear; each atom's utility is a candidate for all.
    const auto per_state = state_utility_system(v);
    if (per_state.variables().size() <= options.solver.max_variables) {
        const auto additive = solve(per_state, options.solver);
        if (additive.feasible) {
            std::set<std::vector<Rational>> candidates;
            for (std::size_t i = 0; i < v.states.size(); ++i) {
                std::vector<Rational> u(v.m);
                for (std::size_t o = 0; o < v.m; ++o) {
                    if (o != v.worst) {
                        u[o] = additive.assignment[per_state.index_of("phi(" + v.state(v.states[i]) + "," +
                                                                      v.label(o) + ")")];
                    }
                }
                const Rational top = u[v.best];
                if (top <= 0) {
                    continue;
                }
                for (auto& x : u) {
                    x /= top;
                }
                candidates.insert(u);
            }
            for (const auto& u : candidates) {
                ++fit.attempts;
                const auto result = solve(measure_given_utility(v, u), options.solver);
                if (result.feasible) {
                    fit.measure = spread_measure(v, result.assignment);
                    const auto check = solve(utility_system(v, fit.measure), options.solver);
                    fit.utility = check.feasible ? check.assignment : u;
                    fit.strategy = "state-utility";
                    return fit;
                }
            }
        }
    }
    // Vertices of the measure polytope shrunk by half the optimal slack.
    const auto bets = measure_system(v);
    const auto interior = solve(bets, options.solver);
    if (interior.feasible && interior.slack) {
        ConstraintSystem shrunk(bets.variables());
        const Rational delta = *interior.slack / 2;
        for (auto c : bets.constraints()) {
            if (c.relation == Relation::Gt) {
                c.relation = Relation::Geq;
                c.rhs += delta;
            }
            shrunk.add(std::move(c));
        }
        std::set<std::vector<Rational>> tried;
        for (std::size_t i = 0; i < v.states.size() && tried.size() < options.vertex_retry_cap; ++i) {
            for (int dir : {1, -1}) {
                const auto vertex = maximize(shrunk, {{bets.variables()[i], Rational(dir)}}, options.solver);
                if (vertex.status != OptimumResult::Status::Optimal || !tried.insert(vertex.assignment).second) {
                    continue;
                }
                if (try_measure(spread_measure(v, vertex.assignment))) {
                    fit.strategy = "measure-vertex";
                    return fit;
                }
            }
        }
    }
    unrepresentable("no utility agrees with the indexed preferences of class " + std::to_string(k),
                    utility_system(v, measure), options.solver);
}

SynthesisResult synthesize(const PreferenceFamily& p, const SynthesisOptions& options) {
    const auto& t = p.table();
    std::vector<StageRecord> diagnostics;
    if (options.precheck) {
        precheck_axioms(p, suite_axioms(AxiomSuite::Core));
        diagnostics.push_back({"precheck", 0, {{"axioms", suite_axioms(AxiomSuite::Core).size()}}, "core axioms hold"});
    }
    const auto partition = infer_hierarchy(p, false);
    diagnostics.push_back({"hierarchy", 0, {{"classes", partition.classes.size()}}, ""});
    std::vector<Level> levels;
    for (std::size_t k = 1; k <= partition.classes.size(); ++k) {
        const auto measure = infer_measure(p, k, partition, options.solver);
        const auto fit = infer_utility(p, k, partition, measure, options);
        const Mask atoms = class_top(partition, k) & ~class_top(partition, k + 1);
        diagnostics.push_back({"class", k,
                               {{"atoms", Event(t.space(), atoms).size()}, {"attempts", fit.attempts}},
                               fit.strategy});
        levels.push_back(Level{Event(t.space(), atoms), fit.measure, fit.utility});
    }
    GsleuModel model(t.space(), t.outcomes(), std::move(levels));
    const auto report = validate_model(model);
    if (!report.valid()) {
        throw VerificationFailed("synthesized model is invalid: " + report.summary(), TableMismatch{});
    }
    const auto derived = derive_table(model, TableCaps{t.act_count(), t.space()->size()});
    if (auto mismatch = first_mismatch(t, derived, true)) {
        throw VerificationFailed("derived table differs at " + event_text(t, mismatch->event) + " for " +
                                     t.act_names()[mismatch->f] + ", " + t.act_names()[mismatch->g],
                                 *mismatch);
    }
    diagnostics.push_back({"verify", 0, {{"events", t.event_count()}, {"acts", t.act_count()}}, "tables identical"});
    return SynthesisResult{std::move(model), std::move(diagnostics), true};
}

}  // namespace lexeu
