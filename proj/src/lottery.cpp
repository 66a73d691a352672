#include "lexeu/lottery.hpp"

#include "lexeu/error.hpp"

namespace lexeu {

Lottery::Lottery(OutcomeSpacePtr outcomes, std::vector<Rational> weights)
    : outcomes_(std::move(outcomes)), weights_(std::move(weights)) {
    if (!outcomes_ || weights_.size() != outcomes_->size()) {
        throw NotNormalized("lottery weights must cover the outcome space");
    }
    Rational total = 0;
    for (const auto& w : weights_) {
        if (w < 0) {
            throw NotNormalized("lottery weight is negative");
        }
        total += w;
    }
    if (total != 1) {
        throw NotNormalized("lottery weights sum to " + format_rational(total));
    }
}

Lottery Lottery::degenerate(OutcomeSpacePtr outcomes, std::size_t outcome) {
    std::vector<Rational> w(outcomes->size());
    w.at(outcome) = 1;
    return Lottery(std::move(outcomes), std::move(w));
}

std::vector<std::pair<std::size_t, Rational>> Lottery::support() const {
    std::vector<std::pair<std::size_t, Rational>> out;
    for (std::size_t o = 0; o < weights_.size(); ++o) {
        if (weights_[o] != 0) {
            out.emplace_back(o, weights_[o]);
        }
    }
    return out;
}

std::string Lottery::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [o, w] : support()) {
        out += (first ? "" : ", ") + outcomes_->label(o) + ":" + format_rational(w);
        first = false;
    }
    return out + "}";
}

Lottery normalize_lottery(OutcomeSpacePtr outcomes,
                          const std::vector<std::pair<std::size_t, Rational>>& raw) {
    std::vector<Rational> w(outcomes->size());
    Rational total = 0;
    for (const auto& [o, p] : raw) {
        if (o >= w.size()) {
            throw UnknownOutcome("unknown outcome index " + std::to_string(o));
        }
        if (p < 0) {
            throw NotNormalized("lottery weight is negative");
        }
        w[o] += p;
        total += p;
    }
    if (total != 1) {
        throw NotNormalized("lottery weights sum to " + format_rational(total));
    }
    return Lottery(std::move(outcomes), std::move(w));
}

Lottery normalize_lottery(OutcomeSpacePtr outcomes,
                          const std::vector<std::pair<std::string, Rational>>& raw) {
    std::vector<std::pair<std::size_t, Rational>> indexed;
    for (const auto& [label, p] : raw) {
        indexed.emplace_back(outcomes->require(label), p);
    }
    return normalize_lottery(std::move(outcomes), indexed);
}

Lottery induced_lottery(const GsleuModel& m, const Event& a, const Act& f) {
    auto measure = conditional_measure(m, a);
    std::vector<Rational> w(m.outcomes()->size());
    for (std::size_t s = 0; s < measure.size(); ++s) {
        if (measure[s] != 0) {
            w[f(s)] += measure[s];
        }
    }
    return Lottery(m.outcomes(), std::move(w));
}

Rational lottery_eu(const GsleuModel& m, const Event& a, const Lottery& l) {
    if (a.is_empty()) {
        throw EmptyEvent("lottery comparison at the empty event");
    }
    if (!same_outcomes(m.outcomes(), l.outcomes())) {
        throw SpaceMismatch("lottery does not belong to the model's outcome space");
    }
    const auto& u = m.level(class_of(m, a)).utility;
    Rational total = 0;
    for (std::size_t o = 0; o < u.size(); ++o) {
        total += u[o] * l[o];
    }
    return total;
}

Ordering lottery_compare(const GsleuModel& m, const Event& a, const Lottery& l1, const Lottery& l2) {
    return ordering_from_sign((lottery_eu(m, a, l1) - lottery_eu(m, a, l2)).sign());
}

namespace {

bool assign_atoms(const std::vector<std::size_t>& atoms, const std::vector<Rational>& mass,
                  std::vector<Rational>& remaining, std::size_t next,
                  std::vector<std::uint32_t>& assignment) {
    if (next == atoms.size()) {
        for (const auto& r : remaining) {
            if (r != 0) {
                return false;
            }
        }
        return true;
    }
    const auto s = atoms[next];
    for (std::size_t o = 0; o < remaining.size(); ++o) {
        if (remaining[o] >= mass[s]) {
            remaining[o] -= mass[s];
            assignment[s] = static_cast<std::uint32_t>(o);
            if (assign_atoms(atoms, mass, remaining, next + 1, assignment)) {
                return true;
            }
            remaining[o] += mass[s];
        }
    }
    return false;
}

}  // namespace

Act act_from_lottery(const GsleuModel& m, const Event& a, const Lottery& l, const Act& fill) {
    if (!same_outcomes(m.outcomes(), l.outcomes())) {
        throw SpaceMismatch("lottery does not belong to the model's outcome space");
    }
    auto measure = conditional_measure(m, a);
    std::vector<std::size_t> atoms;
    for (std::size_t s = 0; s < measure.size(); ++s) {
        if (measure[s] != 0) {
            atoms.push_back(s);
        }
    }
    auto remaining = l.weights();
    auto assignment = fill.assignment();
    if (!assign_atoms(atoms, measure, remaining, 0, assignment)) {
        throw AtomGranularity("no grouping of the atoms of the event realizes " + l.to_string());
    }
    return Act(fill.space(), fill.outcomes(), std::move(assignment));
}

Lottery mix(const Lottery& l1, const Lottery& l2, const Rational& rho) {
    if (!same_outcomes(l1.outcomes(), l2.outcomes())) {
        throw SpaceMismatch("mixed lotteries belong to different outcome spaces");
    }
    if (rho < 0 || rho > 1) {
        throw NotNormalized("mixture weight outside [0, 1]");
    }
    std::vector<Rational> w(l1.weights().size());
    for (std::size_t o = 0; o < w.size(); ++o) {
        w[o] = rho * l1[o] + (1 - rho) * l2[o];
    }
    return Lottery(l1.outcomes(), std::move(w));
}

std::optional<Rational> calibration_weight(const GsleuModel& m, const Event& a, const Lottery& l1,
                                           const Lottery& l2, const Lottery& l3) {
    const auto e1 = lottery_eu(m, a, l1);
    const auto e2 = lottery_eu(m, a, l2);
    const auto e3 = lottery_eu(m, a, l3);
    if (!(e1 < e2) || e3 < e1 || e2 < e3) {
        return std::nullopt;
    }
    return (e2 - e3) / (e2 - e1);
}

}  // namespace lexeu
