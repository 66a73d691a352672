#include "lexeu/model.hpp"

#include "lexeu/error.hpp"

#include <algorithm>

namespace lexeu {

GsleuModel::GsleuModel(StateSpacePtr space, OutcomeSpacePtr outcomes, std::vector<Level> levels)
    : space_(std::move(space)), outcomes_(std::move(outcomes)), levels_(std::move(levels)) {
    if (!space_ || !outcomes_) {
        throw InvalidModel("model requires state and outcome spaces");
    }
    for (const auto& level : levels_) {
        if (!same_space(level.support.space(), space_)) {
            throw SpaceMismatch("level support belongs to a different state space");
        }
        support_masks_.push_back(level.support.mask());
    }
}

GsleuModel GsleuModel::build(std::vector<std::string> states, std::vector<std::string> outcomes,
                             const std::vector<LevelSpec>& specs) {
    auto space = make_state_space(std::move(states));
    auto outs = make_outcome_space(std::move(outcomes));
    std::vector<Level> levels;
    for (const auto& spec : specs) {
        if (spec.prob.size() != spec.support.size()) {
            throw InvalidModel("probability list does not match support");
        }
        if (spec.utility.size() != outs->size()) {
            throw InvalidModel("utility list does not match outcomes");
        }
        Level level{Event::of(space, spec.support), std::vector<Rational>(space->size()), {}};
        for (std::size_t i = 0; i < spec.support.size(); ++i) {
            level.prob[*space->index_of(spec.support[i])] = parse_rational(spec.prob[i]);
        }
        for (const auto& u : spec.utility) {
            level.utility.push_back(parse_rational(u));
        }
        levels.push_back(std::move(level));
    }
    return GsleuModel(space, outs, std::move(levels));
}

std::size_t GsleuModel::class_of_mask(Mask a) const noexcept {
    for (std::size_t k = 0; k < support_masks_.size(); ++k) {
        if ((support_masks_[k] & a) != 0) {
            return k + 1;
        }
    }
    return kTrivialClass;
}

Rational GsleuModel::mass(std::size_t k, Mask a) const {
    const auto& level = levels_.at(k - 1);
    Rational total = 0;
    Mask hit = a & level.support.mask();
    for (std::size_t s = 0; hit != 0; ++s, hit >>= 1) {
        if (hit & 1U) {
            total += level.prob[s];
        }
    }
    return total;
}

std::string ValidationReport::summary() const {
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) {
            out += "; ";
        }
        out += v.code;
        if (!v.location.empty()) {
            out += " (" + v.location + ")";
        }
    }
    return out;
}

namespace {

std::string level_name(std::size_t k) { return "level " + std::to_string(k); }

/// -1, 0, +1 pattern of utility differences for every outcome pair.
std::vector<int> utility_pattern(const std::vector<Rational>& u) {
    std::vector<int> out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            out.push_back(u[i] < u[j] ? -1 : (u[j] < u[i] ? 1 : 0));
        }
    }
    return out;
}

}  // namespace

ValidationReport validate_model(const GsleuModel& m) {
    ValidationReport report;
    auto add = [&](std::string code, std::string where) {
        report.violations.push_back({std::move(code), std::move(where)});
    };
    const auto& space = *m.space();
    if (m.level_count() == 0) {
        add("no levels", "");
        return report;
    }
    Mask covered = 0;
    std::vector<int> first_pattern;
    std::size_t first_nonconstant = 0;
    for (std::size_t k = 1; k <= m.level_count(); ++k) {
        const auto& level = m.level(k);
        const Mask support = level.support.mask();
        if (support == 0) {
            add("empty support", level_name(k));
        }
        if ((covered & support) != 0) {
            add("supports not disjoint", level_name(k) + " overlaps a higher level on " +
                                             Event(m.space(), covered & support).labels().front());
        }
        covered |= support;
        if (level.prob.size() != space.size()) {
            add("probability size mismatch", level_name(k));
        } else {
            Rational total = 0;
            for (std::size_t s = 0; s < space.size(); ++s) {
                const auto& p = level.prob[s];
                if (level.support.contains(s)) {
                    if (p <= 0) {
                        add("probability not positive", level_name(k) + ", state " + space.label(s));
                    }
                    total += p;
                } else if (p != 0) {
                    add("probability outside support", level_name(k) + ", state " + space.label(s));
                }
            }
            if (total != 1) {
                add("probability not normalized", level_name(k) + " sums to " + format_rational(total));
            }
        }
        if (level.utility.size() != m.outcomes()->size()) {
            add("utility size mismatch", level_name(k));
            continue;
        }
        auto pattern = utility_pattern(level.utility);
        if (std::all_of(pattern.begin(), pattern.end(), [](int v) { return v == 0; })) {
            add("utility constant", level_name(k));
            continue;
        }
        if (first_nonconstant == 0) {
            first_nonconstant = k;
            first_pattern = std::move(pattern);
        } else if (pattern != first_pattern) {
            add("utility orders differ", level_name(first_nonconstant) + " vs " + level_name(k));
        }
    }
    if (covered != space.full_mask()) {
        auto missing = Event(m.space(), space.full_mask() & ~covered).labels();
        std::string list;
        for (const auto& s : missing) {
            list += (list.empty() ? "" : ",") + s;
        }
        add("supports do not cover states", list);
    }
    return report;
}

void require_valid(const GsleuModel& m) {
    auto report = validate_model(m);
    if (!report.valid()) {
        throw InvalidModel("invalid model: " + report.summary());
    }
}

std::size_t class_of(const GsleuModel& m, const Event& a) {
    if (!same_space(m.space(), a.space())) {
        throw SpaceMismatch("event does not belong to the model's state space");
    }
    return m.class_of_mask(a.mask());
}

std::vector<Rational> conditional_measure(const GsleuModel& m, const Event& a) {
    if (a.is_empty()) {
        throw EmptyEvent("conditional measure of the empty event");
    }
    const auto k = class_of(m, a);
    if (k == kTrivialClass) {
        throw InvalidModel("event is not covered by any support");
    }
    const auto& level = m.level(k);
    const Rational total = m.mass(k, a.mask());
    std::vector<Rational> out(m.space()->size());
    for (std::size_t s = 0; s < out.size(); ++s) {
        if (a.contains(s) && level.support.contains(s)) {
            out[s] = level.prob[s] / total;
        }
    }
    return out;
}

std::vector<Event> top_event_chain(const GsleuModel& m) {
    std::vector<Event> chain;
    Mask rest = m.space()->full_mask();
    for (const auto& level : m.levels()) {
        chain.emplace_back(m.space(), rest);
        rest &= ~level.support.mask();
    }
    return chain;
}

std::string class_label(std::size_t k) {
    return k == kTrivialClass ? "trivial" : std::to_string(k);
}

}  // namespace lexeu
