#include "lexeu/act.hpp"

#include "lexeu/error.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace lexeu {

OutcomeSpace::OutcomeSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() < 2) {
        throw InvalidModel("outcome space needs at least two outcomes");
    }
    std::unordered_set<std::string> seen;
    for (const auto& label : labels_) {
        if (!seen.insert(label).second) {
            throw InvalidModel("duplicate outcome label \"" + label + "\"");
        }
    }
}

std::optional<std::size_t> OutcomeSpace::index_of(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t OutcomeSpace::require(std::string_view label) const {
    auto idx = index_of(label);
    if (!idx) {
        throw UnknownOutcome("unknown outcome \"" + std::string(label) + "\"");
    }
    return *idx;
}

OutcomeSpacePtr make_outcome_space(std::vector<std::string> labels) {
    return std::make_shared<const OutcomeSpace>(std::move(labels));
}

bool same_outcomes(const OutcomeSpacePtr& a, const OutcomeSpacePtr& b) {
    return a == b || (a && b && *a == *b);
}

Act::Act(StateSpacePtr space, OutcomeSpacePtr outcomes, std::vector<std::uint32_t> assignment)
    : space_(std::move(space)), outcomes_(std::move(outcomes)), assignment_(std::move(assignment)) {
    if (!space_ || !outcomes_) {
        throw InvalidModel("act requires state and outcome spaces");
    }
    if (assignment_.size() != space_->size()) {
        throw UnknownState("act must assign an outcome to every state");
    }
    for (auto o : assignment_) {
        if (o >= outcomes_->size()) {
            throw UnknownOutcome("act assigns an outcome outside its space");
        }
    }
}

Act Act::from_labels(StateSpacePtr space, OutcomeSpacePtr outcomes,
                     const std::vector<std::string>& labels) {
    std::vector<std::uint32_t> assignment;
    assignment.reserve(labels.size());
    for (const auto& label : labels) {
        assignment.push_back(static_cast<std::uint32_t>(outcomes->require(label)));
    }
    return Act(std::move(space), std::move(outcomes), std::move(assignment));
}

const std::string& Act::outcome_label(std::size_t state) const {
    return outcomes_->label(assignment_.at(state));
}

std::uint64_t Act::code() const {
    std::uint64_t c = 0;
    for (auto o : assignment_) {
        c = c * outcomes_->size() + o;
    }
    return c;
}

std::string Act::to_string() const {
    std::string out = "(";
    for (std::size_t s = 0; s < assignment_.size(); ++s) {
        if (s > 0) {
            out += ",";
        }
        out += outcome_label(s);
    }
    return out + ")";
}

void require_same_spaces(const Act& f, const Act& g) {
    if (!same_space(f.space(), g.space()) || !same_outcomes(f.outcomes(), g.outcomes())) {
        throw SpaceMismatch("acts belong to different spaces");
    }
}

Act compose(const Act& f, const Event& a, const Act& h) {
    require_same_spaces(f, h);
    if (!same_space(f.space(), a.space())) {
        throw SpaceMismatch("event and acts belong to different state spaces");
    }
    auto assignment = h.assignment();
    for (std::size_t s = 0; s < assignment.size(); ++s) {
        if (a.contains(s)) {
            assignment[s] = f(s);
        }
    }
    return Act(f.space(), f.outcomes(), std::move(assignment));
}

Act constant_act(std::size_t outcome, StateSpacePtr space, OutcomeSpacePtr outcomes) {
    if (outcome >= outcomes->size()) {
        throw UnknownOutcome("unknown outcome index " + std::to_string(outcome));
    }
    std::vector<std::uint32_t> assignment(space->size(), static_cast<std::uint32_t>(outcome));
    return Act(std::move(space), std::move(outcomes), std::move(assignment));
}

Act constant_act(std::string_view outcome, StateSpacePtr space, OutcomeSpacePtr outcomes) {
    auto idx = outcomes->require(outcome);
    return constant_act(idx, std::move(space), std::move(outcomes));
}

std::uint64_t act_count(std::size_t states, std::size_t outcomes) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < states; ++i) {
        if (outcomes != 0 && total > kMax / outcomes) {
            return kMax;
        }
        total *= outcomes;
    }
    return total;
}

Act act_from_code(std::uint64_t code, StateSpacePtr space, OutcomeSpacePtr outcomes) {
    const std::size_t n = space->size();
    const std::size_t m = outcomes->size();
    std::vector<std::uint32_t> assignment(n, 0);
    for (std::size_t i = n; i-- > 0;) {
        assignment[i] = static_cast<std::uint32_t>(code % m);
        code /= m;
    }
    return Act(std::move(space), std::move(outcomes), std::move(assignment));
}

std::vector<Act> enumerate_acts(StateSpacePtr space, OutcomeSpacePtr outcomes, std::uint64_t cap) {
    const auto total = act_count(space->size(), outcomes->size());
    if (total > cap) {
        throw CapExceeded("act enumeration needs " + std::to_string(total) + " acts, cap is " +
                              std::to_string(cap),
                          total, cap);
    }
    std::vector<Act> acts;
    acts.reserve(total);
    for (std::uint64_t c = 0; c < total; ++c) {
        acts.push_back(act_from_code(c, space, outcomes));
    }
    return acts;
}

}  // namespace lexeu
