#pragma once

#include "lexeu/event.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexeu {

/// Default bound on m^n for exhaustive act enumeration.
inline constexpr std::uint64_t kDefaultActCap = 100000;

/** Finite, ordered set of at least two distinct outcome labels. */
class OutcomeSpace {
public:
    explicit OutcomeSpace(std::vector<std::string> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(std::size_t index) const { return labels_.at(index); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<std::size_t> index_of(std::string_view label) const;
    /// Throws UnknownOutcome.
    std::size_t require(std::string_view label) const;

    bool operator==(const OutcomeSpace& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
};

using OutcomeSpacePtr = std::shared_ptr<const OutcomeSpace>;

OutcomeSpacePtr make_outcome_space(std::vector<std::string> labels);

bool same_outcomes(const OutcomeSpacePtr& a, const OutcomeSpacePtr& b);

/** Total map from states to outcome indices. */
class Act {
public:
    Act(StateSpacePtr space, OutcomeSpacePtr outcomes, std::vector<std::uint32_t> assignment);

    /// Build from outcome labels listed in state order.
    static Act from_labels(StateSpacePtr space, OutcomeSpacePtr outcomes,
                           const std::vector<std::string>& labels);

    const StateSpacePtr& space() const noexcept { return space_; }
    const OutcomeSpacePtr& outcomes() const noexcept { return outcomes_; }
    const std::vector<std::uint32_t>& assignment() const noexcept { return assignment_; }

    std::uint32_t operator()(std::size_t state) const { return assignment_.at(state); }
    const std::string& outcome_label(std::size_t state) const;

    /// Position in the lexicographic enumeration order (first state most significant).
    std::uint64_t code() const;

    /// "(b,a,c,a)".
    std::string to_string() const;

    friend bool operator==(const Act& a, const Act& b) {
        return a.assignment_ == b.assignment_ && same_space(a.space_, b.space_) &&
               same_outcomes(a.outcomes_, b.outcomes_);
    }

private:
    StateSpacePtr space_;
    OutcomeSpacePtr outcomes_;
    std::vector<std::uint32_t> assignment_;
};

/// Throws SpaceMismatch unless both acts share state and outcome spaces.
void require_same_spaces(const Act& f, const Act& g);

/// f on A, h elsewhere.
Act compose(const Act& f, const Event& a, const Act& h);

Act constant_act(std::size_t outcome, StateSpacePtr space, OutcomeSpacePtr outcomes);
/// Throws UnknownOutcome.
Act constant_act(std::string_view outcome, StateSpacePtr space, OutcomeSpacePtr outcomes);

/// m^n, saturating at UINT64_MAX.
std::uint64_t act_count(std::size_t states, std::size_t outcomes);

/// Act with the given enumeration code.
Act act_from_code(std::uint64_t code, StateSpacePtr space, OutcomeSpacePtr outcomes);

/// All m^n acts in lexicographic order. Throws CapExceeded when m^n > cap.
std::vector<Act> enumerate_acts(StateSpacePtr space, OutcomeSpacePtr outcomes,
                                std::uint64_t cap = kDefaultActCap);

}  // namespace lexeu
