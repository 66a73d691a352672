#pragma once

#include "lexeu/act.hpp"
#include "lexeu/event.hpp"
#include "lexeu/rational.hpp"

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace lexeu {

/// Class index of the trivial class {∅}; compares above every level index.
inline constexpr std::size_t kTrivialClass = std::numeric_limits<std::size_t>::max();

/** One lexicographic level: a support, a probability on it and a utility over outcomes. */
struct Level {
    Event support;
    /// Indexed by state; zero off the support.
    std::vector<Rational> prob;
    /// Indexed by outcome.
    std::vector<Rational> utility;
};

/// Textual level description used by tests and builders; `prob` is aligned with `support`.
struct LevelSpec {
    std::vector<std::string> support;
    std::vector<std::string> prob;
    std::vector<std::string> utility;
};

/**
 * Ordered chain of levels; level 1 is the highest class.
 *
 * Construction does not validate. Call validate_model() or require_valid()
 * before relying on the invariants.
 */
class GsleuModel {
public:
    GsleuModel(StateSpacePtr space, OutcomeSpacePtr outcomes, std::vector<Level> levels);

    static GsleuModel build(std::vector<std::string> states, std::vector<std::string> outcomes,
                            const std::vector<LevelSpec>& levels);

    const StateSpacePtr& space() const noexcept { return space_; }
    const OutcomeSpacePtr& outcomes() const noexcept { return outcomes_; }
    const std::vector<Level>& levels() const noexcept { return levels_; }
    std::size_t level_count() const noexcept { return levels_.size(); }
    /// 1-based.
    const Level& level(std::size_t k) const { return levels_.at(k - 1); }

    /// Class index of a mask, without space checks. kTrivialClass for 0.
    std::size_t class_of_mask(Mask a) const noexcept;
    /// Sum of level-k probability over `a` (k is 1-based).
    Rational mass(std::size_t k, Mask a) const;

private:
    StateSpacePtr space_;
    OutcomeSpacePtr outcomes_;
    std::vector<Level> levels_;
    std::vector<Mask> support_masks_;
};

struct Violation {
    std::string code;
    std::string location;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const noexcept { return violations.empty(); }
    /// Violations joined as "code (location); ...".
    std::string summary() const;
};

/**
 * Check every model invariant. Codes:
 * "no levels", "empty support", "supports not disjoint", "supports do not cover states",
 * "probability not positive", "probability outside support", "probability not normalized",
 * "utility size mismatch", "probability size mismatch", "utility constant",
 * "utility orders differ".
 */
ValidationReport validate_model(const GsleuModel& m);

/// Throws InvalidModel with the report summary when the model is invalid.
void require_valid(const GsleuModel& m);

/// Smallest k with A ∩ support_k ≠ ∅, or kTrivialClass for ∅.
std::size_t class_of(const GsleuModel& m, const Event& a);

/// P_A indexed by state. Throws EmptyEvent.
std::vector<Rational> conditional_measure(const GsleuModel& m, const Event& a);

/// E_1 ⊋ E_2 ⊋ ... ⊋ E_K with E_k = S minus the supports of levels 1..k-1.
std::vector<Event> top_event_chain(const GsleuModel& m);

/// "1", "2", ..., or "trivial".
std::string class_label(std::size_t k);

}  // namespace lexeu
