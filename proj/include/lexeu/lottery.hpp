#pragma once

#include "lexeu/preference.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lexeu {

/** Simple lottery over an outcome space; weights are indexed by outcome and sum to 1. */
class Lottery {
public:
    Lottery(OutcomeSpacePtr outcomes, std::vector<Rational> weights);

    static Lottery degenerate(OutcomeSpacePtr outcomes, std::size_t outcome);

    const OutcomeSpacePtr& outcomes() const noexcept { return outcomes_; }
    const std::vector<Rational>& weights() const noexcept { return weights_; }
    const Rational& operator[](std::size_t outcome) const { return weights_.at(outcome); }

    /// Non-redundant representation: (outcome, weight > 0) in outcome order.
    std::vector<std::pair<std::size_t, Rational>> support() const;

    /// "{a:1/2, b:1/2}".
    std::string to_string() const;

    friend bool operator==(const Lottery& a, const Lottery& b) {
        return a.weights_ == b.weights_ && same_outcomes(a.outcomes_, b.outcomes_);
    }

private:
    OutcomeSpacePtr outcomes_;
    std::vector<Rational> weights_;
};

/// Merge repeated outcomes and drop zeros. Throws NotNormalized unless weights are ≥ 0 and sum to 1.
Lottery normalize_lottery(OutcomeSpacePtr outcomes,
                          const std::vector<std::pair<std::size_t, Rational>>& raw);
/// Label-keyed form; throws UnknownOutcome.
Lottery normalize_lottery(OutcomeSpacePtr outcomes,
                          const std::vector<std::pair<std::string, Rational>>& raw);

/// Push-forward of P_A through f restricted to A. Throws EmptyEvent.
Lottery induced_lottery(const GsleuModel& m, const Event& a, const Act& f);

/// Σ_o u_k(o) L(o) with k = class_of(A). Throws EmptyEvent.
Rational lottery_eu(const GsleuModel& m, const Event& a, const Lottery& l);

Ordering lottery_compare(const GsleuModel& m, const Event& a, const Lottery& l1, const Lottery& l2);

/**
 * An act inducing L at A and equal to `fill` elsewhere. Atoms of A at its class
 * are assigned to outcomes by exact subset-sum, first solution in state order.
 * Throws AtomGranularity when no grouping of atoms realizes L.
 */
Act act_from_lottery(const GsleuModel& m, const Event& a, const Lottery& l, const Act& fill);

/// ρ L1 + (1 - ρ) L2 for ρ ∈ [0, 1].
Lottery mix(const Lottery& l1, const Lottery& l2, const Rational& rho);

/**
 * The unique ρ ∈ [0, 1] with L3 ≡_A ρ L1 + (1 - ρ) L2, when L2 is strictly
 * better than L1 and L3 lies between them; empty otherwise.
 */
std::optional<Rational> calibration_weight(const GsleuModel& m, const Event& a, const Lottery& l1,
                                           const Lottery& l2, const Lottery& l3);

}  // namespace lexeu
