#pragma once

#include "lexeu/model.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace lexeu::testing {

/// Four states, outcomes a < b < c, levels {s1,s2} (1/2,1/2) u=(0,1,2); {s3} u=(0,3,4); {s4} u=(0,1,2).
GsleuModel m0();

/// Act from a compact outcome string in state order, e.g. "baca".
Act act(const GsleuModel& m, const std::string& outcomes);

struct RandomModelSpec {
    std::size_t min_states = 2;
    std::size_t max_states = 5;
    std::size_t outcomes = 3;
    std::size_t max_levels = 4;
    /// Probability weights are drawn from 1..max_weight before normalization.
    std::uint32_t max_weight = 6;
    /// Utilities are distinct integers drawn from 0..max_utility.
    std::uint32_t max_utility = 9;
};

/**
 * A valid model with random supports, measures and utilities. All levels share
 * one random strict ranking of outcomes, as validation requires.
 */
GsleuModel random_model(std::mt19937_64& rng, const RandomModelSpec& spec = {});

/// One level over n equally likely states with utilities spread over [0, 1].
GsleuModel uniform_model(std::mt19937_64& rng, std::size_t states, std::size_t outcomes);

}  // namespace lexeu::testing
