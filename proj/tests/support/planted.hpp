#pragma once

#include "lexeu/axioms.hpp"

#include <functional>
#include <string>
#include <vector>

namespace lexeu::testing {

/// A table derived from M0 with one indexed order rewritten so that `target` fails.
struct PlantedDefect {
    AxiomId target;
    std::string description;
    PreferenceTable table;
};

/// Ranks of every act under `key` (larger is better).
TierArray rank_by(const PreferenceTable& t, const std::function<Rational(const Act&)>& key);

/// Copy of `t` with the order at `a` replaced.
PreferenceTable with_tiers(const PreferenceTable& t, Mask a, TierArray tiers);

/// Copy of `t` with the unconditional order replaced.
PreferenceTable with_unconditional(const PreferenceTable& t, TierArray tiers);

/// One planted defect per axiom except the informational small-event axiom.
std::vector<PlantedDefect> planted_defects();

/**
 * Single-class table over five states and outcomes a < b whose comparative
 * probability is additive except that {s1,s3,s4} and {s2,s5} are swapped
 * relative to the weights (2, 6, 7, 10, 16).
 */
PreferenceTable non_additive_table();

}  // namespace lexeu::testing
