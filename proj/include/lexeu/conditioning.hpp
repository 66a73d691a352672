#pragma once

#include "lexeu/preference.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lexeu {

/// Ordering of fAh against gAh under the lexicographic order; h-independent.
Ordering savage_conditional(const GsleuModel& m, const Event& a, const Act& f, const Act& g);

/// As savage_conditional, with the deciding level.
LexVerdict savage_verdict(const GsleuModel& m, const Event& a, const Act& f, const Act& g);

struct StrongOptions {
    /// Largest partition size searched; 0 means |A|.
    std::size_t max_blocks = 0;
    /// CapExceeded when the number of candidate partitions exceeds this.
    std::uint64_t partition_cap = 10'000'000;
    /// Completion act off A; defaults to g.
    std::optional<Act> h;
};

struct PartitionWitness {
    std::size_t constant = 0;
    Partition partition;
    /// The singleton partition failed and a coarser one succeeded.
    bool coarser_only = false;
};

struct ConditioningVerdict {
    bool savage_strict = false;
    bool strong_strict = false;
    std::optional<std::size_t> failing_constant;
    /// One witness per constant when strong_strict holds.
    std::vector<PartitionWitness> witnesses;
};

/**
 * Savage strictness plus robustness to constant perturbations: for every
 * constant k some partition {A_i} of A has kA_i(fAh) ≻ gAh and fAh ≻ kA_i(gAh)
 * on every cell. Constants are tried best to worst under the S-indexed order.
 */
ConditioningVerdict strong_conditional_strict(const GsleuModel& m, const Event& a, const Act& f,
                                              const Act& g, const StrongOptions& options = {});

/// max_s P_A(s) × range(u_k) < |level-k conditional gap|, with k = class_of(A).
bool fineness_sufficient(const GsleuModel& m, const Event& a, const Act& f, const Act& g);

enum class ObservabilityClass { Equivalent, FinenessFailure, Anomaly };

struct ObservabilityInstance {
    Event a;
    std::size_t f = 0;
    std::size_t g = 0;
    bool indexed_strict = false;
    bool savage_strict = false;
    bool strong_strict = false;
    bool sufficient = false;
    ObservabilityClass verdict = ObservabilityClass::Equivalent;
};

struct ObservabilityReport {
    std::uint64_t instances = 0;
    std::uint64_t equivalent = 0;
    std::uint64_t fineness_failures = 0;
    std::uint64_t sufficient_instances = 0;
    std::uint64_t sufficient_equivalent = 0;
    /// Instances breaking strong ⇒ savage or indexed-strict ⇒ savage.
    std::uint64_t implication_failures = 0;
    std::uint64_t coarser_partition_count = 0;
    std::vector<ObservabilityInstance> anomalies;
    /// First `listed_cap` fineness failures.
    std::vector<ObservabilityInstance> fineness_examples;
    /// Instances where only a coarser partition rescued a constant.
    std::vector<ObservabilityInstance> coarser_partition_cases;
};

struct ObservabilityOptions {
    std::size_t max_blocks = 0;
    std::uint64_t act_cap = kDefaultActCap;
    std::size_t state_cap = kDefaultEventCap;
    std::size_t listed_cap = 50;
};

/// Classify every (A, f, g) with A nonempty and f ≠ g over `acts`.
ObservabilityReport observability_check(const GsleuModel& m, const std::vector<Act>& acts,
                                        const ObservabilityOptions& options = {});

/// Scope = every act of the model's spaces.
ObservabilityReport observability_check(const GsleuModel& m, const ObservabilityOptions& options = {});

std::string_view to_string(ObservabilityClass c);

}  // namespace lexeu
