#pragma once

#include "lexeu/axioms.hpp"
#include "lexeu/feasibility.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lexeu {

/** What one synthesis stage did. */
struct StageRecord {
    std::string stage;
    /// 1-based class index, 0 for whole-table stages.
    std::size_t level = 0;
    std::vector<std::pair<std::string, std::uint64_t>> counters;
    std::string note;
};

struct SynthesisResult {
    GsleuModel model;
    std::vector<StageRecord> diagnostics;
    /// The model's derived table equals the input entry for entry.
    bool verified = false;
};

struct SynthesisOptions {
    /// Measure-polytope vertices tried when the utility system is infeasible.
    std::size_t vertex_retry_cap = 64;
    SolverCaps solver{32, 20000};
    /// Run the axiom precheck (P1.5-P5.5, SE, P0.5). Disable only for inputs already checked.
    bool precheck = true;
};

/** The derived table of the synthesized model differs from the input. */
class VerificationFailed : public Error {
public:
    VerificationFailed(const std::string& what, TableMismatch mismatch)
        : Error(ErrorKind::VerificationFailed, what), mismatch_(mismatch) {}
    const TableMismatch& mismatch() const noexcept { return mismatch_; }

private:
    TableMismatch mismatch_;
};

/**
 * Classes of events under mutual non-nullity, ordered by dominance.
 * Throws AxiomPrecheckFailed unless P1.5-P5.5 hold.
 */
ClassPartition infer_hierarchy(const PreferenceFamily& p, bool precheck = true);

/**
 * ε-maximizing measure on the atoms of class k (1-based), from bets on
 * subevents of the class's top event. Indexed by state, zero off the atoms.
 * Throws Unrepresentable with an infeasible core when no additive measure exists.
 */
std::vector<Rational> infer_measure(const PreferenceFamily& p, std::size_t k, const ClassPartition& partition,
                                    const SolverCaps& caps = SolverCaps{32, 20000});

/** Measure and utility fitted to one class. */
struct ClassFit {
    /// Indexed by state; may differ from the requested measure after a retry.
    std::vector<Rational> measure;
    /// Indexed by outcome; worst constant 0, best constant 1.
    std::vector<Rational> utility;
    /// "given-measure", "measure-vertex", "state-utility".
    std::string strategy;
    std::uint64_t attempts = 0;
};

/**
 * Utility for class k with u(worst) = 0 and u(best) = 1, consistent with every
 * indexed preference of the class under `measure`. When that system is
 * infeasible, retries with other points of the measure polytope.
 * Throws Unrepresentable once retries are exhausted.
 */
ClassFit infer_utility(const PreferenceFamily& p, std::size_t k, const ClassPartition& partition,
                       const std::vector<Rational>& measure, const SynthesisOptions& options = {});

/**
 * Reconstruct a model from a complete table and verify it by re-deriving the table.
 * Throws AxiomPrecheckFailed, Unrepresentable or VerificationFailed.
 */
SynthesisResult synthesize(const PreferenceFamily& p, const SynthesisOptions& options = {});

}  // namespace lexeu
