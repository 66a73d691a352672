#pragma once

#include "lexeu/error.hpp"
#include "lexeu/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexeu {

enum class Relation { Geq, Gt, Eq };

/// "≥", ">" or "=".
std::string_view symbol(Relation r);

/** coefficients · x  relation  rhs. */
struct LinearConstraint {
    std::map<std::string, Rational> coefficients;
    Relation relation = Relation::Geq;
    Rational rhs = 0;
    /// Free-form provenance used in diagnostics and certificates.
    std::string label;
};

/** Ordered variables plus linear constraints over them. Variables are free (unbounded). */
class ConstraintSystem {
public:
    ConstraintSystem() = default;
    explicit ConstraintSystem(std::vector<std::string> variables);

    /// Returns the index of the new variable; throws MalformedSystem on duplicates.
    std::size_t add_variable(std::string name);
    /// Throws MalformedSystem when a coefficient names an undeclared variable.
    void add(LinearConstraint c);
    void add(const std::vector<std::pair<std::string, Rational>>& terms, Relation relation, Rational rhs,
             std::string label = {});

    const std::vector<std::string>& variables() const noexcept { return variables_; }
    const std::vector<LinearConstraint>& constraints() const noexcept { return constraints_; }
    /// Throws MalformedSystem for unknown names.
    std::size_t index_of(std::string_view name) const;

    /// The constraints at `indices`, over the same variables.
    ConstraintSystem subsystem(const std::vector<std::size_t>& indices) const;

private:
    std::vector<std::string> variables_;
    std::vector<LinearConstraint> constraints_;
};

struct FeasibilityResult {
    bool feasible = false;
    /// Indexed like ConstraintSystem::variables(); empty when infeasible.
    std::vector<Rational> assignment;
    /// Minimum margin over strict constraints; empty when there are none.
    std::optional<Rational> slack;
    std::uint64_t pivots = 0;
};

struct SolverCaps {
    std::size_t max_variables = 32;
    std::size_t max_constraints = 5000;
};

/**
 * Exact feasibility by ε-maximizing simplex.
 *
 * Strict constraints become c·x ≥ rhs + ε with 0 ≤ ε ≤ 1; the result is
 * feasible iff the optimal ε is positive (or there are no strict constraints
 * and the weak system is nonempty). Every feasible assignment is checked by
 * substitution before it is returned.
 */
FeasibilityResult solve(const ConstraintSystem& sys, const SolverCaps& caps = {});

struct OptimumResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    std::vector<Rational> assignment;
    Rational value = 0;
};

/// Maximize `objective` over the closure of the system (strict constraints read as weak).
OptimumResult maximize(const ConstraintSystem& sys, const std::map<std::string, Rational>& objective,
                       const SolverCaps& caps = {});

/// Exact check of every constraint at `x`.
bool satisfies(const ConstraintSystem& sys, const std::vector<Rational>& x);

/// Feasibility by Fourier–Motzkin elimination; throws CapExceeded above `max_variables`.
bool fourier_motzkin_feasible(const ConstraintSystem& sys, std::size_t max_variables = 8);

/**
 * Deletion filter: indices of an irreducible infeasible subsystem.
 * Throws MalformedSystem when the system is feasible.
 */
std::vector<std::size_t> infeasible_subsystem(const ConstraintSystem& sys, const SolverCaps& caps = {});

/** A linear system with no solution, carried with an irreducible infeasible core. */
class Unrepresentable : public Error {
public:
    Unrepresentable(const std::string& what, ConstraintSystem system, std::vector<std::size_t> core)
        : Error(ErrorKind::Unrepresentable, what), system_(std::move(system)), core_(std::move(core)) {}
    const ConstraintSystem& system() const noexcept { return system_; }
    /// Indices into system().constraints().
    const std::vector<std::size_t>& core() const noexcept { return core_; }

private:
    ConstraintSystem system_;
    std::vector<std::size_t> core_;
};

}  // namespace lexeu
