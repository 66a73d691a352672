#pragma once

#include "lexeu/model.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace lexeu {

enum class Ordering { StrictlyPrefer, Indifferent, StrictlyDisprefer };

std::string_view to_string(Ordering o);
/// "≻", "∼" or "≺".
std::string_view symbol(Ordering o);
Ordering ordering_from_sign(int sign);
Ordering reverse(Ordering o);

/** Result of an indexed comparison; `degenerate` is set for the ∅-indexed preference. */
struct IndexedOrdering {
    Ordering ordering = Ordering::Indifferent;
    bool degenerate = false;

    bool strict() const noexcept { return ordering == Ordering::StrictlyPrefer; }
};

struct LexVerdict {
    Ordering ordering = Ordering::Indifferent;
    /// 1-based; empty iff Indifferent.
    std::optional<std::size_t> deciding_level;
};

/// Σ_s P_A(s) u_k(f(s)). Throws ClassMismatch unless class_of(A) = k.
Rational level_eu(const GsleuModel& m, std::size_t k, const Event& a, const Act& f);

IndexedOrdering indexed_prefer(const GsleuModel& m, const Event& a, const Act& f, const Act& g);

/// Per-level differences level_eu(E_k, f) - level_eu(E_k, g) along the top-event chain.
std::vector<Rational> level_differences(const GsleuModel& m, const Act& f, const Act& g);

LexVerdict lex_prefer(const GsleuModel& m, const Act& f, const Act& g);

/// Literal quantifier evaluation of the lexicographic rule over the top-event chain.
Ordering lex_prefer_bruteforce(const GsleuModel& m, const Act& f, const Act& g);

/// B null at A. Throws NotSubset unless B ⊆ A.
bool is_null_at(const GsleuModel& m, const Event& b, const Event& a);

/// ⪰_A and ⪰_B rank every act pair identically (analytic criterion).
bool agreement(const GsleuModel& m, const Event& a, const Event& b);

/// Agreement decided by comparing both indexed preferences on every act pair.
bool agreement_by_enumeration(const GsleuModel& m, const Event& a, const Event& b,
                              std::uint64_t act_cap = kDefaultActCap);

/// P_A(B) against P_A(C). Throws NotSubset unless B, C ⊆ A; EmptyEvent for A = ∅.
Ordering qual_prob_compare(const GsleuModel& m, const Event& a, const Event& b, const Event& c);

enum class Dominance { ADominates, BDominates, Equivalent };

std::string_view to_string(Dominance d);

Dominance dominance(const GsleuModel& m, const Event& a, const Event& b);

/// A ≫ B decided literally: A non-null and B null at A ∪ B.
bool dominates_by_nullity(const GsleuModel& m, const Event& a, const Event& b);

struct ClassPartition {
    /// classes[k-1] holds the events of class k, in increasing mask order.
    std::vector<std::vector<Event>> classes;
    std::vector<Event> trivial;
};

/// Throws CapExceeded when |S| exceeds `state_cap`.
ClassPartition class_partition(const GsleuModel& m, std::size_t state_cap = kDefaultEventCap);

struct RiskComparison {
    std::size_t j = 0;
    std::size_t k = 0;
    bool ordinally_equivalent = false;
    bool affinely_related = false;
    /// (α, β) with u_j = α u_k + β, when affinely related.
    std::optional<std::pair<Rational, Rational>> witness;
};

/// Affine relation of two utility vectors, if any: u = α v + β with α > 0.
std::optional<std::pair<Rational, Rational>> affine_witness(const std::vector<Rational>& u,
                                                            const std::vector<Rational>& v);

/// One entry per level pair j < k.
std::vector<RiskComparison> risk_profile(const GsleuModel& m);

}  // namespace lexeu
