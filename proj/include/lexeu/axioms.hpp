#pragma once

#include "lexeu/table.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lexeu {

enum class AxiomId { P0_5, P1_5, P2_5, P3_5, P4_5, P5_5, P6_5, SE, QP, NULLITY, DOMINANCE };

std::string_view to_string(AxiomId id);
/// Accepts "P1.5", "p1.5", "SE", "nullity", ...; throws ParseError.
AxiomId parse_axiom_id(std::string_view text);

enum class AxiomStatus { Holds, Violated, Informational };

std::string_view to_string(AxiomStatus s);

/**
 * One instance of an axiom clause. `events` are masks, `acts` are act codes and
 * `outcomes` are outcome indices; their meaning depends on `clause`.
 */
struct Witness {
    std::string clause;
    std::vector<Mask> events;
    std::vector<std::uint64_t> acts;
    std::vector<std::size_t> outcomes;
};

struct AxiomReport {
    AxiomId id = AxiomId::P1_5;
    AxiomStatus status = AxiomStatus::Holds;
    std::vector<Witness> witnesses;
    /// Named counters in insertion order (instances checked, violations, vacuous cases, ...).
    std::vector<std::pair<std::string, std::uint64_t>> statistics;
    /// "exhaustive", "sampled", ...
    std::string regime = "exhaustive";

    std::uint64_t statistic(std::string_view name) const;
};

/**
 * A family of indexed preferences plus the unconditional order. Model-backed
 * families are materialized as their derived table; table-backed ones are
 * taken as given.
 */
class PreferenceFamily {
public:
    static PreferenceFamily model_backed(const GsleuModel& m, const TableCaps& caps = {});
    static PreferenceFamily table_backed(PreferenceTable t);

    bool is_model_backed() const noexcept { return model_.has_value(); }
    const std::optional<GsleuModel>& model() const noexcept { return model_; }
    const PreferenceTable& table() const noexcept { return *table_; }
    const TableAnalysis& analysis() const noexcept { return *analysis_; }

private:
    std::optional<GsleuModel> model_;
    std::shared_ptr<const PreferenceTable> table_;
    std::shared_ptr<const TableAnalysis> analysis_;
};

struct AxiomOptions {
    std::size_t max_witnesses = 5;
    /// Above this many (A, f, g, h) instances the small-event check samples.
    std::uint64_t p6_instance_cap = 50000;
    std::uint64_t seed = 0x5eed;
};

AxiomReport check_axiom(const PreferenceFamily& p, AxiomId id, const AxiomOptions& options = {});

enum class AxiomSuite { Core, All };

/// Core: P1.5-P5.5, SE, P0.5. All: core plus QP, NULLITY, DOMINANCE, P6.5.
std::vector<AxiomId> suite_axioms(AxiomSuite suite);

struct AxiomSummary {
    std::vector<AxiomReport> reports;
    /// Every non-informational axiom holds.
    bool pass = true;
};

AxiomSummary check_all(const PreferenceFamily& p, AxiomSuite suite = AxiomSuite::All,
                       const AxiomOptions& options = {});

/// Re-evaluate a witness against the family; true iff the violation is reproduced.
bool replay_witness(const PreferenceFamily& p, AxiomId id, const Witness& w);

/// Human-readable witness, e.g. "A={s1,s2} f=(a,b,c,a) g=(...)".
std::string describe_witness(const PreferenceFamily& p, const Witness& w);

}  // namespace lexeu
