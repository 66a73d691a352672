#pragma once

#include "lexeu/preference.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace lexeu {

/// Dense rank of every act: 0 = best tier, ranks 0..T-1 all used.
using TierArray = std::vector<std::uint32_t>;

/**
 * Explicit family of total preorders over the full act set, one per event.
 *
 * Acts are indexed by their enumeration code. The ∅ entry is degenerate
 * (a single tier). The optional unconditional order is kept separately.
 */
class PreferenceTable {
public:
    PreferenceTable(StateSpacePtr space, OutcomeSpacePtr outcomes, std::vector<std::string> act_names,
                    std::vector<TierArray> tiers, std::optional<TierArray> unconditional = std::nullopt);

    const StateSpacePtr& space() const noexcept { return space_; }
    const OutcomeSpacePtr& outcomes() const noexcept { return outcomes_; }
    std::size_t act_count() const noexcept { return act_names_.size(); }
    std::size_t event_count() const noexcept { return tiers_.size(); }
    const std::vector<std::string>& act_names() const noexcept { return act_names_; }

    const TierArray& tiers(Mask a) const { return tiers_.at(a); }
    std::uint32_t tier(Mask a, std::uint64_t act) const { return tiers_[a][act]; }
    const std::optional<TierArray>& unconditional() const noexcept { return unconditional_; }

    /// f against g under ⪰_A.
    Ordering prefer(Mask a, std::uint64_t f, std::uint64_t g) const;

    Act act(std::uint64_t code) const { return act_from_code(code, space_, outcomes_); }

private:
    StateSpacePtr space_;
    OutcomeSpacePtr outcomes_;
    std::vector<std::string> act_names_;
    std::vector<TierArray> tiers_;
    std::optional<TierArray> unconditional_;
};

/// Ranks from keys where a larger key is better.
template <typename Key>
TierArray dense_ranks_desc(const std::vector<Key>& keys) {
    std::vector<std::uint32_t> order(keys.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t x, std::uint32_t y) { return keys[y] < keys[x]; });
    TierArray ranks(keys.size(), 0);
    std::uint32_t rank = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && keys[order[i - 1]] != keys[order[i]]) {
            ++rank;
        }
        ranks[order[i]] = rank;
    }
    return ranks;
}

/// "f<code>" names used for generated tables.
std::string default_act_name(std::uint64_t code);

struct TableCaps {
    std::uint64_t act_cap = kDefaultActCap;
    std::size_t state_cap = kDefaultEventCap;
};

/// Every indexed preorder of the model plus its lexicographic unconditional order.
PreferenceTable derive_table(const GsleuModel& m, const TableCaps& caps = {});

/// Throws CapExceeded when the table would exceed the caps.
void check_table_caps(std::size_t states, std::size_t outcomes, const TableCaps& caps);

struct TableMismatch {
    Mask event = 0;
    std::uint64_t f = 0;
    std::uint64_t g = 0;
    Ordering expected = Ordering::Indifferent;
    Ordering actual = Ordering::Indifferent;
    /// Mismatch is in the unconditional order rather than an indexed one.
    bool unconditional = false;
};

/// First entry where `actual` ranks a pair differently from `expected`.
std::optional<TableMismatch> first_mismatch(const PreferenceTable& expected, const PreferenceTable& actual,
                                            bool compare_unconditional = true);

/**
 * Derived structure of a table: agreement classes of indexed preferences,
 * nullity, the peeled top-event chain and the constant-act order.
 */
class TableAnalysis {
public:
    explicit TableAnalysis(const PreferenceTable& t);

    const PreferenceTable& table() const noexcept { return *table_; }

    /// ⪰_A and ⪰_B identical.
    bool agree(Mask a, Mask b) const { return ids_[a] == ids_[b]; }
    /// B null at A for B ⊆ A.
    bool null_at(Mask b, Mask a) const { return agree(a & ~b, a); }
    std::uint32_t preference_id(Mask a) const { return ids_[a]; }

    /// Peeled chain E_1 = S, E_{k+1} = E_k minus the states non-null at E_k.
    const std::vector<Mask>& chain() const noexcept { return chain_; }
    /// True when peeling reached ∅.
    bool chain_complete() const noexcept { return chain_complete_; }

    /// Code of the constant act with outcome o.
    std::uint64_t constant_code(std::size_t o) const { return constant_codes_.at(o); }
    /// Outcomes sorted best to worst under ⪰_S, ties by label order.
    const std::vector<std::size_t>& constants_best_first() const noexcept { return constants_order_; }
    std::size_t best_outcome() const { return constants_order_.front(); }
    std::size_t worst_outcome() const { return constants_order_.back(); }

    /// Code of (o on B, o' elsewhere).
    std::uint64_t bet_code(std::size_t o, Mask b, std::size_t o_prime) const;
    /// Code of compose(f, A, h).
    std::uint64_t compose_code(std::uint64_t f, Mask a, std::uint64_t h) const;

    /// Unconditional order: the table's own, or the lexicographic rule over the chain.
    const TierArray& unconditional() const noexcept { return unconditional_; }
    bool unconditional_explicit() const noexcept { return table_->unconditional().has_value(); }

private:
    const PreferenceTable* table_;
    std::vector<std::uint32_t> ids_;
    std::vector<Mask> chain_;
    bool chain_complete_ = false;
    std::vector<std::uint64_t> constant_codes_;
    std::vector<std::size_t> constants_order_;
    std::vector<std::uint64_t> place_;  // m^(n-1-s)
    TierArray unconditional_;
};

}  // namespace lexeu
