#include "lexeu/conditioning.hpp"

#include "lexeu/error.hpp"
#include "lex_kernel.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace lexeu {

namespace {

using Assignment = std::vector<std::uint32_t>;

void check_inputs(const GsleuModel& m, const Event& a, const Act& f, const Act& g) {
    if (!same_space(m.space(), a.space())) {
        throw SpaceMismatch("event does not belong to the model's state space");
    }
    require_same_spaces(f, g);
    if (!same_space(m.space(), f.space()) || !same_outcomes(m.outcomes(), f.outcomes())) {
        throw SpaceMismatch("acts do not belong to the model's spaces");
    }
    if (a.is_empty()) {
        throw EmptyEvent("conditioning on the empty event");
    }
}

/// Outcomes ordered best to worst by the top level's utility, ties by label order.
std::vector<std::size_t> constants_best_first(const GsleuModel& m) {
    std::vector<std::size_t> order(m.outcomes()->size());
    std::iota(order.begin(), order.end(), 0);
    const auto& u = m.level(1).utility;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return u[y] < u[x]; });
    return order;
}

struct SearchResult {
    bool strong = false;
    std::optional<std::size_t> failing_constant;
    std::vector<PartitionWitness> witnesses;
    bool coarser_only = false;
};

/**
 * Partition search for one instance. `x` = fAh, `y` = gAh as raw assignments.
 */
class StrongSearch {
public:
    StrongSearch(const GsleuModel& m, const detail::LexKernel& kernel, std::vector<std::size_t> constants)
        : m_(m), kernel_(kernel), constants_(std::move(constants)) {}

    SearchResult run(Mask a, const Assignment& x, const Assignment& y, std::size_t max_blocks,
                     bool want_witness) {
        members_.clear();
        for (Mask rest = a; rest != 0; rest &= rest - 1) {
            members_.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
        }
        const std::size_t k = members_.size();
        const std::size_t blocks = max_blocks == 0 ? k : std::min(max_blocks, k);
        SearchResult result;
        result.strong = true;
        for (auto c : constants_) {
            good_.assign(std::size_t{1} << k, -1);
            std::vector<std::uint32_t> cells;
            bool found = false;
            bool coarser = false;
            if (blocks >= k) {
                bool all = true;
                for (std::size_t i = 0; i < k && all; ++i) {
                    all = good(std::uint32_t{1} << i, c, x, y);
                }
                if (all) {
                    found = true;
                    for (std::size_t i = 0; i < k; ++i) {
                        cells.push_back(std::uint32_t{1} << i);
                    }
                }
            }
            if (!found) {
                found = coarse_search(k, blocks, c, x, y, cells);
                coarser = found;
            }
            if (!found) {
                result.strong = false;
                result.failing_constant = c;
                result.witnesses.clear();
                return result;
            }
            result.coarser_only = result.coarser_only || coarser;
            if (want_witness) {
                PartitionWitness w;
                w.constant = c;
                w.coarser_only = coarser;
                for (auto cell : cells) {
                    w.partition.emplace_back(m_.space(), expand(cell));
                }
                result.witnesses.push_back(std::move(w));
            }
        }
        return result;
    }

private:
    Mask expand(std::uint32_t cell) const {
        Mask out = 0;
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if ((cell >> i) & 1U) {
                out |= Mask{1} << members_[i];
            }
        }
        return out;
    }

    bool good(std::uint32_t cell, std::size_t c, const Assignment& x, const Assignment& y) {
        auto& memo = good_[cell];
        if (memo >= 0) {
            return memo == 1;
        }
        const Mask states = expand(cell);
        scratch_ = x;
        for (Mask rest = states; rest != 0; rest &= rest - 1) {
            scratch_[static_cast<std::size_t>(std::countr_zero(rest))] = static_cast<std::uint32_t>(c);
        }
        const Mask full = m_.space()->full_mask();
        bool ok = kernel_.lex(full, scratch_.data(), y.data()).first > 0;
        if (ok) {
            scratch_ = y;
            for (Mask rest = states; rest != 0; rest &= rest - 1) {
                scratch_[static_cast<std::size_t>(std::countr_zero(rest))] = static_cast<std::uint32_t>(c);
            }
            ok = kernel_.lex(full, x.data(), scratch_.data()).first > 0;
        }
        memo = ok ? 1 : 0;
        return ok;
    }

    /// Fewest good cells covering all members, within `blocks`.
    bool coarse_search(std::size_t k, std::size_t blocks, std::size_t c, const Assignment& x,
                       const Assignment& y, std::vector<std::uint32_t>& cells) {
        const std::uint32_t full = (std::uint32_t{1} << k) - 1;
        constexpr std::uint32_t kNone = 0xffffffffU;
        std::vector<std::uint32_t> best(std::size_t{full} + 1, kNone);
        std::vector<std::uint32_t> choice(std::size_t{full} + 1, 0);
        best[0] = 0;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            const std::uint32_t low = mask & (~mask + 1);
            const std::uint32_t rest = mask ^ low;
            // Submasks of `rest`, each joined with the lowest member.
            for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
                const std::uint32_t cell = sub | low;
                const std::uint32_t remain = mask ^ cell;
                if (best[remain] != kNone && best[remain] + 1 < best[mask] && good(cell, c, x, y)) {
                    best[mask] = best[remain] + 1;
                    choice[mask] = cell;
                }
                if (sub == 0) {
                    break;
                }
            }
        }
        if (best[full] == kNone || best[full] > blocks) {
            return false;
        }
        cells.clear();
        for (std::uint32_t mask = full; mask != 0; mask ^= choice[mask]) {
            cells.push_back(choice[mask]);
        }
        std::sort(cells.begin(), cells.end(), [](std::uint32_t p, std::uint32_t q) {
            return std::countr_zero(p) < std::countr_zero(q);
        });
        return true;
    }

    const GsleuModel& m_;
    const detail::LexKernel& kernel_;
    std::vector<std::size_t> constants_;
    std::vector<std::size_t> members_;
    std::vector<signed char> good_;
    Assignment scratch_;
};

void check_partition_budget(std::size_t k, std::size_t max_blocks, std::uint64_t cap) {
    const std::size_t blocks = max_blocks == 0 ? k : max_blocks;
    const auto count = count_partitions(k, blocks);
    if (count > cap || k > 24) {
        throw CapExceeded("partition search needs " + std::to_string(count) + " partitions, cap is " +
                              std::to_string(cap),
                          count, cap);
    }
}

Assignment compose_raw(const Assignment& f, Mask a, const Assignment& h) {
    Assignment out = h;
    for (Mask rest = a; rest != 0; rest &= rest - 1) {
        const auto s = static_cast<std::size_t>(std::countr_zero(rest));
        out[s] = f[s];
    }
    return out;
}

/// max_{s ∈ A ∩ support_k} p_k(s) × range(u_k), unnormalized by P_k(A).
Rational atom_range_bound(const GsleuModel& m, std::size_t k, Mask a) {
    const auto& level = m.level(k);
    Rational maxp = 0;
    for (Mask rest = a & level.support.mask(); rest != 0; rest &= rest - 1) {
        const auto s = static_cast<std::size_t>(std::countr_zero(rest));
        maxp = std::max(maxp, level.prob[s]);
    }
    const auto [lo, hi] = std::minmax_element(level.utility.begin(), level.utility.end());
    return maxp * (*hi - *lo);
}

}  // namespace

LexVerdict savage_verdict(const GsleuModel& m, const Event& a, const Act& f, const Act& g) {
    check_inputs(m, a, f, g);
    for (std::size_t k = 1; k <= m.level_count(); ++k) {
        const auto& level = m.level(k);
        Rational diff = 0;
        for (std::size_t s = 0; s < f.assignment().size(); ++s) {
            if (a.contains(s) && level.support.contains(s)) {
                diff += level.prob[s] * (level.utility[f(s)] - level.utility[g(s)]);
            }
        }
        if (diff != 0) {
            return {ordering_from_sign(diff.sign()), k};
        }
    }
    return {Ordering::Indifferent, std::nullopt};
}

Ordering savage_conditional(const GsleuModel& m, const Event& a, const Act& f, const Act& g) {
    return savage_verdict(m, a, f, g).ordering;
}

ConditioningVerdict strong_conditional_strict(const GsleuModel& m, const Event& a, const Act& f,
                                              const Act& g, const StrongOptions& options) {
    check_inputs(m, a, f, g);
    check_partition_budget(a.size(), options.max_blocks, options.partition_cap);
    const Act& h = options.h ? *options.h : g;
    require_same_spaces(f, h);
    ConditioningVerdict verdict;
    verdict.savage_strict = savage_conditional(m, a, f, g) == Ordering::StrictlyPrefer;
    if (!verdict.savage_strict) {
        return verdict;
    }
    detail::LexKernel kernel(m);
    StrongSearch search(m, kernel, constants_best_first(m));
    const auto x = compose_raw(f.assignment(), a.mask(), h.assignment());
    const auto y = compose_raw(g.assignment(), a.mask(), h.assignment());
    auto result = search.run(a.mask(), x, y, options.max_blocks, true);
    verdict.strong_strict = result.strong;
    verdict.failing_constant = result.failing_constant;
    verdict.witnesses = std::move(result.witnesses);
    return verdict;
}

bool fineness_sufficient(const GsleuModel& m, const Event& a, const Act& f, const Act& g) {
    check_inputs(m, a, f, g);
    const auto k = m.class_of_mask(a.mask());
    const auto& level = m.level(k);
    Rational diff = 0;
    for (std::size_t s = 0; s < f.assignment().size(); ++s) {
        if (a.contains(s) && level.support.contains(s)) {
            diff += level.prob[s] * (level.utility[f(s)] - level.utility[g(s)]);
        }
    }
    return atom_range_bound(m, k, a.mask()) < abs(diff);
}

std::string_view to_string(ObservabilityClass c) {
    switch (c) {
        case ObservabilityClass::Equivalent: return "Equivalent";
        case ObservabilityClass::FinenessFailure: return "FinenessFailure";
        case ObservabilityClass::Anomaly: return "Anomaly";
    }
    return "Anomaly";
}

ObservabilityReport observability_check(const GsleuModel& m, const std::vector<Act>& acts,
                                        const ObservabilityOptions& options) {
    require_valid(m);
    const auto n = m.space()->size();
    if (n > options.state_cap) {
        throw CapExceeded("observability needs 2^" + std::to_string(n) + " events, state cap is " +
                              std::to_string(options.state_cap),
                          n, options.state_cap);
    }
    for (const auto& f : acts) {
        if (!same_space(m.space(), f.space()) || !same_outcomes(m.outcomes(), f.outcomes())) {
            throw SpaceMismatch("acts do not belong to the model's spaces");
        }
    }
    check_partition_budget(n, options.max_blocks, std::uint64_t{10'000'000});
    detail::LexKernel kernel(m);
    StrongSearch search(m, kernel, constants_best_first(m));
    ObservabilityReport report;
    const Mask full = m.space()->full_mask();
    for (Mask a = 1; a <= full; ++a) {
        const auto k = m.class_of_mask(a);
        const Rational bound = atom_range_bound(m, k, a);
        for (std::size_t i = 0; i < acts.size(); ++i) {
            const auto& f = acts[i].assignment();
            for (std::size_t j = 0; j < acts.size(); ++j) {
                if (i == j) {
                    continue;
                }
                const auto& g = acts[j].assignment();
                ObservabilityInstance inst{Event(m.space(), a), i, j};
                const int indexed = kernel.level_sign(k, a, f.data(), g.data());
                inst.indexed_strict = indexed > 0;
                inst.savage_strict = kernel.lex(a, f.data(), g.data()).first > 0;
                bool coarser = false;
                if (inst.savage_strict) {
                    auto x = compose_raw(f, a, g);
                    auto result = search.run(a, x, g, options.max_blocks, false);
                    inst.strong_strict = result.strong;
                    coarser = result.coarser_only;
                }
                if (indexed != 0) {
                    inst.sufficient = bound < abs(kernel.level_diff(k, a, f.data(), g.data()));
                }
                ++report.instances;
                if ((inst.strong_strict && !inst.savage_strict) ||
                    (inst.indexed_strict && !inst.savage_strict)) {
                    ++report.implication_failures;
                }
                if (inst.strong_strict == inst.indexed_strict) {
                    inst.verdict = ObservabilityClass::Equivalent;
                    ++report.equivalent;
                } else if (inst.indexed_strict && !inst.sufficient) {
                    inst.verdict = ObservabilityClass::FinenessFailure;
                    ++report.fineness_failures;
                } else {
                    inst.verdict = ObservabilityClass::Anomaly;
                }
                if (inst.sufficient) {
                    ++report.sufficient_instances;
                    if (inst.verdict == ObservabilityClass::Equivalent) {
                        ++report.sufficient_equivalent;
                    }
                }
                if (inst.verdict == ObservabilityClass::Anomaly) {
                    report.anomalies.push_back(inst);
                } else if (inst.verdict == ObservabilityClass::FinenessFailure &&
                           report.fineness_examples.size() < options.listed_cap) {
                    report.fineness_examples.push_back(inst);
                }
                if (coarser) {
                    ++report.coarser_partition_count;
                    if (report.coarser_partition_cases.size() < options.listed_cap) {
                        report.coarser_partition_cases.push_back(inst);
                    }
                }
            }
        }
        if (a == full) {
            break;
        }
    }
    return report;
}

ObservabilityReport observability_check(const GsleuModel& m, const ObservabilityOptions& options) {
    return observability_check(m, enumerate_acts(m.space(), m.outcomes(), options.act_cap), options);
}

}  // namespace lexeu
