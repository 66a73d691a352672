#include "lexeu/preference.hpp"

#include "lexeu/error.hpp"

namespace lexeu {

std::string_view to_string(Ordering o) {
    switch (o) {
        case Ordering::StrictlyPrefer: return "StrictlyPrefer";
        case Ordering::Indifferent: return "Indifferent";
        case Ordering::StrictlyDisprefer: return "StrictlyDisprefer";
    }
    return "Indifferent";
}

std::string_view symbol(Ordering o) {
    switch (o) {
        case Ordering::StrictlyPrefer: return "≻";
        case Ordering::Indifferent: return "∼";
        case Ordering::StrictlyDisprefer: return "≺";
    }
    return "∼";
}

Ordering ordering_from_sign(int sign) {
    return sign > 0 ? Ordering::StrictlyPrefer
                    : (sign < 0 ? Ordering::StrictlyDisprefer : Ordering::Indifferent);
}

Ordering reverse(Ordering o) {
    switch (o) {
        case Ordering::StrictlyPrefer: return Ordering::StrictlyDisprefer;
        case Ordering::StrictlyDisprefer: return Ordering::StrictlyPrefer;
        case Ordering::Indifferent: break;
    }
    return Ordering::Indifferent;
}

namespace {

void check_act(const GsleuModel& m, const Act& f) {
    if (!same_space(m.space(), f.space()) || !same_outcomes(m.outcomes(), f.outcomes())) {
        throw SpaceMismatch("act does not belong to the model's spaces");
    }
}

void check_event(const GsleuModel& m, const Event& a) {
    if (!same_space(m.space(), a.space())) {
        throw SpaceMismatch("event does not belong to the model's state space");
    }
}

/// Σ_{s ∈ A ∩ support_k} p_k(s) u_k(f(s)), not normalized by P_k(A).
Rational raw_eu(const GsleuModel& m, std::size_t k, Mask a, const Act& f) {
    const auto& level = m.level(k);
    Rational total = 0;
    Mask hit = a & level.support.mask();
    for (std::size_t s = 0; hit != 0; ++s, hit >>= 1) {
        if (hit & 1U) {
            total += level.prob[s] * level.utility[f(s)];
        }
    }
    return total;
}

}  // namespace

Rational level_eu(const GsleuModel& m, std::size_t k, const Event& a, const Act& f) {
    check_event(m, a);
    check_act(m, f);
    if (a.is_empty()) {
        throw EmptyEvent("level expected utility at the empty event");
    }
    if (m.class_of_mask(a.mask()) != k) {
        throw ClassMismatch("event has class " + class_label(m.class_of_mask(a.mask())) +
                            ", not " + std::to_string(k));
    }
    return raw_eu(m, k, a.mask(), f) / m.mass(k, a.mask());
}

IndexedOrdering indexed_prefer(const GsleuModel& m, const Event& a, const Act& f, const Act& g) {
    check_event(m, a);
    check_act(m, f);
    check_act(m, g);
    if (a.is_empty()) {
        return {Ordering::Indifferent, true};
    }
    const auto k = m.class_of_mask(a.mask());
    // P_k(A) > 0, so the unnormalized difference has the right sign.
    Rational diff = raw_eu(m, k, a.mask(), f) - raw_eu(m, k, a.mask(), g);
    return {ordering_from_sign(diff.sign()), false};
}

std::vector<Rational> level_differences(const GsleuModel& m, const Act& f, const Act& g) {
    check_act(m, f);
    check_act(m, g);
    auto chain = top_event_chain(m);
    std::vector<Rational> out;
    out.reserve(chain.size());
    for (std::size_t k = 1; k <= chain.size(); ++k) {
        out.push_back(level_eu(m, k, chain[k - 1], f) - level_eu(m, k, chain[k - 1], g));
    }
    return out;
}

LexVerdict lex_prefer(const GsleuModel& m, const Act& f, const Act& g) {
    auto diffs = level_differences(m, f, g);
    for (std::size_t k = 0; k < diffs.size(); ++k) {
        if (diffs[k] != 0) {
            return {ordering_from_sign(diffs[k].sign()), k + 1};
        }
    }
    return {Ordering::Indifferent, std::nullopt};
}

Ordering lex_prefer_bruteforce(const GsleuModel& m, const Act& f, const Act& g) {
    const auto chain = top_event_chain(m);
    const std::size_t n = chain.size();
    std::vector<Ordering> at(n);
    for (std::size_t i = 0; i < n; ++i) {
        at[i] = indexed_prefer(m, chain[i], f, g).ordering;
    }
    // weakly(x over y): every E where y ≻_E x has some E' ⊇ E with x ≻_E' y.
    auto weakly = [&](Ordering x_wins, Ordering y_wins) {
        for (std::size_t i = 0; i < n; ++i) {
            if (at[i] != y_wins) {
                continue;
            }
            bool rescued = false;
            for (std::size_t j = 0; j < n; ++j) {
                if (chain[i].subset_of(chain[j]) && at[j] == x_wins) {
                    rescued = true;
                    break;
                }
            }
            if (!rescued) {
                return false;
            }
        }
        return true;
    };
    const bool fg = weakly(Ordering::StrictlyPrefer, Ordering::StrictlyDisprefer);
    const bool gf = weakly(Ordering::StrictlyDisprefer, Ordering::StrictlyPrefer);
    if (fg && gf) {
        return Ordering::Indifferent;
    }
    return fg ? Ordering::StrictlyPrefer : Ordering::StrictlyDisprefer;
}

bool is_null_at(const GsleuModel& m, const Event& b, const Event& a) {
    check_event(m, a);
    check_event(m, b);
    if (!b.subset_of(a)) {
        throw NotSubset("null-at test requires B ⊆ A");
    }
    if (b.is_empty()) {
        return true;
    }
    const auto k = m.class_of_mask(a.mask());
    return (b.mask() & m.level(k).support.mask()) == 0;
}

bool agreement(const GsleuModel& m, const Event& a, const Event& b) {
    check_event(m, a);
    check_event(m, b);
    if (a.is_empty() || b.is_empty()) {
        return a.is_empty() && b.is_empty();
    }
    if (m.class_of_mask(a.mask()) != m.class_of_mask(b.mask())) {
        return false;
    }
    return conditional_measure(m, a) == conditional_measure(m, b);
}

bool agreement_by_enumeration(const GsleuModel& m, const Event& a, const Event& b,
                              std::uint64_t act_cap) {
    auto acts = enumerate_acts(m.space(), m.outcomes(), act_cap);
    for (std::size_t i = 0; i < acts.size(); ++i) {
        for (std::size_t j = i + 1; j < acts.size(); ++j) {
            if (indexed_prefer(m, a, acts[i], acts[j]).ordering !=
                indexed_prefer(m, b, acts[i], acts[j]).ordering) {
                return false;
            }
        }
    }
    return true;
}

Ordering qual_prob_compare(const GsleuModel& m, const Event& a, const Event& b, const Event& c) {
    check_event(m, a);
    if (a.is_empty()) {
        throw EmptyEvent("qualitative probability at the empty event");
    }
    if (!b.subset_of(a) || !c.subset_of(a)) {
        throw NotSubset("compared events must be contained in the index event");
    }
    const auto k = m.class_of_mask(a.mask());
    return ordering_from_sign((m.mass(k, b.mask()) - m.mass(k, c.mask())).sign());
}

std::string_view to_string(Dominance d) {
    switch (d) {
        case Dominance::ADominates: return "ADominates";
        case Dominance::BDominates: return "BDominates";
        case Dominance::Equivalent: return "Equivalent";
    }
    return "Equivalent";
}

Dominance dominance(const GsleuModel& m, const Event& a, const Event& b) {
    check_event(m, a);
    check_event(m, b);
    const auto ka = m.class_of_mask(a.mask());
    const auto kb = m.class_of_mask(b.mask());
    if (ka < kb) {
        return Dominance::ADominates;
    }
    if (kb < ka) {
        return Dominance::BDominates;
    }
    return Dominance::Equivalent;
}

bool dominates_by_nullity(const GsleuModel& m, const Event& a, const Event& b) {
    auto u = unite(a, b);
    return !is_null_at(m, a, u) && is_null_at(m, b, u);
}

ClassPartition class_partition(const GsleuModel& m, std::size_t state_cap) {
    const auto n = m.space()->size();
    if (n > state_cap) {
        throw CapExceeded("class partition needs 2^" + std::to_string(n) + " events, state cap is " +
                              std::to_string(state_cap),
                          n, state_cap);
    }
    ClassPartition out;
    out.classes.resize(m.level_count());
    const Mask full = m.space()->full_mask();
    for (Mask a = 0;; ++a) {
        const auto k = m.class_of_mask(a);
        if (k == kTrivialClass) {
            out.trivial.emplace_back(m.space(), a);
        } else {
            out.classes[k - 1].emplace_back(m.space(), a);
        }
        if (a == full) {
            break;
        }
    }
    return out;
}

std::optional<std::pair<Rational, Rational>> affine_witness(const std::vector<Rational>& u,
                                                            const std::vector<Rational>& v) {
    if (u.size() != v.size() || u.empty()) {
        return std::nullopt;
    }
    // Pick two outcomes separated by v; a constant v admits no α > 0 unless u is constant too.
    std::size_t i = 0;
    std::size_t j = 0;
    for (std::size_t t = 1; t < v.size(); ++t) {
        if (v[t] != v[0]) {
            j = t;
            break;
        }
    }
    Rational alpha;
    Rational beta;
    if (j == 0) {
        for (const auto& x : u) {
            if (x != u[0]) {
                return std::nullopt;
            }
        }
        alpha = 1;
        beta = u[0] - v[0];
    } else {
        alpha = (u[j] - u[i]) / (v[j] - v[i]);
        beta = u[i] - alpha * v[i];
    }
    if (alpha <= 0) {
        return std::nullopt;
    }
    for (std::size_t t = 0; t < u.size(); ++t) {
        if (u[t] != alpha * v[t] + beta) {
            return std::nullopt;
        }
    }
    return std::make_pair(alpha, beta);
}

std::vector<RiskComparison> risk_profile(const GsleuModel& m) {
    std::vector<RiskComparison> out;
    for (std::size_t j = 1; j <= m.level_count(); ++j) {
        for (std::size_t k = j + 1; k <= m.level_count(); ++k) {
            const auto& uj = m.level(j).utility;
            const auto& uk = m.level(k).utility;
            RiskComparison r;
            r.j = j;
            r.k = k;
            r.ordinally_equivalent = true;
            for (std::size_t a = 0; a < uj.size() && r.ordinally_equivalent; ++a) {
                for (std::size_t b = 0; b < uj.size(); ++b) {
                    if ((uj[a] < uj[b]) != (uk[a] < uk[b])) {
                        r.ordinally_equivalent = false;
                        break;
                    }
                }
            }
            r.witness = affine_witness(uj, uk);
            r.affinely_related = r.witness.has_value();
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace lexeu
