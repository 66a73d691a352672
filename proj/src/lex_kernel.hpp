#pragma once

#include "lexeu/model.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace lexeu::detail {

/**
 * Exact per-level sums Σ_{s ∈ mask ∩ support_k} p_k(s) u_k(x(s)).
 *
 * Each level's weights p_k(s) u_k(o) are scaled by a positive common
 * denominator so that sums run on 128-bit integers. Levels whose scaled
 * weights do not fit fall back to rational arithmetic.
 */
class LexKernel {
public:
    explicit LexKernel(const GsleuModel& m);

    std::size_t levels() const noexcept { return levels_.size(); }

    /// Sign of the level-k (1-based) difference between x and y over `mask`.
    int level_sign(std::size_t k, Mask mask, const std::uint32_t* x, const std::uint32_t* y) const;

    /// Exact level-k difference over `mask`, unscaled.
    Rational level_diff(std::size_t k, Mask mask, const std::uint32_t* x, const std::uint32_t* y) const;

    /// First nonzero level sign over `mask`; (0, 0) when all levels tie.
    std::pair<int, std::size_t> lex(Mask mask, const std::uint32_t* x, const std::uint32_t* y) const;

private:
    struct LevelData {
        Mask support = 0;
        bool integral = false;
        Rational scale;
        std::vector<__int128> scaled;  // [state * outcomes + outcome]
        std::vector<Rational> exact;   // same layout, used when !integral
    };
    std::size_t outcomes_ = 0;
    std::vector<LevelData> levels_;
};

}  // namespace lexeu::detail
