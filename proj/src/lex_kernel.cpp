#include "lex_kernel.hpp"

#include <bit>

namespace lexeu::detail {

namespace {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

constexpr int kMaxBits = 100;

bool fits(const Integer& v) {
    return v == 0 || boost::multiprecision::msb(abs(v)) < kMaxBits;
}

__int128 to_int128(const Integer& v) {
    // Little-endian base-2^32 reconstruction, exact below kMaxBits.
    auto mag = abs(v);
    __int128 out = 0;
    int shift = 0;
    while (mag != 0) {
        auto limb = static_cast<std::uint32_t>(static_cast<std::uint64_t>(mag & 0xffffffffU));
        out |= static_cast<__int128>(limb) << shift;
        shift += 32;
        mag >>= 32;
    }
    return v < 0 ? -out : out;
}

}  // namespace

LexKernel::LexKernel(const GsleuModel& m) : outcomes_(m.outcomes()->size()) {
    const auto n = m.space()->size();
    for (const auto& level : m.levels()) {
        LevelData data;
        data.support = level.support.mask();
        data.exact.assign(n * outcomes_, Rational(0));
        Integer lcm = 1;
        for (std::size_t s = 0; s < n; ++s) {
            if (!level.support.contains(s)) {
                continue;
            }
            for (std::size_t o = 0; o < outcomes_; ++o) {
                auto w = level.prob[s] * level.utility[o];
                lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(w));
                data.exact[s * outcomes_ + o] = std::move(w);
            }
        }
        data.scale = Rational(lcm);
        data.integral = true;
        data.scaled.assign(n * outcomes_, 0);
        for (std::size_t i = 0; i < data.exact.size() && data.integral; ++i) {
            Rational v = data.exact[i] * data.scale;
            auto num = boost::multiprecision::numerator(v);
            if (!fits(num)) {
                data.integral = false;
                break;
            }
            data.scaled[i] = to_int128(num);
        }
        levels_.push_back(std::move(data));
    }
}

int LexKernel::level_sign(std::size_t k, Mask mask, const std::uint32_t* x,
                          const std::uint32_t* y) const {
    const auto& data = levels_[k - 1];
    Mask hit = mask & data.support;
    if (data.integral) {
        __int128 total = 0;
        while (hit != 0) {
            const auto s = static_cast<std::size_t>(std::countr_zero(hit));
            hit &= hit - 1;
            total += data.scaled[s * outcomes_ + x[s]] - data.scaled[s * outcomes_ + y[s]];
        }
        return total > 0 ? 1 : (total < 0 ? -1 : 0);
    }
    return level_diff(k, mask, x, y).sign();
}

Rational LexKernel::level_diff(std::size_t k, Mask mask, const std::uint32_t* x,
                               const std::uint32_t* y) const {
    const auto& data = levels_[k - 1];
    Mask hit = mask & data.support;
    Rational total = 0;
    while (hit != 0) {
        const auto s = static_cast<std::size_t>(std::countr_zero(hit));
        hit &= hit - 1;
        total += data.exact[s * outcomes_ + x[s]] - data.exact[s * outcomes_ + y[s]];
    }
    return total;
}

std::pair<int, std::size_t> LexKernel::lex(Mask mask, const std::uint32_t* x,
                                           const std::uint32_t* y) const {
    for (std::size_t k = 1; k <= levels_.size(); ++k) {
        if ((mask & levels_[k - 1].support) == 0) {
            continue;
        }
        const int sign = level_sign(k, mask, x, y);
        if (sign != 0) {
            return {sign, k};
        }
    }
    return {0, 0};
}

}  // namespace lexeu::detail
