// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace gcs {

// Edge weight in Z ∪ {-inf, +inf}. An absent edge has weight -inf.
//
// Addition is the max-plus path sum: -inf absorbs everything (including
// +inf, a path through an unreachable segment constrains nothing), +inf
// absorbs finite values. Finite overflow saturates to +inf.
class Weight {
  public:
    using rep = std::int64_t;

    static constexpr rep kNegInf = std::numeric_limits<rep>::min();
    static constexpr rep kPosInf = std::numeric_limits<rep>::max();

    constexpr Weight() = default;
    constexpr explicit Weight(rep v) : v_(v) {}

    static constexpr Weight neg_inf() { return Weight(kNegInf); }
    static constexpr Weight pos_inf() { return Weight(kPosInf); }

    [[nodiscard]] constexpr rep raw() const { return v_; }
    [[nodiscard]] constexpr bool is_neg_inf() const { return v_ == kNegInf; }
    [[nodiscard]] constexpr bool is_pos_inf() const { return v_ == kPosInf; }
    [[nodiscard]] constexpr bool is_finite() const { return !is_neg_inf() && !is_pos_inf(); }

    friend constexpr bool operator==(Weight, Weight) = default;
    friend constexpr auto operator<=>(Weight, Weight) = default;

    [[nodiscard]] std::string str() const {
        if (is_neg_inf()) return "-inf";
        if (is_pos_inf()) return "+inf";
        return std::to_string(v_);
    }

  private:
    rep v_ = kNegInf;
};

// Path sum on raw representations; hot loop of the closure.
constexpr Weight::rep add_weights(Weight::rep a, Weight::rep b) {
    if (a == Weight::kNegInf || b == Weight::kNegInf) return Weight::kNegInf;
    if (a == Weight::kPosInf || b == Weight::kPosInf) return Weight::kPosInf;
    Weight::rep out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        return a > 0 ? Weight::kPosInf : Weight::kNegInf;
    }
    if (out == Weight::kNegInf) return Weight::kNegInf;
    if (out == Weight::kPosInf) return Weight::kPosInf;
    return out;
}

constexpr Weight operator+(Weight a, Weight b) { return Weight(add_weights(a.raw(), b.raw())); }

} // namespace gcs
