#pragma once

#include <cstdint>

#include "scoreseq/errors.hpp"

namespace scoreseq::detail {

inline std::int64_t checked_add(std::int64_t lhs, std::int64_t rhs) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(lhs, rhs, &out)) {
        throw ArithmeticOverflow("64-bit overflow in addition");
    }
    return out;
}

inline std::int64_t checked_sub(std::int64_t lhs, std::int64_t rhs) {
    std::int64_t out = 0;
    if (__builtin_sub_overflow(lhs, rhs, &out)) {
        throw ArithmeticOverflow("64-bit overflow in subtraction");
    }
    return out;
}

inline std::int64_t checked_mul(std::int64_t lhs, std::int64_t rhs) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(lhs, rhs, &out)) {
        throw ArithmeticOverflow("64-bit overflow in multiplication");
    }
    return out;
}

}  // namespace scoreseq::detail
