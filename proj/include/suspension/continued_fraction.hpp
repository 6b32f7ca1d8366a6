#pragma once

#include "arithmetic.hpp"
#include "error.hpp"

#include <utility>
#include <vector>

namespace suspension {

// Quotients k_0, ..., k_t of num/den = k_0 - 1/(k_1 - 1/(... - 1/k_t)),
// with k_0 >= first_min and k_i >= 2 afterwards.
inline std::vector<Integer> neg_cf(Integer num, Integer den, int first_min) {
    if (num <= 0 || den <= 0) throw Error(ErrorCode::InvalidInput, "continued fraction needs positive numerator and denominator");
    if (first_min != 1 && first_min != 2) throw Error(ErrorCode::InvalidInput, "first_min must be 1 or 2");
    if (first_min == 2 && num <= den) throw Error(ErrorCode::InvalidInput, "value must exceed 1 when the leading quotient is at least 2");
    std::vector<Integer> out;
    while (den != 0) {
        Integer k = (num + den - 1) / den;
        out.push_back(k);
        Integer rem = k * den - num;
        num = std::move(den);
        den = std::move(rem);
    }
    return out;
}

// Reduced (num, den) of the negative continued fraction.
inline std::pair<Integer, Integer> eval_neg_cf(const std::vector<Integer>& quotients) {
    if (quotients.empty()) throw Error(ErrorCode::InvalidInput, "empty continued fraction");
    Integer num = quotients.back();
    Integer den = 1;
    for (std::size_t i = quotients.size() - 1; i-- > 0;) {
        if (num == 0) throw Error(ErrorCode::InvalidExpansion, "a tail of the expansion evaluates to zero");
        Integer next = quotients[i] * num - den;
        den = std::move(num);
        num = std::move(next);
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Integer g = gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

}  // namespace suspension
