// Copyright 2026 The dirac2d Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIRAC2D_HALF_INTEGER_HPP
#define DIRAC2D_HALF_INTEGER_HPP

#include <compare>
#include <cstdlib>
#include <string>

#include "dirac2d/errors.hpp"

namespace dirac2d {

/// Exact half-integer, stored as twice its value so that all constraint
/// checks are integer arithmetic (kappa = 3/2 is stored as twice = 3).
struct HalfInt {
    int twice = 0;

    constexpr double value() const { return 0.5 * twice; }
    constexpr bool is_half_odd() const { return twice % 2 != 0; }
    constexpr bool positive() const { return twice > 0; }

    constexpr HalfInt operator-() const { return HalfInt{-twice}; }
    constexpr auto operator<=>(const HalfInt&) const = default;
};

constexpr HalfInt half_int_from_twice(int twice) { return HalfInt{twice}; }

constexpr HalfInt abs(HalfInt h) { return HalfInt{h.twice < 0 ? -h.twice : h.twice}; }

constexpr int sign(HalfInt h) { return h.twice < 0 ? -1 : 1; }

/// Renders as an exact fraction: "3/2", "-1/2", or "2" for whole values.
inline std::string to_string(HalfInt h)
{
    if (h.twice % 2 == 0) {
        return std::to_string(h.twice / 2);
    }
    return std::to_string(h.twice) + "/2";
}

/// Parses "p/2" fractions exactly ("3/2", "-1/2"); whole numbers are accepted
/// as plain integers. Anything else is a DomainError.
inline HalfInt parse_half_int(const std::string& text)
{
    std::size_t pos = 0;
    int num = 0;
    try {
        num = std::stoi(text, &pos);
    } catch (const std::exception&) {
        throw DomainError("not a half-integer: '" + text + "'");
    }
    if (pos == text.size()) {
        return HalfInt{2 * num};
    }
    if (text.substr(pos) == "/2") {
        return HalfInt{num};
    }
    throw DomainError("not a half-integer: '" + text + "'");
}

} // namespace dirac2d

#endif
