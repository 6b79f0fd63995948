#pragma once

#include "mubound/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace mubound {

// Exact expression reader for the table transcription format. Grammar:
// integers and finite decimals, + - * / ^ (integer exponent), parentheses,
// implicit multiplication ("2(45-44s)", "13s"), the variable s, the family
// index n, and sqrt(<integer expression>) in point expressions.
// Errors throw ParseError.

/// Rational function of s, e.g. "(10-11s)/((2-s)(1-s))".
RationalFunction parse_formula(std::string_view text, std::optional<std::int64_t> n = std::nullopt);

/// Exact point, e.g. "(539 - sqrt(42121))/460" or "1-1/(2n(n-1))".
QuadraticNumber parse_point(std::string_view text, std::optional<std::int64_t> n = std::nullopt);

}  // namespace mubound
