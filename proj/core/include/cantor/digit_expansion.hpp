#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cantor/rational.hpp"

namespace cantor {

using Digit = std::uint8_t;

/// Positional expansion of a number in [0, 1]: a finite run of digits followed
/// by an infinitely repeated block. An empty tail means trailing zeros. Digits
/// are most-significant-first; position k (1-based) is the coefficient of
/// base^-k.
///
/// Canonical form, as produced by expand(): when x = m / base^n lies in (0, 1)
/// the terminating expansion is rewritten to the non-terminating twin whose
/// tail repeats base-1. Zero is all-0 digits, one is the all-(base-1) tail.
struct DigitExpansion {
    int base = 3;  // 2 or 3
    std::vector<Digit> prefix;
    std::vector<Digit> tail;

    /// Digit at 1-based position k, unrolling the repeating tail.
    Digit digit_at(std::size_t k) const;

    bool contains_digit(Digit d) const;

    /// 1-based position of the first occurrence of d, searching the prefix and
    /// one period of the tail; std::nullopt when d never appears.
    std::optional<std::size_t> first_position(Digit d) const;

    bool is_terminating() const { return tail.empty(); }

    /// Text form "0.<prefix>(<tail>)_<base>", e.g. "0.01(2)_3".
    std::string str() const;

    friend bool operator==(const DigitExpansion&, const DigitExpansion&) = default;
};

/// Canonical digit expansion of x in the given base. Requires 0 <= x <= 1 and
/// base in {2, 3}. Long division with remainder-cycle detection; the returned
/// tail is the exact minimal period.
DigitExpansion expand(const Rational& x, int base);

/// Exact value of an expansion as a Rational.
Rational value(const DigitExpansion& e);

/// The expansions of x in a base. Exactly the base-power rationals m/base^n in
/// (0, 1) own two: the terminating form and the canonical repeating twin. For
/// every other x (including 0 and 1) only `repeating` is populated.
struct DualRepresentations {
    DigitExpansion repeating;
    std::optional<DigitExpansion> terminating;

    bool is_dual() const { return terminating.has_value(); }
};

DualRepresentations dual_representations(const Rational& x, int base);

/// First k digits of e, tail unrolled, zero-padded past a terminating prefix.
std::vector<Digit> truncate(const DigitExpansion& e, std::size_t k);

}  // namespace cantor
