#pragma once

#include <utility>
#include <vector>

#include "cantor/cantor_set.hpp"

namespace cantor {

/// Function value together with the binary expansion it was read off from.
/// The binary digits are the ternary digits of the argument halved, position
/// by position, so `value(binary_expansion)` always reproduces `value`.
struct CantorFunctionValue {
    Rational value;
    DigitExpansion binary_expansion;
};

/// The staircase function on the limit set: ternary digits in {0, 2} are
/// halved into binary digits. Requires membership; callers with arguments in
/// a deleted gap want cantor_function_extended.
CantorFunctionValue cantor_function(const Rational& x);

/// The staircase extended to all of [0, 1]: constant across each deleted gap,
/// with the value determined by the digits before the first ternary 1.
CantorFunctionValue cantor_function_extended(const Rational& x);

/// Piecewise-linear approximant at a construction level: slope (3/2)^n on the
/// 2^n surviving pieces, flat on every gap deleted so far. Breakpoints are
/// stored explicitly and evaluation interpolates exactly.
class PolygonalApproximant {
public:
    using Breakpoint = std::pair<Rational, Rational>;

    int level() const { return level_; }
    const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }

    Rational evaluate(const Rational& x) const;

private:
    friend PolygonalApproximant polygonal_approximant(int n, int depth_limit);

    int level_ = 0;
    std::vector<Breakpoint> breakpoints_;
};

PolygonalApproximant polygonal_approximant(int n, int depth_limit = kDefaultDepthLimit);

/// Largest |A_m - A_n| between the level-m and level-n approximants over the
/// uniform grid k/grid, k = 0..grid. Bounded by 2^-min(m,n).
Rational approximation_gap(int m, int n, long grid, int depth_limit = kDefaultDepthLimit);

/// Largest |A_n - limit| over the same grid, against the extended staircase.
Rational approximation_gap_to_limit(int n, long grid, int depth_limit = kDefaultDepthLimit);

/// Secant slope between x and the point obtained by flipping the ternary
/// digit at position 2n+1. The slopes grow as (3/4) * (9/4)^n, witnessing
/// that the staircase has no derivative on the limit set.
struct DifferenceQuotient {
    Rational x_flipped;
    Rational quotient;
};

DifferenceQuotient difference_quotient(const Rational& x, int n);

/// Where the rise of the level-n approximant happens: the flat part carries
/// measure 1 - (2/3)^n and none of the rise; the surviving pieces carry all
/// of it.
struct SingularityReport {
    Rational flat_measure;
    Rational rise_on_flat;
    Rational rise_on_iterate;
};

SingularityReport singularity_report(int n, int depth_limit = kDefaultDepthLimit);

}  // namespace cantor
