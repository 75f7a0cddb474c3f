#pragma once

#include <vector>

#include "cantor/cantor_set.hpp"
#include "cantor/point.hpp"

namespace cantor {

/// Onto map from the Cantor set to the unit square (d = 2) or cube (d = 3):
/// the {0, 2} ternary digits of x are dealt round-robin to the d coordinates
/// and halved into binary digits. Requires x in the Cantor set.
PointD lebesgue_curve(const Rational& x, int d);

/// The curve extended to all of [0, 1] by interpolating affinely across each
/// deleted gap, coordinate by coordinate.
PointD lebesgue_curve_extended(const Rational& x, int d);

/// A parameter mapping onto p: each coordinate's canonical (non-terminating)
/// binary digits are doubled and interleaved back into one ternary expansion.
/// Right inverse of lebesgue_curve, exactly.
Rational lebesgue_curve_preimage(const PointD& p);

struct CurveSample {
    Rational parameter;
    PointD point;
    bool on_cantor = false;
};

/// Extended-curve samples at the parameters j * 3^-depth, j = 0..3^depth,
/// optionally thinned to every stride-th parameter (the endpoint is always
/// kept).
std::vector<CurveSample> sample_curve(int d, int depth, long stride = 1,
                                      int depth_limit = kDefaultDepthLimit);

/// Secant slope of one square-curve coordinate under a single digit flip.
/// Flipping the ternary digit at position 2n+1 moves the first coordinate by
/// 2^-(n+1); position 2n+2 feeds the second coordinate. The slopes grow as
/// (3/4) * (9/2)^n for the first coordinate and (9/4) * (9/2)^n for the
/// second.
struct ComponentQuotient {
    Rational x_flipped;
    Rational quotient;
};

ComponentQuotient component_difference_quotient(const Rational& x, int n, int coord);

/// Same flip positions, but measuring the coordinate the flipped digit does
/// not feed; the quotient is exactly 0.
ComponentQuotient unaffected_component_quotient(const Rational& x, int n, int coord);

}  // namespace cantor
