#pragma once

#include <vector>

#include "cantor/rational.hpp"

namespace cantor {

/// Point with exact rational coordinates; the dimension is coords.size().
struct PointD {
    std::vector<Rational> coords;

    friend bool operator==(const PointD&, const PointD&) = default;
};

/// Max-metric (Chebyshev) distance; the metric every box bound here is stated
/// in, since its balls are axis-aligned boxes.
Rational chebyshev_distance(const PointD& a, const PointD& b);

}  // namespace cantor
