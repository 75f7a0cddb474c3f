#include "cantor/space_filling.hpp"

#include <numeric>
#include <string>

namespace cantor {

namespace {

void check_dimension(int d) {
    if (d != 2 && d != 3) {
        throw std::domain_error("space-filling curve: dimension must be 2 or 3");
    }
}

// Splits a ternary {0,2} digit stream into d binary coordinate streams.
// Coordinate i takes source positions i+1, i+1+d, ... with digits halved.
// The source prefix is consumed in whole rounds of d; past it the stream is
// tail-periodic, so each coordinate's tail has period lcm(t, d) / d.
std::vector<DigitExpansion> deinterleave(const DigitExpansion& src, int d) {
    std::size_t rounds = (src.prefix.size() + static_cast<std::size_t>(d) - 1) /
                         static_cast<std::size_t>(d);
    std::size_t t = src.tail.size();
    std::size_t coord_tail = t == 0 ? 0 : std::lcm(t, static_cast<std::size_t>(d)) / d;
    std::vector<DigitExpansion> out(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        DigitExpansion& e = out[static_cast<std::size_t>(i)];
        e.base = 2;
        e.prefix.reserve(rounds);
        for (std::size_t p = 0; p < rounds; ++p) {
            e.prefix.push_back(static_cast<Digit>(
                src.digit_at(p * static_cast<std::size_t>(d) + static_cast<std::size_t>(i) + 1) / 2));
        }
        e.tail.reserve(coord_tail);
        for (std::size_t q = 0; q < coord_tail; ++q) {
            std::size_t pos = (rounds + q) * static_cast<std::size_t>(d) +
                              static_cast<std::size_t>(i) + 1;
            e.tail.push_back(static_cast<Digit>(src.digit_at(pos) / 2));
        }
    }
    return out;
}

// Doubles the digits of d binary streams and deals them into one ternary
// stream: (2a1)(2b1)(2a2)(2b2)... The joint tail period is the lcm of the
// coordinate periods.
DigitExpansion interleave(const std::vector<DigitExpansion>& coords) {
    std::size_t d = coords.size();
    std::size_t rounds = 0;
    std::size_t period = 0;
    for (const DigitExpansion& e : coords) {
        rounds = std::max(rounds, e.prefix.size());
        if (!e.tail.empty()) {
            period = period == 0 ? e.tail.size() : std::lcm(period, e.tail.size());
        }
    }
    DigitExpansion out{3, {}, {}};
    out.prefix.reserve(rounds * d);
    for (std::size_t p = 1; p <= rounds; ++p) {
        for (const DigitExpansion& e : coords) {
            out.prefix.push_back(static_cast<Digit>(e.digit_at(p) * 2));
        }
    }
    out.tail.reserve(period * d);
    for (std::size_t q = 1; q <= period; ++q) {
        for (const DigitExpansion& e : coords) {
            out.tail.push_back(static_cast<Digit>(e.digit_at(rounds + q) * 2));
        }
    }
    return out;
}

DigitExpansion curve_source_expansion(const Rational& x, int d) {
    check_dimension(d);
    std::optional<DigitExpansion> e = cantor_expansion(x);
    if (!e) {
        throw std::domain_error("lebesgue_curve: " + x.str() +
                                " is not in the Cantor set; use lebesgue_curve_extended");
    }
    return *e;
}

}  // namespace

Rational chebyshev_distance(const PointD& a, const PointD& b) {
    if (a.coords.size() != b.coords.size()) {
        throw std::domain_error("chebyshev_distance: dimension mismatch");
    }
    Rational best;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        best = max(best, abs(a.coords[i] - b.coords[i]));
    }
    return best;
}

PointD lebesgue_curve(const Rational& x, int d) {
    std::vector<DigitExpansion> parts = deinterleave(curve_source_expansion(x, d), d);
    PointD p;
    p.coords.reserve(parts.size());
    for (const DigitExpansion& e : parts) {
        p.coords.push_back(value(e));
    }
    return p;
}

PointD lebesgue_curve_extended(const Rational& x, int d) {
    check_dimension(d);
    Membership m = membership(x);
    if (m.in_set) {
        return lebesgue_curve(x, d);
    }
    const RemovedInterval& gap = *m.removed;
    PointD at_left = lebesgue_curve(gap.left, d);
    PointD at_right = lebesgue_curve(gap.right, d);
    Rational width = gap.right - gap.left;
    PointD p;
    p.coords.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        std::size_t k = static_cast<std::size_t>(i);
        p.coords.push_back(
            (at_left.coords[k] * (gap.right - x) + at_right.coords[k] * (x - gap.left)) / width);
    }
    return p;
}

Rational lebesgue_curve_preimage(const PointD& p) {
    check_dimension(static_cast<int>(p.coords.size()));
    std::vector<DigitExpansion> parts;
    parts.reserve(p.coords.size());
    for (const Rational& c : p.coords) {
        if (c < Rational(0) || c > Rational(1)) {
            throw std::domain_error("lebesgue_curve_preimage: coordinate " + c.str() +
                                    " outside [0, 1]");
        }
        parts.push_back(expand(c, 2));
    }
    return value(interleave(parts));
}

std::vector<CurveSample> sample_curve(int d, int depth, long stride, int depth_limit) {
    check_dimension(d);
    if (depth < 0 || depth > depth_limit) {
        throw std::domain_error("sample_curve: depth " + std::to_string(depth) +
                                " outside [0, " + std::to_string(depth_limit) + "]");
    }
    if (stride < 1) {
        throw std::domain_error("sample_curve: stride must be positive");
    }
    mpz_class count = int_pow(3, static_cast<unsigned long>(depth));
    unsigned long n = count.get_ui();
    std::vector<CurveSample> out;
    out.reserve(n / static_cast<unsigned long>(stride) + 2);
    unsigned long j = 0;
    while (true) {
        Rational x(mpz_class(j), count);
        out.push_back(CurveSample{x, lebesgue_curve_extended(x, d), membership(x).in_set});
        if (j == n) {
            break;
        }
        unsigned long step = static_cast<unsigned long>(stride);
        j = n - j > step ? j + step : n;  // always land exactly on the endpoint
    }
    return out;
}

namespace {

ComponentQuotient component_quotient_impl(const Rational& x, int n, int flip_coord,
                                          int measure_coord) {
    if (n < 0) {
        throw std::domain_error("component quotient: index must be nonnegative");
    }
    std::size_t position = 2 * static_cast<std::size_t>(n) + 1 +
                           static_cast<std::size_t>(flip_coord);
    Rational flipped = flip_cantor_digit(x, position);
    std::size_t c = static_cast<std::size_t>(measure_coord);
    Rational rise = abs(lebesgue_curve(x, 2).coords[c] - lebesgue_curve(flipped, 2).coords[c]);
    Rational run = abs(x - flipped);
    return ComponentQuotient{std::move(flipped), rise / run};
}

void check_coord(int coord) {
    if (coord != 0 && coord != 1) {
        throw std::domain_error("component quotient: coordinate must be 0 or 1");
    }
}

}  // namespace

ComponentQuotient component_difference_quotient(const Rational& x, int n, int coord) {
    check_coord(coord);
    return component_quotient_impl(x, n, coord, coord);
}

ComponentQuotient unaffected_component_quotient(const Rational& x, int n, int coord) {
    check_coord(coord);
    return component_quotient_impl(x, n, 1 - coord, coord);
}

}  // namespace cantor
