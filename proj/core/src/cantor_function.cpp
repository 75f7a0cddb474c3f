#include "cantor/cantor_function.hpp"

#include <algorithm>
#include <string>

namespace cantor {

namespace {

std::vector<Digit> halve_digits(const std::vector<Digit>& digits) {
    std::vector<Digit> out;
    out.reserve(digits.size());
    for (Digit d : digits) {
        out.push_back(static_cast<Digit>(d / 2));
    }
    return out;
}

CantorFunctionValue from_cantor_expansion(const DigitExpansion& e) {
    DigitExpansion binary{2, halve_digits(e.prefix), halve_digits(e.tail)};
    Rational v = value(binary);
    return CantorFunctionValue{std::move(v), std::move(binary)};
}

}  // namespace

CantorFunctionValue cantor_function(const Rational& x) {
    std::optional<DigitExpansion> e = cantor_expansion(x);
    if (!e) {
        throw std::domain_error("cantor_function: " + x.str() +
                                " is not in the Cantor set; use cantor_function_extended");
    }
    return from_cantor_expansion(*e);
}

CantorFunctionValue cantor_function_extended(const Rational& x) {
    DigitExpansion canonical = expand(x, 3);
    std::optional<std::size_t> one = canonical.first_position(1);
    if (!one) {
        return from_cantor_expansion(canonical);
    }
    // Constant across the gap: halve the digits before the first 1, then
    // append a final binary 1. Points of the set whose canonical expansion
    // carries a 1 (right gap endpoints) land on the same value.
    std::vector<Digit> head = halve_digits(truncate(canonical, *one - 1));
    head.push_back(1);
    DigitExpansion binary{2, std::move(head), {}};
    Rational v = value(binary);
    return CantorFunctionValue{std::move(v), std::move(binary)};
}

Rational PolygonalApproximant::evaluate(const Rational& x) const {
    if (x < Rational(0) || x > Rational(1)) {
        throw std::domain_error("polygonal approximant: argument outside [0, 1]");
    }
    auto it = std::upper_bound(
        breakpoints_.begin(), breakpoints_.end(), x,
        [](const Rational& v, const Breakpoint& bp) { return v < bp.first; });
    // x >= first breakpoint (0), so it > begin; the segment starts just before.
    const Breakpoint& hi = it == breakpoints_.end() ? breakpoints_.back() : *it;
    const Breakpoint& lo = *(it - 1);
    if (x == lo.first) {
        return lo.second;
    }
    return lo.second +
           (hi.second - lo.second) * (x - lo.first) / (hi.first - lo.first);
}

PolygonalApproximant polygonal_approximant(int n, int depth_limit) {
    if (n < 1) {
        throw std::domain_error("polygonal_approximant: level must be at least 1");
    }
    if (n > depth_limit) {
        throw std::domain_error("polygonal_approximant: level " + std::to_string(n) +
                                " exceeds limit " + std::to_string(depth_limit));
    }
    std::vector<PolygonalApproximant::Breakpoint> cur = {
        {Rational(0), Rational(0)},
        {Rational(1, 3), Rational(1, 2)},
        {Rational(2, 3), Rational(1, 2)},
        {Rational(1), Rational(1)},
    };
    for (int level = 1; level < n; ++level) {
        std::vector<PolygonalApproximant::Breakpoint> next;
        next.reserve(cur.size() * 2);
        for (const auto& [bx, by] : cur) {
            next.emplace_back(bx / Rational(3), by / Rational(2));
        }
        next.emplace_back(Rational(2, 3), Rational(1, 2));
        for (std::size_t i = 1; i < cur.size(); ++i) {
            next.emplace_back((cur[i].first + Rational(2)) / Rational(3),
                              (cur[i].second + Rational(1)) / Rational(2));
        }
        cur = std::move(next);
    }
    PolygonalApproximant out;
    out.level_ = n;
    out.breakpoints_ = std::move(cur);
    return out;
}

Rational approximation_gap(int m, int n, long grid, int depth_limit) {
    if (m < 1 || n < m) {
        throw std::domain_error("approximation_gap: need 1 <= m <= n");
    }
    if (grid < 1) {
        throw std::domain_error("approximation_gap: grid must be positive");
    }
    if (m == n) {
        return Rational(0);
    }
    PolygonalApproximant fm = polygonal_approximant(m, depth_limit);
    PolygonalApproximant fn = polygonal_approximant(n, depth_limit);
    Rational best;
    for (long k = 0; k <= grid; ++k) {
        Rational x(k, grid);
        Rational gap = abs(fm.evaluate(x) - fn.evaluate(x));
        best = max(best, gap);
    }
    return best;
}

Rational approximation_gap_to_limit(int n, long grid, int depth_limit) {
    if (grid < 1) {
        throw std::domain_error("approximation_gap_to_limit: grid must be positive");
    }
    PolygonalApproximant fn = polygonal_approximant(n, depth_limit);
    Rational best;
    for (long k = 0; k <= grid; ++k) {
        Rational x(k, grid);
        Rational gap = abs(fn.evaluate(x) - cantor_function_extended(x).value);
        best = max(best, gap);
    }
    return best;
}

DifferenceQuotient difference_quotient(const Rational& x, int n) {
    if (n < 0) {
        throw std::domain_error("difference_quotient: index must be nonnegative");
    }
    std::size_t position = 2 * static_cast<std::size_t>(n) + 1;
    Rational flipped = flip_cantor_digit(x, position);
    Rational rise = abs(cantor_function(x).value - cantor_function(flipped).value);
    Rational run = abs(x - flipped);
    return DifferenceQuotient{std::move(flipped), rise / run};
}

SingularityReport singularity_report(int n, int depth_limit) {
    PolygonalApproximant fn = polygonal_approximant(n, depth_limit);
    SingularityReport rep{Rational(0), Rational(0), Rational(0)};
    const auto& bps = fn.breakpoints();
    for (std::size_t i = 1; i < bps.size(); ++i) {
        Rational dx = bps[i].first - bps[i - 1].first;
        Rational dy = bps[i].second - bps[i - 1].second;
        if (dy.is_zero()) {
            rep.flat_measure += dx;
            rep.rise_on_flat += dy;
        } else {
            rep.rise_on_iterate += dy;
        }
    }
    return rep;
}

}  // namespace cantor
