#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cantor/digit_expansion.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// Default cap on construction depth; 2^20 pieces is about a million records.
inline constexpr int kDefaultDepthLimit = 20;

struct Interval {
    Rational left;
    Rational right;

    Rational length() const { return right - left; }
    bool contains(const Rational& x) const { return left <= x && x <= right; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of disjoint closed intervals, ordered left to right.
struct IntervalSet {
    std::vector<Interval> intervals;

    Rational total_length() const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;
};

/// Raised when a construction step would remove more than a piece can give up.
class ConstructionError : public std::runtime_error {
public:
    ConstructionError(int level, const std::string& what)
        : std::runtime_error(what), level_(level) {}

    int level() const { return level_; }

private:
    int level_;
};

/// Step n of the middle-thirds construction: 2^n closed intervals of length
/// 3^-n. Step 0 is [0, 1].
IntervalSet cantor_iterate(int n, int depth_limit = kDefaultDepthLimit);

/// Smith-Volterra-Cantor variant: at step k an open interval of length m^-k is
/// deleted from the center of each surviving piece. m = 3 reproduces
/// cantor_iterate exactly; m >= 4 leaves positive total length in the limit.
IntervalSet svc_iterate(int m, int n, int depth_limit = kDefaultDepthLimit);

/// Open middle-third gap deleted at a given construction level, together with
/// the terminating digit forms of its endpoints: the left endpoint ends in
/// ternary digit 1 at position `level`, the right endpoint in digit 2.
struct RemovedInterval {
    int level = 0;
    Rational left;
    Rational right;
    DigitExpansion left_expansion;
    DigitExpansion right_expansion;
};

/// The 2^(n-1) gaps deleted at step n, ordered left to right.
std::vector<RemovedInterval> removed_intervals(int n, int depth_limit = kDefaultDepthLimit);

/// Membership of x in the limit set. x belongs iff some ternary expansion of x
/// avoids digit 1 (both twins of a dual representation are consulted).
/// Otherwise `removed` describes the unique deleted gap containing x, at the
/// level of the first unavoidable digit 1.
struct Membership {
    bool in_set = false;
    std::optional<RemovedInterval> removed;
};

Membership membership(const Rational& x);

/// The ternary expansion of x with digits in {0, 2} when one exists (at most
/// one of the dual twins qualifies); std::nullopt exactly when x is outside
/// the limit set.
std::optional<DigitExpansion> cantor_expansion(const Rational& x);

/// Value obtained by flipping the {0, 2} ternary digit of x at a 1-based
/// position (0 <-> 2). The result stays in the limit set and differs from x by
/// exactly 2 * 3^-position. Requires x in the limit set.
Rational flip_cantor_digit(const Rational& x, std::size_t position);

/// Exact surviving and removed length after n construction steps, from the
/// level recurrence (each step splits a piece in two at a third the length).
struct MeasureDiagnostics {
    Rational iterate_length;
    Rational removed_total;
};

MeasureDiagnostics measure_diagnostics(int n);

/// Surviving length of the SVC(m) construction after n steps, from the same
/// per-level recurrence the interval construction follows.
Rational svc_remaining_length(int m, int n);

/// Box-counting data at scale 3^-n: 2^n boxes of side 3^-n, and the resulting
/// log-count over log-scale quotient (= ln 2 / ln 3 at every n).
struct DimensionEstimate {
    mpz_class box_count;
    Rational box_side;
    double quotient = 0.0;
};

DimensionEstimate dimension_estimate(int n);

/// A step-n endpoint y != x within 3^-n of x, witnessing that x is not
/// isolated. Requires x in the limit set.
Rational perfectness_witness(const Rational& x, int n, int depth_limit = kDefaultDepthLimit);

}  // namespace cantor
