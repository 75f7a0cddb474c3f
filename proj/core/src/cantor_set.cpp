#include "cantor/cantor_set.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace cantor {

namespace {

void check_depth(int n, int depth_limit, const char* what) {
    if (n < 0) {
        throw std::domain_error(std::string(what) + ": negative depth");
    }
    if (n > depth_limit) {
        throw std::domain_error(std::string(what) + ": depth " + std::to_string(n) +
                                " exceeds limit " + std::to_string(depth_limit));
    }
}

// Appends the {0,2} digit words of length `depth`, in ascending value order,
// as integer numerators over 3^depth.
void walk_words(int level, int depth, const mpz_class& numerator,
                const std::function<void(const mpz_class&)>& emit) {
    if (level == depth) {
        emit(numerator);
        return;
    }
    walk_words(level + 1, depth, numerator * 3, emit);
    walk_words(level + 1, depth, numerator * 3 + 2, emit);
}

}  // namespace

Rational IntervalSet::total_length() const {
    Rational sum;
    for (const Interval& iv : intervals) {
        sum += iv.length();
    }
    return sum;
}

IntervalSet cantor_iterate(int n, int depth_limit) {
    check_depth(n, depth_limit, "cantor_iterate");
    IntervalSet out;
    out.intervals.reserve(static_cast<std::size_t>(1) << n);
    mpz_class scale = int_pow(3, static_cast<unsigned long>(n));
    walk_words(0, n, 0, [&](const mpz_class& p) {
        out.intervals.push_back({Rational(p, scale), Rational(p + 1, scale)});
    });
    return out;
}

IntervalSet svc_iterate(int m, int n, int depth_limit) {
    if (m < 3) {
        throw std::domain_error("svc_iterate: removal base m must be at least 3");
    }
    check_depth(n, depth_limit, "svc_iterate");
    IntervalSet cur;
    cur.intervals.push_back({Rational(0), Rational(1)});
    for (int k = 1; k <= n; ++k) {
        Rational removal = rational_pow(m, -k);
        Rational half = removal / Rational(2);
        IntervalSet next;
        next.intervals.reserve(cur.intervals.size() * 2);
        for (const Interval& iv : cur.intervals) {
            if (iv.length() < removal) {
                throw ConstructionError(
                    k, "svc_iterate: removal exceeds piece length at level " + std::to_string(k));
            }
            Rational center = (iv.left + iv.right) / Rational(2);
            next.intervals.push_back({iv.left, center - half});
            next.intervals.push_back({center + half, iv.right});
        }
        cur = std::move(next);
    }
    return cur;
}

std::vector<RemovedInterval> removed_intervals(int n, int depth_limit) {
    if (n < 1) {
        throw std::domain_error("removed_intervals: level must be at least 1");
    }
    check_depth(n, depth_limit, "removed_intervals");
    std::vector<RemovedInterval> out;
    out.reserve(static_cast<std::size_t>(1) << (n - 1));
    IntervalSet hosts = cantor_iterate(n - 1, depth_limit);
    Rational third = rational_pow(3, -n);
    for (const Interval& iv : hosts.intervals) {
        RemovedInterval gap;
        gap.level = n;
        gap.left = iv.left + third;
        gap.right = iv.right - third;
        gap.left_expansion = dual_representations(gap.left, 3).terminating.value();
        gap.right_expansion = dual_representations(gap.right, 3).terminating.value();
        out.push_back(std::move(gap));
    }
    return out;
}

std::optional<DigitExpansion> cantor_expansion(const Rational& x) {
    DualRepresentations reps = dual_representations(x, 3);
    if (!reps.repeating.contains_digit(1)) {
        return reps.repeating;
    }
    if (reps.terminating && !reps.terminating->contains_digit(1)) {
        return reps.terminating;
    }
    return std::nullopt;
}

Membership membership(const Rational& x) {
    std::optional<DigitExpansion> e = cantor_expansion(x);
    if (e) {
        return Membership{true, std::nullopt};
    }
    // Every representation of x carries a digit 1; the canonical one locates
    // the deleted gap. Digits before the first 1 are necessarily in {0, 2}.
    DigitExpansion canonical = expand(x, 3);
    std::size_t level = canonical.first_position(1).value();
    std::vector<Digit> word = truncate(canonical, level - 1);

    RemovedInterval gap;
    gap.level = static_cast<int>(level);
    word.push_back(1);
    gap.left_expansion = DigitExpansion{3, word, {}};
    gap.left = value(gap.left_expansion);
    word.back() = 2;
    gap.right_expansion = DigitExpansion{3, word, {}};
    gap.right = value(gap.right_expansion);
    return Membership{false, std::move(gap)};
}

Rational flip_cantor_digit(const Rational& x, std::size_t position) {
    if (position == 0) {
        throw std::domain_error("flip_cantor_digit: positions are 1-based");
    }
    std::optional<DigitExpansion> e = cantor_expansion(x);
    if (!e) {
        throw std::domain_error("flip_cantor_digit: " + x.str() + " is not in the Cantor set");
    }
    DigitExpansion flipped = *e;
    if (position <= flipped.prefix.size()) {
        flipped.prefix[position - 1] ^= 2;
        return value(flipped);
    }
    std::vector<Digit> prefix = truncate(*e, position);
    prefix[position - 1] ^= 2;
    std::vector<Digit> tail = e->tail;
    if (!tail.empty()) {
        std::size_t rot = (position - e->prefix.size()) % tail.size();
        std::rotate(tail.begin(), tail.begin() + static_cast<std::ptrdiff_t>(rot), tail.end());
    }
    return value(DigitExpansion{3, std::move(prefix), std::move(tail)});
}

MeasureDiagnostics measure_diagnostics(int n) {
    if (n < 0) {
        throw std::domain_error("measure_diagnostics: negative depth");
    }
    mpz_class count = 1;
    Rational piece_length(1);
    for (int k = 1; k <= n; ++k) {
        count *= 2;
        piece_length /= Rational(3);
    }
    Rational surviving = Rational(count, 1) * piece_length;
    return MeasureDiagnostics{surviving, Rational(1) - surviving};
}

Rational svc_remaining_length(int m, int n) {
    if (m < 3) {
        throw std::domain_error("svc_remaining_length: removal base m must be at least 3");
    }
    if (n < 0) {
        throw std::domain_error("svc_remaining_length: negative depth");
    }
    mpz_class count = 1;
    Rational piece_length(1);
    for (int k = 1; k <= n; ++k) {
        Rational removal = rational_pow(m, -k);
        if (piece_length < removal) {
            throw ConstructionError(
                k, "svc_remaining_length: removal exceeds piece length at level " +
                       std::to_string(k));
        }
        piece_length = (piece_length - removal) / Rational(2);
        count *= 2;
    }
    return Rational(count, 1) * piece_length;
}

DimensionEstimate dimension_estimate(int n) {
    if (n < 1) {
        throw std::domain_error("dimension_estimate: depth must be at least 1");
    }
    DimensionEstimate est;
    est.box_count = int_pow(2, static_cast<unsigned long>(n));
    est.box_side = rational_pow(3, -n);
    mpz_class inv_side = int_pow(3, static_cast<unsigned long>(n));
    est.quotient = std::log(est.box_count.get_d()) / std::log(inv_side.get_d());
    return est;
}

Rational perfectness_witness(const Rational& x, int n, int depth_limit) {
    check_depth(n, depth_limit, "perfectness_witness");
    std::optional<DigitExpansion> e = cantor_expansion(x);
    if (!e) {
        throw std::domain_error("perfectness_witness: " + x.str() + " is not in the Cantor set");
    }
    DigitExpansion head{3, truncate(*e, static_cast<std::size_t>(n)), {}};
    Rational left = value(head);
    Rational right = left + rational_pow(3, -n);
    if (x == left) {
        return right;
    }
    if (x == right) {
        return left;
    }
    return (x - left) <= (right - x) ? left : right;
}

}  // namespace cantor
