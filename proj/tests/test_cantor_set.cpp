#include <random>

#include "cantor/cantor_set.hpp"
#include "doctest.h"
#include "oracles.hpp"

using cantor::cantor_expansion;
using cantor::cantor_iterate;
using cantor::DigitExpansion;
using cantor::Interval;
using cantor::IntervalSet;
using cantor::Membership;
using cantor::membership;
using cantor::Rational;
using cantor::rational_pow;
using cantor::RemovedInterval;
using cantor::removed_intervals;
using cantor::svc_iterate;

namespace {

// Reference construction by geometric recursion: keep the left and right
// thirds of every piece. Independent of the digit-word enumeration the
// library uses.
IntervalSet split_thirds(int n) {
    IntervalSet cur;
    cur.intervals.push_back({Rational(0), Rational(1)});
    for (int k = 0; k < n; ++k) {
        IntervalSet next;
        for (const Interval& iv : cur.intervals) {
            Rational third = iv.length() / Rational(3);
            next.intervals.push_back({iv.left, iv.left + third});
            next.intervals.push_back({iv.right - third, iv.right});
        }
        cur = std::move(next);
    }
    return cur;
}

Rational random_cantor_point(std::mt19937& rng, int digits, bool closing_tail) {
    std::vector<cantor::Digit> prefix;
    std::bernoulli_distribution bit(0.5);
    for (int i = 0; i < digits; ++i) {
        prefix.push_back(bit(rng) ? 2 : 0);
    }
    std::vector<cantor::Digit> tail;
    if (closing_tail) {
        tail = {bit(rng) ? cantor::Digit{2} : cantor::Digit{0}, 2};
    }
    return value(DigitExpansion{3, std::move(prefix), std::move(tail)});
}

}  // namespace

TEST_CASE("first construction steps match the frozen interval lists") {
    CHECK(cantor_iterate(0) == IntervalSet{{{Rational(0), Rational(1)}}});
    CHECK(cantor_iterate(1) ==
          IntervalSet{{{Rational(0), Rational(1, 3)}, {Rational(2, 3), Rational(1)}}});
    CHECK(cantor_iterate(2) == IntervalSet{{{Rational(0), Rational(1, 9)},
                                            {Rational(2, 9), Rational(1, 3)},
                                            {Rational(2, 3), Rational(7, 9)},
                                            {Rational(8, 9), Rational(1)}}});
    CHECK(cantor_iterate(3) == IntervalSet{{{Rational(0), Rational(1, 27)},
                                            {Rational(2, 27), Rational(1, 9)},
                                            {Rational(2, 9), Rational(7, 27)},
                                            {Rational(8, 27), Rational(1, 3)},
                                            {Rational(2, 3), Rational(19, 27)},
                                            {Rational(20, 27), Rational(7, 9)},
                                            {Rational(8, 9), Rational(25, 27)},
                                            {Rational(26, 27), Rational(1)}}});
}

TEST_CASE("digit-word construction agrees with the thirds recursion") {
    for (int n = 0; n <= 8; ++n) {
        CAPTURE(n);
        REQUIRE(cantor_iterate(n) == split_thirds(n));
    }
    CHECK_THROWS_AS(cantor_iterate(-1), std::domain_error);
    CHECK_THROWS_AS(cantor_iterate(25), std::domain_error);
    CHECK_THROWS_AS(cantor_iterate(11, 10), std::domain_error);
    CHECK(cantor_iterate(11, 12).intervals.size() == (1u << 11));
}

TEST_CASE("construction intervals are ordered, disjoint and nested") {
    for (int n = 1; n <= 8; ++n) {
        IntervalSet coarse = cantor_iterate(n - 1);
        IntervalSet fine = cantor_iterate(n);
        REQUIRE(fine.intervals.size() == 2 * coarse.intervals.size());
        Rational side = rational_pow(3, -n);
        for (std::size_t i = 0; i < fine.intervals.size(); ++i) {
            const Interval& iv = fine.intervals[i];
            REQUIRE(iv.length() == side);
            if (i > 0) {
                REQUIRE(fine.intervals[i - 1].right < iv.left);
            }
            // Each fine piece sits inside its host: index i lives in coarse
            // piece i / 2 by the left-to-right ordering.
            const Interval& host = coarse.intervals[i / 2];
            REQUIRE(host.left <= iv.left);
            REQUIRE(iv.right <= host.right);
        }
    }
}

TEST_CASE("interval endpoints persist through every later step") {
    IntervalSet early = cantor_iterate(3);
    for (int later : {4, 6, 9}) {
        IntervalSet fine = cantor_iterate(later);
        for (const Interval& iv : early.intervals) {
            for (const Rational& e : {iv.left, iv.right}) {
                bool found = false;
                for (const Interval& f : fine.intervals) {
                    if (f.left == e || f.right == e) {
                        found = true;
                        break;
                    }
                }
                CAPTURE(later);
                REQUIRE(found);
                REQUIRE(membership(e).in_set);
            }
        }
    }
}

TEST_CASE("variable-removal construction reproduces the thirds set at m = 3") {
    for (int n = 0; n <= 6; ++n) {
        CAPTURE(n);
        REQUIRE(svc_iterate(3, n) == cantor_iterate(n));
    }
}

TEST_CASE("fat construction m = 4 matches hand-computed steps") {
    CHECK(svc_iterate(4, 1) ==
          IntervalSet{{{Rational(0), Rational(3, 8)}, {Rational(5, 8), Rational(1)}}});
    CHECK(svc_iterate(4, 2) == IntervalSet{{{Rational(0), Rational(5, 32)},
                                            {Rational(7, 32), Rational(3, 8)},
                                            {Rational(5, 8), Rational(25, 32)},
                                            {Rational(27, 32), Rational(1)}}});
    CHECK_THROWS_AS(svc_iterate(2, 1), std::domain_error);
}

TEST_CASE("removed length follows the explicit series for every m") {
    for (int m = 3; m <= 6; ++m) {
        for (int n = 0; n <= 8; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            Rational remaining = cantor::svc_remaining_length(m, n);
            REQUIRE(remaining == Rational(1) - oracles::svc_removed_series(m, n));
            REQUIRE(remaining == svc_iterate(m, n).total_length());
        }
    }
}

TEST_CASE("fat construction m = 4 leaves 1/2 + 2^-(n+1)") {
    for (int n = 0; n <= 12; ++n) {
        CAPTURE(n);
        REQUIRE(cantor::svc_remaining_length(4, n) ==
                Rational(1, 2) + rational_pow(2, -(n + 1)));
    }
}

TEST_CASE("measure diagnostics follow the (2/3)^n law") {
    CHECK(cantor::measure_diagnostics(4).iterate_length == Rational(16, 81));
    CHECK(cantor::measure_diagnostics(4).removed_total == Rational(65, 81));
    for (int n = 0; n <= 20; ++n) {
        cantor::MeasureDiagnostics d = cantor::measure_diagnostics(n);
        CAPTURE(n);
        REQUIRE(d.iterate_length == rational_pow(2, n) * rational_pow(3, -n));
        REQUIRE(d.iterate_length + d.removed_total == Rational(1));
        if (n <= 10) {
            REQUIRE(d.iterate_length == cantor_iterate(n).total_length());
        }
    }
}

TEST_CASE("box-count quotient is log 2 over log 3 at every scale") {
    const double expected = std::log(2.0) / std::log(3.0);
    for (int n : {1, 2, 5, 10, 20}) {
        cantor::DimensionEstimate est = cantor::dimension_estimate(n);
        CAPTURE(n);
        REQUIRE(est.box_count == cantor::int_pow(2, static_cast<unsigned long>(n)));
        REQUIRE(est.box_side == rational_pow(3, -n));
        REQUIRE(std::abs(est.quotient - expected) < 1e-12);
    }
    CHECK_THROWS_AS(cantor::dimension_estimate(0), std::domain_error);
}

TEST_CASE("deleted gaps carry terminating endpoint digit forms") {
    std::vector<RemovedInterval> first = removed_intervals(1);
    REQUIRE(first.size() == 1);
    CHECK(first[0].left == Rational(1, 3));
    CHECK(first[0].right == Rational(2, 3));
    CHECK(first[0].left_expansion == DigitExpansion{3, {1}, {}});
    CHECK(first[0].right_expansion == DigitExpansion{3, {2}, {}});

    std::vector<RemovedInterval> second = removed_intervals(2);
    REQUIRE(second.size() == 2);
    CHECK(second[0].left == Rational(1, 9));
    CHECK(second[0].right == Rational(2, 9));
    CHECK(second[1].left == Rational(7, 9));
    CHECK(second[1].right == Rational(8, 9));

    for (int n = 1; n <= 8; ++n) {
        std::vector<RemovedInterval> gaps = removed_intervals(n);
        REQUIRE(gaps.size() == (1u << (n - 1)));
        for (const RemovedInterval& gap : gaps) {
            CAPTURE(n);
            REQUIRE(gap.level == n);
            REQUIRE(gap.right - gap.left == rational_pow(3, -n));
            REQUIRE(value(gap.left_expansion) == gap.left);
            REQUIRE(value(gap.right_expansion) == gap.right);
            REQUIRE(gap.left_expansion.tail.empty());
            REQUIRE(gap.right_expansion.tail.empty());
            REQUIRE(gap.left_expansion.prefix.size() == static_cast<std::size_t>(n));
            REQUIRE(gap.left_expansion.prefix.back() == 1);
            REQUIRE(gap.right_expansion.prefix.back() == 2);
        }
    }
    CHECK_THROWS_AS(removed_intervals(0), std::domain_error);
}

TEST_CASE("surviving pieces and deleted gaps tile the unit interval") {
    const int n = 6;
    std::vector<Interval> tiles;
    for (const Interval& iv : cantor_iterate(n).intervals) {
        tiles.push_back(iv);
    }
    for (int k = 1; k <= n; ++k) {
        for (const RemovedInterval& gap : removed_intervals(k)) {
            tiles.push_back({gap.left, gap.right});
        }
    }
    std::sort(tiles.begin(), tiles.end(),
              [](const Interval& a, const Interval& b) { return a.left < b.left; });
    REQUIRE(tiles.front().left == Rational(0));
    REQUIRE(tiles.back().right == Rational(1));
    for (std::size_t i = 1; i < tiles.size(); ++i) {
        REQUIRE(tiles[i - 1].right == tiles[i].left);
    }
}

TEST_CASE("no piece survives whole: every piece loses its middle at the next step") {
    for (int n = 0; n <= 7; ++n) {
        std::vector<RemovedInterval> gaps = removed_intervals(n + 1);
        for (const Interval& iv : cantor_iterate(n).intervals) {
            bool pierced = false;
            for (const RemovedInterval& gap : gaps) {
                if (iv.left < gap.left && gap.right < iv.right) {
                    pierced = true;
                    break;
                }
            }
            CAPTURE(n);
            REQUIRE(pierced);
        }
    }
}

TEST_CASE("membership decides by ternary digits") {
    CHECK(membership(Rational(0)).in_set);
    CHECK(membership(Rational(1)).in_set);
    CHECK(membership(Rational(1, 3)).in_set);
    CHECK(membership(Rational(2, 3)).in_set);
    CHECK(membership(Rational(1, 4)).in_set);
    CHECK(membership(Rational(3, 4)).in_set);
    CHECK(membership(Rational(1, 13)).in_set);

    Membership half = membership(Rational(1, 2));
    REQUIRE_FALSE(half.in_set);
    REQUIRE(half.removed.has_value());
    CHECK(half.removed->level == 1);
    CHECK(half.removed->left == Rational(1, 3));
    CHECK(half.removed->right == Rational(2, 3));

    Membership x = membership(Rational(5, 27));
    REQUIRE_FALSE(x.in_set);
    REQUIRE(x.removed.has_value());
    CHECK(x.removed->level == 2);
    CHECK(x.removed->left == Rational(1, 9));
    CHECK(x.removed->right == Rational(2, 9));
}

TEST_CASE("membership gap agrees with the level-by-level gap scan") {
    std::mt19937 rng(11u);
    std::uniform_int_distribution<long> den(2, 2000);
    int outside = 0;
    for (int i = 0; i < 200; ++i) {
        long q = den(rng);
        long p = std::uniform_int_distribution<long>(1, q - 1)(rng);
        Rational x(p, q);
        Membership m = membership(x);
        if (m.in_set) {
            continue;
        }
        ++outside;
        REQUIRE(m.removed->left < x);
        REQUIRE(x < m.removed->right);
        if (m.removed->level <= 10) {
            bool found = false;
            for (const RemovedInterval& gap : removed_intervals(m.removed->level)) {
                if (gap.left == m.removed->left && gap.right == m.removed->right) {
                    found = true;
                    break;
                }
            }
            REQUIRE(found);
        }
    }
    CHECK(outside > 100);  // most rationals fall in a gap
}

TEST_CASE("digit form with digits in {0, 2} exists exactly for members") {
    std::optional<DigitExpansion> third = cantor_expansion(Rational(1, 3));
    REQUIRE(third.has_value());
    CHECK(*third == DigitExpansion{3, {0}, {2}});

    // For the right endpoint the terminating twin is the qualifying one.
    std::optional<DigitExpansion> two_thirds = cantor_expansion(Rational(2, 3));
    REQUIRE(two_thirds.has_value());
    CHECK(*two_thirds == DigitExpansion{3, {2}, {}});

    std::optional<DigitExpansion> quarter = cantor_expansion(Rational(1, 4));
    REQUIRE(quarter.has_value());
    CHECK(*quarter == DigitExpansion{3, {}, {0, 2}});

    CHECK_FALSE(cantor_expansion(Rational(1, 2)).has_value());
    CHECK_FALSE(cantor_expansion(Rational(5, 27)).has_value());
}

TEST_CASE("digit flips move a member by exactly twice the digit weight") {
    CHECK(cantor::flip_cantor_digit(Rational(0), 1) == Rational(2, 3));
    CHECK(cantor::flip_cantor_digit(Rational(2, 3), 1) == Rational(0));
    CHECK(cantor::flip_cantor_digit(Rational(1, 4), 1) == Rational(11, 12));

    std::mt19937 rng(13u);
    for (int i = 0; i < 60; ++i) {
        Rational x = random_cantor_point(rng, 6, i % 2 == 0);
        std::size_t pos = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
        Rational y = cantor::flip_cantor_digit(x, pos);
        CAPTURE(pos);
        REQUIRE(cantor::abs(y - x) == Rational(2) * rational_pow(3, -static_cast<int>(pos)));
        REQUIRE(membership(y).in_set);
        REQUIRE(cantor::flip_cantor_digit(y, pos) == x);
    }
    CHECK_THROWS_AS(cantor::flip_cantor_digit(Rational(1, 2), 1), std::domain_error);
    CHECK_THROWS_AS(cantor::flip_cantor_digit(Rational(1, 4), 0), std::domain_error);
}

TEST_CASE("no member is isolated: witnesses at every scale") {
    CHECK(cantor::perfectness_witness(Rational(0), 2) == Rational(1, 9));
    CHECK(cantor::perfectness_witness(Rational(1), 1) == Rational(2, 3));

    std::mt19937 rng(17u);
    for (int i = 0; i < 40; ++i) {
        Rational x = random_cantor_point(rng, 8, i % 2 == 0);
        for (int n : {1, 3, 6, 10}) {
            Rational w = cantor::perfectness_witness(x, n);
            CAPTURE(n);
            REQUIRE(w != x);
            REQUIRE(membership(w).in_set);
            REQUIRE(cantor::abs(w - x) <= rational_pow(3, -n));
            // The scan oracle confirms some distinct endpoint is this close.
            std::optional<Rational> nearest =
                oracles::nearest_distinct_endpoint(cantor_iterate(n), x);
            REQUIRE(nearest.has_value());
            REQUIRE(cantor::abs(*nearest - x) <= cantor::abs(w - x));
        }
    }
    CHECK_THROWS_AS(cantor::perfectness_witness(Rational(1, 2), 3), std::domain_error);
}
