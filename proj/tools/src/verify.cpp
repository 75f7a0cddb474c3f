#include "verify.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "cantor/cantor_function.hpp"
#include "cantor/cantor_set.hpp"
#include "cantor/hausdorff.hpp"
#include "cantor/space_filling.hpp"

namespace cli {

namespace {

using cantor::DigitExpansion;
using cantor::Rational;
using cantor::rational_pow;

constexpr std::size_t kWitnessCap = 50;

struct Check {
    PropertyResult result;
    std::size_t failures = 0;
    std::size_t cases = 0;

    explicit Check(std::string name) { result.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& witness) {
        ++cases;
        if (ok) {
            return;
        }
        ++failures;
        result.pass = false;
        if (result.witnesses.size() < kWitnessCap) {
            result.witnesses.push_back(witness());
        } else if (result.witnesses.size() == kWitnessCap) {
            result.witnesses.push_back("... more failures suppressed");
        }
    }

    PropertyResult done(const std::string& what) {
        result.detail = std::to_string(cases) + " " + what +
                        (result.pass ? " checked" : " checked, " + std::to_string(failures) +
                                                        " failed");
        return result;
    }
};

std::vector<cantor::Digit> random_word(std::mt19937& rng, int len) {
    std::vector<cantor::Digit> w;
    std::bernoulli_distribution bit(0.5);
    for (int i = 0; i < len; ++i) {
        w.push_back(bit(rng) ? 2 : 0);
    }
    return w;
}

PropertyResult check_expansion_roundtrip() {
    Check c("expansion-roundtrip");
    for (int base : {2, 3}) {
        for (long q = 1; q <= 200; ++q) {
            for (long p = 0; p <= q; p += (q > 40 ? 7 : 1)) {
                Rational x(p, q);
                Rational back = value(expand(x, base));
                c.expect(back == x, [&] {
                    return "base " + std::to_string(base) + ": value(expand(" + x.str() +
                           ")) = " + back.str();
                });
            }
        }
    }
    std::mt19937 rng(101u);
    for (int i = 0; i < 300; ++i) {
        long q = std::uniform_int_distribution<long>(1, 100000)(rng);
        long p = std::uniform_int_distribution<long>(0, q)(rng);
        for (int base : {2, 3}) {
            Rational x(p, q);
            Rational back = value(expand(x, base));
            c.expect(back == x, [&] {
                return "base " + std::to_string(base) + ": value(expand(" + x.str() +
                       ")) = " + back.str();
            });
        }
    }
    return c.done("expansion round trips");
}

PropertyResult check_duals() {
    Check c("duals");
    for (int base : {2, 3}) {
        for (long q = 2; q <= 300; ++q) {
            for (long p = 1; p < q; p += (q > 50 ? 11 : 1)) {
                Rational x(p, q);
                cantor::DualRepresentations reps = dual_representations(x, base);
                mpz_class reduced = x.den();
                while (mpz_divisible_ui_p(reduced.get_mpz_t(),
                                          static_cast<unsigned long>(base))) {
                    reduced /= base;
                }
                bool power = reduced == 1 && x.den() > 1;
                c.expect(reps.is_dual() == power, [&] {
                    return "base " + std::to_string(base) + ": " + x.str() +
                           (power ? " should have" : " should not have") +
                           " two expansions";
                });
                c.expect(value(reps.repeating) == x,
                         [&] { return "repeating form of " + x.str() + " off"; });
                if (reps.terminating) {
                    c.expect(value(*reps.terminating) == x,
                             [&] { return "terminating form of " + x.str() + " off"; });
                    c.expect(reps.repeating.tail ==
                                 std::vector<cantor::Digit>{
                                     static_cast<cantor::Digit>(base - 1)},
                             [&] { return "repeating twin of " + x.str() + " malformed"; });
                }
            }
        }
    }
    return c.done("two-expansion cases");
}

PropertyResult check_nesting() {
    Check c("nesting");
    for (int n = 1; n <= 10; ++n) {
        cantor::IntervalSet coarse = cantor::cantor_iterate(n - 1);
        cantor::IntervalSet fine = cantor::cantor_iterate(n);
        c.expect(fine.intervals.size() == 2 * coarse.intervals.size(), [&] {
            return "level " + std::to_string(n) + ": piece count " +
                   std::to_string(fine.intervals.size());
        });
        for (std::size_t i = 0; i < fine.intervals.size(); ++i) {
            const cantor::Interval& iv = fine.intervals[i];
            const cantor::Interval& host = coarse.intervals[i / 2];
            c.expect(host.left <= iv.left && iv.right <= host.right, [&] {
                return "level " + std::to_string(n) + ": [" + iv.left.str() + ", " +
                       iv.right.str() + "] escapes its host";
            });
            c.expect(iv.length() == rational_pow(3, -n), [&] {
                return "level " + std::to_string(n) + ": piece length " +
                       iv.length().str();
            });
        }
    }
    return c.done("nesting relations");
}

PropertyResult check_partition() {
    Check c("partition");
    const int n = 8;
    std::vector<cantor::Interval> tiles;
    for (const cantor::Interval& iv : cantor::cantor_iterate(n).intervals) {
        tiles.push_back(iv);
    }
    for (int k = 1; k <= n; ++k) {
        for (const cantor::RemovedInterval& gap : cantor::removed_intervals(k)) {
            tiles.push_back({gap.left, gap.right});
        }
    }
    std::sort(tiles.begin(), tiles.end(),
              [](const cantor::Interval& a, const cantor::Interval& b) {
                  return a.left < b.left;
              });
    c.expect(tiles.front().left == Rational(0),
             [&] { return "tiling starts at " + tiles.front().left.str(); });
    c.expect(tiles.back().right == Rational(1),
             [&] { return "tiling ends at " + tiles.back().right.str(); });
    for (std::size_t i = 1; i < tiles.size(); ++i) {
        c.expect(tiles[i - 1].right == tiles[i].left, [&] {
            return "seam between " + tiles[i - 1].right.str() + " and " +
                   tiles[i].left.str();
        });
    }
    return c.done("tiling seams at level " + std::to_string(n));
}

PropertyResult check_measure() {
    Check c("measure");
    for (int n = 0; n <= 10; ++n) {
        cantor::MeasureDiagnostics d = cantor::measure_diagnostics(n);
        Rational expected = rational_pow(Rational(2, 3), n);
        c.expect(d.iterate_length == expected, [&] {
            return "level " + std::to_string(n) + ": surviving length " +
                   d.iterate_length.str() + " != " + expected.str();
        });
        c.expect(d.iterate_length + d.removed_total == Rational(1), [&] {
            return "level " + std::to_string(n) + ": lengths do not sum to 1";
        });
        c.expect(d.iterate_length == cantor::cantor_iterate(n).total_length(), [&] {
            return "level " + std::to_string(n) + ": recurrence and interval sum differ";
        });
    }
    return c.done("surviving-length identities, n <= 10");
}

PropertyResult check_svc_measure() {
    Check c("svc-measure");
    for (int m = 3; m <= 6; ++m) {
        for (int n = 0; n <= 10; ++n) {
            Rational remaining = cantor::svc_remaining_length(m, n);
            Rational series;
            Rational count(1);
            for (int k = 1; k <= n; ++k) {
                series += count / rational_pow(m, k);
                count *= Rational(2);
            }
            c.expect(remaining == Rational(1) - series, [&] {
                return "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                       ": remaining " + remaining.str();
            });
            c.expect(remaining == cantor::svc_iterate(m, n).total_length(), [&] {
                return "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                       ": recurrence and interval sum differ";
            });
        }
    }
    for (int n = 0; n <= 20; ++n) {
        Rational remaining = cantor::svc_remaining_length(4, n);
        Rational closed = Rational(1, 2) + rational_pow(2, -(n + 1));
        c.expect(remaining == closed, [&] {
            return "m=4 n=" + std::to_string(n) + ": remaining " + remaining.str() +
                   " != " + closed.str();
        });
    }
    return c.done("variable-removal length identities");
}

PropertyResult check_dimension() {
    Check c("dimension");
    const double expected = std::log(2.0) / std::log(3.0);
    for (int n = 1; n <= 20; ++n) {
        cantor::DimensionEstimate est = cantor::dimension_estimate(n);
        c.expect(std::abs(est.quotient - expected) < 1e-12, [&] {
            return "n=" + std::to_string(n) + ": quotient " + std::to_string(est.quotient);
        });
        c.expect(est.box_count == cantor::int_pow(2, static_cast<unsigned long>(n)) &&
                     est.box_side == rational_pow(3, -n),
                 [&] { return "n=" + std::to_string(n) + ": box data off"; });
    }
    return c.done("box-count quotients, n <= 20");
}

PropertyResult check_membership() {
    Check c("membership");
    for (const cantor::Interval& iv : cantor::cantor_iterate(6).intervals) {
        c.expect(cantor::membership(iv.left).in_set,
                 [&] { return "endpoint " + iv.left.str() + " rejected"; });
        c.expect(cantor::membership(iv.right).in_set,
                 [&] { return "endpoint " + iv.right.str() + " rejected"; });
    }
    std::mt19937 rng(103u);
    for (int i = 0; i < 300; ++i) {
        long q = std::uniform_int_distribution<long>(2, 5000)(rng);
        long p = std::uniform_int_distribution<long>(1, q - 1)(rng);
        Rational x(p, q);
        cantor::Membership m = cantor::membership(x);
        if (m.in_set) {
            std::optional<DigitExpansion> e = cantor::cantor_expansion(x);
            c.expect(e.has_value() && !e->contains_digit(1) && value(*e) == x,
                     [&] { return "member " + x.str() + " has no {0,2} digit form"; });
            continue;
        }
        c.expect(m.removed->left < x && x < m.removed->right, [&] {
            return x.str() + " outside its reported gap (" + m.removed->left.str() +
                   ", " + m.removed->right.str() + ")";
        });
        if (m.removed->level <= 10) {
            bool found = false;
            for (const cantor::RemovedInterval& gap :
                 cantor::removed_intervals(m.removed->level)) {
                if (gap.left == m.removed->left && gap.right == m.removed->right) {
                    found = true;
                    break;
                }
            }
            c.expect(found, [&] {
                return "gap of " + x.str() + " missing from level " +
                       std::to_string(m.removed->level) + " list";
            });
        }
    }
    return c.done("membership decisions");
}

PropertyResult check_monotonicity() {
    Check c("monotonicity");
    const long grid = 243;
    Rational prev(0);
    for (long k = 0; k <= grid; ++k) {
        Rational x(k, grid);
        Rational y = cantor::cantor_function_extended(x).value;
        c.expect(prev <= y, [&] {
            return "F(" + x.str() + ") = " + y.str() + " dips below " + prev.str();
        });
        prev = y;
    }
    c.expect(prev == Rational(1), [&] { return "F(1) = " + prev.str(); });
    return c.done("grid points k/243");
}

PropertyResult check_gap_constancy() {
    Check c("gap-constancy");
    for (int level = 1; level <= 8; ++level) {
        for (const cantor::RemovedInterval& gap : cantor::removed_intervals(level)) {
            Rational at_left = cantor::cantor_function_extended(gap.left).value;
            for (int k = 1; k <= 5; ++k) {
                Rational x = gap.left + Rational(k, 6) * (gap.right - gap.left);
                Rational y = cantor::cantor_function_extended(x).value;
                c.expect(y == at_left, [&] {
                    return "F(" + x.str() + ") = " + y.str() + " != " + at_left.str() +
                           " across gap (" + gap.left.str() + ", " + gap.right.str() + ")";
                });
            }
            c.expect(cantor::cantor_function_extended(gap.right).value == at_left, [&] {
                return "gap (" + gap.left.str() + ", " + gap.right.str() +
                       ") endpoints disagree";
            });
        }
    }
    return c.done("probes across gaps through level 8");
}

PropertyResult check_convergence() {
    Check c("convergence");
    const long grid = 200;
    for (int n = 1; n <= 8; ++n) {
        Rational step = cantor::approximation_gap(n, n + 1, grid);
        Rational bound = rational_pow(2, -(n + 1));
        c.expect(step <= bound, [&] {
            return "max |A_" + std::to_string(n) + " - A_" + std::to_string(n + 1) +
                   "| = " + step.str() + " > " + bound.str();
        });
        Rational to_limit = cantor::approximation_gap_to_limit(n, grid);
        c.expect(to_limit <= rational_pow(2, -n), [&] {
            return "max |A_" + std::to_string(n) + " - F| = " + to_limit.str();
        });
    }
    return c.done("uniform bounds over k/" + std::to_string(grid));
}

PropertyResult check_quotient_growth() {
    Check c("quotient-growth");
    std::mt19937 rng(107u);
    std::vector<Rational> xs{Rational(0), Rational(1, 4), Rational(2, 3)};
    for (int i = 0; i < 5; ++i) {
        xs.push_back(value(DigitExpansion{3, random_word(rng, 10), {0, 2}}));
    }
    for (const Rational& x : xs) {
        Rational prev;
        for (int n = 0; n <= 12; ++n) {
            cantor::DifferenceQuotient q = cantor::difference_quotient(x, n);
            Rational expected = Rational(3, 4) * rational_pow(Rational(9, 4), n);
            c.expect(q.quotient == expected, [&] {
                return "x=" + x.str() + " n=" + std::to_string(n) + ": quotient " +
                       q.quotient.str() + " != " + expected.str();
            });
            if (n > 0) {
                c.expect(q.quotient / prev == Rational(9, 4), [&] {
                    return "x=" + x.str() + " n=" + std::to_string(n) +
                           ": step ratio " + (q.quotient / prev).str();
                });
            }
            prev = q.quotient;
        }
    }
    PropertyResult r = c.done("secant slopes under position-(2n+1) flips");
    r.notes.push_back(
        "step ratio is exactly 9/4: slopes (3/4)*(9/4)^n for the scalar staircase. "
        "The ratio 9/2 sometimes quoted next to these slopes belongs to the square-curve "
        "coordinates, whose quotients grow as (3/4)*(9/2)^n and (9/4)*(9/2)^n.");
    return r;
}

PropertyResult check_surjectivity() {
    Check c("surjectivity");
    for (int n = 1; n <= 6; ++n) {
        mpz_class den = cantor::int_pow(2, static_cast<unsigned long>(n));
        for (mpz_class k = 0; k <= den; ++k) {
            Rational target(k, den);
            DigitExpansion bin = expand(target, 2);
            DigitExpansion doubled{3, bin.prefix, bin.tail};
            for (cantor::Digit& d : doubled.prefix) {
                d = static_cast<cantor::Digit>(d * 2);
            }
            for (cantor::Digit& d : doubled.tail) {
                d = static_cast<cantor::Digit>(d * 2);
            }
            Rational x = value(doubled);
            bool ok = cantor::membership(x).in_set &&
                      cantor::cantor_function(x).value == target;
            c.expect(ok, [&] {
                return "no doubled-digit preimage hit for " + target.str() +
                       " (tried " + x.str() + ")";
            });
        }
    }
    return c.done("dyadic targets through 1/64");
}

PropertyResult check_curve_roundtrip() {
    Check c("curve-roundtrip");
    std::mt19937 rng(109u);
    for (int d : {2, 3}) {
        for (int i = 0; i < 120; ++i) {
            cantor::PointD p;
            for (int k = 0; k < d; ++k) {
                long q = std::uniform_int_distribution<long>(1, 64)(rng);
                long num = std::uniform_int_distribution<long>(0, q)(rng);
                p.coords.push_back(Rational(num, q));
            }
            Rational x = cantor::lebesgue_curve_preimage(p);
            bool ok = cantor::membership(x).in_set && cantor::lebesgue_curve(x, d) == p;
            c.expect(ok, [&] {
                std::string coords;
                for (const Rational& v : p.coords) {
                    coords += (coords.empty() ? "" : " ") + v.str();
                }
                return "round trip missed (" + coords + ") via parameter " + x.str();
            });
        }
    }
    return c.done("preimage round trips");
}

PropertyResult check_curve_coverage() {
    Check c("curve-coverage");
    const int depth = 4;
    const int div = 4;
    std::vector<cantor::CurveSample> samples = cantor::sample_curve(2, depth);
    for (int i = 0; i < div; ++i) {
        for (int j = 0; j < div; ++j) {
            Rational lo_x(i, div), hi_x(i + 1, div);
            Rational lo_y(j, div), hi_y(j + 1, div);
            bool hit = false;
            for (const cantor::CurveSample& s : samples) {
                if (lo_x <= s.point.coords[0] && s.point.coords[0] <= hi_x &&
                    lo_y <= s.point.coords[1] && s.point.coords[1] <= hi_y) {
                    hit = true;
                    break;
                }
            }
            c.expect(hit, [&] {
                return "no sample in cell [" + lo_x.str() + ", " + hi_x.str() + "] x [" +
                       lo_y.str() + ", " + hi_y.str() + "]";
            });
        }
    }
    return c.done("quarter cells against parameters k/81");
}

PropertyResult check_curve_modulus() {
    Check c("curve-modulus");
    std::mt19937 rng(113u);
    for (int trial = 0; trial < 100; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 8)(rng);
        std::vector<cantor::Digit> head = random_word(rng, 2 * n);
        auto extended = [&](std::vector<cantor::Digit> h) {
            std::vector<cantor::Digit> t = random_word(rng, 8);
            h.insert(h.end(), t.begin(), t.end());
            return value(DigitExpansion{3, std::move(h), {}});
        };
        Rational a = extended(head);
        Rational b = extended(head);
        cantor::PointD pa = cantor::lebesgue_curve(a, 2);
        cantor::PointD pb = cantor::lebesgue_curve(b, 2);
        Rational bound = rational_pow(2, -n);
        for (int coord : {0, 1}) {
            Rational diff = cantor::abs(pa.coords[coord] - pb.coords[coord]);
            c.expect(diff <= bound, [&] {
                return "2n=" + std::to_string(2 * n) + " shared digits: coordinate " +
                       std::to_string(coord) + " moved " + diff.str();
            });
        }
    }
    return c.done("digit-sharing pairs");
}

cantor::CompactBoxSet unit_square() {
    return cantor::CompactBoxSet{
        2,
        {cantor::Box{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}}}};
}

PropertyResult check_hausdorff_cover() {
    Check c("hausdorff-cover");
    cantor::NestedCover cover = cantor::build_cover(unit_square(), 4);
    c.expect(cover.block_widths == std::vector<int>{0, 2, 4, 4}, [&] {
        std::string w;
        for (int b : cover.block_widths) {
            w += std::to_string(b) + " ";
        }
        return "block widths " + w;
    });
    for (int k = 0; k < 3; ++k) {
        cantor::CompactBoxSet fill{2, {}};
        for (const cantor::CoverPiece& p : cover.levels[static_cast<std::size_t>(k)]) {
            for (const cantor::Box& b : p.piece.boxes) {
                fill.boxes.push_back(b);
            }
        }
        c.expect(cantor::region_equal(fill, cover.root), [&] {
            return "level " + std::to_string(k + 1) + " pieces do not fill the target";
        });
    }
    std::mt19937 rng(127u);
    std::uniform_int_distribution<std::size_t> pick(0, cover.leaf_count() - 1);
    for (int i = 0; i < 200; ++i) {
        std::size_t leaf = pick(rng);
        Rational x = cantor::leaf_preimage(cover, leaf);
        cantor::MapTrace trace = cantor::hausdorff_map_trace(cover, x);
        c.expect(trace.indices.back() == leaf, [&] {
            return "leaf " + std::to_string(leaf) + " reached index " +
                   std::to_string(trace.indices.back());
        });
        c.expect(cantor::region_contains_point(cover.root, trace.point), [&] {
            return "leaf " + std::to_string(leaf) + " maps outside the target";
        });
    }
    return c.done("cover structure and sampled leaves");
}

PropertyResult check_hausdorff_modulus() {
    Check c("hausdorff-modulus");
    cantor::NestedCover cover = cantor::build_cover(unit_square(), 4);
    std::mt19937 rng(131u);
    for (int trial = 0; trial < 100; ++trial) {
        int digits = std::uniform_int_distribution<int>(0, 2)(rng) * 4 + 2;
        std::vector<cantor::Digit> head = random_word(rng, digits);
        auto extended = [&](std::vector<cantor::Digit> h) {
            std::vector<cantor::Digit> t = random_word(rng, 10);
            h.insert(h.end(), t.begin(), t.end());
            return value(DigitExpansion{3, std::move(h), {}});
        };
        Rational x = extended(head);
        Rational y = extended(head);
        cantor::ModulusReport report = cantor::modulus_check(cover, x, y);
        c.expect(report.ok, [&] {
            return "x=" + x.str() + " y=" + y.str() + ": distance " +
                   report.distance.str() + " with " +
                   std::to_string(report.shared_blocks) + " shared blocks";
        });
        if (report.bound) {
            c.expect(report.distance < *report.bound, [&] {
                return "x=" + x.str() + " y=" + y.str() + ": bound " +
                       report.bound->str() + " not strict";
            });
        }
    }
    cantor::CompactBoxSet two{2,
                              {cantor::Box{{Rational(0), Rational(0)}, {Rational(0), Rational(0)}},
                               cantor::Box{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}}}};
    cantor::NestedCover split = cantor::build_cover(two, 3);
    cantor::PointD a = cantor::hausdorff_map(split, Rational(0));
    cantor::PointD b = cantor::hausdorff_map(split, Rational(2, 3));
    c.expect(a == cantor::PointD{{Rational(0), Rational(0)}} &&
                 b == cantor::PointD{{Rational(1), Rational(1)}},
             [&] { return "two-point target not separated by level 2"; });
    return c.done("block-sharing pairs and separation");
}

using CheckFn = PropertyResult (*)();

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> checks{
        {"expansion-roundtrip", check_expansion_roundtrip},
        {"duals", check_duals},
        {"nesting", check_nesting},
        {"partition", check_partition},
        {"measure", check_measure},
        {"svc-measure", check_svc_measure},
        {"dimension", check_dimension},
        {"membership", check_membership},
        {"monotonicity", check_monotonicity},
        {"gap-constancy", check_gap_constancy},
        {"convergence", check_convergence},
        {"quotient-growth", check_quotient_growth},
        {"surjectivity", check_surjectivity},
        {"curve-roundtrip", check_curve_roundtrip},
        {"curve-coverage", check_curve_coverage},
        {"curve-modulus", check_curve_modulus},
        {"hausdorff-cover", check_hausdorff_cover},
        {"hausdorff-modulus", check_hausdorff_modulus},
    };
    return checks;
}

}  // namespace

const std::vector<std::string>& verification_selections() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) {
            out.push_back(name);
        }
        out.push_back("all");
        return out;
    }();
    return names;
}

bool selection_known(const std::string& selection) {
    for (const std::string& name : verification_selections()) {
        if (name == selection) {
            return true;
        }
    }
    return false;
}

std::vector<PropertyResult> run_verification(const std::string& selection) {
    std::vector<PropertyResult> results;
    for (const auto& [name, fn] : registry()) {
        if (selection == "all" || selection == name) {
            results.push_back(fn());
        }
    }
    return results;
}

std::string format_report(const std::vector<PropertyResult>& results) {
    std::string out;
    std::size_t passed = 0;
    for (const PropertyResult& r : results) {
        out += (r.pass ? "[PASS] " : "[FAIL] ") + r.name + ": " + r.detail + "\n";
        for (const std::string& w : r.witnesses) {
            out += "       witness: " + w + "\n";
        }
        for (const std::string& n : r.notes) {
            out += "       note: " + n + "\n";
        }
        if (r.pass) {
            ++passed;
        }
    }
    out += std::to_string(passed) + "/" + std::to_string(results.size()) +
           " properties passed\n";
    return out;
}

bool all_passed(const std::vector<PropertyResult>& results) {
    for (const PropertyResult& r : results) {
        if (!r.pass) {
            return false;
        }
    }
    return true;
}

}  // namespace cli
