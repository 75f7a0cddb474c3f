#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cantor/cantor_function.hpp"
#include "cantor/cantor_set.hpp"
#include "cantor/hausdorff.hpp"
#include "cantor/space_filling.hpp"
#include "emit.hpp"
#include "verify.hpp"

namespace {

using cantor::Rational;
using cli::Meta;
using cli::Table;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string rounded(const Rational& v) { return cli::fmt12(v.to_double()); }

int emit_table(const std::string& subcommand, const Meta& meta, const Table& table,
               const std::string& format, const std::string& out,
               const std::string& svg = std::string()) {
    std::string content;
    if (format == "csv") {
        content = cli::to_csv(table);
    } else if (format == "json") {
        content = cli::to_json(subcommand, meta, table);
    } else if (format == "svg") {
        if (svg.empty()) {
            std::cerr << subcommand << ": svg output is not available here; "
                      << "use --format csv or json\n";
            return kExitUsage;
        }
        content = svg;
    }
    return cli::write_artifact(out, content) ? 0 : kExitFailure;
}

std::vector<std::vector<std::pair<double, double>>> interval_stack(
    int m, int n, int depth_limit = cantor::kDefaultDepthLimit) {
    std::vector<std::vector<std::pair<double, double>>> levels;
    for (int k = 0; k <= n; ++k) {
        cantor::IntervalSet set = m == 3 ? cantor::cantor_iterate(k, depth_limit)
                                         : cantor::svc_iterate(m, k, depth_limit);
        std::vector<std::pair<double, double>> row;
        row.reserve(set.intervals.size());
        for (const cantor::Interval& iv : set.intervals) {
            row.emplace_back(iv.left.to_double(), iv.right.to_double());
        }
        levels.push_back(std::move(row));
    }
    return levels;
}

int run_iterate(int m, int depth, const std::string& format, const std::string& out) {
    cantor::IntervalSet set =
        m == 3 ? cantor::cantor_iterate(depth) : cantor::svc_iterate(m, depth);
    Table table;
    table.columns = {"index", "left", "right", "left_rounded", "right_rounded"};
    for (std::size_t i = 0; i < set.intervals.size(); ++i) {
        const cantor::Interval& iv = set.intervals[i];
        table.rows.push_back({std::to_string(i), iv.left.str(), iv.right.str(),
                              rounded(iv.left), rounded(iv.right)});
    }
    Meta meta{{"m", std::to_string(m)},
              {"depth", std::to_string(depth)},
              {"intervals", std::to_string(set.intervals.size())},
              {"total_length", set.total_length().str()}};
    std::string svg;
    if (format == "svg") {
        svg = cli::svg_bars(interval_stack(m, depth));
    }
    return emit_table(m == 3 ? "iterate" : "svc", meta, table, format, out, svg);
}

int run_member(const std::string& x_text, const std::string& format,
               const std::string& out) {
    Rational x = Rational::from_string(x_text);
    cantor::Membership m = cantor::membership(x);
    Table table;
    table.columns = {"x",        "in_set",   "expansion",       "gap_level",
                     "gap_left", "gap_right", "gap_left_digits", "gap_right_digits"};
    if (m.in_set) {
        table.rows.push_back({x.str(), "true", cantor::cantor_expansion(x)->str(), "", "",
                              "", "", ""});
    } else {
        table.rows.push_back({x.str(), "false", "", std::to_string(m.removed->level),
                              m.removed->left.str(), m.removed->right.str(),
                              m.removed->left_expansion.str(),
                              m.removed->right_expansion.str()});
    }
    return emit_table("member", Meta{{"x", x.str()}}, table, format, out);
}

int run_staircase(long grid, const std::string& format, const std::string& out) {
    if (grid < 1) {
        throw std::domain_error("staircase: grid must be positive");
    }
    Table table;
    table.columns = {"index", "x", "F", "x_rounded", "F_rounded"};
    std::vector<std::pair<double, double>> line;
    for (long k = 0; k <= grid; ++k) {
        Rational x(k, grid);
        Rational y = cantor::cantor_function_extended(x).value;
        table.rows.push_back(
            {std::to_string(k), x.str(), y.str(), rounded(x), rounded(y)});
        line.emplace_back(x.to_double(), y.to_double());
    }
    Meta meta{{"grid", std::to_string(grid)}, {"samples", std::to_string(grid + 1)}};
    std::string svg = format == "svg" ? cli::svg_polyline(line) : std::string();
    return emit_table("staircase", meta, table, format, out, svg);
}

int run_approx(int depth, const std::string& format, const std::string& out) {
    cantor::PolygonalApproximant approx = cantor::polygonal_approximant(depth);
    Table table;
    table.columns = {"index", "x", "y", "x_rounded", "y_rounded"};
    std::vector<std::pair<double, double>> line;
    const auto& bp = approx.breakpoints();
    for (std::size_t i = 0; i < bp.size(); ++i) {
        table.rows.push_back({std::to_string(i), bp[i].first.str(), bp[i].second.str(),
                              rounded(bp[i].first), rounded(bp[i].second)});
        line.emplace_back(bp[i].first.to_double(), bp[i].second.to_double());
    }
    Meta meta{{"depth", std::to_string(depth)},
              {"breakpoints", std::to_string(bp.size())}};
    std::string svg = format == "svg" ? cli::svg_polyline(line) : std::string();
    return emit_table("approx", meta, table, format, out, svg);
}

int run_quotient(const std::string& x_text, int count, const std::string& format,
                 const std::string& out) {
    Rational x = Rational::from_string(x_text);
    Table table;
    table.columns = {"n",     "position", "x_flipped", "quotient",
                     "ratio", "quotient_rounded"};
    Rational prev;
    for (int n = 0; n <= count; ++n) {
        cantor::DifferenceQuotient q = cantor::difference_quotient(x, n);
        std::string ratio = n == 0 ? "" : (q.quotient / prev).str();
        table.rows.push_back({std::to_string(n), std::to_string(2 * n + 1),
                              q.x_flipped.str(), q.quotient.str(), ratio,
                              rounded(q.quotient)});
        prev = q.quotient;
    }
    Meta meta{{"x", x.str()},
              {"count", std::to_string(count + 1)},
              {"note",
               "quotients grow as (3/4)*(9/4)^n; the square-curve coordinate "
               "quotients grow as (3/4)*(9/2)^n and (9/4)*(9/2)^n"}};
    return emit_table("quotient", meta, table, format, out);
}

int run_curve(int d, int depth, long stride, const std::string& format,
              const std::string& out) {
    std::vector<cantor::CurveSample> samples = cantor::sample_curve(d, depth, stride);
    Table table;
    table.columns = {"index", "parameter"};
    const char* names[] = {"x", "y", "z"};
    for (int c = 0; c < d; ++c) {
        table.columns.push_back(names[c]);
    }
    table.columns.push_back("on_cantor");
    table.columns.push_back("parameter_rounded");
    for (int c = 0; c < d; ++c) {
        table.columns.push_back(std::string(names[c]) + "_rounded");
    }
    std::vector<std::pair<double, double>> line;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const cantor::CurveSample& s = samples[i];
        std::vector<std::string> row{std::to_string(i), s.parameter.str()};
        for (int c = 0; c < d; ++c) {
            row.push_back(s.point.coords[static_cast<std::size_t>(c)].str());
        }
        row.push_back(s.on_cantor ? "true" : "false");
        row.push_back(rounded(s.parameter));
        for (int c = 0; c < d; ++c) {
            row.push_back(rounded(s.point.coords[static_cast<std::size_t>(c)]));
        }
        table.rows.push_back(std::move(row));
        if (d == 2) {
            line.emplace_back(s.point.coords[0].to_double(), s.point.coords[1].to_double());
        }
    }
    Meta meta{{"dimension", std::to_string(d)},
              {"depth", std::to_string(depth)},
              {"stride", std::to_string(stride)},
              {"samples", std::to_string(samples.size())}};
    std::string svg;
    if (format == "svg" && d == 2) {
        svg = cli::svg_polyline(line);
    }
    return emit_table(d == 2 ? "curve2" : "curve3", meta, table, format, out, svg);
}

int run_preimage(const std::vector<std::string>& coord_text, const std::string& format,
                 const std::string& out) {
    cantor::PointD p;
    for (const std::string& t : coord_text) {
        p.coords.push_back(Rational::from_string(t));
    }
    Rational x = cantor::lebesgue_curve_preimage(p);
    int d = static_cast<int>(p.coords.size());
    bool verified = cantor::lebesgue_curve(x, d) == p;
    Table table;
    table.columns = {"parameter", "expansion", "round_trip_exact", "parameter_rounded"};
    table.rows.push_back({x.str(), cantor::cantor_expansion(x)->str(),
                          verified ? "true" : "false", rounded(x)});
    std::string coords;
    for (const Rational& c : p.coords) {
        coords += (coords.empty() ? "" : " ") + c.str();
    }
    Meta meta{{"point", coords}, {"dimension", std::to_string(d)}};
    return emit_table("preimage", meta, table, format, out);
}

int run_hausdorff(const std::string& input, int depth,
                  const std::vector<std::string>& x_text, const std::string& format,
                  const std::string& out) {
    std::ifstream in(input);
    if (!in) {
        std::cerr << "cannot open input file: " << input << "\n";
        return kExitFailure;
    }
    cantor::CompactBoxSet target;
    try {
        target = cantor::parse_box_set(in);
    } catch (const cantor::ParseError& e) {
        std::cerr << input << ": " << e.what() << "\n";
        return kExitFailure;
    }
    cantor::NestedCover cover = cantor::build_cover(target, depth);
    std::vector<Rational> xs;
    for (const std::string& t : x_text) {
        xs.push_back(Rational::from_string(t));
    }
    if (xs.empty()) {
        xs.push_back(Rational(0));
    }
    Table table;
    table.columns = {"x", "path", "point", "point_rounded"};
    for (const Rational& x : xs) {
        cantor::MapTrace trace = cantor::hausdorff_map_trace(cover, x);
        std::string path;
        for (std::size_t k = 0; k < trace.indices.size(); ++k) {
            path += (k == 0 ? "" : ":") + std::to_string(trace.indices[k]);
        }
        std::string point;
        std::string point_rounded;
        for (const Rational& c : trace.point.coords) {
            point += (point.empty() ? "" : " ") + c.str();
            point_rounded += (point_rounded.empty() ? "" : " ") + rounded(c);
        }
        table.rows.push_back({x.str(), path, point, point_rounded});
    }
    std::string widths;
    for (int w : cover.block_widths) {
        widths += (widths.empty() ? "" : " ") + std::to_string(w);
    }
    Meta meta{{"input", input},
              {"dimension", std::to_string(target.dimension)},
              {"boxes", std::to_string(target.boxes.size())},
              {"depth", std::to_string(depth)},
              {"block_widths", widths},
              {"leaf_count", std::to_string(cover.leaf_count())}};
    return emit_table("hausdorff", meta, table, format, out);
}

int run_verify(const std::string& selection, const std::string& out) {
    std::vector<cli::PropertyResult> results = cli::run_verification(selection);
    std::string report = cli::format_report(results);
    if (!cli::write_artifact(out, report)) {
        return kExitFailure;
    }
    return cli::all_passed(results) ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact constructions on the Cantor set: iterates, the devil's "
                 "staircase, space-filling curves, and nested box coverings"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string out;
    std::string x_text;
    std::string input;
    std::string selection = "all";
    std::vector<std::string> coords;
    std::vector<std::string> x_list;
    int depth = 0;
    int m = 4;
    long grid = 81;
    long stride = 1;

    auto add_format = [&](CLI::App* cmd, bool with_svg) {
        cmd->add_option("--format", format,
                        with_svg ? "output format: csv, svg or json"
                                 : "output format: csv or json")
            ->check(CLI::IsMember(with_svg
                                      ? std::vector<std::string>{"csv", "svg", "json"}
                                      : std::vector<std::string>{"csv", "json"}));
        cmd->add_option("--out", out, "output path (default: stdout)");
    };

    CLI::App* iterate = app.add_subcommand(
        "iterate", "intervals surviving n middle-thirds deletions");
    iterate->add_option("--depth", depth, "construction step")->required();
    add_format(iterate, true);

    CLI::App* svc = app.add_subcommand(
        "svc", "variable-removal construction: delete centered m^-k pieces");
    svc->add_option("--m", m, "removal base (>= 3)")->required();
    svc->add_option("--depth", depth, "construction step")->required();
    add_format(svc, true);

    CLI::App* member =
        app.add_subcommand("member", "membership of a rational in the limit set");
    member->add_option("--x", x_text, "point as p/q")->required();
    add_format(member, false);

    CLI::App* staircase =
        app.add_subcommand("staircase", "extended staircase sampled on k/grid");
    staircase->add_option("--grid", grid, "number of grid cells");
    add_format(staircase, true);

    CLI::App* approx =
        app.add_subcommand("approx", "piecewise-linear staircase approximant");
    approx->add_option("--depth", depth, "approximant level")->required();
    add_format(approx, true);

    CLI::App* quotient = app.add_subcommand(
        "quotient", "secant slopes under ternary digit flips at positions 2n+1");
    quotient->add_option("--x", x_text, "base point as p/q, in the limit set");
    quotient->add_option("--depth", depth, "largest n")->required();
    add_format(quotient, false);

    CLI::App* curve2 =
        app.add_subcommand("curve2", "square-filling curve sampled at j/3^depth");
    curve2->add_option("--depth", depth, "sampling depth")->required();
    curve2->add_option("--stride", stride, "keep every stride-th sample");
    add_format(curve2, true);

    CLI::App* curve3 =
        app.add_subcommand("curve3", "cube-filling curve sampled at j/3^depth");
    curve3->add_option("--depth", depth, "sampling depth")->required();
    curve3->add_option("--stride", stride, "keep every stride-th sample");
    add_format(curve3, false);

    CLI::App* preimage =
        app.add_subcommand("preimage", "parameter mapping onto a square or cube point");
    preimage->add_option("--coord", coords, "coordinate as p/q (repeat 2 or 3 times)")
        ->required()
        ->expected(2, 3);
    add_format(preimage, false);

    CLI::App* hausdorff = app.add_subcommand(
        "hausdorff", "nested ball covering of a box-union set and the induced map");
    hausdorff->add_option("--input", input, "box set description file")->required();
    hausdorff->add_option("--depth", depth, "covering depth")->required();
    hausdorff->add_option("--x", x_list, "parameters to trace (repeatable)");
    add_format(hausdorff, false);

    CLI::App* verify =
        app.add_subcommand("verify", "run property suites and report pass/fail");
    verify->add_option("--select", selection, "suite name or 'all'")
        ->check(CLI::IsMember(cli::verification_selections()));
    verify->add_option("--out", out, "report path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*iterate) {
            return run_iterate(3, depth, format, out);
        }
        if (*svc) {
            return run_iterate(m, depth, format, out);
        }
        if (*member) {
            return run_member(x_text, format, out);
        }
        if (*staircase) {
            return run_staircase(grid, format, out);
        }
        if (*approx) {
            return run_approx(depth, format, out);
        }
        if (*quotient) {
            return run_quotient(x_text.empty() ? "0" : x_text, depth, format, out);
        }
        if (*curve2) {
            return run_curve(2, depth, stride, format, out);
        }
        if (*curve3) {
            return run_curve(3, depth, stride, format, out);
        }
        if (*preimage) {
            return run_preimage(coords, format, out);
        }
        if (*hausdorff) {
            return run_hausdorff(input, depth, x_list, format, out);
        }
        if (*verify) {
            return run_verify(selection, out);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
