#include "cantor/hausdorff.hpp"

#include <algorithm>
#include <string>

namespace cantor {

namespace {

void check_target(const CompactBoxSet& target) {
    if (target.dimension < 1) {
        throw std::domain_error("cover: dimension must be at least 1");
    }
    if (target.boxes.empty()) {
        throw std::domain_error("cover: target set is empty");
    }
    for (const Box& b : target.boxes) {
        if (b.lo.size() != static_cast<std::size_t>(target.dimension) ||
            b.hi.size() != static_cast<std::size_t>(target.dimension)) {
            throw std::domain_error("cover: box dimension mismatch");
        }
        for (std::size_t i = 0; i < b.lo.size(); ++i) {
            if (b.hi[i] < b.lo[i]) {
                throw std::domain_error("cover: box corner order violated");
            }
        }
    }
}

Box bounding_box(const CompactBoxSet& s) {
    Box bb = s.boxes.front();
    for (const Box& b : s.boxes) {
        for (std::size_t i = 0; i < bb.lo.size(); ++i) {
            bb.lo[i] = min(bb.lo[i], b.lo[i]);
            bb.hi[i] = max(bb.hi[i], b.hi[i]);
        }
    }
    return bb;
}

// Ball of the max metric: the box center +- radius, clipped against s.
CompactBoxSet intersect_ball(const CompactBoxSet& s, const PointD& center, const Rational& radius) {
    CompactBoxSet out{s.dimension, {}};
    for (const Box& b : s.boxes) {
        Box clipped = b;
        bool empty = false;
        for (std::size_t i = 0; i < clipped.lo.size(); ++i) {
            clipped.lo[i] = max(clipped.lo[i], center.coords[i] - radius);
            clipped.hi[i] = min(clipped.hi[i], center.coords[i] + radius);
            if (clipped.hi[i] < clipped.lo[i]) {
                empty = true;
                break;
            }
        }
        if (!empty) {
            out.boxes.push_back(std::move(clipped));
        }
    }
    return out;
}

// Lattice subdividing the bounding box finely enough that every point of the
// box is within the ball radius of a center: m = ceil(width / radius) cells
// per axis, centers at the cell midpoints, in lexicographic order.
std::vector<PointD> lattice_centers(const Box& bb, const Rational& radius) {
    std::size_t d = bb.lo.size();
    std::vector<unsigned long> cells(d, 1);
    std::vector<Rational> width(d);
    for (std::size_t i = 0; i < d; ++i) {
        width[i] = bb.hi[i] - bb.lo[i];
        if (!width[i].is_zero()) {
            Rational q = width[i] / radius;
            mpz_class m;
            mpz_cdiv_q(m.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
            cells[i] = std::max(1ul, m.get_ui());
        }
    }
    std::vector<PointD> centers;
    std::vector<unsigned long> idx(d, 0);
    while (true) {
        PointD c;
        c.coords.reserve(d);
        for (std::size_t i = 0; i < d; ++i) {
            c.coords.push_back(bb.lo[i] + Rational(2 * static_cast<long>(idx[i]) + 1, 1) *
                                              width[i] / Rational(2 * static_cast<long>(cells[i]), 1));
        }
        centers.push_back(std::move(c));
        std::size_t axis = d;
        while (axis > 0) {
            --axis;
            if (++idx[axis] < cells[axis]) {
                break;
            }
            idx[axis] = 0;
            if (axis == 0) {
                return centers;
            }
        }
    }
}

int ceil_log2(std::size_t count) {
    int n = 0;
    while ((static_cast<std::size_t>(1) << n) < count) {
        ++n;
    }
    return n;
}

std::vector<int> halved_bits(const DigitExpansion& e, std::size_t from, std::size_t count) {
    std::vector<int> bits;
    bits.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        bits.push_back(e.digit_at(from + i) / 2);
    }
    return bits;
}

DigitExpansion require_cantor(const Rational& x, const char* who) {
    std::optional<DigitExpansion> e = cantor_expansion(x);
    if (!e) {
        throw std::domain_error(std::string(who) + ": " + x.str() + " is not in the Cantor set");
    }
    return *e;
}

}  // namespace

NestedCover build_cover(const CompactBoxSet& target, int depth) {
    check_target(target);
    if (depth < 1) {
        throw std::domain_error("build_cover: depth must be at least 1");
    }
    NestedCover cover;
    cover.root = target;
    std::vector<const CompactBoxSet*> parents{&cover.root};
    for (int k = 1; k <= depth; ++k) {
        Rational radius = rational_pow(2, 1 - k);
        std::vector<std::vector<CoverPiece>> children_per_parent;
        children_per_parent.reserve(parents.size());
        std::size_t widest = 1;
        for (std::size_t pi = 0; pi < parents.size(); ++pi) {
            std::vector<CoverPiece> children;
            for (PointD& center : lattice_centers(bounding_box(*parents[pi]), radius)) {
                CompactBoxSet piece = intersect_ball(*parents[pi], center, radius);
                if (piece.boxes.empty()) {
                    continue;
                }
                bool duplicate = false;
                for (const CoverPiece& seen : children) {
                    if (seen.piece == piece) {
                        duplicate = true;
                        break;
                    }
                }
                if (!duplicate) {
                    children.push_back(CoverPiece{std::move(center), radius, pi, std::move(piece)});
                }
            }
            widest = std::max(widest, children.size());
            children_per_parent.push_back(std::move(children));
        }
        int width = ceil_log2(widest);
        std::size_t branch = static_cast<std::size_t>(1) << width;
        std::vector<CoverPiece> level;
        level.reserve(parents.size() * branch);
        for (std::vector<CoverPiece>& children : children_per_parent) {
            while (children.size() < branch) {
                children.push_back(children.back());
            }
            for (CoverPiece& c : children) {
                level.push_back(std::move(c));
            }
        }
        cover.block_widths.push_back(width);
        cover.levels.push_back(std::move(level));
        parents.clear();
        parents.reserve(cover.levels.back().size());
        for (const CoverPiece& p : cover.levels.back()) {
            parents.push_back(&p.piece);
        }
    }
    return cover;
}

MapTrace hausdorff_map_trace(const NestedCover& cover, const Rational& x) {
    DigitExpansion e = require_cantor(x, "hausdorff_map");
    MapTrace trace;
    trace.x = x;
    std::size_t pos = 1;
    std::size_t index = 0;
    for (int k = 0; k < cover.depth(); ++k) {
        std::size_t width = static_cast<std::size_t>(cover.block_widths[static_cast<std::size_t>(k)]);
        std::vector<int> bits = halved_bits(e, pos, width);
        pos += width;
        std::size_t child = 0;
        for (int b : bits) {
            child = child * 2 + static_cast<std::size_t>(b);
        }
        index = (index << width) + child;
        trace.blocks.push_back(std::move(bits));
        trace.indices.push_back(index);
    }
    trace.point = cover.levels.back()[index].center;
    return trace;
}

PointD hausdorff_map(const NestedCover& cover, const Rational& x) {
    return hausdorff_map_trace(cover, x).point;
}

ModulusReport modulus_check(const NestedCover& cover, const Rational& x, const Rational& y) {
    DigitExpansion ex = require_cantor(x, "modulus_check");
    DigitExpansion ey = require_cantor(y, "modulus_check");
    ModulusReport report;
    std::size_t pos = 1;
    for (int k = 0; k < cover.depth(); ++k) {
        std::size_t width = static_cast<std::size_t>(cover.block_widths[static_cast<std::size_t>(k)]);
        bool same = true;
        for (std::size_t i = 0; i < width; ++i) {
            if (ex.digit_at(pos + i) != ey.digit_at(pos + i)) {
                same = false;
                break;
            }
        }
        if (!same) {
            break;
        }
        pos += width;
        report.shared_blocks = static_cast<std::size_t>(k) + 1;
    }
    report.distance = chebyshev_distance(hausdorff_map(cover, x), hausdorff_map(cover, y));
    if (report.shared_blocks >= 1) {
        report.bound = rational_pow(2, 2 - static_cast<long>(report.shared_blocks));
        report.ok = report.distance < *report.bound;
    }
    return report;
}

std::vector<std::size_t> leaf_index_path(const NestedCover& cover, std::size_t leaf_index) {
    if (leaf_index >= cover.leaf_count()) {
        throw std::domain_error("leaf_index_path: leaf index out of range");
    }
    std::vector<std::size_t> path(static_cast<std::size_t>(cover.depth()));
    for (int k = cover.depth(); k-- > 0;) {
        std::size_t width = static_cast<std::size_t>(cover.block_widths[static_cast<std::size_t>(k)]);
        path[static_cast<std::size_t>(k)] = leaf_index & ((static_cast<std::size_t>(1) << width) - 1);
        leaf_index >>= width;
    }
    return path;
}

Rational leaf_preimage(const NestedCover& cover, std::size_t leaf_index) {
    std::vector<Digit> digits;
    std::vector<std::size_t> path = leaf_index_path(cover, leaf_index);
    for (int k = 0; k < cover.depth(); ++k) {
        std::size_t width = static_cast<std::size_t>(cover.block_widths[static_cast<std::size_t>(k)]);
        std::size_t child = path[static_cast<std::size_t>(k)];
        for (std::size_t i = width; i-- > 0;) {
            digits.push_back(static_cast<Digit>(((child >> i) & 1) * 2));
        }
    }
    return value(DigitExpansion{3, std::move(digits), {}});
}

bool region_contains_point(const CompactBoxSet& s, const PointD& p) {
    for (const Box& b : s.boxes) {
        bool inside = true;
        for (std::size_t i = 0; i < b.lo.size(); ++i) {
            if (p.coords[i] < b.lo[i] || b.hi[i] < p.coords[i]) {
                inside = false;
                break;
            }
        }
        if (inside) {
            return true;
        }
    }
    return false;
}

bool region_equal(const CompactBoxSet& a, const CompactBoxSet& b) {
    if (a.dimension != b.dimension) {
        throw std::domain_error("region_equal: dimension mismatch");
    }
    if (a.boxes.empty() || b.boxes.empty()) {
        return a.boxes.empty() && b.boxes.empty();
    }
    std::size_t d = static_cast<std::size_t>(a.dimension);
    // Probe points: every box face coordinate plus the midpoints between
    // consecutive ones. Membership in a union of closed boxes is constant on
    // each stratum of that grid, so sampling these decides equality exactly.
    std::vector<std::vector<Rational>> probes(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Rational> coords;
        for (const CompactBoxSet* s : {&a, &b}) {
            for (const Box& box : s->boxes) {
                coords.push_back(box.lo[i]);
                coords.push_back(box.hi[i]);
            }
        }
        std::sort(coords.begin(), coords.end());
        coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
        std::vector<Rational>& line = probes[i];
        for (std::size_t j = 0; j < coords.size(); ++j) {
            if (j > 0) {
                line.push_back((coords[j - 1] + coords[j]) / Rational(2));
            }
            line.push_back(coords[j]);
        }
    }
    std::vector<std::size_t> idx(d, 0);
    while (true) {
        PointD p;
        p.coords.reserve(d);
        for (std::size_t i = 0; i < d; ++i) {
            p.coords.push_back(probes[i][idx[i]]);
        }
        if (region_contains_point(a, p) != region_contains_point(b, p)) {
            return false;
        }
        std::size_t axis = d;
        while (axis > 0) {
            --axis;
            if (++idx[axis] < probes[axis].size()) {
                break;
            }
            idx[axis] = 0;
            if (axis == 0) {
                return true;
            }
        }
    }
}

}  // namespace cantor
