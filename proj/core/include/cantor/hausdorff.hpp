#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cantor/cantor_set.hpp"
#include "cantor/point.hpp"

namespace cantor {

/// Closed axis-aligned box, lo[i] <= hi[i] per axis. A point is a box with
/// lo == hi.
struct Box {
    std::vector<Rational> lo;
    std::vector<Rational> hi;

    friend bool operator==(const Box&, const Box&) = default;
};

/// Compact target set: a finite union of closed boxes in a fixed dimension.
struct CompactBoxSet {
    int dimension = 0;
    std::vector<Box> boxes;

    friend bool operator==(const CompactBoxSet&, const CompactBoxSet&) = default;
};

struct CoverPiece {
    PointD center;
    Rational radius;
    std::size_t parent = 0;  // index into the previous level
    CompactBoxSet piece;

    friend bool operator==(const CoverPiece&, const CoverPiece&) = default;
};

/// Nested system of coverings of a compact box set. Level k (1-based) covers
/// each level k-1 piece with max-metric balls of radius 2^(1-k) centered on a
/// lattice over the piece's bounding box; each node's children are padded by
/// repeating the last piece so the branching is exactly 2^block_widths[k-1]
/// everywhere on the level. Pieces of level k sit at global indices
/// parent_index * 2^block_widths[k-1] + child.
struct NestedCover {
    CompactBoxSet root;
    std::vector<int> block_widths;
    std::vector<std::vector<CoverPiece>> levels;

    int depth() const { return static_cast<int>(levels.size()); }
    std::size_t leaf_count() const { return levels.empty() ? 0 : levels.back().size(); }
};

NestedCover build_cover(const CompactBoxSet& target, int depth);

/// Continuous surjection from the Cantor set onto the target, resolved to the
/// cover's depth: the halved ternary digits of x are consumed in blocks of
/// block_widths[k] bits, each block a child index. Returns the center of the
/// deepest selected piece, which lies within 2^(1-depth) of every point of
/// that piece.
PointD hausdorff_map(const NestedCover& cover, const Rational& x);

struct MapTrace {
    Rational x;
    std::vector<std::vector<int>> blocks;     // consumed bits, one vector per level
    std::vector<std::size_t> indices;         // global piece index per level
    PointD point;
};

MapTrace hausdorff_map_trace(const NestedCover& cover, const Rational& x);

/// Continuity certificate: when x and y agree on their first j complete digit
/// blocks, the images lie in one level-j piece, so their distance is below
/// 2^(2-j). No bound is claimed for j = 0.
struct ModulusReport {
    std::size_t shared_blocks = 0;
    Rational distance;
    std::optional<Rational> bound;
    bool ok = true;
};

ModulusReport modulus_check(const NestedCover& cover, const Rational& x, const Rational& y);

/// Child indices along the path from the root to a leaf slot.
std::vector<std::size_t> leaf_index_path(const NestedCover& cover, std::size_t leaf_index);

/// A Cantor-set parameter whose map trace descends exactly to the given leaf
/// slot: the path indices written in binary, doubled into ternary digits.
Rational leaf_preimage(const NestedCover& cover, std::size_t leaf_index);

bool region_contains_point(const CompactBoxSet& s, const PointD& p);

/// Exact equality of the two unions of closed boxes as point sets, decided on
/// the coordinate grid the boxes generate.
bool region_equal(const CompactBoxSet& a, const CompactBoxSet& b);

/// Raised by parse_box_set on malformed input; carries the 1-based line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Reads the text form:
///   dimension 2
///   box 0/1 0/1 1/1 1/1
/// where each box lists the min corner's coordinates then the max corner's,
/// all as "p/q". '#' starts a comment.
CompactBoxSet parse_box_set(std::istream& in);

std::string box_set_to_text(const CompactBoxSet& s);

}  // namespace cantor
