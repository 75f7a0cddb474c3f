#include <istream>
#include <sstream>
#include <string>

#include "cantor/hausdorff.hpp"

namespace cantor {

namespace {

std::string strip_comment(const std::string& line) {
    std::size_t hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

Rational parse_coordinate(const std::string& token, std::size_t line_no) {
    try {
        return Rational::from_string(token);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

}  // namespace

CompactBoxSet parse_box_set(std::istream& in) {
    CompactBoxSet out;
    bool have_dimension = false;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::istringstream line(strip_comment(raw));
        std::string keyword;
        if (!(line >> keyword)) {
            continue;
        }
        if (keyword == "dimension") {
            if (have_dimension) {
                throw ParseError(line_no, "dimension declared twice");
            }
            if (!(line >> out.dimension) || out.dimension < 1) {
                throw ParseError(line_no, "expected a positive dimension");
            }
            have_dimension = true;
        } else if (keyword == "box") {
            if (!have_dimension) {
                throw ParseError(line_no, "box before dimension");
            }
            std::size_t d = static_cast<std::size_t>(out.dimension);
            Box b;
            b.lo.reserve(d);
            b.hi.reserve(d);
            std::string token;
            for (std::size_t i = 0; i < 2 * d; ++i) {
                if (!(line >> token)) {
                    throw ParseError(line_no, "box needs " + std::to_string(2 * d) +
                                                  " coordinates for dimension " +
                                                  std::to_string(out.dimension));
                }
                (i < d ? b.lo : b.hi).push_back(parse_coordinate(token, line_no));
            }
            if (line >> token) {
                throw ParseError(line_no, "trailing text after box coordinates");
            }
            for (std::size_t i = 0; i < d; ++i) {
                if (b.hi[i] < b.lo[i]) {
                    throw ParseError(line_no, "box max corner below min corner on axis " +
                                                  std::to_string(i));
                }
            }
            out.boxes.push_back(std::move(b));
        } else {
            throw ParseError(line_no, "unknown keyword '" + keyword + "'");
        }
    }
    if (!have_dimension) {
        throw ParseError(line_no, "missing dimension declaration");
    }
    if (out.boxes.empty()) {
        throw ParseError(line_no, "no boxes declared");
    }
    return out;
}

std::string box_set_to_text(const CompactBoxSet& s) {
    std::string text = "dimension " + std::to_string(s.dimension) + "\n";
    for (const Box& b : s.boxes) {
        text += "box";
        for (const Rational& c : b.lo) {
            text += " " + c.str();
        }
        for (const Rational& c : b.hi) {
            text += " " + c.str();
        }
        text += "\n";
    }
    return text;
}

}  // namespace cantor
