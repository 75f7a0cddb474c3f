#include "emit.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "json.hpp"

namespace cli {

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c > 0) {
            out += ',';
        }
        out += table.columns[c];
    }
    out += '\n';
    for (const std::vector<std::string>& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) {
                out += ',';
            }
            out += row[c];
        }
        out += '\n';
    }
    return out;
}

namespace {

// Booleans and small integers read better unquoted; everything else (exact
// "p/q" fields, rounded decimals) stays a string.
nlohmann::ordered_json json_field(const std::string& s) {
    if (s == "true") {
        return true;
    }
    if (s == "false") {
        return false;
    }
    if (!s.empty() && s.find_first_not_of("-0123456789") == std::string::npos &&
        s.size() <= 18 && s != "-") {
        return std::stoll(s);
    }
    return s;
}

}  // namespace

std::string to_json(const std::string& subcommand, const Meta& meta, const Table& table) {
    nlohmann::ordered_json doc;
    doc["subcommand"] = subcommand;
    for (const auto& [key, value] : meta) {
        doc[key] = json_field(value);
    }
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const std::vector<std::string>& row : table.rows) {
        nlohmann::ordered_json rec;
        for (std::size_t c = 0; c < table.columns.size() && c < row.size(); ++c) {
            rec[table.columns[c]] = json_field(row[c]);
        }
        records.push_back(std::move(rec));
    }
    doc["records"] = std::move(records);
    return doc.dump(2) + "\n";
}

namespace {

const char* kSvgOpen =
    "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\" "
    "preserveAspectRatio=\"xMidYMid meet\">\n";

}  // namespace

std::string svg_polyline(const std::vector<std::pair<double, double>>& points) {
    std::string out = kSvgOpen;
    out += "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"white\"/>\n";
    out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"0.003\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        // Flip y so the mathematical origin sits at the lower left.
        out += fmt12(points[i].first) + "," + fmt12(1.0 - points[i].second);
    }
    out += "\"/>\n</svg>\n";
    return out;
}

std::string svg_bars(const std::vector<std::vector<std::pair<double, double>>>& levels) {
    std::string out = kSvgOpen;
    out += "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"white\"/>\n";
    double band = 1.0 / static_cast<double>(levels.empty() ? 1 : levels.size());
    for (std::size_t k = 0; k < levels.size(); ++k) {
        double y = band * static_cast<double>(k) + band * 0.15;
        double h = band * 0.7;
        for (const std::pair<double, double>& iv : levels[k]) {
            out += "<rect x=\"" + fmt12(iv.first) + "\" y=\"" + fmt12(y) + "\" width=\"" +
                   fmt12(iv.second - iv.first) + "\" height=\"" + fmt12(h) +
                   "\" fill=\"black\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

bool write_artifact(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return static_cast<bool>(std::cout.flush());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << path << "\n";
        return false;
    }
    out << content;
    out.flush();
    if (!out) {
        std::cerr << "write failed: " << path << "\n";
        return false;
    }
    return true;
}

}  // namespace cli
