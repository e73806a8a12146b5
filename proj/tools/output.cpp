#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "twspeed/twspeed.h"

namespace twcli {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += c;
        }
    }
    return out;
}

}  // namespace

void write_csv(std::ostream& os, const Table& t) {
    bool with_status = !t.status.empty();
    for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << csv_field(t.columns[j]);
    if (with_status) os << ",status";
    os << '\n';
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        for (std::size_t j = 0; j < t.rows[i].size(); ++j) os << (j ? "," : "") << format_double(t.rows[i][j]);
        if (with_status) os << ',' << csv_field(t.status[i]);
        os << '\n';
    }
}

void write_json(std::ostream& os, const Table& t, const nlohmann::ordered_json& meta) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = TWS_SCHEMA_VERSION;
    for (const auto& [k, v] : meta.items()) doc[k] = v;
    doc["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        nlohmann::ordered_json row;
        for (std::size_t j = 0; j < t.columns.size(); ++j) {
            double v = t.rows[i][j];
            if (std::isfinite(v)) row[t.columns[j]] = v;
            else row[t.columns[j]] = nullptr;
        }
        if (!t.status.empty()) row["status"] = t.status[i];
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << '\n';
}

void write_svg(std::ostream& os, const Table& t, const std::vector<std::size_t>& y_columns,
               const std::string& title) {
    constexpr double W = 800, H = 600, left = 70, right = 160, top = 40, bottom = 60;
    static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};

    double inf = std::numeric_limits<double>::infinity();
    double x0 = inf, x1 = -inf, y0 = inf, y1 = -inf;
    for (const auto& r : t.rows) {
        if (!std::isfinite(r[0])) continue;
        for (auto j : y_columns) {
            if (!std::isfinite(r[j])) continue;
            x0 = std::min(x0, r[0]);
            x1 = std::max(x1, r[0]);
            y0 = std::min(y0, r[j]);
            y1 = std::max(y1, r[j]);
        }
    }
    if (!(x0 <= x1)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (x1 == x0) x0 -= 0.5, x1 += 0.5;
    if (y1 == y0) y0 -= 0.5, y1 += 0.5;
    auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * (W - left - right); };
    auto py = [&](double y) { return H - bottom - (y - y0) / (y1 - y0) * (H - top - bottom); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" height=\"600\">\n";
    os << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    os << "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << escape_xml(title) << "</text>\n";
    os << "<line x1=\"" << left << "\" y1=\"" << H - bottom << "\" x2=\"" << W - right << "\" y2=\"" << H - bottom
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << H - bottom
       << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        double xv = x0 + (x1 - x0) * i / 5, yv = y0 + (y1 - y0) * i / 5;
        os << "<text x=\"" << fixed(px(xv)) << "\" y=\"" << H - bottom + 18
           << "\" text-anchor=\"middle\" font-size=\"11\">" << tick(xv) << "</text>\n";
        os << "<text x=\"" << left - 6 << "\" y=\"" << fixed(py(yv) + 4)
           << "\" text-anchor=\"end\" font-size=\"11\">" << tick(yv) << "</text>\n";
    }
    os << "<text x=\"" << (left + W - right) / 2 << "\" y=\"" << H - 15
       << "\" text-anchor=\"middle\" font-size=\"13\">" << escape_xml(t.columns[0]) << "</text>\n";

    for (std::size_t k = 0; k < y_columns.size(); ++k) {
        auto j = y_columns[k];
        const char* colour = palette[k % 6];
        os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& r : t.rows) {
            if (!std::isfinite(r[0]) || !std::isfinite(r[j])) continue;
            os << (first ? "" : " ") << fixed(px(r[0])) << ',' << fixed(py(r[j]));
            first = false;
        }
        os << "\"/>\n";
        double ly = top + 20 + 20 * k;
        os << "<line x1=\"" << W - right + 15 << "\" y1=\"" << ly << "\" x2=\"" << W - right + 40 << "\" y2=\"" << ly
           << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << W - right + 46 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">"
           << escape_xml(t.columns[j]) << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace twcli
