#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace twcli {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> status;  // one per row, or empty
};

std::string format_double(double v);

void write_csv(std::ostream& os, const Table& t);
// `meta` lands at the top level next to "schema_version" and "rows".
void write_json(std::ostream& os, const Table& t, const nlohmann::ordered_json& meta);

// First column on the x axis, every other listed column as a polyline.
void write_svg(std::ostream& os, const Table& t, const std::vector<std::size_t>& y_columns,
               const std::string& title);

}  // namespace twcli
