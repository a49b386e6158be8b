#pragma once

// Output formats shared by the CLI: CSV tables (12 significant digits),
// the JSON verification report and minimal SVG polylines.

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "umbraq/verify.hpp"

namespace umbraq {

/// %.12g
std::string format_number(double v);

/// Columns: header names; rows: equal-length numeric rows.
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

/// {suite_version, q, results: [...]} with keys in sorted order, so parsing
/// and re-serializing reproduces the same bytes.
std::string reports_to_json(const std::vector<double>& q_list, const std::vector<IdentityReport>& reports);

struct SvgSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

/// One polyline per series in a shared bounding box.
void write_svg(std::ostream& os, const std::vector<SvgSeries>& series, const std::string& title,
               bool equal_aspect = false);

}  // namespace umbraq
