#include "umbraq/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "json.hpp"

namespace umbraq {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& row : rows) {
        if (row.size() != header.size()) throw DomainError("CSV row width does not match header");
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
        os << '\n';
    }
}

std::string reports_to_json(const std::vector<double>& q_list, const std::vector<IdentityReport>& reports) {
    using nlohmann::json;
    json results = json::array();
    for (const auto& r : reports) {
        results.push_back({
            {"identity_id", r.identity_id},
            {"q", r.q},
            {"lhs_numeric", r.lhs_numeric},
            {"rhs_closed", r.rhs_closed},
            {"abs_residual", r.abs_residual},
            {"rel_residual", r.rel_residual},
            {"tolerance", r.tolerance},
            {"passed", r.passed},
            {"runtime_ms", r.runtime_ms},
            {"note", r.note},
        });
    }
    json doc = {{"suite_version", kSuiteVersion}, {"q", q_list}, {"results", results}};
    return doc.dump(2) + "\n";
}

void write_svg(std::ostream& os, const std::vector<SvgSeries>& series, const std::string& title,
               bool equal_aspect) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
    for (const auto& s : series)
        for (auto [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (!(xmax > xmin)) xmax = xmin + 1.0;
    if (!(ymax > ymin)) ymax = ymin + 1.0;

    const double W = 640, H = equal_aspect ? 640 : 400, pad = 40;
    double sx = (W - 2 * pad) / (xmax - xmin), sy = (H - 2 * pad) / (ymax - ymin);
    if (equal_aspect) sx = sy = std::min(sx, sy);
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n"
       << "<title>" << title << "</title>\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes through the origin when it is in view
    const double ox = pad + (0.0 - xmin) * sx, oy = H - pad - (0.0 - ymin) * sy;
    if (ymin <= 0.0 && ymax >= 0.0)
        os << "<line x1=\"" << pad << "\" y1=\"" << oy << "\" x2=\"" << W - pad << "\" y2=\"" << oy
           << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
    if (xmin <= 0.0 && xmax >= 0.0)
        os << "<line x1=\"" << ox << "\" y1=\"" << pad << "\" x2=\"" << ox << "\" y2=\"" << H - pad
           << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const char* c = colors[k % 6];
        os << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1.2\" points=\"";
        bool first = true;
        for (auto [x, y] : series[k].points) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            os << (first ? "" : " ") << format_number(pad + (x - xmin) * sx) << ','
               << format_number(H - pad - (y - ymin) * sy);
            first = false;
        }
        os << "\"/>\n";
        os << "<text x=\"" << W - pad - 120 << "\" y=\"" << pad + 14 * (k + 1) << "\" font-size=\"11\" fill=\"" << c
           << "\">" << series[k].label << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace umbraq
