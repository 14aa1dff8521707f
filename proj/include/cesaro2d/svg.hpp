#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace cesaro2d {

/// One polyline of a plot.
struct SvgSeries {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

/// Minimal line-plot emitter (value/bound curves vs n or N, optionally on log
/// axes). No dependencies; enough for eyeballing convergence and growth.
inline void write_line_plot(std::ostream& os, const std::string& title,
                            const std::vector<SvgSeries>& series, bool log_x, bool log_y) {
    const double W = 800, H = 500, ml = 70, mr = 160, mt = 40, mb = 50;
    auto tx = [&](double v) { return log_x ? std::log10(v) : v; };
    auto ty = [&](double v) { return log_y ? std::log10(v) : v; };
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0;
    double y0 = x0, y1 = -x0;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            if (log_x && !(x > 0)) continue;
            if (log_y && !(y > 0)) continue;
            x0 = std::min(x0, tx(x));
            x1 = std::max(x1, tx(x));
            y0 = std::min(y0, ty(y));
            y1 = std::max(y1, ty(y));
        }
    if (!(x0 < x1)) {
        x0 -= 0.5;
        x1 += 0.5;
    }
    if (!(y0 < y1)) {
        y0 -= 0.5;
        y1 += 0.5;
    }
    auto px = [&](double v) { return ml + (tx(v) - x0) / (x1 - x0) * (W - ml - mr); };
    auto py = [&](double v) { return H - mb - (ty(v) - y0) / (y0 == y1 ? 1 : (y1 - y0)) * (H - mt - mb); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << W << ' ' << H
       << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"15\">" << title
       << "</text>\n";
    os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << W - ml - mr << "\" height=\""
       << H - mt - mb << "\" fill=\"none\" stroke=\"black\"/>\n";

    auto ticks = [&](double a, double b, bool log_axis) {
        std::vector<double> t;
        if (log_axis) {
            for (int d = static_cast<int>(std::floor(a)); d <= static_cast<int>(std::ceil(b)); ++d)
                if (d >= a - 1e-9 && d <= b + 1e-9) t.push_back(d);
        } else {
            for (int k = 0; k <= 5; ++k) t.push_back(a + (b - a) * k / 5.0);
        }
        return t;
    };
    for (double t : ticks(x0, x1, log_x)) {
        const double X = ml + (t - x0) / (x1 - x0) * (W - ml - mr);
        const double v = log_x ? std::pow(10.0, t) : t;
        os << "<line x1=\"" << X << "\" y1=\"" << H - mb << "\" x2=\"" << X << "\" y2=\""
           << H - mb + 5 << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << X << "\" y=\"" << H - mb + 18 << "\" text-anchor=\"middle\">" << v
           << "</text>\n";
    }
    for (double t : ticks(y0, y1, log_y)) {
        const double Y = H - mb - (t - y0) / (y1 - y0) * (H - mt - mb);
        const double v = log_y ? std::pow(10.0, t) : t;
        os << "<line x1=\"" << ml - 5 << "\" y1=\"" << Y << "\" x2=\"" << ml << "\" y2=\"" << Y
           << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << ml - 8 << "\" y=\"" << Y + 4 << "\" text-anchor=\"end\">" << v
           << "</text>\n";
    }

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* col = colors[si % 5];
        os << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : series[si].points) {
            if ((log_x && !(x > 0)) || (log_y && !(y > 0))) continue;
            os << px(x) << ',' << py(y) << ' ';
        }
        os << "\"/>\n";
        os << "<text x=\"" << W - mr + 10 << "\" y=\"" << mt + 16 + 18 * si << "\" fill=\"" << col
           << "\">" << series[si].name << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace cesaro2d
