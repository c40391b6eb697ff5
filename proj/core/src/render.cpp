#include "bridgeland/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace bridgeland {

namespace {

constexpr double kLabelMargin = 20.0;

struct Frame {
    double s_min, s_max, t_max, ppu;

    [[nodiscard]] double x(double s) const { return (s - s_min) * ppu; }
    [[nodiscard]] double y(double t) const { return (t_max - t) * ppu; }
    [[nodiscard]] double width() const { return (s_max - s_min) * ppu; }
    [[nodiscard]] double height() const { return t_max * ppu; }
};

struct Span {
    double lo, hi;
};

// Parts of the upper semicircle (s - c)^2 + t^2 = R^2 whose s lies in the
// window and whose t stays below t_max.
std::vector<Span> visible_spans(double c, double radius, const Frame& f) {
    std::vector<Span> spans;
    const double lo = std::max(c - radius, f.s_min);
    const double hi = std::min(c + radius, f.s_max);
    if (!(lo < hi)) return spans;
    if (radius <= f.t_max) {
        spans.push_back({lo, hi});
        return spans;
    }
    const double hole = std::sqrt(radius * radius - f.t_max * f.t_max);
    for (Span candidate : {Span{lo, std::min(hi, c - hole)}, Span{std::max(lo, c + hole), hi}})
        if (candidate.lo < candidate.hi) spans.push_back(candidate);
    return spans;
}

std::string arc_path(double c, double radius, const std::vector<Span>& spans, const Frame& f) {
    std::string d;
    const std::string r = format_coordinate(radius * f.ppu);
    for (const Span& span : spans) {
        auto height = [&](double s) { return std::sqrt(std::max(0.0, radius * radius - (s - c) * (s - c))); };
        if (!d.empty()) d += ' ';
        d += "M " + format_coordinate(f.x(span.lo)) + ' ' + format_coordinate(f.y(height(span.lo)));
        d += " A " + r + ' ' + r + " 0 0 1 " + format_coordinate(f.x(span.hi)) + ' ' +
             format_coordinate(f.y(height(span.hi)));
    }
    return d;
}

std::string line(const char* cls, double x1, double y1, double x2, double y2) {
    return std::string("  <line class=\"") + cls + "\" x1=\"" + format_coordinate(x1) + "\" y1=\"" +
           format_coordinate(y1) + "\" x2=\"" + format_coordinate(x2) + "\" y2=\"" + format_coordinate(y2) + "\"/>\n";
}

}  // namespace

void RenderWindow::validate() const {
    if (!(s_min < s_max)) throw std::invalid_argument("render window requires s_min < s_max");
    if (t_max.sign() <= 0) throw std::invalid_argument("render window requires t_max > 0");
    if (pixels_per_unit < 1) throw std::invalid_argument("render window requires pixels_per_unit >= 1");
}

std::string format_coordinate(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", value);
    std::string out(buffer);
    if (out == "-0.000000") out = "0.000000";
    return out;
}

std::string render_walls_svg(const std::vector<Wall>& walls, const RenderWindow& window) {
    window.validate();
    const Frame f{window.s_min.to_double(), window.s_max.to_double(), window.t_max.to_double(),
                  static_cast<double>(window.pixels_per_unit)};

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    // room below the s-axis for tick labels
    const double height = f.height() + (window.tick_labels ? kLabelMargin : 0.0);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << format_coordinate(f.width())
        << "\" height=\"" << format_coordinate(height) << "\" viewBox=\"0 0 " << format_coordinate(f.width())
        << ' ' << format_coordinate(height) << "\">\n";
    out << "  <style>.wall{fill:none;stroke:#000;stroke-width:1.5}.axis{stroke:#000}"
           ".guide{stroke:#000}.tick{font-size:12px;font-family:sans-serif}</style>\n";

    for (const Wall& wall : walls) {
        if (const auto* vertical = std::get_if<VerticalLine>(&wall.shape)) {
            const double s = vertical->s.to_double();
            if (s < f.s_min || s > f.s_max) continue;
            const double x = f.x(s);
            out << "  <path class=\"wall\" d=\"M " << format_coordinate(x) << ' ' << format_coordinate(f.y(0.0))
                << " L " << format_coordinate(x) << ' ' << format_coordinate(f.y(f.t_max)) << "\"/>\n";
            continue;
        }
        const Circle& circle = std::get<Circle>(wall.shape);
        const double c = circle.center_s.to_double();
        const double radius = std::sqrt(circle.radius_sq.to_double());
        const std::vector<Span> spans = visible_spans(c, radius, f);
        if (spans.empty()) continue;
        out << "  <path class=\"wall\" d=\"" << arc_path(c, radius, spans, f) << "\"/>\n";
    }

    if (window.axes) {
        out << line("axis", 0.0, f.y(0.0), f.width(), f.y(0.0));
        if (f.s_min <= 0.0 && 0.0 <= f.s_max) out << line("axis", f.x(0.0), f.y(0.0), f.x(0.0), 0.0);
    }
    if (window.tick_labels) {
        for (std::int64_t s = window.s_min.ceil(); Rational(s) <= window.s_max; ++s) {
            out << "  <text class=\"tick\" x=\"" << format_coordinate(f.x(static_cast<double>(s))) << "\" y=\""
                << format_coordinate(f.y(0.0) + 4.0) << "\" text-anchor=\"middle\" dominant-baseline=\"hanging\">" << s
                << "</text>\n";
        }
    }
    for (const Rational& guide : window.guides) {
        const double s = guide.to_double();
        if (s < f.s_min || s > f.s_max) continue;
        out << line("guide", f.x(s), f.y(0.0), f.x(s), 0.0);
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace bridgeland
