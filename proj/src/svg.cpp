#include "bezspline/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>

namespace bezspline::io {

namespace {

std::string fixed2(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 2);
    std::string s(buf.data(), end);
    if (s == "-0.00") s = "0.00";
    return s;
}

struct Frame {
    double x0, x1, y0, y1;
    double width, height;

    [[nodiscard]] std::string px(Point2 p) const {
        const double sx = (p.x - x0) / (x1 - x0) * width;
        const double sy = height - (p.y - y0) / (y1 - y0) * height;
        return fixed2(sx) + "," + fixed2(sy);
    }
};

Frame fit(std::span<const Point2> a, std::span<const Point2> b, const SvgOptions& o) {
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymin = xmin;
    double ymax = -xmin;
    for (auto pts : {a, b}) {
        for (const auto& p : pts) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    }
    const double dx = xmax > xmin ? xmax - xmin : 1.0;
    const double dy = ymax > ymin ? ymax - ymin : 1.0;
    return {xmin - o.margin * dx, xmax + o.margin * dx, ymin - o.margin * dy, ymax + o.margin * dy,
            static_cast<double>(o.width), static_cast<double>(o.height)};
}

}  // namespace

std::string write_svg(std::span<const Point2> control, std::span<const Point2> curve, const SvgOptions& options) {
    const Frame frame = fit(control, curve, options);
    const std::string w = std::to_string(options.width);
    const std::string h = std::to_string(options.height);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
           "\" viewBox=\"0 0 " + w + " " + h + "\">\n";

    out += "<polyline class=\"control-polygon\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1\" "
           "stroke-dasharray=\"6 4\" points=\"";
    for (std::size_t i = 0; i < control.size(); ++i) {
        if (i) out += ' ';
        out += frame.px(control[i]);
    }
    out += "\"/>\n";

    out += "<path class=\"curve\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\" d=\"";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        out += i ? " L" : "M";
        out += frame.px(curve[i]);
    }
    out += "\"/>\n";

    const std::string r = fixed2(options.dot_radius);
    for (const auto& p : control) {
        const std::string xy = frame.px(p);
        const auto comma = xy.find(',');
        out += "<circle class=\"control-point\" cx=\"" + xy.substr(0, comma) + "\" cy=\"" + xy.substr(comma + 1) +
               "\" r=\"" + r + "\" fill=\"#000000\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string write_svg(const ControlPolygon& control, std::span<const Sample> samples, const SvgOptions& options) {
    std::vector<Point2> curve(samples.size());
    std::transform(samples.begin(), samples.end(), curve.begin(), [](const Sample& s) { return Point2{s.x, s.y}; });
    return write_svg(to_points(control), curve, options);
}

}  // namespace bezspline::io
