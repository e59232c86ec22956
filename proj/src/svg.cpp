#include "minkval/svg.hpp"
#include "minkval/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace minkval {

namespace {

constexpr double kCanvas = 512.0;

struct Frame {
    double cx, cy, half; // world-space center and half-extent
    double px(double x) const { return (x - cx) / half * 0.45 * kCanvas + 0.5 * kCanvas; }
    double py(double y) const { return 0.5 * kCanvas - (y - cy) / half * 0.45 * kCanvas; }
};

std::string header() {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 512 512\" "
          "width=\"512\" height=\"512\">\n";
    return os.str();
}

} // namespace

std::string polygon_to_svg(const Polygon& P) {
    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    for (const P2& v : P.vertices) {
        lo_x = std::min(lo_x, v[0]);
        hi_x = std::max(hi_x, v[0]);
        lo_y = std::min(lo_y, v[1]);
        hi_y = std::max(hi_y, v[1]);
    }
    Frame f;
    f.cx = 0.5 * (lo_x + hi_x);
    f.cy = 0.5 * (lo_y + hi_y);
    f.half = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9}) * 0.5;

    std::ostringstream os;
    os << header();
    os << "  <rect x=\"0\" y=\"0\" width=\"512\" height=\"512\" fill=\"white\"/>\n";
    if (P.is_point()) {
        os << "  <circle cx=\"" << format_number(f.px(P.vertices[0][0])) << "\" cy=\""
           << format_number(f.py(P.vertices[0][1])) << "\" r=\"4\" fill=\"black\"/>\n";
    } else {
        os << "  <polygon points=\"";
        for (size_t i = 0; i < P.vertices.size(); ++i) {
            if (i) os << " ";
            os << format_number(f.px(P.vertices[i][0])) << ","
               << format_number(f.py(P.vertices[i][1]));
        }
        os << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string measure_to_svg(const AreaMeasureS1& mu) {
    double wmax = 1e-12;
    for (const MeasureAtom& a : mu.atoms) wmax = std::max(wmax, a.weight);

    std::ostringstream os;
    os << header();
    os << "  <rect x=\"0\" y=\"0\" width=\"512\" height=\"512\" fill=\"white\"/>\n";
    os << "  <circle cx=\"256\" cy=\"256\" r=\"2\" fill=\"black\"/>\n";
    for (const MeasureAtom& a : mu.atoms) {
        double len = 0.45 * kCanvas * a.weight / wmax;
        double x2 = 256.0 + len * std::cos(a.angle);
        double y2 = 256.0 - len * std::sin(a.angle);
        os << "  <line x1=\"256\" y1=\"256\" x2=\"" << format_number(x2)
           << "\" y2=\"" << format_number(y2)
           << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace minkval
