#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace bnwall::cli {

namespace {

constexpr double kCanvas = 600.0;
constexpr double kMargin = 40.0;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

struct Frame {
    double scale; // plot units -> pixels

    double x(double b) const { return kMargin + b * scale; }
    double y(double a) const { return kCanvas - kMargin - a * scale; }
};

// Ray from the origin with plot direction (da, db), clipped to the framed
// square. Directions always satisfy da >= 0, db >= 0, not both zero.
void ray(std::ostringstream& os, const Frame& fr, double da, double db,
         const char* style) {
    const double room = kCanvas - 2.0 * kMargin;
    double t = 1e18;
    if (da > 0) t = std::min(t, room / (da * fr.scale));
    if (db > 0) t = std::min(t, room / (db * fr.scale));
    os << "<line x1=\"" << num(fr.x(0)) << "\" y1=\"" << num(fr.y(0)) << "\" x2=\""
       << num(fr.x(db * t)) << "\" y2=\"" << num(fr.y(da * t)) << "\" " << style
       << "/>\n";
}

} // namespace

ConeSvg cone_svg(const Surface& s, const DivisorClass& c1, i64 c2,
                 const std::vector<DivisorClass>& marks) {
    if (!s.is_hirzebruch())
        throw invalid_input("the cone picture is drawn for Hirzebruch surfaces only");
    for (const DivisorClass& m : marks)
        if (!is_ample(s, m))
            throw invalid_input("mark " + m.str() + " is not ample on " + s.name());

    const std::vector<WallClass> walls = enumerate_walls(s, c1, c2);
    const i64 e = s.e();

    // Fit the cone edge direction (1, e) and every mark into the frame.
    i64 span = std::max<i64>(e, 1);
    for (const DivisorClass& m : marks) span = std::max({span, m[0], m[1]});
    Frame fr{(kCanvas - 2.0 * kMargin) / static_cast<double>(span)};

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
          "viewBox=\"0 0 600 600\">\n";
    os << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
    os << "<text x=\"" << num(kMargin) << "\" y=\"" << num(kMargin - 16.0)
       << "\" font-family=\"monospace\" font-size=\"14\">ample cone of " << s.name()
       << ", walls of type (" << c1.str() << "," << c2 << ")</text>\n";

    // cone edges: the fibre direction F = (0,1) and C0 + eF = (1,e)
    const char* edge = "stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\"";
    ray(os, fr, 0.0, 1.0, edge);
    ray(os, fr, 1.0, static_cast<double>(e), edge);
    os << "<text x=\"" << num(kCanvas - kMargin + 4.0) << "\" y=\"" << num(fr.y(0))
       << "\" font-family=\"monospace\" font-size=\"12\">F</text>\n";
    {
        const double room = kCanvas - 2.0 * kMargin;
        const double t = (e > 0) ? std::min(room / fr.scale, room / (e * fr.scale))
                                 : room / fr.scale;
        os << "<text x=\"" << num(fr.x(e * t) + 4.0) << "\" y=\"" << num(fr.y(t))
           << "\" font-family=\"monospace\" font-size=\"12\">C0+" << e << "F</text>\n";
    }

    // walls as rays: xi = (p, q) vanishes on the ample direction (p, pe - q)
    const char* wall_style = "stroke=\"#b22222\" stroke-width=\"1.5\"";
    for (const WallClass& w : walls) {
        const double da = static_cast<double>(w.xi[0]);
        const double db = static_cast<double>(w.xi[0] * e - w.xi[1]);
        ray(os, fr, da, db, wall_style);
    }

    for (const DivisorClass& m : marks) {
        const double cx = fr.x(static_cast<double>(m[1]));
        const double cy = fr.y(static_cast<double>(m[0]));
        os << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy)
           << "\" r=\"4\" fill=\"#1f4e8c\"/>\n";
        os << "<text x=\"" << num(cx + 6.0) << "\" y=\"" << num(cy - 6.0)
           << "\" font-family=\"monospace\" font-size=\"12\">" << m.str()
           << "</text>\n";
    }

    os << "</svg>\n";
    return ConeSvg{os.str(), walls.size()};
}

} // namespace bnwall::cli
