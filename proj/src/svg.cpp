#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "hcf/geometry.hpp"

namespace hcf {

namespace {

constexpr double kPanel = 320.0;
constexpr double kFar = 20.0;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s(buf);
    if (s == "-0.000000") s = "0.000000";
    return s;
}

struct Pt {
    double x, y;
};

Pt approx(const QuadComplex& z) { return {z.re().approx(), z.im().approx()}; }

std::string circle_path(double cx, double cy, double r) {
    return "M" + num(cx + r) + "," + num(cy) + " A" + num(r) + "," + num(r) + " 0 1 0 " + num(cx - r) + "," +
           num(cy) + " A" + num(r) + "," + num(r) + " 0 1 0 " + num(cx + r) + "," + num(cy) + " Z";
}

// Clip shape for {f < 0} (or {f <= 0}; boundaries are not distinguished in the picture).
std::string clip_shape(const Circline& f) {
    if (f.is_line()) {
        double br = f.Br.get_d(), bi = f.Bi.get_d(), c = f.C.get_d();
        double n = std::hypot(br, bi);
        double nx = br / n, ny = bi / n;
        double x0 = -c * br / (2 * n * n), y0 = -c * bi / (2 * n * n);
        double dx = -ny, dy = nx;
        Pt p[4] = {{x0 - kFar * dx, y0 - kFar * dy},
                   {x0 + kFar * dx, y0 + kFar * dy},
                   {x0 + kFar * dx - kFar * nx, y0 + kFar * dy - kFar * ny},
                   {x0 - kFar * dx - kFar * nx, y0 - kFar * dy - kFar * ny}};
        std::string d = "M" + num(p[0].x) + "," + num(p[0].y);
        for (int k = 1; k < 4; ++k) d += " L" + num(p[k].x) + "," + num(p[k].y);
        return "<path d=\"" + d + " Z\"/>";
    }
    double cx = f.center_re().get_d(), cy = f.center_im().get_d(), r = std::sqrt(f.radius2().get_d());
    if (f.A > 0) return "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) + "\"/>";
    std::string box = "M" + num(-kFar) + "," + num(-kFar) + " H" + num(kFar) + " V" + num(kFar) + " H" + num(-kFar) + " Z ";
    return "<path clip-rule=\"evenodd\" d=\"" + box + circle_path(cx, cy, r) + "\"/>";
}

std::string arc_path(const Arc& a) {
    const Circline& k = a.carrier;
    if (k.is_line()) {
        double br = k.Br.get_d(), bi = k.Bi.get_d();
        double n = std::hypot(br, bi);
        double dx = -bi / n, dy = br / n;
        Pt s, e;
        if (a.start) s = approx(*a.start);
        if (a.end) e = approx(*a.end);
        if (!a.start || !a.end) {
            double c = k.C.get_d();
            double x0 = -c * br / (2 * n * n), y0 = -c * bi / (2 * n * n);
            if (!a.start) s = {x0 - kFar * dx, y0 - kFar * dy};
            if (!a.end) e = {x0 + kFar * dx, y0 + kFar * dy};
        }
        return "M" + num(s.x) + "," + num(s.y) + " L" + num(e.x) + "," + num(e.y);
    }
    double cx = k.center_re().get_d(), cy = k.center_im().get_d(), r = std::sqrt(k.radius2().get_d());
    if (a.loop) return circle_path(cx, cy, r);
    Pt s = approx(*a.start), e = approx(*a.end);
    // the carrier parameter runs clockwise
    double t0 = std::atan2(s.y - cy, s.x - cx), t1 = std::atan2(e.y - cy, e.x - cx);
    double span = t0 - t1;
    while (span <= 0) span += 2 * std::numbers::pi;
    int large = span > std::numbers::pi ? 1 : 0;
    return "M" + num(s.x) + "," + num(s.y) + " A" + num(r) + "," + num(r) + " 0 " + std::to_string(large) + " 0 " +
           num(e.x) + "," + num(e.y);
}

void emit_region(std::ostringstream& os, const Region& r, const Style& st, const std::string& id) {
    if (!st.label.empty()) os << "<!-- " << st.label << " -->\n";
    Kind k = r.kind();
    if (k == Kind::Empty) return;
    if (k == Kind::TwoDim) {
        const auto& cs = r.constraints();
        os << "<defs>\n";
        for (size_t i = 0; i < cs.size(); ++i)
            os << "<clipPath id=\"" << id << "c" << i << "\">" << clip_shape(cs[i].f) << "</clipPath>\n";
        os << "</defs>\n";
        for (size_t i = 0; i < cs.size(); ++i) os << "<g clip-path=\"url(#" << id << "c" << i << ")\">";
        os << "<rect x=\"" << num(-kFar) << "\" y=\"" << num(-kFar) << "\" width=\"" << num(2 * kFar) << "\" height=\""
           << num(2 * kFar) << "\" fill=\"" << st.fill << "\" stroke=\"none\"/>";
        for (size_t i = 0; i < cs.size(); ++i) os << "</g>";
        os << "\n";
        return;
    }
    const Shape* s = nullptr;
    try {
        s = &r.shape();
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::FieldOverflow) throw;
        os << "<!-- uncertified degenerate set -->\n";
        return;
    }
    for (const auto& a : s->arcs)
        os << "<path d=\"" << arc_path(a) << "\" fill=\"none\" stroke=\"" << st.stroke << "\" stroke-width=\"0.030000\"/>\n";
    for (const auto& p : s->points) {
        Pt q = approx(p);
        os << "<circle cx=\"" << num(q.x) << "\" cy=\"" << num(q.y) << "\" r=\"0.035000\" fill=\"" << st.stroke
           << "\"/>\n";
    }
}

}  // namespace

std::string emit_svg(const std::vector<std::vector<std::pair<Region, Style>>>& panels) {
    std::ostringstream os;
    size_t n = panels.size();
    double w = kPanel * static_cast<double>(n ? n : 1);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(kPanel)
       << "\" viewBox=\"0 0 " << num(w) << " " << num(kPanel) << "\">\n";
    for (size_t p = 0; p < n; ++p) {
        os << "<svg x=\"" << num(kPanel * static_cast<double>(p)) << "\" y=\"0\" width=\"" << num(kPanel)
           << "\" height=\"" << num(kPanel) << "\" viewBox=\"-1.6 -1.6 3.2 3.2\">\n";
        os << "<g transform=\"scale(1,-1)\">\n";
        os << "<path d=\"M-1.6,0 H1.6 M0,-1.6 V1.6\" stroke=\"#cccccc\" stroke-width=\"0.005000\" fill=\"none\"/>\n";
        os << "<path d=\"M-0.5,-0.5 H0.5 V0.5 H-0.5 Z\" stroke=\"#999999\" stroke-width=\"0.005000\" fill=\"none\"/>\n";
        for (size_t i = 0; i < panels[p].size(); ++i)
            emit_region(os, panels[p][i].first, panels[p][i].second, "p" + std::to_string(p) + "r" + std::to_string(i));
        os << "</g>\n</svg>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string emit_svg(const std::vector<std::pair<Region, Style>>& single_panel) {
    if (single_panel.empty()) return emit_svg(std::vector<std::vector<std::pair<Region, Style>>>{});
    return emit_svg(std::vector<std::vector<std::pair<Region, Style>>>{single_panel});
}

}  // namespace hcf
