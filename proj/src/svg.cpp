#include "hopfbloch/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>

namespace hopfbloch {

namespace {

constexpr double kRadius = 105.0;
constexpr double kPanelWidth = kCanvasWidth / 3.0;
constexpr double kTitleHeight = 28.0;
constexpr int kCircleSegments = 72;

struct Vec3 {
    double x, y, z;
};

struct Point {
    double x, y;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string deg(double radians) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", degrees(radians));
    std::string s = buf;
    if (s == "-0.0") s = "0.0";
    return s + "°";
}

std::string escape(const std::string& in) {
    std::string out;
    for (char ch : in) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

// Orthographic projection onto the plane facing the camera.
class Panel {
public:
    Panel(std::ostringstream& out, double cx, double cy) : out_(out), cx_(cx), cy_(cy) {
        const double az = kSphereCamera.azimuth_deg * std::numbers::pi / 180.0;
        const double el = kSphereCamera.elevation_deg * std::numbers::pi / 180.0;
        right_ = {-std::sin(az), std::cos(az), 0.0};
        up_ = {-std::cos(az) * std::sin(el), -std::sin(az) * std::sin(el), std::cos(el)};
    }

    Point project(const Vec3& p) const {
        const double u = p.x * right_.x + p.y * right_.y + p.z * right_.z;
        const double v = p.x * up_.x + p.y * up_.y + p.z * up_.z;
        return {cx_ + kRadius * u, cy_ - kRadius * v};
    }

    void sphere(double radius, const char* stroke, const char* fill) {
        out_ << "  <circle cx=\"" << fmt(cx_) << "\" cy=\"" << fmt(cy_) << "\" r=\"" << fmt(kRadius * radius)
             << "\" stroke=\"" << stroke << "\" fill=\"" << fill << "\" stroke-width=\"1.5\"/>\n";
    }

    // Circle parallel to the equatorial plane at the given height.
    void horizontal_circle(double height, double radius, const char* stroke, bool dashed) {
        out_ << "  <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.2\""
             << (dashed ? " stroke-dasharray=\"4 3\"" : "") << " points=\"";
        for (int k = 0; k <= kCircleSegments; ++k) {
            const double a = 2.0 * std::numbers::pi * k / kCircleSegments;
            const Point p = project({radius * std::cos(a), radius * std::sin(a), height});
            out_ << (k ? " " : "") << fmt(p.x) << "," << fmt(p.y);
        }
        out_ << "\"/>\n";
    }

    void axis(const Vec3& dir, const char* name) {
        const Point o = project({0, 0, 0});
        const Point p = project({1.15 * dir.x, 1.15 * dir.y, 1.15 * dir.z});
        out_ << "  <line x1=\"" << fmt(o.x) << "\" y1=\"" << fmt(o.y) << "\" x2=\"" << fmt(p.x) << "\" y2=\""
             << fmt(p.y) << "\" stroke=\"#999999\" stroke-width=\"0.8\"/>\n";
        const Point l = project({1.25 * dir.x, 1.25 * dir.y, 1.25 * dir.z});
        text(l, name, "#666666", 11);
    }

    void vector(const Vec3& tip, const char* stroke) {
        const Point o = project({0, 0, 0});
        const Point p = project(tip);
        out_ << "  <line x1=\"" << fmt(o.x) << "\" y1=\"" << fmt(o.y) << "\" x2=\"" << fmt(p.x) << "\" y2=\""
             << fmt(p.y) << "\" stroke=\"" << stroke << "\" stroke-width=\"2.5\"/>\n";
        dot(tip, stroke);
    }

    void dot(const Vec3& at, const char* fill) {
        const Point p = project(at);
        out_ << "  <circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\"4.000\" fill=\"" << fill
             << "\"/>\n";
    }

    void text(const Point& at, const std::string& s, const char* fill, int size) {
        out_ << "  <text x=\"" << fmt(at.x) << "\" y=\"" << fmt(at.y) << "\" font-size=\"" << size << "\" fill=\""
             << fill << "\" text-anchor=\"middle\">" << escape(s) << "</text>\n";
    }

    void caption(int line, const std::string& s) {
        text({cx_, cy_ + kRadius + 30.0 + 15.0 * line}, s, "#000000", 12);
    }

    void heading(const std::string& s) { text({cx_, cy_ - kRadius - 28.0}, s, "#000000", 14); }

    void frame() {
        sphere(1.0, "#444444", "none");
        horizontal_circle(0.0, 1.0, "#bbbbbb", true);
    }

private:
    std::ostringstream& out_;
    double cx_;
    double cy_;
    Vec3 right_{};
    Vec3 up_{};
};

void draw_row(std::ostringstream& out, const SphereSet& ss, double top) {
    const double cy = top + kTitleHeight + 40.0 + kRadius;
    const char base_tag = label(base_qubit(ss.assignment));
    const char fiber_tag = label(fiber_qubit(ss.assignment));

    out << " <g class=\"row\" data-base=\"" << base_tag << "\">\n";

    Panel base(out, 0.5 * kPanelWidth, cy);
    base.frame();
    base.axis({1, 0, 0}, "x1");
    base.axis({0, 1, 0}, "b");
    base.axis({0, 0, 1}, "x0");
    base.vector({ss.base.x1, ss.base.b, ss.base.x0}, "#d62728");
    base.heading(std::string("BASE(") + base_tag + ")");
    base.caption(0, "θ = " + deg(ss.base.theta) + "   φ = " + deg(ss.base.phi));
    base.caption(1, "(x1, b, x0) = (" + fmt(ss.base.x1) + ", " + fmt(ss.base.b) + ", " + fmt(ss.base.x0) + ")");

    const auto& e = ss.ent;
    Panel ent(out, 1.5 * kPanelWidth, cy);
    ent.sphere(1.0, "#c9a400", "#fff7c2");
    ent.sphere(std::abs(e.b), "#2ca02c", "#d8f0d0");
    ent.horizontal_circle(0.0, 1.0, "#bbbbbb", true);
    ent.axis({1, 0, 0}, "x2");
    ent.axis({0, 1, 0}, "x3");
    ent.axis({0, 0, 1}, "x4");
    ent.horizontal_circle(e.t.z, std::hypot(e.t.x, e.t.y), "#d62798", true);
    ent.horizontal_circle(e.x4, e.c, "#2ca02c", true);
    ent.vector({e.t.x, e.t.y, e.t.z}, "#d62798");
    ent.dot({e.x2, e.x3, e.x4}, "#2ca02c");
    ent.heading(std::string("ENTANGLEMENT(") + base_tag + ")");
    ent.caption(0, "χ = " + deg(e.chi) + "   ξ = " + deg(e.xi));
    ent.caption(1, "c = " + fmt(e.c) + "   x4 = " + fmt(e.x4) + "   |b| = " + fmt(std::abs(e.b)));

    const auto& f = ss.fiber;
    Panel fib(out, 2.5 * kPanelWidth, cy);
    fib.frame();
    fib.axis({1, 0, 0}, "x");
    fib.axis({0, 1, 0}, "y");
    fib.axis({0, 0, 1}, "z");
    fib.vector({f.bloch.x, f.bloch.y, f.bloch.z}, "#1f77b4");
    fib.heading(std::string("FIBER(") + fiber_tag + ")");
    fib.caption(0, "θf = " + deg(f.theta_f) + "   φf - 2ζf = " + deg(f.phi_f - 2.0 * f.zeta_f));
    fib.caption(1, "ζf = " + deg(f.zeta_f));

    out << " </g>\n";
}

}  // namespace

std::string render_svg(const TwoQubitState& s, AssignmentSelection sel, const std::string& title) {
    const auto which = assignments(sel);
    const double height = kTitleHeight + kRowHeight * static_cast<double>(which.size());

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kCanvasWidth) << "\" height=\"" << fmt(height)
        << "\" viewBox=\"0 0 " << fmt(kCanvasWidth) << " " << fmt(height)
        << "\" font-family=\"DejaVu Sans, Arial, sans-serif\">\n";
    out << " <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    out << " <text x=\"" << fmt(kCanvasWidth / 2.0) << "\" y=\"20.000\" font-size=\"15\" text-anchor=\"middle\">"
        << escape(title.empty() ? "two-qubit Bloch spheres" : title) << "   c = " << fmt(concurrence_det(s))
        << "</text>\n";
    for (std::size_t r = 0; r < which.size(); ++r)
        draw_row(out, sphere_set(s, which[r]), kTitleHeight + kRowHeight * static_cast<double>(r) - 10.0);
    out << "</svg>\n";
    return out.str();
}

}  // namespace hopfbloch
