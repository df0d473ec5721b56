#include "geomcolor/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace geomcolor {
namespace {

constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf",
                                    "#bcbd22", "#7f7f7f"};
constexpr int kPaletteSize = 10;

struct Box {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;

    void add(double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    void inflate() {
        double dx = std::max((xmax - xmin) * 0.2, 1.0);
        double dy = std::max((ymax - ymin) * 0.2, 1.0);
        xmin -= dx;
        xmax += dx;
        ymin -= dy;
        ymax += dy;
    }
    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
};

double to_d(const Rat& r) { return static_cast<double>(r); }

const char* color_of(const Coloring* col, std::size_t i) {
    if (!col) return "#333333";
    return kPalette[col->colors[i] % kPaletteSize];
}

struct Canvas {
    Box box;
    std::ostringstream out;

    // SVG y grows downward; flip so the picture matches the plane.
    double X(double x) const { return x - box.xmin; }
    double Y(double y) const { return box.ymax - y; }

    void line(double x1, double y1, double x2, double y2, const std::string& style) {
        out << "  <line x1=\"" << X(x1) << "\" y1=\"" << Y(y1) << "\" x2=\"" << X(x2)
            << "\" y2=\"" << Y(y2) << "\" " << style << "/>\n";
    }
    void rect(double x1, double y1, double x2, double y2, const char* color) {
        out << "  <rect x=\"" << X(x1) << "\" y=\"" << Y(y2) << "\" width=\"" << (x2 - x1)
            << "\" height=\"" << (y2 - y1) << "\" fill=\"" << color
            << "\" fill-opacity=\"0.25\" stroke=\"" << color << "\"/>\n";
    }
    void circle(double x, double y, double r, const char* color) {
        out << "  <circle cx=\"" << X(x) << "\" cy=\"" << Y(y) << "\" r=\"" << r
            << "\" fill=\"" << color << "\"/>\n";
    }
    void polygon(const std::vector<std::pair<double, double>>& pts, const char* color) {
        if (pts.size() < 3) return;
        out << "  <polygon points=\"";
        for (const auto& [x, y] : pts) out << X(x) << "," << Y(y) << " ";
        out << "\" fill=\"" << color << "\" fill-opacity=\"0.2\" stroke=\"" << color
            << "\"/>\n";
    }
};

// Clips a convex polygon to one side of y = slope*x + intercept.
std::vector<std::pair<double, double>> clip_halfplane(
    std::vector<std::pair<double, double>> poly, double slope, double intercept, bool above) {
    auto inside = [&](const std::pair<double, double>& p) {
        double v = p.second - (slope * p.first + intercept);
        return above ? v >= 0 : v <= 0;
    };
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        auto a = poly[i];
        auto b = poly[(i + 1) % poly.size()];
        bool ia = inside(a), ib = inside(b);
        if (ia) out.push_back(a);
        if (ia != ib) {
            double fa = a.second - (slope * a.first + intercept);
            double fb = b.second - (slope * b.first + intercept);
            double t = fa / (fa - fb);
            out.push_back({a.first + t * (b.first - a.first),
                           a.second + t * (b.second - a.second)});
        }
    }
    return out;
}

Box bounding_box(const Instance& inst) {
    Box box;
    bool first = true;
    auto add = [&](double x, double y) {
        if (first) {
            box = Box{x, x, y, y};
            first = false;
        } else {
            box.add(x, y);
        }
    };
    switch (inst.family) {
        case Family::b_points:
        case Family::h_points:
        case Family::bprime_points:
            for (const auto& p : inst.points) add(to_d(p.x), to_d(p.y));
            break;
        case Family::b_rects:
            for (const auto& r : inst.rects) {
                add(to_d(r.a), to_d(r.c));
                add(to_d(r.b), to_d(r.c));
            }
            break;
        case Family::bprime_rects:
            for (const auto& r : inst.baseline_rects) {
                add(to_d(r.a), to_d(r.bottom));
                add(to_d(r.b), to_d(r.top));
            }
            break;
        case Family::h_rects: {
            // Boundary intercepts plus pairwise crossings frame the arrangement.
            for (const auto& h : inst.halfplanes) add(0.0, to_d(h.intercept));
            for (std::size_t i = 0; i < inst.halfplanes.size(); ++i) {
                for (std::size_t j = i + 1; j < inst.halfplanes.size(); ++j) {
                    const auto &a = inst.halfplanes[i], &b = inst.halfplanes[j];
                    if (a.slope == b.slope) continue;
                    Rat x = (b.intercept - a.intercept) / (a.slope - b.slope);
                    add(to_d(x), to_d(a.boundary_at(x)));
                }
            }
            break;
        }
    }
    box.inflate();
    return box;
}

}  // namespace

std::string render_svg(const Instance& inst, const Coloring* coloring) {
    if (coloring && coloring->colors.size() != inst.size()) {
        throw std::invalid_argument("coloring size does not match instance");
    }
    Canvas c;
    c.box = bounding_box(inst);
    double dot = std::max(c.box.width(), c.box.height()) * 0.008;

    c.out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << c.box.width()
          << " " << c.box.height() << "\">\n";
    c.out << "  <rect x=\"0\" y=\"0\" width=\"" << c.box.width() << "\" height=\""
          << c.box.height() << "\" fill=\"white\"/>\n";

    bool baseline = inst.family == Family::bprime_points || inst.family == Family::bprime_rects ||
                    inst.family == Family::b_rects;
    if (baseline) {
        c.line(c.box.xmin, 0, c.box.xmax, 0,
               "stroke=\"#999999\" stroke-dasharray=\"4 3\"");
    }

    switch (inst.family) {
        case Family::b_points:
        case Family::h_points:
        case Family::bprime_points:
            for (std::size_t i = 0; i < inst.points.size(); ++i) {
                c.circle(to_d(inst.points[i].x), to_d(inst.points[i].y), dot,
                         color_of(coloring, i));
            }
            break;
        case Family::b_rects:
            for (std::size_t i = 0; i < inst.rects.size(); ++i) {
                const auto& r = inst.rects[i];
                c.rect(to_d(r.a), c.box.ymin, to_d(r.b), to_d(r.c), color_of(coloring, i));
            }
            break;
        case Family::bprime_rects:
            for (std::size_t i = 0; i < inst.baseline_rects.size(); ++i) {
                const auto& r = inst.baseline_rects[i];
                c.rect(to_d(r.a), to_d(r.bottom), to_d(r.b), to_d(r.top),
                       color_of(coloring, i));
            }
            break;
        case Family::h_rects:
            for (std::size_t i = 0; i < inst.halfplanes.size(); ++i) {
                const auto& h = inst.halfplanes[i];
                std::vector<std::pair<double, double>> clip = {{c.box.xmin, c.box.ymin},
                                                               {c.box.xmax, c.box.ymin},
                                                               {c.box.xmax, c.box.ymax},
                                                               {c.box.xmin, c.box.ymax}};
                c.polygon(clip_halfplane(std::move(clip), to_d(h.slope), to_d(h.intercept),
                                         h.region == HalfPlaneRegion::above),
                          color_of(coloring, i));
            }
            break;
    }
    c.out << "</svg>\n";
    return c.out.str();
}

}  // namespace geomcolor
