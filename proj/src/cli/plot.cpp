/* SPDX-License-Identifier: Apache-2.0 */

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "reldyn/cli.hpp"
#include "reldyn/errors.hpp"

namespace reldyn::cli {

namespace {

constexpr double kUnit = 40;  // px per coordinate unit
constexpr double kMargin = 30;
constexpr double kLegend = 80;

std::string axis_name(std::size_t i) {
    static const char* names[] = {"t", "x", "y", "z"};
    return i < 4 ? names[i] : "x" + std::to_string(i);
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x == 0 ? 0.0 : x);  // no "-0.00"
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

struct Pt {
    double v, h;
};

struct Box {
    double vmin = std::numeric_limits<double>::max(), vmax = std::numeric_limits<double>::lowest();
    double hmin = vmin, hmax = vmax;
    void add(Pt p) {
        vmin = std::min(vmin, p.v);
        vmax = std::max(vmax, p.v);
        hmin = std::min(hmin, p.h);
        hmax = std::max(hmax, p.h);
    }
};

class Canvas {
public:
    Canvas(const PlotOptions& o, Box box) : o_(o), box_(box) {}

    Pt project(const Point& p) const { return {p[o_.vertical].to_double(), p[o_.horizontal].to_double()}; }
    double x(Pt p) const { return kMargin + (p.h - box_.hmin) * kUnit; }
    double y(Pt p) const { return kLegend + (box_.vmax - p.v) * kUnit; }
    double width() const { return std::max(560.0, 2 * kMargin + (box_.hmax - box_.hmin) * kUnit); }
    double height() const { return kLegend + kMargin + (box_.vmax - box_.vmin) * kUnit; }

    /// The visible part of a world-line, clipped to the box.
    std::optional<std::pair<Pt, Pt>> clip(const Worldline& w) const {
        Pt b = project(w.base()), u = project(w.direction());
        double lo = w.lower() ? w.lower()->to_double() : -1e9;
        double hi = w.upper() ? w.upper()->to_double() : 1e9;
        auto narrow = [&](double base, double step, double min, double max) {
            if (step == 0) {
                if (base < min || base > max) hi = lo - 1;
                return;
            }
            double s0 = (min - base) / step, s1 = (max - base) / step;
            lo = std::max(lo, std::min(s0, s1));
            hi = std::min(hi, std::max(s0, s1));
        };
        narrow(b.v, u.v, box_.vmin, box_.vmax);
        narrow(b.h, u.h, box_.hmin, box_.hmax);
        if (lo > hi) return std::nullopt;
        return std::pair{Pt{b.v + lo * u.v, b.h + lo * u.h}, Pt{b.v + hi * u.v, b.h + hi * u.h}};
    }

    void line(Pt a, Pt b, const std::string& style) {
        body_ << "<line x1=\"" << num(x(a)) << "\" y1=\"" << num(y(a)) << "\" x2=\"" << num(x(b)) << "\" y2=\""
              << num(y(b)) << "\" " << style << "/>\n";
    }

    void text(double px, double py, const std::string& s, const std::string& style = "") {
        body_ << "<text x=\"" << num(px) << "\" y=\"" << num(py) << "\" font-size=\"12\"" << style << ">"
              << escape(s) << "</text>\n";
    }

    void dot(Pt p, const std::string& fill) {
        body_ << "<circle cx=\"" << num(x(p)) << "\" cy=\"" << num(y(p)) << "\" r=\"4\" fill=\"" << fill
              << "\"/>\n";
    }

    std::string finish() const {
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width()) << "\" height=\""
            << num(height()) << "\" viewBox=\"0 0 " << num(width()) << " " << num(height()) << "\">\n"
            << "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" "
               "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#2a8a2a\"/></marker></defs>\n"
            << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
            << body_.str() << "</svg>\n";
        return out.str();
    }

private:
    const PlotOptions& o_;
    Box box_;
    std::ostringstream body_;
};

std::string stroke(BodyKind kind) {
    switch (kind) {
    case BodyKind::Observer: return "stroke=\"#2255cc\" stroke-width=\"1.5\"";
    case BodyKind::Photon: return "stroke=\"#e08a00\" stroke-width=\"1.5\" stroke-dasharray=\"6,3\"";
    default: return "stroke=\"black\" stroke-width=\"2\"";
    }
}

}  // namespace

std::pair<std::size_t, std::size_t> parse_axes(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("axes must look like t,x");
    auto index = [](const std::string& name) -> std::size_t {
        if (name == "t") return 0;
        if (name == "x") return 1;
        if (name == "y") return 2;
        if (name == "z") return 3;
        if (!name.empty() && std::all_of(name.begin(), name.end(), ::isdigit)) return std::stoul(name);
        throw ParseError("unknown axis '" + name + "'");
    };
    auto a = index(text.substr(0, comma)), b = index(text.substr(comma + 1));
    if (a == b) throw ParseError("axes must differ");
    return {a, b};
}

std::string render_svg(const Scenario& s, const PlotOptions& o) {
    const std::size_t d = s.dimension;
    if (o.vertical >= d || o.horizontal >= d) throw PreconditionViolation("axis beyond the dimension");

    std::vector<std::string> observers = s.observers();
    std::optional<std::string> k = o.observer;
    if (k) s.frame(*k);  // throws UnknownObserver
    else if (!observers.empty()) k = observers.front();

    auto view = [&](const Worldline& w) { return k ? apply(s.frame(*k), w) : w; };
    auto view_point = [&](const Point& p) { return k ? s.frame(*k).apply(p) : p; };

    std::vector<Worldline> lines;
    for (const Body& b : s.bodies) lines.push_back(view(b.worldline));
    std::vector<Point> vertices;
    for (const CollisionEvent& c : s.collisions) vertices.push_back(view_point(c.vertex));

    auto project = [&o](const Point& p) { return Pt{p[o.vertical].to_double(), p[o.horizontal].to_double()}; };
    Box box;
    box.add({0, 0});
    for (const Point& q : vertices) box.add(project(q));
    for (const Worldline& w : lines) {
        if (auto p = w.first()) box.add(project(*p));
        if (auto p = w.last()) box.add(project(*p));
        if (!w.lower() && !w.upper()) box.add(project(w.base()));
    }
    box.vmin -= 2, box.vmax += 2, box.hmin -= 2, box.hmax += 2;
    Canvas c(o, box);

    // axes through the origin
    c.line({box.vmin, 0}, {box.vmax, 0}, "stroke=\"#999\" stroke-width=\"1\"");
    c.line({0, box.hmin}, {0, box.hmax}, "stroke=\"#999\" stroke-width=\"1\"");
    c.text(c.x({box.vmax, 0}) + 4, c.y({box.vmax, 0}) + 12, axis_name(o.vertical));
    c.text(c.x({0, box.hmax}) - 12, c.y({0, box.hmax}) - 4, axis_name(o.horizontal));

    std::string legend_axes = axis_name(o.vertical) + " up, " + axis_name(o.horizontal) + " right";
    std::vector<std::string> dropped;
    for (std::size_t i = 0; i < d; ++i)
        if (i != o.vertical && i != o.horizontal) dropped.push_back(axis_name(i));
    c.text(kMargin, 18, "observer: " + (k ? *k : std::string("world coordinates")));
    c.text(kMargin, 34, "axes: " + legend_axes + "; 1 unit = 40 px");
    std::string drop = "dropped: ";
    for (std::size_t i = 0; i < dropped.size(); ++i) drop += (i ? ", " : "") + dropped[i];
    if (!dropped.empty()) c.text(kMargin, 50, drop);
    c.text(kMargin, 66, "blue observers, orange photons, red vertices, grey center-lines, green four-momenta");

    for (std::size_t i = 0; i < s.bodies.size(); ++i) {
        auto seg = c.clip(lines[i]);
        if (!seg) continue;
        c.line(seg->first, seg->second, stroke(s.bodies[i].kind));
        Pt top = seg->first.v > seg->second.v ? seg->first : seg->second;
        c.text(c.x(top) + 4, c.y(top) + 12, s.bodies[i].id);
    }

    if (k) {
        Worldviews views(s);
        std::size_t ki = views.observer_index(*k);
        for (const Inecoll& t : inecoll_triples(views, ki)) {
            std::size_t b = views.body_index(t.b), cc = views.body_index(t.c);
            try {
                CenterLine cen = center_line(views, ki, {b, cc});
                if (!cen.empty()) {
                    Worldline full = Worldline::line(cen.locus->base(), cen.locus->direction());
                    if (auto seg = c.clip(full))
                        c.line(seg->first, seg->second, "stroke=\"#888\" stroke-width=\"1\" stroke-dasharray=\"3,3\"");
                }
            Quantity total;
            for (const std::string* id : {&t.b, &t.c, &t.d})
                if (auto m = s.mass(*k, *id)) total += *m;
            if (total.sign() <= 0) continue;
            Pt q = c.project(t.vertex);
            for (const std::string* id : {&t.b, &t.c, &t.d}) {
                auto p = four_momentum(s, *k, *id);
                if (!p) continue;
                Pt arrow = c.project(*p / total);
                c.line(q, {q.v + 2 * arrow.v, q.h + 2 * arrow.h},
                       "stroke=\"#2a8a2a\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"");
            }
            } catch (const Error&) {
                // missing masses: no center-line and no momenta
            }
        }
    }
    for (const Point& q : vertices) c.dot(c.project(q), "#cc2222");
    return c.finish();
}

}  // namespace reldyn::cli
