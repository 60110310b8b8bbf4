/* SPDX-License-Identifier: Apache-2.0 */

#include "reldyn/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace reldyn {

namespace {

bool ends_at(const Worldline& w, const Point& q) {
    if (w.single_point()) return w.at(*w.lower()) == q;
    return !w.horizontal() && w.upper() && w.last() == q;
}

bool starts_at(const Worldline& w, const Point& q) {
    if (w.single_point()) return w.at(*w.lower()) == q;
    return !w.horizontal() && w.lower() && w.first() == q;
}

Quantity mass_or_throw(const Scenario& s, const std::string& k, const std::string& b) {
    auto m = s.mass(k, b);
    if (!m) throw PreconditionViolation("no mass recorded for (" + k + ", " + b + ")");
    return *m;
}

CenterLine weighted_line(const std::vector<const Worldline*>& lines, const std::vector<Quantity>& masses,
                         const std::vector<std::string>& ids) {
    std::optional<Quantity> lo, hi;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const Worldline& w = *lines[i];
        if (w.single_point()) throw NonInertialBody(ids[i]);
        if (w.horizontal()) return {};
        if (w.lower() && (!lo || *w.lower() > *lo)) lo = w.lower();
        if (w.upper() && (!hi || *w.upper() < *hi)) hi = w.upper();
    }
    if (lo && hi && *lo > *hi) return {};
    Quantity total;
    for (const Quantity& m : masses) total += m;
    const std::size_t d = lines.front()->dim();
    Vector base(d), dir(d);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        base = base + masses[i] * lines[i]->base();
        dir = dir + masses[i] * lines[i]->direction();
    }
    Quantity inv = total.inverse();
    return CenterLine{Worldline(inv * base, inv * dir, lo, hi)};
}

}  // namespace

std::set<std::string> in_set(const Scenario& s, const std::string& k, const Point& q) {
    std::set<std::string> out;
    for (const Body& b : s.bodies)
        if (ends_at(wl(s, k, b.id), q)) out.insert(b.id);
    return out;
}

std::set<std::string> out_set(const Scenario& s, const std::string& k, const Point& q) {
    std::set<std::string> out;
    for (const Body& b : s.bodies)
        if (starts_at(wl(s, k, b.id), q)) out.insert(b.id);
    return out;
}

bool inecoll(const Scenario& s, const std::string& k, const std::string& b, const std::string& c,
             const std::string& d) {
    for (const std::string* id : {&b, &c, &d}) s.body(*id);
    if (b == c) return false;
    Worldline wb = wl(s, k, b);
    std::optional<Point> q = wb.single_point() ? wb.at(*wb.lower()) : wb.last();
    if (!q) return false;
    return in_set(s, k, *q) == std::set<std::string>{b, c} &&
           out_set(s, k, *q) == std::set<std::string>{d};
}

std::vector<Inecoll> inecoll_triples(const Worldviews& views, std::size_t k) {
    const Scenario& s = views.scenario();
    const std::size_t n = s.bodies.size();
    std::vector<Point> vertices;
    for (std::size_t i = 0; i < n; ++i) {
        const Worldline& w = views.wl(k, i);
        if (w.single_point() || w.horizontal() || !w.upper()) continue;
        Point q = *w.last();
        if (std::find(vertices.begin(), vertices.end(), q) == vertices.end()) vertices.push_back(q);
    }
    std::vector<Inecoll> out;
    for (const Point& q : vertices) {
        std::vector<std::size_t> in, outgoing;
        for (std::size_t i = 0; i < n; ++i) {
            const Worldline& w = views.wl(k, i);
            if (ends_at(w, q)) in.push_back(i);
            if (starts_at(w, q)) outgoing.push_back(i);
            if (in.size() > 2 || outgoing.size() > 1) break;
        }
        if (in.size() != 2 || outgoing.size() != 1) continue;
        const std::size_t d = outgoing[0];
        if (d == in[0] || d == in[1]) continue;
        std::string b = s.bodies[in[0]].id, c = s.bodies[in[1]].id;
        if (c < b) std::swap(b, c);
        out.push_back({b, c, s.bodies[d].id, q});
    }
    return out;
}

std::vector<Inecoll> inecoll_triples(const Scenario& s, const std::string& k) {
    Worldviews views(s);
    return inecoll_triples(views, views.observer_index(k));
}

bool is_inertial(const Scenario& s, const std::string& b) { return !s.body(b).worldline.single_point(); }

std::optional<Point> center_of_mass(const Scenario& s, const std::string& k,
                                    const std::vector<std::string>& bodies, const Quantity& t) {
    Quantity total;
    std::optional<Point> sum;
    for (const std::string& b : bodies) {
        auto p = loc(s, k, b, t);
        if (!p) return std::nullopt;
        Quantity m = mass_or_throw(s, k, b);
        total += m;
        sum = sum ? *sum + m * *p : m * *p;
    }
    if (!sum) return std::nullopt;
    return *sum / total;
}

std::optional<Point> cen2(const Scenario& s, const std::string& k, const std::string& b,
                          const std::string& c, const Quantity& t) {
    return center_of_mass(s, k, {b, c}, t);
}

std::optional<Point> cen3(const Scenario& s, const std::string& k, const std::string& a,
                          const std::string& b, const std::string& c, const Quantity& t) {
    return center_of_mass(s, k, {a, b, c}, t);
}

CenterLine center_line(const Scenario& s, const std::string& k, const std::vector<std::string>& bodies) {
    if (bodies.empty()) throw EmptyInput();
    std::vector<Worldline> lines;
    std::vector<Quantity> masses;
    for (const std::string& b : bodies) {
        lines.push_back(wl(s, k, b));
        masses.push_back(mass_or_throw(s, k, b));
    }
    std::vector<const Worldline*> ptrs;
    for (const Worldline& w : lines) ptrs.push_back(&w);
    return weighted_line(ptrs, masses, bodies);
}

CenterLine center_line(const Worldviews& views, std::size_t k, const std::vector<std::size_t>& bodies) {
    if (bodies.empty()) throw EmptyInput();
    const Scenario& s = views.scenario();
    const std::string& observer = views.observers()[k];
    std::vector<const Worldline*> ptrs;
    std::vector<Quantity> masses;
    std::vector<std::string> ids;
    for (std::size_t b : bodies) {
        ptrs.push_back(&views.wl(k, b));
        ids.push_back(s.bodies[b].id);
        masses.push_back(mass_or_throw(s, observer, ids.back()));
    }
    return weighted_line(ptrs, masses, ids);
}

CenterLine cen2_line(const Scenario& s, const std::string& k, const std::string& b, const std::string& c) {
    return center_line(s, k, std::vector<std::string>{b, c});
}

CenterLine cen3_line(const Scenario& s, const std::string& k, const std::string& a, const std::string& b,
                     const std::string& c) {
    return center_line(s, k, std::vector<std::string>{a, b, c});
}

Quantity rel_mass_from_rest(const Quantity& m0, const Quantity& speed) {
    if (m0.sign() <= 0) throw NonpositiveMass();
    return m0 / time_dilation_factor(speed);
}

std::optional<Vector> four_momentum(const Scenario& s, const std::string& k, const std::string& b) {
    auto v = velocity(s, k, b);
    if (!v) return std::nullopt;
    Quantity m = mass_or_throw(s, k, b);
    return Vector::from_parts(m, m * *v);
}

namespace {

Vector rest_four_momentum(const Quantity& m0, const Vector& v) {
    if (m0.sign() <= 0) throw NonpositiveMass();
    Quantity m = m0 * lorentz_factor(v);
    return Vector::from_parts(m, m * v);
}

}  // namespace

CollisionResult resolve_collision(const Quantity& m0b, const Vector& vb, const Quantity& m0c,
                                  const Vector& vc) {
    require_same_dimension(vb, vc);
    Vector p = rest_four_momentum(m0b, vb) + rest_four_momentum(m0c, vc);
    return {p.time(), p.space() / p.time(), mink_len(p)};
}

FloatCollisionResult resolve_collision_float(double m0b, const std::vector<double>& vb, double m0c,
                                             const std::vector<double>& vc) {
    if (vb.size() != vc.size()) throw DimensionMismatch(vb.size(), vc.size());
    if (m0b <= 0 || m0c <= 0) throw NonpositiveMass();
    auto gamma = [](const std::vector<double>& v) {
        double v2 = 0;
        for (double x : v) v2 += x * x;
        if (v2 >= 1) throw SpeedNotSubluminal();
        return 1 / std::sqrt(1 - v2);
    };
    double eb = m0b * gamma(vb), ec = m0c * gamma(vc);
    double e = eb + ec, p2 = 0;
    std::vector<double> v(vb.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        double p = eb * vb[i] + ec * vc[i];
        p2 += p * p;
        v[i] = p / e;
    }
    return {e, v, std::sqrt(e * e - p2)};
}

MassRatios mass_dependence_witness(const Quantity& m0b, const Quantity& m0c, const Vector& vb,
                                   const Vector& vc, std::optional<Vector> h_velocity) {
    require_same_dimension(vb, vc);
    if (vb == vc) throw PreconditionViolation("b and c move together; they cannot collide");
    if (m0b.sign() <= 0 || m0c.sign() <= 0) throw NonpositiveMass();
    Vector w = h_velocity ? *h_velocity : median_velocity(vb, vc);
    if (w.is_zero()) throw PreconditionViolation("observer h is at rest relative to k");
    PoincareMap h = boost_for_velocity(w);
    Vector vb_h = transform_velocity(h, vb), vc_h = transform_velocity(h, vc);
    Quantity ratio_k = m0b * lorentz_factor(vb) / (m0c * lorentz_factor(vc));
    Quantity ratio_h = m0b * lorentz_factor(vb_h) / (m0c * lorentz_factor(vc_h));
    return {ratio_k, ratio_h, w};
}

}  // namespace reldyn
