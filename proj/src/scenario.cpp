/* SPDX-License-Identifier: Apache-2.0 */

#include "reldyn/scenario.hpp"

#include <algorithm>

namespace reldyn {

std::string to_string(BodyKind kind) {
    switch (kind) {
    case BodyKind::Observer: return "observer";
    case BodyKind::Photon: return "photon";
    case BodyKind::Inertial: return "inertial";
    case BodyKind::Plain: return "plain";
    }
    return "plain";
}

BodyKind body_kind_from_string(const std::string& text) {
    if (text == "observer") return BodyKind::Observer;
    if (text == "photon") return BodyKind::Photon;
    if (text == "inertial") return BodyKind::Inertial;
    if (text == "plain") return BodyKind::Plain;
    throw ParseError("unknown body kind '" + text + "'");
}

const Body& Scenario::body(const std::string& id) const {
    for (const Body& b : bodies)
        if (b.id == id) return b;
    throw UnknownId(id);
}

bool Scenario::has_body(const std::string& id) const {
    return std::any_of(bodies.begin(), bodies.end(), [&](const Body& b) { return b.id == id; });
}

const AffineMap& Scenario::frame(const std::string& observer) const {
    for (const Frame& f : frames)
        if (f.observer == observer) return f.map;
    throw UnknownObserver(observer);
}

std::vector<std::string> Scenario::observers() const {
    std::vector<std::string> ids;
    for (const Frame& f : frames) ids.push_back(f.observer);
    return ids;
}

std::optional<Quantity> Scenario::mass(const std::string& observer, const std::string& b) const {
    auto it = masses.find({observer, b});
    if (it == masses.end()) return std::nullopt;
    return it->second;
}

void Scenario::set_mass(const std::string& observer, const std::string& b, const Quantity& m) {
    masses[{observer, b}] = m;
}

Worldline wl(const Scenario& s, const std::string& k, const std::string& b) {
    return apply(s.frame(k), s.body(b).worldline);
}

std::set<std::string> ev(const Scenario& s, const std::string& k, const Point& p) {
    if (p.dim() != s.dimension) throw DimensionMismatch(s.dimension, p.dim());
    // pull p back to world coordinates once instead of mapping every body
    Point world = inverse(s.frame(k)).apply(p);
    std::set<std::string> out;
    for (const Body& b : s.bodies)
        if (b.worldline.contains(world)) out.insert(b.id);
    return out;
}

std::optional<Point> loc(const Scenario& s, const std::string& k, const std::string& b,
                         const Quantity& t) {
    return wl(s, k, b).at_time(t);
}

std::optional<Vector> velocity(const Scenario& s, const std::string& k, const std::string& b) {
    return wl(s, k, b).velocity();
}

std::optional<Quantity> speed2(const Scenario& s, const std::string& k, const std::string& b) {
    auto v = velocity(s, k, b);
    if (!v) return std::nullopt;
    return euclid_len2(*v);
}

std::optional<Quantity> speed(const Scenario& s, const std::string& k, const std::string& b) {
    auto v2 = speed2(s, k, b);
    if (!v2) return std::nullopt;
    return sqrt(*v2);
}

std::optional<Quantity> rest_mass(const Scenario& s, const std::string& b) {
    std::optional<Quantity> found;
    for (const Frame& f : s.frames) {
        auto v = velocity(s, f.observer, b);
        if (!v || !v->is_zero()) continue;
        auto m = s.mass(f.observer, b);
        if (!m) return std::nullopt;
        if (found && *found != *m) return std::nullopt;
        found = m;
    }
    return found;
}

AffineMap worldview_transform(const Scenario& s, const std::string& k, const std::string& h) {
    return compose(s.frame(h), inverse(s.frame(k)));
}

std::string Violation::to_string() const {
    std::string s = kind;
    if (!observer.empty() || !body.empty()) {
        s += "(";
        s += observer;
        if (!observer.empty() && !body.empty()) s += ", ";
        s += body;
        s += ")";
    }
    if (!detail.empty()) s += ": " + detail;
    return s;
}

namespace {

std::string join(const std::vector<Violation>& vs) {
    std::string s = "scenario is invalid:";
    for (const Violation& v : vs) s += "\n  " + v.to_string();
    return s;
}

bool on_time_axis(const Worldline& w) {
    if (w.kind() != WorldlineKind::FullLine || w.horizontal()) return false;
    return w.direction().space().is_zero() && w.base().space().is_zero();
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(join(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate_frame(const Scenario& s) {
    std::vector<Violation> out;
    if (s.dimension < 2) {
        out.push_back({"DimensionTooLow", "", "", "dimension must be at least 2"});
        return out;
    }

    std::set<std::string> ids;
    for (const Body& b : s.bodies) {
        if (!ids.insert(b.id).second) out.push_back({"DuplicateId", "", b.id, ""});
        if (b.worldline.dim() != s.dimension) {
            out.push_back({"DimensionMismatch", "", b.id, "world-line dimension differs"});
            continue;
        }
        if (b.kind == BodyKind::Photon &&
            (b.worldline.single_point() || !mink_len2(b.worldline.direction()).is_zero()))
            out.push_back({"PhotonNotLightlike", "", b.id, ""});
    }
    if (!out.empty()) return out;

    std::set<std::string> framed;
    for (const Frame& f : s.frames) {
        if (!framed.insert(f.observer).second) out.push_back({"DuplicateFrame", f.observer, "", ""});
        if (!s.has_body(f.observer)) {
            out.push_back({"UnknownObserver", f.observer, "", "frame for a body that does not exist"});
            continue;
        }
        if (s.body(f.observer).kind != BodyKind::Observer)
            out.push_back({"FrameForNonObserver", f.observer, "", ""});
        if (f.map.dim() != s.dimension) {
            out.push_back({"DimensionMismatch", f.observer, "", "frame dimension differs"});
            continue;
        }
        if (!is_invertible(f.map)) {
            out.push_back({"SingularFrame", f.observer, "", ""});
            continue;
        }
        if (!on_time_axis(apply(f.map, s.body(f.observer).worldline)))
            out.push_back({"AxSelfViolation", f.observer, "", "own world-line is not the time axis"});
    }
    for (const Body& b : s.bodies)
        if (b.kind == BodyKind::Observer && !framed.count(b.id))
            out.push_back({"MissingFrame", b.id, "", ""});

    for (const auto& [key, m] : s.masses) {
        if (!framed.count(key.first) || !ids.count(key.second))
            out.push_back({"UnknownMassEntry", key.first, key.second, ""});
        else if (m.sign() <= 0)
            out.push_back({"MassNotPositive", key.first, key.second, m.to_string()});
    }
    for (const Frame& f : s.frames)
        for (const Body& b : s.bodies)
            if (!s.masses.count({f.observer, b.id}))
                out.push_back({"MassRelNotTotal", f.observer, b.id, ""});

    for (std::size_t i = 0; i < s.collisions.size(); ++i) {
        const CollisionEvent& c = s.collisions[i];
        std::string tag = "collision " + std::to_string(i);
        if (c.vertex.dim() != s.dimension)
            out.push_back({"DimensionMismatch", "", "", tag + " vertex"});
        for (const auto* list : {&c.incoming, &c.outgoing})
            for (const std::string& id : *list)
                if (!ids.count(id)) out.push_back({"UnknownBody", "", id, tag});
    }
    return out;
}

Worldviews::Worldviews(const Scenario& s) : s_(&s), observers_(s.observers()) {
    for (std::size_t i = 0; i < s.bodies.size(); ++i) body_index_[s.bodies[i].id] = i;
    table_.reserve(observers_.size());
    for (std::size_t k = 0; k < observers_.size(); ++k) {
        observer_index_[observers_[k]] = k;
        const AffineMap& f = s.frames[k].map;
        std::vector<Worldline> row;
        row.reserve(s.bodies.size());
        for (const Body& b : s.bodies) row.push_back(apply(f, b.worldline));
        table_.push_back(std::move(row));
    }
}

std::size_t Worldviews::observer_index(const std::string& k) const {
    auto it = observer_index_.find(k);
    if (it == observer_index_.end()) throw UnknownObserver(k);
    return it->second;
}

std::size_t Worldviews::body_index(const std::string& b) const {
    auto it = body_index_.find(b);
    if (it == body_index_.end()) throw UnknownId(b);
    return it->second;
}

const Worldline& Worldviews::wl(const std::string& k, const std::string& b) const {
    return table_[observer_index(k)][body_index(b)];
}

}  // namespace reldyn
