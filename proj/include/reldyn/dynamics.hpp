/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reldyn/scenario.hpp"

namespace reldyn {

/// Bodies whose world-line (in k's coordinates) ends at q.
std::set<std::string> in_set(const Scenario& s, const std::string& k, const Point& q);
/// Bodies whose world-line (in k's coordinates) starts at q.
std::set<std::string> out_set(const Scenario& s, const std::string& k, const Point& q);

/// b != c and some q has in_k(q) == {b, c} and out_k(q) == {d}.
bool inecoll(const Scenario& s, const std::string& k, const std::string& b, const std::string& c,
             const std::string& d);

/// An inelastic collision seen by one observer; b < c by id.
struct Inecoll {
    std::string b;
    std::string c;
    std::string d;
    Point vertex;  // in the observer's coordinates

    friend bool operator==(const Inecoll&, const Inecoll&) = default;
};

/// Every inecoll triple in k's world-view among inertial bodies.
std::vector<Inecoll> inecoll_triples(const Worldviews& views, std::size_t k);
std::vector<Inecoll> inecoll_triples(const Scenario& s, const std::string& k);

/// A body is inertial when its world-line has at least two points. Frames
/// are invertible, so this does not depend on the observer.
bool is_inertial(const Scenario& s, const std::string& b);

/// Locus of a center of mass: a line, ray, segment, single point, or empty.
struct CenterLine {
    std::optional<Worldline> locus;

    bool empty() const { return !locus.has_value(); }
    bool contains(const Point& p) const { return locus && locus->contains(p); }
};

/// Mass-weighted location of the given bodies at time t in k's view;
/// undefined unless every location is.
std::optional<Point> center_of_mass(const Scenario& s, const std::string& k,
                                    const std::vector<std::string>& bodies, const Quantity& t);
std::optional<Point> cen2(const Scenario& s, const std::string& k, const std::string& b,
                          const std::string& c, const Quantity& t);
std::optional<Point> cen3(const Scenario& s, const std::string& k, const std::string& a,
                          const std::string& b, const std::string& c, const Quantity& t);

/// The exact, affine-in-t center-line over the common time domain.
/// Throws NonInertialBody for single-event bodies.
CenterLine center_line(const Scenario& s, const std::string& k, const std::vector<std::string>& bodies);
CenterLine center_line(const Worldviews& views, std::size_t k, const std::vector<std::size_t>& bodies);
CenterLine cen2_line(const Scenario& s, const std::string& k, const std::string& b, const std::string& c);
CenterLine cen3_line(const Scenario& s, const std::string& k, const std::string& a, const std::string& b,
                     const std::string& c);

/// m0 / sqrt(1 - speed^2). Throws NonpositiveMass, SpeedNotSubluminal.
Quantity rel_mass_from_rest(const Quantity& m0, const Quantity& speed);

/// (m_k(b), m_k(b) * v_k(b)); undefined when the velocity is.
std::optional<Vector> four_momentum(const Scenario& s, const std::string& k, const std::string& b);

struct CollisionResult {
    Quantity mass;  // relativistic mass of the outgoing body
    Vector velocity;
    Quantity rest_mass;
};

/// Outgoing body of an inelastic collision from four-momentum
/// conservation. Velocities have d-1 components.
CollisionResult resolve_collision(const Quantity& m0b, const Vector& vb, const Quantity& m0c,
                                  const Vector& vc);

/// The same computation in double precision.
struct FloatCollisionResult {
    double mass;
    std::vector<double> velocity;
    double rest_mass;
};
FloatCollisionResult resolve_collision_float(double m0b, const std::vector<double>& vb, double m0c,
                                             const std::vector<double>& vc);

struct MassRatios {
    Quantity ratio_k;  // m_k(b) / m_k(c)
    Quantity ratio_h;  // m_h(b) / m_h(c)
    Vector h_velocity;  // h's velocity relative to k
};

/// Mass ratios of b and c seen by k and by a moving observer h. By default
/// h is the median observer of the collision. Throws PreconditionViolation
/// when vb == vc or h is at rest relative to k.
MassRatios mass_dependence_witness(const Quantity& m0b, const Quantity& m0c, const Vector& vb,
                                   const Vector& vc, std::optional<Vector> h_velocity = std::nullopt);

}  // namespace reldyn
