/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reldyn/errors.hpp"
#include "reldyn/minkowski.hpp"
#include "reldyn/transforms.hpp"

namespace reldyn {

enum class BodyKind { Observer, Photon, Inertial, Plain };

std::string to_string(BodyKind kind);
BodyKind body_kind_from_string(const std::string& text);

struct Body {
    std::string id;
    BodyKind kind;
    Worldline worldline;  // in world coordinates

    friend bool operator==(const Body&, const Body&) = default;
};

/// Maps world coordinates to the observer's coordinates.
struct Frame {
    std::string observer;
    AffineMap map;

    friend bool operator==(const Frame&, const Frame&) = default;
};

struct CollisionEvent {
    Point vertex;  // world coordinates
    std::vector<std::string> incoming;
    std::vector<std::string> outgoing;

    friend bool operator==(const CollisionEvent&, const CollisionEvent&) = default;
};

/// A light-like pair that some photon must pass through, in k's coordinates.
struct PhotonPairWitness {
    std::string observer;
    Point p;
    Point q;
    friend bool operator==(const PhotonPairWitness&, const PhotonPairWitness&) = default;
};

/// Some observer must pass through p and q (in k's coordinates) with its
/// own clock running from q to p.
struct ThExDemand {
    std::string observer;
    Point p;
    Point q;
    friend bool operator==(const ThExDemand&, const ThExDemand&) = default;
};

/// Some collision in k's view must have incoming rest masses m1, m2 and
/// velocities v1, v2.
struct ForallInecollDemand {
    std::string observer;
    Quantity m1;
    Quantity m2;
    Vector v1;
    Vector v2;
    friend bool operator==(const ForallInecollDemand&, const ForallInecollDemand&) = default;
};

/// For body a, some collision in k's view must have incoming bodies b, c
/// with m0(a) = m0(b) = m0(c), v(b) = v(a) and c at rest.
struct ExistsInecollDemand {
    std::string observer;
    std::string body;
    friend bool operator==(const ExistsInecollDemand&, const ExistsInecollDemand&) = default;
};

struct Witnesses {
    std::vector<PhotonPairWitness> photon_pairs;
    std::vector<ThExDemand> thex;
    std::vector<ForallInecollDemand> forall_inecoll;
    std::vector<ExistsInecollDemand> exists_inecoll;
    friend bool operator==(const Witnesses&, const Witnesses&) = default;
};

/// A finite model: bodies with world-lines in a canonical world frame, one
/// frame map per observer, and the mass relation stored extensionally.
struct Scenario {
    std::size_t dimension = 4;
    std::vector<Body> bodies;
    std::vector<Frame> frames;
    std::map<std::pair<std::string, std::string>, Quantity> masses;  // (observer, body)
    std::vector<CollisionEvent> collisions;
    Witnesses witnesses;

    const Body& body(const std::string& id) const;  // throws UnknownId
    bool has_body(const std::string& id) const;
    const AffineMap& frame(const std::string& observer) const;  // throws UnknownObserver
    std::vector<std::string> observers() const;
    std::optional<Quantity> mass(const std::string& observer, const std::string& body) const;
    void set_mass(const std::string& observer, const std::string& body, const Quantity& m);

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// wl_k(b): b's world-line in k's coordinates.
Worldline wl(const Scenario& s, const std::string& k, const std::string& b);
/// ev_k(p): bodies whose world-line in k's coordinates contains p.
std::set<std::string> ev(const Scenario& s, const std::string& k, const Point& p);
/// loc_k(b, t).
std::optional<Point> loc(const Scenario& s, const std::string& k, const std::string& b,
                         const Quantity& t);
std::optional<Vector> velocity(const Scenario& s, const std::string& k, const std::string& b);
std::optional<Quantity> speed(const Scenario& s, const std::string& k, const std::string& b);
std::optional<Quantity> speed2(const Scenario& s, const std::string& k, const std::string& b);
/// m0(b): defined when some observer sees b at rest and all such observers
/// agree on its mass.
std::optional<Quantity> rest_mass(const Scenario& s, const std::string& b);

/// w^k_h = frame_h o frame_k^-1. Not necessarily Poincare: scenarios may
/// carry arbitrary invertible frames.
AffineMap worldview_transform(const Scenario& s, const std::string& k, const std::string& h);

struct Violation {
    std::string kind;  // e.g. MassNotPositive
    std::string observer;
    std::string body;
    std::string detail;

    std::string to_string() const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Structural constraints: ids, dimensions, frame invertibility, mass
/// totality and positivity, and each observer at rest at its own origin.
std::vector<Violation> validate_frame(const Scenario& s);

class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// Reads a scenario without validating it. Throws ParseError.
Scenario parse_scenario(const std::string& text);
std::string write_scenario(const Scenario& s);

/// parse + validate; throws ParseError or ValidationError.
Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& s, const std::filesystem::path& path);

/// Precomputed world-lines of every body in every observer's coordinates.
class Worldviews {
public:
    explicit Worldviews(const Scenario& s);

    const Scenario& scenario() const { return *s_; }
    const std::vector<std::string>& observers() const { return observers_; }
    const Worldline& wl(const std::string& k, const std::string& b) const;
    const Worldline& wl(std::size_t k, std::size_t b) const { return table_[k][b]; }
    std::size_t observer_index(const std::string& k) const;
    std::size_t body_index(const std::string& b) const;

private:
    const Scenario* s_;
    std::vector<std::string> observers_;
    std::map<std::string, std::size_t> observer_index_;
    std::map<std::string, std::size_t> body_index_;
    std::vector<std::vector<Worldline>> table_;
};

}  // namespace reldyn
