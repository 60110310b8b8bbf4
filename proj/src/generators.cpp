/* SPDX-License-Identifier: Apache-2.0 */

#include <algorithm>
#include <random>

#include "reldyn/axioms.hpp"

namespace reldyn {

namespace {

Vector with_time(const Quantity& t, const Vector& space) { return Vector::from_parts(t, space); }

class ModelBuilder {
public:
    explicit ModelBuilder(std::size_t d) { s_.dimension = d; }

    void check_velocity(const Vector& v) const {
        if (v.dim() + 1 != s_.dimension) throw DimensionMismatch(s_.dimension - 1, v.dim());
        if (euclid_len2(v) >= Quantity(1)) throw SpeedNotSubluminal();
    }

    /// Adds an observer through the origin unless one with velocity v exists.
    void observer(const std::string& prefix, const Vector& v) {
        check_velocity(v);
        for (const Vector& u : observer_velocities_)
            if (u == v) return;
        std::string id = prefix + std::to_string(observer_velocities_.size());
        observer_velocities_.push_back(v);
        s_.bodies.push_back({id, BodyKind::Observer, Worldline::line(Point(s_.dimension), with_time(1, v))});
        s_.frames.push_back({id, boost_for_velocity(v).map()});
        momenta_.push_back(lorentz_factor(v) * with_time(1, v));
    }

    void massive(const std::string& id, const Worldline& w, const Vector& p) {
        s_.bodies.push_back({id, BodyKind::Inertial, w});
        momenta_.push_back(p);
    }

    void photon(const std::string& id, const Worldline& w) {
        s_.bodies.push_back({id, BodyKind::Photon, w});
        momenta_.push_back(std::nullopt);
    }

    /// m_k(x) is the time component of x's four-momentum in k's frame;
    /// photons get mass 1 everywhere.
    Scenario finish() {
        for (const Frame& f : s_.frames)
            for (std::size_t i = 0; i < s_.bodies.size(); ++i)
                s_.set_mass(f.observer, s_.bodies[i].id,
                            momenta_[i] ? (f.map.linear * *momenta_[i]).time() : Quantity(1));
        return std::move(s_);
    }

    Scenario& scenario() { return s_; }

private:
    Scenario s_;
    std::vector<Vector> observer_velocities_;
    std::vector<std::optional<Vector>> momenta_;
};

Vector rest_momentum(const BodySpec& b) {
    if (b.m0.sign() <= 0) throw NonpositiveMass();
    return b.m0 * lorentz_factor(b.velocity) * with_time(1, b.velocity);
}

}  // namespace

Scenario generate_standard_model(const StandardModelParams& params) {
    const std::size_t d = params.dimension;
    if (d < 3) throw DimensionTooLow(d);
    ModelBuilder m(d);
    const Vector rest(d - 1);

    m.observer("k", rest);
    for (const Vector& w : params.observer_velocities) m.observer("k", w);

    std::vector<Vector> comoving;
    for (std::size_t i = 0; i < params.free_bodies.size(); ++i) {
        const BodySpec& f = params.free_bodies[i];
        m.check_velocity(f.velocity);
        Point base(d);
        base[2] = -Quantity(static_cast<long>(i + 1));
        m.massive("f" + std::to_string(i + 1), Worldline::line(base, with_time(1, f.velocity)), rest_momentum(f));
        comoving.push_back(f.velocity);
    }

    Quantity far(1);
    for (std::size_t i = 0; i < params.collisions.size(); ++i) {
        const CollisionSpec& c = params.collisions[i];
        if (c.vertex.dim() != d) throw DimensionMismatch(d, c.vertex.dim());
        m.check_velocity(c.b.velocity);
        m.check_velocity(c.c.velocity);
        const std::string n = std::to_string(i + 1);
        Vector pb = rest_momentum(c.b), pc = rest_momentum(c.c), pd = pb + pc;
        Vector vd = pd.space() / pd.time();
        m.massive("b" + n, Worldline::ray_to(c.vertex, with_time(1, c.b.velocity)), pb);
        m.massive("c" + n, Worldline::ray_to(c.vertex, with_time(1, c.c.velocity)), pc);
        m.massive("d" + n, Worldline::ray_from(c.vertex, with_time(1, vd)), pd);
        m.scenario().collisions.push_back({c.vertex, {"b" + n, "c" + n}, {"d" + n}});
        comoving.insert(comoving.end(), {c.b.velocity, c.c.velocity, vd});
        far = std::max(far, abs(c.vertex[1]) + 1);
    }

    if (params.comoving_observers)
        for (const Vector& v : comoving) m.observer("k", v);
    if (params.median_observers)
        for (const CollisionSpec& c : params.collisions)
            if (c.b.velocity != c.c.velocity) m.observer("k", median_velocity(c.b.velocity, c.c.velocity));

    if (params.photon) {
        Vector dir(d);
        dir[0] = 1;
        dir[1] = 1;
        m.photon("ph", Worldline::line(Point(d), dir));
    }
    if (params.spectator) {
        Point base(d);
        base[1] = far;
        m.massive("spectator", Worldline::line(base, with_time(1, rest)), with_time(1, rest));
    }

    Scenario& s = m.scenario();
    if (params.demands) {
        const std::string k0 = s.frames.front().observer;
        Vector light(d);
        light[0] = 1;
        light[1] = 1;
        for (const Frame& f : s.frames) {
            s.witnesses.photon_pairs.push_back({f.observer, f.map.apply(Point(d)), f.map.apply(light)});
            if (f.observer == k0) continue;
            const Worldline& own = s.body(f.observer).worldline;
            s.witnesses.thex.push_back({k0, own.at_time(1).value(), Point(d)});
        }
        if (!params.photon) s.witnesses.photon_pairs.clear();
        for (std::size_t i = 0; i < params.collisions.size(); ++i) {
            const CollisionSpec& c = params.collisions[i];
            s.witnesses.forall_inecoll.push_back({k0, c.b.m0, c.c.m0, c.b.velocity, c.c.velocity});
            if (c.b.m0 == c.c.m0 && c.c.velocity.is_zero())
                s.witnesses.exists_inecoll.push_back({k0, "b" + std::to_string(i + 1)});
        }
    }
    return m.finish();
}

namespace {

struct Rng {
    std::mt19937_64 gen;

    int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(gen); }
    int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

    /// Mostly speeds with rational Lorentz factor; a third are arbitrary
    /// rationals, which bring square roots into the frames.
    Quantity speed() {
        static const std::pair<long, long> pythagorean[] = {
            {3, 5}, {4, 5}, {5, 13}, {12, 13}, {8, 17}, {15, 17}, {7, 25}, {24, 25}, {20, 29}, {21, 29}};
        if (below(3) == 0) {
            long den = between(2, 9);
            return Quantity(between(1, static_cast<int>(den) - 1), den);
        }
        auto [n, d] = pythagorean[below(10)];
        return Quantity(n, d);
    }

    /// A velocity along a coordinate axis or, in the plane of the first two
    /// axes, along the unit vector (3/5, 4/5).
    Vector velocity(std::size_t dim) {
        Vector v(dim - 1);
        if (below(6) == 0) return v;
        Quantity s = speed();
        if (below(2) == 0) s = -s;
        if (dim >= 3 && below(3) == 0) {
            v[0] = Quantity(3, 5) * s;
            v[1] = Quantity(4, 5) * s;
        } else {
            v[below(static_cast<int>(dim - 1))] = s;
        }
        return v;
    }

    Quantity mass() {
        static const std::pair<long, long> masses[] = {{1, 1}, {2, 1}, {3, 1}, {1, 2}, {3, 2}, {5, 2}};
        auto [n, d] = masses[below(6)];
        return Quantity(n, d);
    }
};

}  // namespace

StandardModelParams random_model_params(std::uint64_t seed, std::size_t dimension, bool small) {
    if (dimension < 3) throw DimensionTooLow(dimension);
    Rng rng{std::mt19937_64(seed)};
    StandardModelParams p;
    p.dimension = dimension;
    int observers = small ? rng.below(2) : rng.below(3);
    for (int i = 0; i < observers; ++i) p.observer_velocities.push_back(rng.velocity(dimension));
    int free = small ? rng.below(2) : rng.below(3);
    for (int i = 0; i < free; ++i) p.free_bodies.push_back({rng.mass(), rng.velocity(dimension)});
    int collisions = small ? 1 : 1 + rng.below(2);
    std::vector<Point> vertices;
    while (static_cast<int>(vertices.size()) < collisions) {
        Point q(dimension);
        for (std::size_t j = 0; j < dimension; ++j) q[j] = rng.between(-4, 4);
        if (std::find(vertices.begin(), vertices.end(), q) == vertices.end()) vertices.push_back(q);
    }
    for (const Point& q : vertices) {
        CollisionSpec c;
        c.vertex = q;
        c.b = {rng.mass(), rng.velocity(dimension)};
        if (rng.below(3) == 0) {
            c.c = {c.b.m0, Vector(dimension - 1)};
            if (c.b.velocity.is_zero()) c.b.velocity[0] = Quantity(3, 5);
        } else {
            c.c = {rng.mass(), rng.velocity(dimension)};
            while (c.c.velocity == c.b.velocity) c.c.velocity = rng.velocity(dimension);
        }
        p.collisions.push_back(c);
    }
    return p;
}

Scenario generate_random_standard_model(std::uint64_t seed, std::size_t dimension, bool small) {
    return generate_standard_model(random_model_params(seed, dimension, small));
}

std::string to_string(Corruption c) {
    switch (c) {
    case Corruption::OutgoingMass: return "outgoing-mass";
    case Corruption::OutgoingVelocity: return "outgoing-velocity";
    case Corruption::Frame: return "frame";
    }
    return "frame";
}

namespace {

void scale_masses(Scenario& s, const std::string& body, const Quantity& factor) {
    for (auto& [key, m] : s.masses)
        if (key.second == body) m *= factor;
}

}  // namespace

Scenario corrupt(const Scenario& s, Corruption kind, std::uint64_t seed) {
    Rng rng{std::mt19937_64(seed)};
    Scenario out = s;
    if (kind == Corruption::Frame) {
        if (out.frames.empty()) return out;
        Frame& f = out.frames[rng.below(static_cast<int>(out.frames.size()))];
        static const std::pair<long, long> shears[] = {{1, 2}, {-1, 3}, {2, 5}, {-3, 7}};
        auto [n, d] = shears[rng.below(4)];
        // t' = t + alpha x1 fixes the observer's own time axis.
        Matrix shear = Matrix::identity(out.dimension);
        shear(0, 1) = Quantity(n, d);
        f.map = compose(AffineMap(shear, Vector(out.dimension)), f.map);
        return out;
    }
    if (out.collisions.empty()) return out;
    const CollisionEvent& c = out.collisions[rng.below(static_cast<int>(out.collisions.size()))];
    const std::string& d = c.outgoing.front();
    if (kind == Corruption::OutgoingMass) {
        static const std::pair<long, long> factors[] = {{2, 1}, {3, 2}, {1, 2}, {3, 1}};
        auto [n, den] = factors[rng.below(4)];
        scale_masses(out, d, Quantity(n, den));
        return out;
    }
    for (Body& b : out.bodies) {
        if (b.id != d) continue;
        Vector v = b.worldline.velocity().value();
        Vector nudge(v.dim());
        nudge[0] = Quantity(1, 5);
        Vector moved = Quantity(1, 2) * v + nudge;
        if (moved == v) moved = Quantity(1, 2) * v - nudge;
        b.worldline = Worldline::ray_from(c.vertex, with_time(1, moved));
    }
    return out;
}

namespace {

Scenario single_collision_model() {
    StandardModelParams p;
    p.dimension = 4;
    CollisionSpec c;
    c.vertex = Point{1, 1, 0, 0};
    c.b = {Quantity(1), Vector{Quantity(3, 5), 0, 0}};
    c.c = {Quantity(1), Vector{0, 0, 0}};
    p.collisions.push_back(c);
    return generate_standard_model(p);
}

}  // namespace

Scenario generate_cons_mass_counterexample() {
    Scenario s = single_collision_model();
    scale_masses(s, "d1", Quantity(2));
    return s;
}

Scenario generate_cons_moment_counterexample() {
    Scenario s = single_collision_model();
    scale_masses(s, "d1", Quantity(3, 2));
    return s;
}

}  // namespace reldyn
