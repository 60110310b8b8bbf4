/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "reldyn/dynamics.hpp"
#include "reldyn/scenario.hpp"

namespace reldyn {

/// WitnessedOnly marks an unbounded quantifier that was only checked on the
/// scenario's declared witnesses; it is never reported as Holds.
enum class Verdict { Holds, Fails, VacuouslyHolds, WitnessedOnly };

std::string to_string(Verdict v);

struct CheckReport {
    std::string name;
    Verdict verdict = Verdict::VacuouslyHolds;
    std::vector<std::string> trace;
    /// Named exact values: the counterwitness on failure, results otherwise.
    std::vector<std::pair<std::string, std::string>> values;
    std::vector<CheckReport> parts;

    /// Anything but Fails.
    bool ok() const { return verdict != Verdict::Fails; }
    const CheckReport* part(const std::string& name) const;

    std::string to_text() const;
    /// Deterministic JSON: name, verdict, values, trace, parts.
    std::string to_json() const;
};

/// Fails dominates WitnessedOnly, which dominates Holds, which dominates
/// VacuouslyHolds.
Verdict combine(Verdict a, Verdict b);

CheckReport check_ax_self(const Scenario& s);
/// Parts "universal" (exact) and "existential" (declared photon pairs).
CheckReport check_ax_ph(const Scenario& s);
/// Frame coherence for all bodies, plus event agreement at collision
/// vertices and `samples` random points.
CheckReport check_ax_ev(const Scenario& s, std::uint64_t seed = 0, int samples = 100);
/// Decided exactly through the quadratic forms on the common simultaneity
/// directions of each pair of observers.
CheckReport check_ax_sim_dist(const Scenario& s);
CheckReport check_ax_thex(const Scenario& s);
CheckReport check_ax_forall_inecoll(const Scenario& s);
CheckReport check_ax_exists_inecoll(const Scenario& s);
/// Exact: the observer set is finite.
CheckReport check_ax_median(const Scenario& s);
CheckReport check_ax_speed(const Scenario& s);
CheckReport check_ax_center(const Scenario& s);
CheckReport check_ax_center_plus(const Scenario& s);
CheckReport check_cons_mass(const Scenario& s);
CheckReport check_cons_moment(const Scenario& s);
CheckReport check_cons_four_moment(const Scenario& s);

/// m0(b)^2 == (1 - v_k(b)^2) m_k(b)^2 for every observer and inertial body
/// with a rest mass. Throws DimensionTooLow when d < 3.
CheckReport verify_thm1(const Scenario& s);

/// Rebuilds the collision argument for the mass formula in exact
/// coordinates and checks each ratio identity along the way. Reports the
/// derived relativistic mass as value "m(v)".
CheckReport verify_thm1_construction(const Quantity& m0, const Quantity& v);

/// The four predicates AxCenterPlus, ConsMass & ConsMoment,
/// ConsMass & AxCenter and ConsFourMoment must agree. Vacuous without
/// AxSelf.
CheckReport verify_thm2_equivalence(const Scenario& s);

struct Thm2BatchResult {
    std::size_t scenarios = 0;
    std::size_t corrupted = 0;
    std::size_t all_true = 0;
    std::size_t all_false = 0;
    std::size_t vacuous = 0;                 // AxSelf failed
    std::vector<std::uint64_t> disagreeing;  // scenario indices, including errors
};

/// Scenario i comes from seed + i; odd indices are corrupted in direction
/// (i / 2) mod 3. Runs on `threads` workers (0 picks the hardware count);
/// the result does not depend on it.
Thm2BatchResult run_thm2_batch(std::uint64_t seed, std::size_t count, unsigned threads = 0);
Scenario thm2_batch_scenario(std::uint64_t seed, std::size_t index);

/// Names accepted by run_check, in report order.
const std::vector<std::string>& check_names();
/// Throws UnknownAxiomName.
CheckReport run_check(const std::string& name, const Scenario& s);

// ---- generators ----

struct BodySpec {
    Quantity m0;
    Vector velocity;  // d-1 components
};

struct CollisionSpec {
    BodySpec b;
    BodySpec c;
    Point vertex;
};

struct StandardModelParams {
    std::size_t dimension = 4;
    std::vector<Vector> observer_velocities;
    std::vector<BodySpec> free_bodies;
    std::vector<CollisionSpec> collisions;
    bool comoving_observers = true;  // one per massive body, so rest masses exist
    bool median_observers = true;    // one per collision
    bool photon = true;
    bool spectator = true;  // a body at rest away from every vertex
    bool demands = true;
};

/// Frames are boosts, masses follow the rest-mass formula and outgoing
/// bodies come from four-momentum conservation. Throws DimensionTooLow,
/// SpeedNotSubluminal, NonpositiveMass.
Scenario generate_standard_model(const StandardModelParams& params);

/// Seeded random parameters; `small` keeps the model cheap to check.
StandardModelParams random_model_params(std::uint64_t seed, std::size_t dimension, bool small = false);
Scenario generate_random_standard_model(std::uint64_t seed, std::size_t dimension, bool small = false);

enum class Corruption { OutgoingMass, OutgoingVelocity, Frame };
std::string to_string(Corruption c);

/// Perturbs exactly one thing: the outgoing body's masses, its velocity, or
/// one observer's frame (by a shear that keeps its own world-line fixed).
Scenario corrupt(const Scenario& s, Corruption kind, std::uint64_t seed);

/// Models of the dynamics axioms in which mass conservation (respectively
/// momentum conservation) fails.
Scenario generate_cons_mass_counterexample();
Scenario generate_cons_moment_counterexample();

}  // namespace reldyn
