/* SPDX-License-Identifier: Apache-2.0 */

#include <algorithm>
#include <atomic>
#include <thread>

#include "axioms_internal.hpp"

namespace reldyn {

using detail::Analysis;
using detail::fail;
using detail::make_report;

CheckReport verify_thm1(const Scenario& s) {
    if (s.dimension < 3) throw DimensionTooLow(s.dimension);
    Analysis a(s);
    CheckReport r = make_report("Thm1");
    for (std::size_t b = 0; b < a.bodies(); ++b) {
        if (!a.inertial(b) || !a.rest_mass(b)) {
            r.trace.push_back("skipped " + a.body_id(b) + ": no rest mass");
            continue;
        }
        const Quantity& m0 = *a.rest_mass(b);
        for (std::size_t k = 0; k < a.observers(); ++k) {
            auto v = a.velocity(k, b);
            if (!v) continue;
            // Squared form; both sides are positive.
            Quantity v2 = euclid_len2(*v);
            Quantity rhs = (Quantity(1) - v2) * a.mass(k, b) * a.mass(k, b);
            if (m0 * m0 == rhs) {
                r.verdict = combine(r.verdict, Verdict::Holds);
                continue;
            }
            fail(r, "m0(" + a.body_id(b) + ") != sqrt(1 - v^2) m for " + a.observer_id(k),
                 {{"observer", a.observer_id(k)},
                  {"body", a.body_id(b)},
                  {"m0", m0.to_string()},
                  {"speed", sqrt(v2).to_string()},
                  {"m_k", a.mass(k, b).to_string()},
                  {"sqrt(1 - v^2) m_k", sqrt(rhs).to_string()}});
        }
    }
    return r;
}

namespace {

Quantity dist2(const Point& p, const Point& q) { return euclid_len2(p - q); }

void step(CheckReport& r, const std::string& name, bool ok, const std::string& statement) {
    CheckReport part = make_report(name);
    part.verdict = ok ? Verdict::Holds : Verdict::Fails;
    part.trace.push_back(statement);
    r.parts.push_back(part);
    if (!ok) fail(r, name + ": " + statement);
}

}  // namespace

CheckReport verify_thm1_construction(const Quantity& m0, const Quantity& v) {
    CheckReport r = make_report("Thm1Construction");
    if (m0.sign() <= 0) throw NonpositiveMass();
    if (v.sign() < 0 || v >= Quantity(1)) throw SpeedNotSubluminal();
    r.values.push_back({"m0", m0.to_string()});
    r.values.push_back({"v", v.to_string()});
    if (v.is_zero()) {
        r.verdict = Verdict::Holds;
        r.values.push_back({"m(v)", m0.to_string()});
        r.trace.push_back("v = 0: construction skipped, m(0) = m0 by the definition of rest mass");
        return r;
    }

    // Observer k's view in d = 3: b moves with velocity (v, 0), c rests, both
    // end at A, and C is where k's clock shows -1.
    const Quantity one(1);
    const Quantity dilation = sqrt(one - v * v);
    const Quantity mv = m0 / dilation;
    const Point A{0, 0, 0};
    const Point B{-1, -v, 0};
    const Point C{-1, 0, 0};
    const Point D = (mv * B + m0 * C) / (mv + m0);
    const Vector vb{v, 0}, vc{0, 0};

    // Mass ratio, squared: m0^2 |CD|^2 = |BD|^2 m(v)^2.
    step(r, "mass-ratio", m0 * m0 * dist2(C, D) == dist2(B, D) * mv * mv, "m0 = |BD|/|CD| * m(v)");

    // k' is co-moving with b and its clock shows 0 at A.
    PoincareMap k_prime = boost_for_velocity(vb);
    step(r, "clock-normalization", k_prime.apply(A).time().is_zero() && k_prime.apply(B).time() == -dilation,
         "clocks of k and k' show 0 at A, k' shows -sqrt(1 - v^2) at B");

    PoincareMap h = median_observer_boost(vb, vc);
    const Point A1 = h.apply(A), B1 = h.apply(B), C1 = h.apply(C), D1 = h.apply(D);
    r.values.push_back({"h velocity", median_velocity(vb, vc).to_string()});

    step(r, "affine-ratio", dist2(B, D) * dist2(C1, D1) == dist2(B1, D1) * dist2(C, D),
         "|BD|/|CD| = |B'D'|/|C'D'|");

    step(r, "vertical-line", D1.space() == A1.space(), "D' lies on the time-parallel line through A'");

    // E' = A' + s (D' - A') = C' + u (B' - A'), solved on the first two
    // coordinates by Cramer's rule.
    const Vector e = D1 - A1, f = B1 - A1, g = C1 - A1;
    const Quantity det = e[0] * (-f[1]) - (-f[0]) * e[1];
    const Quantity s = (g[0] * (-f[1]) - (-f[0]) * g[1]) / det;
    const Point E1 = A1 + s * e;

    step(r, "similar-triangles", dist2(B1, D1) * dist2(E1, C1) == dist2(A1, B1) * dist2(C1, D1),
         "|B'D'|/|C'D'| = |A'B'|/|E'C'|");
    step(r, "isosceles", dist2(E1, C1) == dist2(A1, C1), "|E'C'| = |A'C'|");
    step(r, "median-ratio", dist2(B1, D1) * dist2(A1, C1) == dist2(A1, B1) * dist2(C1, D1),
         "|B'D'|/|C'D'| = |A'B'|/|A'C'|");
    step(r, "dilation-ratio", dist2(A1, B1) == (one - v * v) * dist2(A1, C1), "|A'B'|/|A'C'| = sqrt(1 - v^2)");

    r.values.push_back({"m(v)", mv.to_string()});
    if (r.verdict != Verdict::Fails) {
        r.verdict = Verdict::Holds;
        r.trace.push_back("m0 = sqrt(1 - v^2) * m(v) with m(v) = " + mv.to_string() + " ~ " + mv.approx(6));
    }
    return r;
}

CheckReport verify_thm2_equivalence(const Scenario& s) {
    CheckReport r = make_report("Thm2");
    Analysis a(s);
    CheckReport self = detail::check_ax_self(a);
    if (self.verdict == Verdict::Fails) {
        r.trace.push_back("AxSelf fails, so the equivalence is not claimed");
        return r;
    }
    const bool center_plus = detail::check_ax_center_plus(a).ok();
    const bool mass = detail::check_cons_mass(a).ok();
    const bool moment = detail::check_cons_moment(a).ok();
    const bool center = detail::check_ax_center(a).ok();
    const bool four = detail::check_cons_four_moment(a).ok();

    const std::pair<const char*, bool> items[] = {
        {"AxCenterPlus", center_plus},
        {"ConsMass & ConsMoment", mass && moment},
        {"ConsMass & AxCenter", mass && center},
        {"ConsFourMoment", four},
    };
    bool agree = true;
    for (const auto& [name, value] : items) {
        CheckReport part = make_report(name);
        part.verdict = value ? Verdict::Holds : Verdict::Fails;
        r.parts.push_back(part);
        r.values.push_back({name, value ? "true" : "false"});
        agree = agree && value == items[0].second;
    }
    r.trace.push_back("ConsFourMoment is checked alongside the other three predicates");
    if (agree)
        r.verdict = Verdict::Holds;
    else
        fail(r, "the four predicates disagree", r.values);
    return r;
}

Scenario thm2_batch_scenario(std::uint64_t seed, std::size_t index) {
    static const Corruption kinds[] = {Corruption::OutgoingMass, Corruption::OutgoingVelocity, Corruption::Frame};
    Scenario s = generate_random_standard_model(seed + index, 3 + index % 2, true);
    if (index % 2 == 1) s = corrupt(s, kinds[(index / 2) % 3], seed + index);
    return s;
}

Thm2BatchResult run_thm2_batch(std::uint64_t seed, std::size_t count, unsigned threads) {
    enum Outcome : char { AllTrue, AllFalse, Vacuous, Disagree };
    std::vector<Outcome> outcomes(count);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                CheckReport r = verify_thm2_equivalence(thm2_batch_scenario(seed, i));
                if (!r.ok())
                    outcomes[i] = Disagree;
                else if (r.parts.empty())
                    outcomes[i] = Vacuous;
                else
                    outcomes[i] = r.parts.front().verdict == Verdict::Holds ? AllTrue : AllFalse;
            } catch (const Error&) {
                outcomes[i] = Disagree;
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();

    Thm2BatchResult out;
    out.scenarios = count;
    out.corrupted = count / 2;
    for (std::size_t i = 0; i < count; ++i) {
        if (outcomes[i] == AllTrue) ++out.all_true;
        if (outcomes[i] == AllFalse) ++out.all_false;
        if (outcomes[i] == Vacuous) ++out.vacuous;
        if (outcomes[i] == Disagree) out.disagreeing.push_back(i);
    }
    return out;
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{
        "AxSelf",      "AxPh",         "AxEv",     "AxSimDist",      "AxThEx",    "AxForallInecoll",
        "AxExistsInecoll", "AxMedian", "AxSpeed",  "AxCenter",       "AxCenterPlus", "ConsMass",
        "ConsMoment",  "ConsFourMoment", "Thm1",   "Thm2",
    };
    return names;
}

CheckReport run_check(const std::string& name, const Scenario& s) {
    if (name == "AxSelf") return check_ax_self(s);
    if (name == "AxPh") return check_ax_ph(s);
    if (name == "AxEv") return check_ax_ev(s);
    if (name == "AxSimDist") return check_ax_sim_dist(s);
    if (name == "AxThEx") return check_ax_thex(s);
    if (name == "AxForallInecoll") return check_ax_forall_inecoll(s);
    if (name == "AxExistsInecoll") return check_ax_exists_inecoll(s);
    if (name == "AxMedian") return check_ax_median(s);
    if (name == "AxSpeed") return check_ax_speed(s);
    if (name == "AxCenter") return check_ax_center(s);
    if (name == "AxCenterPlus") return check_ax_center_plus(s);
    if (name == "ConsMass") return check_cons_mass(s);
    if (name == "ConsMoment") return check_cons_moment(s);
    if (name == "ConsFourMoment") return check_cons_four_moment(s);
    if (name == "Thm1") return verify_thm1(s);
    if (name == "Thm2") return verify_thm2_equivalence(s);
    throw UnknownAxiomName(name);
}

}  // namespace reldyn
