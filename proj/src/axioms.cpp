/* SPDX-License-Identifier: Apache-2.0 */

#include <random>
#include <set>

#include "axioms_internal.hpp"

namespace reldyn {

namespace detail {

Analysis::Analysis(const Scenario& s) : s_(s), views_(s) {
    const std::size_t nk = observers(), nb = bodies();
    mass_.assign(nk, std::vector<Quantity>(nb));
    for (std::size_t k = 0; k < nk; ++k)
        for (std::size_t b = 0; b < nb; ++b)
            if (auto m = s.mass(observer_id(k), body_id(b))) mass_[k][b] = *m;
    inertial_.resize(nb);
    for (std::size_t b = 0; b < nb; ++b) inertial_[b] = !s.bodies[b].worldline.single_point();
    rest_.resize(nb);
    for (std::size_t b = 0; b < nb; ++b) {
        std::optional<Quantity> found;
        bool consistent = true;
        for (std::size_t k = 0; k < nk && consistent; ++k) {
            auto v = velocity(k, b);
            if (!v || !v->is_zero()) continue;
            if (found && *found != mass_[k][b]) consistent = false;
            found = mass_[k][b];
        }
        if (consistent) rest_[b] = found;
    }
    triples_.resize(nk);
    worldviews_.assign(nk, std::vector<std::optional<AffineMap>>(nk));
}

std::optional<Vector> Analysis::four_momentum(std::size_t k, std::size_t b) const {
    auto v = velocity(k, b);
    if (!v) return std::nullopt;
    return Vector::from_parts(mass_[k][b], mass_[k][b] * *v);
}

const std::vector<Analysis::Triple>& Analysis::triples(std::size_t k) const {
    if (!triples_[k]) {
        std::vector<Triple> out;
        for (const Inecoll& t : inecoll_triples(views_, k)) {
            Triple x{body_index(t.b), body_index(t.c), body_index(t.d), t.vertex};
            if (inertial_[x.b] && inertial_[x.c] && inertial_[x.d]) out.push_back(std::move(x));
        }
        triples_[k] = std::move(out);
    }
    return *triples_[k];
}

const AffineMap& Analysis::worldview(std::size_t k, std::size_t h) const {
    if (!worldviews_[k][h])
        worldviews_[k][h] = compose(s_.frames[h].map, inverse(s_.frames[k].map));
    return *worldviews_[k][h];
}

namespace {

using Values = std::vector<std::pair<std::string, std::string>>;

void confirm(CheckReport& r, Verdict v = Verdict::Holds) { r.verdict = combine(r.verdict, v); }

std::string ids(const Analysis& a, const Analysis::Triple& t) {
    return "(" + a.body_id(t.b) + ", " + a.body_id(t.c) + " : " + a.body_id(t.d) + ")";
}

Values triple_values(const Analysis& a, std::size_t k, const Analysis::Triple& t) {
    return {{"observer", a.observer_id(k)},
            {"b", a.body_id(t.b)},
            {"c", a.body_id(t.c)},
            {"d", a.body_id(t.d)},
            {"vertex", t.vertex.to_string()}};
}

/// Two distinct points of a world-line with at least two points.
std::pair<Point, Point> two_points(const Worldline& w) {
    Quantity s0 = w.lower() ? *w.lower() : w.upper() ? *w.upper() - 1 : Quantity(0);
    Quantity s1 = s0 + 1;
    if (w.upper() && s1 > *w.upper()) s1 = *w.upper();
    return {w.at(s0), w.at(s1)};
}

/// A point showing that w is not the time axis: on w and off the axis, or
/// on the axis and off w.
Point off_axis_witness(const Worldline& w) {
    const std::size_t d = w.dim();
    if (w.single_point()) {
        Point p = w.at(*w.lower());
        if (!p.space().is_zero()) return p;
        Point q(d);
        q[0] = p.time() + 1;
        return q;
    }
    auto [p, q] = two_points(w);
    if (!p.space().is_zero()) return p;
    if (!q.space().is_zero()) return q;
    Point axis(d);
    axis[0] = w.lower() ? *w.lower() - 1 : *w.upper() + 1;
    return axis;
}

bool on_time_axis(const Worldline& w) {
    return w.kind() == WorldlineKind::FullLine && !w.horizontal() && w.direction().space().is_zero() &&
           w.base().space().is_zero();
}

std::optional<std::size_t> find_observer(const Analysis& a, const std::string& id) {
    for (std::size_t k = 0; k < a.observers(); ++k)
        if (a.observer_id(k) == id) return k;
    return std::nullopt;
}

}  // namespace

CheckReport check_ax_self(const Analysis& a) {
    CheckReport r = make_report("AxSelf");
    for (std::size_t k = 0; k < a.observers(); ++k) {
        const Worldline& w = a.wl(k, a.body_index(a.observer_id(k)));
        if (on_time_axis(w)) {
            confirm(r);
            continue;
        }
        Point p = off_axis_witness(w);
        fail(r, a.observer_id(k) + "'s own world-line is not the time axis",
             {{"observer", a.observer_id(k)}, {"point", p.to_string()},
              {"on_worldline", w.contains(p) ? "true" : "false"}});
    }
    if (a.observers() == 0) r.trace.push_back("no observers");
    return r;
}

namespace {

bool center_collinear(const std::vector<PointSet>& sets) {
    if (sets.empty()) return true;
    CommonLine c = common_line(sets);
    return c.line || c.degenerate;
}

}  // namespace

CheckReport check_ax_center(const Analysis& a) {
    CheckReport r = make_report("AxCenter");
    for (std::size_t k = 0; k < a.observers(); ++k)
        for (const auto& t : a.triples(k)) {
            CenterLine cen = center_line(a.views(), k, {t.b, t.c});
            std::vector<PointSet> sets{a.wl(k, t.d)};
            if (!cen.empty()) sets.push_back(*cen.locus);
            if (center_collinear(sets)) {
                confirm(r);
                continue;
            }
            Values w = triple_values(a, k, t);
            w.push_back({"center_direction", cen.locus->direction().to_string()});
            w.push_back({"d_direction", a.wl(k, t.d).direction().to_string()});
            fail(r, "in " + a.observer_id(k) + "'s view " + ids(a, t) +
                        ": center-line of b, c does not continue along d", w);
        }
    return r;
}

CheckReport check_ax_center_plus(const Analysis& a) {
    CheckReport r = make_report("AxCenterPlus");
    for (std::size_t k = 0; k < a.observers(); ++k)
        for (const auto& t : a.triples(k))
            for (std::size_t x = 0; x < a.bodies(); ++x) {
                if (!a.inertial(x)) continue;
                CenterLine before = center_line(a.views(), k, {x, t.b, t.c});
                CenterLine after = center_line(a.views(), k, {x, t.d});
                std::vector<PointSet> sets;
                if (!before.empty()) sets.push_back(*before.locus);
                if (!after.empty()) sets.push_back(*after.locus);
                if (center_collinear(sets)) {
                    confirm(r);
                    continue;
                }
                Values w = triple_values(a, k, t);
                w.push_back({"a", a.body_id(x)});
                w.push_back({"center_abc_direction", before.locus->direction().to_string()});
                w.push_back({"center_ad_direction", after.locus->direction().to_string()});
                auto pb = before.locus->at_time(t.vertex.time());
                auto pa = after.locus->at_time(t.vertex.time());
                if (pb) w.push_back({"center_abc_at_vertex_time", pb->to_string()});
                if (pa) w.push_back({"center_ad_at_vertex_time", pa->to_string()});
                fail(r, "in " + a.observer_id(k) + "'s view with a = " + a.body_id(x) + ", " + ids(a, t) +
                            ": center-lines of (a, b, c) and (a, d) are not collinear", w);
            }
    return r;
}

CheckReport check_cons_mass(const Analysis& a) {
    CheckReport r = make_report("ConsMass");
    for (std::size_t k = 0; k < a.observers(); ++k)
        for (const auto& t : a.triples(k)) {
            Quantity in = a.mass(k, t.b) + a.mass(k, t.c);
            if (in == a.mass(k, t.d)) {
                confirm(r);
                continue;
            }
            Values w = triple_values(a, k, t);
            w.push_back({"m_b", a.mass(k, t.b).to_string()});
            w.push_back({"m_c", a.mass(k, t.c).to_string()});
            w.push_back({"m_d", a.mass(k, t.d).to_string()});
            fail(r, "in " + a.observer_id(k) + "'s view " + ids(a, t) + ": m(b) + m(c) = " + in.to_string() +
                        " but m(d) = " + a.mass(k, t.d).to_string(), w);
        }
    return r;
}

CheckReport check_cons_moment(const Analysis& a) {
    CheckReport r = make_report("ConsMoment");
    for (std::size_t k = 0; k < a.observers(); ++k)
        for (const auto& t : a.triples(k)) {
            auto pb = a.four_momentum(k, t.b), pc = a.four_momentum(k, t.c), pd = a.four_momentum(k, t.d);
            Values w = triple_values(a, k, t);
            if (!pb || !pc || !pd) {
                fail(r, "in " + a.observer_id(k) + "'s view " + ids(a, t) + ": a velocity is undefined", w);
                continue;
            }
            Vector in = pb->space() + pc->space();
            if (in == pd->space()) {
                confirm(r);
                continue;
            }
            w.push_back({"momentum_in", in.to_string()});
            w.push_back({"momentum_out", pd->space().to_string()});
            fail(r, "in " + a.observer_id(k) + "'s view " + ids(a, t) + ": momentum " + in.to_string() +
                        " becomes " + pd->space().to_string(), w);
        }
    return r;
}

CheckReport check_cons_four_moment(const Analysis& a) {
    CheckReport r = make_report("ConsFourMoment");
    for (std::size_t k = 0; k < a.observers(); ++k)
        for (const auto& t : a.triples(k)) {
            auto pb = a.four_momentum(k, t.b), pc = a.four_momentum(k, t.c), pd = a.four_momentum(k, t.d);
            Values w = triple_values(a, k, t);
            if (!pb || !pc || !pd) {
                fail(r, "in " + a.observer_id(k) + "'s view " + ids(a, t) + ": a velocity is undefined", w);
                continue;
            }
            Vector in = *pb + *pc;
            if (in == *pd) {
                confirm(r);
                continue;
            }
            w.push_back({"P_in", in.to_string()});
            w.push_back({"P_out", pd->to_string()});
            fail(r, "in " + a.observer_id(k) + "'s view " + ids(a, t) + ": four-momentum " + in.to_string() +
                        " becomes " + pd->to_string(), w);
        }
    return r;
}

}  // namespace detail

using detail::Analysis;
using detail::confirm;
using detail::fail;
using detail::make_report;
using detail::Values;

CheckReport check_ax_self(const Scenario& s) { return detail::check_ax_self(Analysis(s)); }
CheckReport check_ax_center(const Scenario& s) { return detail::check_ax_center(Analysis(s)); }
CheckReport check_ax_center_plus(const Scenario& s) { return detail::check_ax_center_plus(Analysis(s)); }
CheckReport check_cons_mass(const Scenario& s) { return detail::check_cons_mass(Analysis(s)); }
CheckReport check_cons_moment(const Scenario& s) { return detail::check_cons_moment(Analysis(s)); }
CheckReport check_cons_four_moment(const Scenario& s) { return detail::check_cons_four_moment(Analysis(s)); }

CheckReport check_ax_ph(const Scenario& s) {
    Analysis a(s);
    CheckReport universal = make_report("universal");
    for (std::size_t k = 0; k < a.observers(); ++k)
        for (std::size_t b = 0; b < a.bodies(); ++b) {
            if (s.bodies[b].kind != BodyKind::Photon) continue;
            const Worldline& w = a.wl(k, b);
            if (w.single_point()) {
                fail(universal, a.body_id(b) + " is a single event for " + a.observer_id(k),
                     {{"observer", a.observer_id(k)}, {"photon", a.body_id(b)}});
                continue;
            }
            if (mink_len2(w.direction()).is_zero()) {
                confirm(universal);
                continue;
            }
            auto [p, q] = detail::two_points(w);
            fail(universal, a.body_id(b) + " does not move at speed 1 for " + a.observer_id(k),
                 {{"observer", a.observer_id(k)}, {"photon", a.body_id(b)}, {"p", p.to_string()},
                  {"q", q.to_string()}});
        }

    CheckReport existential = make_report("existential");
    for (const PhotonPairWitness& pair : s.witnesses.photon_pairs) {
        auto k = detail::find_observer(a, pair.observer);
        Values w{{"observer", pair.observer}, {"p", pair.p.to_string()}, {"q", pair.q.to_string()}};
        if (!k) {
            fail(existential, "witness names unknown observer " + pair.observer, w);
            continue;
        }
        if (pair.p.dim() != s.dimension || pair.p == pair.q || !is_slope_one(pair.p, pair.q)) {
            existential.trace.push_back("skipped pair " + pair.p.to_string() + ", " + pair.q.to_string() +
                                        ": not two distinct points of slope 1");
            continue;
        }
        bool met = false;
        for (std::size_t b = 0; b < a.bodies() && !met; ++b)
            met = s.bodies[b].kind == BodyKind::Photon && a.wl(*k, b).contains(pair.p) &&
                  a.wl(*k, b).contains(pair.q);
        if (met)
            confirm(existential, Verdict::WitnessedOnly);
        else
            fail(existential, "no photon through " + pair.p.to_string() + " and " + pair.q.to_string() +
                                  " for " + pair.observer, w);
    }
    existential.trace.push_back("checked on declared photon pairs only");

    CheckReport r = make_report("AxPh");
    r.verdict = combine(universal.verdict, existential.verdict);
    if (universal.verdict == Verdict::Fails)
        r.values = universal.values;
    else if (existential.verdict == Verdict::Fails)
        r.values = existential.values;
    r.parts = {universal, existential};
    return r;
}

CheckReport check_ax_ev(const Scenario& s, std::uint64_t seed, int samples) {
    Analysis a(s);
    CheckReport r = make_report("AxEv");
    const std::size_t nk = a.observers();
    if (nk == 0) {
        r.trace.push_back("no observers");
        return r;
    }
    for (std::size_t k = 0; k < nk; ++k)
        for (std::size_t h = 0; h < nk; ++h) {
            if (k == h) continue;
            const AffineMap& w = a.worldview(k, h);
            if (compose(w, s.frames[k].map) != s.frames[h].map)
                fail(r, "frames of " + a.observer_id(k) + " and " + a.observer_id(h) + " are incoherent",
                     {{"k", a.observer_id(k)}, {"h", a.observer_id(h)}});
            for (std::size_t b = 0; b < a.bodies(); ++b)
                if (apply(w, a.wl(k, b)) != a.wl(h, b))
                    fail(r, "world-line of " + a.body_id(b) + " differs between " + a.observer_id(k) +
                                " and " + a.observer_id(h),
                         {{"k", a.observer_id(k)}, {"h", a.observer_id(h)}, {"body", a.body_id(b)}});
        }

    // Event agreement on world-frame points: the vertices, points on
    // world-lines and generic points.
    std::vector<Point> points;
    for (const CollisionEvent& c : s.collisions) points.push_back(c.vertex);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 7);
    std::uniform_int_distribution<std::size_t> body(0, a.bodies() == 0 ? 0 : a.bodies() - 1);
    for (int i = 0; i < samples; ++i) {
        if (i % 2 == 0 && a.bodies() > 0) {
            const Worldline& w = s.bodies[body(rng)].worldline;
            Quantity t = Quantity(num(rng), den(rng));
            if (w.lower() && t < *w.lower()) t = *w.lower();
            if (w.upper() && t > *w.upper()) t = *w.upper();
            points.push_back(w.at(t));
        } else {
            Point p(s.dimension);
            for (std::size_t j = 0; j < s.dimension; ++j) p[j] = Quantity(num(rng), den(rng));
            points.push_back(p);
        }
    }
    for (const Point& x : points) {
        std::set<std::string> first;
        for (std::size_t k = 0; k < nk; ++k) {
            Point p = s.frames[k].map.apply(x);
            std::set<std::string> events;
            for (std::size_t b = 0; b < a.bodies(); ++b)
                if (a.wl(k, b).contains(p)) events.insert(a.body_id(b));
            if (k == 0) {
                first = events;
                continue;
            }
            if (events == first) continue;
            fail(r, "observers " + a.observer_id(0) + " and " + a.observer_id(k) + " disagree at world point " +
                        x.to_string(),
                 {{"k", a.observer_id(0)},
                  {"h", a.observer_id(k)},
                  {"p", s.frames[0].map.apply(x).to_string()},
                  {"q", p.to_string()}});
        }
    }
    if (r.verdict != Verdict::Fails) {
        r.verdict = Verdict::Holds;
        r.trace.push_back("world-lines are frame images, so every point has a matching point; spot-checked on " +
                          std::to_string(points.size()) + " points");
    }
    return r;
}

CheckReport check_ax_sim_dist(const Scenario& s) {
    Analysis a(s);
    CheckReport r = make_report("AxSimDist");
    const std::size_t nk = a.observers(), d = s.dimension;
    for (std::size_t k = 0; k < nk; ++k) {
        confirm(r);  // k against itself
        for (std::size_t h = k + 1; h < nk; ++h) {
            const Matrix& l = a.worldview(k, h).linear;
            // Difference vectors u = q - p with u_t = 0 and (Lu)_t = 0.
            std::vector<Vector> basis;
            std::optional<std::size_t> pivot;
            for (std::size_t j = 1; j < d; ++j)
                if (!l(0, j).is_zero()) {
                    pivot = j;
                    break;
                }
            for (std::size_t j = 1; j < d; ++j) {
                if (pivot && j == *pivot) continue;
                Vector u(d);
                u[j] = 1;
                if (pivot) u[*pivot] = -l(0, j) / l(0, *pivot);
                basis.push_back(u);
            }
            std::vector<Vector> probes = basis;
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (std::size_t j = i + 1; j < basis.size(); ++j) probes.push_back(basis[i] + basis[j]);
            bool pair_ok = true;
            for (const Vector& u : probes) {
                Vector image = l * u;
                Quantity dk = euclid_len2(u.space()), dh = euclid_len2(image.space());
                if (dk == dh) continue;
                pair_ok = false;
                Point p(d);
                const AffineMap& w = a.worldview(k, h);
                fail(r, a.observer_id(k) + " and " + a.observer_id(h) + " disagree on a simultaneous distance",
                     {{"k", a.observer_id(k)},
                      {"h", a.observer_id(h)},
                      {"p", p.to_string()},
                      {"q", u.to_string()},
                      {"p'", w.apply(p).to_string()},
                      {"q'", w.apply(u).to_string()},
                      {"distance_k", sqrt(dk).to_string()},
                      {"distance_h", sqrt(dh).to_string()}});
                break;
            }
            if (pair_ok) confirm(r);
        }
    }
    if (nk == 0) r.trace.push_back("no observers");
    return r;
}

CheckReport check_ax_thex(const Scenario& s) {
    Analysis a(s);
    CheckReport r = make_report("AxThEx");
    for (const ThExDemand& demand : s.witnesses.thex) {
        Values w{{"observer", demand.observer}, {"p", demand.p.to_string()}, {"q", demand.q.to_string()}};
        auto k = detail::find_observer(a, demand.observer);
        if (!k) {
            fail(r, "demand names unknown observer " + demand.observer, w);
            continue;
        }
        Vector diff = demand.p - demand.q;
        if (diff.time().sign() <= 0 || euclid_len2(diff.space()) >= diff.time() * diff.time()) {
            r.trace.push_back("skipped demand " + demand.p.to_string() + ", " + demand.q.to_string() +
                              ": p - q is not future timelike");
            continue;
        }
        bool met = false;
        for (std::size_t h = 0; h < a.observers() && !met; ++h) {
            const Worldline& wh = a.wl(*k, a.body_index(a.observer_id(h)));
            if (!wh.contains(demand.p) || !wh.contains(demand.q)) continue;
            const AffineMap& map = a.worldview(*k, h);
            met = map.apply(demand.q).time() < map.apply(demand.p).time();
        }
        if (met)
            confirm(r, Verdict::WitnessedOnly);
        else
            fail(r, "no observer with forward clock through " + demand.p.to_string() + " and " +
                        demand.q.to_string() + " for " + demand.observer, w);
    }
    r.trace.push_back("checked on declared demands only");
    return r;
}

CheckReport check_ax_forall_inecoll(const Scenario& s) {
    Analysis a(s);
    CheckReport r = make_report("AxForallInecoll");
    for (const ForallInecollDemand& demand : s.witnesses.forall_inecoll) {
        Values w{{"observer", demand.observer}, {"m1", demand.m1.to_string()}, {"m2", demand.m2.to_string()},
                 {"v1", demand.v1.to_string()}, {"v2", demand.v2.to_string()}};
        auto k = detail::find_observer(a, demand.observer);
        if (!k) {
            fail(r, "demand names unknown observer " + demand.observer, w);
            continue;
        }
        if (demand.m1.sign() <= 0 || demand.m2.sign() <= 0 || euclid_len2(demand.v1) >= Quantity(1) ||
            euclid_len2(demand.v2) >= Quantity(1)) {
            r.trace.push_back("skipped a demand outside the axiom's hypothesis");
            continue;
        }
        auto matches = [&](std::size_t b, std::size_t c) {
            return a.rest_mass(b) && a.rest_mass(c) && *a.rest_mass(b) == demand.m1 &&
                   *a.rest_mass(c) == demand.m2 && a.velocity(*k, b) == demand.v1 &&
                   a.velocity(*k, c) == demand.v2;
        };
        bool met = false;
        for (const auto& t : a.triples(*k))
            if (matches(t.b, t.c) || matches(t.c, t.b)) {
                met = true;
                break;
            }
        if (met)
            confirm(r, Verdict::WitnessedOnly);
        else
            fail(r, "no collision for " + demand.observer + " with rest masses " + demand.m1.to_string() + ", " +
                        demand.m2.to_string() + " and velocities " + demand.v1.to_string() + ", " +
                        demand.v2.to_string(), w);
    }
    r.trace.push_back("checked on declared demands only");
    return r;
}

CheckReport check_ax_exists_inecoll(const Scenario& s) {
    Analysis a(s);
    CheckReport r = make_report("AxExistsInecoll");
    for (const ExistsInecollDemand& demand : s.witnesses.exists_inecoll) {
        Values w{{"observer", demand.observer}, {"body", demand.body}};
        auto k = detail::find_observer(a, demand.observer);
        if (!k || !s.has_body(demand.body)) {
            fail(r, "demand names an unknown observer or body", w);
            continue;
        }
        std::size_t x = a.body_index(demand.body);
        auto vx = a.velocity(*k, x);
        if (!a.inertial(x) || !a.rest_mass(x) || !vx) {
            r.trace.push_back("demand for " + demand.body + " holds trivially: it has no rest mass");
            confirm(r, Verdict::WitnessedOnly);
            continue;
        }
        const Quantity& m0 = *a.rest_mass(x);
        Quantity speed2 = euclid_len2(*vx);
        auto matches = [&](std::size_t b, std::size_t c) {
            auto vb = a.velocity(*k, b), vc = a.velocity(*k, c);
            return a.rest_mass(b) && a.rest_mass(c) && *a.rest_mass(b) == m0 && *a.rest_mass(c) == m0 && vb &&
                   vc && euclid_len2(*vb) == speed2 && vc->is_zero();
        };
        bool met = false;
        for (const auto& t : a.triples(*k))
            if (matches(t.b, t.c) || matches(t.c, t.b)) {
                met = true;
                break;
            }
        if (met)
            confirm(r, Verdict::WitnessedOnly);
        else
            fail(r, "no collision for " + demand.observer + " matching " + demand.body, w);
    }
    r.trace.push_back("checked on declared demands only");
    return r;
}

CheckReport check_ax_median(const Scenario& s) {
    Analysis a(s);
    CheckReport r = make_report("AxMedian");
    for (std::size_t k = 0; k < a.observers(); ++k)
        for (const auto& t : a.triples(k)) {
            bool met = false;
            for (std::size_t h = 0; h < a.observers() && !met; ++h) {
                auto vb = a.velocity(h, t.b), vc = a.velocity(h, t.c);
                if (!vb || !vc || *vb != -*vc) continue;
                for (const auto& th : a.triples(h))
                    if (th.b == t.b && th.c == t.c && th.d == t.d) met = true;
            }
            if (met) {
                confirm(r);
                continue;
            }
            Vector vb = *a.velocity(k, t.b), vc = *a.velocity(k, t.c);
            Values w = detail::triple_values(a, k, t);
            if (vb != vc || vb.is_zero()) w.push_back({"missing_observer_velocity", median_velocity(vb, vc).to_string()});
            fail(r, "no observer sees " + a.body_id(t.b) + " and " + a.body_id(t.c) + " with opposite velocities",
                 w);
        }
    return r;
}

CheckReport check_ax_speed(const Scenario& s) {
    Analysis a(s);
    CheckReport r = make_report("AxSpeed");
    std::vector<std::size_t> massive;
    for (std::size_t b = 0; b < a.bodies(); ++b)
        if (a.inertial(b) && a.rest_mass(b)) massive.push_back(b);
    for (std::size_t i = 0; i < massive.size(); ++i)
        for (std::size_t j = i + 1; j < massive.size(); ++j) {
            std::size_t b = massive[i], c = massive[j];
            if (*a.rest_mass(b) != *a.rest_mass(c)) continue;
            for (std::size_t k = 0; k < a.observers(); ++k) {
                auto vb = a.velocity(k, b), vc = a.velocity(k, c);
                if (!vb || !vc || euclid_len2(*vb) != euclid_len2(*vc)) continue;
                if (a.mass(k, b) == a.mass(k, c)) {
                    confirm(r);
                    continue;
                }
                fail(r, a.body_id(b) + " and " + a.body_id(c) + " share rest mass and speed but not mass for " +
                            a.observer_id(k),
                     {{"observer", a.observer_id(k)},
                      {"b", a.body_id(b)},
                      {"c", a.body_id(c)},
                      {"rest_mass", a.rest_mass(b)->to_string()},
                      {"speed", sqrt(euclid_len2(*vb)).to_string()},
                      {"m_b", a.mass(k, b).to_string()},
                      {"m_c", a.mass(k, c).to_string()}});
            }
        }
    if (r.verdict == Verdict::VacuouslyHolds) r.trace.push_back("no two bodies share rest mass and speed");
    return r;
}

}  // namespace reldyn
