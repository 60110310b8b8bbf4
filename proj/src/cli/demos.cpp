/* SPDX-License-Identifier: Apache-2.0 */

#include "reldyn/cli.hpp"
#include "reldyn/errors.hpp"

namespace reldyn::cli {

namespace {

std::string show(const Quantity& q) {
    if (q.is_rational() && q.rational().get_den() == 1) return q.to_string();
    return q.to_string() + " (~" + q.approx(6) + ")";
}

std::string show(const Vector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) out += (i ? ", " : "") + show(v[i]);
    return out + ")";
}

DemoResult thm1(const DemoOptions& o) {
    DemoResult r;
    r.parameters = {{"seed", std::to_string(o.seed)}, {"dimension", "4"}};
    Scenario s = generate_random_standard_model(o.seed, 4);
    CheckReport report = verify_thm1(s);
    r.narrative.push_back("rest-mass formula m0 = sqrt(1 - v^2) * m_k on a random standard model");
    const std::string k = s.observers().front();
    for (const Body& b : s.bodies) {
        auto m0 = rest_mass(s, b.id);
        auto v = speed(s, k, b.id);
        if (!m0 || !v || b.kind == BodyKind::Observer) continue;
        r.narrative.push_back(b.id + ": m0 = " + show(*m0) + ", speed for " + k + " = " + show(*v) +
                              ", m = " + show(*s.mass(k, b.id)));
    }
    r.confirmed = report.verdict == Verdict::Holds;
    r.reports.push_back(report);
    return r;
}

DemoResult thm1_construction(const DemoOptions& o) {
    DemoResult r;
    Quantity m0 = o.m0.value_or(Quantity(1)), v = o.v.value_or(Quantity(3, 5));
    r.parameters = {{"m0", m0.to_string()}, {"v", v.to_string()}};
    CheckReport report = verify_thm1_construction(m0, v);
    r.narrative.push_back("geometric construction behind the rest-mass formula, checked step by step");
    for (const CheckReport& p : report.parts)
        r.narrative.push_back(p.name + ": " + p.trace.front() + " -> " + to_string(p.verdict));
    for (const auto& [key, value] : report.values)
        if (key == "m(v)") r.narrative.push_back("m(v) = " + show(Quantity::parse(value)));
    r.confirmed = report.verdict == Verdict::Holds;
    r.reports.push_back(report);
    return r;
}

DemoResult thm2_batch(const DemoOptions& o) {
    DemoResult r;
    r.parameters = {{"seed", std::to_string(o.seed)}, {"batch", std::to_string(o.batch)}};
    Thm2BatchResult b = run_thm2_batch(o.seed, o.batch);
    r.narrative.push_back("AxCenterPlus, ConsMass & ConsMoment, ConsMass & AxCenter and ConsFourMoment must agree");
    r.narrative.push_back(std::to_string(b.scenarios) + " scenarios, " + std::to_string(b.corrupted) +
                          " of them corrupted");
    r.narrative.push_back("all four true: " + std::to_string(b.all_true) +
                          ", all four false: " + std::to_string(b.all_false) +
                          ", AxSelf fails: " + std::to_string(b.vacuous) +
                          ", disagreements: " + std::to_string(b.disagreeing.size()));
    CheckReport report;
    report.name = "Thm2Batch";
    report.verdict = b.disagreeing.empty() ? Verdict::Holds : Verdict::Fails;
    report.values = {{"scenarios", std::to_string(b.scenarios)},
                     {"all_true", std::to_string(b.all_true)},
                     {"all_false", std::to_string(b.all_false)},
                     {"vacuous", std::to_string(b.vacuous)},
                     {"disagreements", std::to_string(b.disagreeing.size())}};
    for (std::uint64_t i : b.disagreeing) report.trace.push_back("disagreement at index " + std::to_string(i));
    r.confirmed = b.disagreeing.empty();
    r.reports.push_back(report);
    return r;
}

DemoResult emc2(const DemoOptions& o) {
    DemoResult r;
    Quantity m0 = o.m0.value_or(Quantity(1)), v = o.v.value_or(Quantity(3, 5));
    r.parameters = {{"m0", m0.to_string()}, {"v", v.to_string()}};
    Vector vb{v, 0}, vc{-v, 0};
    CollisionResult d = resolve_collision(m0, vb, m0, vc);
    Quantity mb = rel_mass_from_rest(m0, v);
    r.narrative.push_back("two bodies of rest mass " + show(m0) + " meet head-on at speeds " + show(v) +
                          " and stick together");
    r.narrative.push_back("m_k(b1) = m_k(b2) = " + show(mb));
    r.narrative.push_back("the merged body rests, so m0(b1+b2) = m_k(b1) + m_k(b2) = " + show(d.rest_mass));
    r.narrative.push_back("m0(b1) + m0(b2) = " + show(m0 + m0));
    r.narrative.push_back("rest mass created: " + show(d.rest_mass - (m0 + m0)));

    // the same collision as a model, so the conservation checks can speak
    StandardModelParams p;
    p.dimension = 3;
    p.collisions.push_back({{m0, vb}, {m0, vc}, Point{0, 0, 0}});
    Scenario s = generate_standard_model(p);
    r.reports.push_back(check_cons_four_moment(s));

    CheckReport report;
    report.name = "MassCreation";
    report.values = {{"m_k(b1)", mb.to_string()},
                     {"combined rest mass", d.rest_mass.to_string()},
                     {"sum of rest masses", (m0 + m0).to_string()}};
    bool created = d.rest_mass == mb + mb && d.rest_mass > m0 + m0 && d.velocity.is_zero();
    report.verdict = created ? Verdict::Holds : Verdict::Fails;
    r.reports.insert(r.reports.begin(), report);
    r.confirmed = created && r.reports.back().verdict == Verdict::Holds;
    return r;
}

DemoResult massdepend(const DemoOptions&) {
    DemoResult r;
    Quantity m0(1);
    Vector vb{Quantity(3, 5)}, vc{0};
    r.parameters = {{"m0b", "1"}, {"m0c", "1"}, {"vb", "3/5"}, {"vc", "0"}};
    MassRatios m = mass_dependence_witness(m0, m0, vb, vc);
    r.narrative.push_back("equal rest masses, b at 3/5 and c at rest: the mass ratio depends on the observer");
    r.narrative.push_back("k: m_k(b) / m_k(c) = " + show(m.ratio_k));
    r.narrative.push_back("h, moving at " + show(m.h_velocity) + ": m_h(b) / m_h(c) = " + show(m.ratio_h));
    CheckReport report;
    report.name = "MassDependence";
    report.values = {{"ratio_k", m.ratio_k.to_string()},
                     {"ratio_h", m.ratio_h.to_string()},
                     {"h_velocity", m.h_velocity.to_string()}};
    report.verdict = m.ratio_k != m.ratio_h ? Verdict::Holds : Verdict::Fails;
    r.confirmed = report.verdict == Verdict::Holds;
    r.reports.push_back(report);
    return r;
}

DemoResult counterexample(const DemoOptions&) {
    DemoResult r;
    r.parameters = {{"m0", "1"}, {"vb", "3/5"}, {"vc", "0"}, {"mass scale", "2 and 3/2"}};
    static const char* kept[] = {"AxSelf",          "AxPh",          "AxEv",     "AxSimDist",
                                 "AxThEx",          "AxForallInecoll", "AxExistsInecoll", "AxMedian",
                                 "AxSpeed",         "AxCenter"};
    r.confirmed = true;
    const std::pair<const char*, Scenario> models[] = {
        {"ConsMass", generate_cons_mass_counterexample()},
        {"ConsMoment", generate_cons_moment_counterexample()},
    };
    for (const auto& [target, s] : models) {
        bool others = true;
        for (const char* name : kept) {
            CheckReport c = run_check(name, s);
            others = others && c.ok();
            r.reports.push_back(c);
        }
        CheckReport broken = run_check(target, s);
        r.reports.push_back(broken);
        r.narrative.push_back(std::string("outgoing masses rescaled: the dynamics axioms ") +
                              (others ? "all pass" : "do not all pass") + ", " + target + " " +
                              (broken.ok() ? "holds" : "fails"));
        r.confirmed = r.confirmed && others && !broken.ok();
    }
    r.narrative.push_back("so neither conservation law follows from the dynamics axioms");
    return r;
}

}  // namespace

const std::vector<std::string>& demo_names() {
    static const std::vector<std::string> names{"thm1",  "thm1-construction", "thm2-batch",
                                                "emc2",  "massdepend",        "counterexample"};
    return names;
}

DemoResult run_demo(const std::string& name, const DemoOptions& options) {
    if (name == "thm1") return thm1(options);
    if (name == "thm1-construction") return thm1_construction(options);
    if (name == "thm2-batch") return thm2_batch(options);
    if (name == "emc2") return emc2(options);
    if (name == "massdepend") return massdepend(options);
    if (name == "counterexample") return counterexample(options);
    throw ParseError("unknown demo '" + name + "'");
}

}  // namespace reldyn::cli
