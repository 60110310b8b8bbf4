/* SPDX-License-Identifier: Apache-2.0 */

#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "reldyn/errors.hpp"
#include "reldyn/scenario.hpp"
#include "sample_scenario.hpp"

using namespace reldyn;
using reldyn::fixtures::kSample;

namespace {

Quantity q(const char* text) { return Quantity::parse(text); }


Scenario sample() { return parse_scenario(kSample); }

bool has_violation(const std::vector<Violation>& vs, const std::string& kind) {
    for (const Violation& v : vs)
        if (v.kind == kind) return true;
    return false;
}

}  // namespace

TEST(Scenario, SampleIsValid) {
    Scenario s = sample();
    EXPECT_EQ(s.dimension, 4u);
    EXPECT_EQ(s.bodies.size(), 6u);
    auto vs = validate_frame(s);
    for (const Violation& v : vs) ADD_FAILURE() << v.to_string();
}

TEST(Scenario, WorldlinesPerObserver) {
    Scenario s = sample();
    EXPECT_EQ(wl(s, "k", "k"), Worldline::line(Point{0, 0, 0, 0}, Vector{1, 0, 0, 0}));
    EXPECT_EQ(wl(s, "h", "h"), Worldline::line(Point{0, 0, 0, 0}, Vector{1, 0, 0, 0}));
    EXPECT_EQ(wl(s, "k", "b"), s.body("b").worldline);
    Worldline b_in_h = wl(s, "h", "b");
    EXPECT_TRUE(b_in_h.direction().space().is_zero());
    EXPECT_THROW(wl(s, "nobody", "b"), UnknownObserver);
    EXPECT_THROW(wl(s, "k", "nobody"), UnknownId);
}

TEST(Scenario, Events) {
    Scenario s = sample();
    EXPECT_TRUE(ev(s, "k", Point{1, 7, 7, 7}).empty());
    EXPECT_EQ(ev(s, "k", Point{5, 3, 0, 0}), (std::set<std::string>{"b", "c", "d", "h"}));

    std::mt19937 rng(1);
    std::uniform_int_distribution<int> n(-8, 8);
    AffineMap w = worldview_transform(s, "k", "h");
    for (int i = 0; i < 100; ++i) {
        Point p{n(rng), Quantity(n(rng), 5), n(rng), 0};
        EXPECT_EQ(ev(s, "k", p), ev(s, "h", w.apply(p)));
    }
    // points that do lie on world-lines
    for (const Body& b : s.bodies) {
        Point p = wl(s, "k", b.id).at(Quantity(n(rng), 3));
        if (!wl(s, "k", b.id).contains(p)) continue;
        EXPECT_TRUE(ev(s, "k", p).count(b.id));
        EXPECT_EQ(ev(s, "k", p), ev(s, "h", w.apply(p)));
    }
}

TEST(Scenario, Location) {
    Scenario s = sample();
    EXPECT_EQ(*loc(s, "k", "c", 5), (Point{5, 3, 0, 0}));
    EXPECT_EQ(*loc(s, "k", "b", 5), (Point{5, 3, 0, 0}));
    EXPECT_FALSE(loc(s, "k", "b", 6));
    s.bodies.push_back({"bar", BodyKind::Plain, Worldline::line(Point{1, 0, 0, 0}, Vector{0, 1, 0, 0})});
    EXPECT_FALSE(loc(s, "k", "bar", 1));
}

TEST(Scenario, Velocity) {
    Scenario s = sample();
    EXPECT_TRUE(velocity(s, "k", "k")->is_zero());
    EXPECT_EQ(*velocity(s, "k", "b"), (Vector{q("3/5"), 0, 0}));
    EXPECT_EQ(*speed(s, "k", "b"), q("3/5"));
    EXPECT_EQ(*speed(s, "k", "ph"), Quantity(1));
    EXPECT_EQ(*speed(s, "h", "c"), q("3/5"));
}

TEST(Scenario, RestMass) {
    Scenario s = sample();
    EXPECT_FALSE(rest_mass(s, "ph"));
    EXPECT_EQ(*rest_mass(s, "c"), Quantity(1));
    EXPECT_EQ(*rest_mass(s, "b"), Quantity(1));
    EXPECT_FALSE(rest_mass(s, "d"));  // no observer co-moves with d

    // a second observer at rest with c that disagrees on its mass
    s.bodies.push_back({"k2", BodyKind::Observer, Worldline::line(Point{0, 0, 0, 0}, Vector{1, 0, 0, 0})});
    s.frames.push_back({"k2", AffineMap::identity(4)});
    for (const Body& b : s.bodies) s.set_mass("k2", b.id, 1);
    s.set_mass("k2", "c", 2);
    EXPECT_FALSE(rest_mass(s, "c"));
}

TEST(Scenario, WorldviewTransform) {
    Scenario s = sample();
    EXPECT_EQ(worldview_transform(s, "k", "k"), AffineMap::identity(4));
    EXPECT_EQ(inverse(worldview_transform(s, "k", "h")), worldview_transform(s, "h", "k"));
    EXPECT_TRUE(is_poincare(worldview_transform(s, "h", "k")));
    for (const Body& b : s.bodies)
        EXPECT_EQ(wl(s, "h", b.id), apply(worldview_transform(s, "k", "h"), wl(s, "k", b.id)));
}

TEST(Scenario, Violations) {
    Scenario s = sample();
    s.set_mass("k", "b", 0);
    EXPECT_EQ(validate_frame(s), (std::vector<Violation>{{"MassNotPositive", "k", "b", "0"}}));

    s = sample();
    s.masses.erase({"h", "c"});
    EXPECT_TRUE(has_violation(validate_frame(s), "MassRelNotTotal"));

    s = sample();
    s.frames[1].map = AffineMap::identity(4);  // h's own world-line is no longer the time axis
    auto vs = validate_frame(s);
    ASSERT_TRUE(has_violation(vs, "AxSelfViolation"));

    s = sample();
    s.frames[0].map = AffineMap::scaling(4, 0);
    EXPECT_TRUE(has_violation(validate_frame(s), "SingularFrame"));

    s = sample();
    s.bodies[5].worldline = Worldline::line(Point{0, 0, 0, 0}, Vector{1, q("1/2"), 0, 0});
    EXPECT_TRUE(has_violation(validate_frame(s), "PhotonNotLightlike"));
}

TEST(Scenario, RoundTrip) {
    Scenario s = sample();
    s.witnesses.thex.push_back({"k", Point{2, 0, 0, 0}, Point{1, 0, 0, 0}});
    s.witnesses.forall_inecoll.push_back({"k", 1, 2, Vector{q("1/2"), 0, 0}, Vector{0, 0, 0}});
    s.witnesses.exists_inecoll.push_back({"h", "b"});
    s.set_mass("h", "d", sqrt(q("2")) + sqrt(q("3")));
    std::string text = write_scenario(s);
    EXPECT_EQ(parse_scenario(text), s);
    EXPECT_EQ(write_scenario(parse_scenario(text)), text);

    auto path = std::filesystem::temp_directory_path() / "reldyn_roundtrip.yaml";
    save_scenario(s, path);
    EXPECT_EQ(load_scenario(path), s);
    std::filesystem::remove(path);
}

TEST(Scenario, ParseErrors) {
    std::string text = kSample;
    std::string bad = text;
    bad.replace(bad.find("value: 5/4"), 10, "value: \"sqrt(-1)\"");
    try {
        parse_scenario(bad);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_GT(e.line(), 0u);
    }
    EXPECT_THROW(parse_scenario("dimension: [1\n"), ParseError);
    EXPECT_THROW(parse_scenario("bodies: []\n"), ParseError);
    bad = text;
    bad.replace(bad.find("kind: photon"), 12, "kind: tachyon");
    EXPECT_THROW(parse_scenario(bad), ParseError);
}

TEST(Scenario, LoadRejectsMissingMass) {
    std::string text = kSample;
    const std::string line = "  - {observer: h, body: ph, value: 1}\n";
    text.erase(text.find(line), line.size());
    auto path = std::filesystem::temp_directory_path() / "reldyn_missing.yaml";
    {
        std::ofstream(path) << text;
    }
    try {
        load_scenario(path);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        ASSERT_EQ(e.violations().size(), 1u);
        EXPECT_EQ(e.violations()[0].kind, "MassRelNotTotal");
        EXPECT_EQ(e.violations()[0].body, "ph");
    }
    std::filesystem::remove(path);
}
