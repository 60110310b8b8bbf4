/* SPDX-License-Identifier: Apache-2.0 */

// Acceptance run: one PASS/FAIL line per criterion, exit code 1 if any fails.
// Everything runs on the exact backend.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include <unistd.h>

#include "reldyn/cli.hpp"

using namespace reldyn;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Quantity rational() {
        long den = integer(1, 12);
        return Quantity(integer(-30, 30), den);
    }

    /// A rational, or a rational plus a multiple of a small square root.
    Quantity element() {
        static const long roots[] = {2, 3, 5, 7};
        Quantity x = rational();
        if (integer(0, 2) > 0) x += rational() * sqrt(Quantity(roots[integer(0, 3)]));
        return x;
    }

    Quantity positive() {
        Quantity x = element();
        return x.sign() > 0 ? x : (x.is_zero() ? Quantity(1, 3) : -x);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

Outcome field_identities() {
    Outcome r;
    Draw g(101);
    for (int i = 0; i < 10000 && r.ok; ++i) {
        Quantity a = g.element(), b = g.element(), c = g.element();
        std::string at = " at draw " + std::to_string(i);
        switch (i % 4) {
        case 0: r.require((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c), "associativity" + at); break;
        case 1: r.require(a * (b + c) == a * b + a * c, "distributivity" + at); break;
        case 2: {
            // Radicands are positive rationals or squares of field elements, so
            // the number of square roots adjoined to the tower stays bounded.
            Quantity q = g.element();
            Quantity p = g.integer(0, 1) ? abs(g.rational()) + Quantity(1, 7) : q * q;
            if (p.is_zero()) p = 2;
            Quantity s = sqrt(p);
            r.require(s * s == p && s.sign() > 0, "sqrt(a)^2 = a" + at);
            break;
        }
        default: {
            if (a == b) break;
            if (a > b) std::swap(a, b);
            Quantity p = g.positive();
            r.require(a + c < b + c && a * p < b * p, "order monotonicity" + at);
        }
        }
    }
    return r;
}

// Small integer coordinates: intervals between such points have few distinct
// squarefree parts, so taking their Minkowski distance does not flood the
// global square-root tower with large composite radicands.
Point random_point(Draw& g, std::size_t d) {
    std::vector<Quantity> c;
    for (std::size_t i = 0; i < d; ++i) c.push_back(g.integer(-6, 6));
    return Point(std::move(c));
}

Outcome poincare_transforms() {
    Outcome r;
    Draw g(202);
    for (std::uint64_t seed = 0; seed < 100 && r.ok; ++seed) {
        std::size_t d = seed % 2 ? 4 : 3;
        Scenario s = generate_random_standard_model(seed, d);
        auto obs = s.observers();
        for (const std::string& k : obs)
            for (const std::string& h : obs) {
                AffineMap w = worldview_transform(s, k, h);
                std::string at = " for " + k + "->" + h + " in model " + std::to_string(seed);
                r.require(is_poincare(w), "not Poincare" + at);
                for (int i = 0; i < 20; ++i) {
                    Point p = random_point(g, d), q = random_point(g, d);
                    r.require(mink_dist(p, q) == mink_dist(w.apply(p), w.apply(q)), "distance changed" + at);
                }
            }
    }
    return r;
}

Outcome mass_formula() {
    Outcome r;
    for (std::uint64_t seed = 0; seed < 100 && r.ok; ++seed) {
        CheckReport c = verify_thm1(generate_random_standard_model(seed, seed % 2 ? 4 : 3));
        r.require(c.verdict == Verdict::Holds, "rest-mass formula " + to_string(c.verdict) + " on model " +
                                                   std::to_string(seed));
    }
    CheckReport base = verify_thm1_construction(1, Quantity(3, 5));
    bool five_fourths = false;
    for (const auto& [key, value] : base.values)
        if (key == "m(v)") five_fourths = Quantity::parse(value) == Quantity(5, 4);
    r.require(base.verdict == Verdict::Holds && five_fourths, "construction at (1, 3/5) did not give 5/4");
    Draw g(303);
    for (int i = 0; i < 24 && r.ok; ++i) {
        Quantity m0(g.integer(1, 40), g.integer(1, 9));
        long den = g.integer(2, 50);
        Quantity v(g.integer(1, den - 1), den);
        CheckReport c = verify_thm1_construction(m0, v);
        bool all_parts = !c.parts.empty();
        for (const CheckReport& p : c.parts) all_parts = all_parts && p.verdict == Verdict::Holds;
        r.require(c.verdict == Verdict::Holds && all_parts,
                  "construction fails at m0 = " + m0.to_string() + ", v = " + v.to_string());
    }
    return r;
}

Outcome equivalence_batch() {
    Outcome r;
    Thm2BatchResult b = run_thm2_batch(0, 1000);
    r.require(b.scenarios == 1000, "batch ran " + std::to_string(b.scenarios) + " scenarios");
    r.require(b.disagreeing.empty(), std::to_string(b.disagreeing.size()) + " disagreements");
    r.detail = r.ok ? std::to_string(b.all_true) + " all true, " + std::to_string(b.all_false) + " all false, " +
                          std::to_string(b.corrupted) + " corrupted"
                    : r.detail;
    return r;
}

Outcome independence() {
    Outcome r;
    const std::pair<std::string, Scenario> models[] = {
        {"ConsMass", generate_cons_mass_counterexample()},
        {"ConsMoment", generate_cons_moment_counterexample()},
    };
    for (const auto& [target, s] : models) {
        for (const char* name : {"AxSelf", "AxEv", "AxSimDist", "AxMedian", "AxSpeed", "AxCenter"}) {
            CheckReport c = run_check(name, s);
            r.require(c.verdict == Verdict::Holds, target + " model: " + name + " is " + to_string(c.verdict));
        }
        CheckReport ph = check_ax_ph(s);
        const CheckReport* universal = ph.part("universal");
        r.require(universal && universal->verdict == Verdict::Holds, target + " model: AxPh universal part");
        for (const char* name : {"AxThEx", "AxForallInecoll"}) {
            CheckReport c = run_check(name, s);
            r.require(c.verdict == Verdict::WitnessedOnly, target + " model: " + name + " is " + to_string(c.verdict));
        }
        CheckReport broken = run_check(target, s);
        r.require(broken.verdict == Verdict::Fails, target + " model: " + target + " is " + to_string(broken.verdict));
    }
    return r;
}

struct CliRun {
    int code;
    std::string out;
};

CliRun cli_run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str() + err.str()};
}

bool has(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

Outcome mass_creation() {
    Outcome r;
    CliRun res = cli_run({"resolve", "1", "3/5", "1", "0"});
    r.require(res.code == 0 && has(res.out, "rest mass = 3*sqrt(2)/2 (~2.12132"), "resolve output: " + res.out);
    r.require(Quantity::parse("3*sqrt(2)/2") > 2, "3*sqrt(2)/2 is not above 2");
    CliRun demo = cli_run({"demo", "emc2", "--v", "3/5"});
    r.require(demo.code == 0 && has(demo.out, "m0(b1+b2) = m_k(b1) + m_k(b2) = 5/2"), "emc2 output: " + demo.out);
    r.require(Quantity(5, 2) > 2, "5/2 is not above 2");
    return r;
}

Outcome mass_dependence() {
    Outcome r;
    MassRatios m = mass_dependence_witness(1, 1, Vector{Quantity(3, 5)}, Vector{0});
    r.require(m.ratio_k == Quantity(5, 4), "ratio_k = " + m.ratio_k.to_string());
    r.require(m.ratio_h == Quantity(1), "ratio_h = " + m.ratio_h.to_string());
    r.require(m.ratio_k != m.ratio_h, "ratios agree");
    return r;
}

Outcome round_trip() {
    Outcome r;
    auto path = std::filesystem::temp_directory_path() / ("reldyn_acceptance_" + std::to_string(::getpid()) + ".yaml");
    for (std::uint64_t seed = 0; seed < 50 && r.ok; ++seed) {
        Scenario s = seed % 5 == 4 ? corrupt(generate_random_standard_model(seed, 3, true),
                                             static_cast<Corruption>(seed % 3), seed)
                                   : generate_random_standard_model(seed, 3 + seed % 2, seed % 2 == 0);
        save_scenario(s, path);
        r.require(load_scenario(path) == s, "save/load changed scenario " + std::to_string(seed));
    }
    std::filesystem::remove(path);

    auto summary = [](std::uint64_t seed) {
        Scenario s = generate_random_standard_model(seed, 4, true);
        std::vector<CheckReport> reports;
        for (const std::string& name : check_names()) reports.push_back(run_check(name, s));
        return cli::summary_json(reports) + write_scenario(s);
    };
    for (std::uint64_t seed : {3, 17, 99}) r.require(summary(seed) == summary(seed), "summary differs for a seed");
    CliRun a = cli_run({"--seed", "7", "demo", "thm1", "--format", "summary"});
    CliRun b = cli_run({"--seed", "7", "demo", "thm1", "--format", "summary"});
    r.require(a.code == 0 && a.out == b.out, "demo summary not reproducible");
    return r;
}

Outcome photons() {
    Outcome r;
    std::size_t seen = 0;
    for (std::uint64_t seed = 0; seed < 40 && r.ok; ++seed) {
        Scenario s = generate_random_standard_model(seed, 3 + seed % 2);
        for (const Body& b : s.bodies) {
            if (b.kind != BodyKind::Photon) continue;
            for (const std::string& k : s.observers()) {
                ++seen;
                Worldline w = wl(s, k, b.id);
                r.require(is_slope_one(w.at(0), w.at(1)), b.id + " not slope one for " + k);
                auto p = four_momentum(s, k, b.id);
                r.require(p && mink_len(*p).is_zero(), b.id + " four-momentum not null for " + k);
            }
        }
    }
    r.require(seen > 0, "no photons generated");
    return r;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        const char* what;
        double limit;  // seconds
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"AC1", "field identities (10000 draws)", 30, field_identities},
        {"AC2", "world-view transforms are Poincare (100 models)", 30, poincare_transforms},
        {"AC3", "rest-mass formula and its construction", 60, mass_formula},
        {"AC4", "four conservation predicates agree (1000 scenarios)", 120, equivalence_batch},
        {"AC5", "conservation laws are independent", 0, independence},
        {"AC6", "rest mass is created in collisions", 0, mass_creation},
        {"AC7", "mass ratio depends on the observer", 0, mass_dependence},
        {"AC8", "round trip and determinism", 0, round_trip},
        {"AC9", "photon conventions", 0, photons},
    };
    std::setvbuf(stdout, nullptr, _IOLBF, 0);
    int failed = 0;
    double total = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        total += secs;
        if (o.ok && c.limit > 0 && secs >= c.limit) {
            o.ok = false;
            o.detail = "over the " + std::to_string(static_cast<int>(c.limit)) + " s budget";
        }
        if (!o.ok) ++failed;
        std::printf("%s %s: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.name, c.what, secs,
                    o.detail.empty() ? "" : ": ", o.detail.c_str());
    }
    std::printf("%d of 9 criteria passed in %.1f s\n", 9 - failed, total);
    return failed ? 1 : 0;
}
