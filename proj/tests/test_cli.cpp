/* SPDX-License-Identifier: Apache-2.0 */

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <gtest/gtest.h>

#include "reldyn/cli.hpp"
#include "sample_scenario.hpp"

using namespace reldyn;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("reldyn_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".yaml");
        std::ofstream(path_) << content;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST(Cli, Validate) {
    TempFile good(write_scenario(generate_random_standard_model(1, 4, true)));
    EXPECT_EQ(run({"validate", good.path()}).code, 0);

    Scenario s = generate_random_standard_model(1, 4, true);
    s.set_mass("k0", "c1", Quantity(0));
    TempFile zero(write_scenario(s));
    Outcome r = run({"validate", zero.path()});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.out, "MassNotPositive")) << r.out;

    TempFile garbage("bodies: [ {id: \n");
    EXPECT_EQ(run({"validate", garbage.path()}).code, 2);
    EXPECT_EQ(run({"validate", "/nonexistent/file.yaml"}).code, 2);
}

TEST(Cli, Check) {
    TempFile good(write_scenario(generate_random_standard_model(2, 3, true)));
    Outcome r = run({"check", good.path(), "all"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "AxCenterPlus: Holds"));

    TempFile ce(write_scenario(generate_cons_mass_counterexample()));
    r = run({"check", ce.path(), "ConsMass"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.out, "m_d = ")) << r.out;
    EXPECT_TRUE(contains(r.out, "m_b = 5/4")) << r.out;

    r = run({"check", ce.path(), "AxFoo"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.err, "AxFoo"));
}

TEST(Cli, CheckSummaryIsDeterministic) {
    TempFile f(write_scenario(generate_random_standard_model(9, 4, true)));
    Outcome a = run({"check", f.path(), "--format", "summary"});
    Outcome b = run({"check", f.path(), "--format", "summary"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_TRUE(contains(a.out, "\"verdict\": \"WitnessedOnly\""));
}

TEST(Cli, Resolve) {
    Outcome r = run({"resolve", "1", "3/5", "1", "0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "mass = 9/4"));
    EXPECT_TRUE(contains(r.out, "velocity = (1/3"));
    EXPECT_TRUE(contains(r.out, "rest mass = 3*sqrt(2)/2 (~2.12132"));

    r = run({"resolve", "1", "1/2", "1", "-1/2"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "velocity = (0)"));

    r = run({"resolve", "1", "1", "1", "0"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.err, "speed"));

    r = run({"resolve", "--backend", "float", "1", "3/5", "1", "0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "rest mass = 2.12132"));

    EXPECT_EQ(run({"resolve", "1", "3/5"}).code, 2);
}

TEST(Cli, Demos) {
    for (const std::string& name : cli::demo_names()) {
        Outcome r = run({"demo", name, "--batch", "12"});
        EXPECT_EQ(r.code, 0) << name << "\n" << r.out;
        EXPECT_TRUE(contains(r.out, "claim confirmed")) << name;
    }
    Outcome r = run({"demo", "emc2"});
    EXPECT_TRUE(contains(r.out, "m0(b1+b2) = m_k(b1) + m_k(b2) = 5/2"));
    r = run({"demo", "thm1-construction", "--format", "summary"});
    EXPECT_TRUE(contains(r.out, "\"m(v)\": \"5/4\""));
    EXPECT_EQ(run({"demo", "nope"}).code, 2);
}

TEST(Cli, Plot) {
    TempFile sample(fixtures::kSample);
    Outcome r = run({"plot", sample.path(), "--observer", "k"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "<svg"));
    EXPECT_TRUE(contains(r.out, ">b</text>"));
    EXPECT_TRUE(contains(r.out, ">d</text>"));
    EXPECT_TRUE(contains(r.out, "<circle"));  // the vertex
    EXPECT_TRUE(contains(r.out, "dropped: y, z"));
    EXPECT_EQ(r.out, run({"plot", sample.path(), "--observer", "k"}).out);

    EXPECT_EQ(run({"plot", sample.path(), "--observer", "nobody"}).code, 2);

    TempFile empty("dimension: 2\nbodies: []\nframes: []\nmasses: []\n");
    r = run({"plot", empty.path()});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_FALSE(contains(r.out, "<circle"));
    std::size_t lines = 0;
    for (std::size_t at = r.out.find("<line"); at != std::string::npos; at = r.out.find("<line", at + 1)) ++lines;
    EXPECT_EQ(lines, 2u);  // the two axes
}

TEST(Cli, GenerateIsDeterministic) {
    Outcome a = run({"generate", "--seed", "5"}), b = run({"generate", "--seed", "5"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, run({"generate", "--seed", "6"}).out);
    EXPECT_EQ(parse_scenario(a.out), generate_random_standard_model(5, 4));
}
