/* SPDX-License-Identifier: Apache-2.0 */

#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "reldyn/cli.hpp"
#include "reldyn/errors.hpp"

namespace reldyn::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

json report_summary(const CheckReport& r) {
    json j;
    j["name"] = r.name;
    j["verdict"] = to_string(r.verdict);
    json values = json::object();
    for (const auto& [key, value] : r.values) values[key] = value;
    j["values"] = values;
    if (!r.parts.empty()) {
        json parts = json::array();
        for (const CheckReport& p : r.parts) parts.push_back(report_summary(p));
        j["parts"] = parts;
    }
    return j;
}

std::string approx_text(const Quantity& q) {
    if (q.is_rational() && q.rational().get_den() == 1) return q.to_string();
    return q.to_string() + " (~" + q.approx(6) + ")";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Vector parse_velocity(const std::string& text) {
    std::vector<Quantity> parts;
    std::stringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) parts.push_back(Quantity::parse(piece));
    if (parts.empty()) throw ParseError("empty velocity");
    return Vector(std::move(parts));
}

struct Settings {
    std::uint64_t seed = 0;
    std::size_t batch = 1000;
    std::string backend = "exact";
    std::string format = "text";
    std::string axes = "t,x";
};

void note_exact(const Settings& g, std::ostream& err) {
    if (g.backend != "exact") err << "note: checks always run on the exact backend\n";
}

int cmd_validate(const std::string& path, std::ostream& out) {
    Scenario s = parse_scenario(read_file(path));
    auto violations = validate_frame(s);
    for (const Violation& v : violations) out << v.to_string() << "\n";
    if (violations.empty()) out << "valid: " << s.bodies.size() << " bodies, " << s.frames.size() << " observers\n";
    return violations.empty() ? kOk : kFailed;
}

int cmd_check(const std::string& path, std::vector<std::string> names, const Settings& g, std::ostream& out,
              std::ostream& err) {
    note_exact(g, err);
    Scenario s = parse_scenario(read_file(path));
    auto violations = validate_frame(s);
    if (!violations.empty()) {
        for (const Violation& v : violations) out << v.to_string() << "\n";
        return kFailed;
    }
    bool all = names.empty() || (names.size() == 1 && names[0] == "all");
    if (all) names = check_names();
    for (const std::string& name : names)
        if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
            throw UnknownAxiomName(name);

    std::vector<CheckReport> reports;
    for (const std::string& name : names) {
        if (all && name == "Thm1" && s.dimension < 3) {
            err << "Thm1 skipped: it needs dimension 3 or more\n";
            continue;
        }
        reports.push_back(run_check(name, s));
    }
    bool ok = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.ok(); });
    if (g.format == "summary")
        out << summary_json(reports);
    else
        for (const CheckReport& r : reports) out << r.to_text();
    return ok ? kOk : kFailed;
}

int cmd_resolve(const std::vector<std::string>& a, const Settings& g, std::ostream& out) {
    Quantity m0b = Quantity::parse(a[0]), m0c = Quantity::parse(a[2]);
    Vector vb = parse_velocity(a[1]), vc = parse_velocity(a[3]);
    if (g.backend == "float") {
        std::vector<double> fb, fc;
        for (const Quantity& x : vb) fb.push_back(x.to_double());
        for (const Quantity& x : vc) fc.push_back(x.to_double());
        FloatCollisionResult r = resolve_collision_float(m0b.to_double(), fb, m0c.to_double(), fc);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", r.mass);
        out << "backend: float (approximate)\nmass = " << buf << "\nvelocity = (";
        for (std::size_t i = 0; i < r.velocity.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.12g", r.velocity[i]);
            out << (i ? ", " : "") << buf;
        }
        std::snprintf(buf, sizeof buf, "%.12g", r.rest_mass);
        out << ")\nrest mass = " << buf << "\n";
        return kOk;
    }
    CollisionResult r = resolve_collision(m0b, vb, m0c, vc);
    if (g.format == "summary") {
        json j;
        j["mass"] = r.mass.to_string();
        json v = json::array();
        for (const Quantity& x : r.velocity) v.push_back(x.to_string());
        j["velocity"] = v;
        j["rest_mass"] = r.rest_mass.to_string();
        j["rest_mass_approx"] = r.rest_mass.approx(6);
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "mass = " << approx_text(r.mass) << "\nvelocity = (";
    for (std::size_t i = 0; i < r.velocity.dim(); ++i) out << (i ? ", " : "") << approx_text(r.velocity[i]);
    out << ")\nrest mass = " << approx_text(r.rest_mass) << "\n";
    out << "incoming rest masses sum to " << approx_text(m0b + m0c) << "\n";
    return kOk;
}

int cmd_demo(const std::string& name, const DemoOptions& options, const Settings& g, std::ostream& out,
             std::ostream& err) {
    note_exact(g, err);
    DemoResult r = run_demo(name, options);
    if (g.format == "summary") {
        json j;
        j["demo"] = name;
        json params = json::object();
        for (const auto& [key, value] : r.parameters) params[key] = value;
        j["parameters"] = params;
        j["confirmed"] = r.confirmed;
        json reports = json::array();
        for (const CheckReport& c : r.reports) reports.push_back(report_summary(c));
        j["reports"] = reports;
        out << j.dump(2) << "\n";
    } else {
        out << "demo " << name << "\nparameters:";
        for (const auto& [key, value] : r.parameters) out << " " << key << " = " << value << ";";
        out << "\n";
        for (const std::string& line : r.narrative) out << "  " << line << "\n";
        for (const CheckReport& c : r.reports) out << c.to_text();
        out << (r.confirmed ? "claim confirmed" : "claim NOT confirmed") << "\n";
    }
    return r.confirmed ? kOk : kFailed;
}

int cmd_plot(const std::string& path, const std::optional<std::string>& observer, const std::string& output,
             const Settings& g, std::ostream& out) {
    Scenario s = parse_scenario(read_file(path));
    auto violations = validate_frame(s);
    if (!violations.empty()) {
        for (const Violation& v : violations) out << v.to_string() << "\n";
        return kFailed;
    }
    PlotOptions o;
    o.observer = observer;
    std::tie(o.vertical, o.horizontal) = parse_axes(g.axes);
    std::string svg = render_svg(s, o);
    if (output.empty()) {
        out << svg;
    } else {
        std::ofstream file(output);
        if (!file) throw Error("cannot write " + output);
        file << svg;
    }
    return kOk;
}

int cmd_generate(std::size_t dimension, bool small, const std::string& output, const Settings& g,
                 std::ostream& out) {
    Scenario s = generate_random_standard_model(g.seed, dimension, small);
    if (output.empty())
        out << write_scenario(s);
    else
        save_scenario(s, output);
    return kOk;
}

}  // namespace

std::string summary_json(const std::vector<CheckReport>& reports) {
    json j = json::array();
    for (const CheckReport& r : reports) j.push_back(report_summary(r));
    return json{{"reports", j}}.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact special-relativistic dynamics: scenarios, axiom checks and demos", "reldyn"};
    app.require_subcommand(1);
    Settings g;
    app.add_option("--seed", g.seed, "random seed")->capture_default_str();
    app.add_option("--batch", g.batch, "batch size for thm2-batch")->capture_default_str();
    app.add_option("--backend", g.backend, "exact or float (float only affects resolve)")
        ->check(CLI::IsMember({"exact", "float"}))
        ->capture_default_str();
    app.add_option("--format", g.format, "text, summary or svg")
        ->check(CLI::IsMember({"text", "summary", "svg"}))
        ->capture_default_str();
    app.add_option("--axes", g.axes, "projection for plot, vertical first")->capture_default_str();

    std::string path, output;
    std::vector<std::string> names, resolve_args;
    std::optional<std::string> observer;
    std::string demo_name, m0_text, v_text;
    std::size_t dimension = 4;
    bool small = false;

    auto* validate = app.add_subcommand("validate", "check a scenario file for structural violations");
    validate->add_option("path", path, "scenario file")->required();
    auto* check = app.add_subcommand("check", "run axiom and theorem checks");
    check->add_option("path", path, "scenario file")->required();
    check->add_option("names", names, "check names or 'all'");
    auto* resolve = app.add_subcommand("resolve", "resolve an inelastic collision: m0b vb m0c vc");
    resolve->add_option("inputs", resolve_args, "m0b vb m0c vc; velocities as comma lists")
        ->expected(4)
        ->required()
        ->allow_extra_args(false);
    auto* demo = app.add_subcommand("demo", "reproduce a result with default parameters");
    demo->add_option("name", demo_name)->required()->check(CLI::IsMember(demo_names()));
    demo->add_option("--m0", m0_text, "rest mass for thm1-construction and emc2");
    demo->add_option("--v", v_text, "speed for thm1-construction and emc2");
    auto* plot = app.add_subcommand("plot", "draw a spacetime diagram as SVG");
    plot->add_option("path", path, "scenario file")->required();
    plot->add_option("--observer", observer, "whose coordinates to draw");
    plot->add_option("-o,--output", output, "SVG file (default: standard output)");
    auto* generate = app.add_subcommand("generate", "write a random standard model");
    generate->add_option("--dimension", dimension)->capture_default_str();
    generate->add_flag("--small", small, "one collision, few observers");
    generate->add_option("-o,--output", output, "scenario file (default: standard output)");
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*validate) return cmd_validate(path, out);
        if (*check) return cmd_check(path, names, g, out, err);
        if (*resolve) return cmd_resolve(resolve_args, g, out);
        if (*demo) {
            DemoOptions o;
            o.seed = g.seed;
            o.batch = g.batch;
            if (!m0_text.empty()) o.m0 = Quantity::parse(m0_text);
            if (!v_text.empty()) o.v = Quantity::parse(v_text);
            return cmd_demo(demo_name, o, g, out, err);
        }
        if (*plot) return cmd_plot(path, observer, output, g, out);
        if (*generate) return cmd_generate(dimension, small, output, g, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnknownAxiomName& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnknownObserver& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}

}  // namespace reldyn::cli
