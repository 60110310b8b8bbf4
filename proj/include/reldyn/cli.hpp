/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "reldyn/axioms.hpp"

namespace reldyn::cli {

/// Runs one command; args exclude the program name. Returns the exit code:
/// 0 success, 1 a check failed or the claim was not confirmed, 2 a parse or
/// usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Compact JSON of name, verdict and values for each report (and its parts).
std::string summary_json(const std::vector<CheckReport>& reports);

struct PlotOptions {
    std::optional<std::string> observer;  // default: the first observer
    std::size_t vertical = 0;             // coordinate index drawn upwards
    std::size_t horizontal = 1;
};

/// Parses "t,x" style axis pairs (t, x, y, z or 0..d-1). Throws ParseError.
std::pair<std::size_t, std::size_t> parse_axes(const std::string& text);

/// A spacetime diagram in the observer's coordinates. One unit is 40 px;
/// the view covers every vertex and world-line end with two units to spare.
/// Throws UnknownObserver.
std::string render_svg(const Scenario& s, const PlotOptions& options);

struct DemoResult {
    bool confirmed = false;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::string> narrative;
    std::vector<CheckReport> reports;
};

struct DemoOptions {
    std::uint64_t seed = 0;
    std::size_t batch = 1000;
    std::optional<Quantity> m0;
    std::optional<Quantity> v;
};

/// Names accepted by run_demo.
const std::vector<std::string>& demo_names();
/// Throws ParseError for an unknown demo.
DemoResult run_demo(const std::string& name, const DemoOptions& options);

}  // namespace reldyn::cli
