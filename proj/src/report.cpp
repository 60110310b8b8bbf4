/* SPDX-License-Identifier: Apache-2.0 */

#include <json.hpp>

#include "axioms_internal.hpp"

namespace reldyn {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Fails: return "Fails";
    case Verdict::VacuouslyHolds: return "VacuouslyHolds";
    case Verdict::WitnessedOnly: return "WitnessedOnly";
    }
    return "Fails";
}

namespace {

int rank(Verdict v) {
    switch (v) {
    case Verdict::VacuouslyHolds: return 0;
    case Verdict::Holds: return 1;
    case Verdict::WitnessedOnly: return 2;
    case Verdict::Fails: return 3;
    }
    return 3;
}

nlohmann::ordered_json to_json_value(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["verdict"] = to_string(r.verdict);
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.values) values[key] = value;
    j["values"] = values;
    j["trace"] = r.trace;
    nlohmann::ordered_json parts = nlohmann::ordered_json::array();
    for (const CheckReport& p : r.parts) parts.push_back(to_json_value(p));
    j["parts"] = parts;
    return j;
}

void append_text(const CheckReport& r, std::string& out, int depth) {
    std::string pad(2 * depth, ' ');
    out += pad + r.name + ": " + to_string(r.verdict) + "\n";
    for (const auto& [key, value] : r.values) out += pad + "  " + key + " = " + value + "\n";
    for (const std::string& line : r.trace) out += pad + "  - " + line + "\n";
    for (const CheckReport& p : r.parts) append_text(p, out, depth + 1);
}

}  // namespace

Verdict combine(Verdict a, Verdict b) { return rank(a) >= rank(b) ? a : b; }

const CheckReport* CheckReport::part(const std::string& part_name) const {
    for (const CheckReport& p : parts)
        if (p.name == part_name) return &p;
    return nullptr;
}

std::string CheckReport::to_text() const {
    std::string out;
    append_text(*this, out, 0);
    return out;
}

std::string CheckReport::to_json() const { return to_json_value(*this).dump(2); }

namespace detail {

CheckReport make_report(std::string name) {
    CheckReport r;
    r.name = std::move(name);
    return r;
}

void fail(CheckReport& r, const std::string& message,
          std::vector<std::pair<std::string, std::string>> witness) {
    constexpr std::size_t kMaxFailureLines = 20;
    if (r.verdict != Verdict::Fails) {
        r.verdict = Verdict::Fails;
        r.values = std::move(witness);
    }
    std::size_t failures = 0;
    for (const std::string& line : r.trace)
        if (line.rfind("violated: ", 0) == 0) ++failures;
    if (failures < kMaxFailureLines) r.trace.push_back("violated: " + message);
}

}  // namespace detail

}  // namespace reldyn
