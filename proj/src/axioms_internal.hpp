/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reldyn/axioms.hpp"

namespace reldyn::detail {

/// Per-scenario data shared by the checkers: world-lines in every frame,
/// the mass table, rest masses and collision triples.
class Analysis {
public:
    explicit Analysis(const Scenario& s);

    const Scenario& scenario() const { return s_; }
    const Worldviews& views() const { return views_; }
    std::size_t observers() const { return views_.observers().size(); }
    std::size_t bodies() const { return s_.bodies.size(); }
    const std::string& observer_id(std::size_t k) const { return views_.observers()[k]; }
    const std::string& body_id(std::size_t b) const { return s_.bodies[b].id; }
    std::size_t body_index(const std::string& id) const { return views_.body_index(id); }

    const Worldline& wl(std::size_t k, std::size_t b) const { return views_.wl(k, b); }
    const Quantity& mass(std::size_t k, std::size_t b) const { return mass_[k][b]; }
    const std::optional<Quantity>& rest_mass(std::size_t b) const { return rest_[b]; }
    bool inertial(std::size_t b) const { return inertial_[b]; }
    std::optional<Vector> velocity(std::size_t k, std::size_t b) const { return wl(k, b).velocity(); }
    std::optional<Vector> four_momentum(std::size_t k, std::size_t b) const;

    /// Triples with b, c, d inertial, as body indices.
    struct Triple {
        std::size_t b, c, d;
        Point vertex;
    };
    const std::vector<Triple>& triples(std::size_t k) const;

    const AffineMap& worldview(std::size_t k, std::size_t h) const;

private:
    const Scenario& s_;
    Worldviews views_;
    std::vector<std::vector<Quantity>> mass_;
    std::vector<std::optional<Quantity>> rest_;
    std::vector<bool> inertial_;
    mutable std::vector<std::optional<std::vector<Triple>>> triples_;
    mutable std::vector<std::vector<std::optional<AffineMap>>> worldviews_;
};

CheckReport check_ax_self(const Analysis& a);
CheckReport check_ax_center(const Analysis& a);
CheckReport check_ax_center_plus(const Analysis& a);
CheckReport check_cons_mass(const Analysis& a);
CheckReport check_cons_moment(const Analysis& a);
CheckReport check_cons_four_moment(const Analysis& a);

CheckReport make_report(std::string name);
/// Records a failure; keeps the first counterwitness only.
void fail(CheckReport& r, const std::string& message,
          std::vector<std::pair<std::string, std::string>> witness = {});

}  // namespace reldyn::detail
