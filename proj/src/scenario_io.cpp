/* SPDX-License-Identifier: Apache-2.0 */

// YAML reading and writing of scenarios. Quantities are written as exact
// literals so a saved file loads back to an equal scenario.

#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "reldyn/scenario.hpp"

namespace reldyn {

namespace {

[[noreturn]] void fail(const YAML::Node& node, const std::string& message) {
    const YAML::Mark mark = node.Mark();
    if (mark.is_null()) throw ParseError(message);
    throw ParseError(message, mark.line + 1, mark.column + 1);
}

YAML::Node require(const YAML::Node& parent, const char* key) {
    YAML::Node n = parent[key];
    if (!n) fail(parent, std::string("missing key '") + key + "'");
    return n;
}

std::string read_string(const YAML::Node& n) {
    if (!n.IsScalar()) fail(n, "expected a scalar");
    return n.Scalar();
}

Quantity read_quantity(const YAML::Node& n) {
    std::string text = read_string(n);
    try {
        return Quantity::parse(text);
    } catch (const ParseError& e) {
        const YAML::Mark mark = n.Mark();
        throw ParseError(std::string(e.what()) + " in '" + text + "'", mark.line + 1,
                         mark.column + 1);
    }
}

Vector read_vector(const YAML::Node& n) {
    if (!n.IsSequence()) fail(n, "expected a list of quantities");
    std::vector<Quantity> c;
    for (const YAML::Node& x : n) c.push_back(read_quantity(x));
    return Vector(std::move(c));
}

std::vector<std::string> read_ids(const YAML::Node& n) {
    if (!n.IsSequence()) fail(n, "expected a list of ids");
    std::vector<std::string> ids;
    for (const YAML::Node& x : n) ids.push_back(read_string(x));
    return ids;
}

std::optional<Quantity> read_bound(const YAML::Node& parent, const char* key) {
    YAML::Node n = parent[key];
    if (!n || n.IsNull()) return std::nullopt;
    return read_quantity(n);
}

Body read_body(const YAML::Node& n, std::size_t dimension) {
    std::string id = read_string(require(n, "id"));
    YAML::Node kind_node = require(n, "kind");
    BodyKind kind;
    try {
        kind = body_kind_from_string(read_string(kind_node));
    } catch (const ParseError& e) {
        fail(kind_node, e.what());
    }
    YAML::Node w = require(n, "worldline");
    Vector base = read_vector(require(w, "base"));
    Vector direction = read_vector(require(w, "direction"));
    if (base.dim() != dimension || direction.dim() != dimension)
        fail(w, "world-line of '" + id + "' has the wrong dimension");
    try {
        return Body{id, kind, Worldline(base, direction, read_bound(w, "tmin"), read_bound(w, "tmax"))};
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        fail(w, e.what());
    }
}

Frame read_frame(const YAML::Node& n, std::size_t dimension) {
    std::string observer = read_string(require(n, "observer"));
    YAML::Node rows = require(n, "matrix");
    if (!rows.IsSequence() || rows.size() != dimension) fail(rows, "matrix must have d rows");
    std::vector<Quantity> entries;
    for (const YAML::Node& row : rows) {
        Vector r = read_vector(row);
        if (r.dim() != dimension) fail(row, "matrix row must have d entries");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    YAML::Node t = require(n, "translation");
    Vector translation = read_vector(t);
    if (translation.dim() != dimension) fail(t, "translation must have d entries");
    return Frame{observer, AffineMap(Matrix(dimension, std::move(entries)), translation)};
}

Point read_point(const YAML::Node& n, std::size_t dimension) {
    Vector p = read_vector(n);
    if (p.dim() != dimension) fail(n, "point has the wrong dimension");
    return p;
}

Vector read_velocity(const YAML::Node& n, std::size_t dimension) {
    Vector v = read_vector(n);
    if (v.dim() + 1 != dimension) fail(n, "velocity must have d-1 entries");
    return v;
}

Witnesses read_witnesses(const YAML::Node& n, std::size_t d) {
    Witnesses w;
    if (!n) return w;
    if (!n.IsMap()) fail(n, "witnesses must be a mapping");
    for (const YAML::Node& x : n["photon_pairs"])
        w.photon_pairs.push_back({read_string(require(x, "observer")), read_point(require(x, "p"), d),
                                  read_point(require(x, "q"), d)});
    for (const YAML::Node& x : n["thex"])
        w.thex.push_back({read_string(require(x, "observer")), read_point(require(x, "p"), d),
                          read_point(require(x, "q"), d)});
    for (const YAML::Node& x : n["forall_inecoll"])
        w.forall_inecoll.push_back(
            {read_string(require(x, "observer")), read_quantity(require(x, "m1")),
             read_quantity(require(x, "m2")), read_velocity(require(x, "v1"), d),
             read_velocity(require(x, "v2"), d)});
    for (const YAML::Node& x : n["exists_inecoll"])
        w.exists_inecoll.push_back(
            {read_string(require(x, "observer")), read_string(require(x, "body"))});
    return w;
}

Scenario read_scenario(const YAML::Node& root) {
    if (!root.IsMap()) fail(root, "scenario must be a mapping");
    Scenario s;
    YAML::Node dim = require(root, "dimension");
    try {
        s.dimension = dim.as<std::size_t>();
    } catch (const YAML::Exception&) {
        fail(dim, "dimension must be a natural number");
    }
    if (s.dimension < 2) fail(dim, "dimension must be at least 2");

    for (const YAML::Node& b : require(root, "bodies")) s.bodies.push_back(read_body(b, s.dimension));
    for (const YAML::Node& f : root["frames"]) s.frames.push_back(read_frame(f, s.dimension));
    for (const YAML::Node& m : root["masses"]) {
        std::string k = read_string(require(m, "observer"));
        std::string b = read_string(require(m, "body"));
        if (s.masses.count({k, b})) fail(m, "duplicate mass entry for (" + k + ", " + b + ")");
        s.set_mass(k, b, read_quantity(require(m, "value")));
    }
    for (const YAML::Node& c : root["collisions"])
        s.collisions.push_back({read_point(require(c, "vertex"), s.dimension),
                                read_ids(require(c, "in")), read_ids(require(c, "out"))});
    s.witnesses = read_witnesses(root["witnesses"], s.dimension);
    return s;
}

YAML::Node vector_node(const Vector& v) {
    YAML::Node n(YAML::NodeType::Sequence);
    for (const Quantity& x : v) n.push_back(x.to_string());
    n.SetStyle(YAML::EmitterStyle::Flow);
    return n;
}

YAML::Node ids_node(const std::vector<std::string>& ids) {
    YAML::Node n(YAML::NodeType::Sequence);
    for (const std::string& id : ids) n.push_back(id);
    n.SetStyle(YAML::EmitterStyle::Flow);
    return n;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
    }
    try {
        return read_scenario(root);
    } catch (const YAML::Exception& e) {
        if (e.mark.is_null()) throw ParseError(e.msg);
        throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
    }
}

std::string write_scenario(const Scenario& s) {
    YAML::Node root;
    root["dimension"] = s.dimension;

    YAML::Node bodies(YAML::NodeType::Sequence);
    for (const Body& b : s.bodies) {
        YAML::Node n;
        n["id"] = b.id;
        n["kind"] = to_string(b.kind);
        YAML::Node w;
        w["base"] = vector_node(b.worldline.base());
        w["direction"] = vector_node(b.worldline.direction());
        if (b.worldline.lower()) w["tmin"] = b.worldline.lower()->to_string();
        if (b.worldline.upper()) w["tmax"] = b.worldline.upper()->to_string();
        n["worldline"] = w;
        bodies.push_back(n);
    }
    root["bodies"] = bodies;

    YAML::Node frames(YAML::NodeType::Sequence);
    for (const Frame& f : s.frames) {
        YAML::Node n;
        n["observer"] = f.observer;
        YAML::Node rows(YAML::NodeType::Sequence);
        for (std::size_t i = 0; i < f.map.dim(); ++i) rows.push_back(vector_node(f.map.linear.row(i)));
        n["matrix"] = rows;
        n["translation"] = vector_node(f.map.translation);
        frames.push_back(n);
    }
    root["frames"] = frames;

    YAML::Node masses(YAML::NodeType::Sequence);
    for (const auto& [key, m] : s.masses) {
        YAML::Node n;
        n["observer"] = key.first;
        n["body"] = key.second;
        n["value"] = m.to_string();
        n.SetStyle(YAML::EmitterStyle::Flow);
        masses.push_back(n);
    }
    root["masses"] = masses;

    YAML::Node collisions(YAML::NodeType::Sequence);
    for (const CollisionEvent& c : s.collisions) {
        YAML::Node n;
        n["vertex"] = vector_node(c.vertex);
        n["in"] = ids_node(c.incoming);
        n["out"] = ids_node(c.outgoing);
        collisions.push_back(n);
    }
    root["collisions"] = collisions;

    const Witnesses& w = s.witnesses;
    YAML::Node witnesses(YAML::NodeType::Map);
    auto pairs = [](const auto& list) {
        YAML::Node seq(YAML::NodeType::Sequence);
        for (const auto& x : list) {
            YAML::Node n;
            n["observer"] = x.observer;
            n["p"] = vector_node(x.p);
            n["q"] = vector_node(x.q);
            seq.push_back(n);
        }
        return seq;
    };
    if (!w.photon_pairs.empty()) witnesses["photon_pairs"] = pairs(w.photon_pairs);
    if (!w.thex.empty()) witnesses["thex"] = pairs(w.thex);
    if (!w.forall_inecoll.empty()) {
        YAML::Node seq(YAML::NodeType::Sequence);
        for (const ForallInecollDemand& x : w.forall_inecoll) {
            YAML::Node n;
            n["observer"] = x.observer;
            n["m1"] = x.m1.to_string();
            n["m2"] = x.m2.to_string();
            n["v1"] = vector_node(x.v1);
            n["v2"] = vector_node(x.v2);
            seq.push_back(n);
        }
        witnesses["forall_inecoll"] = seq;
    }
    if (!w.exists_inecoll.empty()) {
        YAML::Node seq(YAML::NodeType::Sequence);
        for (const ExistsInecollDemand& x : w.exists_inecoll) {
            YAML::Node n;
            n["observer"] = x.observer;
            n["body"] = x.body;
            n.SetStyle(YAML::EmitterStyle::Flow);
            seq.push_back(n);
        }
        witnesses["exists_inecoll"] = seq;
    }
    root["witnesses"] = witnesses;

    YAML::Emitter out;
    out << root;
    return std::string(out.c_str()) + "\n";
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    Scenario s = parse_scenario(buffer.str());
    auto violations = validate_frame(s);
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return s;
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << write_scenario(s);
    if (!out) throw Error("failed writing " + path.string());
}

}  // namespace reldyn
