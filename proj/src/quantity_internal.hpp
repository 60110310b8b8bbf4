/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <atomic>
#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "reldyn/quantity.hpp"

namespace reldyn::detail {

/// Closed double interval with outward rounding; [-inf, inf] when unknown.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    bool positive() const { return lo > 0; }
    bool negative() const { return hi < 0; }
    bool finite() const { return std::isfinite(lo) && std::isfinite(hi); }
};

Interval interval_of(const mpq_class& q);
Interval operator+(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval interval_sqrt(const Interval& a);

struct Level;
struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// level == 0: the rational `value`.
/// level == h > 0: a + b*sqrt(ext->radicand), with ext->index == h - 1,
/// level(a), level(b) < h and b != 0.
struct Node {
    int level = 0;
    mpq_class value;
    NodePtr a;
    NodePtr b;
    const Level* ext = nullptr;
    Interval enclosure;
    mutable std::atomic<signed char> sign_cache{2};
};

/// One step of the extension tower. Immutable once published.
struct Level {
    int index = 0;
    NodePtr radicand;
    NodePtr root;              // the node sqrt(radicand)
    NodePtr radicand_inverse;
    Interval root_enclosure;
    bool rational = false;     // radicand is a square-free integer > 1
    bool independent = true;   // radicand proven a non-square in the field below
    std::string radicand_text;
};

NodePtr make_rational(const mpq_class& v);
const NodePtr& zero_node();
const NodePtr& one_node();

/// Canonicalizing constructor for a + b*sqrt(r).
NodePtr make_ext(const Level* ext, NodePtr a, NodePtr b);

bool is_zero(const NodePtr& x);
int sign(const NodePtr& x);
NodePtr add(const NodePtr& x, const NodePtr& y);
NodePtr sub(const NodePtr& x, const NodePtr& y);
NodePtr neg(const NodePtr& x);
NodePtr mul(const NodePtr& x, const NodePtr& y);
NodePtr scale(const NodePtr& x, const mpq_class& q);
NodePtr inv(const NodePtr& x);

/// Sign of a + b*sqrt(r) computed from the parts.
int sign_of_parts(const NodePtr& a, const NodePtr& b, const Level* ext);

/// Number of rational leaves; used to cap expensive symbolic work.
std::size_t leaf_count(const NodePtr& x, std::size_t cap);

/// Lowest common denominator of all rational leaves.
mpz_class leaf_denominator(const NodePtr& x);

NodePtr tower_sqrt(const NodePtr& x);

std::string node_to_string(const NodePtr& x);

}  // namespace reldyn::detail
