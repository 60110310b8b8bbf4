/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace reldyn {

namespace detail {
struct Node;
}

/// Exact element of the smallest square-root-closed ordered subfield of the
/// reals.
///
/// A value is a rational polynomial in square roots adjoined to a global,
/// append-only tower Q = F_0 < F_1 < ... where F_{i+1} = F_i(sqrt(r_i)) and
/// r_i > 0 is not a square in F_i. An element of F_{i+1} is stored as
/// a + b*sqrt(r_i) with a, b in F_i and b != 0, so the representation is
/// canonical whenever the tower levels are independent (see `sqrt`).
///
/// Values are immutable and share structure; copying is cheap and they may be
/// passed between threads freely.
class Quantity {
public:
    Quantity();
    Quantity(long value);  // NOLINT(google-explicit-constructor)
    Quantity(int value) : Quantity(static_cast<long>(value)) {}  // NOLINT
    Quantity(const mpq_class& value);                            // NOLINT
    Quantity(long numerator, long denominator);

    /// Parses the literal grammar used in scenario files: integers, decimals,
    /// `p/q`, `sqrt(expr)` and `+ - * /` with parentheses.
    static Quantity parse(std::string_view text);

    friend Quantity operator+(const Quantity& a, const Quantity& b);
    friend Quantity operator-(const Quantity& a, const Quantity& b);
    friend Quantity operator*(const Quantity& a, const Quantity& b);
    friend Quantity operator/(const Quantity& a, const Quantity& b);
    Quantity operator-() const;

    Quantity& operator+=(const Quantity& b) { return *this = *this + b; }
    Quantity& operator-=(const Quantity& b) { return *this = *this - b; }
    Quantity& operator*=(const Quantity& b) { return *this = *this * b; }
    Quantity& operator/=(const Quantity& b) { return *this = *this / b; }

    /// Multiplicative inverse. Throws DivisionByZero.
    Quantity inverse() const;

    /// -1, 0 or 1, decided exactly.
    int sign() const;
    bool is_zero() const;
    bool is_rational() const;

    /// The rational value; only meaningful when is_rational().
    const mpq_class& rational() const;

    friend bool operator==(const Quantity& a, const Quantity& b);
    friend std::strong_ordering operator<=>(const Quantity& a, const Quantity& b);

    /// Height of the smallest tower field containing the value.
    int level() const;

    /// Exact literal that parses back to the same value.
    std::string to_string() const;

    /// Decimal expansion rounded to `digits` places after the point.
    std::string approx(int digits) const;

    /// Nearest double (for plotting and reporting only).
    double to_double() const;

private:
    explicit Quantity(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const detail::Node> node_;

    friend Quantity sqrt(const Quantity& a);
    friend struct QuantityAccess;
};

/// Three-way exact comparison.
std::strong_ordering cmp(const Quantity& a, const Quantity& b);

/// Nonnegative square root. Reuses an existing tower level when the radicand
/// is already a square in the current field; otherwise adjoins a new level.
/// Throws NegativeRadicand.
Quantity sqrt(const Quantity& a);

Quantity abs(const Quantity& a);

std::string approx(const Quantity& a, int digits);

std::ostream& operator<<(std::ostream& os, const Quantity& q);

/// Introspection of the process-wide extension tower.
struct TowerStats {
    std::size_t levels = 0;
    std::size_t rational_levels = 0;
    std::size_t unproven_levels = 0;  // independence not established within budget
};

TowerStats tower_stats();

}  // namespace reldyn
