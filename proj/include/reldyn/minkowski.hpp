/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reldyn/quantity.hpp"

namespace reldyn {

/// Coordinate tuple in Q^d. Index 0 is time, the rest is space.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dimension) : c_(dimension) {}
    Vector(std::initializer_list<Quantity> c) : c_(c) {}
    explicit Vector(std::vector<Quantity> c) : c_(std::move(c)) {}

    /// Joins a time coordinate and a spatial part.
    static Vector from_parts(const Quantity& time, const Vector& space);

    std::size_t dim() const { return c_.size(); }
    const Quantity& operator[](std::size_t i) const { return c_[i]; }
    Quantity& operator[](std::size_t i) { return c_[i]; }
    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

    const Quantity& time() const { return c_.at(0); }
    Vector space() const { return Vector(std::vector<Quantity>(c_.begin() + 1, c_.end())); }

    bool is_zero() const;
    std::string to_string() const;

    friend bool operator==(const Vector& a, const Vector& b);
    friend Vector operator+(const Vector& a, const Vector& b);
    friend Vector operator-(const Vector& a, const Vector& b);
    friend Vector operator*(const Quantity& s, const Vector& v);
    friend Vector operator/(const Vector& v, const Quantity& s);
    Vector operator-() const;

private:
    std::vector<Quantity> c_;
};

using Point = Vector;

Vector zero_vector(std::size_t dimension);
void require_same_dimension(const Vector& a, const Vector& b);

Quantity dot(const Vector& a, const Vector& b);
Quantity euclid_len2(const Vector& v);
Quantity euclid_len(const Vector& v);

/// p_t^2 - |p_s|^2.
Quantity mink_len2(const Vector& p);
/// Signed Minkowski length: sqrt(p_t^2 - |p_s|^2) for causal vectors,
/// -sqrt(|p_s|^2 - p_t^2) otherwise.
Quantity mink_len(const Vector& p);
Quantity mink_dist(const Point& p, const Point& q);

/// |p_s - q_s| == |p_t - q_t|. Throws DegeneratePair when p == q.
bool is_slope_one(const Point& p, const Point& q);

/// u == lambda * w for some lambda; w must be nonzero.
std::optional<Quantity> parallel_factor(const Vector& u, const Vector& w);

struct Line {
    Point base;
    Vector direction;

    Line(Point base, Vector direction);
    bool contains(const Point& p) const;
    /// Same point set.
    friend bool operator==(const Line& a, const Line& b);
};

struct Segment {
    Point p;
    Point q;

    bool contains(const Point& x) const;
};

enum class WorldlineKind { FullLine, Ray, Segment };

/// A line, ray or segment { base + s*direction : lower <= s <= upper }.
///
/// The carrier is normalized on its first nonzero direction coordinate
/// (the time coordinate unless the line is horizontal): that coordinate of
/// the direction is 1 and of the base is 0, so the parameter s equals that
/// coordinate of the point. For every non-horizontal world-line s is time.
class Worldline {
public:
    Worldline(Point base, Vector direction, std::optional<Quantity> lower = std::nullopt,
              std::optional<Quantity> upper = std::nullopt);

    static Worldline line(const Point& base, const Vector& direction);
    static Worldline segment(const Point& p, const Point& q);
    /// Ray that ends at `end` coming from the -direction side.
    static Worldline ray_to(const Point& end, const Vector& direction);
    /// Ray that starts at `start` and continues along +direction.
    static Worldline ray_from(const Point& start, const Vector& direction);
    /// A single event; lower == upper.
    static Worldline event(const Point& p, const Vector& direction);

    WorldlineKind kind() const;
    std::size_t dim() const { return base_.dim(); }
    const Point& base() const { return base_; }
    const Vector& direction() const { return direction_; }
    const std::optional<Quantity>& lower() const { return lower_; }
    const std::optional<Quantity>& upper() const { return upper_; }

    bool horizontal() const { return direction_.time().is_zero(); }
    bool single_point() const { return lower_ && upper_ && *lower_ == *upper_; }

    Point at(const Quantity& s) const;
    std::optional<Point> first() const;
    std::optional<Point> last() const;

    bool contains(const Point& p) const;
    Line carrier() const { return Line(base_, direction_); }

    /// Velocity (dp_s / dp_t), undefined for horizontal carriers.
    std::optional<Vector> velocity() const;
    /// The unique point with the given time coordinate.
    std::optional<Point> at_time(const Quantity& t) const;

    friend bool operator==(const Worldline& a, const Worldline& b);

private:
    std::size_t pivot() const;

    Point base_;
    Vector direction_;
    std::optional<Quantity> lower_;
    std::optional<Quantity> upper_;
};

using PointSet = std::variant<Line, Segment, Worldline, std::vector<Point>>;

struct CommonLine {
    std::optional<Line> line;
    bool degenerate = false;  // all points coincide (or there are none)
};

/// A line through every given set, if one exists. Throws EmptyInput.
CommonLine common_line(const std::vector<PointSet>& sets);

}  // namespace reldyn
