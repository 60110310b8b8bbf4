/* SPDX-License-Identifier: Apache-2.0 */

#include "reldyn/minkowski.hpp"

#include "reldyn/errors.hpp"

namespace reldyn {

Vector Vector::from_parts(const Quantity& time, const Vector& space) {
    std::vector<Quantity> c{time};
    c.insert(c.end(), space.begin(), space.end());
    return Vector(std::move(c));
}

bool Vector::is_zero() const {
    for (const Quantity& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

std::string Vector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) s += ", ";
        s += c_[i].to_string();
    }
    return s + ")";
}

void require_same_dimension(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
}

bool operator==(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Vector operator+(const Vector& a, const Vector& b) {
    require_same_dimension(a, b);
    Vector r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    require_same_dimension(a, b);
    Vector r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector operator*(const Quantity& s, const Vector& v) {
    Vector r(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) r[i] = s * v[i];
    return r;
}

Vector operator/(const Vector& v, const Quantity& s) { return s.inverse() * v; }

Vector Vector::operator-() const { return Quantity(-1) * *this; }

Vector zero_vector(std::size_t dimension) { return Vector(dimension); }

Quantity dot(const Vector& a, const Vector& b) {
    require_same_dimension(a, b);
    Quantity s;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

Quantity euclid_len2(const Vector& v) { return dot(v, v); }

Quantity euclid_len(const Vector& v) { return sqrt(euclid_len2(v)); }

Quantity mink_len2(const Vector& p) {
    Quantity s = p.time() * p.time();
    for (std::size_t i = 1; i < p.dim(); ++i) s -= p[i] * p[i];
    return s;
}

Quantity mink_len(const Vector& p) {
    Quantity s = mink_len2(p);
    return s.sign() >= 0 ? sqrt(s) : -sqrt(-s);
}

Quantity mink_dist(const Point& p, const Point& q) {
    require_same_dimension(p, q);
    return mink_len(p - q);
}

bool is_slope_one(const Point& p, const Point& q) {
    require_same_dimension(p, q);
    if (p == q) throw DegeneratePair();
    return mink_len2(p - q).is_zero();
}

std::optional<Quantity> parallel_factor(const Vector& u, const Vector& w) {
    require_same_dimension(u, w);
    for (std::size_t i = 0; i < w.dim(); ++i) {
        if (w[i].is_zero()) continue;
        Quantity lambda = u[i] / w[i];
        if (u == lambda * w) return lambda;
        return std::nullopt;
    }
    throw PreconditionViolation("direction vector is zero");
}

Line::Line(Point b, Vector d) : base(std::move(b)), direction(std::move(d)) {
    require_same_dimension(base, direction);
    if (direction.is_zero()) throw PreconditionViolation("line direction is zero");
}

bool Line::contains(const Point& p) const {
    return parallel_factor(p - base, direction).has_value();
}

bool operator==(const Line& a, const Line& b) {
    if (a.base.dim() != b.base.dim()) return false;
    return parallel_factor(a.direction, b.direction).has_value() && b.contains(a.base);
}

bool Segment::contains(const Point& x) const {
    require_same_dimension(p, x);
    if (p == q) return x == p;
    auto lambda = parallel_factor(x - p, q - p);
    return lambda && lambda->sign() >= 0 && *lambda <= Quantity(1);
}

namespace {

std::size_t first_nonzero(const Vector& v) {
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (!v[i].is_zero()) return i;
    throw PreconditionViolation("world-line direction is zero");
}

}  // namespace

Worldline::Worldline(Point base, Vector direction, std::optional<Quantity> lower,
                     std::optional<Quantity> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    require_same_dimension(base, direction);
    std::size_t i = first_nonzero(direction);
    direction_ = direction / direction[i];
    base_ = base - base[i] * direction_;
    if (lower_ && upper_ && *lower_ > *upper_) throw PreconditionViolation("world-line bounds are reversed");
}

Worldline Worldline::line(const Point& base, const Vector& direction) {
    return Worldline(base, direction);
}

Worldline Worldline::segment(const Point& p, const Point& q) {
    if (p == q) throw DegeneratePair();
    Worldline w(p, q - p);
    std::size_t i = w.pivot();
    Quantity a = p[i], b = q[i];
    if (a > b) std::swap(a, b);
    w.lower_ = a;
    w.upper_ = b;
    return w;
}

Worldline Worldline::ray_to(const Point& end, const Vector& direction) {
    Worldline w(end, direction);
    std::size_t i = w.pivot();
    if (direction[i].sign() > 0)
        w.upper_ = end[i];
    else
        w.lower_ = end[i];
    return w;
}

Worldline Worldline::ray_from(const Point& start, const Vector& direction) {
    Worldline w(start, direction);
    std::size_t i = w.pivot();
    if (direction[i].sign() > 0)
        w.lower_ = start[i];
    else
        w.upper_ = start[i];
    return w;
}

Worldline Worldline::event(const Point& p, const Vector& direction) {
    Worldline w(p, direction);
    std::size_t i = w.pivot();
    w.lower_ = p[i];
    w.upper_ = p[i];
    return w;
}

std::size_t Worldline::pivot() const { return first_nonzero(direction_); }

WorldlineKind Worldline::kind() const {
    if (lower_ && upper_) return WorldlineKind::Segment;
    if (lower_ || upper_) return WorldlineKind::Ray;
    return WorldlineKind::FullLine;
}

Point Worldline::at(const Quantity& s) const { return base_ + s * direction_; }

std::optional<Point> Worldline::first() const {
    if (!lower_) return std::nullopt;
    return at(*lower_);
}

std::optional<Point> Worldline::last() const {
    if (!upper_) return std::nullopt;
    return at(*upper_);
}

bool Worldline::contains(const Point& p) const {
    require_same_dimension(base_, p);
    const Quantity& s = p[pivot()];
    if (lower_ && s < *lower_) return false;
    if (upper_ && s > *upper_) return false;
    return at(s) == p;
}

std::optional<Vector> Worldline::velocity() const {
    if (horizontal() || single_point()) return std::nullopt;
    return direction_.space();
}

std::optional<Point> Worldline::at_time(const Quantity& t) const {
    if (single_point()) {
        Point p = at(*lower_);
        if (p.time() == t) return p;
        return std::nullopt;
    }
    if (horizontal()) return std::nullopt;
    if (lower_ && t < *lower_) return std::nullopt;
    if (upper_ && t > *upper_) return std::nullopt;
    return at(t);
}

bool operator==(const Worldline& a, const Worldline& b) {
    if (a.dim() != b.dim()) return false;
    if (a.single_point() || b.single_point())
        return a.single_point() && b.single_point() && a.at(*a.lower_) == b.at(*b.lower_);
    return a.base_ == b.base_ && a.direction_ == b.direction_ && a.lower_ == b.lower_ &&
           a.upper_ == b.upper_;
}

CommonLine common_line(const std::vector<PointSet>& sets) {
    if (sets.empty()) throw EmptyInput();
    std::vector<Point> points;
    for (const PointSet& set : sets) {
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, Line>) {
                    points.push_back(s.base);
                    points.push_back(s.base + s.direction);
                } else if constexpr (std::is_same_v<T, Segment>) {
                    points.push_back(s.p);
                    points.push_back(s.q);
                } else if constexpr (std::is_same_v<T, Worldline>) {
                    Point anchor = s.lower() ? *s.first() : s.upper() ? *s.last() : s.base();
                    points.push_back(anchor);
                    if (!s.single_point()) points.push_back(anchor + s.direction());
                } else {
                    points.insert(points.end(), s.begin(), s.end());
                }
            },
            set);
    }
    if (points.empty()) return CommonLine{std::nullopt, true};
    const Point& p0 = points.front();
    std::optional<Vector> direction;
    for (const Point& p : points) {
        require_same_dimension(p0, p);
        if (p != p0) {
            direction = p - p0;
            break;
        }
    }
    if (!direction) return CommonLine{std::nullopt, true};
    Line line(p0, *direction);
    for (const Point& p : points)
        if (!line.contains(p)) return CommonLine{std::nullopt, false};
    return CommonLine{line, false};
}

}  // namespace reldyn
