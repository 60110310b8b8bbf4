/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <vector>

#include "reldyn/minkowski.hpp"
#include "reldyn/quantity.hpp"

namespace reldyn {

/// Square matrix over Quantity, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}
    Matrix(std::size_t n, std::vector<Quantity> row_major);

    static Matrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    const Quantity& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    Quantity& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    Matrix transpose() const;
    Vector row(std::size_t i) const;

    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend Vector operator*(const Matrix& m, const Vector& v);
    friend bool operator==(const Matrix& x, const Matrix& y) = default;

private:
    std::size_t n_ = 0;
    std::vector<Quantity> a_;
};

/// x -> linear * x + translation.
struct AffineMap {
    Matrix linear;
    Vector translation;

    AffineMap(Matrix linear, Vector translation);

    static AffineMap identity(std::size_t d);
    static AffineMap translate(const Vector& t);
    static AffineMap scaling(std::size_t d, const Quantity& s);

    std::size_t dim() const { return translation.dim(); }
    Point apply(const Point& p) const;
    Vector apply_linear(const Vector& v) const;

    friend bool operator==(const AffineMap& a, const AffineMap& b) = default;
};

/// f after g.
AffineMap compose(const AffineMap& f, const AffineMap& g);
/// Exact inverse. Throws SingularMap.
AffineMap inverse(const AffineMap& f);
bool is_invertible(const AffineMap& f);
/// L^T eta L == eta with eta = diag(1, -1, ..., -1).
bool is_poincare(const AffineMap& f);

/// An affine map known to preserve Minkowski distance.
class PoincareMap {
public:
    /// Throws NotPoincare.
    explicit PoincareMap(AffineMap map);

    const AffineMap& map() const { return map_; }
    Point apply(const Point& p) const { return map_.apply(p); }
    operator const AffineMap&() const { return map_; }  // NOLINT(google-explicit-constructor)

private:
    AffineMap map_;
};

/// Passive boost into the frame co-moving with velocity v (dimension d-1):
///
///   t' = gamma (t - v.x)
///   x' = x - gamma v t + gamma^2/(gamma+1) (v.x) v
///
/// so the direction (1, v) is sent to (1/gamma, 0). Throws SpeedNotSubluminal.
PoincareMap boost_for_velocity(const Vector& v);

/// sqrt(1 - speed^2). Throws SpeedNotSubluminal.
Quantity time_dilation_factor(const Quantity& speed);

/// 1/sqrt(1 - |v|^2).
Quantity lorentz_factor(const Vector& v);

/// Velocity of a world-line with the given direction; undefined when the
/// time component vanishes.
std::optional<Vector> velocity_of(const Vector& direction);

/// Velocity seen in the image frame of `f` by a body with velocity `v`.
Vector transform_velocity(const AffineMap& f, const Vector& v);

/// The common velocity w whose rest frame sees u and v as exact opposites:
/// w = (gamma_u u + gamma_v v) / (gamma_u + gamma_v).
Vector median_velocity(const Vector& u, const Vector& v);

/// boost_for_velocity(median_velocity(u, v)). Throws NoMedianNeeded when
/// u == v != 0 and SpeedNotSubluminal.
PoincareMap median_observer_boost(const Vector& u, const Vector& v);

/// Image of a world-line under an invertible affine map.
Worldline apply(const AffineMap& f, const Worldline& w);

}  // namespace reldyn
