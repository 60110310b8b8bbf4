/* SPDX-License-Identifier: Apache-2.0 */

#include "reldyn/transforms.hpp"

#include "reldyn/errors.hpp"

namespace reldyn {

Matrix::Matrix(std::size_t n, std::vector<Quantity> row_major) : n_(n), a_(std::move(row_major)) {
    if (a_.size() != n * n) throw DimensionMismatch(n * n, a_.size());
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vector Matrix::row(std::size_t i) const {
    Vector r(n_);
    for (std::size_t j = 0; j < n_; ++j) r[j] = (*this)(i, j);
    return r;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.n_ != y.n_) throw DimensionMismatch(x.n_, y.n_);
    Matrix r(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
        for (std::size_t j = 0; j < x.n_; ++j) {
            Quantity s;
            for (std::size_t k = 0; k < x.n_; ++k) s += x(i, k) * y(k, j);
            r(i, j) = s;
        }
    return r;
}

Vector operator*(const Matrix& m, const Vector& v) {
    if (m.n_ != v.dim()) throw DimensionMismatch(m.n_, v.dim());
    Vector r(m.n_);
    for (std::size_t i = 0; i < m.n_; ++i) {
        Quantity s;
        for (std::size_t k = 0; k < m.n_; ++k) s += m(i, k) * v[k];
        r[i] = s;
    }
    return r;
}

AffineMap::AffineMap(Matrix l, Vector t) : linear(std::move(l)), translation(std::move(t)) {
    if (linear.size() != translation.dim()) throw DimensionMismatch(linear.size(), translation.dim());
}

AffineMap AffineMap::identity(std::size_t d) { return AffineMap(Matrix::identity(d), Vector(d)); }

AffineMap AffineMap::translate(const Vector& t) { return AffineMap(Matrix::identity(t.dim()), t); }

AffineMap AffineMap::scaling(std::size_t d, const Quantity& s) {
    Matrix m(d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = s;
    return AffineMap(m, Vector(d));
}

Point AffineMap::apply(const Point& p) const { return linear * p + translation; }

Vector AffineMap::apply_linear(const Vector& v) const { return linear * v; }

AffineMap compose(const AffineMap& f, const AffineMap& g) {
    return AffineMap(f.linear * g.linear, f.linear * g.translation + f.translation);
}

namespace {

/// Gauss-Jordan inverse; nullopt when singular.
std::optional<Matrix> invert(const Matrix& m) {
    const std::size_t n = m.size();
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        Quantity scale = a(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            Quantity factor = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= factor * a(col, j);
                inv(i, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace

AffineMap inverse(const AffineMap& f) {
    auto li = invert(f.linear);
    if (!li) throw SingularMap();
    return AffineMap(*li, -(*li * f.translation));
}

bool is_invertible(const AffineMap& f) { return invert(f.linear).has_value(); }

bool is_poincare(const AffineMap& f) {
    const Matrix& l = f.linear;
    const std::size_t n = l.size();
    // (L^T eta L)_ij = L_0i L_0j - sum_{k>0} L_ki L_kj
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Quantity s = l(0, i) * l(0, j);
            for (std::size_t k = 1; k < n; ++k) s -= l(k, i) * l(k, j);
            Quantity expected = i != j ? Quantity(0) : i == 0 ? Quantity(1) : Quantity(-1);
            if (s != expected) return false;
        }
    return true;
}

PoincareMap::PoincareMap(AffineMap map) : map_(std::move(map)) {
    if (!is_poincare(map_)) throw NotPoincare();
}

Quantity lorentz_factor(const Vector& v) {
    Quantity v2 = euclid_len2(v);
    if (v2 >= Quantity(1)) throw SpeedNotSubluminal();
    return sqrt(1 - v2).inverse();
}

PoincareMap boost_for_velocity(const Vector& v) {
    const std::size_t d = v.dim() + 1;
    Quantity gamma = lorentz_factor(v);
    Quantity k = gamma * gamma / (gamma + 1);
    Matrix m(d);
    m(0, 0) = gamma;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        m(0, i + 1) = -gamma * v[i];
        m(i + 1, 0) = -gamma * v[i];
        for (std::size_t j = 0; j < v.dim(); ++j)
            m(i + 1, j + 1) = (i == j ? Quantity(1) : Quantity(0)) + k * v[i] * v[j];
    }
    return PoincareMap(AffineMap(m, Vector(d)));
}

Quantity time_dilation_factor(const Quantity& speed) {
    if (speed.sign() < 0 || speed >= Quantity(1)) throw SpeedNotSubluminal();
    return sqrt(1 - speed * speed);
}

std::optional<Vector> velocity_of(const Vector& direction) {
    if (direction.time().is_zero()) return std::nullopt;
    return direction.space() / direction.time();
}

Vector transform_velocity(const AffineMap& f, const Vector& v) {
    auto w = velocity_of(f.apply_linear(Vector::from_parts(1, v)));
    if (!w) throw PreconditionViolation("velocity becomes undefined under the map");
    return *w;
}

Vector median_velocity(const Vector& u, const Vector& v) {
    require_same_dimension(u, v);
    Quantity gu = lorentz_factor(u);
    Quantity gv = lorentz_factor(v);
    if (u == v && !u.is_zero()) throw NoMedianNeeded();
    return (gu * u + gv * v) / (gu + gv);
}

PoincareMap median_observer_boost(const Vector& u, const Vector& v) {
    return boost_for_velocity(median_velocity(u, v));
}

Worldline apply(const AffineMap& f, const Worldline& w) {
    if (f.dim() != w.dim()) throw DimensionMismatch(f.dim(), w.dim());
    Vector direction = f.apply_linear(w.direction());
    if (direction.is_zero()) throw SingularMap();
    Worldline image(f.apply(w.base()), direction);
    std::size_t pivot = 0;
    while (image.direction()[pivot].is_zero()) ++pivot;
    // the image parameter is increasing in the old one iff this is positive
    bool flips = direction[pivot].sign() < 0;
    std::optional<Quantity> lo, hi;
    if (w.lower()) lo = f.apply(*w.first())[pivot];
    if (w.upper()) hi = f.apply(*w.last())[pivot];
    if (flips) std::swap(lo, hi);
    return Worldline(image.base(), image.direction(), lo, hi);
}

}  // namespace reldyn
