/* SPDX-License-Identifier: Apache-2.0 */

#include "reldyn/quantity.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "quantity_internal.hpp"
#include "reldyn/errors.hpp"

namespace reldyn {

namespace detail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

Interval sanitize(Interval r) {
    if (std::isnan(r.lo) || std::isnan(r.hi)) return Interval{};
    return r;
}

}  // namespace

Interval interval_of(const mpq_class& q) {
    double d = q.get_d();  // truncated toward zero
    if (!std::isfinite(d)) return Interval{};
    return Interval{down(d), up(d)};
}

Interval operator+(const Interval& a, const Interval& b) {
    return sanitize(Interval{down(a.lo + b.lo), up(a.hi + b.hi)});
}

Interval operator*(const Interval& a, const Interval& b) {
    double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    for (double v : p)
        if (std::isnan(v)) return Interval{};
    auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
    return Interval{down(*mn), up(*mx)};
}

Interval interval_sqrt(const Interval& a) {
    double lo = a.lo <= 0 ? 0.0 : down(std::sqrt(a.lo));
    double hi = a.hi < 0 ? 0.0 : up(std::sqrt(a.hi));
    return Interval{std::max(lo, 0.0), hi};
}

NodePtr make_rational(const mpq_class& v) {
    auto n = std::make_shared<Node>();
    n->value = v;
    n->enclosure = interval_of(v);
    n->sign_cache.store(static_cast<signed char>(sgn(v)));
    return n;
}

const NodePtr& zero_node() {
    static const NodePtr zero = make_rational(mpq_class(0));
    return zero;
}

const NodePtr& one_node() {
    static const NodePtr one = make_rational(mpq_class(1));
    return one;
}

bool is_zero(const NodePtr& x) { return x->level == 0 && sgn(x->value) == 0; }

namespace {

/// Builds a + b*sqrt(r) without canonicalization; b must be nonzero and the
/// combination known to be nonzero (or the level independent).
NodePtr raw_ext(const Level* ext, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->level = ext->index + 1;
    n->enclosure = a->enclosure + b->enclosure * ext->root_enclosure;
    n->a = std::move(a);
    n->b = std::move(b);
    n->ext = ext;
    return n;
}

struct Parts {
    NodePtr a;
    NodePtr b;
};

Parts split(const NodePtr& x, const Level* ext) {
    if (x->level == ext->index + 1) return {x->a, x->b};
    return {x, zero_node()};
}

}  // namespace

NodePtr make_ext(const Level* ext, NodePtr a, NodePtr b) {
    if (is_zero(b)) return a;
    NodePtr n = raw_ext(ext, std::move(a), std::move(b));
    if (!ext->independent && !n->enclosure.positive() && !n->enclosure.negative() &&
        sign_of_parts(n->a, n->b, ext) == 0)
        return zero_node();
    return n;
}

int sign_of_parts(const NodePtr& a, const NodePtr& b, const Level* ext) {
    int sb = sign(b);
    int sa = sign(a);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // a and b*sqrt(r) have opposite signs: compare a^2 with b^2 r.
    NodePtr diff = sub(mul(a, a), mul(mul(b, b), ext->radicand));
    return sa * sign(diff);
}

int sign(const NodePtr& x) {
    signed char cached = x->sign_cache.load(std::memory_order_relaxed);
    if (cached != 2) return cached;
    int s;
    if (x->level == 0)
        s = sgn(x->value);
    else if (x->enclosure.positive())
        s = 1;
    else if (x->enclosure.negative())
        s = -1;
    else
        s = sign_of_parts(x->a, x->b, x->ext);
    x->sign_cache.store(static_cast<signed char>(s), std::memory_order_relaxed);
    return s;
}

NodePtr scale(const NodePtr& x, const mpq_class& q) {
    if (sgn(q) == 0 || is_zero(x)) return zero_node();
    if (q == 1) return x;
    if (x->level == 0) return make_rational(x->value * q);
    return raw_ext(x->ext, scale(x->a, q), scale(x->b, q));
}

NodePtr neg(const NodePtr& x) { return scale(x, mpq_class(-1)); }

NodePtr add(const NodePtr& x, const NodePtr& y) {
    if (is_zero(x)) return y;
    if (is_zero(y)) return x;
    if (x->level == 0 && y->level == 0) return make_rational(x->value + y->value);
    const Level* ext = x->level >= y->level ? x->ext : y->ext;
    Parts px = split(x, ext);
    Parts py = split(y, ext);
    return make_ext(ext, add(px.a, py.a), add(px.b, py.b));
}

NodePtr sub(const NodePtr& x, const NodePtr& y) { return add(x, neg(y)); }

NodePtr mul(const NodePtr& x, const NodePtr& y) {
    if (is_zero(x) || is_zero(y)) return zero_node();
    if (x->level == 0) return scale(y, x->value);
    if (y->level == 0) return scale(x, y->value);
    if (x->level < y->level) return raw_ext(y->ext, mul(x, y->a), mul(x, y->b));
    if (y->level < x->level) return raw_ext(x->ext, mul(x->a, y), mul(x->b, y));
    const Level* ext = x->ext;
    NodePtr a = add(mul(x->a, y->a), mul(mul(x->b, y->b), ext->radicand));
    NodePtr b = add(mul(x->a, y->b), mul(x->b, y->a));
    return make_ext(ext, std::move(a), std::move(b));
}

NodePtr inv(const NodePtr& x) {
    if (x->level == 0) {
        if (sgn(x->value) == 0) throw DivisionByZero();
        return make_rational(1 / x->value);
    }
    const Level* ext = x->ext;
    NodePtr norm = sub(mul(x->a, x->a), mul(mul(x->b, x->b), ext->radicand));
    if (is_zero(norm)) {
        // Only reachable on a level whose independence is unproven: then
        // a = b*sqrt(r) and x = 2a.
        return inv(scale(x->a, mpq_class(2)));
    }
    NodePtr ninv = inv(norm);
    return raw_ext(ext, mul(x->a, ninv), neg(mul(x->b, ninv)));
}

std::size_t leaf_count(const NodePtr& x, std::size_t cap) {
    if (x->level == 0) return 1;
    std::size_t n = leaf_count(x->a, cap);
    if (n >= cap) return n;
    return n + leaf_count(x->b, cap - n);
}

mpz_class leaf_denominator(const NodePtr& x) {
    if (x->level == 0) return x->value.get_den();
    mpz_class da = leaf_denominator(x->a);
    mpz_class db = leaf_denominator(x->b);
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
    return l;
}

namespace {

struct Term {
    mpq_class coefficient;
    std::vector<const Level*> radicals;
};

void flatten(const NodePtr& x, std::vector<const Level*>& prefix, std::vector<Term>& out) {
    if (x->level == 0) {
        if (sgn(x->value) != 0) out.push_back(Term{x->value, prefix});
        return;
    }
    flatten(x->a, prefix, out);
    prefix.push_back(x->ext);
    flatten(x->b, prefix, out);
    prefix.pop_back();
}

std::string term_body(const Term& t) {
    mpz_class num = abs(t.coefficient.get_num());
    const mpz_class& den = t.coefficient.get_den();
    std::string s;
    if (t.radicals.empty()) {
        s = num.get_str();
    } else {
        if (num != 1) s = num.get_str() + "*";
        for (std::size_t i = 0; i < t.radicals.size(); ++i) {
            if (i > 0) s += "*";
            s += "sqrt(" + t.radicals[i]->radicand_text + ")";
        }
    }
    if (den != 1) s += "/" + den.get_str();
    return s;
}

/// floor(y) for exact y, using the enclosure as a starting bracket.
mpz_class exact_floor(const Quantity& y) {
    auto guess = [](double d) {
        mpz_class z;
        mpz_set_d(z.get_mpz_t(), std::floor(d));
        return z;
    };
    if (y.is_rational()) {
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), y.rational().get_num_mpz_t(), y.rational().get_den_mpz_t());
        return f;
    }
    double estimate = y.to_double();
    mpz_class lo, hi;
    if (std::isfinite(estimate) && std::fabs(estimate) < 1e300) {
        double width = std::max(1.0, std::fabs(estimate) * 1e-12);
        lo = guess(estimate - width);
        hi = guess(estimate + width) + 1;
    } else {
        lo = -1;
        hi = 1;
    }
    mpz_class step = 1;
    while (cmp(y, Quantity(mpq_class(lo))) < 0) {
        lo -= step;
        step *= 2;
    }
    step = 1;
    while (cmp(y, Quantity(mpq_class(hi))) >= 0) {
        hi += step;
        step *= 2;
    }
    while (hi - lo > 1) {
        mpz_class mid = (lo + hi) / 2;
        if (cmp(y, Quantity(mpq_class(mid))) >= 0)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

}  // namespace detail

struct QuantityAccess {
    static const detail::NodePtr& node(const Quantity& q) { return q.node_; }
    static Quantity wrap(detail::NodePtr n) { return Quantity(std::move(n)); }
};

namespace detail {

std::string node_to_string(const NodePtr& x) { return QuantityAccess::wrap(x).to_string(); }

}  // namespace detail

Quantity::Quantity() : node_(detail::zero_node()) {}

Quantity::Quantity(long value) : node_(detail::make_rational(mpq_class(value))) {}

Quantity::Quantity(const mpq_class& value) {
    mpq_class v = value;
    v.canonicalize();
    node_ = detail::make_rational(v);
}

Quantity::Quantity(long numerator, long denominator) {
    if (denominator == 0) throw DivisionByZero();
    mpq_class v(numerator, denominator);
    v.canonicalize();
    node_ = detail::make_rational(v);
}

Quantity operator+(const Quantity& a, const Quantity& b) {
    return Quantity(detail::add(a.node_, b.node_));
}

Quantity operator-(const Quantity& a, const Quantity& b) {
    return Quantity(detail::sub(a.node_, b.node_));
}

Quantity operator*(const Quantity& a, const Quantity& b) {
    return Quantity(detail::mul(a.node_, b.node_));
}

Quantity operator/(const Quantity& a, const Quantity& b) {
    return Quantity(detail::mul(a.node_, detail::inv(b.node_)));
}

Quantity Quantity::operator-() const { return Quantity(detail::neg(node_)); }

Quantity Quantity::inverse() const { return Quantity(detail::inv(node_)); }

int Quantity::sign() const { return detail::sign(node_); }

bool Quantity::is_zero() const { return detail::is_zero(node_); }

bool Quantity::is_rational() const { return node_->level == 0; }

const mpq_class& Quantity::rational() const { return node_->value; }

int Quantity::level() const { return node_->level; }

bool operator==(const Quantity& a, const Quantity& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->level == 0 && b.node_->level == 0) return a.node_->value == b.node_->value;
    return detail::is_zero(detail::sub(a.node_, b.node_));
}

std::strong_ordering operator<=>(const Quantity& a, const Quantity& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    int s;
    if (a.node_->level == 0 && b.node_->level == 0)
        s = cmp(a.node_->value, b.node_->value);
    else
        s = detail::sign(detail::sub(a.node_, b.node_));
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering cmp(const Quantity& a, const Quantity& b) { return a <=> b; }

std::string Quantity::to_string() const {
    std::vector<detail::Term> terms;
    std::vector<const detail::Level*> prefix;
    detail::flatten(node_, prefix, terms);
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        bool negative = sgn(terms[i].coefficient) < 0;
        if (i == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += detail::term_body(terms[i]);
    }
    return out;
}

double Quantity::to_double() const {
    if (node_->level == 0) return node_->value.get_d();
    const auto& e = node_->enclosure;
    if (e.finite()) return e.lo / 2 + e.hi / 2;
    return std::stod(approx(17));
}

std::string Quantity::approx(int digits) const {
    if (digits < 1) throw std::invalid_argument("approx requires at least one digit");
    mpz_class scale_factor;
    mpz_ui_pow_ui(scale_factor.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Quantity magnitude = abs(*this);
    // round half away from zero: floor(|x| * 10^n + 1/2)
    Quantity scaled = magnitude * Quantity(mpq_class(scale_factor)) + Quantity(1, 2);
    mpz_class n = detail::exact_floor(scaled);
    std::string digits_str = n.get_str();
    if (digits_str.size() <= static_cast<std::size_t>(digits))
        digits_str.insert(0, static_cast<std::size_t>(digits) + 1 - digits_str.size(), '0');
    std::string out = digits_str.substr(0, digits_str.size() - digits) + "." +
                      digits_str.substr(digits_str.size() - digits);
    if (sign() < 0 && n != 0) out.insert(0, "-");
    return out;
}

Quantity sqrt(const Quantity& a) { return Quantity(detail::tower_sqrt(a.node_)); }

Quantity abs(const Quantity& a) { return a.sign() < 0 ? -a : a; }

std::string approx(const Quantity& a, int digits) { return a.approx(digits); }

std::ostream& operator<<(std::ostream& os, const Quantity& q) { return os << q.to_string(); }

}  // namespace reldyn
