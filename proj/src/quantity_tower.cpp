/* SPDX-License-Identifier: Apache-2.0 */

// The process-wide tower of quadratic extensions and the square-root search.
//
// A new level is adjoined only when the radicand has no square root in the
// current field. For rational radicands this is decided by linear algebra
// over GF(2) on square-free parts, plus a ramification argument: an odd
// prime that divides neither a rational radicand nor the norm of any other
// radicand cannot ramify in the tower, so its square root is not there.
// Non-rational radicands go through a bounded denesting search; when the
// bound is hit the new level is flagged as unproven and arithmetic on it
// keeps an explicit zero test so results stay exact.

#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <optional>

#include "quantity_internal.hpp"
#include "reldyn/errors.hpp"

namespace reldyn {

namespace detail {

namespace {

constexpr int kSearchBudget = 256;
constexpr std::size_t kNormLeafCap = 4096;
constexpr unsigned long kTrialLimit = 1000;

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

/// n = square^2 * free with free square-free as far as trial division and
/// perfect-power testing can tell. `pieces` multiply to `free`.
struct SquareFree {
    mpz_class square = 1;
    mpz_class free = 1;
    std::vector<mpz_class> pieces;
};

SquareFree square_free(mpz_class n) {
    SquareFree r;
    for (unsigned long p : small_primes()) {
        if (n == 1) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) r.square *= p;
        if (e % 2 == 1) {
            r.free *= p;
            r.pieces.emplace_back(p);
        }
    }
    if (n > 1) {
        if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
            mpz_class s;
            mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
            r.square *= s;
        } else {
            r.free *= n;
            r.pieces.push_back(n);
        }
    }
    return r;
}

class Bits {
public:
    bool test(std::size_t i) const {
        return i / 64 < words_.size() && ((words_[i / 64] >> (i % 64)) & 1U) != 0;
    }
    void set(std::size_t i) {
        if (words_.size() <= i / 64) words_.resize(i / 64 + 1, 0);
        words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    void flip(const Bits& o) {
        if (words_.size() < o.words_.size()) words_.resize(o.words_.size(), 0);
        for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
    }
    std::optional<std::size_t> lowest() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[i]));
        return std::nullopt;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct BasisRow {
    Bits atoms;
    Bits combination;  // positions in Tower::rational_
    std::size_t pivot = 0;
};

class Tower {
public:
    static Tower& instance() {
        static Tower tower;
        return tower;
    }

    NodePtr sqrt(const NodePtr& x);

    TowerStats stats() {
        std::lock_guard lock(mutex_);
        TowerStats s;
        s.levels = levels_.size();
        for (const Level& l : levels_) {
            if (l.rational) ++s.rational_levels;
            if (!l.independent) ++s.unproven_levels;
        }
        return s;
    }

private:
    struct RationalLevel {
        int index;
        mpz_class radicand;
    };

    struct Lookup {
        std::optional<NodePtr> root;
        bool proven = true;  // false: the search gave up
    };

    NodePtr sqrt_rational(const mpq_class& q);
    Lookup root_of_square_free(const SquareFree& sf, int height);
    std::optional<NodePtr> search(const NodePtr& x, int height);
    std::optional<NodePtr> search_rational(const mpq_class& q, int height);
    std::optional<NodePtr> search_by_quotients(const NodePtr& x, int lowest, int height);

    Bits atom_bits(const mpz_class& m) const;
    void refine_atoms(const mpz_class& piece);
    void rebuild_basis();
    void insert_basis(std::size_t position);
    bool prime_is_seen(const mpz_class& p, int height) const;
    bool has_nonrational_below(int height) const;

    const Level& publish(NodePtr radicand, bool rational, bool independent);

    std::mutex mutex_;
    std::deque<Level> levels_;
    std::vector<RationalLevel> rational_;
    std::vector<mpz_class> atoms_;
    std::vector<BasisRow> basis_;
    std::map<int, mpz_class> norms_;  // non-rational level -> |norm to Q|
    std::map<int, bool> norm_unknown_;
    std::map<mpq_class, NodePtr> rational_cache_;
    int budget_ = 0;
    bool exhausted_ = false;
};

/// q with x = q * y, decided on the representation alone.
std::optional<mpq_class> rational_ratio(const NodePtr& x, const NodePtr& y) {
    struct Walker {
        std::optional<mpq_class> ratio;
        bool match(const NodePtr& a, const NodePtr& b) {
            if (a->level != b->level) return false;
            if (a->level == 0) {
                if (sgn(a->value) == 0 || sgn(b->value) == 0) return sgn(a->value) == sgn(b->value);
                mpq_class r = a->value / b->value;
                if (!ratio) ratio = r;
                return *ratio == r;
            }
            return a->ext == b->ext && match(a->a, b->a) && match(a->b, b->b);
        }
    } walker;
    if (!walker.match(x, y) || !walker.ratio) return std::nullopt;
    return walker.ratio;
}

Bits Tower::atom_bits(const mpz_class& m) const {
    Bits b;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        if (mpz_divisible_p(m.get_mpz_t(), atoms_[i].get_mpz_t()) != 0) b.set(i);
    return b;
}

void Tower::refine_atoms(const mpz_class& piece) {
    std::vector<mpz_class> pending{piece};
    bool changed = false;
    while (!pending.empty()) {
        mpz_class p = pending.back();
        pending.pop_back();
        if (p == 1) continue;
        bool absorbed = false;
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), atoms_[i].get_mpz_t());
            if (g == 1) continue;
            absorbed = true;
            if (g != atoms_[i]) {
                mpz_class rest = atoms_[i] / g;
                atoms_[i] = g;
                atoms_.push_back(rest);
                changed = true;
            }
            pending.push_back(p / g);
            break;
        }
        if (!absorbed) atoms_.push_back(p);
    }
    if (changed) rebuild_basis();
}

void Tower::rebuild_basis() {
    basis_.clear();
    for (std::size_t i = 0; i < rational_.size(); ++i) insert_basis(i);
}

void Tower::insert_basis(std::size_t position) {
    BasisRow row;
    row.atoms = atom_bits(rational_[position].radicand);
    row.combination.set(position);
    for (const BasisRow& b : basis_) {
        if (row.atoms.test(b.pivot)) {
            row.atoms.flip(b.atoms);
            row.combination.flip(b.combination);
        }
    }
    auto pivot = row.atoms.lowest();
    if (!pivot) return;  // dependent; cannot happen for adjoined levels
    row.pivot = *pivot;
    basis_.push_back(std::move(row));
}

bool Tower::has_nonrational_below(int height) const {
    for (int i = 0; i < height; ++i)
        if (!levels_[static_cast<std::size_t>(i)].rational) return true;
    return false;
}

bool Tower::prime_is_seen(const mpz_class& p, int height) const {
    if (p == 2) return true;
    for (const auto& [index, norm] : norms_) {
        if (index >= height) break;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), norm.get_mpz_t());
        if (g != 1) return true;
    }
    for (const auto& [index, unknown] : norm_unknown_)
        if (index < height && unknown) return true;
    return false;
}

Tower::Lookup Tower::root_of_square_free(const SquareFree& sf, int height) {
    const mpz_class& m = sf.free;
    for (const mpz_class& piece : sf.pieces) refine_atoms(piece);

    Bits target = atom_bits(m);
    Bits combination;
    for (const BasisRow& b : basis_) {
        if (target.test(b.pivot)) {
            target.flip(b.atoms);
            combination.flip(b.combination);
        }
    }
    if (!target.lowest()) {
        bool usable = true;
        mpz_class product = 1;
        NodePtr root = one_node();
        for (std::size_t i = 0; i < rational_.size(); ++i) {
            if (!combination.test(i)) continue;
            if (rational_[i].index >= height) usable = false;
            product *= rational_[i].radicand;
            root = mul(root, levels_[static_cast<std::size_t>(rational_[i].index)].root);
        }
        if (usable) {
            // product = m * c^2 and root = sqrt(product)
            mpz_class c2 = product / m;
            mpz_class c;
            mpz_sqrt(c.get_mpz_t(), c2.get_mpz_t());
            return {scale(root, mpq_class(1, 1) / mpq_class(c)), true};
        }
    }

    if (!has_nonrational_below(height)) return {std::nullopt, true};

    // An odd prime of m that is unknown to every level cannot ramify there.
    for (const mpz_class& piece : sf.pieces) {
        bool in_rational = false;
        for (const RationalLevel& r : rational_) {
            if (r.index >= height) continue;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), piece.get_mpz_t(), r.radicand.get_mpz_t());
            if (g != 1) in_rational = true;
        }
        if (!in_rational && !prime_is_seen(piece, height)) return {std::nullopt, true};
    }

    // The root could still hide behind a non-rational level; such a search
    // is not attempted, so the answer is not a proof.
    return {std::nullopt, false};
}

std::optional<NodePtr> Tower::search_rational(const mpq_class& q, int height) {
    if (sgn(q) < 0) return std::nullopt;
    if (sgn(q) == 0) return zero_node();
    mpz_class n = q.get_num() * q.get_den();
    SquareFree sf = square_free(n);
    mpq_class coefficient(sf.square, q.get_den());
    coefficient.canonicalize();
    if (sf.free == 1) return make_rational(coefficient);
    Lookup r = root_of_square_free(sf, height);
    if (!r.proven) exhausted_ = true;
    if (!r.root) return std::nullopt;
    return scale(*r.root, coefficient);
}

std::optional<NodePtr> Tower::search_by_quotients(const NodePtr& x, int lowest, int height) {
    // y = d * sqrt(r_t) with d in F_t and d^2 = x / r_t. Only quotients that
    // are visibly rational are tried; anything else leaves the search open.
    for (int t = height - 1; t >= lowest; --t) {
        const Level& level = levels_[static_cast<std::size_t>(t)];
        if (auto ratio = rational_ratio(x, level.radicand)) {
            if (auto d = search_rational(*ratio, t)) return mul(*d, level.root);
        }
    }
    if (lowest < height) exhausted_ = true;
    return std::nullopt;
}

/// Nonnegative y in F_height with y^2 = x, if one exists.
std::optional<NodePtr> Tower::search(const NodePtr& x, int height) {
    if (is_zero(x)) return zero_node();
    if (sign(x) < 0) return std::nullopt;
    if (--budget_ < 0) {
        exhausted_ = true;
        return std::nullopt;
    }
    if (x->level == 0) return search_rational(x->value, height);

    const int j = x->level;
    const Level* ext = x->ext;

    // y = c + e*sqrt(r) in F_j: c^2 = (a +- n)/2 with n^2 = a^2 - b^2 r.
    NodePtr disc = sub(mul(x->a, x->a), mul(mul(x->b, x->b), ext->radicand));
    if (auto n = search(disc, j - 1)) {
        for (int s : {1, -1}) {
            NodePtr z = scale(add(x->a, s > 0 ? *n : neg(*n)), mpq_class(1, 2));
            if (sign(z) <= 0) continue;
            auto c = search(z, j - 1);
            if (!c) continue;
            NodePtr e = mul(x->b, inv(scale(*c, mpq_class(2))));
            NodePtr y = make_ext(ext, *c, e);
            if (sign(y) < 0) y = neg(y);
            return y;
        }
    }
    return search_by_quotients(x, j, height);
}

const Level& Tower::publish(NodePtr radicand, bool rational, bool independent) {
    Level level;
    level.index = static_cast<int>(levels_.size());
    level.rational = rational;
    level.independent = independent;
    level.root_enclosure = interval_sqrt(radicand->enclosure);
    level.radicand_text = node_to_string(radicand);
    level.radicand_inverse = inv(radicand);
    level.radicand = std::move(radicand);
    levels_.push_back(std::move(level));
    Level& stored = levels_.back();
    stored.root = make_ext(&stored, zero_node(), one_node());
    return stored;
}

NodePtr Tower::sqrt_rational(const mpq_class& q) {
    if (auto it = rational_cache_.find(q); it != rational_cache_.end()) return it->second;
    mpz_class n = q.get_num() * q.get_den();
    SquareFree sf = square_free(n);
    mpq_class coefficient(sf.square, q.get_den());
    coefficient.canonicalize();
    NodePtr result;
    if (sf.free == 1) {
        result = make_rational(coefficient);
    } else {
        budget_ = kSearchBudget;
        exhausted_ = false;
        Lookup r = root_of_square_free(sf, static_cast<int>(levels_.size()));
        if (r.root) {
            result = scale(*r.root, coefficient);
        } else {
            const Level& level = publish(make_rational(mpq_class(sf.free)), true, r.proven);
            rational_.push_back(RationalLevel{level.index, sf.free});
            insert_basis(rational_.size() - 1);
            result = scale(level.root, coefficient);
        }
    }
    rational_cache_.emplace(q, result);
    return result;
}

/// |N_{F/Q}(x)| by repeated relative norms, or nullopt when too large.
std::optional<mpz_class> absolute_norm(NodePtr x) {
    while (x->level > 0) {
        if (leaf_count(x, kNormLeafCap) >= kNormLeafCap) return std::nullopt;
        x = sub(mul(x->a, x->a), mul(mul(x->b, x->b), x->ext->radicand));
    }
    if (sgn(x->value) == 0 || x->value.get_den() != 1) return std::nullopt;
    return abs(x->value.get_num());
}

NodePtr Tower::sqrt(const NodePtr& x) {
    int s = detail::sign(x);
    if (s < 0) throw NegativeRadicand();
    if (s == 0) return zero_node();
    std::lock_guard lock(mutex_);
    if (x->level == 0) return sqrt_rational(x->value);

    budget_ = kSearchBudget;
    exhausted_ = false;
    if (auto y = search(x, static_cast<int>(levels_.size()))) return *y;

    // Scale to an algebraic integer so the norm argument above applies.
    mpz_class denominator = leaf_denominator(x);
    NodePtr radicand = scale(x, mpq_class(denominator * denominator));
    const Level& level = publish(radicand, false, !exhausted_);
    if (auto norm = absolute_norm(radicand))
        norms_[level.index] = *norm;
    else
        norm_unknown_[level.index] = true;
    return scale(level.root, mpq_class(mpz_class(1), denominator));
}

}  // namespace

NodePtr tower_sqrt(const NodePtr& x) { return Tower::instance().sqrt(x); }

}  // namespace detail

TowerStats tower_stats() { return detail::Tower::instance().stats(); }

}  // namespace reldyn
