#pragma once

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclotomic.hpp"

namespace odlab {

/// Commuting monomial in complex indeterminates x_1..x_u and their formal
/// conjugates: for each variable index, a pair (d, d') of exponents of x and
/// x^*. Trailing zero pairs are trimmed, so the variable count is implicit.
class Monomial {
public:
    struct Exps {
        unsigned plain = 0;
        unsigned starred = 0;
        friend auto operator<=>(const Exps&, const Exps&) = default;
    };

    Monomial() = default;

    static Monomial unit() { return Monomial(); }

    static Monomial variable(std::size_t index, bool starred = false, unsigned degree = 1) {
        Monomial m;
        m.exps_.resize(index + 1);
        (starred ? m.exps_[index].starred : m.exps_[index].plain) = degree;
        return m;
    }

    /// |x_index|^2 = x x^*.
    static Monomial abs_square(std::size_t index) {
        Monomial m;
        m.exps_.resize(index + 1);
        m.exps_[index] = {1, 1};
        return m;
    }

    bool is_unit() const { return exps_.empty(); }

    std::size_t max_index() const { return exps_.size(); }

    Exps exponents(std::size_t index) const {
        return index < exps_.size() ? exps_[index] : Exps{};
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& e : exps_) d += e.plain + e.starred;
        return d;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        m.exps_.resize(std::max(a.exps_.size(), b.exps_.size()));
        for (std::size_t i = 0; i < m.exps_.size(); ++i) {
            m.exps_[i].plain = a.exponents(i).plain + b.exponents(i).plain;
            m.exps_[i].starred = a.exponents(i).starred + b.exponents(i).starred;
        }
        return m;  // no trim needed: products of trimmed monomials stay trimmed
    }

    /// Swap x_i <-> x_i^* in every slot.
    Monomial conj() const {
        Monomial m = *this;
        for (auto& e : m.exps_) std::swap(e.plain, e.starred);
        return m;
    }

    /// Fold x^* into x for the flagged (real) variables.
    Monomial real_folded(const std::vector<bool>& real_flags) const {
        Monomial m = *this;
        for (std::size_t i = 0; i < m.exps_.size() && i < real_flags.size(); ++i) {
            if (real_flags[i]) {
                m.exps_[i].plain += m.exps_[i].starred;
                m.exps_[i].starred = 0;
            }
        }
        return m;
    }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exps> exps_;
};

/// Numeric quaternion z + w j with complex z, w; the evaluation codomain.
struct Quat {
    std::complex<double> z{0.0, 0.0};
    std::complex<double> w{0.0, 0.0};

    friend Quat operator+(const Quat& a, const Quat& b) { return {a.z + b.z, a.w + b.w}; }
    friend Quat operator-(const Quat& a, const Quat& b) { return {a.z - b.z, a.w - b.w}; }
    Quat operator-() const { return {-z, -w}; }

    friend Quat operator*(const Quat& a, const Quat& b) {
        return {a.z * b.z - a.w * std::conj(b.w), a.z * b.w + a.w * std::conj(b.z)};
    }

    Quat conj() const { return {std::conj(z), -w}; }

    double norm() const { return std::norm(z) + std::norm(w); }
    double abs() const { return std::sqrt(norm()); }
};

inline bool approx_zero(const Quat& q, double tol = 1e-9) { return q.abs() <= tol; }

/// Polynomial over Z[zeta_L] in the commuting monomials above. All stored
/// coefficients are nonzero and share the polynomial's root order.
class CPolynomial {
public:
    using TermMap = std::map<Monomial, Cyclotomic>;

    explicit CPolynomial(unsigned order = 4) : order_(order) {}

    static CPolynomial constant(Cyclotomic c) {
        CPolynomial p(c.order());
        if (!c.is_zero()) p.terms_.emplace(Monomial::unit(), std::move(c));
        return p;
    }

    static CPolynomial constant(unsigned order, Integer value) {
        return constant(Cyclotomic(order, std::move(value)));
    }

    static CPolynomial term(Monomial m, Cyclotomic c) {
        CPolynomial p(c.order());
        if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    unsigned order() const { return order_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Cyclotomic coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Cyclotomic(order_) : it->second;
    }

    CPolynomial lifted(unsigned target) const {
        if (target == order_) return *this;
        CPolynomial out(target);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.lifted(target));
        return out;
    }

    void add_term(const Monomial& m, const Cyclotomic& c) {
        if (c.is_zero()) return;
        Cyclotomic cc = c.order() == order_ ? c : c.lifted(order_);
        auto [it, inserted] = terms_.try_emplace(m, cc);
        if (!inserted) {
            it->second += cc;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// *this += p * q, without materializing intermediates.
    void accumulate_product(const CPolynomial& p, const CPolynomial& q) {
        for (const auto& [mp, cp] : p.terms_)
            for (const auto& [mq, cq] : q.terms_) add_term(mp * mq, cp * cq);
    }

    friend CPolynomial operator+(const CPolynomial& a, const CPolynomial& b) {
        auto [x, y] = aligned(a, b);
        for (const auto& [m, c] : y.terms_) x.add_term(m, c);
        return x;
    }

    friend CPolynomial operator-(const CPolynomial& a, const CPolynomial& b) {
        auto [x, y] = aligned(a, b);
        for (const auto& [m, c] : y.terms_) x.add_term(m, -c);
        return x;
    }

    CPolynomial operator-() const {
        CPolynomial out(order_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    friend CPolynomial operator*(const CPolynomial& a, const CPolynomial& b) {
        auto [x, y] = aligned(a, b);
        CPolynomial out(x.order_);
        out.accumulate_product(x, y);
        return out;
    }

    CPolynomial& operator+=(const CPolynomial& o) { return *this = *this + o; }
    CPolynomial& operator-=(const CPolynomial& o) { return *this = *this - o; }
    CPolynomial& operator*=(const CPolynomial& o) { return *this = *this * o; }

    CPolynomial operator*(const Integer& k) const {
        if (k == 0) return CPolynomial(order_);
        CPolynomial out(order_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * k);
        return out;
    }

    /// Complex conjugation: conjugate coefficients, star-swap monomials.
    CPolynomial conj() const {
        CPolynomial out(order_);
        for (const auto& [m, c] : terms_) out.add_term(m.conj(), c.conj());
        return out;
    }

    CPolynomial real_folded(const std::vector<bool>& real_flags) const {
        CPolynomial out(order_);
        for (const auto& [m, c] : terms_) out.add_term(m.real_folded(real_flags), c);
        return out;
    }

    friend bool operator==(const CPolynomial& a, const CPolynomial& b) {
        if (a.order_ == b.order_) return a.terms_ == b.terms_;
        auto [x, y] = aligned(a, b);
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const CPolynomial& a, const CPolynomial& b) { return !(a == b); }

    std::complex<double> evaluate(const std::vector<std::complex<double>>& values) const {
        std::complex<double> acc = 0.0;
        for (const auto& [m, c] : terms_) {
            std::complex<double> v = c.to_complex();
            for (std::size_t i = 0; i < m.max_index(); ++i) {
                auto e = m.exponents(i);
                if (e.plain == 0 && e.starred == 0) continue;
                if (i >= values.size())
                    throw std::invalid_argument("CPolynomial::evaluate: unassigned variable index " +
                                                std::to_string(i));
                for (unsigned t = 0; t < e.plain; ++t) v *= values[i];
                for (unsigned t = 0; t < e.starred; ++t) v *= std::conj(values[i]);
            }
            acc += v;
        }
        return acc;
    }

private:
    static std::pair<CPolynomial, CPolynomial> aligned(const CPolynomial& a, const CPolynomial& b) {
        if (a.order_ == b.order_) return {a, b};
        unsigned l = std::lcm(a.order_, b.order_);
        return {a.lifted(l), b.lifted(l)};
    }

    unsigned order_;
    TermMap terms_;
};

/// Quaternion-valued polynomial a + b j. The complex part a and j-part b are
/// CPolynomials; all of H's noncommutativity is carried by the product rule
///   (a1 + b1 j)(a2 + b2 j) = (a1 a2 - b1 conj(b2)) + (a1 b2 + b1 conj(a2)) j.
/// A nonzero j-part requires 4 | L so that k = zeta^(L/4) j exists.
class QPolynomial {
public:
    explicit QPolynomial(unsigned order = 4)
        : a_(order), b_(order) {}

    QPolynomial(CPolynomial a, CPolynomial b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_.order() != b_.order()) {
            unsigned l = std::lcm(a_.order(), b_.order());
            a_ = a_.lifted(l);
            b_ = b_.lifted(l);
        }
        check_j_order();
    }

    static QPolynomial complex_part(CPolynomial a) {
        unsigned l = a.order();
        return QPolynomial(std::move(a), CPolynomial(l));
    }

    static QPolynomial j_part(CPolynomial b) {
        unsigned l = b.order();
        return QPolynomial(CPolynomial(l), std::move(b));
    }

    static QPolynomial constant(unsigned order, Integer value) {
        return complex_part(CPolynomial::constant(order, std::move(value)));
    }

    static QPolynomial zero(unsigned order) { return QPolynomial(order); }
    static QPolynomial one(unsigned order) { return constant(order, 1); }

    /// The quaternion units over Z[zeta_L], 4 | L: i = zeta^(L/4), k = i j.
    static QPolynomial unit_i(unsigned order) {
        return complex_part(CPolynomial::constant(Cyclotomic::root(order, order / 4)));
    }
    static QPolynomial unit_j(unsigned order) {
        return j_part(CPolynomial::constant(order, 1));
    }
    static QPolynomial unit_k(unsigned order) {
        return j_part(CPolynomial::constant(Cyclotomic::root(order, order / 4)));
    }

    static QPolynomial variable(unsigned order, std::size_t index, bool starred = false) {
        return complex_part(
            CPolynomial::term(Monomial::variable(index, starred), Cyclotomic(order, 1)));
    }

    const CPolynomial& complex_coeff() const { return a_; }
    const CPolynomial& j_coeff() const { return b_; }
    unsigned order() const { return a_.order(); }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool has_j_part() const { return !b_.is_zero(); }
    std::size_t term_count() const { return a_.term_count() + b_.term_count(); }

    QPolynomial lifted(unsigned target) const {
        return QPolynomial(a_.lifted(target), b_.lifted(target));
    }

    friend QPolynomial operator+(const QPolynomial& p, const QPolynomial& q) {
        return QPolynomial(p.a_ + q.a_, p.b_ + q.b_);
    }
    friend QPolynomial operator-(const QPolynomial& p, const QPolynomial& q) {
        return QPolynomial(p.a_ - q.a_, p.b_ - q.b_);
    }
    QPolynomial operator-() const { return QPolynomial(-a_, -b_); }

    friend QPolynomial operator*(const QPolynomial& p, const QPolynomial& q) {
        QPolynomial out(std::lcm(p.order(), q.order()));
        out.accumulate_product(p, q);
        return out;
    }

    QPolynomial& operator+=(const QPolynomial& o) { return *this = *this + o; }
    QPolynomial& operator-=(const QPolynomial& o) { return *this = *this - o; }
    QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

    QPolynomial operator*(const Integer& k) const { return QPolynomial(a_ * k, b_ * k); }

    /// *this += p * q (the workhorse of matrix products).
    void accumulate_product(const QPolynomial& p, const QPolynomial& q) {
        unsigned l = order();
        QPolynomial pt(l), qt(l);
        if (p.order() != l) pt = p.lifted(l);
        if (q.order() != l) qt = q.lifted(l);
        const QPolynomial& pl = p.order() == l ? p : pt;
        const QPolynomial& ql = q.order() == l ? q : qt;
        if (!pl.a_.is_zero()) {
            if (!ql.a_.is_zero()) a_.accumulate_product(pl.a_, ql.a_);
            if (!ql.b_.is_zero()) b_.accumulate_product(pl.a_, ql.b_);
        }
        if (!pl.b_.is_zero()) {
            if (!ql.b_.is_zero()) {
                CPolynomial tmp(l);
                tmp.accumulate_product(pl.b_, ql.b_.conj());
                a_ -= tmp;
            }
            if (!ql.a_.is_zero()) b_.accumulate_product(pl.b_, ql.a_.conj());
        }
        check_j_order();
    }

    /// Quaternion conjugate: (a + b j)^* = conj(a) - b j.
    QPolynomial qconj() const { return QPolynomial(a_.conj(), -b_); }

    QPolynomial real_folded(const std::vector<bool>& real_flags) const {
        return QPolynomial(a_.real_folded(real_flags), b_.real_folded(real_flags));
    }

    friend bool operator==(const QPolynomial& p, const QPolynomial& q) {
        return p.a_ == q.a_ && p.b_ == q.b_;
    }
    friend bool operator!=(const QPolynomial& p, const QPolynomial& q) { return !(p == q); }

    Quat evaluate(const std::vector<std::complex<double>>& values) const {
        return Quat{a_.evaluate(values), b_.evaluate(values)};
    }

private:
    void check_j_order() const {
        if (!b_.is_zero() && a_.order() % 4 != 0)
            throw std::domain_error("QPolynomial: a j-part requires 4 | root order");
    }

    CPolynomial a_;
    CPolynomial b_;
};

/// Free-function spellings used throughout the construction code.
inline QPolynomial qmul(const QPolynomial& p, const QPolynomial& q) { return p * q; }
inline QPolynomial qconj(const QPolynomial& p) { return p.qconj(); }

}  // namespace odlab
