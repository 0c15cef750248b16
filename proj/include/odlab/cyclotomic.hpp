#pragma once

#include <complex>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace odlab {

using Integer = boost::multiprecision::cpp_int;

inline Integer integer_gcd(Integer a, Integer b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer r = a % b;
        a = b;
        b = r;
    }
    return a;
}

namespace detail {

/// Euler totient, trial division (orders here are tiny).
inline unsigned totient(unsigned n) {
    unsigned result = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

/// Exact division of integer polynomials, quotient returned (num / den).
/// Requires den monic-ish leading coefficient dividing exactly; used only for
/// (x^L - 1) / prod(Phi_d) where the division is exact over Z.
inline std::vector<Integer> poly_divide_exact(std::vector<Integer> num,
                                              const std::vector<Integer>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    if (num.size() < den.size()) throw std::logic_error("poly_divide_exact: degree underflow");
    std::vector<Integer> q(num.size() - den.size() + 1, 0);
    const Integer& lead = den.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        Integer c = num[k + den.size() - 1] / lead;
        if (c * lead != num[k + den.size() - 1])
            throw std::logic_error("poly_divide_exact: not divisible");
        q[k] = c;
        for (std::size_t t = 0; t < den.size(); ++t) num[k + t] -= c * den[t];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
    return q;
}

/// Cyclotomic polynomial Phi_L as coefficient vector (degree phi(L)), via
/// x^L - 1 = prod_{d | L} Phi_d.
inline std::vector<Integer> cyclotomic_polynomial(unsigned L) {
    if (L == 1) return {Integer(-1), Integer(1)};
    std::vector<Integer> num(L + 1, 0);
    num[0] = -1;
    num[L] = 1;
    for (unsigned d = 1; d < L; ++d) {
        if (L % d == 0) num = poly_divide_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

struct CyclotomicOrderData {
    unsigned order = 0;
    unsigned degree = 0;               // phi(L)
    std::vector<Integer> phi;          // Phi_L, monic, size degree+1
    std::vector<std::vector<Integer>> root_table;  // canonical vector of zeta^t, t in [0, L)
};

class CyclotomicCache {
public:
    static const CyclotomicOrderData& get(unsigned L);

private:
    std::shared_mutex mutex_;
    std::map<unsigned, CyclotomicOrderData> data_;
};

}  // namespace detail

/// Cyclotomic integer: element of Z[zeta_L], zeta_L a primitive L-th root of
/// unity. Coefficient vector has length L, position t holding the integer
/// multiple of zeta_L^t; values are kept reduced modulo Phi_L so that equality
/// is plain vector comparison.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1, 0) {}

    explicit Cyclotomic(unsigned order) : order_(checked_order(order)), coeffs_(order, 0) {}

    Cyclotomic(unsigned order, Integer constant) : Cyclotomic(order) {
        coeffs_[0] = std::move(constant);
        // constants are already canonical for L > 1; Phi_1 = x - 1 leaves degree 0 too
    }

    /// Canonical reduction of a raw coefficient vector (any length) mod Phi_L.
    static Cyclotomic reduce(unsigned order, const std::vector<Integer>& raw) {
        Cyclotomic c(order);
        for (std::size_t t = 0; t < raw.size(); ++t) c.coeffs_[t % order] += raw[t];
        c.reduce_in_place();
        return c;
    }

    static Cyclotomic root(unsigned order, long long power) {
        Cyclotomic c(order);
        long long t = power % static_cast<long long>(order);
        if (t < 0) t += order;
        c.coeffs_[static_cast<std::size_t>(t)] = 1;
        c.reduce_in_place();
        return c;
    }

    unsigned order() const { return order_; }
    const std::vector<Integer>& coefficients() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    /// The value as a rational integer, if it is one.
    std::optional<Integer> as_integer() const {
        for (std::size_t t = 1; t < coeffs_.size(); ++t)
            if (coeffs_[t] != 0) return std::nullopt;
        return coeffs_[0];
    }

    /// If the value equals zeta_L^t for some t, return t. (-1 is zeta^(L/2)
    /// for even L; odd orders cannot represent it as a root of that order.)
    std::optional<unsigned> as_root_of_unity() const {
        const auto& data = detail::CyclotomicCache::get(order_);
        for (unsigned t = 0; t < order_; ++t)
            if (coeffs_ == data.root_table[t]) return t;
        return std::nullopt;
    }

    bool is_unit_root() const { return as_root_of_unity().has_value(); }

    Cyclotomic lifted(unsigned target_order) const {
        if (target_order == order_) return *this;
        if (target_order % order_ != 0)
            throw std::invalid_argument("Cyclotomic::lifted: target order not a multiple");
        Cyclotomic out(target_order);
        const unsigned stride = target_order / order_;
        for (unsigned t = 0; t < order_; ++t) out.coeffs_[t * stride] = coeffs_[t];
        out.reduce_in_place();
        return out;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = aligned(a, b);
        for (unsigned t = 0; t < x.order_; ++t) x.coeffs_[t] += y.coeffs_[t];
        x.reduce_in_place();
        return x;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = aligned(a, b);
        for (unsigned t = 0; t < x.order_; ++t) x.coeffs_[t] -= y.coeffs_[t];
        x.reduce_in_place();
        return x;
    }

    Cyclotomic operator-() const {
        Cyclotomic out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = aligned(a, b);
        Cyclotomic out(x.order_);
        for (unsigned s = 0; s < x.order_; ++s) {
            if (x.coeffs_[s] == 0) continue;
            for (unsigned t = 0; t < y.order_; ++t) {
                if (y.coeffs_[t] == 0) continue;
                out.coeffs_[(s + t) % out.order_] += x.coeffs_[s] * y.coeffs_[t];
            }
        }
        out.reduce_in_place();
        return out;
    }

    Cyclotomic& operator+=(const Cyclotomic& other) { return *this = *this + other; }
    Cyclotomic& operator-=(const Cyclotomic& other) { return *this = *this - other; }
    Cyclotomic& operator*=(const Cyclotomic& other) { return *this = *this * other; }

    Cyclotomic operator*(const Integer& k) const {
        Cyclotomic out = *this;
        for (auto& c : out.coeffs_) c *= k;
        return out;
    }

    /// Complex conjugation: zeta^t -> zeta^(-t).
    Cyclotomic conj() const {
        Cyclotomic out(order_);
        for (unsigned t = 0; t < order_; ++t) out.coeffs_[(order_ - t) % order_] += coeffs_[t];
        out.reduce_in_place();
        return out;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
        auto [x, y] = aligned(a, b);
        return x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Lexicographic order on (order, coeffs); only used as a container key.
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order_ != b.order_) return a.order_ < b.order_;
        return a.coeffs_ < b.coeffs_;
    }

    /// gcd of all coefficients (0 for the zero value).
    Integer content() const {
        Integer g = 0;
        for (const auto& c : coeffs_) g = integer_gcd(g, c);
        return g;
    }

    /// Exact division by a rational integer; throws if any coefficient is not divisible.
    Cyclotomic divided_exact(const Integer& k) const {
        if (k == 0) throw std::domain_error("Cyclotomic: division by zero");
        Cyclotomic out = *this;
        for (auto& c : out.coeffs_) {
            if (c % k != 0) throw std::domain_error("Cyclotomic: inexact integer division");
            c /= k;
        }
        return out;
    }

    std::complex<double> to_complex() const {
        std::complex<double> acc = 0.0;
        constexpr double two_pi = 6.283185307179586476925286766559;
        for (unsigned t = 0; t < order_; ++t) {
            if (coeffs_[t] == 0) continue;
            double angle = two_pi * static_cast<double>(t) / static_cast<double>(order_);
            acc += static_cast<double>(coeffs_[t]) * std::polar(1.0, angle);
        }
        return acc;
    }

    std::string to_string() const;

private:
    static unsigned checked_order(unsigned order) {
        if (order < 1) throw std::invalid_argument("Cyclotomic: order must be >= 1");
        return order;
    }

    static std::pair<Cyclotomic, Cyclotomic> aligned(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order_ == b.order_) return {a, b};
        unsigned l = std::lcm(a.order_, b.order_);
        return {a.lifted(l), b.lifted(l)};
    }

    void reduce_in_place() {
        const auto& data = detail::CyclotomicCache::get(order_);
        const unsigned deg = data.degree;
        for (unsigned i = order_; i-- > deg;) {
            if (coeffs_[i] == 0) continue;
            Integer c = coeffs_[i];
            coeffs_[i] = 0;
            const unsigned shift = i - deg;
            for (unsigned t = 0; t < deg; ++t) coeffs_[shift + t] -= c * data.phi[t];
        }
    }

    unsigned order_;
    std::vector<Integer> coeffs_;
};

namespace detail {

inline const CyclotomicOrderData& CyclotomicCache::get(unsigned L) {
    static CyclotomicCache cache;
    {
        std::shared_lock lock(cache.mutex_);
        auto it = cache.data_.find(L);
        if (it != cache.data_.end()) return it->second;
    }
    CyclotomicOrderData d;
    d.order = L;
    d.degree = totient(L);
    d.phi = cyclotomic_polynomial(L);
    auto reduce_vec = [&d, L](std::vector<Integer> v) {
        for (unsigned i = L; i-- > d.degree;) {
            if (v[i] == 0) continue;
            Integer c = v[i];
            v[i] = 0;
            for (unsigned t = 0; t < d.degree; ++t) v[i - d.degree + t] -= c * d.phi[t];
        }
        return v;
    };
    d.root_table.reserve(L);
    for (unsigned t = 0; t < L; ++t) {
        std::vector<Integer> v(L, 0);
        v[t] = 1;
        d.root_table.push_back(reduce_vec(std::move(v)));
    }
    std::unique_lock lock(cache.mutex_);
    return cache.data_.emplace(L, std::move(d)).first->second;
}

}  // namespace detail

inline std::string Cyclotomic::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (unsigned t = 0; t < order_; ++t) {
        if (coeffs_[t] == 0) continue;
        Integer c = coeffs_[t];
        if (!out.empty()) {
            out += (c < 0) ? " - " : " + ";
            if (c < 0) c = -c;
        } else if (c < 0) {
            out += "-";
            c = -c;
        }
        if (t == 0) {
            out += c.str();
        } else {
            if (c != 1) out += c.str() + "*";
            out += "w";
            if (t != 1) out += "^" + std::to_string(t);
        }
    }
    return out;
}

/// Spec-facing alias: canonical reduction in Z[zeta_L].
inline Cyclotomic cyc_reduce(const std::vector<Integer>& raw, unsigned order) {
    return Cyclotomic::reduce(order, raw);
}

}  // namespace odlab
