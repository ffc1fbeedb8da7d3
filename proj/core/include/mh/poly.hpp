#ifndef MH_POLY_HPP
#define MH_POLY_HPP

#include <utility>
#include <vector>

#include "mh/ringops.hpp"

namespace mh {

// Dense univariate polynomial, coefficients low to high. The zero polynomial
// has an empty coefficient vector; otherwise the leading coefficient is
// nonzero.
template <class K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<K> c) : c_(std::move(c)) { trim(); }
    explicit Poly(const K& c0) : c_{c0} { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const K& a) { return Poly(std::vector<K>{a}); }
    // T - a
    static Poly linear_root(const K& a) {
        return Poly(std::vector<K>{ring_zero(a) - a, ring_one(a)});
    }

    bool is_zero_poly() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    const K& lc() const { return c_.back(); }
    const K& operator[](size_t i) const { return c_[i]; }
    K coeff_or_zero(size_t i, const K& sample) const {
        return i < c_.size() ? c_[i] : ring_zero(sample);
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        if (a.c_.empty()) return b;
        if (b.c_.empty()) return a;
        std::vector<K> r = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
        const std::vector<K>& s = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
        for (size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        if (b.c_.empty()) return a;
        std::vector<K> r;
        size_t n = std::max(a.c_.size(), b.c_.size());
        r.reserve(n);
        const K& sample = b.c_[0];
        for (size_t i = 0; i < n; ++i) {
            K ai = i < a.c_.size() ? a.c_[i] : ring_zero(sample);
            K bi = i < b.c_.size() ? b.c_[i] : ring_zero(sample);
            r.push_back(ai - bi);
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.c_.empty() || b.c_.empty()) return Poly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, ring_zero(a.c_[0]));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const K& a, const Poly& b) {
        if (is_zero(a) || b.c_.empty()) return Poly();
        std::vector<K> r;
        r.reserve(b.c_.size());
        for (const K& x : b.c_) r.push_back(a * x);
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    K eval(const K& x) const {
        if (c_.empty()) return ring_zero(x);
        K acc = c_.back();
        for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> r;
        r.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i)
            r.push_back(ring_from_int(c_[0], Integer(static_cast<long>(i))) * c_[i]);
        return Poly(std::move(r));
    }

    Poly shifted(size_t k) const { // multiply by T^k
        if (c_.empty()) return Poly();
        std::vector<K> r(c_.size() + k, ring_zero(c_[0]));
        for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return Poly(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
bool is_monic(const Poly<K>& a) {
    return !a.is_zero_poly() && a.lc() == ring_one(a.lc());
}

template <class K>
Poly<K> monic(const Poly<K>& a) {
    if (a.is_zero_poly()) return a;
    return ring_inv(a.lc()) * a;
}

// a = q*b + r with deg r < deg b; b must have an invertible leading
// coefficient (always true over a field).
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divrem(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero_poly()) throw std::domain_error("poly_divrem: zero divisor");
    if (a.is_zero_poly() || a.degree() < b.degree()) return {Poly<K>(), a};
    K inv_lb = ring_inv(b.lc());
    std::vector<K> rem = a.coeffs();
    int dq = a.degree() - b.degree();
    std::vector<K> quo(static_cast<size_t>(dq) + 1, ring_zero(inv_lb));
    for (int i = dq; i >= 0; --i) {
        K c = rem[static_cast<size_t>(i + b.degree())] * inv_lb;
        quo[static_cast<size_t>(i)] = c;
        if (!is_zero(c))
            for (int j = 0; j <= b.degree(); ++j)
                rem[static_cast<size_t>(i + j)] = rem[static_cast<size_t>(i + j)] - c * b[static_cast<size_t>(j)];
    }
    rem.resize(static_cast<size_t>(b.degree() < 0 ? 0 : b.degree()));
    return {Poly<K>(std::move(quo)), Poly<K>(std::move(rem))};
}

template <class K>
Poly<K> poly_mod(const Poly<K>& a, const Poly<K>& b) {
    return poly_divrem(a, b).second;
}

// exact division; throws if the remainder is nonzero
template <class K>
Poly<K> poly_divexact(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero_poly()) throw std::domain_error("poly_divexact: not divisible");
    return q;
}

// monic gcd with Bezout cofactors: u*a + v*b = g
template <class K>
struct Xgcd {
    Poly<K> g, u, v;
};

template <class K>
Xgcd<K> poly_xgcd(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero_poly() && b.is_zero_poly())
        throw std::domain_error("poly_xgcd: both arguments zero");
    const K sample = a.is_zero_poly() ? b.coeffs()[0] : a.coeffs()[0];
    Poly<K> r0 = a, r1 = b;
    Poly<K> u0 = Poly<K>::constant(ring_one(sample)), u1;
    Poly<K> v0, v1 = Poly<K>::constant(ring_one(sample));
    while (!r1.is_zero_poly()) {
        auto [q, r] = poly_divrem(r0, r1);
        Poly<K> u2 = u0 - q * u1;
        Poly<K> v2 = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    K s = ring_inv(r0.lc());
    return {s * r0, s * u0, s * v0};
}

template <class K>
Poly<K> poly_gcd(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero_poly() && b.is_zero_poly()) return Poly<K>();
    return poly_xgcd(a, b).g;
}

// inverse of a mod q (q monic, gcd(a, q) = 1)
template <class K>
Poly<K> poly_invmod(const Poly<K>& a, const Poly<K>& q) {
    auto e = poly_xgcd(a, q);
    if (e.g.degree() != 0) throw std::domain_error("poly_invmod: not invertible");
    return poly_mod(e.u, q);
}

// Solves, over a field, the system kappa_c(x) = 0 for each node c, where
// kappa_c(x) = x_1 + c x_2 + ... + c^(n-1) x_n + c^n. Nodes must be pairwise
// distinct.
template <class K>
std::vector<K> vandermonde_affine_solve(const std::vector<K>& nodes) {
    size_t n = nodes.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (nodes[i] == nodes[j])
                throw std::domain_error("vandermonde_affine_solve: repeated node");
    // x is the coefficient vector of the degree-(n-1) polynomial P with
    // P(c) = -c^n at every node; recover it by Lagrange interpolation.
    if (n == 0) return {};
    const K sample = nodes[0];
    Poly<K> acc; // interpolant
    for (size_t i = 0; i < n; ++i) {
        Poly<K> li = Poly<K>::constant(ring_one(sample));
        K denom = ring_one(sample);
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            li = li * Poly<K>::linear_root(nodes[j]);
            denom = denom * (nodes[i] - nodes[j]);
        }
        K pow = ring_one(sample);
        for (size_t k = 0; k < n; ++k) pow = pow * nodes[i];
        K value = ring_zero(sample) - pow; // -c^n
        acc = acc + (value * ring_inv(denom)) * li;
    }
    std::vector<K> x;
    x.reserve(n);
    for (size_t i = 0; i < n; ++i) x.push_back(acc.coeff_or_zero(i, sample));
    return x;
}

// rtilde = r / gcd(r, r') (squarefree part), r1 = rtilde / gcd(rtilde, r')
// (product of the multiplicity-one roots); both monic. Requires the field
// characteristic to be 0 or > deg(r).
template <class K>
std::pair<Poly<K>, Poly<K>> squarefree_and_multiplicity_one(const Poly<K>& r) {
    if (r.is_zero_poly()) throw std::domain_error("squarefree: zero polynomial");
    if (r.degree() == 0) {
        Poly<K> one = Poly<K>::constant(ring_one(r.lc()));
        return {one, one};
    }
    Poly<K> rp = r.derivative();
    Poly<K> g = poly_gcd(r, rp);
    Poly<K> rtilde = monic(poly_divexact(r, g));
    Poly<K> g2 = poly_gcd(rtilde, rp);
    Poly<K> r1 = monic(poly_divexact(rtilde, g2));
    return {rtilde, r1};
}

} // namespace mh

#endif
