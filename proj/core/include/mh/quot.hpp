#ifndef MH_QUOT_HPP
#define MH_QUOT_HPP

#include <memory>

#include "mh/mod.hpp"
#include "mh/poly.hpp"

namespace mh {

// Element of K[T]/(q) for a shared monic modulus q.
template <class K>
class QuotElem {
public:
    using ModPtr = std::shared_ptr<const Poly<K>>;

    QuotElem() = default;
    QuotElem(Poly<K> rep, ModPtr q) : rep_(std::move(rep)), q_(std::move(q)) {
        rep_ = poly_mod(rep_, *q_);
    }

    const Poly<K>& rep() const { return rep_; }
    const Poly<K>& modulus() const { return *q_; }
    const ModPtr& modptr() const { return q_; }

    friend QuotElem operator+(const QuotElem& a, const QuotElem& b) {
        return QuotElem(a.rep_ + b.rep_, a.q_);
    }
    friend QuotElem operator-(const QuotElem& a, const QuotElem& b) {
        return QuotElem(a.rep_ - b.rep_, a.q_);
    }
    friend QuotElem operator*(const QuotElem& a, const QuotElem& b) {
        return QuotElem(a.rep_ * b.rep_, a.q_);
    }
    friend QuotElem operator-(const QuotElem& a) {
        return QuotElem(Poly<K>() - a.rep_, a.q_);
    }
    friend bool operator==(const QuotElem& a, const QuotElem& b) {
        return a.rep_ == b.rep_;
    }

private:
    Poly<K> rep_;
    ModPtr q_;
};

template <class K>
QuotElem<K> ring_zero(const QuotElem<K>& x) {
    return QuotElem<K>(Poly<K>(), x.modptr());
}
template <class K>
QuotElem<K> ring_one(const QuotElem<K>& x) {
    return QuotElem<K>(Poly<K>::constant(ring_one(x.modulus().lc())), x.modptr());
}
template <class K>
QuotElem<K> ring_from_int(const QuotElem<K>& x, const Integer& n) {
    return QuotElem<K>(Poly<K>::constant(ring_from_int(x.modulus().lc(), n)), x.modptr());
}
template <class K>
bool is_zero(const QuotElem<K>& a) { return a.rep().is_zero_poly(); }

// Over a field, a is a unit iff gcd(rep, q) = 1.
template <class K>
bool is_unit(const QuotElem<K>& a) {
    if (a.rep().is_zero_poly()) return false;
    return poly_gcd(a.rep(), a.modulus()).degree() == 0;
}
template <class K>
QuotElem<K> ring_inv(const QuotElem<K>& a) {
    return QuotElem<K>(poly_invmod(a.rep(), a.modulus()), a.modptr());
}

// Z/p^k specializations. Invertibility only depends on the image mod p, so
// invert there (where the coefficients form a field) and Newton-lift
// x <- x(2 - ax) back to the full modulus.

inline Poly<Mod> poly_map_ctx(const Poly<Mod>& a, const ModCtx& ctx) {
    std::vector<Mod> c;
    c.reserve(a.coeffs().size());
    for (const Mod& x : a.coeffs()) c.emplace_back(x.value(), ctx);
    return Poly<Mod>(std::move(c));
}

inline bool is_unit(const QuotElem<Mod>& a) {
    if (a.rep().is_zero_poly()) return false;
    const ModCtx& r = a.modulus().lc().ring();
    if (r->k == 1) return poly_gcd(a.rep(), a.modulus()).degree() == 0;
    ModCtx fp = ModRing::make(r->p, 1);
    Poly<Mod> ap = poly_map_ctx(a.rep(), fp);
    if (ap.is_zero_poly()) return false;
    return poly_gcd(ap, poly_map_ctx(a.modulus(), fp)).degree() == 0;
}

inline QuotElem<Mod> ring_inv(const QuotElem<Mod>& a) {
    const ModCtx& r = a.modulus().lc().ring();
    if (r->k == 1)
        return QuotElem<Mod>(poly_invmod(a.rep(), a.modulus()), a.modptr());
    ModCtx fp = ModRing::make(r->p, 1);
    Poly<Mod> x0 = poly_invmod(poly_map_ctx(a.rep(), fp), poly_map_ctx(a.modulus(), fp));
    Poly<Mod> x = poly_map_ctx(x0, r);
    Poly<Mod> two = Poly<Mod>::constant(Mod(2, r));
    unsigned prec = 1;
    while (prec < r->k) {
        x = poly_mod(x * (two - a.rep() * x), a.modulus());
        prec *= 2;
    }
    return QuotElem<Mod>(std::move(x), a.modptr());
}

} // namespace mh

#endif
