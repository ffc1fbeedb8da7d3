#ifndef MH_RATFUNC_HPP
#define MH_RATFUNC_HPP

#include "mh/poly.hpp"
#include "mh/series.hpp"

namespace mh {

// num/den over a field, reduced (gcd 1) and with den monic.
template <class K>
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }
    static RatFunc from_poly(Poly<K> p, const K& sample) {
        return RatFunc(std::move(p), Poly<K>::constant(ring_one(sample)));
    }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // evaluation at a point where den does not vanish
    K eval(const K& x) const {
        return num_.eval(x) * ring_inv(den_.eval(x));
    }

private:
    void normalize() {
        if (den_.is_zero_poly()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero_poly()) {
            den_ = Poly<K>::constant(ring_one(den_.lc()));
            return;
        }
        Poly<K> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_divexact(num_, g);
            den_ = poly_divexact(den_, g);
        }
        K s = ring_inv(den_.lc());
        num_ = s * num_;
        den_ = s * den_;
    }
    Poly<K> num_, den_;
};

template <class K>
RatFunc<K> ring_zero(const RatFunc<K>& x) {
    K s = x.den().lc();
    return RatFunc<K>(Poly<K>(), Poly<K>::constant(ring_one(s)));
}
template <class K>
RatFunc<K> ring_one(const RatFunc<K>& x) {
    K s = x.den().lc();
    return RatFunc<K>(Poly<K>::constant(ring_one(s)), Poly<K>::constant(ring_one(s)));
}
template <class K>
RatFunc<K> ring_from_int(const RatFunc<K>& x, const Integer& n) {
    K s = x.den().lc();
    return RatFunc<K>(Poly<K>::constant(ring_from_int(s, n)), Poly<K>::constant(ring_one(s)));
}
template <class K>
bool is_zero(const RatFunc<K>& a) { return a.num().is_zero_poly(); }
template <class K>
bool is_unit(const RatFunc<K>& a) { return !a.num().is_zero_poly(); }
template <class K>
RatFunc<K> ring_inv(const RatFunc<K>& a) {
    if (a.num().is_zero_poly()) throw std::domain_error("ring_inv: zero rational function");
    return RatFunc<K>(a.den(), a.num());
}

// series expansion of num/den at t = 0 to the given precision (den(0) must
// be a unit)
template <class K>
Series<K> ratfunc_to_series(const RatFunc<K>& f, size_t prec) {
    const K sample = f.den().lc();
    auto to_series = [&](const Poly<K>& p) {
        std::vector<K> c(prec, ring_zero(sample));
        for (size_t i = 0; i < c.size() && static_cast<int>(i) <= p.degree(); ++i)
            c[i] = p[i];
        return Series<K>(std::move(c));
    };
    return to_series(f.num()) * ring_inv(to_series(f.den()));
}

} // namespace mh

#endif
