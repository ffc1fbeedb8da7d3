#ifndef MH_REALROOT_HPP
#define MH_REALROOT_HPP

#include <optional>
#include <vector>

#include "mh/poly.hpp"

namespace mh {

struct QInterval {
    Rational lo, hi;
    Rational width() const { return hi - lo; }
    bool exact() const { return lo == hi; }
};

inline QInterval qi_add(const QInterval& a, const QInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}
inline QInterval qi_mul(const QInterval& a, const QInterval& b) {
    Rational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    return {std::min(std::min(c1, c2), std::min(c3, c4)),
            std::max(std::max(c1, c2), std::max(c3, c4))};
}
inline QInterval qi_div(const QInterval& a, const QInterval& b) {
    if (b.lo <= 0 && b.hi >= 0) throw std::domain_error("interval division by zero");
    QInterval binv{1 / b.hi, 1 / b.lo};
    return qi_mul(a, binv);
}

// Horner evaluation with interval coefficients propagation
inline QInterval qi_eval(const Poly<Rational>& f, const QInterval& x) {
    if (f.is_zero_poly()) return {Rational(0), Rational(0)};
    QInterval acc{f.lc(), f.lc()};
    for (size_t i = f.coeffs().size() - 1; i-- > 0;) {
        acc = qi_mul(acc, x);
        acc = qi_add(acc, QInterval{f[i], f[i]});
    }
    return acc;
}

inline std::vector<Poly<Rational>> sturm_chain(const Poly<Rational>& q) {
    std::vector<Poly<Rational>> chain{q, q.derivative()};
    while (!chain.back().is_zero_poly() && chain.back().degree() > 0) {
        Poly<Rational> rem = poly_mod(chain[chain.size() - 2], chain.back());
        if (rem.is_zero_poly()) break;
        chain.push_back(Rational(-1) * rem);
    }
    return chain;
}

inline int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline int sign_variations(const std::vector<Poly<Rational>>& chain, const Rational& x) {
    int var = 0, prev = 0;
    for (const auto& f : chain) {
        int s = sign_of(f.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// number of distinct real roots of q in (a, b]
inline int roots_in(const std::vector<Poly<Rational>>& chain, const Rational& a,
                    const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

// Isolating intervals for all real roots of a squarefree q, one root per
// interval. Exact rational roots come back as zero-width intervals; the
// others as (a, b] with a sign change and q(a), q(b) != 0.
inline std::vector<QInterval> isolate_real_roots(const Poly<Rational>& q) {
    std::vector<QInterval> out;
    if (q.degree() <= 0) return out;
    Rational bound(1);
    for (int i = 0; i < q.degree(); ++i) {
        Rational r = abs(q[static_cast<size_t>(i)] / q.lc());
        if (r > bound) bound = r;
    }
    bound += 1;
    auto chain = sturm_chain(q);
    struct Seg {
        Rational a, b;
        int count;
    };
    std::vector<Seg> stack{{-bound, bound, roots_in(chain, -bound, bound)}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            if (sign_of(q.eval(s.b)) == 0) {
                out.push_back({s.b, s.b});
                continue;
            }
            // shrink until the endpoints bracket with a sign change
            Rational a = s.a, b = s.b;
            while (sign_of(q.eval(a)) == 0 || sign_of(q.eval(a)) == sign_of(q.eval(b))) {
                Rational mid = (a + b) / 2;
                int sm = sign_of(q.eval(mid));
                if (sm == 0) { a = mid; b = mid; break; }
                if (roots_in(chain, a, mid) == 1) b = mid;
                else a = mid;
            }
            out.push_back({a, b});
            continue;
        }
        Rational mid = (s.a + s.b) / 2;
        int left = roots_in(chain, s.a, mid);
        stack.push_back({s.a, mid, left});
        stack.push_back({mid, s.b, s.count - left});
    }
    std::sort(out.begin(), out.end(),
              [](const QInterval& x, const QInterval& y) { return x.lo < y.lo; });
    return out;
}

// Bisection refinement of a bracketing (or exact) interval down to the
// requested width.
inline void refine_root(const Poly<Rational>& q, QInterval& iv, const Rational& width) {
    if (iv.exact()) return;
    int slo = sign_of(q.eval(iv.lo));
    while (iv.width() > width) {
        Rational mid = (iv.lo + iv.hi) / 2;
        int sm = sign_of(q.eval(mid));
        if (sm == 0) {
            iv = {mid, mid};
            return;
        }
        if (sm == slo) iv.lo = mid;
        else iv.hi = mid;
    }
}

} // namespace mh

#endif
