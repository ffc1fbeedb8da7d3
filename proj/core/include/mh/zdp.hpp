#ifndef MH_ZDP_HPP
#define MH_ZDP_HPP

#include <string>
#include <vector>

#include "mh/mod.hpp"
#include "mh/poly.hpp"
#include "mh/quot.hpp"

namespace mh {

struct NotSeparating : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (q, v_1..v_N, lambda) with q monic squarefree and the trace identity
// lambda(v) = T q' mod q; the points are x_i = v_i(tau)/q'(tau) at the roots
// tau of q. The empty set is q = 1, v_i = 0.
template <class K>
struct ZeroDimParam {
    Poly<K> q;
    std::vector<Poly<K>> v;
    std::vector<Integer> lambda;

    int degree() const { return q.degree(); }
};

struct ValidateReport {
    bool ok = true;
    std::string reason;
};

template <class K>
K lambda_value(const std::vector<Integer>& lam, const std::vector<K>& x) {
    K acc = ring_zero(x[0]);
    for (size_t i = 0; i < lam.size(); ++i)
        acc = acc + ring_from_int(x[0], lam[i]) * x[i];
    return acc;
}

template <class K>
Poly<K> lambda_poly(const std::vector<Integer>& lam, const std::vector<Poly<K>>& w,
                    const K& sample) {
    Poly<K> acc;
    for (size_t i = 0; i < lam.size(); ++i)
        acc = acc + ring_from_int(sample, lam[i]) * w[i];
    return acc;
}

// structural checks plus the trace identity; squarefree_check controls the
// gcd(q, q') = 1 test (skip it for p-adic coefficients, where the caller
// checks the mod-p image instead)
template <class K>
ValidateReport validate(const ZeroDimParam<K>& P, bool squarefree_check = true) {
    if (P.q.is_zero_poly() || !is_monic(P.q)) return {false, "q not monic"};
    if (P.lambda.size() != P.v.size()) return {false, "lambda arity mismatch"};
    if (P.v.empty()) return {false, "no coordinate polynomials"};
    bool lam_zero = true;
    for (const Integer& c : P.lambda)
        if (c != 0) lam_zero = false;
    if (lam_zero) return {false, "lambda is zero"};
    for (const auto& vi : P.v)
        if (vi.degree() >= P.q.degree()) return {false, "deg v_i >= deg q"};
    if (P.q.degree() == 0) return {true, ""};
    const K sample = P.q.lc();
    Poly<K> qp = P.q.derivative();
    if (squarefree_check && poly_gcd(P.q, qp).degree() != 0)
        return {false, "q not squarefree"};
    Poly<K> lhs = poly_mod(lambda_poly(P.lambda, P.v, sample), P.q);
    Poly<K> t_qp = poly_mod(Poly<K>(std::vector<K>{ring_zero(sample), ring_one(sample)}) * qp, P.q);
    if (!(lhs == t_qp)) return {false, "trace identity fails"};
    return {true, ""};
}

template <class K>
ZeroDimParam<K> empty_param(size_t N, const K& sample, std::vector<Integer> lambda) {
    ZeroDimParam<K> P;
    P.q = Poly<K>::constant(ring_one(sample));
    P.v.assign(N, Poly<K>());
    P.lambda = std::move(lambda);
    return P;
}

template <class K>
bool is_separating(const std::vector<Integer>& lam,
                   const std::vector<std::vector<K>>& pts) {
    std::vector<K> vals;
    vals.reserve(pts.size());
    for (const auto& x : pts) vals.push_back(lambda_value(lam, x));
    for (size_t i = 0; i < vals.size(); ++i)
        for (size_t j = i + 1; j < vals.size(); ++j)
            if (vals[i] == vals[j]) return false;
    return true;
}

// q = prod (T - lambda(x)); v_i = sum_x x_i prod_{x' != x} (T - lambda(x'))
template <class K>
ZeroDimParam<K> interpolate_from_points(const std::vector<std::vector<K>>& pts,
                                        std::vector<Integer> lam) {
    if (pts.empty()) throw std::invalid_argument("interpolate: no points");
    if (!is_separating(lam, pts))
        throw NotSeparating("interpolate: lambda values collide");
    const K sample = pts[0][0];
    size_t N = pts[0].size();
    ZeroDimParam<K> P;
    P.lambda = std::move(lam);
    P.q = Poly<K>::constant(ring_one(sample));
    for (const auto& x : pts) P.q = P.q * Poly<K>::linear_root(lambda_value(P.lambda, x));
    P.v.assign(N, Poly<K>());
    for (const auto& x : pts) {
        Poly<K> others = Poly<K>::constant(ring_one(sample));
        for (const auto& y : pts) {
            if (&y == &x) continue;
            others = others * Poly<K>::linear_root(lambda_value(P.lambda, y));
        }
        for (size_t i = 0; i < N; ++i) P.v[i] = P.v[i] + x[i] * others;
    }
    return P;
}

// the candidate family u^(i) = (1, i, i^2, ..., i^(N-1)); for N = 1 the
// single form (1)
inline std::vector<Integer> candidate_form(size_t N, const Integer& i) {
    std::vector<Integer> lam{Integer(1)};
    Integer pw = 1;
    for (size_t j = 1; j < N; ++j) {
        pw *= i;
        lam.push_back(pw);
    }
    return lam;
}

inline Integer separating_family_size(size_t N, const Integer& k) {
    if (N <= 1) return 1;
    return 8 * Integer(static_cast<long>(N - 1)) * k;
}

// conversion to the monic-value convention: w_i = v_i (q')^-1 mod q, so that
// x_i = w_i(tau) at each root
template <class K>
std::vector<Poly<K>> to_monic_value(const Poly<K>& q, const std::vector<Poly<K>>& v) {
    if (q.degree() == 0) return std::vector<Poly<K>>(v.size());
    auto qp = std::make_shared<const Poly<K>>(q);
    QuotElem<K> inv = ring_inv(QuotElem<K>(q.derivative(), qp));
    std::vector<Poly<K>> w;
    w.reserve(v.size());
    for (const auto& vi : v) w.push_back((QuotElem<K>(vi, qp) * inv).rep());
    return w;
}

template <class K>
std::vector<Poly<K>> from_monic_value(const Poly<K>& q, const std::vector<Poly<K>>& w) {
    if (q.degree() == 0) return std::vector<Poly<K>>(w.size());
    Poly<K> qp = q.derivative();
    std::vector<Poly<K>> v;
    v.reserve(w.size());
    for (const auto& wi : w) v.push_back(poly_mod(wi * qp, q));
    return v;
}

} // namespace mh

#endif
