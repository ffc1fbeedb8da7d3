#ifndef MH_RECONSTRUCT_HPP
#define MH_RECONSTRUCT_HPP

#include "mh/ratfunc.hpp"

namespace mh {

struct ReconstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Pade approximant of a truncated series: num/den with deg(num) <= dnum,
// deg(den) <= dden, den(0) a unit and num/den == s mod t^(dnum+dden+1).
// Requires precision(s) >= dnum + dden + 1. Throws ReconstructionError when
// the extended-Euclid halt yields den(0) = 0 or a residual mismatch.
template <class K>
RatFunc<K> pade_reconstruct(const Series<K>& s, int dnum, int dden) {
    size_t sigma = static_cast<size_t>(dnum + dden + 1);
    if (s.precision() < sigma)
        throw std::invalid_argument("pade_reconstruct: insufficient precision");
    const K sample = s[0];
    const K one = ring_one(sample);

    // Euclid on (t^sigma, S), halting when deg r <= dnum; the v-cofactor is
    // the denominator.
    std::vector<K> m(sigma + 1, ring_zero(sample));
    m.back() = one;
    Poly<K> r0(std::move(m));
    std::vector<K> sc(s.coeffs().begin(), s.coeffs().begin() + sigma);
    Poly<K> r1(std::move(sc));
    Poly<K> v0, v1 = Poly<K>::constant(one);
    while (!r1.is_zero_poly() && r1.degree() > dnum) {
        auto [q, r] = poly_divrem(r0, r1);
        Poly<K> v2 = v0 - q * v1;
        r0 = r1; r1 = r;
        v0 = v1; v1 = v2;
    }
    Poly<K> num = r1, den = v1;
    if (den.is_zero_poly() || is_zero(den.eval(ring_zero(sample))) || den.degree() > dden)
        throw ReconstructionError("pade_reconstruct: no admissible denominator");
    RatFunc<K> f(num, den);
    if (f.num().degree() > dnum || f.den().degree() > dden ||
        is_zero(f.den().eval(ring_zero(sample))))
        throw ReconstructionError("pade_reconstruct: degree constraints violated");
    // residual check against the full input precision we consumed
    Series<K> back = ratfunc_to_series(f, sigma);
    for (size_t i = 0; i < sigma; ++i)
        if (!(back[i] == s[i]))
            throw ReconstructionError("pade_reconstruct: residual mismatch");
    return f;
}

// Rational number u/v from its residue mod m: |u| <= bound, 0 < v <= bound,
// gcd(v, m) = 1, u = residue * v mod m. Unique when 2*bound^2 < m.
// Throws ReconstructionError when no such pair exists.
inline Rational rational_reconstruct(const Integer& residue, const Integer& modulus,
                                     const Integer& bound) {
    if (residue < 0 || residue >= modulus)
        throw std::invalid_argument("rational_reconstruct: residue out of range");
    if (2 * bound * bound >= modulus)
        throw std::invalid_argument("rational_reconstruct: modulus too small for bound");
    Integer r0 = modulus, r1 = residue;
    Integer t0 = 0, t1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    Integer u = r1, v = t1;
    if (v < 0) { u = -u; v = -v; }
    Integer g, av = abs(v);
    if (v == 0 || av > bound || abs(u) > bound)
        throw ReconstructionError("rational_reconstruct: no solution within bound");
    mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
    if (g != 1)
        throw ReconstructionError("rational_reconstruct: denominator shares a factor with the modulus");
    mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
    if (g != 1) { u /= g; v /= g; }
    // verify u = residue * v mod m
    Integer chk = (residue * v - u) % modulus;
    if (chk != 0)
        throw ReconstructionError("rational_reconstruct: verification failed");
    Rational q(u, v);
    q.canonicalize();
    return q;
}

} // namespace mh

#endif
