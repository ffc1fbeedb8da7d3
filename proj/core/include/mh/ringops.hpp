#ifndef MH_RINGOPS_HPP
#define MH_RINGOPS_HPP

#include <cmath>
#include <gmpxx.h>
#include <stdexcept>

// Ring-element customization points. Every coefficient type used by the
// generic polynomial/series/quotient layers provides, via overloads found by
// ordinary or argument-dependent lookup:
//
//   ring_zero(x), ring_one(x)       same-context constants
//   ring_from_int(x, n)             canonical image of an integer
//   is_zero(x), is_unit(x)
//   ring_inv(x)                     multiplicative inverse (unit required)
//   operators + - * and ==
//
// The first argument only carries context (modulus, precision, ...).

namespace mh {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational ring_zero(const Rational&) { return Rational(0); }
inline Rational ring_one(const Rational&) { return Rational(1); }
inline Rational ring_from_int(const Rational&, const Integer& n) { return Rational(n); }
inline bool is_zero(const Rational& a) { return a == 0; }
inline bool is_unit(const Rational& a) { return a != 0; }
inline Rational ring_inv(const Rational& a) {
    if (a == 0) throw std::domain_error("ring_inv: division by zero");
    return 1 / a;
}

inline double integer_log(const Integer& n) {
    if (n == 0) return 0.0;
    signed long exp2;
    double d = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    double l = std::log(std::abs(d)) + static_cast<double>(exp2) * std::log(2.0);
    return l < 0 ? 0.0 : l;
}

// height of a rational: max(log|u|, log v) for a = u/v in lowest terms
inline double rational_height(const Rational& a) {
    if (a == 0) return 0.0;
    double hu = integer_log(a.get_num());
    double hv = integer_log(a.get_den());
    return hu > hv ? hu : hv;
}

} // namespace mh

#endif
