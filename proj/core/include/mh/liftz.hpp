#ifndef MH_LIFTZ_HPP
#define MH_LIFTZ_HPP

#include <optional>

#include "mh/homotopy.hpp"

namespace mh {

// probable prime in {B+1, ..., 2B}, rejection-sampled
Integer prime_oracle(const Integer& B, Rng& rng);

inline ZeroDimParam<Mod> param_to_ctx(const ZeroDimParam<Mod>& P, const ModCtx& ctx) {
    ZeroDimParam<Mod> R;
    R.q = poly_map_ctx(P.q, ctx);
    for (const auto& vi : P.v) R.v.push_back(poly_map_ctx(vi, ctx));
    R.lambda = P.lambda;
    return R;
}

// One parametrization-level Newton step, from precision p^k to p^(2k).
// The point is moved by a Newton update in A = (Z/p^2k)[T]/(q) (Cramer with
// the division-free determinant; the determinant is invertible mod p), then
// q is corrected so that the lambda-values of the moved points are again the
// roots: with dl = lambda(w') - T (which is 0 mod p^k), to second order
//   q <- q - q' dl mod q,   w <- w' - w'' dl mod q.
inline ZeroDimParam<Mod> padic_lift_step(const Slp& f, const ZeroDimParam<Mod>& P) {
    const ModCtx& old = P.q.lc().ring();
    ModCtx ctx = ModRing::make(old->p, 2 * old->k);
    ZeroDimParam<Mod> R = param_to_ctx(P, ctx);
    if (R.q.degree() == 0) return R;
    const Mod sample = R.q.lc();

    auto qp = std::make_shared<const Poly<Mod>>(R.q);
    QuotElem<Mod> dq_inv = ring_inv(QuotElem<Mod>(R.q.derivative(), qp));
    size_t N = R.v.size();
    std::vector<QuotElem<Mod>> w;
    w.reserve(N);
    for (const auto& vi : R.v) w.push_back(QuotElem<Mod>(vi, qp) * dq_inv);

    std::vector<QuotElem<Mod>> F = slp_eval(f, w);
    std::vector<QuotElem<Mod>> J = slp_eval(slp_jacobian(f), w);
    Matrix<QuotElem<Mod>> m(N);
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) m[i].push_back(J[i * N + j]);
    std::vector<QuotElem<Mod>> delta = cramer_solve(m, F);

    std::vector<Poly<Mod>> wp;
    wp.reserve(N);
    for (size_t i = 0; i < N; ++i) wp.push_back((w[i] - delta[i]).rep());

    Poly<Mod> T(std::vector<Mod>{ring_zero(sample), ring_one(sample)});
    Poly<Mod> dl = poly_mod(lambda_poly(R.lambda, wp, sample) - T, R.q);
    Poly<Mod> qnew = R.q - poly_mod(R.q.derivative() * dl, R.q);
    std::vector<Poly<Mod>> wnew;
    wnew.reserve(N);
    for (const auto& wi : wp)
        wnew.push_back(poly_mod(wi - wi.derivative() * dl, qnew));

    ZeroDimParam<Mod> out;
    out.q = qnew;
    out.v = from_monic_value(qnew, wnew);
    out.lambda = R.lambda;
    return out;
}

inline Integer height_to_integer_bound(double h) {
    // 2^(ceil(h / ln 2) + 1) >= e^h, integer overestimate
    unsigned long ex = static_cast<unsigned long>(std::ceil(h / std::log(2.0))) + 1;
    Integer b;
    mpz_ui_pow_ui(b.get_mpz_t(), 2, ex);
    return b;
}

inline ZeroDimParam<Rational> reconstruct_over_q(const ZeroDimParam<Mod>& P,
                                                 double Hprime) {
    Integer bound = height_to_integer_bound(Hprime);
    const Integer& modulus = P.q.lc().ring()->m;
    if (2 * bound * bound >= modulus)
        throw ReconstructionError("reconstruct_over_q: p-adic precision too low");
    auto rec_poly = [&](const Poly<Mod>& u) {
        std::vector<Rational> c;
        for (int k = 0; k <= u.degree(); ++k)
            c.push_back(rational_reconstruct(u[static_cast<size_t>(k)].value(), modulus, bound));
        return Poly<Rational>(std::move(c));
    };
    ZeroDimParam<Rational> R;
    R.q = rec_poly(P.q);
    for (const auto& vi : P.v) R.v.push_back(rec_poly(vi));
    R.lambda = P.lambda;
    return R;
}

enum class SolveOutcome { Success, LowerDegreeSuspected, Fail };

struct SolveZResult {
    SolveOutcome outcome = SolveOutcome::Fail;
    ZeroDimParam<Rational> param;
    Integer prime;
    std::string fail_reason;
    unsigned modular_successes = 0;
    LiftingLedger ledger;
};

// full over-Q validation of a candidate output
inline ValidateReport validate_over_q(const ZeroDimParam<Rational>& P, const Slp& f,
                                      const BlockStructure& n, const MultiDegree& d,
                                      const std::vector<double>& s) {
    ValidateReport rep = validate(P);
    if (!rep.ok) return rep;
    Integer C = bezout_number(n, d);
    if (Integer(P.q.degree()) > C) return {false, "degree exceeds Bezout bound"};
    if (P.q.degree() > 0) {
        std::vector<Poly<Rational>> w = to_monic_value(P.q, P.v);
        auto qp = std::make_shared<const Poly<Rational>>(P.q);
        std::vector<QuotElem<Rational>> pt;
        for (const auto& wi : w) pt.emplace_back(wi, qp);
        for (const auto& res : slp_eval(f, pt))
            if (!is_zero(res)) return {false, "f residue nonzero"};
        Poly<Rational> D = jacobian_det_residue(f, P.q, w);
        if (poly_gcd(P.q, D).degree() != 0)
            return {false, "Jacobian determinant shares a root with q"};
    }
    double b = 0.0;
    for (const Integer& c : P.lambda) b = std::max(b, integer_log(c));
    double hb = output_height_bound(n, d, beta_vector(s, n, d), b);
    double hmax = 0.0;
    auto scan = [&](const Poly<Rational>& u) {
        for (int k = 0; k <= u.degree(); ++k)
            hmax = std::max(hmax, rational_height(u[static_cast<size_t>(k)]));
    };
    scan(P.q);
    for (const auto& vi : P.v) scan(vi);
    if (hmax > hb) return {false, "output height exceeds the bound"};
    return {true, ""};
}

SolveZResult solve_over_z(const Slp& f, const BlockStructure& n, const MultiDegree& d,
                          const std::vector<double>& s, uint64_t seed, unsigned repeat_k,
                          std::optional<Integer> prime_override = std::nullopt);

} // namespace mh

#endif
