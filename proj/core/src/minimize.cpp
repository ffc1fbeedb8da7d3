#include "mh/minimize.hpp"

namespace mh {

Slp build_lagrange_system(const MinimizationProblem& prob, const std::vector<Integer>& u) {
    if (prob.p < 1 || prob.p > prob.n)
        throw std::invalid_argument("lagrange system: need 1 <= p <= n");
    if (u.size() != prob.p) throw std::invalid_argument("lagrange system: u size");
    bool uzero = true;
    for (const Integer& c : u)
        if (c != 0) uzero = false;
    if (uzero) throw std::invalid_argument("lagrange system: u = 0");

    Slp W;
    W.arity = prob.n + prob.p;
    std::vector<uint32_t> xmap(prob.n);
    for (unsigned i = 0; i < prob.n; ++i) xmap[i] = i;

    std::vector<uint32_t> houts = slp_append(W, prob.h, xmap);
    W.outputs = houts;

    Slp J = slp_jacobian(prob.h); // p x n, row-major
    std::vector<uint32_t> jouts = slp_append(W, J, xmap);
    for (unsigned j = 1; j < prob.n; ++j) {
        uint32_t acc = 0;
        bool any = false;
        for (unsigned k = 0; k < prob.p; ++k) {
            uint32_t term = W.push(Slp::Op::Mul, prob.n + k, jouts[k * prob.n + j]);
            acc = any ? W.push(Slp::Op::Add, acc, term) : term;
            any = true;
        }
        W.outputs.push_back(acc);
    }

    uint32_t acc = 0;
    bool any = false;
    for (unsigned k = 0; k < prob.p; ++k) {
        if (u[k] == 0) continue;
        uint32_t term = W.push(Slp::Op::Mul, W.push_const(u[k]), prob.n + k);
        acc = any ? W.push(Slp::Op::Add, acc, term) : term;
        any = true;
    }
    W.outputs.push_back(W.push(Slp::Op::Sub, acc, W.push_const(Integer(1))));
    return W;
}

std::vector<Integer> choose_u(unsigned p, const Integer& delta, Rng& rng) {
    if (p == 1) return {Integer(1)};
    Integer span = 8 * Integer(static_cast<long>(p - 1)) * delta;
    Integer i = rng.range(Integer(1), span);
    std::vector<Integer> u{Integer(1)};
    Integer pw = 1;
    for (unsigned k = 1; k < p; ++k) {
        pw *= i;
        u.push_back(pw);
    }
    return u;
}

CriticalPointsResult critical_points(const MinimizationProblem& prob, uint64_t seed,
                                     unsigned repeat_k, std::optional<Integer> prime_override) {
    CriticalPointsResult R;
    R.nx = prob.n;
    R.bounds = lagrange_bounds(prob.n, prob.p, prob.d, prob.s);
    Rng rng(seed);
    Integer delta = R.bounds.C > 0 ? R.bounds.C : Integer(1);
    R.u = choose_u(prob.p, delta, rng);
    Slp W = build_lagrange_system(prob, R.u);
    SolveZResult res = solve_over_z(W, R.bounds.blocks, R.bounds.d, R.bounds.svec,
                                    rng.next(), repeat_k, prime_override);
    R.outcome = res.outcome;
    R.prime = res.prime;
    R.fail_reason = res.fail_reason;
    if (res.outcome != SolveOutcome::Fail) R.full = std::move(res.param);
    return R;
}

std::optional<QInterval> isolate_minimum(const ZeroDimParam<Rational>& P, unsigned sigma) {
    if (P.q.degree() <= 0) return std::nullopt;
    std::vector<QInterval> roots = isolate_real_roots(P.q);
    if (roots.empty()) return std::nullopt;
    Poly<Rational> qp = P.q.derivative();
    const Poly<Rational>& v1 = P.v.at(0);
    Rational target = Rational(1);
    target >>= sigma; // 2^-sigma
    std::optional<QInterval> best;
    for (QInterval iv : roots) {
        Rational w = iv.exact() ? Rational(1) : iv.width();
        QInterval x1;
        while (true) {
            if (iv.exact()) {
                Rational val = v1.eval(iv.lo) / qp.eval(iv.lo);
                x1 = {val, val};
                break;
            }
            refine_root(P.q, iv, w);
            try {
                QInterval den = qi_eval(qp, iv);
                x1 = qi_div(qi_eval(v1, iv), den);
            } catch (const std::domain_error&) {
                w /= 4;
                continue;
            }
            if (x1.width() <= target) break;
            w /= 4;
        }
        if (!best) {
            best = x1;
        } else {
            best->lo = std::min(best->lo, x1.lo);
            best->hi = std::min(best->hi, x1.hi);
        }
    }
    return best;
}

} // namespace mh
