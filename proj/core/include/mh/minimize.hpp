#ifndef MH_MINIMIZE_HPP
#define MH_MINIMIZE_HPP

#include "mh/liftz.hpp"
#include "mh/realroot.hpp"

namespace mh {

struct MinimizationProblem {
    unsigned n = 0;        // variables
    unsigned p = 0;        // constraints, 1 <= p <= n
    Slp h;                 // arity n, p outputs
    unsigned d = 1;        // max total degree of the h_i
    double s = 0.0;        // max height of the h_i
};

// W_u = (h, [L] jac(h, 1), u.L - 1) on inputs (X_1..X_n, L_1..L_p); the
// middle block is sum_k L_k dh_k/dX_j for j = 2..n
Slp build_lagrange_system(const MinimizationProblem& prob, const std::vector<Integer>& u);

// (1, i, i^2, ..., i^(p-1)) for random i in {1, ..., 8(p-1)delta}; (1) for p=1
std::vector<Integer> choose_u(unsigned p, const Integer& delta, Rng& rng);

struct CriticalPointsResult {
    SolveOutcome outcome = SolveOutcome::Fail;
    ZeroDimParam<Rational> full; // in the (X, L) variables
    unsigned nx = 0;             // number of X coordinates (projection keeps v_1..v_nx)
    Integer prime;
    std::vector<Integer> u;
    LagrangeBounds bounds;
    std::string fail_reason;
};

CriticalPointsResult critical_points(const MinimizationProblem& prob, uint64_t seed,
                                     unsigned repeat_k,
                                     std::optional<Integer> prime_override = std::nullopt);

// Enclosure of min x_1 over the real points of the parametrization, of width
// at most 2^-sigma; nullopt when q has no real roots.
std::optional<QInterval> isolate_minimum(const ZeroDimParam<Rational>& P, unsigned sigma);

} // namespace mh

#endif
