#include "mh/liftz.hpp"

#include <algorithm>

namespace mh {

Integer prime_oracle(const Integer& B, Rng& rng) {
    if (B < 2) throw std::invalid_argument("prime_oracle: B >= 2 required");
    while (true) {
        Integer c = rng.range(B + 1, 2 * B);
        if (mpz_probab_prime_p(c.get_mpz_t(), 64) > 0) return c;
    }
}

SolveZResult solve_over_z(const Slp& f, const BlockStructure& n, const MultiDegree& d,
                          const std::vector<double>& s, uint64_t seed, unsigned repeat_k,
                          std::optional<Integer> prime_override) {
    SolveZResult R;
    R.ledger = lifting_ledger(n, d, s);
    size_t N = n.total();
    const Integer& C = R.ledger.C;

    if (C == 0) {
        R.outcome = SolveOutcome::Success;
        R.param = empty_param(N, Rational(0), candidate_form(N, Integer(1)));
        return R;
    }

    Rng rng(seed);
    // the prime must also exceed the separating-family index range, so that
    // the random lambda draw is meaningful mod p
    Integer Beff = std::max({R.ledger.B, R.ledger.e, separating_family_size(N, C * C)});
    Integer p = prime_override ? *prime_override : prime_oracle(Beff, rng);
    R.prime = p;
    ModCtx fp = ModRing::make(p, 1);
    Mod sample(0, fp);
    Slp fmodp = slp_reduce_mod_p(f, p);

    std::vector<ZeroDimParam<Mod>> candidates;
    for (unsigned r = 0; r < std::max(1u, repeat_k); ++r) {
        ModSolveResult<Mod> res = nonsingular_solutions(fmodp, n, d, sample, rng);
        if (res.ok) candidates.push_back(std::move(res.param));
    }
    R.modular_successes = static_cast<unsigned>(candidates.size());
    if (candidates.empty()) {
        R.fail_reason = "all modular runs failed";
        return R;
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.degree() > b.degree(); });
    bool degrees_disagree = candidates.front().degree() != candidates.back().degree();

    Integer bound = height_to_integer_bound(R.ledger.Hprime);
    Integer threshold = 2 * bound * bound;
    for (auto& cand : candidates) {
        try {
            ZeroDimParam<Rational> over_q;
            if (cand.degree() == 0) {
                over_q = empty_param(N, Rational(0), cand.lambda);
            } else {
                ZeroDimParam<Mod> cur = cand;
                Integer modulus = p;
                while (modulus <= threshold) {
                    cur = padic_lift_step(f, cur);
                    modulus = cur.q.lc().ring()->m;
                }
                over_q = reconstruct_over_q(cur, R.ledger.Hprime);
            }
            ValidateReport rep = validate_over_q(over_q, f, n, d, s);
            if (!rep.ok) {
                R.fail_reason = rep.reason;
                continue;
            }
            R.param = std::move(over_q);
            R.outcome = degrees_disagree ? SolveOutcome::LowerDegreeSuspected
                                         : SolveOutcome::Success;
            return R;
        } catch (const ReconstructionError& ex) {
            R.fail_reason = ex.what();
        } catch (const std::domain_error& ex) {
            R.fail_reason = ex.what();
        }
    }
    R.outcome = SolveOutcome::Fail;
    return R;
}

} // namespace mh
