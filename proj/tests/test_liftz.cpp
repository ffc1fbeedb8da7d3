#include <doctest.h>

#include "fixtures.hpp"
#include "mh/liftz.hpp"

using namespace mh;

namespace {

// residue of a rational with denominator coprime to the modulus
Mod to_mod(const Rational& x, const ModCtx& ctx) {
    return Mod(x.get_num(), ctx) * ring_inv(Mod(x.get_den(), ctx));
}

ZeroDimParam<Mod> golden_param_mod(const ModCtx& ctx) {
    ZeroDimParam<Mod> P;
    auto c = [&](const char* t) { return to_mod(Rational(t), ctx); };
    P.q = Poly<Mod>(std::vector<Mod>{c("11"), c("1")});
    P.v = {Poly<Mod>(std::vector<Mod>{c("-10")}),
           Poly<Mod>(std::vector<Mod>{c("1/2")}),
           Poly<Mod>(std::vector<Mod>{c("-1/2")})};
    P.lambda = fx::lambda124();
    return P;
}

// max residue distance to the exact rational value, as a power of p
Integer residue_error(const ZeroDimParam<Mod>& P, const Poly<Rational>& q_exact) {
    const Integer& m = P.q.lc().ring()->m;
    Integer worst = 0;
    for (int k = 0; k <= P.q.degree(); ++k) {
        Rational c = q_exact.coeff_or_zero(static_cast<size_t>(k), Rational(0));
        Integer diff = (P.q[static_cast<size_t>(k)] - to_mod(c, P.q.lc().ring())).value();
        if (diff > m / 2) diff = m - diff;
        if (diff > worst) worst = diff;
    }
    return worst;
}

} // namespace

TEST_CASE("prime oracle samples in the prescribed interval") {
    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
        Integer p = prime_oracle(Integer(1000), rng);
        CHECK(p > 1000);
        CHECK(p <= 2000);
        CHECK(mpz_probab_prime_p(p.get_mpz_t(), 30) != 0);
    }
    Integer p2 = prime_oracle(Integer(2), rng);
    CHECK(p2 == 3);
    Integer p10 = prime_oracle(Integer(10), rng);
    CHECK((p10 == 11 || p10 == 13 || p10 == 17 || p10 == 19));
}

TEST_CASE("one lift step doubles the precision exactly") {
    auto sys = fx::bilinear3();
    ModCtx fp = ModRing::make(Integer(10007));
    auto P = golden_param_mod(fp);
    CHECK(validate(P).ok);

    // exact answer over Q for comparison
    auto q_exact = fx::qpoly({"11", "1"});
    auto v2_exact = fx::qpoly({"1/2"});

    auto P2 = padic_lift_step(sys.prog, P);
    CHECK(P2.q.lc().ring()->k == 2);
    CHECK(validate(P2, false).ok);
    CHECK(residue_error(P2, q_exact) == 0);
    // v matches the true rational value mod p^2 as well
    const ModCtx& c2 = P2.q.lc().ring();
    CHECK(P2.v[1][0] == to_mod(Rational("1/2"), c2));

    auto P4 = padic_lift_step(sys.prog, P2);
    CHECK(P4.q.lc().ring()->k == 4);
    CHECK(validate(P4, false).ok);
    CHECK(residue_error(P4, q_exact) == 0);
    CHECK(P4.v[0][0] == to_mod(Rational("-10"), P4.q.lc().ring()));
}

TEST_CASE("lift step corrects a perturbed parametrization") {
    // start from residues that are wrong by a multiple of p; one step must
    // fix them mod p^2 up to the p^2 scale
    auto sys = fx::bilinear3();
    ModCtx fp = ModRing::make(Integer(101));
    auto P = golden_param_mod(fp);
    auto P2 = padic_lift_step(sys.prog, P);
    // residual of f at the lifted points vanishes mod p^2
    auto w = to_monic_value(P2.q, P2.v);
    auto qp = std::make_shared<const Poly<Mod>>(P2.q);
    std::vector<QuotElem<Mod>> pt;
    for (const auto& wi : w) pt.emplace_back(wi, qp);
    for (const auto& r : slp_eval(sys.prog, pt)) CHECK(is_zero(r));
}

TEST_CASE("rational reconstruction of the lifted parametrization") {
    auto sys = fx::bilinear3();
    ModCtx fp = ModRing::make(Integer(10007));
    auto P = golden_param_mod(fp);
    auto P2 = padic_lift_step(sys.prog, P);
    auto P4 = padic_lift_step(sys.prog, P2);
    // height 4 is plenty for coefficients -10, 1/2, 11
    auto R = reconstruct_over_q(P4, 4.0);
    CHECK(R.q == fx::qpoly({"11", "1"}));
    CHECK(R.v[0] == fx::qpoly({"-10"}));
    CHECK(R.v[1] == fx::qpoly({"1/2"}));
    CHECK(R.v[2] == fx::qpoly({"-1/2"}));
}

TEST_CASE("reconstruction refuses insufficient precision") {
    auto sys = fx::bilinear3();
    ModCtx fp = ModRing::make(Integer(10007));
    auto P = golden_param_mod(fp);
    CHECK_THROWS_AS(reconstruct_over_q(P, 40.0), ReconstructionError);
}

TEST_CASE("validate over Q") {
    auto sys = fx::bilinear3();
    ZeroDimParam<Rational> P;
    P.q = fx::qpoly({"11", "1"});
    P.v = {fx::qpoly({"-10"}), fx::qpoly({"1/2"}), fx::qpoly({"-1/2"})};
    P.lambda = fx::lambda124();
    CHECK(validate_over_q(P, sys.prog, sys.blocks, sys.d, sys.s).ok);

    auto bad = P;
    bad.v[0] = fx::qpoly({"-9"});
    auto rep = validate_over_q(bad, sys.prog, sys.blocks, sys.d, sys.s);
    CHECK_FALSE(rep.ok);
}

TEST_CASE("end to end solve over Z on the benchmark system") {
    auto sys = fx::bilinear3();
    auto R = solve_over_z(sys.prog, sys.blocks, sys.d, sys.s, 42, 3);
    REQUIRE(R.outcome == SolveOutcome::Success);
    REQUIRE(R.param.degree() == 1);
    // q = T - lambda(x) for the surviving point x = (-10, 1/2, -1/2)
    Rational tau = -R.param.q[0];
    Rational qp = R.param.q.derivative().eval(tau);
    CHECK(R.param.v[0].eval(tau) / qp == -10);
    CHECK(R.param.v[1].eval(tau) / qp == Rational(1, 2));
    CHECK(R.param.v[2].eval(tau) / qp == Rational(-1, 2));
    CHECK(R.modular_successes >= 1);
    CHECK(R.prime > R.ledger.B);
    CHECK(validate_over_q(R.param, sys.prog, sys.blocks, sys.d, sys.s).ok);
}

TEST_CASE("solve over Z is deterministic in the seed") {
    auto sys = fx::bilinear3();
    auto R1 = solve_over_z(sys.prog, sys.blocks, sys.d, sys.s, 7, 2);
    auto R2 = solve_over_z(sys.prog, sys.blocks, sys.d, sys.s, 7, 2);
    CHECK(R1.prime == R2.prime);
    CHECK(R1.param.q == R2.param.q);
    CHECK(R1.param.lambda == R2.param.lambda);
}

TEST_CASE("solve over Z with a forced small prime still verifies") {
    auto sys = fx::bilinear3();
    auto R = solve_over_z(sys.prog, sys.blocks, sys.d, sys.s, 42, 3,
                          Integer(10007));
    REQUIRE(R.outcome == SolveOutcome::Success);
    CHECK(R.prime == 10007);
    REQUIRE(R.param.degree() == 1);
    Rational tau = -R.param.q[0];
    CHECK(R.param.v[0].eval(tau) / R.param.q.derivative().eval(tau) == -10);
}

TEST_CASE("linear system over Z") {
    // x + y - 3 = 0, x - y - 1 = 0 with blocks {x}, {y}: unique root (2, 1)
    auto sys = parse_system_json(R"({
      "blocks": [["x"], ["y"]],
      "equations": ["x + y - 3", "x - y - 1"]
    })");
    auto R = solve_over_z(sys.prog, sys.blocks, sys.d, sys.s, 1, 2);
    REQUIRE(R.outcome == SolveOutcome::Success);
    REQUIRE(R.param.degree() == 1);
    Rational tau = -R.param.q[0];
    Rational qp = R.param.q.derivative().eval(tau);
    CHECK(R.param.v[0].eval(tau) / qp == 2);
    CHECK(R.param.v[1].eval(tau) / qp == 1);
}

TEST_CASE("system with no nonsingular roots yields the empty output") {
    // x^2 = 0 has only a singular root
    auto sys = parse_system_json(R"({
      "blocks": [["x"]],
      "equations": ["x^2"]
    })");
    auto R = solve_over_z(sys.prog, sys.blocks, sys.d, sys.s, 3, 2);
    REQUIRE(R.outcome == SolveOutcome::Success);
    CHECK(R.param.degree() == 0);
}

TEST_CASE("height bound conversion") {
    CHECK(height_to_integer_bound(0.0) == 2);
    Integer b = height_to_integer_bound(10.0);
    // 2^(ceil(10/ln2)+1) = 2^16
    CHECK(b == 65536);
    CHECK(mpz_get_d(b.get_mpz_t()) >= std::exp(10.0));
}
