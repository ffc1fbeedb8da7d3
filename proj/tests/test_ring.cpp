#include <doctest.h>

#include "fixtures.hpp"
#include "mh/mod.hpp"
#include "mh/quot.hpp"
#include "mh/reconstruct.hpp"
#include "mh/rng.hpp"

using namespace mh;

namespace {
const Rational q0(0);
}

TEST_CASE("poly divrem") {
    auto a = fx::ipoly(q0, {0, 11, 1});  // T^2 + 11T
    auto b = fx::ipoly(q0, {11, 1});
    auto [q, r] = poly_divrem(a, b);
    CHECK(q == fx::ipoly(q0, {0, 1}));
    CHECK(r.is_zero_poly());

    auto one = fx::ipoly(q0, {1});
    auto [q2, r2] = poly_divrem(a, one);
    CHECK(q2 == a);
    CHECK(r2.is_zero_poly());

    auto qg = fx::ipoly(q0, {432, 174, 23, 1});
    auto [q3, r3] = poly_divrem(qg, fx::ipoly(q0, {6, 1}));
    CHECK(q3 == fx::ipoly(q0, {72, 17, 1}));
    CHECK(r3.is_zero_poly());
}

TEST_CASE("poly divrem random re-expansion over F_p") {
    ModCtx fp = ModRing::make(Integer(10007));
    Mod s0(0, fp);
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Mod> ac, bc;
        for (int i = 0; i < 8; ++i) ac.emplace_back(Integer(rng.below(uint64_t(10007))), fp);
        for (int i = 0; i < 4; ++i) bc.emplace_back(Integer(rng.below(uint64_t(10007))), fp);
        bc.emplace_back(Integer(1 + rng.below(uint64_t(10006))), fp);
        Poly<Mod> a(ac), b(bc);
        auto [q, r] = poly_divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("poly xgcd") {
    auto r = fx::ipoly(q0, {0, 11, 1});
    auto rp = r.derivative();
    auto e = poly_xgcd(r, rp);
    CHECK(e.g == fx::ipoly(q0, {1}));
    CHECK(e.u * r + e.v * rp == e.g);

    auto a = fx::ipoly(q0, {5, 3});
    auto z = poly_xgcd(a, Poly<Rational>());
    CHECK(z.g == monic(a));
    CHECK(z.u * a == z.g);

    auto p1 = fx::ipoly(q0, {1, 1});
    auto p2 = fx::ipoly(q0, {2, 1});
    auto e2 = poly_xgcd(p1 * p1, p1 * p2);
    CHECK(e2.g == p1);
    CHECK(e2.u * (p1 * p1) + e2.v * (p1 * p2) == p1);
}

TEST_CASE("pade reconstruction") {
    // geometric series
    std::vector<Rational> g(5, Rational(1));
    auto f = pade_reconstruct(Series<Rational>(g), 1, 1);
    CHECK(f.num() == fx::ipoly(q0, {-1}));
    CHECK(f.den() == fx::ipoly(q0, {-1, 1}));  // 1/(1-t) normalized monic

    // plain polynomial
    Series<Rational> s(std::vector<Rational>{Rational(2), Rational(3), Rational(0)});
    auto f2 = pade_reconstruct(s, 1, 1);
    CHECK(f2.num() == fx::ipoly(q0, {2, 3}));
    CHECK(f2.den() == fx::ipoly(q0, {1}));

    // (2+t)/(1-3t)
    RatFunc<Rational> target(fx::ipoly(q0, {2, 1}), fx::ipoly(q0, {1, -3}));
    auto back = pade_reconstruct(ratfunc_to_series(target, 5), 1, 1);
    CHECK(back == target);
}

TEST_CASE("pade round trips on random rational functions") {
    ModCtx fp = ModRing::make(Integer(10007));
    Rng rng(11);
    int done = 0;
    while (done < 100) {
        int dn = static_cast<int>(rng.below(uint64_t(4)));
        int dd = static_cast<int>(rng.below(uint64_t(4)));
        std::vector<Mod> nc, dc;
        for (int i = 0; i <= dn; ++i) nc.emplace_back(Integer(rng.below(uint64_t(10007))), fp);
        dc.emplace_back(Integer(1 + rng.below(uint64_t(10006))), fp); // den(0) != 0
        for (int i = 1; i <= dd; ++i) dc.emplace_back(Integer(rng.below(uint64_t(10007))), fp);
        Poly<Mod> num(nc), den(dc);
        if (num.is_zero_poly()) continue;
        RatFunc<Mod> f(num, den);
        if (is_zero(f.den().eval(Mod(0, fp)))) continue;
        auto back = pade_reconstruct(ratfunc_to_series(f, size_t(dn + dd + 1)), dn, dd);
        CHECK(back == f);
        ++done;
    }
}

TEST_CASE("rational reconstruction") {
    CHECK(rational_reconstruct(Integer(41), Integer(81), Integer(6)) == Rational(1, 2));
    CHECK(rational_reconstruct(Integer(5), Integer(10007), Integer(6)) == Rational(5));
    // residue of -3/7 mod 10007
    Integer inv7;
    mpz_invert(inv7.get_mpz_t(), Integer(7).get_mpz_t(), Integer(10007).get_mpz_t());
    Integer res = ((-3 * inv7) % 10007 + 10007) % 10007;
    CHECK(rational_reconstruct(res, Integer(10007), Integer(70)) == Rational(-3, 7));
}

TEST_CASE("rational reconstruction round trip") {
    Rng rng(3);
    Integer m;
    mpz_ui_pow_ui(m.get_mpz_t(), 10007, 5);
    for (int i = 0; i < 50; ++i) {
        Integer u = rng.range(Integer(-1000), Integer(1000));
        Integer v = rng.range(Integer(1), Integer(1000));
        Integer g;
        mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
        u /= g;
        v /= g;
        Integer vi;
        mpz_invert(vi.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        Integer res = ((u * vi) % m + m) % m;
        Rational want(u, v);
        want.canonicalize();
        CHECK(rational_reconstruct(res, m, Integer(1000)) == want);
    }
}

TEST_CASE("vandermonde affine solve") {
    auto one = Rational(1);
    auto sol1 = vandermonde_affine_solve(std::vector<Rational>{one});
    REQUIRE(sol1.size() == 1);
    CHECK(sol1[0] == Rational(-1));

    auto sol2 = vandermonde_affine_solve(std::vector<Rational>{Rational(1), Rational(2)});
    REQUIRE(sol2.size() == 2);
    CHECK(sol2[0] == Rational(2));
    CHECK(sol2[1] == Rational(-3));

    auto sol3 = vandermonde_affine_solve(std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(sol3[0] == Rational(0));
    CHECK(sol3[1] == Rational(-1));

    CHECK_THROWS_AS(vandermonde_affine_solve(std::vector<Rational>{one, one}),
                    std::domain_error);
}

TEST_CASE("squarefree and multiplicity one") {
    auto r = fx::ipoly(q0, {0, 11, 1});
    auto [rt, r1] = squarefree_and_multiplicity_one(r);
    CHECK(rt == r);
    CHECK(r1 == r);

    auto p1 = fx::ipoly(q0, {-1, 1});
    auto p2 = fx::ipoly(q0, {-2, 1});
    auto [rt2, r12] = squarefree_and_multiplicity_one(p1 * p1 * p2);
    CHECK(rt2 == p1 * p2);
    CHECK(r12 == p2);

    auto t = fx::ipoly(q0, {0, 1});
    auto [rt3, r13] = squarefree_and_multiplicity_one(t);
    CHECK(r13 == t);
}

TEST_CASE("multiplicity-one part on random factored products") {
    ModCtx fp = ModRing::make(Integer(10007));
    Rng rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        // distinct roots with multiplicities 1..3
        std::vector<Integer> roots;
        for (uint64_t k = 0; k < 4; ++k) roots.push_back(Integer(4 * rng.below(uint64_t(2000)) + k));
        Poly<Mod> r = Poly<Mod>::constant(Mod(1, fp));
        Poly<Mod> simple = Poly<Mod>::constant(Mod(1, fp));
        for (size_t k = 0; k < roots.size(); ++k) {
            unsigned mult = 1 + static_cast<unsigned>(rng.below(uint64_t(3)));
            Poly<Mod> lin = Poly<Mod>::linear_root(Mod(roots[k], fp));
            for (unsigned j = 0; j < mult; ++j) r = r * lin;
            if (mult == 1) simple = simple * lin;
        }
        auto [rt, r1] = squarefree_and_multiplicity_one(r);
        CHECK(r1 == simple);
        CHECK(poly_mod(r, r1).is_zero_poly());
        CHECK(poly_gcd(r1, poly_divexact(r, r1)).degree() == 0);
    }
}

TEST_CASE("quotient algebra inverse over Z/p^k") {
    ModCtx r4 = ModRing::make(Integer(10007), 4);
    Mod s(0, r4);
    auto q = std::make_shared<const Poly<Mod>>(fx::ipoly(s, {3, 5, 1}));
    QuotElem<Mod> a(fx::ipoly(s, {2, 7}), q);
    CHECK(is_unit(a));
    QuotElem<Mod> ai = ring_inv(a);
    CHECK(a * ai == ring_one(a));
}

TEST_CASE("series inverse") {
    ModCtx fp = ModRing::make(Integer(101));
    Series<Mod> a(std::vector<Mod>{Mod(3, fp), Mod(5, fp), Mod(7, fp), Mod(2, fp)});
    Series<Mod> ai = ring_inv(a);
    CHECK(a * ai == ring_one(a));
}
