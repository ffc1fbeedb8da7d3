#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "mh/bounds.hpp"

using namespace mh;

namespace {

Integer factorial(unsigned k) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

Integer divexact_int(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// closed form for a system of N equations sharing one degree row:
// N!/(n_1!...n_m!) * prod_j d_j^(n_j)
Integer uniform_closed_form(const BlockStructure& n, const std::vector<unsigned>& drow) {
    Integer c = factorial(n.total());
    for (unsigned nj : n.n) c = divexact_int(c, factorial(nj));
    for (size_t j = 0; j < n.n.size(); ++j) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), drow[j], n.n[j]);
        c *= p;
    }
    return c;
}

void compositions(unsigned total, std::vector<std::vector<unsigned>>& out,
                  std::vector<unsigned>& cur) {
    if (total == 0) {
        if (!cur.empty()) out.push_back(cur);
        return;
    }
    for (unsigned k = 1; k <= total; ++k) {
        cur.push_back(k);
        compositions(total - k, out, cur);
        cur.pop_back();
    }
}

} // namespace

TEST_CASE("benchmark system counts") {
    auto sys = fx::bilinear3();
    CHECK(bezout_number(sys.blocks, sys.d) == 3);
    CHECK(homotopy_bezout_number(sys.blocks, sys.d) == 12);
}

TEST_CASE("uniform systems match the multinomial closed form") {
    for (unsigned total = 1; total <= 6; ++total) {
        std::vector<std::vector<unsigned>> parts;
        std::vector<unsigned> cur;
        compositions(total, parts, cur);
        for (const auto& part : parts) {
            BlockStructure n{part};
            std::vector<unsigned> drow;
            for (size_t j = 0; j < part.size(); ++j)
                drow.push_back(1 + (j + total) % 3); // entries in 1..3
            MultiDegree d(total, drow);
            CHECK(bezout_number(n, d) == uniform_closed_form(n, drow));
        }
    }
}

TEST_CASE("single block single equation") {
    BlockStructure n{{1}};
    MultiDegree d{{3}};
    CHECK(bezout_number(n, d) == 3);
    MultiDegree d0{{0}};
    CHECK(bezout_number(n, d0) == 0);
}

TEST_CASE("lagrange count matches the generic chow computation") {
    for (unsigned nn = 1; nn <= 8; ++nn)
        for (unsigned p = 1; p <= nn; ++p)
            for (unsigned deg = 1; deg <= 4; ++deg) {
                auto L = lagrange_bounds(nn, p, deg, 2.0);
                CHECK(L.C == bezout_number(L.blocks, L.d));
            }
}

TEST_CASE("lagrange bidegree pattern") {
    auto L = lagrange_bounds(3, 1, 2, 0.0);
    REQUIRE(L.d.size() == 4);
    CHECK(L.d[0] == std::vector<unsigned>{2, 0});
    CHECK(L.d[1] == std::vector<unsigned>{1, 1});
    CHECK(L.d[2] == std::vector<unsigned>{1, 1});
    CHECK(L.d[3] == std::vector<unsigned>{0, 1});
    CHECK(L.blocks.n == std::vector<unsigned>{3, 1});
    CHECK(L.C == 2); // binom(2,0) * 2^1 * 1^2
}

TEST_CASE("lagrange eta is consistent with the generic beta map") {
    for (unsigned nn = 2; nn <= 5; ++nn)
        for (unsigned p = 1; p <= nn; ++p) {
            auto L = lagrange_bounds(nn, p, 3, 1.5);
            auto beta = beta_vector(L.svec, L.blocks, L.d);
            REQUIRE(beta.size() == L.eta.size());
            for (size_t i = 0; i < beta.size(); ++i)
                CHECK(beta[i] == doctest::Approx(L.eta[i]).epsilon(1e-9));
        }
}

TEST_CASE("height bound on a two variable product") {
    // (alpha z + th1)(gamma z + th2) with z^2 = 0: coefficient sum is
    // alpha + gamma + 1
    BlockStructure n{{1, 1}};
    MultiDegree d{{1, 0}, {0, 1}};
    double h = height_bound(n, {2.0, 3.0}, d);
    CHECK(h == doctest::Approx(6.0).epsilon(1e-9));

    // single equation: 5z + 2*th, truncated at th^2: sum 5 + 2
    BlockStructure n1{{1}};
    double h1 = height_bound(n1, {5.0}, MultiDegree{{2}});
    CHECK(h1 == doctest::Approx(7.0).epsilon(1e-9));
}

TEST_CASE("beta vector") {
    auto sys = fx::bilinear3();
    auto beta = beta_vector(sys.s, sys.blocks, sys.d);
    REQUIRE(beta.size() == 3);
    // beta_i = s_i + log 2 + log 3 for the all-(1,1) degree rows
    for (size_t i = 0; i < 3; ++i)
        CHECK(beta[i] == doctest::Approx(sys.s[i] + std::log(2.0) + std::log(3.0)).epsilon(1e-9));
}

TEST_CASE("lifting ledger on the benchmark system") {
    auto sys = fx::bilinear3();
    auto L = lifting_ledger(sys.blocks, sys.d, sys.s);
    CHECK(L.C == 3);
    CHECK(L.e == 3); // both degree columns sum to 3
    CHECK(L.Hn > 0.0);
    CHECK(L.mu3 > L.mu2);
    CHECK(L.Hprime > L.Hn);
    CHECK(L.H > L.Hprime);
    Integer eightH;
    mpz_set_d(eightH.get_mpz_t(), std::ceil(L.H));
    eightH *= 8;
    CHECK(L.B == eightH);
    // mu1 = N log(8 N C^2)
    CHECK(L.mu1 == doctest::Approx(3.0 * std::log(8.0 * 3.0 * 9.0)).epsilon(1e-9));
}

TEST_CASE("trivial ledger") {
    BlockStructure n{{1}};
    MultiDegree d{{1}};
    auto L = lifting_ledger(n, d, {0.0});
    CHECK(L.C == 1);
    CHECK(L.e == 1);
    CHECK(L.mu1 == doctest::Approx(std::log(8.0)).epsilon(1e-9));
}

TEST_CASE("output height bound grows with the form height") {
    auto sys = fx::bilinear3();
    auto beta = beta_vector(sys.s, sys.blocks, sys.d);
    double h0 = output_height_bound(sys.blocks, sys.d, beta, 0.0);
    double h1 = output_height_bound(sys.blocks, sys.d, beta, 10.0);
    CHECK(h1 > h0);
    CHECK(h1 - h0 == doctest::Approx(30.0).epsilon(1e-6)); // b*C with C = 3
}

TEST_CASE("shape validation") {
    BlockStructure bad{{0}};
    CHECK_THROWS_AS(bezout_number(bad, MultiDegree{{1}}), std::invalid_argument);
    BlockStructure n{{2}};
    CHECK_THROWS_AS(bezout_number(n, MultiDegree{{1, 2}}), std::invalid_argument);
}
