#ifndef MH_HOMOTOPY_HPP
#define MH_HOMOTOPY_HPP

#include <optional>

#include "mh/bounds.hpp"
#include "mh/ratfunc.hpp"
#include "mh/reconstruct.hpp"
#include "mh/rng.hpp"
#include "mh/series.hpp"
#include "mh/slp.hpp"
#include "mh/zdp.hpp"

namespace mh {

struct InvalidValuation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Start system: g_i = prod over blocks j of prod over the equation's node
// list of (X_j1 + c X_j2 + ... + c^(nj-1) X_jnj + c^nj). Node c for factor k
// of equation i in block j is k + d_1j + ... + d_(i-1)j, so nodes within a
// block are pairwise distinct over the integers.
struct StartSystem {
    BlockStructure n;
    MultiDegree d;
    std::vector<std::vector<std::vector<unsigned long>>> nodes; // [eq][block]
    Slp prog;
    unsigned long max_node = 0;
};

inline StartSystem build_start_system(const BlockStructure& n, const MultiDegree& d) {
    StartSystem S;
    S.n = n;
    S.d = d;
    unsigned N = n.total();
    if (d.size() != N) throw std::invalid_argument("start system: need M = N");
    S.prog.arity = N;
    std::vector<unsigned> first_var(n.n.size()); // index of X_j1
    for (size_t j = 1; j < n.n.size(); ++j) first_var[j] = first_var[j - 1] + n.n[j - 1];
    std::vector<unsigned long> offset(n.n.size(), 0);
    S.nodes.resize(d.size());
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i].size() != n.n.size())
            throw std::invalid_argument("start system: multi-degree width");
        S.nodes[i].resize(n.n.size());
        bool any = false;
        uint32_t acc = 0;
        for (size_t j = 0; j < n.n.size(); ++j) {
            for (unsigned k = 0; k < d[i][j]; ++k) {
                unsigned long c = offset[j] + k;
                S.nodes[i][j].push_back(c);
                S.max_node = std::max(S.max_node, c);
                // kappa_c(X_j), powers of c as constants
                Integer pw = 1;
                uint32_t f = first_var[j];
                for (unsigned e = 1; e < n.n[j]; ++e) {
                    pw *= static_cast<long>(c);
                    uint32_t term = S.prog.push(Slp::Op::Mul, S.prog.push_const(pw),
                                                first_var[j] + e);
                    f = S.prog.push(Slp::Op::Add, f, term);
                }
                pw *= static_cast<long>(c);
                f = S.prog.push(Slp::Op::Add, f, S.prog.push_const(pw));
                acc = any ? S.prog.push(Slp::Op::Mul, acc, f) : f;
                any = true;
            }
            offset[j] += d[i][j];
        }
        if (!any) throw std::invalid_argument("start system: zero multi-degree row");
        S.prog.outputs.push_back(acc);
    }
    return S;
}

namespace detail {

template <class K>
void enumerate_roots(const StartSystem& S, const K& sample, size_t eq,
                     std::vector<unsigned>& remaining, std::vector<size_t>& assign,
                     std::vector<std::vector<K>>& out) {
    size_t M = S.d.size();
    if (eq == M) {
        // one factor choice per equation within its assigned block
        std::vector<size_t> choice(M, 0);
        while (true) {
            std::vector<std::vector<K>> blocknodes(S.n.n.size());
            for (size_t i = 0; i < M; ++i)
                blocknodes[assign[i]].push_back(ring_from_int(
                    sample, Integer(static_cast<long>(S.nodes[i][assign[i]][choice[i]]))));
            std::vector<K> point;
            point.reserve(S.n.total());
            for (size_t j = 0; j < S.n.n.size(); ++j) {
                std::vector<K> xj = vandermonde_affine_solve(blocknodes[j]);
                point.insert(point.end(), xj.begin(), xj.end());
            }
            out.push_back(std::move(point));
            size_t i = 0;
            for (; i < M; ++i) {
                if (++choice[i] < S.nodes[i][assign[i]].size()) break;
                choice[i] = 0;
            }
            if (i == M) break;
        }
        return;
    }
    for (size_t j = 0; j < S.n.n.size(); ++j) {
        if (remaining[j] == 0 || S.nodes[eq][j].empty()) continue;
        remaining[j]--;
        assign[eq] = j;
        enumerate_roots(S, sample, eq + 1, remaining, assign, out);
        remaining[j]++;
    }
}

} // namespace detail

// all C_n(d) roots of the start system, by block assignment enumeration plus
// per-block Vandermonde solves; requires the characteristic to exceed every
// node value (so distinct integer nodes stay distinct)
template <class K>
std::vector<std::vector<K>> solve_start_system(const StartSystem& S, const K& sample) {
    std::vector<std::vector<K>> out;
    std::vector<unsigned> remaining = S.n.n;
    std::vector<size_t> assign(S.d.size(), 0);
    detail::enumerate_roots(S, sample, 0, remaining, assign, out);
    return out;
}

// Newton lifting of one start point to a series solution of the homotopy
// H(t, X) to the target t-precision; H = homotopy_combine(f, g), JH its
// Jacobian (arity N+1 columns, the t column is skipped).
template <class K>
std::vector<Series<K>> lift_point_in_t(const Slp& H, const Slp& JH,
                                       const std::vector<K>& x0, size_t target) {
    size_t N = x0.size();
    const K sample = x0[0];
    std::vector<Series<K>> x;
    x.reserve(N);
    for (const K& c : x0) x.push_back(Series<K>::constant(c, 1));
    size_t cur = 1;
    while (cur < target) {
        size_t next = std::min(2 * cur, target);
        std::vector<Series<K>> args;
        args.reserve(N + 1);
        args.push_back(Series<K>::var_t(sample, next));
        for (auto& xi : x) args.push_back(xi.extended(next));
        std::vector<Series<K>> F = slp_eval(H, args);
        std::vector<Series<K>> J = slp_eval(JH, args);
        Matrix<Series<K>> m(N);
        for (size_t i = 0; i < N; ++i)
            for (size_t j = 1; j <= N; ++j) m[i].push_back(J[i * (N + 1) + j]);
        std::vector<Series<K>> delta = linsolve_unit_pivot(m, F);
        for (size_t i = 0; i < N; ++i) x[i] = args[i + 1] - delta[i];
        cur = next;
    }
    return x;
}

template <class K>
struct ParamOverRatFunc {
    Poly<RatFunc<K>> q;
    std::vector<Poly<RatFunc<K>>> v;
    std::vector<Integer> lambda;
};

// Lifts all start points to precision 2*degree_bound + 1, forms the
// interpolation polynomials over the series ring and reconstructs every
// coefficient as a rational function of t via Pade approximation.
template <class K>
ParamOverRatFunc<K> reconstruct_param_in_t(const Slp& f, const Slp& g,
                                           const std::vector<std::vector<K>>& start_pts,
                                           std::vector<Integer> lam,
                                           const Integer& degree_bound) {
    if (start_pts.empty()) throw std::invalid_argument("reconstruct: no start points");
    if (!is_separating(lam, start_pts))
        throw NotSeparating("reconstruct: lambda not separating on start points");
    const K sample = start_pts[0][0];
    int db = static_cast<int>(degree_bound.get_si());
    size_t prec = 2 * static_cast<size_t>(db) + 1;
    size_t N = start_pts[0].size();

    Slp H = homotopy_combine(f, g);
    Slp JH = slp_jacobian(H);
    std::vector<std::vector<Series<K>>> phi;
    phi.reserve(start_pts.size());
    for (const auto& x0 : start_pts) phi.push_back(lift_point_in_t(H, JH, x0, prec));

    // q and v over the series ring by the interpolation formulas
    using SP = Poly<Series<K>>;
    Series<K> one = Series<K>::constant(ring_one(sample), prec);
    SP qs = SP::constant(one);
    std::vector<Series<K>> lamvals;
    for (const auto& ph : phi) lamvals.push_back(lambda_value(lam, ph));
    for (const auto& lv : lamvals) qs = qs * SP::linear_root(lv);
    std::vector<SP> vs(N);
    for (size_t a = 0; a < phi.size(); ++a) {
        SP others = SP::constant(one);
        for (size_t b = 0; b < phi.size(); ++b)
            if (b != a) others = others * SP::linear_root(lamvals[b]);
        for (size_t i = 0; i < N; ++i) vs[i] = vs[i] + phi[a][i] * others;
    }

    auto pade_poly = [&](const SP& p, int expect_deg) {
        std::vector<RatFunc<K>> cs;
        for (int k = 0; k <= expect_deg; ++k) {
            Series<K> ck = k <= p.degree() ? p[static_cast<size_t>(k)]
                                           : Series<K>::constant(ring_zero(sample), prec);
            cs.push_back(pade_reconstruct(ck, db, db));
        }
        return Poly<RatFunc<K>>(std::move(cs));
    };
    ParamOverRatFunc<K> P;
    P.lambda = std::move(lam);
    P.q = pade_poly(qs, static_cast<int>(phi.size()));
    for (size_t i = 0; i < N; ++i) P.v.push_back(pade_poly(vs[i], static_cast<int>(phi.size()) - 1));
    return P;
}

// t = 0 specialization (every coefficient's denominator is a unit at 0)
template <class K>
ZeroDimParam<K> specialize_at_zero(const ParamOverRatFunc<K>& P, const K& sample) {
    auto at0 = [&](const Poly<RatFunc<K>>& p) {
        std::vector<K> c;
        for (int k = 0; k <= p.degree(); ++k) {
            const RatFunc<K>& f = p[static_cast<size_t>(k)];
            c.push_back(f.num().eval(ring_zero(sample)) *
                        ring_inv(f.den().eval(ring_zero(sample))));
        }
        return Poly<K>(std::move(c));
    };
    ZeroDimParam<K> Q;
    Q.q = at0(P.q);
    for (const auto& vi : P.v) Q.v.push_back(at0(vi));
    Q.lambda = P.lambda;
    return Q;
}

namespace detail {

// multiplicity of (t - 1) in u, and the cofactor
template <class K>
std::pair<int, Poly<K>> order_at_one(Poly<K> u, const K& sample) {
    if (u.is_zero_poly()) throw std::invalid_argument("order_at_one: zero polynomial");
    Poly<K> tm1(std::vector<K>{ring_zero(sample) - ring_one(sample), ring_one(sample)});
    int ord = 0;
    while (is_zero(u.eval(ring_one(sample)))) {
        u = poly_divexact(u, tm1);
        ++ord;
    }
    return {ord, u};
}

// value at t = 1 of (t-1)^shift * c; negative order is a pole
template <class K>
K shifted_value_at_one(const RatFunc<K>& c, int shift, const K& sample) {
    if (is_zero(c)) return ring_zero(sample);
    auto [on, n1] = order_at_one(c.num(), sample);
    auto [od, d1] = order_at_one(c.den(), sample);
    int total = on - od + shift;
    if (total < 0) throw InvalidValuation("pole at t = 1 after scaling");
    if (total > 0) return ring_zero(sample);
    return n1.eval(ring_one(sample)) * ring_inv(d1.eval(ring_one(sample)));
}

template <class K>
int rf_order_at_one(const RatFunc<K>& c, const K& sample) {
    auto [on, n1] = order_at_one(c.num(), sample);
    auto [od, d1] = order_at_one(c.den(), sample);
    (void)n1;
    (void)d1;
    return on - od;
}

} // namespace detail

// Specialization at t = 1: with e the negated minimal (t-1)-adic valuation
// over q's coefficients, scales everything by (t-1)^e, evaluates at 1, and
// renormalizes by the leading value r0. The resulting (r, w) still satisfies
// lambda(w) = T r' mod r.
template <class K>
std::pair<Poly<K>, std::vector<Poly<K>>> specialize_at_one(const ParamOverRatFunc<K>& P,
                                                           const K& sample, int* e_out = nullptr) {
    int minord = 0;
    for (int k = 0; k <= P.q.degree(); ++k) {
        const auto& c = P.q[static_cast<size_t>(k)];
        if (!is_zero(c)) minord = std::min(minord, detail::rf_order_at_one(c, sample));
    }
    int e = -minord;
    if (e_out) *e_out = e;
    auto specialize = [&](const Poly<RatFunc<K>>& p) {
        std::vector<K> c;
        for (int k = 0; k <= p.degree(); ++k)
            c.push_back(detail::shifted_value_at_one(p[static_cast<size_t>(k)], e, sample));
        return Poly<K>(std::move(c));
    };
    Poly<K> qstar = specialize(P.q);
    if (qstar.is_zero_poly()) throw InvalidValuation("q vanishes identically at t = 1");
    K r0inv = ring_inv(qstar.lc());
    Poly<K> r = r0inv * qstar;
    std::vector<Poly<K>> w;
    for (const auto& vi : P.v) w.push_back(poly_mod(r0inv * specialize(vi), r));
    return {r, w};
}

// r1 = product of the multiplicity-one roots of r; y_i = w_i / (r/r1) mod r1.
// (r1, y) is again a parametrization in the q'-denominator convention.
template <class K>
std::pair<Poly<K>, std::vector<Poly<K>>> multiplicity_one_and_divide(
    const Poly<K>& r, const std::vector<Poly<K>>& w) {
    auto [rtilde, r1] = squarefree_and_multiplicity_one(r);
    (void)rtilde;
    if (r1.degree() == 0) return {r1, std::vector<Poly<K>>(w.size())};
    Poly<K> rest = monic(poly_divexact(r, r1)); // r is monic, so exact up to units
    auto r1p = std::make_shared<const Poly<K>>(r1);
    QuotElem<K> inv = ring_inv(QuotElem<K>(rest, r1p));
    std::vector<Poly<K>> y;
    y.reserve(w.size());
    for (const auto& wi : w) y.push_back((QuotElem<K>(wi, r1p) * inv).rep());
    return {r1, y};
}

// Removes roots where f does not vanish or where the Jacobian determinant of
// f vanishes; (r1, y) in the q'-denominator convention.
template <class K>
ZeroDimParam<K> clean(const Poly<K>& r1, const std::vector<Poly<K>>& y,
                      std::vector<Integer> lam, const Slp& f) {
    const K sample = r1.lc();
    size_t N = y.size();
    if (r1.degree() == 0) return empty_param(N, sample, std::move(lam));
    std::vector<Poly<K>> w = to_monic_value(r1, y);
    // keep only roots where all residues of f vanish
    Poly<K> keep = r1;
    {
        auto r1p = std::make_shared<const Poly<K>>(r1);
        std::vector<QuotElem<K>> pt;
        for (const auto& wi : w) pt.emplace_back(wi, r1p);
        for (const QuotElem<K>& res : slp_eval(f, pt)) {
            keep = poly_gcd(keep, res.rep());
            if (keep.degree() == 0) break;
        }
    }
    if (keep.degree() == 0) return empty_param(N, sample, std::move(lam));
    // then drop roots with singular Jacobian
    std::vector<Poly<K>> wk;
    for (const auto& wi : w) wk.push_back(poly_mod(wi, keep));
    Poly<K> D = jacobian_det_residue(f, keep, wk);
    Poly<K> qgood = monic(poly_divexact(keep, poly_gcd(keep, D)));
    if (qgood.degree() == 0) return empty_param(N, sample, std::move(lam));
    ZeroDimParam<K> out;
    out.q = qgood;
    std::vector<Poly<K>> wg;
    for (const auto& wi : w) wg.push_back(poly_mod(wi, qgood));
    out.v = from_monic_value(qgood, wg);
    out.lambda = std::move(lam);
    return out;
}

template <class K>
struct ModSolveResult {
    bool ok = false;
    ZeroDimParam<K> param;
    std::string fail_reason;
};

// One run of the homotopy pipeline over the field of `sample`. A forced
// lambda bypasses the random draw (used by tests and the worked example).
template <class K>
ModSolveResult<K> nonsingular_solutions(const Slp& f, const BlockStructure& n,
                                        const MultiDegree& d, const K& sample, Rng& rng,
                                        const std::vector<Integer>* forced_lambda = nullptr) {
    ModSolveResult<K> R;
    try {
        Integer C = bezout_number(n, d);
        size_t N = n.total();
        std::vector<Integer> lam;
        if (forced_lambda) {
            lam = *forced_lambda;
        } else {
            Integer span = separating_family_size(N, C * C);
            lam = candidate_form(N, rng.range(Integer(1), span));
        }
        if (C == 0) {
            R.ok = true;
            R.param = empty_param(N, sample, std::move(lam));
            return R;
        }
        StartSystem S = build_start_system(n, d);
        std::vector<std::vector<K>> pts = solve_start_system(S, sample);
        if (pts.size() != static_cast<size_t>(C.get_ui()))
            throw std::logic_error("start system root count mismatch");
        if (!is_separating(lam, pts)) {
            R.fail_reason = "lambda not separating on start points";
            return R;
        }
        Integer Cp = homotopy_bezout_number(n, d);
        ParamOverRatFunc<K> Pt = reconstruct_param_in_t(f, S.prog, pts, lam, Cp);
        auto [r, w] = specialize_at_one(Pt, sample);
        auto [r1, y] = multiplicity_one_and_divide(r, w);
        R.param = clean(r1, y, std::move(lam), f);
        R.ok = true;
    } catch (const NotSeparating& ex) {
        R.fail_reason = ex.what();
    } catch (const ReconstructionError& ex) {
        R.fail_reason = ex.what();
    } catch (const InvalidValuation& ex) {
        R.fail_reason = ex.what();
    } catch (const std::domain_error& ex) {
        R.fail_reason = ex.what();
    }
    return R;
}

} // namespace mh

#endif
