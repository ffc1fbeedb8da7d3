#include "mh/bounds.hpp"

#include <cmath>

namespace mh {

namespace {

// every height-part operation gets a multiplicative slack so the result only
// ever overestimates
inline double up(double x) { return x * (1.0 + 0x1p-40); }

struct ChowIndex {
    std::vector<unsigned> ext;     // n_j + 1 per block
    std::vector<size_t> stride;
    size_t size = 1;

    explicit ChowIndex(const BlockStructure& n) {
        ext.reserve(n.n.size());
        stride.reserve(n.n.size());
        for (unsigned nj : n.n) {
            stride.push_back(size);
            ext.push_back(nj + 1);
            size *= nj + 1;
            if (size > (size_t{1} << 24))
                throw std::invalid_argument("block structure too large (exponent array cap)");
        }
    }
};

void check_shape(const BlockStructure& n, const MultiDegree& d) {
    for (unsigned nj : n.n)
        if (nj == 0) throw std::invalid_argument("empty variable block");
    for (const auto& row : d)
        if (row.size() != n.n.size())
            throw std::invalid_argument("multi-degree row width mismatch");
}

// multiplies the dense truncated array a by (row[0]*th_1 + ... + row[m-1]*th_m)
template <class T>
std::vector<T> mul_linear(const ChowIndex& ix, const std::vector<T>& a,
                          const std::vector<unsigned>& row, const T& zero) {
    std::vector<T> r(ix.size, zero);
    std::vector<unsigned> c(ix.ext.size(), 0);
    for (size_t idx = 0; idx < ix.size; ++idx) {
        for (size_t j = 0; j < ix.ext.size(); ++j) {
            if (row[j] == 0 || c[j] + 1 >= ix.ext[j]) continue;
            r[idx + ix.stride[j]] += T(static_cast<long>(row[j])) * a[idx];
        }
        for (size_t j = 0; j < c.size(); ++j) {
            if (++c[j] < ix.ext[j]) break;
            c[j] = 0;
        }
    }
    return r;
}

} // namespace

Integer bezout_number(const BlockStructure& n, const MultiDegree& d) {
    check_shape(n, d);
    ChowIndex ix(n);
    std::vector<Integer> a(ix.size, Integer(0));
    a[0] = 1;
    for (const auto& row : d) a = mul_linear(ix, a, row, Integer(0));
    Integer sum = 0;
    for (const Integer& x : a) sum += x;
    return sum;
}

Integer homotopy_bezout_number(const BlockStructure& n, const MultiDegree& d) {
    BlockStructure np;
    np.n.push_back(1);
    np.n.insert(np.n.end(), n.n.begin(), n.n.end());
    MultiDegree dp;
    dp.reserve(d.size());
    for (const auto& row : d) {
        std::vector<unsigned> r{1};
        r.insert(r.end(), row.begin(), row.end());
        dp.push_back(std::move(r));
    }
    return bezout_number(np, dp);
}

double height_bound(const BlockStructure& n, const std::vector<double>& beta,
                    const MultiDegree& d) {
    check_shape(n, d);
    if (beta.size() != d.size())
        throw std::invalid_argument("height_bound: beta size mismatch");
    ChowIndex ix(n);
    // deg part exact, zeta part upward-rounded double
    std::vector<Integer> a(ix.size, Integer(0));
    std::vector<double> b(ix.size, 0.0);
    a[0] = 1;
    for (size_t i = 0; i < d.size(); ++i) {
        std::vector<double> b2 = mul_linear(ix, b, d[i], 0.0);
        for (size_t idx = 0; idx < ix.size; ++idx) {
            if (a[idx] == 0) continue;
            b2[idx] = up(b2[idx] + up(beta[i] * mpz_get_d(a[idx].get_mpz_t())));
        }
        for (double& x : b2) x = up(x);
        b = std::move(b2);
        a = mul_linear(ix, a, d[i], Integer(0));
    }
    double sum = 0.0;
    for (double x : b) sum = up(sum + x);
    for (const Integer& x : a) sum = up(sum + mpz_get_d(x.get_mpz_t()));
    return sum;
}

std::vector<double> beta_vector(const std::vector<double>& s, const BlockStructure& n,
                                const MultiDegree& d) {
    check_shape(n, d);
    if (s.size() != d.size())
        throw std::invalid_argument("beta_vector: height vector size mismatch");
    std::vector<double> beta;
    beta.reserve(d.size());
    for (size_t i = 0; i < d.size(); ++i) {
        double acc = s[i];
        for (size_t j = 0; j < n.n.size(); ++j)
            acc = up(acc + up(std::log(double(n.n[j]) + 1.0) * d[i][j]));
        beta.push_back(acc);
    }
    return beta;
}

LiftingLedger lifting_ledger(const BlockStructure& n, const MultiDegree& d,
                             const std::vector<double>& s) {
    check_shape(n, d);
    LiftingLedger L;
    unsigned N = n.total();
    L.C = bezout_number(n, d);
    std::vector<double> beta = beta_vector(s, n, d);
    L.Hn = height_bound(n, beta, d);

    double C = std::max(1.0, mpz_get_d(L.C.get_mpz_t()));
    double smax = 0.0;
    for (double x : s) smax = std::max(smax, x);
    unsigned dfrak = 0;
    for (const auto& row : d) {
        unsigned t = 0;
        for (unsigned x : row) t += x;
        dfrak = std::max(dfrak, t);
    }
    L.mu1 = up(N * std::log(8.0 * N * C * C));
    L.mu2 = up(L.Hn + up(2.0 * std::log(N + 1.0) * C));
    L.mu3 = up(L.mu2 + up(L.mu1 * C) + up(std::log(N + 2.0) * C) + up((N + 1.0) * std::log(C)));
    L.H = up(6.0 * N * (dfrak + 1.0) * C * up(L.mu3 + smax + up(std::log(N + 1.0) * C)));
    L.Hprime = up(L.Hn + up(up(L.mu1 + 4.0 * std::log(N + 2.0)) * C));

    L.e = 0;
    for (size_t j = 0; j < n.n.size(); ++j) {
        Integer col = 0;
        for (const auto& row : d) col += row[j];
        if (col > L.e) L.e = col;
    }
    Integer eightH;
    mpz_set_d(eightH.get_mpz_t(), std::ceil(L.H));
    eightH *= 8;
    L.B = eightH > L.e ? eightH : L.e;
    return L;
}

double output_height_bound(const BlockStructure& n, const MultiDegree& d,
                           const std::vector<double>& beta, double b) {
    double Hn = height_bound(n, beta, d);
    double C = mpz_get_d(bezout_number(n, d).get_mpz_t());
    unsigned N = n.total();
    return up(Hn + up(up(b + 4.0 * std::log(N + 2.0)) * C));
}

LagrangeBounds lagrange_bounds(unsigned n, unsigned p, unsigned deg, double s) {
    if (p < 1 || p > n || deg < 1)
        throw std::invalid_argument("lagrange_bounds: need 1 <= p <= n, deg >= 1");
    LagrangeBounds L;
    // C = binom(n-1, p-1) d^p (d-1)^(n-p)
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), n - 1, p - 1);
    Integer dp, dm;
    mpz_ui_pow_ui(dp.get_mpz_t(), deg, p);
    mpz_ui_pow_ui(dm.get_mpz_t(), deg - 1, n - p); // 0^0 = 1 per GMP
    L.C = binom * dp * dm;

    L.blocks.n = {n, p};
    L.d.assign(p, {deg, 0u});
    L.d.insert(L.d.end(), n - 1, {deg - 1, 1u});
    L.d.push_back({0u, 1u});

    double C = std::max(1.0, mpz_get_d(L.C.get_mpz_t()));
    double eta1 = up(s + deg * std::log(n + 1.0));
    double eta2 = up(s + std::log(double(n)) + std::log(double(deg)) +
                     (deg - 1.0) * std::log(n + 1.0) + std::log(p + 1.0));
    double eta3 = up(p * std::log(8.0 * p * C) + std::log(p + 1.0));
    L.eta.assign(p, eta1);
    L.eta.insert(L.eta.end(), n - 1, eta2);
    L.eta.push_back(eta3);

    L.svec.assign(p, s);
    L.svec.insert(L.svec.end(), n - 1, up(s + std::log(double(n)) + std::log(double(deg))));
    L.svec.push_back(up(p * std::log(8.0 * p * C)));

    L.Hn = height_bound(L.blocks, L.eta, L.d);
    return L;
}

} // namespace mh
