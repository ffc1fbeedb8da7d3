#ifndef MH_BOUNDS_HPP
#define MH_BOUNDS_HPP

#include <vector>

#include "mh/ringops.hpp"

namespace mh {

struct BlockStructure {
    std::vector<unsigned> n; // block sizes, all >= 1
    unsigned blocks() const { return static_cast<unsigned>(n.size()); }
    unsigned total() const {
        unsigned t = 0;
        for (unsigned x : n) t += x;
        return t;
    }
};

// per-equation multi-degrees, d[i][j] = degree bound of equation i in block j
using MultiDegree = std::vector<std::vector<unsigned>>;

// sum of the coefficients of prod_i (d_i1*th_1 + ... + d_im*th_m) in
// Z[th]/(th_j^(n_j+1))
Integer bezout_number(const BlockStructure& n, const MultiDegree& d);

// same with a degree-1 homotopy block prepended: n' = (1, n), d_i' = (1, d_i)
Integer homotopy_bezout_number(const BlockStructure& n, const MultiDegree& d);

// sum of the coefficients of prod_i (beta_i*z + d_i1*th_1 + ...) with z^2 = 0;
// upward-rounded
double height_bound(const BlockStructure& n, const std::vector<double>& beta,
                    const MultiDegree& d);

// beta_i = s_i + sum_j log(n_j+1) d_ij
std::vector<double> beta_vector(const std::vector<double>& s, const BlockStructure& n,
                                const MultiDegree& d);

struct LiftingLedger {
    Integer C;   // Bezout number
    double Hn;   // height bound H_n(beta, d)
    double mu1, mu2, mu3;
    double H, Hprime;
    Integer e;   // max column sum of d
    Integer B;   // max(8*ceil(H), e)
};

LiftingLedger lifting_ledger(const BlockStructure& n, const MultiDegree& d,
                             const std::vector<double>& s);

// height bound for the output parametrization given the height b of the
// separating form: Hn + (b + 4 log(N+2)) C
double output_height_bound(const BlockStructure& n, const MultiDegree& d,
                           const std::vector<double>& beta, double b);

struct LagrangeBounds {
    Integer C;    // binom(n-1, p-1) d^p (d-1)^(n-p)
    double Hn;
    BlockStructure blocks; // (n, p)
    MultiDegree d;         // p x (deg,0), n-1 x (deg-1,1), 1 x (0,1)
    std::vector<double> eta;  // the beta entries
    std::vector<double> svec; // equation heights reproducing eta via beta_vector
};

LagrangeBounds lagrange_bounds(unsigned n, unsigned p, unsigned deg, double s);

} // namespace mh

#endif
