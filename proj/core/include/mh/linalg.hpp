#ifndef MH_LINALG_HPP
#define MH_LINALG_HPP

#include <vector>

#include "mh/ringops.hpp"

namespace mh {

template <class K>
using Matrix = std::vector<std::vector<K>>;

// Berkowitz determinant. Division-free, so it works over any commutative
// ring (quotient algebras, Z/p^k, ...). O(n^4) ring operations.
template <class K>
K berkowitz_det(const Matrix<K>& a) {
    size_t n = a.size();
    if (n == 0) throw std::invalid_argument("berkowitz_det: empty matrix");
    const K zero = ring_zero(a[0][0]);
    const K one = ring_one(a[0][0]);
    // v holds the characteristic polynomial coefficients of the leading
    // principal block, highest degree first
    std::vector<K> v{one, zero - a[0][0]};
    for (size_t i = 1; i < n; ++i) {
        // s[0] = a_ii, s[j] = R M^(j-1) C with R the row strip, C the column
        // strip and M the leading i x i block
        std::vector<K> s(i + 1, zero);
        s[0] = a[i][i];
        std::vector<K> w(i);
        for (size_t t = 0; t < i; ++t) w[t] = a[t][i];
        for (size_t j = 1; j <= i; ++j) {
            K acc = zero;
            for (size_t t = 0; t < i; ++t) acc = acc + a[i][t] * w[t];
            s[j] = acc;
            if (j < i) {
                std::vector<K> w2(i, zero);
                for (size_t u = 0; u < i; ++u)
                    for (size_t t = 0; t < i; ++t)
                        w2[u] = w2[u] + a[u][t] * w[t];
                w = std::move(w2);
            }
        }
        // multiply by the lower triangular Toeplitz matrix with first column
        // (1, -s[0], ..., -s[i])
        std::vector<K> vn(i + 2, zero);
        for (size_t k = 0; k < i + 2; ++k) {
            K acc = k < v.size() ? v[k] : zero;
            for (size_t j = 1; j <= k && j <= i + 1; ++j)
                if (k - j < v.size())
                    acc = acc - s[j - 1] * v[k - j];
            vn[k] = acc;
        }
        v = std::move(vn);
    }
    // char poly constant term is (-1)^n det
    K det = v[n];
    if (n % 2 == 1) det = zero - det;
    return det;
}

// Cramer solve of a x = b; requires det(a) to be a unit. Division-free
// except for the single inversion of the determinant, so it is usable over
// semilocal rings where Gaussian pivoting can fail.
template <class K>
std::vector<K> cramer_solve(const Matrix<K>& a, const std::vector<K>& b) {
    size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("cramer_solve: size mismatch");
    K d = berkowitz_det(a);
    K di = ring_inv(d);
    std::vector<K> x;
    x.reserve(n);
    for (size_t j = 0; j < n; ++j) {
        Matrix<K> aj = a;
        for (size_t i = 0; i < n; ++i) aj[i][j] = b[i];
        x.push_back(berkowitz_det(aj) * di);
    }
    return x;
}

// Gaussian elimination picking unit pivots. Enough over a field, and over a
// local ring (truncated series) whenever the reduced matrix is invertible.
template <class K>
std::vector<K> linsolve_unit_pivot(Matrix<K> a, std::vector<K> b) {
    size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("linsolve: size mismatch");
    for (size_t col = 0; col < n; ++col) {
        size_t piv = n;
        for (size_t row = col; row < n; ++row)
            if (is_unit(a[row][col])) { piv = row; break; }
        if (piv == n) throw std::domain_error("linsolve: no unit pivot");
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        K inv = ring_inv(a[col][col]);
        for (size_t j = col; j < n; ++j) a[col][j] = inv * a[col][j];
        b[col] = inv * b[col];
        for (size_t row = 0; row < n; ++row) {
            if (row == col || is_zero(a[row][col])) continue;
            K f = a[row][col];
            for (size_t j = col; j < n; ++j) a[row][j] = a[row][j] - f * a[col][j];
            b[row] = b[row] - f * b[col];
        }
    }
    return b;
}

} // namespace mh

#endif
