#ifndef MH_SERIES_HPP
#define MH_SERIES_HPP

#include <vector>

#include "mh/poly.hpp"

namespace mh {

// Truncated power series in t. The coefficient vector length is the
// precision (number of known coefficients); arithmetic truncates to the
// minimum precision of the operands.
template <class K>
class Series {
public:
    Series() = default;
    explicit Series(std::vector<K> c) : c_(std::move(c)) {}

    static Series constant(const K& a, size_t prec) {
        std::vector<K> c(prec, ring_zero(a));
        c[0] = a;
        return Series(std::move(c));
    }
    // the series t
    static Series var_t(const K& sample, size_t prec) {
        std::vector<K> c(prec, ring_zero(sample));
        if (prec > 1) c[1] = ring_one(sample);
        return Series(std::move(c));
    }

    size_t precision() const { return c_.size(); }
    const std::vector<K>& coeffs() const { return c_; }
    const K& operator[](size_t i) const { return c_[i]; }

    Series truncated(size_t prec) const {
        std::vector<K> c(c_.begin(), c_.begin() + std::min(prec, c_.size()));
        return Series(std::move(c));
    }
    Series extended(size_t prec) const {
        std::vector<K> c = c_;
        while (c.size() < prec) c.push_back(ring_zero(c_[0]));
        return Series(std::move(c));
    }

    friend Series operator+(const Series& a, const Series& b) {
        size_t n = std::min(a.precision(), b.precision());
        std::vector<K> c;
        c.reserve(n);
        for (size_t i = 0; i < n; ++i) c.push_back(a.c_[i] + b.c_[i]);
        return Series(std::move(c));
    }
    friend Series operator-(const Series& a, const Series& b) {
        size_t n = std::min(a.precision(), b.precision());
        std::vector<K> c;
        c.reserve(n);
        for (size_t i = 0; i < n; ++i) c.push_back(a.c_[i] - b.c_[i]);
        return Series(std::move(c));
    }
    friend Series operator*(const Series& a, const Series& b) {
        size_t n = std::min(a.precision(), b.precision());
        std::vector<K> c(n, ring_zero(a.c_[0]));
        for (size_t i = 0; i < n; ++i) {
            if (is_zero(a.c_[i])) continue;
            for (size_t j = 0; i + j < n; ++j)
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return Series(std::move(c));
    }
    friend bool operator==(const Series& a, const Series& b) {
        if (a.precision() != b.precision()) return false;
        for (size_t i = 0; i < a.precision(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

private:
    std::vector<K> c_;
};

template <class K>
Series<K> ring_zero(const Series<K>& x) {
    return Series<K>::constant(ring_zero(x[0]), x.precision());
}
template <class K>
Series<K> ring_one(const Series<K>& x) {
    return Series<K>::constant(ring_one(x[0]), x.precision());
}
template <class K>
Series<K> ring_from_int(const Series<K>& x, const Integer& n) {
    return Series<K>::constant(ring_from_int(x[0], n), x.precision());
}
template <class K>
bool is_zero(const Series<K>& a) {
    for (size_t i = 0; i < a.precision(); ++i)
        if (!is_zero(a[i])) return false;
    return true;
}
template <class K>
bool is_unit(const Series<K>& a) {
    return a.precision() > 0 && is_unit(a[0]);
}
template <class K>
Series<K> ring_inv(const Series<K>& a) {
    size_t n = a.precision();
    K b0 = ring_inv(a[0]);
    std::vector<K> b(n, ring_zero(b0));
    b[0] = b0;
    for (size_t k = 1; k < n; ++k) {
        K acc = ring_zero(b0);
        for (size_t i = 1; i <= k; ++i) acc = acc + a[i] * b[k - i];
        b[k] = ring_zero(b0) - b0 * acc;
    }
    return Series<K>(std::move(b));
}

} // namespace mh

#endif
