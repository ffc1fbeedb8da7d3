#ifndef MH_MOD_HPP
#define MH_MOD_HPP

#include <memory>
#include <stdexcept>

#include "mh/ringops.hpp"

namespace mh {

// Residue ring Z/p^k. k = 1 gives the prime field F_p; larger k is used by
// the p-adic lifting stage.
struct ModRing {
    Integer p;
    unsigned k = 1;
    Integer m; // p^k

    static std::shared_ptr<const ModRing> make(const Integer& p, unsigned k = 1) {
        auto r = std::make_shared<ModRing>();
        r->p = p;
        r->k = k;
        mpz_pow_ui(r->m.get_mpz_t(), p.get_mpz_t(), k);
        return r;
    }
};

using ModCtx = std::shared_ptr<const ModRing>;

class Mod {
public:
    Mod() = default;
    Mod(Integer v, ModCtx r) : v_(std::move(v)), r_(std::move(r)) { reduce(); }

    const Integer& value() const { return v_; }
    const ModCtx& ring() const { return r_; }

    friend Mod operator+(const Mod& a, const Mod& b) { return Mod(a.v_ + b.v_, a.r_); }
    friend Mod operator-(const Mod& a, const Mod& b) { return Mod(a.v_ - b.v_, a.r_); }
    friend Mod operator*(const Mod& a, const Mod& b) { return Mod(a.v_ * b.v_, a.r_); }
    friend Mod operator-(const Mod& a) { return Mod(-a.v_, a.r_); }
    friend bool operator==(const Mod& a, const Mod& b) { return a.v_ == b.v_; }

private:
    void reduce() {
        mpz_mod(v_.get_mpz_t(), v_.get_mpz_t(), r_->m.get_mpz_t());
    }
    Integer v_;
    ModCtx r_;
};

inline Mod ring_zero(const Mod& x) { return Mod(0, x.ring()); }
inline Mod ring_one(const Mod& x) { return Mod(1, x.ring()); }
inline Mod ring_from_int(const Mod& x, const Integer& n) { return Mod(n, x.ring()); }
inline bool is_zero(const Mod& a) { return a.value() == 0; }
inline bool is_unit(const Mod& a) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.value().get_mpz_t(), a.ring()->m.get_mpz_t());
    return g == 1;
}
inline Mod ring_inv(const Mod& a) {
    Integer r;
    if (!mpz_invert(r.get_mpz_t(), a.value().get_mpz_t(), a.ring()->m.get_mpz_t()))
        throw std::domain_error("ring_inv: non-invertible residue");
    return Mod(r, a.ring());
}

// canonical representative in [0, p^k)
inline Integer canonical_lift(const Mod& a) { return a.value(); }

// symmetric representative in (-p^k/2, p^k/2]
inline Integer symmetric_lift(const Mod& a) {
    Integer v = a.value();
    if (2 * v > a.ring()->m) v -= a.ring()->m;
    return v;
}

} // namespace mh

#endif
