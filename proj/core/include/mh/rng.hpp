#ifndef MH_RNG_HPP
#define MH_RNG_HPP

#include <cstdint>
#include <gmpxx.h>

namespace mh {

// xoshiro256** with a splitmix64 seeder. Self-contained so that runs are
// byte-identical across platforms and library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& w : s_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            w = z ^ (z >> 31);
        }
    }

    std::uint64_t next() {
        auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
        std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0, n), n >= 1
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t lim = n * (UINT64_MAX / n);
        std::uint64_t v;
        do { v = next(); } while (v >= lim && lim != 0);
        return v % n;
    }

    // uniform in [0, n), n >= 1, arbitrary precision
    mpz_class below(const mpz_class& n) {
        size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
        size_t words = (bits + 63) / 64;
        mpz_class v;
        while (true) {
            v = 0;
            for (size_t i = 0; i < words; ++i) {
                v <<= 64;
                v += mpz_class(static_cast<unsigned long>(next()));
            }
            v >>= (64 * words - bits);
            if (v < n) return v;
        }
    }

    // uniform in [lo, hi] inclusive
    mpz_class range(const mpz_class& lo, const mpz_class& hi) {
        return lo + below(mpz_class(hi - lo + 1));
    }

private:
    std::uint64_t s_[4];
};

} // namespace mh

#endif
