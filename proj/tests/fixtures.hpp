#ifndef TESTS_FIXTURES_HPP
#define TESTS_FIXTURES_HPP

#include <string>

#include "mh/sysfile.hpp"

namespace fx {

// Bilinear 3-variable benchmark system with blocks (1, 2); its full solving
// pipeline has known intermediate values used as golden tests throughout.
inline const char* bilinear3_json = R"({
  "blocks": [["x11"], ["x21", "x22"]],
  "equations": [
    "-16*x11*x21 + 8*x11",
    "-8*x11*x21 - 16*x11*x22 - 4*x11",
    "3*x11*x21 + 4*x11*x22 + x11 + 2*x21 + 4"
  ]
})";

inline mh::SystemInput bilinear3() { return mh::parse_system_json(bilinear3_json); }

inline std::vector<mh::Integer> lambda124() {
    return {mh::Integer(1), mh::Integer(2), mh::Integer(4)};
}

// Poly from low-to-high integer coefficients, over a given sample element
template <class K>
mh::Poly<K> ipoly(const K& sample, std::initializer_list<long> cs) {
    std::vector<K> v;
    for (long c : cs) v.push_back(mh::ring_from_int(sample, mh::Integer(c)));
    return mh::Poly<K>(std::move(v));
}

inline mh::Poly<mh::Rational> qpoly(std::initializer_list<const char*> cs) {
    std::vector<mh::Rational> v;
    for (const char* c : cs) {
        mh::Rational x(c);
        x.canonicalize();
        v.push_back(x);
    }
    return mh::Poly<mh::Rational>(std::move(v));
}

} // namespace fx

#endif
