#ifndef MH_SYSFILE_HPP
#define MH_SYSFILE_HPP

#include <map>
#include <string>

#include "mh/bounds.hpp"
#include "mh/minimize.hpp"
#include "mh/slp.hpp"

namespace mh {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// sparse multivariate polynomial with rational coefficients; exponent
// vectors all have length nvars
class MPoly {
public:
    using Term = std::map<std::vector<unsigned>, Rational>;

    explicit MPoly(size_t nvars = 0) : nvars_(nvars) {}
    static MPoly constant(size_t nvars, Rational c) {
        MPoly p(nvars);
        if (c != 0) p.terms_[std::vector<unsigned>(nvars, 0)] = std::move(c);
        return p;
    }
    static MPoly variable(size_t nvars, size_t i) {
        MPoly p(nvars);
        std::vector<unsigned> e(nvars, 0);
        e[i] = 1;
        p.terms_[std::move(e)] = 1;
        return p;
    }

    size_t nvars() const { return nvars_; }
    const Term& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<unsigned> e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MPoly pow(unsigned k) const {
        MPoly r = MPoly::constant(nvars_, 1);
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    MPoly derivative(size_t i) const {
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            std::vector<unsigned> e2 = e;
            e2[i] -= 1;
            r.add_term(e2, c * static_cast<long>(e[i]));
        }
        return r;
    }

    template <class K>
    K eval(const std::vector<K>& x) const {
        K acc = ring_zero(x.at(0));
        for (const auto& [e, c] : terms_) {
            K t = ring_from_int(x[0], c.get_num()) *
                  ring_inv(ring_from_int(x[0], c.get_den()));
            for (size_t i = 0; i < e.size(); ++i)
                for (unsigned k = 0; k < e[i]; ++k) t = t * x[i];
            acc = acc + t;
        }
        return acc;
    }

    // multiply by the lcm of the coefficient denominators
    MPoly cleared() const {
        Integer l = 1;
        for (const auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
        MPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = c * Rational(l);
        return r;
    }

    Integer max_abs_coeff_num() const {
        Integer m = 0;
        for (const auto& [e, c] : terms_) {
            Integer a = abs(c.get_num());
            if (a > m) m = a;
        }
        return m;
    }

    void add_term(const std::vector<unsigned>& e, const Rational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

private:
    size_t nvars_;
    Term terms_;
};

// expression grammar: + - * ^ with parentheses, integer or a/b coefficients
MPoly parse_expression(const std::string& text,
                       const std::map<std::string, size_t>& vars, size_t nvars);

// naive SLP on the expanded monomials; coefficients must be integers
Slp slp_from_polys(const std::vector<MPoly>& polys, size_t nvars);

struct SystemInput {
    BlockStructure blocks;
    std::vector<std::string> varnames; // block order, concatenated
    std::vector<MPoly> polys;          // denominator-cleared
    MultiDegree d;
    std::vector<double> s; // per-equation heights
    Slp prog;
};

SystemInput parse_system_json(const std::string& text);

struct MinimizeInput {
    std::vector<std::string> varnames;
    std::vector<MPoly> constraints; // cleared
    MinimizationProblem prob;
};

MinimizeInput parse_minimize_json(const std::string& text);

} // namespace mh

#endif
