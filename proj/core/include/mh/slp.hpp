#ifndef MH_SLP_HPP
#define MH_SLP_HPP

#include <cstdint>
#include <vector>

#include "mh/linalg.hpp"
#include "mh/quot.hpp"
#include "mh/ringops.hpp"

namespace mh {

// Straight-line program over the integers with operations {+, -, *}.
// A reference r denotes input r when r < arity, otherwise the result of
// instruction r - arity. Const instructions take the operand from consts.
struct Slp {
    enum class Op : uint8_t { Const, Add, Sub, Mul };
    struct Instr {
        Op op;
        uint32_t a = 0, b = 0;
    };

    uint32_t arity = 0;
    std::vector<Integer> consts;
    std::vector<Instr> code;
    std::vector<uint32_t> outputs;

    uint32_t push(Op op, uint32_t a, uint32_t b = 0) {
        code.push_back({op, a, b});
        return arity + static_cast<uint32_t>(code.size()) - 1;
    }
    uint32_t push_const(Integer c) {
        consts.push_back(std::move(c));
        return push(Op::Const, static_cast<uint32_t>(consts.size()) - 1);
    }
    size_t nvals() const { return arity + code.size(); }
};

template <class K>
std::vector<K> slp_eval(const Slp& s, const std::vector<K>& point) {
    if (point.size() != s.arity || s.arity == 0)
        throw std::invalid_argument("slp_eval: arity mismatch");
    std::vector<K> vals = point;
    vals.reserve(s.nvals());
    for (const auto& ins : s.code) {
        switch (ins.op) {
            case Slp::Op::Const: vals.push_back(ring_from_int(point[0], s.consts[ins.a])); break;
            case Slp::Op::Add: vals.push_back(vals[ins.a] + vals[ins.b]); break;
            case Slp::Op::Sub: vals.push_back(vals[ins.a] - vals[ins.b]); break;
            case Slp::Op::Mul: vals.push_back(vals[ins.a] * vals[ins.b]); break;
        }
    }
    std::vector<K> out;
    out.reserve(s.outputs.size());
    for (uint32_t r : s.outputs) out.push_back(vals[r]);
    return out;
}

// Copies src's instructions into dst, mapping input i of src to the dst
// reference input_map[i]. Returns the dst references of src's outputs.
std::vector<uint32_t> slp_append(Slp& dst, const Slp& src,
                                 const std::vector<uint32_t>& input_map);

// reverse-mode derivative transforms
Slp slp_gradient(const Slp& f);  // single output -> arity outputs
Slp slp_jacobian(const Slp& f);  // M outputs -> M*arity outputs, row-major

// t*f(X) + (1-t)*g(X) as an SLP on (t, X)
Slp homotopy_combine(const Slp& f, const Slp& g);

Slp slp_reduce_mod_p(const Slp& f, const Integer& p);

// det J(f) at the point (w_1(T), ..., w_N(T)) in K[T]/(q), as a residue.
// The point is in the monic-value convention (x_i = w_i(tau) at roots tau).
template <class K>
Poly<K> jacobian_det_residue(const Slp& f, const Poly<K>& q,
                             const std::vector<Poly<K>>& w) {
    auto qp = std::make_shared<const Poly<K>>(q);
    std::vector<QuotElem<K>> pt;
    pt.reserve(w.size());
    for (const auto& wi : w) pt.emplace_back(wi, qp);
    Slp jac = slp_jacobian(f);
    std::vector<QuotElem<K>> vals = slp_eval(jac, pt);
    size_t n = f.arity;
    Matrix<QuotElem<K>> m(n, std::vector<QuotElem<K>>());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i].push_back(vals[i * n + j]);
    return berkowitz_det(m).rep();
}

} // namespace mh

#endif
