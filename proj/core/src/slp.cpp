#include "mh/slp.hpp"

namespace mh {

std::vector<uint32_t> slp_append(Slp& dst, const Slp& src,
                                 const std::vector<uint32_t>& input_map) {
    if (input_map.size() != src.arity)
        throw std::invalid_argument("slp_append: input map size mismatch");
    uint32_t code_off = static_cast<uint32_t>(dst.code.size());
    uint32_t const_off = static_cast<uint32_t>(dst.consts.size());
    dst.consts.insert(dst.consts.end(), src.consts.begin(), src.consts.end());
    auto remap = [&](uint32_t r) {
        return r < src.arity ? input_map[r] : r - src.arity + dst.arity + code_off;
    };
    for (const auto& ins : src.code) {
        if (ins.op == Slp::Op::Const)
            dst.code.push_back({ins.op, ins.a + const_off, 0});
        else
            dst.code.push_back({ins.op, remap(ins.a), remap(ins.b)});
    }
    std::vector<uint32_t> outs;
    outs.reserve(src.outputs.size());
    for (uint32_t r : src.outputs) outs.push_back(remap(r));
    return outs;
}

namespace {

// Appends a reverse-mode pass for the value out_ref to g, whose first
// f.code.size() instructions are a verbatim copy of f's code. Returns the
// adjoint references of the inputs.
std::vector<uint32_t> append_reverse_pass(Slp& g, const Slp& f, uint32_t out_ref) {
    constexpr uint32_t none = UINT32_MAX;
    uint32_t zero_ref = none;
    auto get_zero = [&]() {
        if (zero_ref == none) zero_ref = g.push_const(Integer(0));
        return zero_ref;
    };
    std::vector<uint32_t> adj(f.nvals(), none);
    adj[out_ref] = g.push_const(Integer(1));
    auto acc = [&](uint32_t x, uint32_t r) {
        adj[x] = adj[x] == none ? r : g.push(Slp::Op::Add, adj[x], r);
    };
    auto acc_neg = [&](uint32_t x, uint32_t r) {
        adj[x] = g.push(Slp::Op::Sub, adj[x] == none ? get_zero() : adj[x], r);
    };
    for (size_t i = f.code.size(); i-- > 0;) {
        uint32_t r = f.arity + static_cast<uint32_t>(i);
        if (adj[r] == none) continue;
        const auto& ins = f.code[i];
        switch (ins.op) {
            case Slp::Op::Const:
                break;
            case Slp::Op::Add:
                acc(ins.a, adj[r]);
                acc(ins.b, adj[r]);
                break;
            case Slp::Op::Sub:
                acc(ins.a, adj[r]);
                acc_neg(ins.b, adj[r]);
                break;
            case Slp::Op::Mul:
                acc(ins.a, g.push(Slp::Op::Mul, adj[r], ins.b));
                acc(ins.b, g.push(Slp::Op::Mul, adj[r], ins.a));
                break;
        }
    }
    std::vector<uint32_t> grads;
    grads.reserve(f.arity);
    for (uint32_t i = 0; i < f.arity; ++i)
        grads.push_back(adj[i] == none ? get_zero() : adj[i]);
    return grads;
}

} // namespace

Slp slp_gradient(const Slp& f) {
    if (f.outputs.size() != 1)
        throw std::invalid_argument("slp_gradient: single output required");
    Slp g;
    g.arity = f.arity;
    g.consts = f.consts;
    g.code = f.code;
    g.outputs = append_reverse_pass(g, f, f.outputs[0]);
    return g;
}

Slp slp_jacobian(const Slp& f) {
    Slp g;
    g.arity = f.arity;
    g.consts = f.consts;
    g.code = f.code;
    for (uint32_t out : f.outputs) {
        std::vector<uint32_t> row = append_reverse_pass(g, f, out);
        g.outputs.insert(g.outputs.end(), row.begin(), row.end());
    }
    return g;
}

Slp homotopy_combine(const Slp& f, const Slp& g) {
    if (f.arity != g.arity || f.outputs.size() != g.outputs.size())
        throw std::invalid_argument("homotopy_combine: shape mismatch");
    Slp h;
    h.arity = f.arity + 1; // input 0 is t
    std::vector<uint32_t> xmap(f.arity);
    for (uint32_t i = 0; i < f.arity; ++i) xmap[i] = i + 1;
    std::vector<uint32_t> fo = slp_append(h, f, xmap);
    std::vector<uint32_t> go = slp_append(h, g, xmap);
    for (size_t k = 0; k < fo.size(); ++k) {
        uint32_t diff = h.push(Slp::Op::Sub, fo[k], go[k]);
        uint32_t scaled = h.push(Slp::Op::Mul, 0, diff);
        h.outputs.push_back(h.push(Slp::Op::Add, scaled, go[k]));
    }
    return h;
}

Slp slp_reduce_mod_p(const Slp& f, const Integer& p) {
    Slp g = f;
    for (Integer& c : g.consts)
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    return g;
}

} // namespace mh
