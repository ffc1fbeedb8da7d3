#include "mh/sysfile.hpp"

#include <cctype>

#include <json.hpp>

namespace mh {

namespace {

struct ExprParser {
    const std::string& text;
    const std::map<std::string, size_t>& vars;
    size_t nvars;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(pos));
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    MPoly parse() {
        MPoly e = expr();
        skip_ws();
        if (pos != text.size()) fail("trailing input");
        return e;
    }

    MPoly expr() {
        skip_ws();
        bool neg = false;
        while (eat('-')) neg = !neg;
        eat('+');
        MPoly acc = term();
        if (neg) acc = MPoly(nvars) - acc;
        while (true) {
            skip_ws();
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else break;
        }
        return acc;
    }

    MPoly term() {
        MPoly acc = factor();
        while (true) {
            skip_ws();
            if (eat('*')) acc = acc * factor();
            else break;
        }
        return acc;
    }

    MPoly factor() {
        MPoly b = base();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) fail("exponent expected");
            unsigned k = static_cast<unsigned>(std::stoul(text.substr(start, pos - start)));
            return b.pow(k);
        }
        return b;
    }

    MPoly base() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of expression");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            MPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == '-') {
            ++pos;
            return MPoly(nvars) - factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            Integer num(text.substr(start, pos - start));
            skip_ws();
            if (eat('/')) {
                skip_ws();
                size_t ds = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (pos == ds) fail("denominator expected");
                Integer den(text.substr(ds, pos - ds));
                if (den == 0) fail("zero denominator");
                Rational q(num, den);
                q.canonicalize();
                return MPoly::constant(nvars, q);
            }
            return MPoly::constant(nvars, Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            auto it = vars.find(name);
            if (it == vars.end()) fail("unknown variable '" + name + "'");
            return MPoly::variable(nvars, it->second);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

MPoly parse_expression(const std::string& text,
                       const std::map<std::string, size_t>& vars, size_t nvars) {
    ExprParser p{text, vars, nvars};
    return p.parse();
}

Slp slp_from_polys(const std::vector<MPoly>& polys, size_t nvars) {
    Slp s;
    s.arity = static_cast<uint32_t>(nvars);
    for (const MPoly& f : polys) {
        uint32_t acc = 0;
        bool any = false;
        for (const auto& [e, c] : f.terms()) {
            if (c.get_den() != 1)
                throw std::invalid_argument("slp_from_polys: non-integer coefficient");
            uint32_t t = s.push_const(c.get_num());
            for (size_t i = 0; i < e.size(); ++i)
                for (unsigned k = 0; k < e[i]; ++k)
                    t = s.push(Slp::Op::Mul, t, static_cast<uint32_t>(i));
            acc = any ? s.push(Slp::Op::Add, acc, t) : t;
            any = true;
        }
        if (!any) acc = s.push_const(Integer(0));
        s.outputs.push_back(acc);
    }
    return s;
}

namespace {

std::vector<MPoly> parse_equations(const nlohmann::json& eqs,
                                   const std::map<std::string, size_t>& varindex,
                                   size_t nvars) {
    std::vector<MPoly> out;
    for (const auto& e : eqs) {
        if (!e.is_string()) throw ParseError("equation entries must be strings");
        MPoly p = parse_expression(e.get<std::string>(), varindex, nvars).cleared();
        if (p.is_zero()) throw ParseError("zero equation");
        out.push_back(std::move(p));
    }
    return out;
}

double poly_height(const MPoly& p) {
    return integer_log(p.max_abs_coeff_num());
}

} // namespace

SystemInput parse_system_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what());
    }
    if (!j.contains("blocks") || !j["blocks"].is_array() || j["blocks"].empty())
        throw ParseError("missing 'blocks' array");
    if (!j.contains("equations") || !j["equations"].is_array())
        throw ParseError("missing 'equations' array");

    SystemInput S;
    std::map<std::string, size_t> varindex;
    for (const auto& blk : j["blocks"]) {
        if (!blk.is_array() || blk.empty()) throw ParseError("blocks must be nonempty arrays");
        S.blocks.n.push_back(static_cast<unsigned>(blk.size()));
        for (const auto& v : blk) {
            std::string name = v.get<std::string>();
            if (varindex.count(name)) throw ParseError("variable '" + name + "' repeated");
            varindex[name] = S.varnames.size();
            S.varnames.push_back(name);
        }
    }
    size_t nvars = S.varnames.size();
    S.polys = parse_equations(j["equations"], varindex, nvars);

    // per-block degrees and heights from the expansion
    size_t m = S.blocks.n.size();
    std::vector<size_t> block_of(nvars);
    {
        size_t v = 0;
        for (size_t b = 0; b < m; ++b)
            for (unsigned k = 0; k < S.blocks.n[b]; ++k) block_of[v++] = b;
    }
    for (const MPoly& p : S.polys) {
        std::vector<unsigned> row(m, 0);
        for (const auto& [e, c] : p.terms()) {
            std::vector<unsigned> bd(m, 0);
            for (size_t i = 0; i < nvars; ++i) bd[block_of[i]] += e[i];
            for (size_t b = 0; b < m; ++b) row[b] = std::max(row[b], bd[b]);
        }
        S.d.push_back(std::move(row));
        S.s.push_back(poly_height(p));
    }
    if (j.contains("degrees")) {
        // declared multi-degrees may only widen the computed ones
        const auto& dd = j["degrees"];
        if (!dd.is_array() || dd.size() != S.d.size())
            throw ParseError("'degrees' shape mismatch");
        for (size_t i = 0; i < S.d.size(); ++i) {
            if (dd[i].size() != m) throw ParseError("'degrees' row width mismatch");
            for (size_t b = 0; b < m; ++b) {
                unsigned decl = dd[i][b].get<unsigned>();
                if (decl < S.d[i][b]) throw ParseError("declared degree below actual");
                S.d[i][b] = decl;
            }
        }
    }
    S.prog = slp_from_polys(S.polys, nvars);
    return S;
}

MinimizeInput parse_minimize_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what());
    }
    if (!j.contains("vars") || !j["vars"].is_array() || j["vars"].empty())
        throw ParseError("missing 'vars' array");
    if (!j.contains("constraints") || !j["constraints"].is_array() || j["constraints"].empty())
        throw ParseError("missing 'constraints' array");

    MinimizeInput M;
    std::map<std::string, size_t> varindex;
    for (const auto& v : j["vars"]) {
        std::string name = v.get<std::string>();
        if (varindex.count(name)) throw ParseError("variable '" + name + "' repeated");
        varindex[name] = M.varnames.size();
        M.varnames.push_back(name);
    }
    size_t nvars = M.varnames.size();
    M.constraints = parse_equations(j["constraints"], varindex, nvars);
    if (M.constraints.size() > nvars) throw ParseError("more constraints than variables");

    M.prob.n = static_cast<unsigned>(nvars);
    M.prob.p = static_cast<unsigned>(M.constraints.size());
    M.prob.h = slp_from_polys(M.constraints, nvars);
    unsigned dmax = 1;
    double smax = 0.0;
    for (const MPoly& p : M.constraints) {
        for (const auto& [e, c] : p.terms()) {
            unsigned t = 0;
            for (unsigned x : e) t += x;
            dmax = std::max(dmax, t);
        }
        smax = std::max(smax, poly_height(p));
    }
    M.prob.d = dmax;
    M.prob.s = smax;
    return M;
}

} // namespace mh
