#include "mh/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mh/sysfile.hpp"

namespace mh::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string rat_str(const Rational& x) {
    std::ostringstream ss;
    if (x.get_den() == 1) ss << x.get_num();
    else ss << x.get_num() << "/" << x.get_den();
    return ss.str();
}

ojson poly_json(const Poly<Rational>& p) {
    ojson a = ojson::array();
    for (int k = 0; k <= p.degree(); ++k) a.push_back(rat_str(p[static_cast<size_t>(k)]));
    return a;
}

ojson poly_json(const Poly<Mod>& p) {
    ojson a = ojson::array();
    for (int k = 0; k <= p.degree(); ++k)
        a.push_back(p[static_cast<size_t>(k)].value().get_str());
    return a;
}

template <class K>
ojson param_json(const ZeroDimParam<K>& P) {
    ojson o;
    ojson lam = ojson::array();
    for (const Integer& c : P.lambda) lam.push_back(c.get_str());
    o["lambda"] = lam;
    o["degree"] = P.q.degree();
    o["q"] = poly_json(P.q);
    ojson v = ojson::array();
    for (const auto& vi : P.v) v.push_back(poly_json(vi));
    o["v"] = v;
    return o;
}

const char* outcome_str(SolveOutcome o) {
    switch (o) {
        case SolveOutcome::Success: return "success";
        case SolveOutcome::LowerDegreeSuspected: return "lower-degree-suspected";
        default: return "fail";
    }
}

void emit(const ojson& o, const std::string& opath, std::ostream& out) {
    if (opath.empty()) {
        out << o.dump(2) << "\n";
    } else {
        std::ofstream f(opath);
        if (!f) throw ParseError("cannot open output file '" + opath + "'");
        f << o.dump(2) << "\n";
    }
}

int cmd_bounds(const SystemInput& S, const std::string& opath, std::ostream& out) {
    LiftingLedger L = lifting_ledger(S.blocks, S.d, S.s);
    ojson o;
    o["command"] = "bounds";
    o["C"] = L.C.get_str();
    o["Cprime"] = homotopy_bezout_number(S.blocks, S.d).get_str();
    o["Hn"] = L.Hn;
    o["mu1"] = L.mu1;
    o["mu2"] = L.mu2;
    o["mu3"] = L.mu3;
    o["H"] = L.H;
    o["Hprime"] = L.Hprime;
    o["e"] = L.e.get_str();
    o["B"] = L.B.get_str();
    emit(o, opath, out);
    return 0;
}

int cmd_solve(const SystemInput& S, uint64_t seed, unsigned repeat,
              const std::string& prime_override, const std::string& opath,
              std::ostream& out) {
    std::optional<Integer> pov;
    if (!prime_override.empty()) pov = Integer(prime_override);
    SolveZResult R = solve_over_z(S.prog, S.blocks, S.d, S.s, seed, repeat, pov);
    ojson o;
    o["command"] = "solve";
    o["outcome"] = outcome_str(R.outcome);
    o["seed"] = seed;
    o["repeat"] = repeat;
    o["prime"] = R.prime.get_str();
    if (R.outcome != SolveOutcome::Fail) o.update(param_json(R.param));
    else o["reason"] = R.fail_reason;
    ojson b;
    b["C"] = R.ledger.C.get_str();
    b["Cprime"] = homotopy_bezout_number(S.blocks, S.d).get_str();
    b["Hprime"] = R.ledger.Hprime;
    b["B"] = R.ledger.B.get_str();
    o["bounds"] = b;
    emit(o, opath, out);
    return R.outcome == SolveOutcome::Fail ? 2 : 0;
}

int cmd_solve_modp(const SystemInput& S, const std::string& prime, uint64_t seed,
                   unsigned repeat, const std::string& opath, std::ostream& out) {
    if (prime.empty()) throw ParseError("solve-modp requires -p PRIME");
    Integer p(prime);
    if (mpz_probab_prime_p(p.get_mpz_t(), 64) == 0) throw ParseError("-p must be prime");
    ModCtx fp = ModRing::make(p, 1);
    Mod sample(0, fp);
    Slp fmodp = slp_reduce_mod_p(S.prog, p);
    Rng rng(seed);
    std::optional<ZeroDimParam<Mod>> best;
    std::string reason;
    for (unsigned r = 0; r < std::max(1u, repeat); ++r) {
        ModSolveResult<Mod> res = nonsingular_solutions(fmodp, S.blocks, S.d, sample, rng);
        if (res.ok && (!best || res.param.degree() > best->degree()))
            best = std::move(res.param);
        if (!res.ok) reason = res.fail_reason;
    }
    ojson o;
    o["command"] = "solve-modp";
    o["outcome"] = best ? "success" : "fail";
    o["seed"] = seed;
    o["repeat"] = repeat;
    o["prime"] = p.get_str();
    if (best) o.update(param_json(*best));
    else o["reason"] = reason;
    emit(o, opath, out);
    return best ? 0 : 2;
}

int cmd_minimize(const MinimizeInput& M, uint64_t seed, unsigned repeat, unsigned sigma,
                 const std::string& prime_override, const std::string& opath,
                 std::ostream& out) {
    std::optional<Integer> pov;
    if (!prime_override.empty()) pov = Integer(prime_override);
    CriticalPointsResult R = critical_points(M.prob, seed, repeat, pov);
    ojson o;
    o["command"] = "minimize";
    o["outcome"] = outcome_str(R.outcome);
    o["seed"] = seed;
    o["repeat"] = repeat;
    o["sigma"] = sigma;
    if (R.outcome == SolveOutcome::Fail) {
        o["reason"] = R.fail_reason;
        emit(o, opath, out);
        return 2;
    }
    o["prime"] = R.prime.get_str();
    ojson u = ojson::array();
    for (const Integer& c : R.u) u.push_back(c.get_str());
    o["u"] = u;
    o["critical"] = param_json(R.full);
    o["projected_coordinates"] = R.nx;
    std::optional<QInterval> iv = isolate_minimum(R.full, sigma);
    if (iv) {
        ojson mi;
        mi["lo"] = rat_str(iv->lo);
        mi["hi"] = rat_str(iv->hi);
        o["minimum"] = mi;
    } else {
        o["minimum"] = nullptr;
    }
    emit(o, opath, out);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact solver for multi-homogeneous polynomial systems"};
    app.require_subcommand(1);

    std::string ipath, opath, prime, prime_override;
    uint64_t seed = 0;
    unsigned repeat = 3, sigma = 30, threads = 1;

    auto add_common = [&](CLI::App* c, bool needs_input = true) {
        if (needs_input) c->add_option("-i,--input", ipath, "input JSON file")->required();
        c->add_option("-o,--output", opath, "output JSON file (default stdout)");
        c->add_option("--seed", seed, "random seed");
        c->add_option("--repeat", repeat, "number of solver repetitions");
        c->add_option("--threads", threads, "worker threads (1 keeps runs reproducible)");
    };
    CLI::App* bounds = app.add_subcommand("bounds", "degree and height bound report");
    add_common(bounds);
    CLI::App* solve = app.add_subcommand("solve", "solve over the rationals");
    add_common(solve);
    solve->add_option("--prime-override", prime_override,
                      "use this prime instead of the oracle (voids the probability guarantee)");
    CLI::App* modp = app.add_subcommand("solve-modp", "solve over a prime field");
    add_common(modp);
    modp->add_option("-p,--prime", prime, "prime modulus")->required();
    CLI::App* minimize = app.add_subcommand("minimize",
                                            "minimize the first coordinate on a real variety");
    add_common(minimize);
    minimize->add_option("--sigma", sigma, "enclosure width is at most 2^-sigma");
    minimize->add_option("--prime-override", prime_override,
                         "use this prime instead of the oracle");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (!prime_override.empty())
            err << "warning: --prime-override voids the success-probability guarantee\n";
        if (bounds->parsed() || solve->parsed() || modp->parsed()) {
            SystemInput S = parse_system_json(read_file(ipath));
            if (S.polys.size() != S.varnames.size())
                throw ParseError("square system required: equation count must match variable count");
            if (bounds->parsed()) return cmd_bounds(S, opath, out);
            if (solve->parsed()) return cmd_solve(S, seed, repeat, prime_override, opath, out);
            return cmd_solve_modp(S, prime, seed, repeat, opath, out);
        }
        MinimizeInput M = parse_minimize_json(read_file(ipath));
        return cmd_minimize(M, seed, repeat, sigma, prime_override, opath, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace mh::cli
