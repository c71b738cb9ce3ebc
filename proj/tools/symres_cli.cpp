#include <CLI11.hpp>

#include "symres/cfi_prove.hpp"
#include "symres/checker.hpp"
#include "symres/errors.hpp"
#include "symres/lineq_prove.hpp"
#include "symres/mp_prove.hpp"
#include "symres/oracle.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace symres;

namespace {

constexpr double kLineqConstant = 8.0;     // documented C for the lineq bound
constexpr double kMultipedeConstant = 8.0; // documented c for the multipede bound

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("IoError", "cannot read " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) fail("IoError", "cannot write " + path);
    out << text;
}

struct Rng {
    std::uint64_t state = 0;
    unsigned next(unsigned bound) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<unsigned>((state >> 33) % bound);
    }
};

Graph base_graph(const std::string& spec) {
    auto make = [&](const std::string& prefix, Graph (*f)(int)) -> std::optional<Graph> {
        if (spec.rfind(prefix + ":", 0) != 0) return std::nullopt;
        return f(std::stoi(spec.substr(prefix.size() + 1)));
    };
    if (auto g = make("path", make_path)) return *g;
    if (auto g = make("cycle", make_cycle)) return *g;
    if (auto g = make("complete", make_complete)) return *g;
    return parse_graph(slurp(spec)).g;
}

Edge parse_edge(const std::string& text) {
    std::string t = text;
    for (char& c : t)
        if (c == ',' || c == '-') c = ' ';
    std::istringstream in(t);
    int u, v;
    if (!(in >> u >> v)) fail("ParseError", "edge must be 'u,v'");
    return make_edge(u, v);
}

LinSystem random_system(unsigned p, std::size_t m, std::size_t n, std::size_t width,
                        std::uint64_t seed, bool inconsistent) {
    Rng rng{seed};
    for (int attempt = 0; attempt < 10000; ++attempt) {
        FpMatrix a(p, m, n);
        FpVector b(p, m);
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t k = 1 + rng.next(static_cast<unsigned>(std::min(width, n)));
            for (std::size_t c = 0; c < k; ++c)
                a.at(i, rng.next(static_cast<unsigned>(n))) = 1 + rng.next(p - 1);
            b[i] = rng.next(p);
        }
        if (!inconsistent || !solve(a, b)) return {a, b};
    }
    fail("Unsatisfiable", "could not sample an inconsistent system with these parameters");
}

double lineq_bound(unsigned p, std::size_t width, std::size_t m) {
    double lambda = std::log(2.0) / std::log(static_cast<double>(p) / (p - 1));
    return kLineqConstant * std::pow(p, static_cast<double>(width) + 1) *
           std::pow(static_cast<double>(m), lambda);
}

int run(int argc, char** argv) {
    CLI::App app{"symmetric resolution toolkit"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);

    unsigned p = 2;
    std::size_t m = 4, n = 3, width = 3;
    std::uint64_t seed = 0;
    bool inconsistent = false;
    std::string prefix = "out";
    auto* gen_lineq = gen->add_subcommand("lineq", "random linear system + encoding");
    gen_lineq->add_option("--p", p, "modulus");
    gen_lineq->add_option("--m", m, "rows");
    gen_lineq->add_option("--n", n, "columns");
    gen_lineq->add_option("--width", width, "max row support");
    gen_lineq->add_option("--seed", seed, "rng seed");
    gen_lineq->add_flag("--inconsistent", inconsistent, "sample until inconsistent");
    gen_lineq->add_option("--prefix", prefix, "output prefix");

    std::string base_spec, twist_spec;
    auto* gen_cfi = gen->add_subcommand("cfi", "CFI pair + F(X, X-twist)");
    gen_cfi->add_option("--base", base_spec, "graph file or path:N/cycle:N/complete:N")
        ->required();
    gen_cfi->add_option("--twist", twist_spec, "twisted base edge u,v")->required();
    gen_cfi->add_option("--prefix", prefix, "output prefix");

    int foot = 1;
    auto* gen_mp = gen->add_subcommand("multipede", "multipede pair + F0");
    gen_mp->add_option("--base", base_spec, "bipartite graph file")->required();
    gen_mp->add_option("--foot", foot, "individualized foot");
    gen_mp->add_option("--prefix", prefix, "output prefix");

    // ---- prove ----
    auto* prove = app.add_subcommand("prove", "build refutations");
    prove->require_subcommand(1);
    std::string sys_path, out_path = "trace.srt";
    auto* prove_lineq = prove->add_subcommand("lineq", "SRC-II refutation of a system");
    prove_lineq->add_option("system", sys_path, "linear system file")->required();
    prove_lineq->add_option("-o", out_path, "trace output");
    auto* prove_cfi = prove->add_subcommand("cfi", "SRC-I refutation of F(X, X-twist)");
    prove_cfi->add_option("--base", base_spec, "graph file or path:N/cycle:N/complete:N")
        ->required();
    prove_cfi->add_option("--twist", twist_spec, "twisted base edge u,v")->required();
    prove_cfi->add_option("-o", out_path, "trace output");
    auto* prove_mp = prove->add_subcommand("multipede", "SRC-II refutation of F0");
    prove_mp->add_option("--base", base_spec, "bipartite graph file")->required();
    prove_mp->add_option("--foot", foot, "individualized foot");
    prove_mp->add_option("-o", out_path, "trace output");

    // ---- check ----
    std::string cnf_path, trace_path, mode_name = "src2";
    bool strict = false, replay = false;
    auto* chk = app.add_subcommand("check", "verify a trace");
    chk->add_option("cnf", cnf_path, "DIMACS file")->required();
    chk->add_option("trace", trace_path, "SRT file")->required();
    chk->add_option("--mode", mode_name, "res|src1|src2");
    chk->add_flag("--strict", strict, "reject chained symmetry");
    chk->add_flag("--replay", replay, "also validate the pure-resolution expansion");

    // ---- stats ----
    auto* stats = app.add_subcommand("stats", "trace statistics");
    stats->add_option("cnf", cnf_path, "DIMACS file (symbol table)")->required();
    stats->add_option("trace", trace_path, "SRT file")->required();

    // ---- oracle ----
    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
    oracle->require_subcommand(1);
    std::string in1, in2;
    auto* osat = oracle->add_subcommand("sat", "exhaustive SAT");
    osat->add_option("cnf", in1, "DIMACS file")->required();
    auto* oiso = oracle->add_subcommand("iso", "isomorphism enumeration");
    oiso->add_option("g1", in1, "graph file")->required();
    oiso->add_option("g2", in2, "graph file")->required();
    auto* oaut = oracle->add_subcommand("aut", "automorphism enumeration");
    oaut->add_option("g", in1, "graph file")->required();
    auto* olin = oracle->add_subcommand("lin", "linear solvability");
    olin->add_option("system", in1, "linear system file")->required();

    CLI11_PARSE(app, argc, argv);

    if (gen_lineq->parsed()) {
        check_modulus(p);
        LinSystem sys = random_system(p, m, n, width, seed, inconsistent);
        spit(prefix + ".lin", emit_lin_system(sys));
        spit(prefix + ".cnf", emit_dimacs(encode_system(sys.a, sys.b)));
        std::cout << "wrote " << prefix << ".lin and " << prefix << ".cnf\n";
    } else if (gen_cfi->parsed()) {
        Graph g = base_graph(base_spec);
        CfiPairEncoding enc = encode_cfi_pair(g, parse_edge(twist_spec));
        spit(prefix + "_x.graph", emit_graph(enc.x.graph));
        spit(prefix + "_xt.graph", emit_graph(enc.xt.graph));
        spit(prefix + ".cnf", emit_dimacs(enc.formula));
        std::cout << "wrote " << prefix << "_x.graph, " << prefix << "_xt.graph, " << prefix
                  << ".cnf\n";
    } else if (gen_mp->parsed()) {
        BipartiteGraph g = parse_bipartite(slurp(base_spec));
        Multipede mp = multipede(g);
        spit(prefix + "_a.graph", emit_graph(individualize(mp.graph, mp.a(foot))));
        spit(prefix + "_b.graph", emit_graph(individualize(mp.graph, mp.b(foot))));
        spit(prefix + ".cnf", emit_dimacs(mp_f0(mp, foot)));
        std::cout << "wrote " << prefix << "_a.graph, " << prefix << "_b.graph, " << prefix
                  << ".cnf\n";
    } else if (prove_lineq->parsed()) {
        LinSystem sys = parse_lin_system(slurp(sys_path));
        Derivation d = refute_system(sys.a, sys.b);
        spit(out_path, emit_trace(d, encode_system(sys.a, sys.b)));
        std::cout << "length " << d.length() << " bound "
                  << static_cast<long long>(
                         lineq_bound(sys.a.modulus(), sys.width(), sys.a.rows()))
                  << "\n";
    } else if (prove_cfi->parsed()) {
        Graph g = base_graph(base_spec);
        Edge twist = parse_edge(twist_spec);
        CfiPairEncoding enc = encode_cfi_pair(g, twist);
        Derivation d = refute_cfi(g, twist);
        spit(out_path, emit_trace(d, enc.formula));
        std::cout << "length " << d.length() << " bound " << cfi_budget(g, twist) << "\n";
    } else if (prove_mp->parsed()) {
        BipartiteGraph g = parse_bipartite(slurp(base_spec));
        MpRefutation out = refute_multipede(g, foot);
        spit(out_path, emit_trace(out.derivation, out.f0));
        std::size_t max_deg = 0;
        for (int v = 1; v <= g.nv; ++v)
            max_deg = std::max(max_deg, static_cast<std::size_t>(g.v_degree(v)));
        double bound = kMultipedeConstant *
                       (static_cast<double>(g.nv) * std::pow(2.0, max_deg + 1.0) +
                        static_cast<double>(mp_f1(multipede(g)).clauses().size()));
        std::cout << "length " << out.derivation.length() << " bound "
                  << static_cast<long long>(bound) << "\n";
    } else if (chk->parsed() || stats->parsed()) {
        CnfFormula f = parse_dimacs(slurp(cnf_path));
        Derivation d = parse_trace(slurp(trace_path), f);
        if (stats->parsed()) {
            int axioms = 0, resolves = 0, global = 0, local = 0;
            for (const auto& s : d.steps) {
                if (s.kind == StepKind::Axiom) ++axioms;
                else if (s.kind == StepKind::Resolve) ++resolves;
                else if (s.scope == SymScope::Global) ++global;
                else ++local;
            }
            std::cout << "steps " << d.size() << "\naxioms " << axioms << "\nresolutions "
                      << resolves << "\nglobal-symmetry " << global << "\nlocal-symmetry "
                      << local << "\nlength " << d.length() << "\nderives-bottom "
                      << (d.derives_bottom() ? "yes" : "no") << "\n";
            return 0;
        }
        CheckMode mode;
        if (mode_name == "res") mode = CheckMode::Resolution;
        else if (mode_name == "src1") mode = CheckMode::SrcI;
        else if (mode_name == "src2") mode = CheckMode::SrcII;
        else fail("ParseError", "mode must be res, src1 or src2");
        CheckOptions opts;
        opts.strict = strict;
        CheckReport rep = check(f, d, mode, opts);
        if (rep.valid && replay) {
            Derivation flat = expand_symmetries(d);
            CheckReport r2 = check(f, flat, CheckMode::Resolution, opts);
            if (!r2.valid) rep = r2;
        }
        std::cout << (rep.valid ? "valid" : "invalid") << " mode " << to_string(rep.mode_used)
                  << " length " << rep.length << " bottom "
                  << (rep.derives_bottom ? "yes" : "no") << "\n";
        for (const auto& [step, msg] : rep.failures)
            std::cout << "step " << step << ": " << msg << "\n";
        return rep.valid ? 0 : 1;
    } else if (osat->parsed()) {
        auto model = sat_bruteforce(parse_dimacs(slurp(in1)));
        if (!model) {
            std::cout << "unsatisfiable\n";
        } else {
            std::cout << "satisfiable";
            for (std::size_t i = 0; i < model->size(); ++i)
                std::cout << ' ' << ((*model)[i] ? static_cast<int>(i) + 1
                                                 : -(static_cast<int>(i) + 1));
            std::cout << "\n";
        }
    } else if (oiso->parsed()) {
        auto isos = iso_bruteforce(parse_graph(slurp(in1)), parse_graph(slurp(in2)));
        std::cout << "isomorphisms " << isos.size() << "\n";
        for (const auto& f : isos) {
            for (std::size_t v = 0; v < f.size(); ++v)
                std::cout << (v ? " " : "") << v + 1 << "->" << f[v];
            std::cout << "\n";
        }
    } else if (oaut->parsed()) {
        auto auts = automorphisms_bruteforce(parse_graph(slurp(in1)));
        std::cout << "automorphisms " << auts.size() << "\n";
    } else if (olin->parsed()) {
        LinSystem sys = parse_lin_system(slurp(in1));
        auto sol = solve(sys.a, sys.b);
        if (!sol) {
            std::cout << "inconsistent\n";
        } else {
            std::cout << "consistent";
            for (std::size_t j = 0; j < sol->particular.size(); ++j)
                std::cout << ' ' << sol->particular[j];
            std::cout << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
