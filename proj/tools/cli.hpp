#pragma once

// `setcirc` command-line driver. Exit codes: 0 decided/ok, 1 xcheck disagreement, 2 invalid input,
// 3 I/O error, 4 unsupported fragment, 5 budget exceeded.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "instance_io.hpp"
#include "setcirc.hpp"
#include "xcheck.hpp"

namespace setcirc::cli {

enum Exit : int { exit_ok = 0, exit_disagree = 1, exit_invalid = 2, exit_io = 3, exit_unsupported = 4, exit_budget = 5 };

class IoError : public Error {
public:
    using Error::Error;
};

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text))
        throw IoError("cannot write '" + path + "'");
}

inline Circuit load_circuit(const std::string& path) { return parse_circuit(read_file(path)); }

inline Natural parse_query(const std::string& text)
{
    auto n = parse_natural(text);
    if (!n)
        throw DomainError("query must be a natural number, got '" + text + "'");
    return *n;
}

inline ExtVector parse_vector_query(const std::string& text, std::size_t dim)
{
    auto v = parse_ext_vector(text);
    if (!v)
        throw DomainError("query must be a vector like 1,0 or inf, got '" + text + "'");
    if (!v->infinite && v->dim() != dim)
        throw DomainError("query has " + std::to_string(v->dim()) + " coordinates, circuit dimension is " +
                          std::to_string(dim));
    return *v;
}

inline const char* bool_word(bool b) { return b ? "true" : "false"; }

struct Options {
    std::string engine = "auto";
    std::string mode = "structural";
    Budget budget;

    DecideOptions decide() const
    {
        DecideOptions o;
        auto e = parse_engine(engine);
        if (!e)
            throw DomainError("unknown engine '" + engine + "'");
        auto m = parse_cutoff_mode(mode);
        if (!m || *m == CutoffMode::none)
            throw DomainError("cutoff mode must be structural or certified");
        o.engine = *e;
        o.mode = *m;
        o.budget = budget;
        return o;
    }
};

inline void add_budget_flags(CLI::App* app, Budget& b)
{
    app->add_option("--max-set-size", b.max_set_size, "largest exact set")->check(CLI::PositiveNumber);
    app->add_option("--max-grid-cells", b.max_grid_cells, "largest clamped grid")->check(CLI::PositiveNumber);
    app->add_option("--max-memo", b.max_memo_entries, "largest memo table")->check(CLI::PositiveNumber);
    app->add_option("--max-steps", b.max_steps, "inner-loop step limit per call")->check(CLI::PositiveNumber);
    app->add_option("--max-formula-gates", b.max_formula_gates, "largest formula expansion")
        ->check(CLI::PositiveNumber);
}

// ------------------------------------------------------------------ subcommands

inline int cmd_validate(const std::string& path, std::ostream& out)
{
    Circuit c = load_circuit(path);
    out << "valid=true kind=" << (c.is_vector() ? "vector" : "scalar");
    if (c.is_vector())
        out << " dim=" << c.dim();
    out << " gates=" << c.size() << " fragment=" << fragment_of(c).to_string() << " length=" << encoding_length(c)
        << '\n';
    return exit_ok;
}

inline int cmd_member(const std::string& path, const std::string& query, const Options& opt, bool witness,
                      bool stats, std::ostream& out)
{
    Circuit c = load_circuit(path);
    DecideOptions o = opt.decide();
    MembershipVerdict v = c.is_vector() ? decide_vector(c, parse_vector_query(query, c.dim()), o)
                                        : decide(c, parse_query(query), o);
    out << "member=" << bool_word(v.member) << " engine=" << engine_name(v.engine)
        << " cutoff=" << cutoff_mode_name(v.cutoff_mode) << '\n';
    if (stats)
        out << "gates=" << v.stats.gates << " memo_entries=" << v.stats.memo_entries
            << " micros=" << v.stats.elapsed.count() << '\n';
    if (witness && v.witness) {
        out << "witness";
        for (const auto& [id, val] : v.witness->values)
            out << ' ' << id << '=' << val;
        out << '\n';
    }
    return exit_ok;
}

inline int cmd_eval(const std::string& path, std::size_t up_to, const Options& opt, std::ostream& out)
{
    Circuit c = load_circuit(path);
    Fragment f = fragment_of(c);
    DecideOptions o = opt.decide();
    if (c.is_vector()) {
        if (!f.contains(Op::comp)) {
            std::string line;
            for (const auto& x : eval_exact_vector(c, o.budget)) {
                bool small = x.infinite || std::all_of(x.coords.begin(), x.coords.end(),
                                                       [&](const Natural& v) { return v <= up_to; });
                if (small)
                    line += (line.empty() ? "" : " ") + element_string(x);
            }
            out << line << '\n';
        } else {
            out << describe(eval_clamped_vector(c, o.mode, o.budget).output(), up_to) << '\n';
        }
        return exit_ok;
    }
    require_decidable(c);
    if (f.subset_of(exact_fragment)) {
        std::string line;
        std::size_t above = 0;
        for (const auto& x : eval_exact(c, o.budget)) {
            if (x <= up_to)
                line += (line.empty() ? "" : " ") + x.str();
            else
                ++above;
        }
        if (above)
            line += (line.empty() ? "" : " ") + std::string("... +") + std::to_string(above) + " above " +
                    std::to_string(up_to);
        out << line << '\n';
    } else if (f.subset_of(clamped_fragment)) {
        out << describe(eval_clamped_scalar(c, o.mode, o.budget).output(), up_to) << '\n';
    } else {
        // multiplicative fragments with complement: one decision per number
        std::string line;
        for (std::size_t b = 0; b <= up_to; ++b)
            if (decide(c, b, o).member)
                line += (line.empty() ? "" : " ") + std::to_string(b);
        out << line << '\n';
    }
    return exit_ok;
}

inline int cmd_transform(const std::string& kind, const std::string& path, const std::string& query,
                         std::size_t max_gates, const std::string& output, std::ostream& out)
{
    Circuit c = load_circuit(path);
    std::string text;
    if (kind == "sigma-gcdfree" || kind == "sigma-prime") {
        if (query.empty())
            throw DomainError(kind + " needs the query number b");
        Natural b = parse_query(query);
        VectorTransform t = kind == "sigma-gcdfree" ? to_vector_gcdfree(c, b) : to_vector_primefact(c, b);
        text = serialize_circuit(t.circuit) + "# sigma=" + t.sigma.describe() + "\n# query=" + to_string(t.query) +
               "\n";
    } else if (kind == "eliminate-cap") {
        text = serialize_circuit(eliminate_cap(c));
    } else if (kind == "demorgan") {
        text = serialize_circuit(demorgan_rewrite(c));
    } else if (kind == "expand") {
        text = serialize_circuit(expand_formula(c, max_gates));
    } else {
        throw DomainError("unknown transform '" + kind + "'");
    }
    write_output(output, text, out);
    return exit_ok;
}

inline int cmd_gen(const std::string& kind, const std::string& instance, const std::string& output,
                   std::ostream& out)
{
    Reduction r{primes_circuit(), 0, false};
    std::string header;
    auto load = [&] {
        if (instance.empty())
            throw DomainError("gen " + kind + " needs an instance file");
        return io::parse_json(read_file(instance));
    };
    bool expected = false;
    if (kind == "exact-cover") {
        auto inst = io::exact_cover_from_json(load());
        r = from_exact_cover(inst);
        expected = solve_exact_cover(inst);
        header = "# exact cover: a cover exists iff 1 is a member\n";
    } else if (kind == "gap") {
        auto inst = io::gap_from_json(load());
        r = from_gap(inst.graph, inst.s, inst.t);
        expected = bfs_reachable(inst.graph, inst.s, inst.t);
        header = "# reachability (negated): t is reachable from s iff 1 is NOT a member\n";
    } else if (kind == "cvp") {
        auto inst = io::cvp_from_json(load());
        r = from_cvp(inst);
        expected = eval_bool(inst);
        header = "# circuit value: the boolean circuit is true iff 1 is a member\n";
    } else if (kind == "majority") {
        auto inst = io::majority_from_json(load());
        r = from_majority_dag(inst);
        auto counts = count_paths(inst);
        expected = counts.accept > counts.reject;
        header = "# majority of paths: accepting paths outnumber rejecting ones iff 1 is a member\n"
                 "# paths accept=" + counts.accept.str() + " reject=" + counts.reject.str() + "\n";
    } else if (kind == "primes") {
        header = "# primes: b is a member iff b is prime\n";
    } else {
        throw DomainError("unknown generator '" + kind + "'");
    }
    std::string text = header;
    if (kind != "primes") {
        bool member = expected != r.negated;
        text += "# query=" + r.query.str() + " instance=" + bool_word(expected) + " expected_member=" +
                bool_word(member) + "\n";
    }
    text += serialize_circuit(r.circuit);
    write_output(output, text, out);
    return exit_ok;
}

inline int cmd_bounds(const std::string& path, std::ostream& out)
{
    Circuit c = load_circuit(path);
    Fragment f = fragment_of(c);
    out << "length=" << encoding_length(c) << " fragment=" << f.to_string() << '\n';
    std::optional<CutoffProfile> structural, certified;
    if (!f.contains(Op::mul)) {
        structural = structural_cutoff(c);
        try {
            certified = certified_cutoff(c, 4096);
        } catch (const BudgetExceeded&) {
        }
        if (!certified) {
            CutoffProfile p;
            p.mode = CutoffMode::certified;
            p.exponents = setcirc::detail::subcircuit_lengths(c);
            p.cutoffs.assign(c.size(), 0);
            certified = p;
        }
    }
    auto lengths = setcirc::detail::subcircuit_lengths(c);
    for (std::size_t i = 0; i < c.size(); ++i) {
        out << "gate " << c.gate_at(i).id << ' ' << op_keyword(c.gate_at(i).op);
        if (structural) {
            out << " structural=" << structural->at(i).str() << " certified=";
            if (lengths[i] > 64)
                out << "2^" << lengths[i] << " + 1";
            else
                out << ((Natural(1) << lengths[i]) + 1).str();
        } else {
            out << " structural=n/a certified=n/a";
        }
        out << '\n';
    }
    if (!f.contains(Op::comp))
        out << "size_bound=" << element_size_bound(c).describe() << '\n';
    return exit_ok;
}

inline int cmd_xcheck(const std::vector<std::string>& paths, std::size_t random, std::uint64_t seed,
                      std::size_t max_b, const Budget& budget, bool verbose, std::ostream& out)
{
    XcheckReport rep;
    for (const auto& p : paths)
        xcheck_circuit(p, load_circuit(p), max_b, budget, rep);
    Rng rng(seed);
    for (std::size_t i = 0; i < random; ++i) {
        Circuit c = xcheck_corpus_circuit(rng, i);
        std::string name = "random-" + std::to_string(i);
        try {
            xcheck_circuit(name, c, max_b, budget, rep);
        } catch (const Error&) {
            out << "circuit=" << name << " failed:\n" << serialize_circuit(c);
            throw;
        }
        if (verbose)
            out << "circuit=" << name << " fragment=" << fragment_of(c).to_string() << '\n';
    }
    for (const auto& m : rep.messages)
        out << m << '\n';
    out << "xcheck circuits=" << rep.circuits << " queries=" << rep.queries << " compared=" << rep.comparisons
        << " abstentions=" << rep.abstentions << " disagreements=" << rep.disagreements << '\n';
    return rep.disagreements ? exit_disagree : exit_ok;
}

/// Engines worth timing on a scalar circuit.
inline std::vector<EngineKind> bench_engines(const Circuit& c)
{
    Fragment f = fragment_of(c);
    std::vector<EngineKind> e;
    if (c.is_vector()) {
        e = {EngineKind::clamped_vector, EngineKind::search};
        if (!f.contains(Op::comp))
            e.push_back(EngineKind::exact_vector);
        if (f.subset_of({Op::inter, Op::add, Op::sub}))
            e.push_back(EngineKind::singleton_vector);
        return e;
    }
    if (f.contains(Op::comp) && f.contains(Op::add) && f.contains(Op::mul))
        return e;
    if (f.subset_of(singleton_fragment))
        e.push_back(EngineKind::singleton);
    if (f.subset_of(exact_fragment)) {
        e.push_back(EngineKind::exact);
        e.push_back(EngineKind::certificate);
    }
    if (f.subset_of(clamped_fragment)) {
        e.push_back(EngineKind::clamped_scalar);
        e.push_back(EngineKind::search);
    }
    if (f.subset_of(gcdfree_fragment))
        e.push_back(EngineKind::exact_vector);
    if (f.subset_of(sigma_fragment) && f.contains(Op::mul)) {
        e.push_back(EngineKind::clamped_vector);
        e.push_back(EngineKind::search);
    }
    return e;
}

inline int cmd_bench(const std::string& dir, std::size_t max_b, const Budget& budget, const std::string& output,
                     std::ostream& out)
{
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec))
        throw IoError("'" + dir + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".circ")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::ostringstream csv;
    csv << "circuit,b,engine,member,micros,memo_entries\n";
    for (const auto& file : files) {
        Circuit c = load_circuit(file.string());
        for (EngineKind e : bench_engines(c)) {
            DecideOptions o;
            o.engine = e;
            o.budget = budget;
            for (std::size_t b = 0; b <= max_b; ++b) {
                std::string member;
                MembershipVerdict v;
                try {
                    v = c.is_vector() ? decide_vector(c, ExtVector::of(std::vector<Natural>(c.dim(), b)), o)
                                      : decide(c, b, o);
                    member = bool_word(v.member);
                } catch (const BudgetExceeded&) {
                    member = "budget";
                } catch (const FragmentError&) {
                    member = "n/a";
                }
                csv << file.filename().string() << ',' << b << ',' << engine_name(e) << ',' << member << ','
                    << v.stats.elapsed.count() << ',' << v.stats.memo_entries << '\n';
            }
        }
    }
    write_output(output, csv.str(), out);
    return exit_ok;
}

// ------------------------------------------------------------------ entry point

/// Runs the CLI on `args` (without the program name). Never throws.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Membership queries for arithmetic circuits over sets of naturals", "setcirc"};
    app.require_subcommand(1);
    int code = exit_ok;

    Options opt;
    std::string path, query, kind, output;
    std::size_t up_to = 20, max_gates = 1'000'000, max_b = 64, random = 0;
    std::uint64_t seed = 1;
    bool witness = false, stats = false, verbose = false;
    std::vector<std::string> paths;

    auto* validate = app.add_subcommand("validate", "parse and validate a circuit file");
    validate->add_option("circuit", path, "circuit file")->required();

    auto* member = app.add_subcommand("member", "decide whether b is in I(C)");
    member->add_option("circuit", path, "circuit file")->required();
    member->add_option("b", query, "query number (vector circuits: 1,0 or inf)")->required();
    member->add_option("--engine", opt.engine, "engine id or auto");
    member->add_option("--cutoff-mode", opt.mode, "structural or certified");
    member->add_flag("--witness", witness, "print the certificate when one is produced");
    member->add_flag("--stats", stats, "print engine statistics");
    add_budget_flags(member, opt.budget);

    auto* eval = app.add_subcommand("eval", "list I(C) up to a bound");
    eval->add_option("circuit", path, "circuit file")->required();
    eval->add_option("--up-to", up_to, "largest number (or coordinate) listed");
    eval->add_option("--cutoff-mode", opt.mode, "structural or certified");
    add_budget_flags(eval, opt.budget);

    auto* transform = app.add_subcommand("transform", "rewrite a circuit");
    transform->add_option("kind", kind, "sigma-gcdfree | sigma-prime | eliminate-cap | demorgan | expand")
        ->required();
    transform->add_option("circuit", path, "circuit file")->required();
    transform->add_option("b", query, "query number (sigma transforms)");
    transform->add_option("--max-gates", max_gates, "formula expansion budget");
    transform->add_option("-o,--output", output, "output file (default stdout)");

    auto* gen = app.add_subcommand("gen", "compile a problem instance into a circuit");
    gen->add_option("kind", kind, "exact-cover | gap | cvp | majority | primes")->required();
    gen->add_option("instance", path, "JSON instance file");
    gen->add_option("-o,--output", output, "output file (default stdout)");

    auto* bounds = app.add_subcommand("bounds", "print per-gate cutoffs and size bounds");
    bounds->add_option("circuit", path, "circuit file")->required();

    auto* xcheck = app.add_subcommand("xcheck", "cross-check all applicable engines");
    xcheck->add_option("circuits", paths, "circuit files");
    xcheck->add_option("--random", random, "number of random circuits to add");
    xcheck->add_option("--seed", seed, "random corpus seed");
    xcheck->add_option("--max-b", max_b, "largest scalar query");
    xcheck->add_flag("-v,--verbose", verbose, "one line per random circuit");
    add_budget_flags(xcheck, opt.budget);

    auto* bench = app.add_subcommand("bench", "time every engine on a directory of .circ files");
    bench->add_option("corpus", path, "directory")->required();
    bench->add_option("--max-b", max_b, "largest query")->default_val(16);
    bench->add_option("-o,--output", output, "CSV output file (default stdout)");
    add_budget_flags(bench, opt.budget);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    }

    try {
        if (*validate)
            code = cmd_validate(path, out);
        else if (*member)
            code = cmd_member(path, query, opt, witness, stats, out);
        else if (*eval)
            code = cmd_eval(path, up_to, opt, out);
        else if (*transform)
            code = cmd_transform(kind, path, query, max_gates, output, out);
        else if (*gen)
            code = cmd_gen(kind, path, output, out);
        else if (*bounds)
            code = cmd_bounds(path, out);
        else if (*xcheck)
            code = cmd_xcheck(paths, random, seed, max_b, opt.budget, verbose, out);
        else if (*bench)
            code = cmd_bench(path, max_b, opt.budget, output, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const ParseError& e) {
        err << "error: " << path << ":" << e.what() << '\n';
        return exit_invalid;
    } catch (const UnsupportedFragment& e) {
        err << "error: " << e.what() << '\n';
        return exit_unsupported;
    } catch (const FragmentError& e) {
        err << "error: unsupported fragment: " << e.what() << '\n';
        return exit_unsupported;
    } catch (const BudgetExceeded& e) {
        err << "error: budget exceeded: " << e.what() << '\n';
        return exit_budget;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_invalid;
    }
    return code;
}

} // namespace setcirc::cli
