// Command-line front end: solve, verify, bound, opt, gen, bench, lemma107.
// Exit codes: 0 ok, 2 verification failure, 3 input error, 4 size-limit refusal.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tvc/report.hpp"
#include "tvc/tvc.hpp"

namespace {

constexpr int exit_ok = 0, exit_verify = 2, exit_input = 3, exit_limit = 4;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

tvc::Graph load_graph(const std::string& path) {
    std::istringstream in(slurp(path));
    return tvc::read_edge_list(in);
}

tvc::EarDecomposition load_decomposition(const std::string& path) { return tvc::parse_decomposition(slurp(path)); }

/// Edge list file, or the output edges of a solve report.
std::vector<tvc::Edge> load_subgraph(const std::string& path) {
    const std::string text = slurp(path);
    std::vector<tvc::Edge> out;
    if (text.find_first_not_of(" \t\r\n") != std::string::npos && text[text.find_first_not_of(" \t\r\n")] == '{') {
        const auto j = nlohmann::json::parse(text);
        for (const auto& e : j.at("output").at("edges")) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return out;
    }
    std::istringstream in(text);
    return tvc::read_edge_list(in).edges();
}

/// Writes to --out or stdout.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw InputError("cannot write " + path);
        }
    }
    std::ostream& out() { return file_ ? *file_ : std::cout; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

struct Common {
    std::string backend = "heuristic";
    int oracle_limit = 0;  // 0: per-oracle default
    std::uint64_t seed = 1;
    std::string out;
};

tvc::SolveOptions solve_options(const Common& c) {
    tvc::SolveOptions o;
    o.backend = tvc::parse_backend(c.backend);
    if (c.oracle_limit > 0) o.oracle_limit = c.oracle_limit;
    o.heuristic.seed = c.seed;
    return o;
}

void write_classes(std::ostream& out, const tvc::EdgeClasses& classes) {
    for (const auto& [name, edges] : classes)
        for (const tvc::Edge& e : edges) out << name << ' ' << e.u << ' ' << e.v << '\n';
}

tvc::Instance generate(const std::string& family, int k, int n, int extra, std::uint64_t seed) {
    if (family == "tight") return tvc::gen_tight(k);
    if (family == "vv") return tvc::gen_vv(k);
    if (family == "fig1") return tvc::gen_fig1();
    if (family == "fig8") return tvc::gen_fig8();
    if (family == "random") {
        tvc::Instance inst;
        inst.family = "random";
        inst.graph = tvc::gen_random_2connected(n, extra, seed);
        return inst;
    }
    throw std::invalid_argument("unknown family '" + family + "' (expected tight, vv, fig1, fig8 or random)");
}

std::string csv_rational(const tvc::Rational& r) { return tvc::to_string(r); }

struct BenchRow {
    std::string family, param;
    tvc::SolveReport report;
    std::optional<int> opt, l_d2;
    double ms = 0;
};

void write_bench(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "family,param,n,m,start,output,phi_bound,phi_exact,garg,new,combined,star,ratio_vs_combined,opt,ratio_vs_opt,l_d2,time_ms\n";
    for (const auto& r : rows) {
        const auto& s = r.report;
        out << r.family << ',' << r.param << ',' << s.input.vertex_count() << ',' << s.input.edge_count() << ',' << s.run.e1_source << ','
            << s.output.size() << ',' << s.bounds.phi_bound.value << ',' << (s.bounds.phi_bound.exact ? 1 : 0) << ',' << s.bounds.garg.value
            << ',' << s.bounds.fresh.value << ',' << s.bounds.combined << ',' << csv_rational(s.star) << ','
            << csv_rational(tvc::Rational(static_cast<std::int64_t>(s.output.size()), s.bounds.combined)) << ',';
        if (r.opt)
            out << *r.opt << ',' << csv_rational(tvc::Rational(static_cast<std::int64_t>(s.output.size()), *r.opt));
        else
            out << ',';
        out << ',' << (r.l_d2 ? std::to_string(*r.l_d2) : std::string()) << ',';
        std::ostringstream t;
        t.setf(std::ios::fixed);
        t.precision(3);
        t << r.ms;
        out << t.str() << '\n';
    }
}

int run(int argc, char** argv) {
    CLI::App app{"2-connected spanning subgraphs via ear-decompositions"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--backend", common.backend, "even-ear minimisation backend: exact or heuristic")
            ->check(CLI::IsMember({"exact", "heuristic"}));
        sub->add_option("--oracle-limit", common.oracle_limit, "largest vertex count for exhaustive oracles")->check(CLI::PositiveNumber);
        sub->add_option("--seed", common.seed, "random seed");
        sub->add_option("--out", common.out, "output path (default stdout)");
    };

    std::string graph_path, start_path, sub_path, ed_path;
    std::optional<int> even_ref;
    std::string family;
    int k = 1, k_from = 1, k_to = 1, n = 8, extra = 0, count = 1;
    bool l_d2 = false;
    std::int64_t samples = 1000000;

    auto* solve = app.add_subcommand("solve", "approximate a minimum 2-connected spanning subgraph (JSON report)");
    solve->add_option("graph", graph_path, "edge-list file, - for stdin")->required();
    solve->add_option("--start", start_path, "starting decomposition (graph must have property (P))");
    add_common(solve);

    auto* verify = app.add_subcommand("verify", "independently check a subgraph or a decomposition");
    verify->add_option("graph", graph_path, "edge-list file")->required();
    auto* vs = verify->add_option("--subgraph", sub_path, "edge-list file or solve report");
    auto* vd = verify->add_option("--decomposition", ed_path, "ear-decomposition file");
    verify->add_option("--even-reference", even_ref, "reference even-ear count for (E1)");
    vs->excludes(vd);
    add_common(verify);

    auto* bound = app.add_subcommand("bound", "lower bounds of a graph (JSON)");
    bound->add_option("graph", graph_path, "edge-list file")->required();
    bound->add_option("--start", start_path, "starting decomposition");
    add_common(bound);

    auto* opt = app.add_subcommand("opt", "exact optimum by exhaustive search (small graphs)");
    opt->add_option("graph", graph_path, "edge-list file")->required();
    opt->add_flag("--l-d2", l_d2, "also compute the minimum-degree-2 bound");
    add_common(opt);

    auto* gen = app.add_subcommand("gen", "generate an instance (edge list plus .classes/.ed sidecars)");
    gen->add_option("family", family, "tight, vv, fig1, fig8 or random")->required();
    gen->add_option("--k", k, "family parameter")->check(CLI::PositiveNumber);
    gen->add_option("--n", n, "random: vertex count")->check(CLI::Range(3, 1 << 20));
    gen->add_option("--extra", extra, "random: extra chords")->check(CLI::NonNegativeNumber);
    add_common(gen);

    auto* bench = app.add_subcommand("bench", "solve a family over a parameter range (CSV)");
    bench->add_option("family", family, "tight, vv or random")->required();
    bench->add_option("--from", k_from, "first k")->check(CLI::PositiveNumber);
    bench->add_option("--to", k_to, "last k")->check(CLI::PositiveNumber);
    bench->add_option("--n", n, "random: vertex count")->check(CLI::Range(3, 1 << 20));
    bench->add_option("--extra", extra, "random: extra chords")->check(CLI::NonNegativeNumber);
    bench->add_option("--count", count, "random: instances, seeds seed..seed+count-1")->check(CLI::PositiveNumber);
    add_common(bench);

    auto* lemma = app.add_subcommand("lemma107", "check the 10/7 ratio certificate (JSON)");
    lemma->add_option("--samples", samples, "random feasible points")->check(CLI::PositiveNumber);
    add_common(lemma);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    if (*solve || *bound) {
        const auto g = load_graph(graph_path);
        auto o = solve_options(common);
        if (!start_path.empty()) o.start = load_decomposition(start_path);
        const auto report = tvc::solve(g, o);
        Sink sink(common.out);
        if (*solve) {
            sink.out() << tvc::to_json(report).dump(2) << '\n';
        } else {
            auto j = tvc::to_json(report.bounds);
            j["schema"] = tvc::report_schema;
            j["star"] = tvc::to_string(report.star);
            j["counts"] = tvc::to_json(report.counts);
            sink.out() << j.dump(2) << '\n';
        }
        return exit_ok;
    }
    if (*verify) {
        const auto g = load_graph(graph_path);
        tvc::VerifyResult res;
        if (!sub_path.empty())
            res = tvc::verify_subgraph(g, load_subgraph(sub_path));
        else if (!ed_path.empty())
            res = tvc::verify_decomposition(g, load_decomposition(ed_path), even_ref);
        else
            throw InputError("verify needs --subgraph or --decomposition");
        Sink sink(common.out);
        sink.out() << tvc::to_json(res).dump(2) << '\n';
        return res.ok ? exit_ok : exit_verify;
    }
    if (*opt) {
        const auto g = load_graph(graph_path);
        const int limit = common.oracle_limit > 0 ? common.oracle_limit : tvc::default_opt_limit;
        const auto r = tvc::opt_exact(g, limit);
        nlohmann::json j{{"schema", tvc::report_schema}, {"opt", r.value}, {"witness", tvc::edges_json(r.witness)}};
        if (l_d2) {
            const auto d = tvc::l_d2_exact(g, std::max(limit, 16));
            j["l_d2"] = d.value;
            j["l_d2_witness"] = tvc::edges_json(d.witness);
        }
        Sink sink(common.out);
        sink.out() << j.dump(2) << '\n';
        return exit_ok;
    }
    if (*gen) {
        const auto inst = generate(family, k, n, extra, common.seed);
        Sink sink(common.out);
        tvc::write_edge_list(sink.out(), inst.graph);
        if (!common.out.empty()) {
            if (!inst.classes.empty()) {
                std::ofstream c(common.out + ".classes");
                write_classes(c, inst.classes);
            }
            if (inst.reference) {
                std::ofstream e(common.out + ".ed");
                tvc::write_decomposition(e, *inst.reference);
            }
            if (!inst.opt_witness.empty()) {
                std::ofstream w(common.out + ".opt");
                tvc::write_edge_list(w, tvc::Graph(inst.graph.vertex_count(), inst.opt_witness));
            }
        }
        return exit_ok;
    }
    if (*bench) {
        if (family != "tight" && family != "vv" && family != "random")
            throw std::invalid_argument("bench family must be tight, vv or random");
        const int opt_limit = common.oracle_limit > 0 ? common.oracle_limit : tvc::default_opt_limit;
        std::vector<BenchRow> rows;
        const int first = family == "random" ? 0 : k_from, last = family == "random" ? count - 1 : k_to;
        for (int i = first; i <= last; ++i) {
            BenchRow row;
            row.family = family;
            tvc::Instance inst;
            auto o = solve_options(common);
            if (family == "random") {
                const std::uint64_t s = common.seed + static_cast<std::uint64_t>(i);
                row.param = "n=" + std::to_string(n) + " seed=" + std::to_string(s);
                inst = generate(family, 1, n, extra, s);
            } else {
                row.param = "k=" + std::to_string(i);
                inst = generate(family, i, n, extra, common.seed);
            }
            if (inst.reference) o.start = inst.reference;
            const auto t0 = std::chrono::steady_clock::now();
            row.report = tvc::solve(inst.graph, o);
            row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            if (!inst.opt_witness.empty())
                row.opt = static_cast<int>(inst.opt_witness.size());
            else if (inst.graph.vertex_count() <= opt_limit)
                row.opt = tvc::opt_exact(inst.graph, opt_limit).value;
            if (inst.classes.count("dashed") && family == "vv") row.l_d2 = tvc::l_d2_from_witness(inst.graph, inst.classes.at("dashed"));
            rows.push_back(std::move(row));
        }
        Sink sink(common.out);
        write_bench(sink.out(), rows);
        return exit_ok;
    }
    if (*lemma) {
        const auto r = tvc::verify_lemma107(samples, common.seed);
        Sink sink(common.out);
        sink.out() << tvc::to_json(r).dump(2) << '\n';
        const bool ok = r.dual.feasible && r.above == 0 && r.attainment == tvc::Rational(10, 7);
        return ok ? exit_ok : exit_verify;
    }
    return exit_input;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tvc::SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << '\n';
        return exit_limit;
    } catch (const tvc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_input;
    } catch (const tvc::GraphError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input;
    }
}
