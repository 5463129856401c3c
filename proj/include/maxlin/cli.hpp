#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "maxlin/decide.hpp"
#include "maxlin/generate.hpp"
#include "maxlin/io.hpp"
#include "maxlin/sat_decide.hpp"

namespace maxlin::cli {

// Exit codes of every subcommand: 0 yes/success, 1 no, 2 usage or parse
// error, 3 exhaustive-search budget exceeded.
enum ExitCode : int { kYes = 0, kOk = 0, kNo = 1, kUsage = 2, kBudget = 3 };

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
}

inline int report(const Verdict& verdict, std::uint64_t k, double time_ms,
                  const std::string& format, std::ostream& out) {
    ResultDocument doc{verdict, k, time_ms};
    out << serialize_result(doc,
                            format == "text" ? ResultFormat::Text : ResultFormat::Json);
    return verdict.yes ? kYes : kNo;
}

inline Strategy strategy_from_string(const std::string& s) {
    if (s == "theorem1") return Strategy::Theorem1;
    if (s == "theorem2") return Strategy::Theorem2;
    if (s == "brute") return Strategy::Brute;
    return Strategy::Auto;
}

inline std::vector<std::string> var_map_comments(const std::vector<std::uint32_t>& map,
                                                 const std::string& from_prefix) {
    std::vector<std::string> comments;
    comments.reserve(map.size());
    for (std::size_t i = 0; i < map.size(); ++i)
        comments.push_back("var " + std::to_string(i + 1) + " <- " + from_prefix +
                           std::to_string(map[i] + 1));
    return comments;
}

struct BenchJob {
    std::string kind;  // "lin" or "cnf"
    std::size_t n = 0, m = 0, r = 2;
    Weight weight_max = 1;
    bool reduce = false;
    std::uint64_t seed_start = 0;
    std::uint64_t seed_count = 1;
    std::vector<std::size_t> k_values;
};

inline std::vector<BenchJob> parse_bench_spec(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("bench spec: ") + e.what());
    }
    std::vector<BenchJob> jobs;
    try {
        for (const auto& job : j.at("jobs")) {
            BenchJob b;
            b.kind = job.at("kind").get<std::string>();
            if (b.kind != "lin" && b.kind != "cnf")
                throw Error("bench spec: kind must be lin or cnf");
            b.n = job.at("n").get<std::size_t>();
            b.m = job.at("m").get<std::size_t>();
            b.r = b.kind == "lin" ? job.value("r_max", std::size_t{2})
                                  : job.at("r").get<std::size_t>();
            b.weight_max = job.value("weight_max", Weight{1});
            b.reduce = job.value("reduce", false);
            b.seed_start = job.value("seed_start", std::uint64_t{0});
            b.seed_count = job.at("seed_count").get<std::uint64_t>();
            b.k_values = job.at("k_values").get<std::vector<std::size_t>>();
            if (b.k_values.empty()) throw Error("bench spec: k_values must be nonempty");
            jobs.push_back(std::move(b));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("bench spec: ") + e.what());
    }
    return jobs;
}

// One CSV row per (instance, k): the two mark guarantees next to the marks
// each pivot rule actually achieves, plus the decided answer.
inline void run_bench(const std::vector<BenchJob>& jobs, std::size_t budget,
                      std::ostream& out) {
    out << "kind,seed,k,n_vars,n_equations,max_eq_size,max_occurrence,"
           "width_guarantee,occurrence_guarantee,marks_min_occurrence,"
           "marks_first_available,answer,strategy\n";
    for (const BenchJob& job : jobs) {
        for (std::uint64_t s = 0; s < job.seed_count; ++s) {
            const std::uint64_t seed = job.seed_start + s;
            LinearSystem prepared;
            CnfFormula formula;
            if (job.kind == "lin") {
                LinGenConfig cfg{job.n, job.m, job.r, job.weight_max, seed, job.reduce};
                LinearSystem instance = gen_lin(cfg);
                prepared = compact_variables(apply_rule2(instance)).system;
            } else {
                CnfGenConfig cfg{job.n, job.m, job.r, seed};
                formula = gen_cnf(cfg);
                prepared = poly_to_system(formula_polynomial(formula)).system;
            }
            for (std::size_t k : job.k_values) {
                MarkTrace min_occ = run_marking(prepared, k, PivotRule::MinOccurrence);
                MarkTrace first_av = run_marking(prepared, k, PivotRule::FirstAvailable);
                Verdict verdict =
                    job.kind == "lin"
                        ? decide(prepared, k, Strategy::Auto, budget)
                        : decide_max_r_sat_aa(formula, k, budget);
                out << job.kind << "," << seed << "," << k << "," << prepared.n_vars()
                    << "," << prepared.size() << "," << prepared.max_equation_size() << ","
                    << max_occurrence(prepared) << ","
                    << (min_occurrence_guarantee(prepared.n_vars(),
                                                 prepared.max_equation_size(), k)
                            ? 1
                            : 0)
                    << ","
                    << (first_available_guarantee(prepared.size(),
                                                  max_occurrence(prepared), k)
                            ? 1
                            : 0)
                    << "," << min_occ.marks.size() << "," << first_av.marks.size() << ","
                    << (verdict.yes ? "yes" : "no") << "," << to_string(verdict.decided_by)
                    << "\n";
            }
        }
    }
}

}  // namespace detail

// Command dispatch. `args` excludes the program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted GF(2) linear systems above the average-weight baseline"};
    app.name("maxlin");
    app.require_subcommand(1);

    std::uint64_t k = 0;
    std::size_t budget = kDefaultVarBudget;
    std::string strategy = "auto";
    std::string format = "json";
    std::string input_path;
    std::string spec_path;

    CLI::App* solve = app.add_subcommand("solve", "Decide excess2 >= k for a .lin system");
    solve->add_option("--k", k, "Excess target")->required();
    solve->add_option("--strategy", strategy, "Decision strategy")
        ->check(CLI::IsMember({"auto", "theorem1", "theorem2", "brute"}));
    solve->add_option("--budget", budget, "Exhaustive-search variable budget");
    solve->add_option("--format", format, "Result format")
        ->check(CLI::IsMember({"json", "text"}));
    solve->add_option("file", input_path, "Input .lin file")->required();

    CLI::App* reduce =
        app.add_subcommand("reduce", "Apply both reduction rules to fixpoint");
    reduce->add_option("file", input_path, "Input .lin file")->required();

    CLI::App* sat2lin =
        app.add_subcommand("sat2lin", "Convert DIMACS CNF to the derived .lin system");
    sat2lin->add_option("file", input_path, "Input .cnf file")->required();

    CLI::App* satsolve = app.add_subcommand(
        "satsolve", "Decide sat_count >= E + k/2^r for a DIMACS CNF formula");
    satsolve->add_option("--k", k, "Excess target")->required();
    satsolve->add_option("--budget", budget, "Exhaustive-search variable budget");
    satsolve->add_option("--format", format, "Result format")
        ->check(CLI::IsMember({"json", "text"}));
    satsolve->add_option("file", input_path, "Input .cnf file")->required();

    CLI::App* gen = app.add_subcommand("gen", "Generate seeded random instances");
    gen->require_subcommand(1);
    LinGenConfig lin_cfg;
    CnfGenConfig cnf_cfg;
    CLI::App* gen_lin_cmd = gen->add_subcommand("lin", "Random weighted GF(2) system");
    gen_lin_cmd->add_option("--n", lin_cfg.n, "Variables")->required();
    gen_lin_cmd->add_option("--m", lin_cfg.m, "Equations")->required();
    gen_lin_cmd->add_option("--r", lin_cfg.r_max, "Max equation size")->required();
    gen_lin_cmd->add_option("--seed", lin_cfg.seed, "Seed")->required();
    gen_lin_cmd->add_option("--wmax", lin_cfg.weight_max, "Max weight (default 1)");
    gen_lin_cmd->add_flag("--reduce", lin_cfg.reduce, "Apply both rules to fixpoint");
    CLI::App* gen_cnf_cmd = gen->add_subcommand("cnf", "Random uniform-width formula");
    gen_cnf_cmd->add_option("--n", cnf_cfg.n, "Variables")->required();
    gen_cnf_cmd->add_option("--m", cnf_cfg.m, "Clauses")->required();
    gen_cnf_cmd->add_option("--r", cnf_cfg.r, "Clause width")->required();
    gen_cnf_cmd->add_option("--seed", cnf_cfg.seed, "Seed")->required();

    CLI::App* bench = app.add_subcommand("bench", "Campaign over generated instances, CSV");
    bench->add_option("--spec", spec_path, "Bench spec json file")->required();
    bench->add_option("--budget", budget, "Exhaustive-search variable budget");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        const CLI::App* active = &app;
        while (!active->get_subcommands().empty()) active = active->get_subcommands().front();
        out << active->help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (solve->parsed()) {
            LinearSystem system = parse_lin(detail::read_file(input_path));
            auto start = std::chrono::steady_clock::now();
            Verdict verdict =
                decide(system, k, detail::strategy_from_string(strategy), budget);
            return detail::report(verdict, k, detail::elapsed_ms(start), format, out);
        }
        if (reduce->parsed()) {
            LinearSystem system = parse_lin(detail::read_file(input_path));
            ReducedSystem reduced = reduce_to_fixpoint(system);
            out << serialize_lin(reduced.system,
                                 detail::var_map_comments(reduced.var_map, ""));
            return kOk;
        }
        if (sat2lin->parsed()) {
            CnfFormula f = parse_dimacs(detail::read_file(input_path));
            PolySystem ps = poly_to_system(formula_polynomial(f));
            out << serialize_lin(ps.system, detail::var_map_comments(ps.vars, "x"));
            return kOk;
        }
        if (satsolve->parsed()) {
            CnfFormula f = parse_dimacs(detail::read_file(input_path));
            auto start = std::chrono::steady_clock::now();
            Verdict verdict = decide_max_r_sat_aa(f, k, budget);
            return detail::report(verdict, k, detail::elapsed_ms(start), format, out);
        }
        if (gen->parsed()) {
            if (gen_lin_cmd->parsed())
                out << serialize_lin(gen_lin(lin_cfg));
            else
                out << serialize_dimacs(gen_cnf(cnf_cfg));
            return kOk;
        }
        if (bench->parsed()) {
            detail::run_bench(detail::parse_bench_spec(detail::read_file(spec_path)),
                              budget, out);
            return kOk;
        }
    } catch (const BudgetExceededError& e) {
        err << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const ParseError& e) {
        err << input_path << ":" << e.line << ": " << e.detail << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    err << "error: no subcommand\n";
    return kUsage;
}

}  // namespace maxlin::cli
