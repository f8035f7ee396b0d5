// examconf: batch front end for the multi-exam configuration engine.
//
// Exit codes: 0 sat / valid, 1 unsat / invalid, 2 timeout, 3 input error.
// Data goes to the output file or stdout; logs and stats go to stderr.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "multiconf/multiconf.hpp"

namespace {

constexpr int kExitSat = 0;
constexpr int kExitUnsatOrInvalid = 1;
constexpr int kExitTimeout = 2;
constexpr int kExitInputError = 3;

struct GenerateArgs {
    std::string poolPath, taskPath, outPath;
    std::uint64_t seed = multiconf::kDefaultSeed;
    long timeoutMs = 300000;
    std::size_t allLimit = 0; // 0 = first solution only
    bool quiet = false;
};

int cmd_generate(const GenerateArgs& a) {
    using namespace multiconf;
    const QuestionPool pool = io::pool_from_json(io::load_json(a.poolPath));
    const MultiExamTask task = io::task_from_json(io::load_json(a.taskPath));

    SearchConfig cfg;
    cfg.seed = a.seed;
    cfg.timeout = std::chrono::milliseconds(a.timeoutMs);

    CompiledModel model = compile(pool, task);

    if (a.allLimit > 0) {
        const auto solutions = solve_all(*model.store, a.allLimit, cfg);
        io::json out = io::json::array();
        for (const auto& assignment : solutions) {
            SolveResult r;
            r.assignment = assignment;
            out.push_back(io::solution_to_json(make_solution(model, r)));
        }
        io::save_json(a.outPath, out);
        if (!a.quiet)
            std::cerr << "solutions: " << solutions.size() << " (limit " << a.allLimit << ")\n";
        return solutions.empty() ? kExitUnsatOrInvalid : kExitSat;
    }

    const SolveResult r = solve(*model.store, cfg);
    if (!a.quiet)
        std::cerr << "status: "
                  << (r.status == SolveResult::Status::Sat      ? "sat"
                      : r.status == SolveResult::Status::Unsat ? "unsat"
                                                               : "timeout")
                  << "  wallMillis: " << r.stats.wallMillis << "  nodes: " << r.stats.nodes
                  << "  backtracks: " << r.stats.backtracks
                  << "  propagations: " << r.stats.propagations << '\n';
    switch (r.status) {
    case multiconf::SolveResult::Status::Sat:
        io::save_json(a.outPath, io::solution_to_json(make_solution(model, r)));
        return kExitSat;
    case multiconf::SolveResult::Status::Unsat: return kExitUnsatOrInvalid;
    case multiconf::SolveResult::Status::Timeout: return kExitTimeout;
    }
    return kExitInputError;
}

int cmd_validate(const std::string& poolPath, const std::string& taskPath,
                 const std::string& solutionPath) {
    using namespace multiconf;
    const QuestionPool pool = io::pool_from_json(io::load_json(poolPath));
    const MultiExamTask task = io::task_from_json(io::load_json(taskPath));
    const Solution sol = io::solution_from_json(io::load_json(solutionPath));
    const ValidationReport report = validate(pool, task, sol);
    if (report.valid()) {
        std::cerr << "valid\n";
        return kExitSat;
    }
    for (const Violation& v : report.violations) {
        std::cout << "violation";
        if (v.constraintIndex >= 0) std::cout << " [constraint " << v.constraintIndex + 1 << "]";
        else std::cout << " [base model]";
        if (!v.exams.empty()) {
            std::cout << " exams";
            for (int e : v.exams) std::cout << ' ' << e;
        }
        std::cout << ": " << v.detail << '\n';
    }
    std::cerr << report.violations.size() << " violation(s)\n";
    return kExitUnsatOrInvalid;
}

std::vector<int> parse_sizes(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-exam configuration engine"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "solve a task and write the solution file");
    generate->add_option("--pool", gen.poolPath, "question pool file")->required();
    generate->add_option("--task", gen.taskPath, "task file")->required();
    generate->add_option("--out", gen.outPath, "solution output file")->required();
    generate->add_option("--seed", gen.seed, "search seed");
    generate->add_option("--timeout", gen.timeoutMs, "timeout in milliseconds");
    generate->add_option("--all", gen.allLimit, "enumerate up to N solutions into a JSON array");
    generate->add_flag("--quiet", gen.quiet, "suppress stats on stderr");

    std::string vPool, vTask, vSolution;
    auto* validateCmd = app.add_subcommand("validate", "check a solution file against pool and task");
    validateCmd->add_option("--pool", vPool)->required();
    validateCmd->add_option("--task", vTask)->required();
    validateCmd->add_option("--solution", vSolution)->required();

    int omega = 45;
    std::uint64_t synthSeed = multiconf::kDefaultSeed;
    std::string synthOut;
    multiconf::PropertyDomains domains;
    auto* synthCmd = app.add_subcommand("synth", "generate a seeded random question pool");
    synthCmd->add_option("--questions", omega, "pool size");
    synthCmd->add_option("--seed", synthSeed);
    synthCmd->add_option("--out", synthOut)->required();
    synthCmd->add_option("--topics", domains.topics);
    synthCmd->add_option("--levels", domains.levels);
    synthCmd->add_option("--max-min-duration", domains.maxMinDuration);
    synthCmd->add_option("--max-max-duration", domains.maxMaxDuration);
    synthCmd->add_option("--types", domains.types);
    synthCmd->add_option("--max-points", domains.maxPoints);

    int taskExams = 1, taskM = 10, rows = 0, seatsPerRow = 0;
    bool noSeating = false;
    std::string taskOut;
    auto* taskCmd = app.add_subcommand("task", "emit the standard 5-constraint task file");
    taskCmd->add_option("--exams", taskExams)->required();
    taskCmd->add_option("--questions-per-exam", taskM);
    taskCmd->add_option("--rows", rows, "explicit hall rows (with --seats-per-row)");
    taskCmd->add_option("--seats-per-row", seatsPerRow);
    taskCmd->add_flag("--no-seating", noSeating, "omit the hall and the overlap constraint");
    taskCmd->add_option("--out", taskOut)->required();

    std::string gridQuestions = "25,50,75,100,150,250,500,750,1000";
    std::string gridExams = "1,5,10,25,50,75,100,250,500,750,1000";
    int runs = 3;
    long benchTimeoutMs = 300000;
    std::string format = "csv", benchOut;
    std::uint64_t benchSeed = multiconf::kDefaultSeed;
    auto* benchCmd = app.add_subcommand("bench", "time the solver over a questions x exams grid");
    benchCmd->add_option("--questions", gridQuestions, "comma-separated pool sizes");
    benchCmd->add_option("--exams", gridExams, "comma-separated exam counts");
    benchCmd->add_option("--runs", runs);
    benchCmd->add_option("--timeout", benchTimeoutMs, "per-cell timeout in milliseconds");
    benchCmd->add_option("--format", format, "csv | markdown | runs-csv");
    benchCmd->add_option("--seed", benchSeed);
    benchCmd->add_option("--out", benchOut, "report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInputError;
    }

    try {
        if (generate->parsed()) return cmd_generate(gen);
        if (validateCmd->parsed()) return cmd_validate(vPool, vTask, vSolution);
        if (synthCmd->parsed()) {
            multiconf::io::save_json(synthOut,
                                     multiconf::io::pool_to_json(
                                         multiconf::synth_pool(omega, synthSeed, domains)));
            return kExitSat;
        }
        if (taskCmd->parsed()) {
            multiconf::SeatingSpec seating{multiconf::SeatingSpec::Mode::Auto, 0, 0};
            if (rows > 0 || seatsPerRow > 0)
                seating = {multiconf::SeatingSpec::Mode::Explicit, rows, seatsPerRow};
            auto task = multiconf::paper_task(taskExams, taskM, seating);
            if (noSeating) {
                task.seating.mode = multiconf::SeatingSpec::Mode::None;
                std::erase_if(task.constraints, [](const multiconf::ConstraintSpec& c) {
                    return c.kind == multiconf::ConstraintSpec::Kind::NeighborOverlap;
                });
            }
            multiconf::io::save_json(taskOut, multiconf::io::task_to_json(task));
            return kExitSat;
        }
        if (benchCmd->parsed()) {
            multiconf::BenchConfig cfg;
            cfg.runs = runs;
            cfg.timeout = std::chrono::milliseconds(benchTimeoutMs);
            cfg.seed = benchSeed;
            const auto grid =
                multiconf::run_grid(parse_sizes(gridQuestions), parse_sizes(gridExams), cfg);
            const std::string report = multiconf::render(grid, format);
            if (benchOut.empty()) {
                std::cout << report;
            } else {
                std::ofstream out(benchOut, std::ios::binary);
                if (!out) throw std::invalid_argument("cannot write " + benchOut);
                out << report;
            }
            return kExitSat;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
