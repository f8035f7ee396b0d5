#ifndef MULTICONF_BENCH_HPP
#define MULTICONF_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "multiconf/model/compile.hpp"
#include "multiconf/synth.hpp"

namespace multiconf {

enum class CellOutcome { Sat, Unsat, Timeout };

struct GridCell {
    int questions = 0;
    int exams = 0;
    std::vector<double> runMillis; // one entry per run
    double meanMillis = 0.0;
    CellOutcome outcome = CellOutcome::Sat;
};

struct GridResult {
    std::vector<int> questionSizes; // row labels
    std::vector<int> examSizes;     // column labels
    std::vector<GridCell> cells;    // row-major
    std::chrono::milliseconds timeout{300000};

    const GridCell& cell(int qi, int ei) const {
        return cells[static_cast<std::size_t>(qi) * examSizes.size() + ei];
    }
};

struct BenchConfig {
    int runs = 3;
    int questionsPerExam = 10;
    std::chrono::milliseconds timeout{300000};
    std::uint64_t seed = kDefaultSeed;
};

namespace detail {

/// The benchmark task for one (omega, n) cell. Starts from the standard
/// 5-constraint template and then clamps the neighbor-overlap budget to the
/// smallest provably feasible value when the pool is too small for it.
///
/// Any 2x2 block of seats is a 4-clique under the Moore neighborhood. Four
/// m-subsets of an omega-element pool have total pairwise overlap at least
/// max(0, 4m - omega) (double counting: sum_q C(c_q, 2) is minimized by
/// spreading the 4m memberships as evenly as possible), spread across 6
/// constrained pairs. A per-pair budget b is therefore only achievable when
/// 6b >= 4m - omega; for omega < 4m - 12 the template's budget of 2 admits
/// no solution at all, so the cell would measure refutation, not search.
inline MultiExamTask grid_task(int omega, int n, int m) {
    MultiExamTask task = paper_task(n, m);
    const int minTotal = 4 * m - omega;
    const int budget = std::max(2, (minTotal + 5) / 6); // ceil(minTotal / 6)
    for (ConstraintSpec& c : task.constraints)
        if (c.kind == ConstraintSpec::Kind::NeighborOverlap && *c.max < budget) c.max = budget;
    return task;
}

} // namespace detail

/// Runs the standard 5-constraint task over the (questions x exams) grid.
/// Timing covers compile + solve with a fresh store per run; pool synthesis
/// is outside the clock. Cells run sequentially so timings do not interfere.
/// A timeout is recorded in the cell, never aborts the grid.
inline GridResult run_grid(const std::vector<int>& questionSizes,
                           const std::vector<int>& examSizes, const BenchConfig& cfg = {}) {
    if (questionSizes.empty() || examSizes.empty())
        throw std::invalid_argument("grid axes must be non-empty");
    if (cfg.runs < 1) throw std::invalid_argument("need at least one run per cell");

    GridResult grid;
    grid.questionSizes = questionSizes;
    grid.examSizes = examSizes;
    grid.timeout = cfg.timeout;

    for (int omega : questionSizes) {
        const QuestionPool pool = synth_pool(omega, cfg.seed);
        for (int n : examSizes) {
            GridCell cell;
            cell.questions = omega;
            cell.exams = n;
            const MultiExamTask task = detail::grid_task(omega, n, cfg.questionsPerExam);
            for (int run = 0; run < cfg.runs; ++run) {
                SearchConfig sc;
                sc.timeout = cfg.timeout;
                sc.seed = cfg.seed;
                const auto t0 = std::chrono::steady_clock::now();
                CompiledModel model = compile(pool, task);
                const SolveResult r = solve(*model.store, sc);
                const auto dt = std::chrono::duration<double, std::milli>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count();
                cell.runMillis.push_back(dt);
                switch (r.status) {
                case SolveResult::Status::Sat: cell.outcome = CellOutcome::Sat; break;
                case SolveResult::Status::Unsat: cell.outcome = CellOutcome::Unsat; break;
                case SolveResult::Status::Timeout: cell.outcome = CellOutcome::Timeout; break;
                }
                if (cell.outcome == CellOutcome::Timeout) break;
            }
            double sum = 0.0;
            for (double t : cell.runMillis) sum += t;
            cell.meanMillis = sum / static_cast<double>(cell.runMillis.size());
            grid.cells.push_back(std::move(cell));
        }
    }
    return grid;
}

namespace detail {

inline const char* outcome_name(CellOutcome o) {
    switch (o) {
    case CellOutcome::Sat: return "sat";
    case CellOutcome::Unsat: return "unsat";
    case CellOutcome::Timeout: return "timeout";
    }
    return "sat";
}

inline std::string fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

/// Milliseconds below one second, then seconds, then minutes; timeouts as
/// ">Ts" for the configured per-cell budget.
inline std::string humanize(const GridCell& c, std::chrono::milliseconds timeout) {
    if (c.outcome == CellOutcome::Timeout)
        return ">" + std::to_string(timeout.count() / 1000) + "s";
    if (c.outcome == CellOutcome::Unsat) return "unsat";
    if (c.meanMillis < 1000.0) return fixed2(c.meanMillis);
    if (c.meanMillis < 60000.0) return fixed2(c.meanMillis / 1000.0) + "s";
    return fixed2(c.meanMillis / 60000.0) + "m";
}

} // namespace detail

/// Summary CSV: one row per cell, raw milliseconds.
inline std::string render_csv(const GridResult& grid) {
    std::ostringstream out;
    out << "questions,exams,meanMillis,outcome\n";
    for (const GridCell& c : grid.cells)
        out << c.questions << ',' << c.exams << ',' << detail::fixed2(c.meanMillis) << ','
            << detail::outcome_name(c.outcome) << '\n';
    return out.str();
}

/// Per-run CSV: one row per measurement.
inline std::string render_runs_csv(const GridResult& grid) {
    std::ostringstream out;
    out << "questions,exams,run,wallMillis,outcome\n";
    for (const GridCell& c : grid.cells)
        for (std::size_t r = 0; r < c.runMillis.size(); ++r)
            out << c.questions << ',' << c.exams << ',' << (r + 1) << ','
                << detail::fixed2(c.runMillis[r]) << ',' << detail::outcome_name(c.outcome)
                << '\n';
    return out.str();
}

/// Markdown table, questions down, exams across, humanized units.
inline std::string render_markdown(const GridResult& grid) {
    std::ostringstream out;
    out << "| questions \\ exams |";
    for (int n : grid.examSizes) out << ' ' << n << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < grid.examSizes.size(); ++i) out << "---|";
    out << '\n';
    for (std::size_t qi = 0; qi < grid.questionSizes.size(); ++qi) {
        out << "| " << grid.questionSizes[qi] << " |";
        for (std::size_t ei = 0; ei < grid.examSizes.size(); ++ei)
            out << ' '
                << detail::humanize(grid.cell(static_cast<int>(qi), static_cast<int>(ei)),
                                    grid.timeout)
                << " |";
        out << '\n';
    }
    return out.str();
}

inline std::string render(const GridResult& grid, const std::string& format) {
    if (format == "csv") return render_csv(grid);
    if (format == "markdown") return render_markdown(grid);
    if (format == "runs-csv") return render_runs_csv(grid);
    throw std::invalid_argument("unknown report format \"" + format + "\"");
}

} // namespace multiconf

#endif
