#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "multiconf/bench.hpp"

using namespace multiconf;

TEST_CASE("single micro cell solves sat quickly") {
    BenchConfig cfg;
    cfg.runs = 1;
    cfg.timeout = std::chrono::milliseconds(10000);
    const auto grid = run_grid({25}, {1}, cfg);
    REQUIRE(grid.cells.size() == 1);
    CHECK(grid.cells[0].outcome == CellOutcome::Sat);
    CHECK(grid.cells[0].meanMillis < 1000.0);
}

TEST_CASE("mean equals the arithmetic mean of the recorded runs") {
    BenchConfig cfg;
    cfg.runs = 3;
    const auto grid = run_grid({25}, {2}, cfg);
    const auto& c = grid.cells[0];
    REQUIRE(c.runMillis.size() == 3);
    double sum = 0;
    for (double t : c.runMillis) sum += t;
    CHECK(c.meanMillis == Catch::Approx(sum / 3.0));
}

TEST_CASE("csv renders raw milliseconds and parses back") {
    GridResult grid;
    grid.questionSizes = {25};
    grid.examSizes = {1};
    GridCell cell;
    cell.questions = 25;
    cell.exams = 1;
    cell.runMillis = {14.33};
    cell.meanMillis = 14.33;
    grid.cells.push_back(cell);
    const std::string csv = render(grid, "csv");
    std::istringstream in(csv);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header == "questions,exams,meanMillis,outcome");
    CHECK(row == "25,1,14.33,sat");
}

TEST_CASE("markdown humanizes units like the runtime table") {
    GridResult grid;
    grid.questionSizes = {25, 1000};
    grid.examSizes = {1, 1000};
    grid.timeout = std::chrono::milliseconds(300000);
    auto cell = [](int q, int n, double mean, CellOutcome o) {
        GridCell c;
        c.questions = q;
        c.exams = n;
        c.meanMillis = mean;
        c.runMillis = {mean};
        c.outcome = o;
        return c;
    };
    grid.cells = {cell(25, 1, 14.33, CellOutcome::Sat),
                  cell(25, 1000, 10100.0, CellOutcome::Sat),
                  cell(1000, 1, 160200.0, CellOutcome::Sat),
                  cell(1000, 1000, 0.0, CellOutcome::Timeout)};
    const std::string md = render(grid, "markdown");
    CHECK(md.find(" 14.33 ") != std::string::npos);
    CHECK(md.find("10.10s") != std::string::npos);
    CHECK(md.find("2.67m") != std::string::npos);
    CHECK(md.find(">300s") != std::string::npos);
}

TEST_CASE("per-run csv has one row per measurement") {
    BenchConfig cfg;
    cfg.runs = 2;
    const auto grid = run_grid({25}, {1}, cfg);
    const std::string csv = render(grid, "runs-csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3); // header + 2 runs
}

TEST_CASE("timeout is recorded in the cell, not thrown") {
    BenchConfig cfg;
    cfg.runs = 1;
    cfg.timeout = std::chrono::milliseconds(1);
    const auto grid = run_grid({100}, {100}, cfg);
    REQUIRE(grid.cells.size() == 1);
    // 1 ms is not enough to place 100 exams; expect a timeout outcome
    CHECK(grid.cells[0].outcome == CellOutcome::Timeout);
}

TEST_CASE("neighbor-overlap budget is clamped only for undersized pools") {
    auto budget = [](const MultiExamTask& t) {
        for (const auto& c : t.constraints)
            if (c.kind == ConstraintSpec::Kind::NeighborOverlap) return *c.max;
        return -1;
    };
    // omega = 25, m = 10: a full 2x2 block needs total overlap >= 15 across
    // 6 pairs, so a per-pair budget of 2 is infeasible; the clamp lifts it to 3
    CHECK(budget(detail::grid_task(25, 100, 10)) == 3);
    // omega >= 4m - 12 keeps the template budget
    CHECK(budget(detail::grid_task(28, 100, 10)) == 2);
    CHECK(budget(detail::grid_task(50, 100, 10)) == 2);
    CHECK(budget(detail::grid_task(100, 100, 10)) == 2);
}

TEST_CASE("the small-pool grid cells are satisfiable under the clamped budget") {
    BenchConfig cfg;
    cfg.runs = 1;
    cfg.timeout = std::chrono::milliseconds(30000);
    const auto grid = run_grid({25}, {10, 100}, cfg);
    for (const auto& c : grid.cells) CHECK(c.outcome == CellOutcome::Sat);
}

TEST_CASE("empty axes are rejected") {
    CHECK_THROWS_AS(run_grid({}, {1}), std::invalid_argument);
    BenchConfig cfg;
    cfg.runs = 0;
    CHECK_THROWS_AS(run_grid({3}, {1}, cfg), std::invalid_argument);
}
