// Desk-scale completeness: the solver's solve_all must equal exhaustive
// enumeration filtered by the independent validator, as exact set equality.
#include <catch2/catch_amalgamated.hpp>

#include "brute_force.hpp"
#include "multiconf/model/compile.hpp"

using namespace multiconf;
using namespace multiconf::testing;

namespace {

AssignmentSet solver_solutions(const QuestionPool& pool, const MultiExamTask& task) {
    auto model = compile(pool, task);
    AssignmentSet out;
    for (const auto& a : solve_all(*model.store)) out.insert(a);
    return out;
}

} // namespace

TEST_CASE("single-constraint micro model agrees with enumeration") {
    QuestionPool pool;
    pool.domains = {2, 1, 1, 1, 1, 1};
    pool.questions = {{1, 1, 1, 1, 1, 1, 1}, {2, 2, 1, 1, 1, 1, 1}, {3, 1, 1, 1, 1, 1, 1}};
    MultiExamTask task;
    task.examCount = 1;
    task.cardMin = 2;
    task.cardMax = 3;
    ConstraintSpec c;
    c.kind = ConstraintSpec::Kind::CountScope;
    c.predicate = Predicate::atom("topic", CmpOp::Eq, 1);
    c.min = 2;
    c.max = 2;
    task.constraints.push_back(c);
    CHECK(solver_solutions(pool, task) == brute_force_solutions(pool, task));
}

TEST_CASE("solve_all equals brute force on 120 random desk-scale tasks") {
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        auto [pool, task] = random_task(seed);
        const auto fromSolver = solver_solutions(pool, task);
        const auto fromOracle = brute_force_solutions(pool, task);
        INFO("seed " << seed << ": solver " << fromSolver.size() << " vs oracle "
                     << fromOracle.size());
        REQUIRE(fromSolver == fromOracle);
        ++checked;
    }
    CHECK(checked == 120);
}

TEST_CASE("unsat models enumerate to the empty set on both routes") {
    QuestionPool pool;
    pool.domains = {1, 1, 1, 1, 1, 1};
    pool.questions = {{1, 1, 1, 1, 1, 1, 1}, {2, 1, 1, 1, 1, 1, 1}};
    MultiExamTask task;
    task.examCount = 2;
    task.cardMin = 2;
    task.cardMax = 2;
    ConstraintSpec c;
    c.kind = ConstraintSpec::Kind::PairwiseOverlap;
    c.max = 1; // both exams must take the full pool, overlap 2
    task.constraints.push_back(c);
    CHECK(solver_solutions(pool, task).empty());
    CHECK(brute_force_solutions(pool, task).empty());
}

TEST_CASE("every Sat assignment passes every propagator's entailment check") {
    for (std::uint64_t seed = 200; seed < 230; ++seed) {
        auto [pool, task] = random_task(seed);
        auto model = compile(pool, task);
        const auto r = solve(*model.store);
        if (r.status != SolveResult::Status::Sat) continue;
        // re-play the assignment into a fresh store and check entailment
        auto fresh = compile(pool, task);
        REQUIRE(fresh.store->propagate_fixpoint());
        bool ok = true;
        for (std::size_t v = 0; v < r.assignment.size() && ok; ++v) {
            for (int e = 1; e <= pool.size() && ok; ++e) {
                const bool want =
                    std::find(r.assignment[v].begin(), r.assignment[v].end(), e) !=
                    r.assignment[v].end();
                if (want && fresh.store->var(static_cast<int>(v)).possible(e))
                    ok = fresh.store->include(static_cast<int>(v), e);
                else if (!want && fresh.store->var(static_cast<int>(v)).possible(e))
                    ok = fresh.store->exclude(static_cast<int>(v), e);
            }
        }
        REQUIRE(ok);
        CHECK(fresh.store->all_entailed());
    }
}
