#include <catch2/catch_amalgamated.hpp>

#include "brute_force.hpp"
#include "multiconf/io/json.hpp"
#include "multiconf/synth.hpp"

using namespace multiconf;

TEST_CASE("pool files reject unknown fields") {
    auto j = io::pool_to_json(synth_pool(3, 1));
    j["questions"][0]["surprise"] = 1;
    CHECK_THROWS_AS(io::pool_from_json(j), std::invalid_argument);
    auto j2 = io::pool_to_json(synth_pool(3, 1));
    j2["extra"] = true;
    CHECK_THROWS_AS(io::pool_from_json(j2), std::invalid_argument);
}

TEST_CASE("task files reject unknown constraint kinds and fields") {
    auto j = io::task_to_json(paper_task(4, 2));
    j["constraints"][0]["kind"] = "mystery";
    CHECK_THROWS_AS(io::task_from_json(j), std::invalid_argument);
    auto j2 = io::task_to_json(paper_task(4, 2));
    j2["constraints"][1]["weird"] = 0;
    CHECK_THROWS_AS(io::task_from_json(j2), std::invalid_argument);
}

TEST_CASE("a constraint with no bounds at all is rejected") {
    io::json j = {{"kind", "countScope"},
                  {"predicate", {{"kind", "atom"}, {"property", "topic"}, {"op", "="}, {"value", 1}}}};
    CHECK_THROWS_AS(io::constraint_from_json(j), std::invalid_argument);
}

TEST_CASE("percentage bounds parse to exact rationals") {
    io::json j = {{"kind", "percentScope"},
                  {"predicate", {{"kind", "atom"}, {"property", "level"}, {"op", "="}, {"value", 4}}},
                  {"pMin", 0.10},
                  {"pMax", 0.20}};
    const auto c = io::constraint_from_json(j);
    CHECK(*c.pMin == Rational{1, 10});
    CHECK(*c.pMax == Rational{1, 5});
}

TEST_CASE("property-based round-trip: random tasks survive serialization") {
    using multiconf::testing::random_task;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto [pool, task] = random_task(seed);
        const auto pj = io::pool_to_json(pool);
        CHECK(io::pool_to_json(io::pool_from_json(pj)) == pj);
        const auto tj = io::task_to_json(task);
        CHECK(io::task_to_json(io::task_from_json(tj)) == tj);
    }
}

TEST_CASE("solution round-trip preserves exams and seats") {
    Solution sol;
    ExamResult ex;
    ex.index = 1;
    ex.seat = Seat{2, 3};
    ex.questions = {1, 4, 9};
    sol.exams.push_back(ex);
    sol.nodes = 12;
    sol.backtracks = 3;
    const auto j = io::solution_to_json(sol);
    const auto back = io::solution_from_json(j);
    REQUIRE(back.exams.size() == 1);
    CHECK(back.exams[0].questions == std::vector<int>{1, 4, 9});
    CHECK(back.exams[0].seat == Seat{2, 3});
    CHECK(back.nodes == 12);
    CHECK(io::solution_to_json(back) == j);
}

TEST_CASE("student constraints serialize into their own section") {
    MultiExamTask task = paper_task(3, 2);
    ConstraintSpec sc;
    sc.kind = ConstraintSpec::Kind::StudentScoped;
    sc.examIndex = 2;
    sc.inner = std::make_shared<ConstraintSpec>();
    sc.inner->kind = ConstraintSpec::Kind::CountScope;
    sc.inner->predicate = Predicate::atom("topic", CmpOp::Eq, 1);
    sc.inner->max = 1;
    task.constraints.push_back(sc);
    const auto j = io::task_to_json(task);
    REQUIRE(j.at("studentConstraints").size() == 1);
    CHECK(j.at("studentConstraints")[0].at("exam") == 2);
    const auto back = io::task_from_json(j);
    CHECK(back.constraints.size() == task.constraints.size());
    CHECK(back.constraints.back().kind == ConstraintSpec::Kind::StudentScoped);
}

TEST_CASE("missing file raises a diagnosable error") {
    CHECK_THROWS_AS(io::load_json("/nonexistent/never.json"), std::invalid_argument);
}
