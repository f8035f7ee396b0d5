#include <catch2/catch_amalgamated.hpp>

#include "multiconf/io/json.hpp"
#include "multiconf/synth.hpp"

using namespace multiconf;

TEST_CASE("synth_pool matches the requested shape") {
    const auto pool = synth_pool(45, kDefaultSeed);
    CHECK(pool.size() == 45);
    CHECK(pool.domains.topics == 4);
    CHECK_NOTHROW(pool.check());
    for (const auto& q : pool.questions) {
        CHECK(q.points >= 2);
        CHECK(q.points <= 6);
        CHECK(q.minDuration <= q.maxDuration);
    }
}

TEST_CASE("degenerate domains give identical-property questions") {
    PropertyDomains d{1, 1, 1, 1, 1, 1};
    const auto pool = synth_pool(3, 7, d);
    for (const auto& q : pool.questions) {
        CHECK(q.topic == 1);
        CHECK(q.level == 1);
        CHECK(q.points == 1);
    }
}

TEST_CASE("same size and seed give byte-identical pool files") {
    const auto a = io::pool_to_json(synth_pool(45, 99)).dump(2);
    const auto b = io::pool_to_json(synth_pool(45, 99)).dump(2);
    CHECK(a == b);
    const auto c = io::pool_to_json(synth_pool(45, 100)).dump(2);
    CHECK(a != c);
}

TEST_CASE("zero domain bounds are rejected") {
    PropertyDomains d;
    d.topics = 0;
    CHECK_THROWS_AS(synth_pool(3, 1, d), std::invalid_argument);
    CHECK_THROWS_AS(synth_pool(0, 1), std::invalid_argument);
}

TEST_CASE("paper_task emits exactly the five standard constraints") {
    const auto task = paper_task(450, 10, {SeatingSpec::Mode::Explicit, 22, 21});
    CHECK(task.examCount == 450);
    CHECK(task.cardMin == 10);
    CHECK(task.cardMax == 10);
    REQUIRE(task.constraints.size() == 5);
    CHECK(task.constraints[0].kind == ConstraintSpec::Kind::Aggregate);
    CHECK(task.constraints[0].fn == AggregateFn::DistinctCount);
    CHECK(task.constraints[0].lo == Rational{2, 1});
    CHECK(task.constraints[1].kind == ConstraintSpec::Kind::CountScope);
    CHECK(task.constraints[1].max == 1);
    CHECK(task.constraints[2].kind == ConstraintSpec::Kind::PercentScope);
    CHECK(*task.constraints[2].pMin == Rational{1, 10});
    CHECK(*task.constraints[2].pMax == Rational{1, 5});
    CHECK(task.constraints[3].fn == AggregateFn::Sum);
    CHECK(task.constraints[3].lo == Rational{40, 1});
    CHECK(task.constraints[4].kind == ConstraintSpec::Kind::NeighborOverlap);
    CHECK(task.constraints[4].max == 2);
}

TEST_CASE("auto seating builds the square hall") {
    const auto task = paper_task(100, 10);
    const auto chart = task.build_chart();
    REQUIRE(chart);
    CHECK(chart->rows() == 10);
    CHECK(chart->seats_per_row() == 10);
}

TEST_CASE("single exam: the overlap constraint is vacuous") {
    const auto task = paper_task(1, 10);
    const auto chart = task.build_chart();
    REQUIRE(chart);
    CHECK(chart->rows() == 1);
    CHECK(chart->neighbor_pairs().empty());
}

TEST_CASE("paper_task round-trips through serialization unchanged") {
    const auto task = paper_task(450, 10, {SeatingSpec::Mode::Explicit, 22, 21});
    const auto j = io::task_to_json(task);
    const auto back = io::task_from_json(j);
    CHECK(io::task_to_json(back) == j);
}
