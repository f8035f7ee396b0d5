#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "multiconf/seating.hpp"

using namespace multiconf;

TEST_CASE("auto chart sizes are ceil(sqrt(n)) squares") {
    const auto c10 = SeatingChart::auto_chart(10);
    CHECK(c10.rows() == 4);
    CHECK(c10.seats_per_row() == 4);
    const auto c1 = SeatingChart::auto_chart(1);
    CHECK(c1.rows() == 1);
    CHECK(c1.seat_of(1) == Seat{1, 1});
    const auto c450 = SeatingChart::auto_chart(450);
    CHECK(c450.rows() == 22);
    CHECK(c450.seats_per_row() == 22);
    const auto c100 = SeatingChart::auto_chart(100);
    CHECK(c100.rows() == 10);
}

TEST_CASE("row-major assignment is a bijection onto the first n seats") {
    const SeatingChart c(3, 4, 7);
    std::set<std::pair<int, int>> seats;
    for (int i = 1; i <= 7; ++i) {
        const Seat s = c.seat_of(i);
        CHECK(seats.insert({s.row, s.seat}).second);
        CHECK((s.row - 1) * 4 + s.seat == i);
    }
}

TEST_CASE("full 5x8 hall: interior 8 neighbors, edges 5, corners 3") {
    const SeatingChart c(5, 8, 40);
    // seat (3,4) is exam (3-1)*8+4 = 20
    CHECK(c.neighbors(20).size() == 8);
    CHECK(c.neighbors(1).size() == 3);           // corner (1,1)
    CHECK(c.neighbors(4).size() == 5);           // top edge (1,4)
    CHECK(c.neighbors(40).size() == 3);          // corner (5,8)
    CHECK(c.neighbors(17).size() == 5);          // left edge (3,1)
}

TEST_CASE("adjacency is symmetric and irreflexive") {
    const SeatingChart c(4, 4, 13); // partially filled last row
    for (int i = 1; i <= 13; ++i)
        for (int j : c.neighbors(i)) {
            CHECK(j != i);
            const auto back = c.neighbors(j);
            CHECK(std::find(back.begin(), back.end(), i) != back.end());
        }
}

TEST_CASE("neighbor pairs: each adjacent occupied pair exactly once") {
    const SeatingChart tiny(1, 2, 2);
    CHECK(tiny.neighbor_pairs() == std::vector<std::pair<int, int>>{{1, 2}});

    const SeatingChart square(2, 2, 4);
    CHECK(square.neighbor_pairs().size() == 6); // complete graph on 4 seats

    // 5x8 full hall: sum of degrees / 2 from direct adjacency counting
    const SeatingChart hall(5, 8, 40);
    std::size_t degreeSum = 0;
    for (int i = 1; i <= 40; ++i) degreeSum += hall.neighbors(i).size();
    const auto pairs = hall.neighbor_pairs();
    CHECK(pairs.size() == degreeSum / 2);
    const std::set<std::pair<int, int>> dedup(pairs.begin(), pairs.end());
    CHECK(dedup.size() == pairs.size());
}

TEST_CASE("unoccupied seats yield no pairs") {
    const SeatingChart c(2, 2, 1);
    CHECK(c.neighbors(1).empty());
    CHECK(c.neighbor_pairs().empty());
}

TEST_CASE("unknown exam index is a domain error") {
    const SeatingChart c(2, 2, 2);
    CHECK_THROWS_AS(c.neighbors(3), std::out_of_range);
}

TEST_CASE("hall too small for the exam count is rejected") {
    CHECK_THROWS_AS(SeatingChart(2, 2, 5), std::invalid_argument);
}
