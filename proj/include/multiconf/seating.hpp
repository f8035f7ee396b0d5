#ifndef MULTICONF_SEATING_HPP
#define MULTICONF_SEATING_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace multiconf {

struct Seat {
    int row = 0;  // 1-based, top to bottom
    int seat = 0; // 1-based, left to right
    bool operator==(const Seat&) const = default;
};

/// Lecture-hall grid with an exam -> seat assignment. Adjacency is the
/// 8-cell Moore neighborhood, diagonals included. Immutable after build.
class SeatingChart {
public:
    SeatingChart(int rows, int seatsPerRow, int examCount)
        : rows_(rows), seatsPerRow_(seatsPerRow) {
        if (rows < 1 || seatsPerRow < 1) throw std::invalid_argument("empty hall");
        if (static_cast<long long>(rows) * seatsPerRow < examCount)
            throw std::invalid_argument("hall too small for the exam count");
        // exams fill seats row-major by index
        occupant_.assign(rows + 1, std::vector<int>(seatsPerRow + 1, 0));
        seats_.resize(examCount + 1);
        for (int i = 1; i <= examCount; ++i) {
            const int r = 1 + (i - 1) / seatsPerRow;
            const int c = 1 + (i - 1) % seatsPerRow;
            occupant_[r][c] = i;
            seats_[i] = {r, c};
        }
    }

    /// Square chart sized ceil(sqrt(n)) x ceil(sqrt(n)).
    static SeatingChart auto_chart(int examCount) {
        if (examCount < 1) throw std::invalid_argument("need at least one exam");
        int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(examCount))));
        while (side * side < examCount) ++side;
        return SeatingChart(side, side, examCount);
    }

    int rows() const { return rows_; }
    int seats_per_row() const { return seatsPerRow_; }
    int exam_count() const { return static_cast<int>(seats_.size()) - 1; }
    Seat seat_of(int exam) const {
        check_exam(exam);
        return seats_[exam];
    }

    /// Occupied Moore neighbors of an exam's seat, ascending exam indices.
    std::vector<int> neighbors(int exam) const {
        check_exam(exam);
        const Seat s = seats_[exam];
        std::vector<int> out;
        for (int dr = -1; dr <= 1; ++dr)
            for (int dc = -1; dc <= 1; ++dc) {
                if (dr == 0 && dc == 0) continue;
                const int r = s.row + dr, c = s.seat + dc;
                if (r < 1 || r > rows_ || c < 1 || c > seatsPerRow_) continue;
                if (occupant_[r][c] != 0) out.push_back(occupant_[r][c]);
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Every adjacent occupied pair exactly once, lexicographically ascending.
    std::vector<std::pair<int, int>> neighbor_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 1; i <= exam_count(); ++i)
            for (int j : neighbors(i))
                if (i < j) out.emplace_back(i, j);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void check_exam(int exam) const {
        if (exam < 1 || exam > exam_count()) throw std::out_of_range("unknown exam index");
    }

    int rows_, seatsPerRow_;
    std::vector<std::vector<int>> occupant_;
    std::vector<Seat> seats_;
};

} // namespace multiconf

#endif
