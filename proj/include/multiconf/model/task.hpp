#ifndef MULTICONF_MODEL_TASK_HPP
#define MULTICONF_MODEL_TASK_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "multiconf/core/rational.hpp"
#include "multiconf/model/predicate.hpp"
#include "multiconf/model/question.hpp"
#include "multiconf/seating.hpp"

namespace multiconf {

enum class AggregateFn { Sum, Average, DistinctCount };

/// One constraint of the task. Tagged union; which fields are meaningful
/// depends on the kind.
struct ConstraintSpec {
    enum class Kind {
        ForallQuestions, // every question of every exam satisfies predicate
        CountScope,      // per exam: bounded number of matching questions
        PercentScope,    // per exam: bounded fraction of matching questions
        Aggregate,       // per exam: sum / average / distinct-count of a property
        ExamCount,       // across exams: bounded number of exams with a match
        PairwiseOverlap, // every unordered exam pair: bounded shared questions
        NeighborOverlap, // every seated neighbor pair: bounded shared questions
        StudentScoped    // an intra-exam constraint on exactly one exam
    };

    Kind kind = Kind::ForallQuestions;
    Predicate predicate;                 // Forall / Count / Percent / ExamCount
    std::optional<int> min, max;         // Count / ExamCount / overlaps
    std::optional<Rational> pMin, pMax;  // Percent
    AggregateFn fn = AggregateFn::Sum;   // Aggregate
    std::string property;                // Aggregate
    Rational lo, hi;                     // Aggregate
    int examIndex = 0;                   // StudentScoped, 1-based
    std::shared_ptr<ConstraintSpec> inner; // StudentScoped

    bool intra_exam() const {
        return kind == Kind::ForallQuestions || kind == Kind::CountScope ||
               kind == Kind::PercentScope || kind == Kind::Aggregate;
    }

    void check() const {
        switch (kind) {
        case Kind::CountScope:
        case Kind::ExamCount:
        case Kind::PairwiseOverlap:
        case Kind::NeighborOverlap:
            if (!min && !max) throw std::invalid_argument("constraint needs at least one bound");
            if ((min && *min < 0) || (max && *max < 0))
                throw std::invalid_argument("count bounds must be non-negative");
            if (min && max && *min > *max)
                throw std::invalid_argument("lower bound exceeds upper bound");
            break;
        case Kind::PercentScope: {
            if (!pMin && !pMax) throw std::invalid_argument("constraint needs at least one bound");
            const Rational one{1, 1};
            if ((pMin && !(*pMin <= one)) || (pMax && !(*pMax <= one)))
                throw std::invalid_argument("percentage bounds must lie in [0,1]");
            if (pMin && pMax && !(*pMin <= *pMax))
                throw std::invalid_argument("lower bound exceeds upper bound");
            break;
        }
        case Kind::Aggregate:
            if (!is_property_name(property))
                throw std::invalid_argument("unknown aggregate property: " + property);
            if (!(lo <= hi)) throw std::invalid_argument("lower bound exceeds upper bound");
            break;
        case Kind::StudentScoped:
            if (examIndex < 1) throw std::invalid_argument("student constraint needs an exam index");
            if (!inner || !inner->intra_exam())
                throw std::invalid_argument("student constraint must wrap an intra-exam constraint");
            inner->check();
            break;
        case Kind::ForallQuestions:
            break;
        }
    }
};

/// Seating request: an explicit hall, the square auto rule, or none.
struct SeatingSpec {
    enum class Mode { None, Auto, Explicit };
    Mode mode = Mode::None;
    int rows = 0;
    int seatsPerRow = 0;
};

/// The multi-exam configuration task: how many exams, how many questions per
/// exam, the hall, and all constraints (student constraints included, as
/// StudentScoped entries).
struct MultiExamTask {
    int examCount = 1;
    int cardMin = 1;
    int cardMax = 1;
    SeatingSpec seating;
    std::vector<ConstraintSpec> constraints;

    void check(const QuestionPool& pool) const {
        if (examCount < 1) throw std::invalid_argument("need at least one exam");
        if (cardMin < 0 || cardMin > cardMax)
            throw std::invalid_argument("invalid cardinality interval");
        if (cardMax > pool.size())
            throw std::invalid_argument("cardinality exceeds pool size");
        if (seating.mode == SeatingSpec::Mode::Explicit) {
            if (seating.rows < 1 || seating.seatsPerRow < 1)
                throw std::invalid_argument("empty hall");
            if (static_cast<long long>(seating.rows) * seating.seatsPerRow < examCount)
                throw std::invalid_argument("hall too small for the exam count");
        }
        for (const auto& c : constraints) {
            c.check();
            if (c.kind == ConstraintSpec::Kind::StudentScoped && c.examIndex > examCount)
                throw std::invalid_argument("student constraint references unknown exam");
        }
    }

    /// Builds the chart the task implies, if any.
    std::optional<SeatingChart> build_chart() const {
        switch (seating.mode) {
        case SeatingSpec::Mode::None: return std::nullopt;
        case SeatingSpec::Mode::Auto: return SeatingChart::auto_chart(examCount);
        case SeatingSpec::Mode::Explicit:
            return SeatingChart(seating.rows, seating.seatsPerRow, examCount);
        }
        return std::nullopt;
    }
};

struct ExamResult {
    int index = 0; // 1..n
    std::optional<Seat> seat;
    std::vector<int> questions; // ids ascending
};

struct Solution {
    std::vector<ExamResult> exams;
    std::uint64_t nodes = 0;
    std::uint64_t backtracks = 0;
    std::int64_t wallMillis = 0;
};

} // namespace multiconf

#endif
