#ifndef MULTICONF_SYNTH_HPP
#define MULTICONF_SYNTH_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

#include "multiconf/model/task.hpp"

namespace multiconf {

/// Default pool seed. Picked so that the shipped 45-question scenario under
/// the standard 5-constraint task is satisfiable quickly.
inline constexpr std::uint64_t kDefaultSeed = 20230906;

namespace detail {

/// Seeded uniform integers with engine-independent draws (plain modulo of the
/// raw 64-bit stream, so output files are stable across standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 engine_;
};

} // namespace detail

/// Deterministic random pool: topic, level, type uniform over their domains;
/// min-duration uniform, max-duration uniform above it; points uniform over
/// {2..maxPoints} so that fixed-sum constraints stay satisfiable.
inline QuestionPool synth_pool(int omega, std::uint64_t seed,
                               const PropertyDomains& domains = {}) {
    if (omega < 1) throw std::invalid_argument("pool size must be at least 1");
    if (domains.topics < 1 || domains.levels < 1 || domains.maxMinDuration < 1 ||
        domains.maxMaxDuration < domains.maxMinDuration || domains.types < 1 ||
        domains.maxPoints < 1)
        throw std::invalid_argument("invalid property domains");

    detail::Rng rng(seed);
    QuestionPool pool;
    pool.domains = domains;
    for (int id = 1; id <= omega; ++id) {
        Question q;
        q.id = id;
        q.topic = rng.uniform(1, domains.topics);
        q.level = rng.uniform(1, domains.levels);
        q.minDuration = rng.uniform(1, domains.maxMinDuration);
        q.maxDuration = rng.uniform(q.minDuration, domains.maxMaxDuration);
        q.qtype = rng.uniform(1, domains.types);
        q.points = rng.uniform(std::min(2, domains.maxPoints), domains.maxPoints);
        pool.questions.push_back(q);
    }
    pool.check();
    return pool;
}

/// The standard 5-constraint task: at least 2 distinct topics, at most one
/// type-3 question, 10-20% of questions at level 4, 40 points in total, and
/// neighboring exams sharing at most 2 questions.
inline MultiExamTask paper_task(int examCount, int questionsPerExam,
                                SeatingSpec seating = {SeatingSpec::Mode::Auto, 0, 0}) {
    if (examCount < 1 || questionsPerExam < 1)
        throw std::invalid_argument("exam count and exam size must be at least 1");
    MultiExamTask task;
    task.examCount = examCount;
    task.cardMin = questionsPerExam;
    task.cardMax = questionsPerExam;
    task.seating = seating;

    ConstraintSpec topics;
    topics.kind = ConstraintSpec::Kind::Aggregate;
    topics.fn = AggregateFn::DistinctCount;
    topics.property = "topic";
    topics.lo = Rational{2, 1};
    topics.hi = Rational{std::numeric_limits<int>::max(), 1};
    task.constraints.push_back(topics);

    ConstraintSpec multipleChoice;
    multipleChoice.kind = ConstraintSpec::Kind::CountScope;
    multipleChoice.predicate = Predicate::atom("type", CmpOp::Eq, 3);
    multipleChoice.max = 1;
    task.constraints.push_back(multipleChoice);

    ConstraintSpec hardShare;
    hardShare.kind = ConstraintSpec::Kind::PercentScope;
    hardShare.predicate = Predicate::atom("level", CmpOp::Eq, 4);
    hardShare.pMin = Rational{1, 10};
    hardShare.pMax = Rational{1, 5};
    task.constraints.push_back(hardShare);

    ConstraintSpec totalPoints;
    totalPoints.kind = ConstraintSpec::Kind::Aggregate;
    totalPoints.fn = AggregateFn::Sum;
    totalPoints.property = "points";
    totalPoints.lo = Rational{40, 1};
    totalPoints.hi = Rational{40, 1};
    task.constraints.push_back(totalPoints);

    ConstraintSpec neighborOverlap;
    neighborOverlap.kind = ConstraintSpec::Kind::NeighborOverlap;
    neighborOverlap.max = 2;
    task.constraints.push_back(neighborOverlap);

    return task;
}

} // namespace multiconf

#endif
