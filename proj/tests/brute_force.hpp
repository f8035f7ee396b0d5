// Test-only oracle: exhaustive enumeration over all per-exam subsets,
// filtered by the independent validator. Shares no filtering code with the
// solver's propagation path.
#ifndef MULTICONF_TESTS_BRUTE_FORCE_HPP
#define MULTICONF_TESTS_BRUTE_FORCE_HPP

#include <random>
#include <set>
#include <vector>

#include "multiconf/model/validate.hpp"
#include "multiconf/synth.hpp"

namespace multiconf::testing {

inline std::vector<std::vector<int>> all_subsets(int universe, int cardMin, int cardMax) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << universe); ++mask) {
        std::vector<int> s;
        for (int e = 1; e <= universe; ++e)
            if (mask & (1u << (e - 1))) s.push_back(e);
        const int k = static_cast<int>(s.size());
        if (k >= cardMin && k <= cardMax) out.push_back(std::move(s));
    }
    return out;
}

using AssignmentSet = std::set<std::vector<std::vector<int>>>;

/// All assignments (one sorted question list per exam) the validator accepts.
inline AssignmentSet brute_force_solutions(const QuestionPool& pool, const MultiExamTask& task) {
    const auto subsets = all_subsets(pool.size(), task.cardMin, task.cardMax);
    AssignmentSet out;
    std::vector<std::size_t> pick(task.examCount, 0);
    const auto chart = task.build_chart();
    while (true) {
        Solution sol;
        for (int i = 0; i < task.examCount; ++i) {
            ExamResult ex;
            ex.index = i + 1;
            if (chart) ex.seat = chart->seat_of(ex.index);
            ex.questions = subsets[pick[i]];
            sol.exams.push_back(std::move(ex));
        }
        if (validate(pool, task, sol).valid()) {
            std::vector<std::vector<int>> a;
            for (const auto& ex : sol.exams) a.push_back(ex.questions);
            out.insert(std::move(a));
        }
        int i = task.examCount - 1;
        while (i >= 0 && ++pick[i] == subsets.size()) pick[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

/// Seeded random desk-scale task covering every constraint kind.
inline std::pair<QuestionPool, MultiExamTask> random_task(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    PropertyDomains domains;
    domains.topics = pick(2, 3);
    domains.levels = pick(2, 4);
    domains.maxMinDuration = 5;
    domains.maxMaxDuration = 10;
    domains.types = pick(2, 3);
    domains.maxPoints = 6;
    const int omega = pick(3, 6);
    QuestionPool pool = synth_pool(omega, rng(), domains);

    MultiExamTask task;
    task.examCount = pick(1, 3);
    task.cardMin = pick(1, 2);
    task.cardMax = std::min(omega, task.cardMin + pick(0, 2));
    task.seating.mode = SeatingSpec::Mode::Auto;

    auto random_predicate = [&]() {
        const int which = pick(0, 5);
        auto atom = [&]() {
            static const char* props[] = {"topic", "level", "type", "points"};
            static const CmpOp ops[] = {CmpOp::Eq, CmpOp::Ne, CmpOp::Le, CmpOp::Ge};
            return Predicate::atom(props[pick(0, 3)], ops[pick(0, 3)], pick(1, 4));
        };
        switch (which) {
        case 0: return atom();
        case 1: return Predicate::question_is(pick(1, omega));
        case 2: return Predicate::all_of({atom(), atom()});
        case 3: return Predicate::any_of({atom(), atom()});
        case 4: return Predicate::negation(atom());
        default: return Predicate::implies(atom(), atom());
        }
    };

    auto random_intra = [&]() {
        ConstraintSpec c;
        switch (pick(0, 3)) {
        case 0:
            c.kind = ConstraintSpec::Kind::ForallQuestions;
            c.predicate = random_predicate();
            break;
        case 1:
            c.kind = ConstraintSpec::Kind::CountScope;
            c.predicate = random_predicate();
            c.min = pick(0, 1);
            c.max = *c.min + pick(0, 2);
            break;
        case 2: {
            c.kind = ConstraintSpec::Kind::PercentScope;
            c.predicate = random_predicate();
            const int lo10 = pick(0, 2);
            const int hi10 = std::min(10, lo10 * 5 + pick(0, 4));
            c.pMin = Rational{lo10, 10};
            c.pMax = Rational{std::max(lo10, hi10), 10};
            break;
        }
        default: {
            c.kind = ConstraintSpec::Kind::Aggregate;
            const int fn = pick(0, 2);
            if (fn == 0) {
                c.fn = AggregateFn::Sum;
                c.property = "points";
                c.lo = Rational{pick(2, 8), 1};
                c.hi = Rational{c.lo.num + pick(2, 10), 1};
            } else if (fn == 1) {
                c.fn = AggregateFn::Average;
                c.property = "level";
                const int lo2 = pick(2, 4);
                c.lo = Rational{lo2, 2};
                c.hi = Rational{lo2 + pick(1, 4), 2};
            } else {
                c.fn = AggregateFn::DistinctCount;
                c.property = "topic";
                c.lo = Rational{1, 1};
                c.hi = Rational{pick(1, 3), 1};
            }
            break;
        }
        }
        return c;
    };

    const int numConstraints = pick(1, 3);
    for (int i = 0; i < numConstraints; ++i) {
        ConstraintSpec c;
        switch (pick(0, 7)) {
        case 0:
        case 1:
        case 2:
        case 3:
            c = random_intra();
            break;
        case 4:
            c.kind = ConstraintSpec::Kind::ExamCount;
            c.predicate = random_predicate();
            c.min = 0;
            c.max = pick(0, task.examCount);
            break;
        case 5:
            c.kind = ConstraintSpec::Kind::PairwiseOverlap;
            c.max = pick(0, 2);
            break;
        case 6:
            c.kind = ConstraintSpec::Kind::NeighborOverlap;
            c.max = pick(0, 2);
            break;
        default:
            c.kind = ConstraintSpec::Kind::StudentScoped;
            c.examIndex = pick(1, task.examCount);
            c.inner = std::make_shared<ConstraintSpec>(random_intra());
            break;
        }
        task.constraints.push_back(std::move(c));
    }
    return {std::move(pool), std::move(task)};
}

} // namespace multiconf::testing

#endif
