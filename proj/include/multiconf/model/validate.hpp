#ifndef MULTICONF_MODEL_VALIDATE_HPP
#define MULTICONF_MODEL_VALIDATE_HPP

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "multiconf/model/predicate.hpp"
#include "multiconf/model/task.hpp"

// Independent checker: evaluates every constraint by direct counting and
// summation on the concrete question sets. Shares no filtering code with the
// solver; the seating chart geometry is the only shared model.

namespace multiconf {

struct Violation {
    int constraintIndex = -1; // 0-based into task.constraints; -1 = base model
    std::vector<int> exams;   // 1-based exam indices involved
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

namespace detail {

inline int count_matching(const QuestionPool& pool, const std::vector<int>& qs,
                          const Predicate& p) {
    int n = 0;
    for (int id : qs)
        if (evaluate_predicate(p, pool.question(id))) ++n;
    return n;
}

inline int overlap(const std::vector<int>& a, const std::vector<int>& b) {
    // question lists are ascending
    std::vector<int> inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    return static_cast<int>(inter.size());
}

inline void check_intra(const QuestionPool& pool, const ConstraintSpec& c, int constraintIndex,
                        const ExamResult& exam, ValidationReport& report) {
    const std::vector<int>& qs = exam.questions;
    std::ostringstream why;
    bool ok = true;
    switch (c.kind) {
    case ConstraintSpec::Kind::ForallQuestions:
        for (int id : qs)
            if (!evaluate_predicate(c.predicate, pool.question(id))) {
                ok = false;
                why << "question " << id << " violates the per-question predicate";
                break;
            }
        break;
    case ConstraintSpec::Kind::CountScope: {
        const int n = count_matching(pool, qs, c.predicate);
        if ((c.min && n < *c.min) || (c.max && n > *c.max)) {
            ok = false;
            why << "matching-question count " << n << " outside ["
                << (c.min ? std::to_string(*c.min) : "0") << ", "
                << (c.max ? std::to_string(*c.max) : "inf") << "]";
        }
        break;
    }
    case ConstraintSpec::Kind::PercentScope: {
        const int n = count_matching(pool, qs, c.predicate);
        const int k = static_cast<int>(qs.size());
        const bool lowOk = !c.pMin || c.pMin->times_leq(k, n);
        const bool highOk = !c.pMax || c.pMax->times_geq(k, n);
        if (!lowOk || !highOk) {
            ok = false;
            why << "matching fraction " << n << "/" << k << " outside the percentage bounds";
        }
        break;
    }
    case ConstraintSpec::Kind::Aggregate: {
        switch (c.fn) {
        case AggregateFn::Sum: {
            std::int64_t sum = 0;
            for (int id : qs) sum += property_value(pool.question(id), c.property);
            if (sum < c.lo.num || sum > c.hi.num) {
                ok = false;
                why << "sum of " << c.property << " is " << sum << ", required [" << c.lo.num
                    << ", " << c.hi.num << "]";
            }
            break;
        }
        case AggregateFn::Average: {
            std::int64_t sum = 0;
            for (int id : qs) sum += property_value(pool.question(id), c.property);
            const int k = static_cast<int>(qs.size());
            if (!c.lo.times_leq(k, sum) || !c.hi.times_geq(k, sum)) {
                ok = false;
                why << "average of " << c.property << " (" << sum << "/" << k
                    << ") outside the bounds";
            }
            break;
        }
        case AggregateFn::DistinctCount: {
            std::set<int> labels;
            for (int id : qs) labels.insert(property_value(pool.question(id), c.property));
            const int n = static_cast<int>(labels.size());
            if (n < c.lo.num || n > c.hi.num) {
                ok = false;
                why << "distinct " << c.property << " count " << n << " outside [" << c.lo.num
                    << ", " << c.hi.num << "]";
            }
            break;
        }
        }
        break;
    }
    default:
        return;
    }
    if (!ok) report.violations.push_back({constraintIndex, {exam.index}, why.str()});
}

} // namespace detail

/// Checks a solution against pool, task, and base model. Reports every
/// violation, not just the first.
inline ValidationReport validate(const QuestionPool& pool, const MultiExamTask& task,
                                 const Solution& sol) {
    ValidationReport report;
    pool.check();
    task.check(pool);

    // base model: exam list shape, ids, duplicates, cardinality
    if (static_cast<int>(sol.exams.size()) != task.examCount)
        report.violations.push_back(
            {-1, {}, "solution has " + std::to_string(sol.exams.size()) + " exams, task wants " +
                         std::to_string(task.examCount)});
    for (const ExamResult& ex : sol.exams) {
        if (ex.index < 1 || ex.index > task.examCount) {
            report.violations.push_back({-1, {ex.index}, "exam index out of range"});
            continue;
        }
        std::set<int> seen;
        for (int id : ex.questions) {
            if (id < 1 || id > pool.size())
                report.violations.push_back(
                    {-1, {ex.index}, "unknown question id " + std::to_string(id)});
            else if (!seen.insert(id).second)
                report.violations.push_back(
                    {-1, {ex.index}, "question " + std::to_string(id) + " appears twice"});
        }
        const int k = static_cast<int>(ex.questions.size());
        if (k < task.cardMin || k > task.cardMax)
            report.violations.push_back(
                {-1, {ex.index}, "exam has " + std::to_string(k) + " questions, required [" +
                                     std::to_string(task.cardMin) + ", " +
                                     std::to_string(task.cardMax) + "]"});
    }
    if (!report.valid()) return report; // structure broken, constraint math unreliable

    // sorted copies keyed by exam index for the cross-exam checks
    std::vector<std::vector<int>> byIndex(task.examCount + 1);
    for (const ExamResult& ex : sol.exams) {
        byIndex[ex.index] = ex.questions;
        std::sort(byIndex[ex.index].begin(), byIndex[ex.index].end());
    }

    auto chart = task.build_chart();

    for (std::size_t ci = 0; ci < task.constraints.size(); ++ci) {
        const ConstraintSpec& c = task.constraints[ci];
        const int idx = static_cast<int>(ci);
        switch (c.kind) {
        case ConstraintSpec::Kind::ForallQuestions:
        case ConstraintSpec::Kind::CountScope:
        case ConstraintSpec::Kind::PercentScope:
        case ConstraintSpec::Kind::Aggregate:
            for (const ExamResult& ex : sol.exams)
                detail::check_intra(pool, c, idx, ex, report);
            break;
        case ConstraintSpec::Kind::StudentScoped:
            for (const ExamResult& ex : sol.exams)
                if (ex.index == c.examIndex) detail::check_intra(pool, *c.inner, idx, ex, report);
            break;
        case ConstraintSpec::Kind::ExamCount: {
            int n = 0;
            for (int i = 1; i <= task.examCount; ++i)
                if (detail::count_matching(pool, byIndex[i], c.predicate) > 0) ++n;
            if ((c.min && n < *c.min) || (c.max && n > *c.max))
                report.violations.push_back(
                    {idx, {}, std::to_string(n) + " exams contain a matching question"});
            break;
        }
        case ConstraintSpec::Kind::PairwiseOverlap:
            for (int i = 1; i <= task.examCount; ++i)
                for (int j = i + 1; j <= task.examCount; ++j) {
                    const int n = detail::overlap(byIndex[i], byIndex[j]);
                    if ((c.min && n < *c.min) || (c.max && n > *c.max))
                        report.violations.push_back(
                            {idx, {i, j}, "exams share " + std::to_string(n) + " questions"});
                }
            break;
        case ConstraintSpec::Kind::NeighborOverlap: {
            if (!chart) {
                report.violations.push_back({idx, {}, "task has no seating chart"});
                break;
            }
            for (const auto& [i, j] : chart->neighbor_pairs()) {
                const int n = detail::overlap(byIndex[i], byIndex[j]);
                if ((c.min && n < *c.min) || (c.max && n > *c.max))
                    report.violations.push_back(
                        {idx, {i, j}, "neighboring exams share " + std::to_string(n) + " questions"});
            }
            break;
        }
        }
    }
    return report;
}

} // namespace multiconf

#endif
