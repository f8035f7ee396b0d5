#ifndef MULTICONF_MODEL_COMPILE_HPP
#define MULTICONF_MODEL_COMPILE_HPP

#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "multiconf/core/propagators.hpp"
#include "multiconf/core/solver.hpp"
#include "multiconf/core/store.hpp"
#include "multiconf/model/task.hpp"

namespace multiconf {

/// A task compiled to a solver store: one set variable per exam (index i-1
/// for exam i), all constraint propagators posted, and the seating chart
/// when one is implied.
struct CompiledModel {
    std::unique_ptr<Store> store;
    std::optional<SeatingChart> chart;
    int propagatorsPosted = 0; // excludes the per-variable cardinality props
};

namespace detail {

inline std::vector<std::int64_t> property_values(const QuestionPool& pool,
                                                 const std::string& property) {
    std::vector<std::int64_t> values(pool.size() + 1, 0);
    for (const Question& q : pool.questions) values[q.id] = property_value(q, property);
    return values;
}

inline void post_intra(Store& s, int var, const QuestionPool& pool, const ConstraintSpec& c,
                       int& posted) {
    switch (c.kind) {
    case ConstraintSpec::Kind::ForallQuestions:
        // forall p == no question violating p
        post_count_by_predicate(s, var, match_mask(Predicate::negation(c.predicate), pool), 0, 0);
        ++posted;
        break;
    case ConstraintSpec::Kind::CountScope:
        post_count_by_predicate(s, var, match_mask(c.predicate, pool), c.min.value_or(0),
                                c.max.value_or(kNoLimit));
        ++posted;
        break;
    case ConstraintSpec::Kind::PercentScope:
        post_percent_by_predicate(s, var, match_mask(c.predicate, pool),
                                  c.pMin.value_or(Rational{0, 1}),
                                  c.pMax.value_or(Rational{1, 1}));
        ++posted;
        break;
    case ConstraintSpec::Kind::Aggregate: {
        auto values = property_values(pool, c.property);
        switch (c.fn) {
        case AggregateFn::Sum:
            if (c.lo.den != 1 || c.hi.den != 1)
                throw std::invalid_argument("sum bounds must be integers");
            post_sum_of_property(s, var, std::move(values), c.lo.num, c.hi.num);
            break;
        case AggregateFn::Average:
            post_average_of_property(s, var, std::move(values), c.lo, c.hi);
            break;
        case AggregateFn::DistinctCount:
            if (c.lo.den != 1 || c.hi.den != 1)
                throw std::invalid_argument("distinct-count bounds must be integers");
            post_distinct_count(s, var, std::move(values), static_cast<int>(c.lo.num),
                                c.hi.num >= kNoLimit ? kNoLimit : static_cast<int>(c.hi.num));
            break;
        }
        ++posted;
        break;
    }
    default:
        throw std::invalid_argument("not an intra-exam constraint");
    }
}

} // namespace detail

/// Creates the store for (pool, task): n set variables with empty lower
/// bound, the full pool as upper bound, and the task's cardinality interval;
/// then posts one or more propagators per constraint.
inline CompiledModel compile(const QuestionPool& pool, const MultiExamTask& task) {
    pool.check();
    task.check(pool);

    CompiledModel out;
    out.store = std::make_unique<Store>(pool.size());
    Store& s = *out.store;

    std::vector<int> fullPool(pool.size());
    std::iota(fullPool.begin(), fullPool.end(), 1);
    std::vector<int> vars;
    for (int i = 0; i < task.examCount; ++i)
        vars.push_back(s.add_set_var({}, fullPool, task.cardMin, task.cardMax));

    const bool needsChart = std::any_of(
        task.constraints.begin(), task.constraints.end(),
        [](const ConstraintSpec& c) { return c.kind == ConstraintSpec::Kind::NeighborOverlap; });
    out.chart = task.build_chart();
    if (needsChart && !out.chart)
        throw std::invalid_argument("neighbor-overlap constraint requires a seating chart");

    for (const ConstraintSpec& c : task.constraints) {
        switch (c.kind) {
        case ConstraintSpec::Kind::ForallQuestions:
        case ConstraintSpec::Kind::CountScope:
        case ConstraintSpec::Kind::PercentScope:
        case ConstraintSpec::Kind::Aggregate:
            for (int v : vars) detail::post_intra(s, v, pool, c, out.propagatorsPosted);
            break;
        case ConstraintSpec::Kind::ExamCount:
            post_exam_count(s, vars, match_mask(c.predicate, pool), c.min.value_or(0),
                            c.max.value_or(kNoLimit));
            ++out.propagatorsPosted;
            break;
        case ConstraintSpec::Kind::PairwiseOverlap:
            for (int i = 0; i < task.examCount; ++i)
                for (int j = i + 1; j < task.examCount; ++j) {
                    post_intersection_card(s, vars[i], vars[j], c.min.value_or(0),
                                           c.max.value_or(kNoLimit));
                    ++out.propagatorsPosted;
                }
            break;
        case ConstraintSpec::Kind::NeighborOverlap:
            for (const auto& [i, j] : out.chart->neighbor_pairs()) {
                post_intersection_card(s, vars[i - 1], vars[j - 1], c.min.value_or(0),
                                       c.max.value_or(kNoLimit));
                ++out.propagatorsPosted;
            }
            break;
        case ConstraintSpec::Kind::StudentScoped:
            detail::post_intra(s, vars[c.examIndex - 1], pool, *c.inner, out.propagatorsPosted);
            break;
        }
    }
    return out;
}

/// Packages a Sat assignment plus stats as a Solution, seats included when
/// the model carries a chart.
inline Solution make_solution(const CompiledModel& model, const SolveResult& result) {
    Solution sol;
    sol.nodes = result.stats.nodes;
    sol.backtracks = result.stats.backtracks;
    sol.wallMillis = result.stats.wallMillis;
    for (std::size_t v = 0; v < result.assignment.size(); ++v) {
        ExamResult ex;
        ex.index = static_cast<int>(v) + 1;
        if (model.chart) ex.seat = model.chart->seat_of(ex.index);
        ex.questions = result.assignment[v]; // already ascending
        sol.exams.push_back(std::move(ex));
    }
    return sol;
}

} // namespace multiconf

#endif
