#ifndef MULTICONF_CORE_PROPAGATORS_HPP
#define MULTICONF_CORE_PROPAGATORS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "multiconf/core/rational.hpp"
#include "multiconf/core/store.hpp"

namespace multiconf {

/// Unbounded upper limit for count-style constraints.
inline constexpr int kNoLimit = std::numeric_limits<int>::max();

/// Bounds the number of elements in the value that satisfy a fixed predicate,
/// given as a per-element match mask (index 1..U).
class CountByPredicate final : public Propagator {
public:
    CountByPredicate(int var, std::vector<char> match, int min, int max)
        : var_(var), match_(std::move(match)), min_(min), max_(max) {}

    bool propagate(Store& s) override {
        const VarDomain& d = s.var(var_);
        int inUpper = 0, inLower = 0;
        for (int e = 1; e <= d.universe(); ++e) {
            if (!match_[e]) continue;
            if (d.in_upper(e)) ++inUpper;
            if (d.required(e)) ++inLower;
        }
        if (inUpper < min_ || inLower > max_) return false;
        if (inUpper == min_) {
            for (int e = 1; e <= d.universe(); ++e)
                if (match_[e] && s.var(var_).possible(e) && !s.include(var_, e)) return false;
        }
        if (inLower == max_) {
            for (int e = 1; e <= d.universe(); ++e)
                if (match_[e] && s.var(var_).possible(e) && !s.exclude(var_, e)) return false;
        }
        return true;
    }

    bool entailed(const Store& s) const override {
        const VarDomain& d = s.var(var_);
        int n = 0;
        for (int e = 1; e <= d.universe(); ++e)
            if (match_[e] && d.required(e)) ++n;
        return n >= min_ && n <= max_;
    }

    std::vector<int> watched() const override { return {var_}; }

private:
    int var_;
    std::vector<char> match_;
    int min_, max_;
};

/// Bounds the fraction of matching elements relative to the value's size.
/// Filtering is interval reasoning over the feasible cardinalities; the
/// entailment check is exact via cross-multiplication.
class PercentByPredicate final : public Propagator {
public:
    PercentByPredicate(int var, std::vector<char> match, Rational pMin, Rational pMax)
        : var_(var), match_(std::move(match)), pMin_(pMin), pMax_(pMax) {}

    bool propagate(Store& s) override {
        const VarDomain& d = s.var(var_);
        int matchL = 0, matchU = 0, nonmatchL = 0, nonmatchU = 0;
        for (int e = 1; e <= d.universe(); ++e) {
            if (!d.in_upper(e)) continue;
            const bool req = d.required(e);
            if (match_[e]) {
                ++matchU;
                if (req) ++matchL;
            } else {
                ++nonmatchU;
                if (req) ++nonmatchL;
            }
        }
        const int kLo = std::max(d.cardMin, d.requiredCount);
        const int kHi = std::min(d.cardMax, d.upperCount());
        for (int k = kLo; k <= kHi; ++k) {
            // value of size k has t matching and k-t non-matching elements
            std::int64_t tLo = std::max<std::int64_t>(matchL, k - nonmatchU);
            std::int64_t tHi = std::min<std::int64_t>(matchU, k - nonmatchL);
            tLo = std::max(tLo, pMin_.ceil_times(k));
            tHi = std::min(tHi, pMax_.floor_times(k));
            if (tLo <= tHi) return true;
        }
        return false;
    }

    bool entailed(const Store& s) const override {
        const VarDomain& d = s.var(var_);
        const int k = d.requiredCount;
        int t = 0;
        for (int e = 1; e <= d.universe(); ++e)
            if (match_[e] && d.required(e)) ++t;
        return pMin_.times_leq(k, t) && pMax_.times_geq(k, t);
    }

    std::vector<int> watched() const override { return {var_}; }

private:
    int var_;
    std::vector<char> match_;
    Rational pMin_, pMax_;
};

namespace detail {

/// Greedy sorted-completion bounds shared by the sum and average propagators.
/// sortedPossible holds the values of all still-possible elements, ascending.
struct SumBounds {
    std::int64_t lowerSum = 0;          // sum over required elements
    std::vector<std::int64_t> sortedPossible;
    std::vector<std::int64_t> prefix;   // prefix[j] = sum of j smallest
    std::vector<std::int64_t> suffix;   // suffix[j] = sum of j largest

    void build() {
        std::sort(sortedPossible.begin(), sortedPossible.end());
        const std::size_t p = sortedPossible.size();
        prefix.assign(p + 1, 0);
        suffix.assign(p + 1, 0);
        for (std::size_t j = 0; j < p; ++j) {
            prefix[j + 1] = prefix[j] + sortedPossible[j];
            suffix[j + 1] = suffix[j] + sortedPossible[p - 1 - j];
        }
    }
    std::int64_t min_with(int extra) const { return lowerSum + prefix[extra]; }
    std::int64_t max_with(int extra) const { return lowerSum + suffix[extra]; }
};

} // namespace detail

/// Bounds the sum of a per-element weight over the value. Uses greedy
/// sorted-completion bounds over the feasible cardinalities, and prunes
/// elements whose inclusion or exclusion makes every cardinality infeasible.
class SumOfProperty final : public Propagator {
public:
    SumOfProperty(int var, std::vector<std::int64_t> values, std::int64_t min, std::int64_t max)
        : var_(var), values_(std::move(values)), min_(min), max_(max) {}

    bool propagate(Store& s) override {
        const VarDomain& d = s.var(var_);
        detail::SumBounds b;
        std::vector<int> possibleElems;
        for (int e = 1; e <= d.universe(); ++e) {
            if (d.required(e)) b.lowerSum += values_[e];
            else if (d.possible(e)) {
                possibleElems.push_back(e);
                b.sortedPossible.push_back(values_[e]);
            }
        }
        b.build();
        const int kLo = std::max(d.cardMin, d.requiredCount);
        const int kHi = std::min(d.cardMax, d.upperCount());
        if (!feasible(b, kLo, kHi, d.requiredCount)) return false;

        // element pruning: test each possible element's two fates; any change
        // invalidates the cached bounds, so stop and let the rerun recompute
        for (int e : possibleElems) {
            const std::int64_t v = values_[e];
            detail::SumBounds incl = without_value(b, v);
            incl.lowerSum += v;
            detail::SumBounds excl = without_value(b, v);
            const int reqIncl = d.requiredCount + 1;
            const bool canIncl = feasible(incl, std::max(kLo, reqIncl), kHi, reqIncl);
            const bool canExcl = feasible(excl, kLo, kHi, d.requiredCount);
            if (!canIncl && !canExcl) return false;
            if (!canIncl) return s.exclude(var_, e);
            if (!canExcl) return s.include(var_, e);
        }
        return true;
    }

    bool entailed(const Store& s) const override {
        const VarDomain& d = s.var(var_);
        std::int64_t sum = 0;
        for (int e = 1; e <= d.universe(); ++e)
            if (d.required(e)) sum += values_[e];
        return sum >= min_ && sum <= max_;
    }

    std::vector<int> watched() const override { return {var_}; }

private:
    bool feasible(const detail::SumBounds& b, int kLo, int kHi, int requiredCount) const {
        const int p = static_cast<int>(b.sortedPossible.size());
        for (int k = kLo; k <= kHi; ++k) {
            const int extra = k - requiredCount;
            if (extra < 0 || extra > p) continue;
            if (b.max_with(extra) >= min_ && b.min_with(extra) <= max_) return true;
        }
        return false;
    }

    static detail::SumBounds without_value(const detail::SumBounds& b, std::int64_t v) {
        detail::SumBounds out;
        out.lowerSum = b.lowerSum;
        out.sortedPossible = b.sortedPossible;
        const auto it = std::find(out.sortedPossible.begin(), out.sortedPossible.end(), v);
        out.sortedPossible.erase(it);
        out.build();
        return out;
    }

    int var_;
    std::vector<std::int64_t> values_;
    std::int64_t min_, max_;
};

/// Bounds the mean of a per-element weight: lo * |value| <= sum <= hi * |value|
/// in exact rationals. Filtering is the sum reasoning parameterized by the
/// cardinality interval; no element pruning.
class AverageOfProperty final : public Propagator {
public:
    AverageOfProperty(int var, std::vector<std::int64_t> values, Rational lo, Rational hi)
        : var_(var), values_(std::move(values)), lo_(lo), hi_(hi) {}

    bool propagate(Store& s) override {
        const VarDomain& d = s.var(var_);
        detail::SumBounds b;
        for (int e = 1; e <= d.universe(); ++e) {
            if (d.required(e)) b.lowerSum += values_[e];
            else if (d.possible(e)) b.sortedPossible.push_back(values_[e]);
        }
        b.build();
        const int p = static_cast<int>(b.sortedPossible.size());
        const int kLo = std::max(d.cardMin, d.requiredCount);
        const int kHi = std::min(d.cardMax, d.upperCount());
        for (int k = kLo; k <= kHi; ++k) {
            const int extra = k - d.requiredCount;
            if (extra < 0 || extra > p) continue;
            if (lo_.times_leq(k, b.max_with(extra)) && hi_.times_geq(k, b.min_with(extra)))
                return true;
        }
        return false;
    }

    bool entailed(const Store& s) const override {
        const VarDomain& d = s.var(var_);
        std::int64_t sum = 0;
        for (int e = 1; e <= d.universe(); ++e)
            if (d.required(e)) sum += values_[e];
        return lo_.times_leq(d.requiredCount, sum) && hi_.times_geq(d.requiredCount, sum);
    }

    std::vector<int> watched() const override { return {var_}; }

private:
    int var_;
    std::vector<std::int64_t> values_;
    Rational lo_, hi_;
};

/// Bounds the number of distinct per-element labels among the value.
class DistinctCount final : public Propagator {
public:
    DistinctCount(int var, std::vector<std::int64_t> labels, int min, int max)
        : var_(var), labels_(std::move(labels)), min_(min), max_(max) {}

    bool propagate(Store& s) override {
        const VarDomain& d = s.var(var_);
        std::unordered_set<std::int64_t> upperLabels, lowerLabels;
        for (int e = 1; e <= d.universe(); ++e) {
            if (!d.in_upper(e)) continue;
            upperLabels.insert(labels_[e]);
            if (d.required(e)) lowerLabels.insert(labels_[e]);
        }
        if (static_cast<int>(upperLabels.size()) < min_ ||
            static_cast<int>(lowerLabels.size()) > max_)
            return false;
        if (static_cast<int>(lowerLabels.size()) == max_) {
            // any element with a fresh label would overshoot
            for (int e = 1; e <= d.universe(); ++e)
                if (s.var(var_).possible(e) && !lowerLabels.count(labels_[e]) &&
                    !s.exclude(var_, e))
                    return false;
        }
        return true;
    }

    bool entailed(const Store& s) const override {
        const VarDomain& d = s.var(var_);
        std::unordered_set<std::int64_t> labels;
        for (int e = 1; e <= d.universe(); ++e)
            if (d.required(e)) labels.insert(labels_[e]);
        const int n = static_cast<int>(labels.size());
        return n >= min_ && n <= max_;
    }

    std::vector<int> watched() const override { return {var_}; }

private:
    int var_;
    std::vector<std::int64_t> labels_;
    int min_, max_;
};

/// Bounds |valueA ∩ valueB| between two set variables.
class IntersectionCard final : public Propagator {
public:
    IntersectionCard(int varA, int varB, int min, int max)
        : a_(varA), b_(varB), min_(min), max_(max) {}

    bool propagate(Store& s) override {
        const int U = s.universe();
        int interLower = 0, interUpper = 0;
        for (int e = 1; e <= U; ++e) {
            const auto& da = s.var(a_);
            const auto& db = s.var(b_);
            if (da.in_upper(e) && db.in_upper(e)) ++interUpper;
            if (da.required(e) && db.required(e)) ++interLower;
        }
        if (interLower > max_ || interUpper < min_) return false;
        if (interLower == max_) {
            // the shared budget is spent: required on one side bans the other
            for (int e = 1; e <= U; ++e) {
                if (s.var(a_).required(e) && s.var(b_).possible(e) && !s.exclude(b_, e))
                    return false;
                if (s.var(b_).required(e) && s.var(a_).possible(e) && !s.exclude(a_, e))
                    return false;
            }
        }
        if (interUpper == min_ && min_ > 0) {
            // every shared candidate must land in both values
            for (int e = 1; e <= U; ++e) {
                if (!s.var(a_).in_upper(e) || !s.var(b_).in_upper(e)) continue;
                if (s.var(a_).possible(e) && !s.include(a_, e)) return false;
                if (s.var(b_).possible(e) && !s.include(b_, e)) return false;
            }
        }
        return true;
    }

    bool entailed(const Store& s) const override {
        int n = 0;
        for (int e = 1; e <= s.universe(); ++e)
            if (s.var(a_).required(e) && s.var(b_).required(e)) ++n;
        return n >= min_ && n <= max_;
    }

    std::vector<int> watched() const override { return {a_, b_}; }

private:
    int a_, b_;
    int min_, max_;
};

/// Bounds how many of the given variables contain at least one matching
/// element. Three-valued per-variable status: surely matching (a required
/// match), surely not (no match left in upper), or open.
class ExamCountPropagator final : public Propagator {
public:
    ExamCountPropagator(std::vector<int> vars, std::vector<char> match, int min, int max)
        : vars_(std::move(vars)), match_(std::move(match)), min_(min), max_(max) {}

    bool propagate(Store& s) override {
        int sure = 0, open = 0;
        std::vector<int> openVars;
        for (int v : vars_) {
            const VarDomain& d = s.var(v);
            bool hasRequired = false, hasUpper = false;
            for (int e = 1; e <= d.universe(); ++e) {
                if (!match_[e]) continue;
                if (d.required(e)) { hasRequired = true; break; }
                if (d.in_upper(e)) hasUpper = true;
            }
            if (hasRequired) ++sure;
            else if (hasUpper) { ++open; openVars.push_back(v); }
        }
        if (sure > max_ || sure + open < min_) return false;
        if (sure == max_) {
            for (int v : openVars)
                for (int e = 1; e <= s.universe(); ++e)
                    if (match_[e] && s.var(v).possible(e) && !s.exclude(v, e)) return false;
        } else if (sure + open == min_) {
            // each open variable must end up matching; commit only when the
            // candidate is unique
            for (int v : openVars) {
                int candidate = 0, candidates = 0;
                for (int e = 1; e <= s.universe(); ++e)
                    if (match_[e] && s.var(v).in_upper(e)) { candidate = e; ++candidates; }
                if (candidates == 1 && s.var(v).possible(candidate) &&
                    !s.include(v, candidate))
                    return false;
            }
        }
        return true;
    }

    bool entailed(const Store& s) const override {
        int n = 0;
        for (int v : vars_) {
            const VarDomain& d = s.var(v);
            for (int e = 1; e <= d.universe(); ++e)
                if (match_[e] && d.required(e)) { ++n; break; }
        }
        return n >= min_ && n <= max_;
    }

    std::vector<int> watched() const override { return vars_; }

private:
    std::vector<int> vars_;
    std::vector<char> match_;
    int min_, max_;
};

// ---- posting helpers ------------------------------------------------------

inline int post_cardinality(Store& s, int var, int min, int max) {
    if (min < 0 || min > max) throw std::invalid_argument("invalid cardinality interval");
    if (!s.tighten_card(var, min, max)) s.fail();
    // filtering is carried by the variable's own cardinality propagator
    return s.post(std::make_unique<CardinalityPropagator>(var));
}

inline int post_count_by_predicate(Store& s, int var, std::vector<char> match, int min, int max) {
    return s.post(std::make_unique<CountByPredicate>(var, std::move(match), min, max));
}

inline int post_percent_by_predicate(Store& s, int var, std::vector<char> match,
                                     Rational pMin, Rational pMax) {
    return s.post(std::make_unique<PercentByPredicate>(var, std::move(match), pMin, pMax));
}

inline int post_sum_of_property(Store& s, int var, std::vector<std::int64_t> values,
                                std::int64_t min, std::int64_t max) {
    return s.post(std::make_unique<SumOfProperty>(var, std::move(values), min, max));
}

inline int post_average_of_property(Store& s, int var, std::vector<std::int64_t> values,
                                    Rational lo, Rational hi) {
    return s.post(std::make_unique<AverageOfProperty>(var, std::move(values), lo, hi));
}

inline int post_distinct_count(Store& s, int var, std::vector<std::int64_t> labels,
                               int min, int max) {
    return s.post(std::make_unique<DistinctCount>(var, std::move(labels), min, max));
}

inline int post_intersection_card(Store& s, int varA, int varB, int min, int max) {
    return s.post(std::make_unique<IntersectionCard>(varA, varB, min, max));
}

inline int post_exam_count(Store& s, std::vector<int> vars, std::vector<char> match,
                           int min, int max) {
    if (vars.empty()) throw std::invalid_argument("exam-count needs at least one variable");
    return s.post(std::make_unique<ExamCountPropagator>(std::move(vars), std::move(match), min, max));
}

} // namespace multiconf

#endif
