#ifndef MULTICONF_MODEL_PREDICATE_HPP
#define MULTICONF_MODEL_PREDICATE_HPP

#include <string>
#include <vector>

#include "multiconf/model/question.hpp"

namespace multiconf {

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

/// Boolean condition over a single question: property comparisons, a test for
/// one specific question id, and the logical combinators.
struct Predicate {
    enum class Kind { Atom, QuestionIs, And, Or, Not, Implies };

    Kind kind = Kind::Atom;
    std::string property; // Atom
    CmpOp op = CmpOp::Eq; // Atom
    int value = 0;        // Atom
    int questionId = 0;   // QuestionIs
    std::vector<Predicate> args; // And/Or: n-ary; Not: 1; Implies: [if, then]

    static Predicate atom(std::string property, CmpOp op, int value) {
        Predicate p;
        p.kind = Kind::Atom;
        p.property = std::move(property);
        p.op = op;
        p.value = value;
        return p;
    }
    static Predicate question_is(int id) {
        Predicate p;
        p.kind = Kind::QuestionIs;
        p.questionId = id;
        return p;
    }
    static Predicate all_of(std::vector<Predicate> args) {
        Predicate p;
        p.kind = Kind::And;
        p.args = std::move(args);
        return p;
    }
    static Predicate any_of(std::vector<Predicate> args) {
        Predicate p;
        p.kind = Kind::Or;
        p.args = std::move(args);
        return p;
    }
    static Predicate negation(Predicate inner) {
        Predicate p;
        p.kind = Kind::Not;
        p.args.push_back(std::move(inner));
        return p;
    }
    static Predicate implies(Predicate a, Predicate b) {
        Predicate p;
        p.kind = Kind::Implies;
        p.args.push_back(std::move(a));
        p.args.push_back(std::move(b));
        return p;
    }
};

inline bool evaluate_predicate(const Predicate& p, const Question& q) {
    switch (p.kind) {
    case Predicate::Kind::Atom: {
        const int v = property_value(q, p.property);
        switch (p.op) {
        case CmpOp::Eq: return v == p.value;
        case CmpOp::Ne: return v != p.value;
        case CmpOp::Lt: return v < p.value;
        case CmpOp::Le: return v <= p.value;
        case CmpOp::Gt: return v > p.value;
        case CmpOp::Ge: return v >= p.value;
        }
        return false;
    }
    case Predicate::Kind::QuestionIs:
        return q.id == p.questionId;
    case Predicate::Kind::And:
        for (const auto& a : p.args)
            if (!evaluate_predicate(a, q)) return false;
        return true;
    case Predicate::Kind::Or:
        for (const auto& a : p.args)
            if (evaluate_predicate(a, q)) return true;
        return false;
    case Predicate::Kind::Not:
        return !evaluate_predicate(p.args[0], q);
    case Predicate::Kind::Implies:
        return !evaluate_predicate(p.args[0], q) || evaluate_predicate(p.args[1], q);
    }
    return false;
}

/// Match mask over the pool, indexed 1..size (slot 0 unused).
inline std::vector<char> match_mask(const Predicate& p, const QuestionPool& pool) {
    std::vector<char> mask(pool.size() + 1, 0);
    for (const Question& q : pool.questions)
        mask[q.id] = evaluate_predicate(p, q) ? 1 : 0;
    return mask;
}

} // namespace multiconf

#endif
