#ifndef MULTICONF_IO_JSON_HPP
#define MULTICONF_IO_JSON_HPP

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <json.hpp>

#include "multiconf/model/task.hpp"

// File formats (all UTF-8 JSON, unknown fields rejected):
//   pool:     {"domains": {...}, "questions": [{"id", "topic", "level",
//              "min-duration", "max-duration", "type", "points"}, ...]}
//   task:     {"exams", "cardinality": {"min", "max"},
//              "seating": {"rows", "seatsPerRow"} | "auto" | null,
//              "constraints": [...], "studentConstraints": [...]}
//   solution: {"exams": [{"index", "seat": {"row", "seat"} | null,
//              "questions": [...]}], "stats": {"nodes", "backtracks"}}

namespace multiconf {
namespace io {

using json = nlohmann::json;

namespace detail {

inline void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                           const std::string& where) {
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) { ok = true; break; }
        if (!ok) throw std::invalid_argument("unknown field \"" + key + "\" in " + where);
    }
}

inline int get_int(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key))
        throw std::invalid_argument("missing field \"" + std::string(key) + "\" in " + where);
    if (!obj[key].is_number_integer())
        throw std::invalid_argument("field \"" + std::string(key) + "\" in " + where +
                                    " must be an integer");
    return obj[key].get<int>();
}

inline Rational get_rational(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational{v.get<std::int64_t>(), 1};
    if (v.is_number()) return Rational::from_decimal(v.get<double>());
    throw std::invalid_argument(where + " must be a number");
}

inline json rational_to_json(const Rational& r) {
    if (r.den == 1) return json(r.num);
    return json(r.to_double());
}

} // namespace detail

// ---- pool -----------------------------------------------------------------

inline QuestionPool pool_from_json(const json& j) {
    detail::reject_unknown(j, {"domains", "questions"}, "pool");
    QuestionPool pool;
    const json& d = j.at("domains");
    detail::reject_unknown(
        d, {"topics", "levels", "maxMinDuration", "maxMaxDuration", "types", "maxPoints"},
        "pool domains");
    pool.domains.topics = detail::get_int(d, "topics", "domains");
    pool.domains.levels = detail::get_int(d, "levels", "domains");
    pool.domains.maxMinDuration = detail::get_int(d, "maxMinDuration", "domains");
    pool.domains.maxMaxDuration = detail::get_int(d, "maxMaxDuration", "domains");
    pool.domains.types = detail::get_int(d, "types", "domains");
    pool.domains.maxPoints = detail::get_int(d, "maxPoints", "domains");
    for (const json& qj : j.at("questions")) {
        detail::reject_unknown(
            qj, {"id", "topic", "level", "min-duration", "max-duration", "type", "points"},
            "question");
        Question q;
        q.id = detail::get_int(qj, "id", "question");
        q.topic = detail::get_int(qj, "topic", "question");
        q.level = detail::get_int(qj, "level", "question");
        q.minDuration = detail::get_int(qj, "min-duration", "question");
        q.maxDuration = detail::get_int(qj, "max-duration", "question");
        q.qtype = detail::get_int(qj, "type", "question");
        q.points = detail::get_int(qj, "points", "question");
        pool.questions.push_back(q);
    }
    pool.check();
    return pool;
}

inline json pool_to_json(const QuestionPool& pool) {
    json qs = json::array();
    for (const Question& q : pool.questions)
        qs.push_back({{"id", q.id},
                      {"topic", q.topic},
                      {"level", q.level},
                      {"min-duration", q.minDuration},
                      {"max-duration", q.maxDuration},
                      {"type", q.qtype},
                      {"points", q.points}});
    return {{"domains",
             {{"topics", pool.domains.topics},
              {"levels", pool.domains.levels},
              {"maxMinDuration", pool.domains.maxMinDuration},
              {"maxMaxDuration", pool.domains.maxMaxDuration},
              {"types", pool.domains.types},
              {"maxPoints", pool.domains.maxPoints}}},
            {"questions", qs}};
}

// ---- predicate ------------------------------------------------------------

inline CmpOp cmp_from_string(const std::string& s) {
    if (s == "=") return CmpOp::Eq;
    if (s == "!=") return CmpOp::Ne;
    if (s == "<") return CmpOp::Lt;
    if (s == "<=") return CmpOp::Le;
    if (s == ">") return CmpOp::Gt;
    if (s == ">=") return CmpOp::Ge;
    throw std::invalid_argument("unknown comparison operator \"" + s + "\"");
}

inline std::string cmp_to_string(CmpOp op) {
    switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::Ne: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
    }
    return "=";
}

inline Predicate predicate_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "atom") {
        detail::reject_unknown(j, {"kind", "property", "op", "value"}, "atom predicate");
        const std::string prop = j.at("property").get<std::string>();
        if (!is_property_name(prop))
            throw std::invalid_argument("unknown question property \"" + prop + "\"");
        return Predicate::atom(prop, cmp_from_string(j.at("op").get<std::string>()),
                               detail::get_int(j, "value", "atom predicate"));
    }
    if (kind == "questionIs") {
        detail::reject_unknown(j, {"kind", "id"}, "questionIs predicate");
        return Predicate::question_is(detail::get_int(j, "id", "questionIs predicate"));
    }
    if (kind == "and" || kind == "or") {
        detail::reject_unknown(j, {"kind", "args"}, kind + " predicate");
        std::vector<Predicate> args;
        for (const json& a : j.at("args")) args.push_back(predicate_from_json(a));
        return kind == "and" ? Predicate::all_of(std::move(args))
                             : Predicate::any_of(std::move(args));
    }
    if (kind == "not") {
        detail::reject_unknown(j, {"kind", "arg"}, "not predicate");
        return Predicate::negation(predicate_from_json(j.at("arg")));
    }
    if (kind == "implies") {
        detail::reject_unknown(j, {"kind", "if", "then"}, "implies predicate");
        return Predicate::implies(predicate_from_json(j.at("if")),
                                  predicate_from_json(j.at("then")));
    }
    throw std::invalid_argument("unknown predicate kind \"" + kind + "\"");
}

inline json predicate_to_json(const Predicate& p) {
    switch (p.kind) {
    case Predicate::Kind::Atom:
        return {{"kind", "atom"},
                {"property", p.property},
                {"op", cmp_to_string(p.op)},
                {"value", p.value}};
    case Predicate::Kind::QuestionIs:
        return {{"kind", "questionIs"}, {"id", p.questionId}};
    case Predicate::Kind::And:
    case Predicate::Kind::Or: {
        json args = json::array();
        for (const Predicate& a : p.args) args.push_back(predicate_to_json(a));
        return {{"kind", p.kind == Predicate::Kind::And ? "and" : "or"}, {"args", args}};
    }
    case Predicate::Kind::Not:
        return {{"kind", "not"}, {"arg", predicate_to_json(p.args[0])}};
    case Predicate::Kind::Implies:
        return {{"kind", "implies"},
                {"if", predicate_to_json(p.args[0])},
                {"then", predicate_to_json(p.args[1])}};
    }
    throw std::logic_error("unreachable predicate kind");
}

// ---- constraints ----------------------------------------------------------

inline ConstraintSpec constraint_from_json(const json& j);

inline AggregateFn aggregate_fn_from_string(const std::string& s) {
    if (s == "sum") return AggregateFn::Sum;
    if (s == "average") return AggregateFn::Average;
    if (s == "distinctCount") return AggregateFn::DistinctCount;
    throw std::invalid_argument("unknown aggregate function \"" + s + "\"");
}

inline std::string aggregate_fn_to_string(AggregateFn fn) {
    switch (fn) {
    case AggregateFn::Sum: return "sum";
    case AggregateFn::Average: return "average";
    case AggregateFn::DistinctCount: return "distinctCount";
    }
    return "sum";
}

inline ConstraintSpec constraint_from_json(const json& j) {
    ConstraintSpec c;
    const std::string kind = j.at("kind").get<std::string>();
    auto opt_int = [&](const char* key) -> std::optional<int> {
        if (!j.contains(key)) return std::nullopt;
        return detail::get_int(j, key, kind + " constraint");
    };
    auto opt_rational = [&](const char* key) -> std::optional<Rational> {
        if (!j.contains(key)) return std::nullopt;
        return detail::get_rational(j[key], kind + " bound");
    };
    if (kind == "forallQuestions") {
        detail::reject_unknown(j, {"kind", "predicate"}, kind);
        c.kind = ConstraintSpec::Kind::ForallQuestions;
        c.predicate = predicate_from_json(j.at("predicate"));
    } else if (kind == "countScope") {
        detail::reject_unknown(j, {"kind", "predicate", "min", "max"}, kind);
        c.kind = ConstraintSpec::Kind::CountScope;
        c.predicate = predicate_from_json(j.at("predicate"));
        c.min = opt_int("min");
        c.max = opt_int("max");
    } else if (kind == "percentScope") {
        detail::reject_unknown(j, {"kind", "predicate", "pMin", "pMax"}, kind);
        c.kind = ConstraintSpec::Kind::PercentScope;
        c.predicate = predicate_from_json(j.at("predicate"));
        c.pMin = opt_rational("pMin");
        c.pMax = opt_rational("pMax");
    } else if (kind == "aggregate") {
        detail::reject_unknown(j, {"kind", "fn", "property", "lo", "hi"}, kind);
        c.kind = ConstraintSpec::Kind::Aggregate;
        c.fn = aggregate_fn_from_string(j.at("fn").get<std::string>());
        c.property = j.at("property").get<std::string>();
        c.lo = detail::get_rational(j.at("lo"), "aggregate lo");
        c.hi = detail::get_rational(j.at("hi"), "aggregate hi");
    } else if (kind == "examCount") {
        detail::reject_unknown(j, {"kind", "predicate", "min", "max"}, kind);
        c.kind = ConstraintSpec::Kind::ExamCount;
        c.predicate = predicate_from_json(j.at("predicate"));
        c.min = opt_int("min");
        c.max = opt_int("max");
    } else if (kind == "pairwiseOverlap" || kind == "neighborOverlap") {
        detail::reject_unknown(j, {"kind", "min", "max"}, kind);
        c.kind = kind == "pairwiseOverlap" ? ConstraintSpec::Kind::PairwiseOverlap
                                           : ConstraintSpec::Kind::NeighborOverlap;
        c.min = opt_int("min");
        c.max = opt_int("max");
    } else {
        throw std::invalid_argument("unknown constraint kind \"" + kind + "\"");
    }
    c.check();
    return c;
}

inline json constraint_to_json(const ConstraintSpec& c) {
    json j;
    switch (c.kind) {
    case ConstraintSpec::Kind::ForallQuestions:
        j["kind"] = "forallQuestions";
        j["predicate"] = predicate_to_json(c.predicate);
        break;
    case ConstraintSpec::Kind::CountScope:
    case ConstraintSpec::Kind::ExamCount:
        j["kind"] = c.kind == ConstraintSpec::Kind::CountScope ? "countScope" : "examCount";
        j["predicate"] = predicate_to_json(c.predicate);
        if (c.min) j["min"] = *c.min;
        if (c.max) j["max"] = *c.max;
        break;
    case ConstraintSpec::Kind::PercentScope:
        j["kind"] = "percentScope";
        j["predicate"] = predicate_to_json(c.predicate);
        if (c.pMin) j["pMin"] = c.pMin->to_double();
        if (c.pMax) j["pMax"] = c.pMax->to_double();
        break;
    case ConstraintSpec::Kind::Aggregate:
        j["kind"] = "aggregate";
        j["fn"] = aggregate_fn_to_string(c.fn);
        j["property"] = c.property;
        j["lo"] = detail::rational_to_json(c.lo);
        j["hi"] = detail::rational_to_json(c.hi);
        break;
    case ConstraintSpec::Kind::PairwiseOverlap:
    case ConstraintSpec::Kind::NeighborOverlap:
        j["kind"] =
            c.kind == ConstraintSpec::Kind::PairwiseOverlap ? "pairwiseOverlap" : "neighborOverlap";
        if (c.min) j["min"] = *c.min;
        if (c.max) j["max"] = *c.max;
        break;
    case ConstraintSpec::Kind::StudentScoped:
        throw std::logic_error("student constraints serialize through the task");
    }
    return j;
}

// ---- task -----------------------------------------------------------------

inline MultiExamTask task_from_json(const json& j) {
    detail::reject_unknown(j, {"exams", "cardinality", "seating", "constraints", "studentConstraints"},
                           "task");
    MultiExamTask task;
    task.examCount = detail::get_int(j, "exams", "task");
    const json& card = j.at("cardinality");
    detail::reject_unknown(card, {"min", "max"}, "cardinality");
    task.cardMin = detail::get_int(card, "min", "cardinality");
    task.cardMax = detail::get_int(card, "max", "cardinality");

    const json& seating = j.at("seating");
    if (seating.is_null()) {
        task.seating.mode = SeatingSpec::Mode::None;
    } else if (seating.is_string() && seating.get<std::string>() == "auto") {
        task.seating.mode = SeatingSpec::Mode::Auto;
    } else if (seating.is_object()) {
        detail::reject_unknown(seating, {"rows", "seatsPerRow"}, "seating");
        task.seating.mode = SeatingSpec::Mode::Explicit;
        task.seating.rows = detail::get_int(seating, "rows", "seating");
        task.seating.seatsPerRow = detail::get_int(seating, "seatsPerRow", "seating");
    } else {
        throw std::invalid_argument("seating must be an object, \"auto\", or null");
    }

    for (const json& cj : j.at("constraints")) task.constraints.push_back(constraint_from_json(cj));
    if (j.contains("studentConstraints")) {
        for (const json& sj : j.at("studentConstraints")) {
            detail::reject_unknown(sj, {"exam", "constraint"}, "student constraint");
            ConstraintSpec c;
            c.kind = ConstraintSpec::Kind::StudentScoped;
            c.examIndex = detail::get_int(sj, "exam", "student constraint");
            c.inner = std::make_shared<ConstraintSpec>(constraint_from_json(sj.at("constraint")));
            c.check();
            task.constraints.push_back(std::move(c));
        }
    }
    return task;
}

inline json task_to_json(const MultiExamTask& task) {
    json constraints = json::array();
    json students = json::array();
    for (const ConstraintSpec& c : task.constraints) {
        if (c.kind == ConstraintSpec::Kind::StudentScoped)
            students.push_back({{"exam", c.examIndex}, {"constraint", constraint_to_json(*c.inner)}});
        else
            constraints.push_back(constraint_to_json(c));
    }
    json seating;
    switch (task.seating.mode) {
    case SeatingSpec::Mode::None: seating = nullptr; break;
    case SeatingSpec::Mode::Auto: seating = "auto"; break;
    case SeatingSpec::Mode::Explicit:
        seating = {{"rows", task.seating.rows}, {"seatsPerRow", task.seating.seatsPerRow}};
        break;
    }
    return {{"exams", task.examCount},
            {"cardinality", {{"min", task.cardMin}, {"max", task.cardMax}}},
            {"seating", seating},
            {"constraints", constraints},
            {"studentConstraints", students}};
}

// ---- solution -------------------------------------------------------------

inline Solution solution_from_json(const json& j) {
    detail::reject_unknown(j, {"exams", "stats"}, "solution");
    Solution sol;
    for (const json& ej : j.at("exams")) {
        detail::reject_unknown(ej, {"index", "seat", "questions"}, "solution exam");
        ExamResult ex;
        ex.index = detail::get_int(ej, "index", "solution exam");
        const json& seat = ej.at("seat");
        if (!seat.is_null()) {
            detail::reject_unknown(seat, {"row", "seat"}, "seat");
            ex.seat = Seat{detail::get_int(seat, "row", "seat"),
                           detail::get_int(seat, "seat", "seat")};
        }
        for (const json& q : ej.at("questions")) ex.questions.push_back(q.get<int>());
        sol.exams.push_back(std::move(ex));
    }
    if (j.contains("stats")) {
        const json& st = j.at("stats");
        detail::reject_unknown(st, {"wallMillis", "nodes", "backtracks"}, "stats");
        if (st.contains("nodes")) sol.nodes = st["nodes"].get<std::uint64_t>();
        if (st.contains("backtracks")) sol.backtracks = st["backtracks"].get<std::uint64_t>();
        if (st.contains("wallMillis")) sol.wallMillis = st["wallMillis"].get<std::int64_t>();
    }
    return sol;
}

/// Serializes a solution. Wall time deliberately stays out of the file (it is
/// reported on stderr by the CLI) so identical runs produce identical bytes.
inline json solution_to_json(const Solution& sol) {
    json exams = json::array();
    for (const ExamResult& ex : sol.exams) {
        json seat;
        if (ex.seat) seat = {{"row", ex.seat->row}, {"seat", ex.seat->seat}};
        else seat = nullptr;
        exams.push_back({{"index", ex.index}, {"seat", seat}, {"questions", ex.questions}});
    }
    return {{"exams", exams},
            {"stats", {{"nodes", sol.nodes}, {"backtracks", sol.backtracks}}}};
}

// ---- files ----------------------------------------------------------------

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return j;
}

inline void save_json(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace io
} // namespace multiconf

#endif
