#ifndef MULTICONF_MODEL_QUESTION_HPP
#define MULTICONF_MODEL_QUESTION_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace multiconf {

/// Sizes of the six property domains: topic in 1..topics, level in 1..levels,
/// min-duration in 1..maxMinDuration, max-duration in 1..maxMaxDuration,
/// type in 1..types, points in 1..maxPoints.
struct PropertyDomains {
    int topics = 4;
    int levels = 4;
    int maxMinDuration = 30;
    int maxMaxDuration = 60;
    int types = 3;
    int maxPoints = 6;
};

struct Question {
    int id = 0; // 1..pool size, contiguous
    int topic = 0;
    int level = 0;
    int minDuration = 0;
    int maxDuration = 0;
    int qtype = 0;
    int points = 0;
};

/// Returns a question's property by its external name.
inline int property_value(const Question& q, std::string_view name) {
    if (name == "topic") return q.topic;
    if (name == "level") return q.level;
    if (name == "min-duration") return q.minDuration;
    if (name == "max-duration") return q.maxDuration;
    if (name == "type") return q.qtype;
    if (name == "points") return q.points;
    throw std::invalid_argument("unknown question property: " + std::string(name));
}

inline bool is_property_name(std::string_view name) {
    return name == "topic" || name == "level" || name == "min-duration" ||
           name == "max-duration" || name == "type" || name == "points";
}

/// The question universe: ids exactly 1..size(), each property inside its
/// declared domain, minDuration <= maxDuration.
struct QuestionPool {
    PropertyDomains domains;
    std::vector<Question> questions;

    int size() const { return static_cast<int>(questions.size()); }
    const Question& question(int id) const { return questions[id - 1]; }

    void check() const {
        if (questions.empty()) throw std::invalid_argument("question pool is empty");
        auto in = [](int v, int hi) { return v >= 1 && v <= hi; };
        for (int i = 0; i < size(); ++i) {
            const Question& q = questions[i];
            if (q.id != i + 1)
                throw std::invalid_argument("question ids must be contiguous from 1");
            if (!in(q.topic, domains.topics) || !in(q.level, domains.levels) ||
                !in(q.minDuration, domains.maxMinDuration) ||
                !in(q.maxDuration, domains.maxMaxDuration) || !in(q.qtype, domains.types) ||
                !in(q.points, domains.maxPoints))
                throw std::invalid_argument("question " + std::to_string(q.id) +
                                            ": property outside its domain");
            if (q.minDuration > q.maxDuration)
                throw std::invalid_argument("question " + std::to_string(q.id) +
                                            ": min-duration exceeds max-duration");
        }
    }
};

} // namespace multiconf

#endif
