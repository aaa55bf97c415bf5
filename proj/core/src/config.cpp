#include "dentage/config.hpp"

#include <algorithm>

#include "dentage/errors.hpp"

namespace dentage {

std::string to_string(Language lang) {
    return lang == Language::en ? "en" : "es";
}

Language language_from_string(const std::string& s) {
    if (s == "en") return Language::en;
    if (s == "es") return Language::es;
    throw Error::domain("nlg", "UNSUPPORTED_LANGUAGE", "unsupported language '" + s + "'");
}

std::string to_string(ReportKind kind) {
    return kind == ReportKind::brief ? "short" : "detailed";
}

ReportKind report_kind_from_string(const std::string& s) {
    if (s == "short") return ReportKind::brief;
    if (s == "detailed") return ReportKind::detailed;
    throw Error::domain("app", "UNSUPPORTED_DETAIL", "unsupported detail level '" + s + "'");
}

PiecewiseLinear::PiecewiseLinear(std::vector<std::pair<double, double>> points, bool clamp_left,
                                 bool clamp_right)
    : points_(std::move(points)), clamp_left_(clamp_left), clamp_right_(clamp_right) {
    if (points_.empty()) {
        throw Error::domain("config", "EMPTY_MEMBERSHIP", "a membership needs at least one knot");
    }
    if (!std::is_sorted(points_.begin(), points_.end(),
                        [](const auto& a, const auto& b) { return a.first < b.first; })) {
        throw Error::domain("config", "UNSORTED_MEMBERSHIP", "membership knots must ascend in x");
    }
}

double PiecewiseLinear::operator()(double x) const {
    const auto& pts = points_;
    if (x < pts.front().first) return clamp_left_ ? pts.front().second : 0.0;
    if (x > pts.back().first) return clamp_right_ ? pts.back().second : 0.0;
    if (pts.size() == 1) return x == pts.front().first ? pts.front().second : 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (x <= pts[i].first) {
            const auto& [x0, y0] = pts[i - 1];
            const auto& [x1, y1] = pts[i];
            if (x1 == x0) return y1;
            const double t = (x - x0) / (x1 - x0);
            return y0 + t * (y1 - y0);
        }
    }
    return pts.back().second;
}

const PiecewiseLinear& QuantifierConfig::active_quantifier() const {
    auto it = definitions.find(active);
    if (it == definitions.end()) {
        throw Error::domain("config", "UNKNOWN_QUANTIFIER",
                            "active quantifier '" + active + "' is not defined");
    }
    return it->second;
}

}  // namespace dentage
