#include "uptail/tail_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include "uptail/matching.hpp"

namespace uptail {

namespace {

using Key = std::tuple<int, int, int, int, int, int>;

TailPolynomial from_map(const std::map<Key, std::int64_t>& acc) {
    TailPolynomial p;
    for (const auto& [k, c] : acc) {
        auto [x1, x2, x3, y1, y2, y3] = k;
        p.terms.push_back({c, x1, x2, x3, y1, y2, y3});
    }
    return p;
}

enum class YKind { Neighborhood, Matching, Split };

TailPolynomial build(const Digraph& g, int cap, YKind kind) {
    std::map<Key, std::int64_t> acc;
    for (const auto& s : enumerate_independent_sets(g, cap)) {
        if (s.empty()) {
            ++acc[{0, 0, 0, 0, 0, 0}];
            continue;
        }
        auto pr = set_profile(g, s);
        int y1 = 0, y2 = 0, y3 = 0;
        switch (kind) {
            case YKind::Neighborhood:
                y1 = pr.a_count;
                y2 = pr.b_count;
                break;
            case YKind::Matching: {
                auto db = directional_bounds(g, s);
                y1 = db.a_weight;
                y2 = db.b_weight;
                break;
            }
            case YKind::Split:
                y1 = pr.n_plus0;
                y2 = pr.n_minus0;
                y3 = pr.n_pm;
                break;
        }
        ++acc[{pr.v_plus, pr.v_minus, pr.v_pm, y1, y2, y3}];
    }
    return from_map(acc);
}

}  // namespace

TailPolynomial build_f(const Digraph& g, int cap) { return build(g, cap, YKind::Neighborhood); }
TailPolynomial build_g(const Digraph& g, int cap) { return build(g, cap, YKind::Matching); }
TailPolynomial build_fbar(const Digraph& g, int cap) { return build(g, cap, YKind::Split); }

namespace {

// Integer powers only; powi(0,0) = 1 keeps boundary slices meaningful.
double powi(double base, int e) {
    double r = 1.0;
    for (; e > 0; --e) r *= base;
    return r;
}

}  // namespace

double evaluate(const TailPolynomial& p, double x1, double x2, double y1, double y2) {
    double x3 = std::min(x1, x2), y3 = std::min(y1, y2);
    double sum = 0.0;
    for (const auto& t : p.terms)
        sum += static_cast<double>(t.coeff) * powi(x1, t.x1) * powi(x2, t.x2) *
               powi(x3, t.x3) * powi(y1, t.y1) * powi(y2, t.y2) * powi(y3, t.y3);
    return sum;
}

TailPolynomial substitute_y2_one(const TailPolynomial& p) {
    std::map<Key, std::int64_t> acc;
    for (const auto& t : p.terms)
        acc[{t.x1, t.x2, t.x3, t.y1 + t.y3, 0, 0}] += t.coeff;
    return from_map(acc);
}

std::string to_string(const TailPolynomial& p) {
    if (p.terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : p.terms) {
        if (!first) out << " + ";
        first = false;
        bool constant = t.x1 == 0 && t.x2 == 0 && t.x3 == 0 && t.y1 == 0 && t.y2 == 0 && t.y3 == 0;
        if (t.coeff != 1 || constant) out << t.coeff;
        auto factor = [&](const char* name, int e) {
            if (e > 0) out << '(' << name << '^' << e << ')';
        };
        factor("x1", t.x1);
        factor("x2", t.x2);
        factor("x1&x2", t.x3);
        factor("y1", t.y1);
        factor("y2", t.y2);
        factor("y1&y2", t.y3);
    }
    return out.str();
}

}  // namespace uptail
