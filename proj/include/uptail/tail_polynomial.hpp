#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uptail/digraph.hpp"

namespace uptail {

// Sparse polynomial in x1, x2, min(x1,x2), y1, y2, min(y1,y2). One term per
// independent set of the max-degree core before merging; x3/y3 hold the
// exponents of the min factors.
struct TailPolynomial {
    struct Term {
        std::int64_t coeff = 0;
        int x1 = 0, x2 = 0, x3 = 0;
        int y1 = 0, y2 = 0, y3 = 0;
        bool operator==(const Term&) const = default;
    };
    std::vector<Term> terms;  // merged, sorted by exponent vector

    bool operator==(const TailPolynomial&) const = default;
};

// Builders. Per set S the x-part is x1^{v+} x2^{v-} min(x1,x2)^{v+-}; the
// y-part distinguishes the three variants:
//   build_f:    y1^{|N+(S)|} y2^{|N-(S)|}
//   build_g:    y1^{a_S} y2^{b_S}           (directional matching weights)
//   build_fbar: y1^{|N+ only|} y2^{|N- only|} min(y1,y2)^{|N+ and N-|}
// All three share the constant term 1 contributed by the empty set.
TailPolynomial build_f(const Digraph& g, int cap = 26);
TailPolynomial build_g(const Digraph& g, int cap = 26);
TailPolynomial build_fbar(const Digraph& g, int cap = 26);

// Plain evaluation; 0^0 counts as 1 so boundary slices behave.
double evaluate(const TailPolynomial& p, double x1, double x2, double y1, double y2);

// Substitute y2 = 1. On the domain y1 <= 1 this turns min(y1,y2) into y1, so
// the result is again a TailPolynomial (y2 and y3 exponents vanish). The
// restriction of fbar and f to this slice must agree term by term.
TailPolynomial substitute_y2_one(const TailPolynomial& p);

// "(x1^2)(x1&x2^1)(y1^3)" style rendering, '&' meaning the min factor,
// terms in sorted exponent order. Constant terms print as plain integers.
std::string to_string(const TailPolynomial& p);

}  // namespace uptail
