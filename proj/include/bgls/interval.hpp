#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "bgls/numerics.hpp"

namespace bgls {

// Open exponent interval (a, b), 1 <= a < b <= +inf. Norms and psi functions
// are only ever evaluated strictly inside it.
struct Interval {
    double a = 1.0;
    double b = 2.0;

    Interval() = default;
    Interval(double a_, double b_) : a(a_), b(b_) {
        if (!(a >= 1.0) || !std::isfinite(a))
            throw std::invalid_argument("Interval: require finite a >= 1");
        if (!(b > a)) throw std::invalid_argument("Interval: require b > a");
    }

    bool b_infinite() const { return std::isinf(b); }

    bool contains(double p) const { return std::isfinite(p) && p > a && p < b; }

    // Map grid coordinate u in (0,1) to p in (a,b). Finite b: affine. For
    // b = +inf the map a + u/(1-u) sends u -> 1 to p -> inf.
    double p_of_u(double u) const {
        if (b_infinite()) return a + u / (1.0 - u);
        return a + (b - a) * u;
    }

    std::string str() const {
        return "(" + std::to_string(a) + ", " + (b_infinite() ? "inf" : std::to_string(b)) + ")";
    }

    friend bool operator==(const Interval& x, const Interval& y) {
        return x.a == y.a && (x.b == y.b || (x.b_infinite() && y.b_infinite()));
    }
};

}  // namespace bgls
