#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mindeg {

using Rational = boost::multiprecision::cpp_rational;

/// Exact element a + b*sqrt(D) of a real quadratic field.
template <int D>
struct Quad {
    Rational a;
    Rational b;

    Quad() = default;
    Quad(int v) : a(v) {}
    Quad(Rational av, Rational bv = 0) : a(std::move(av)), b(std::move(bv)) {}

    bool is_zero() const { return a == 0 && b == 0; }

    friend Quad operator+(const Quad& x, const Quad& y) { return {x.a + y.a, x.b + y.b}; }
    friend Quad operator-(const Quad& x, const Quad& y) { return {x.a - y.a, x.b - y.b}; }
    Quad operator-() const { return {-a, -b}; }
    friend Quad operator*(const Quad& x, const Quad& y) {
        return {x.a * y.a + D * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend Quad operator/(const Quad& x, const Quad& y) {
        Rational n = y.a * y.a - D * y.b * y.b; // nonzero for y != 0, D squarefree
        return x * Quad{y.a / n, -y.b / n};
    }

    Quad conjugate() const { return {a, -b}; }

    bool operator==(const Quad&) const = default;
    // fixed component-wise order; used only for canonical sorting, not magnitude
    friend bool operator<(const Quad& x, const Quad& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

using QuadNum = Quad<5>; // the golden-ratio field; tau = (1 + sqrt 5) / 2

inline QuadNum golden_ratio() { return QuadNum{Rational(1, 2), Rational(1, 2)}; }

} // namespace mindeg
