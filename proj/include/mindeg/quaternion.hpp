#pragma once

#include <array>

#include "mindeg/quadnum.hpp"

namespace mindeg {

/// Quaternion a + bi + cj + dk over an exact scalar type.
template <typename S>
struct Quaternion {
    S a, b, c, d;

    friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
        return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
                x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
                x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
                x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
    }
    Quaternion operator-() const { return {-a, -b, -c, -d}; }

    S norm() const { return a * a + b * b + c * c + d * d; }

    bool operator==(const Quaternion&) const = default;
    friend bool operator<(const Quaternion& x, const Quaternion& y) {
        if (!(x.a == y.a)) return x.a < y.a;
        if (!(x.b == y.b)) return x.b < y.b;
        if (!(x.c == y.c)) return x.c < y.c;
        return x.d < y.d;
    }
};

} // namespace mindeg
