#pragma once

#include <string>
#include <vector>

#include "mindeg/quadnum.hpp"

namespace mindeg {

using RootVec = std::vector<QuadNum>;

/// A finite root system: the reflection closure of a documented set of simple
/// roots, with roots in a canonical order (length class, then coordinates).
struct RootSystem {
    char family = 0;   // 'A','B','D','E','F','H'
    unsigned rank = 0;
    unsigned dim = 0;  // ambient dimension
    std::vector<RootVec> simple_roots;
    std::vector<RootVec> roots;          // canonically ordered
    std::vector<unsigned> length_class;  // per root; classes ordered by norm
    std::vector<std::vector<QuadNum>> gram; // inner products of simple roots
};

QuadNum inner(const RootVec& x, const RootVec& y);

/// Reflection of v in the hyperplane orthogonal to alpha.
RootVec reflect(const RootVec& v, const RootVec& alpha);

/// Build the root system of the given type. Supported: A_n, B_n, D_n (n>=2),
/// E6, E7, E8, F4, H3, H4. I2(m) is handled combinatorially elsewhere.
RootSystem root_system(char family, unsigned rank);

} // namespace mindeg
