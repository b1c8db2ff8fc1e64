#include "mindeg/named_groups.hpp"

#include <stdexcept>

namespace mindeg {

PermGroup symmetric_group(std::size_t n) {
    if (n == 0) throw std::invalid_argument("Sym(n) needs n >= 1");
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i + 1 < n; ++i)
        gens.push_back(from_cycles(n, {{static_cast<int>(i + 1), static_cast<int>(i + 2)}}));
    return PermGroup(n, std::move(gens));
}

PermGroup alternating_group(std::size_t n) {
    if (n == 0) throw std::invalid_argument("Alt(n) needs n >= 1");
    std::vector<Permutation> gens;
    for (std::size_t i = 3; i <= n; ++i)
        gens.push_back(from_cycles(n, {{1, 2, static_cast<int>(i)}}));
    return PermGroup(n, std::move(gens));
}

PermGroup cyclic_regular(std::size_t n) {
    if (n == 0) throw std::invalid_argument("C_n needs n >= 1");
    if (n == 1) return trivial_group(1);
    std::vector<int> cyc;
    for (std::size_t i = 1; i <= n; ++i) cyc.push_back(static_cast<int>(i));
    return PermGroup(n, {from_cycles(n, {cyc})});
}

PermGroup dihedral_group(std::size_t m) {
    if (m == 0) throw std::invalid_argument("dihedral parameter must be >= 1");
    if (m == 1) return PermGroup(2, {from_cycles(2, {{1, 2}})});
    if (m == 2) return PermGroup(4, {from_cycles(4, {{1, 2}}), from_cycles(4, {{3, 4}})});
    std::vector<int> rot;
    for (std::size_t i = 1; i <= m; ++i) rot.push_back(static_cast<int>(i));
    // reflection fixing point 1: swaps i <-> m+2-i
    std::vector<std::vector<int>> mirror;
    for (std::size_t i = 2; i <= m; ++i) {
        std::size_t j = m + 2 - i;
        if (i < j) mirror.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
    return PermGroup(m, {from_cycles(m, {rot}), from_cycles(m, mirror)});
}

PermGroup trivial_group(std::size_t degree) {
    return PermGroup(degree, {});
}

} // namespace mindeg
