#pragma once

#include "mindeg/perm_group.hpp"

namespace mindeg {

/// Sym(n) on n points, generated by the adjacent transpositions.
PermGroup symmetric_group(std::size_t n);

/// Alt(n) on n points, generated by 3-cycles (1 2 i).
PermGroup alternating_group(std::size_t n);

/// C_n acting regularly (an n-cycle); the trivial group for n = 1.
PermGroup cyclic_regular(std::size_t n);

/// Dihedral group of order 2m: the natural m-gon action for m >= 3,
/// C2 on 2 points for m = 1, Klein four on 4 points for m = 2.
PermGroup dihedral_group(std::size_t m);

/// The trivial group at a stated degree.
PermGroup trivial_group(std::size_t degree);

} // namespace mindeg
