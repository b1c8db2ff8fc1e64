#pragma once

#include <string>
#include <vector>

#include "mindeg/perm_group.hpp"
#include "mindeg/root_system.hpp"

namespace mindeg {

/// The Coxeter group of the given type acting on its canonically ordered root
/// system; the group's generators are the simple reflections, in order.
PermGroup coxeter_group(char family, unsigned rank);
PermGroup coxeter_group(const RootSystem& rs);

/// Natural classical actions: W(A_n) = Sym(n+1); W(B_n) as signed permutations
/// on 2n points (point i = +e_{i+1}, point n+i = -e_{i+1}); W(D_n) as the
/// even-sign subgroup; W(I2(m)) as the dihedral group of order 2m.
PermGroup natural_classical(char family, unsigned n);

/// Subgroup generated by {s_1 * s_i, i >= 2}; checked to have index exactly 2.
PermGroup rotation_subgroup(const PermGroup& w, const std::vector<Permutation>& simple_gens);

/// Binary polyhedral groups as regular permutation groups built from their
/// unit-quaternion element lists (2T, 2O, 2I) or the binary dihedral and
/// cyclic presentations (2D_m, C_m).
PermGroup binary_tetrahedral();
PermGroup binary_octahedral();
PermGroup binary_icosahedral();
PermGroup binary_dihedral(unsigned m); // order 4m
PermGroup binary_cyclic(unsigned m);   // C_m

/// Q8 inside W(D4): the three signed permutations of the quaternion action on
/// the basis {1, i, j, k}.
PermGroup q8_signed();

/// The monomial reflection group G(m, p, n), p | m, on m*n points.
PermGroup monomial_group(unsigned m, unsigned p, unsigned n);

/// W(E6) acting on the 27 antipodal pairs of E7 roots outside the E6 span.
PermGroup e6_on_27();

} // namespace mindeg
