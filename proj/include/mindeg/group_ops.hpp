#pragma once

#include <vector>

#include "mindeg/group_table.hpp"
#include "mindeg/perm_group.hpp"

namespace mindeg {

/// G x H on the disjoint union of their point sets.
PermGroup direct_product(const PermGroup& g, const PermGroup& h);

struct CosetActionResult {
    PermGroup action;                       // on |G:H| points
    Subgroup kernel;                        // = core_G(H)
    std::vector<std::uint32_t> point_labels; // coset representative element per point
};

/// Action of G on the right cosets of H; the kernel is core_G(H).
CosetActionResult coset_action(const TablePtr& g, const Subgroup& h);

/// Largest normal subgroup of G contained in H, as the kernel of the coset action.
Subgroup core(const TablePtr& g, const Subgroup& h);

/// Faithful image of G/N acting regularly on the cosets of a normal subgroup N.
PermGroup quotient_regular(const TablePtr& g, const Subgroup& n);

Subgroup center(const TablePtr& g);

/// Smallest normal subgroup containing the given elements.
Subgroup normal_closure(const TablePtr& g, const std::vector<std::uint32_t>& elems);

/// All inclusion-minimal nontrivial normal subgroups, via normal closures of
/// prime-order elements. Canonically sorted.
std::vector<Subgroup> minimal_normal_subgroups(const TablePtr& g);

/// Central product G o H: the quotient of G x H by the anti-diagonal
/// {(z, iso(z)^-1)} of the designated central cyclic subgroups <zg> and <zh>.
PermGroup central_product(const PermGroup& g, const PermGroup& h,
                          const Permutation& zg, const Permutation& zh);

/// As above with <zg>, <zh> taken as the full centers, which must be cyclic
/// of equal prime order.
PermGroup central_product(const PermGroup& g, const PermGroup& h);

/// Full centralizer of a transitive group in Sym(degree); always semiregular.
PermGroup centralizer_in_sym(const PermGroup& g);

struct AbelianType {
    std::vector<std::uint64_t> factors; // prime powers, sorted descending
};

/// Primary cyclic decomposition of an abelian group, from element-order counts.
AbelianType abelian_invariants(const TablePtr& g);

struct Submodule {
    unsigned n = 0;
    unsigned p = 0;
    std::vector<std::uint32_t> vectors; // sorted codes, digits base p
};

/// All submodules of C_p^n invariant under Alt(n) (use_alt) or Sym(n).
std::vector<Submodule> invariant_submodules(unsigned n, unsigned p, bool use_alt);

/// Code helpers for Submodule vectors.
std::uint32_t submodule_code(const std::vector<unsigned>& digits, unsigned p);

} // namespace mindeg
