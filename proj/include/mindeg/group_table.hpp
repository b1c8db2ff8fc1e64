#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "mindeg/perm_group.hpp"

namespace mindeg {

/// Bitset over the element indices of a GroupTable.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { w_[i >> 6] |= (1ULL << (i & 63)); }
    std::size_t count() const;

    Bitset& operator&=(const Bitset& o);
    Bitset& operator|=(const Bitset& o);
    bool operator==(const Bitset&) const = default;
    bool operator<(const Bitset& o) const { return w_ < o.w_; }

    /// True if every set bit of this is also set in o.
    bool subset_of(const Bitset& o) const;

    std::vector<std::uint32_t> to_indices() const;
    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const;
};

/// Fixed element enumeration of a small group, with multiplication either
/// through a dense index table (needed by the lattice search) or through
/// permutation composition plus a hash lookup.
class GroupTable {
public:
    GroupTable(PermGroup group, std::size_t cap = kDefaultElementCap);

    const PermGroup& group() const { return group_; }
    std::size_t size() const { return elems_.size(); }
    const std::vector<Permutation>& elements() const { return elems_; }
    const Permutation& element(std::uint32_t i) const { return elems_[i]; }
    std::uint32_t identity() const { return id_; }
    std::uint32_t index_of(const Permutation& p) const;

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
    std::uint32_t conj(std::uint32_t x, std::uint32_t g) const { return mul(mul(inv_[g], x), g); }
    unsigned element_order(std::uint32_t a) const;

    /// Indices of the group's generators in the enumeration.
    const std::vector<std::uint32_t>& generator_indices() const { return gen_idx_; }

    void build_mul_table();
    bool has_mul_table() const { return !table_.empty(); }

    /// Subgroup generated by the given element indices, as a bitset.
    Bitset closure(const std::vector<std::uint32_t>& gens) const;

private:
    PermGroup group_;
    std::vector<Permutation> elems_;
    std::unordered_map<Permutation, std::uint32_t, PermHash> index_;
    std::vector<std::uint32_t> inv_;
    std::vector<std::uint32_t> gen_idx_;
    std::uint32_t id_ = 0;
    std::vector<std::uint32_t> table_; // row-major n*n when built
};

using TablePtr = std::shared_ptr<const GroupTable>;

/// A subgroup of a GroupTable's group: member bitset + a small generating set.
struct Subgroup {
    TablePtr parent;
    Bitset members;
    std::vector<std::uint32_t> generator_hints;
    std::size_t order = 0;

    bool contains(std::uint32_t e) const { return members.test(e); }
    std::vector<std::uint32_t> element_indices() const { return members.to_indices(); }
};

Subgroup subgroup_generated(TablePtr table, const std::vector<std::uint32_t>& gens);
Subgroup subgroup_from_members(TablePtr table, Bitset members);
Subgroup trivial_subgroup(TablePtr table);
Subgroup full_subgroup(TablePtr table);

} // namespace mindeg
