#include "mindeg/group_table.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mindeg {

std::size_t Bitset::count() const {
    std::size_t n = 0;
    for (auto v : w_) n += std::popcount(v);
    return n;
}

Bitset& Bitset::operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

bool Bitset::subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

std::vector<std::uint32_t> Bitset::to_indices() const {
    std::vector<std::uint32_t> out;
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
        std::uint64_t v = w_[wi];
        while (v) {
            out.push_back(static_cast<std::uint32_t>(wi * 64 + std::countr_zero(v)));
            v &= v - 1;
        }
    }
    return out;
}

std::size_t BitsetHash::operator()(const Bitset& b) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : b.words()) h = (h ^ v) * 0x100000001b3ULL;
    return h;
}

GroupTable::GroupTable(PermGroup group, std::size_t cap) : group_(std::move(group)) {
    elems_ = group_.elements(cap);
    std::sort(elems_.begin(), elems_.end());
    index_.reserve(elems_.size() * 2);
    for (std::uint32_t i = 0; i < elems_.size(); ++i) index_[elems_[i]] = i;
    id_ = index_.at(Permutation::identity(group_.degree()));
    inv_.resize(elems_.size());
    for (std::uint32_t i = 0; i < elems_.size(); ++i) inv_[i] = index_.at(elems_[i].inverse());
    for (const auto& g : group_.generators()) gen_idx_.push_back(index_.at(g));
}

std::uint32_t GroupTable::index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("element not in group");
    return it->second;
}

std::uint32_t GroupTable::mul(std::uint32_t a, std::uint32_t b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elems_.size() + b];
    return index_.at(elems_[a] * elems_[b]);
}

void GroupTable::build_mul_table() {
    if (!table_.empty()) return;
    std::size_t n = elems_.size();
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table_[a * n + b] = index_.at(elems_[a] * elems_[b]);
}

unsigned GroupTable::element_order(std::uint32_t a) const {
    unsigned o = 1;
    std::uint32_t x = a;
    while (x != id_) {
        x = mul(x, a);
        ++o;
    }
    return o;
}

Bitset GroupTable::closure(const std::vector<std::uint32_t>& gens) const {
    Bitset seen(size());
    std::vector<std::uint32_t> work{id_};
    seen.set(id_);
    for (std::size_t i = 0; i < work.size(); ++i)
        for (std::uint32_t g : gens) {
            std::uint32_t y = mul(work[i], g);
            if (!seen.test(y)) {
                seen.set(y);
                work.push_back(y);
            }
        }
    return seen;
}

Subgroup subgroup_generated(TablePtr table, const std::vector<std::uint32_t>& gens) {
    Subgroup s;
    s.parent = table;
    s.members = table->closure(gens);
    s.generator_hints = gens;
    s.order = s.members.count();
    return s;
}

Subgroup subgroup_from_members(TablePtr table, Bitset members) {
    Subgroup s;
    s.parent = table;
    s.members = std::move(members);
    s.order = s.members.count();
    // small generating set, built greedily
    Bitset have(table->size());
    have.set(table->identity());
    for (std::uint32_t e : s.members.to_indices()) {
        if (have.test(e)) continue;
        s.generator_hints.push_back(e);
        have = table->closure(s.generator_hints);
        if (have.count() == s.order) break;
    }
    if (!(have == s.members)) throw std::invalid_argument("member set is not a subgroup");
    return s;
}

Subgroup trivial_subgroup(TablePtr table) {
    return subgroup_generated(table, {});
}

Subgroup full_subgroup(TablePtr table) {
    auto gens = table->generator_indices();
    return subgroup_generated(std::move(table), gens);
}

} // namespace mindeg
