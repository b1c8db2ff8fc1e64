#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mindeg/group_ops.hpp"
#include "mindeg/named_groups.hpp"

using namespace mindeg;

namespace {

// Q8 in its regular representation: points 1..8 = 1,i,j,k,-1,-i,-j,-k,
// generators = left multiplication by i and by j.
PermGroup q8_regular() {
    auto gi = from_cycles(8, {{1, 2, 5, 6}, {3, 4, 7, 8}});
    auto gj = from_cycles(8, {{1, 3, 5, 7}, {2, 8, 6, 4}});
    return PermGroup(8, {gi, gj});
}

TablePtr table_of(const PermGroup& g) { return std::make_shared<const GroupTable>(g); }

} // namespace

TEST_CASE("direct product") {
    auto c2 = cyclic_regular(2);
    auto v4 = direct_product(c2, c2);
    CHECK(v4.degree() == 4);
    CHECK(v4.order() == 4);
    auto t = direct_product(symmetric_group(3), symmetric_group(4));
    CHECK(t.order() == 144);
    CHECK(t.orbits().size() == 2);
}

TEST_CASE("coset action on a point stabilizer is the natural action") {
    auto s4 = symmetric_group(4);
    auto t = table_of(s4);
    auto h = subgroup_generated(
        t, {t->index_of(from_cycles(4, {{2, 3}})), t->index_of(from_cycles(4, {{3, 4}}))});
    CHECK(h.order == 6);
    auto res = coset_action(t, h);
    CHECK(res.action.degree() == 4);
    CHECK(res.action.order() == 24);
    CHECK(res.kernel.order == 1);
}

TEST_CASE("coset action modulo <i> in Q8") {
    auto q8 = q8_regular();
    auto t = table_of(q8);
    auto i = subgroup_generated(t, {t->index_of(q8.generators()[0])});
    CHECK(i.order == 4);
    auto res = coset_action(t, i);
    CHECK(res.action.degree() == 2);
    CHECK(res.kernel.order == 4);
    CHECK(res.kernel.members == i.members);
}

TEST_CASE("cores in Sym(4)") {
    auto s4 = symmetric_group(4);
    auto t = table_of(s4);
    auto s3 = subgroup_generated(
        t, {t->index_of(from_cycles(4, {{2, 3}})), t->index_of(from_cycles(4, {{3, 4}}))});
    CHECK(core(t, s3).order == 1);
    // Sylow 2-subgroup (dihedral of order 8); its core is the Klein four group
    auto d8 = subgroup_generated(
        t, {t->index_of(from_cycles(4, {{1, 2, 3, 4}})), t->index_of(from_cycles(4, {{1, 3}}))});
    CHECK(d8.order == 8);
    auto c = core(t, d8);
    CHECK(c.order == 4);
    std::set<Permutation> vexp{Permutation::identity(4), from_cycles(4, {{1, 2}, {3, 4}}),
                               from_cycles(4, {{1, 3}, {2, 4}}), from_cycles(4, {{1, 4}, {2, 3}})};
    for (auto e : c.element_indices()) CHECK(vexp.count(t->element(e)) == 1);
    // core(G, G) = G
    auto full = full_subgroup(t);
    CHECK(core(t, full).order == 24);
}

TEST_CASE("regular quotients") {
    auto q8 = q8_regular();
    auto t = table_of(q8);
    auto minus1 = subgroup_generated(t, {t->index_of(q8.generators()[0] * q8.generators()[0])});
    CHECK(minus1.order == 2);
    auto q = quotient_regular(t, minus1);
    CHECK(q.degree() == 4);
    CHECK(q.order() == 4);
    for (const auto& g : q.generators()) CHECK((g * g).is_identity()); // Klein four
    CHECK(quotient_regular(t, trivial_subgroup(t)).order() == 8);
    // non-normal N rejected
    auto s4 = symmetric_group(4);
    auto ts4 = table_of(s4);
    auto h2 = subgroup_generated(ts4, {ts4->index_of(from_cycles(4, {{1, 2}}))});
    CHECK_THROWS(quotient_regular(ts4, h2));
    CHECK(quotient_regular(ts4, core(ts4, h2)).order() == 24);
}

TEST_CASE("center") {
    CHECK(center(table_of(q8_regular())).order == 2);
    CHECK(center(table_of(symmetric_group(3))).order == 1);
    CHECK(center(table_of(cyclic_regular(6))).order == 6);
}

TEST_CASE("normal closure") {
    auto t = table_of(symmetric_group(4));
    CHECK(normal_closure(t, {t->index_of(from_cycles(4, {{1, 2}}))}).order == 24);
    CHECK(normal_closure(t, {t->index_of(from_cycles(4, {{1, 2}, {3, 4}}))}).order == 4);
    CHECK(normal_closure(t, {t->identity()}).order == 1);
}

TEST_CASE("minimal normal subgroups") {
    auto q8 = minimal_normal_subgroups(table_of(q8_regular()));
    REQUIRE(q8.size() == 1);
    CHECK(q8[0].order == 2);
    auto v4 = minimal_normal_subgroups(table_of(direct_product(cyclic_regular(2), cyclic_regular(2))));
    CHECK(v4.size() == 3);
    auto s4 = minimal_normal_subgroups(table_of(symmetric_group(4)));
    REQUIRE(s4.size() == 1);
    CHECK(s4[0].order == 4);
}

TEST_CASE("central product Q8 o Q8") {
    auto q8 = q8_regular();
    auto g = central_product(q8, q8);
    CHECK(g.order() == 32);
    CHECK(g.degree() == 32);
    CHECK(center(table_of(g)).order == 2);
}

TEST_CASE("centralizer in Sym") {
    auto c6 = centralizer_in_sym(cyclic_regular(6));
    CHECK(c6.order() == 6);
    CHECK(centralizer_in_sym(symmetric_group(4)).order() == 1);
    CHECK_THROWS(centralizer_in_sym(trivial_group(3))); // intransitive: unsupported
    // every centralizing generator commutes with every group generator
    auto g = q8_regular();
    auto c = centralizer_in_sym(g);
    CHECK(c.order() == 8); // regular groups are self-centralizing
    for (const auto& a : c.generators())
        for (const auto& b : g.generators()) CHECK(a * b == b * a);
    // semiregular: only the identity fixes a point
    for (const auto& e : c.elements()) {
        bool fixes = false;
        for (Pt x = 0; x < e.degree(); ++x)
            if (e(x) == x) fixes = true;
        if (fixes) CHECK(e.is_identity());
    }
}

TEST_CASE("abelian invariants") {
    auto c12 = abelian_invariants(table_of(cyclic_regular(12)));
    CHECK(c12.factors == std::vector<std::uint64_t>{4, 3});
    auto e8 = abelian_invariants(table_of(
        direct_product(direct_product(cyclic_regular(2), cyclic_regular(2)), cyclic_regular(2))));
    CHECK(e8.factors == std::vector<std::uint64_t>{2, 2, 2});
    auto c4c6 = direct_product(cyclic_regular(4), cyclic_regular(6));
    // oracle for the 2-part split: 4 solutions of x^2=1 and 8 of x^4=1
    auto tt = table_of(c4c6);
    int sq = 0, q4 = 0;
    for (std::uint32_t e = 0; e < tt->size(); ++e) {
        unsigned o = tt->element_order(e);
        if (4 % o == 0) ++q4;
        if (2 % o == 0) ++sq;
    }
    CHECK(sq == 4);
    CHECK(q4 == 8);
    CHECK(abelian_invariants(tt).factors == std::vector<std::uint64_t>{4, 3, 2});
    CHECK_THROWS(abelian_invariants(table_of(symmetric_group(3))));
}

TEST_CASE("invariant submodules of the permutation module") {
    auto m5 = invariant_submodules(5, 2, true);
    REQUIRE(m5.size() == 4);
    CHECK(m5[0].vectors.size() == 1);  // 0
    CHECK(m5[1].vectors.size() == 2);  // V
    CHECK(m5[2].vectors.size() == 16); // U
    CHECK(m5[3].vectors.size() == 32); // full
    // V not inside U when n is odd
    CHECK_FALSE(std::includes(m5[2].vectors.begin(), m5[2].vectors.end(), m5[1].vectors.begin(),
                              m5[1].vectors.end()));

    auto m4 = invariant_submodules(4, 2, true);
    REQUIRE(m4.size() == 4);
    CHECK(m4[1].vectors.size() == 2);
    CHECK(m4[2].vectors.size() == 8);
    CHECK(std::includes(m4[2].vectors.begin(), m4[2].vectors.end(), m4[1].vectors.begin(),
                        m4[1].vectors.end())); // V inside U for even n

    auto m3 = invariant_submodules(3, 2, false);
    bool has_u = false;
    for (const auto& m : m3)
        if (m.vectors.size() == 4) {
            // deleted permutation module: all even-weight vectors
            has_u = true;
            for (auto code : m.vectors) CHECK(__builtin_popcount(code) % 2 == 0);
        }
    CHECK(has_u);
    CHECK_THROWS(invariant_submodules(25, 2, true));
}
