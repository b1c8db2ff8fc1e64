// Long-running acceptance checks (larger lattice enumerations).
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mindeg/coxeter.hpp"
#include "mindeg/group_ops.hpp"
#include "mindeg/lattice.hpp"
#include "mindeg/mu.hpp"

using namespace mindeg;

namespace {

int failures = 0;

void line(int n, bool ok, const std::string& msg) {
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - " << msg << std::endl;
    if (!ok) ++failures;
}

LatticeOptions heavy_opts() {
    LatticeOptions o;
    o.max_group_order = kLatticeHardCeiling;
    o.threads = 4;
    return o;
}

void criterion_3() {
    auto cert = minimal_degree(natural_classical('D', 5), heavy_opts());
    std::ostringstream msg;
    msg << "mu(W(D5))=" << cert.value << " (expect 10; exact search at order 1920)";
    line(3, cert.value == 10, msg.str());
}

void criterion_8() {
    auto rs = root_system('F', 4);
    PermGroup w = coxeter_group(rs);
    auto cert = minimal_degree(w, heavy_opts());
    // restrict the action to one root-length class: 24 points, still faithful
    std::vector<std::size_t> cls;
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
        if (rs.length_class[i] == 0) cls.push_back(i);
    std::vector<std::size_t> slot(rs.roots.size(), SIZE_MAX);
    for (std::size_t k = 0; k < cls.size(); ++k) slot[cls[k]] = k;
    std::vector<Permutation> gens;
    for (const auto& g : w.generators()) {
        std::vector<Pt> img(cls.size());
        for (std::size_t k = 0; k < cls.size(); ++k)
            img[k] = static_cast<Pt>(slot[g(static_cast<Pt>(cls[k]))]);
        gens.emplace_back(std::move(img));
    }
    PermGroup on_class(cls.size(), gens);
    bool upper = on_class.degree() == 24 && on_class.order() == w.order();
    std::ostringstream msg;
    msg << "mu(W(F4))=" << cert.value << " (expect 24; order-1152 exact search); action on one "
        << "root-length class: degree " << on_class.degree() << ", image order "
        << on_class.order() << (upper ? " (faithful upper bound)" : " (NOT faithful)");
    line(8, cert.value == 24 && upper, msg.str());
}

void criterion_9() {
    PermGroup tt = direct_product(binary_tetrahedral(), binary_tetrahedral());
    auto direct = minimal_degree(tt, heavy_opts());
    auto cp = minimal_degree(central_product(binary_tetrahedral(), binary_tetrahedral()),
                             heavy_opts());
    bool ok = direct.value == 16 && cp.value == 24 && cp.value > direct.value;
    std::ostringstream msg;
    msg << "mu(T x T)=" << direct.value << " (expect 16) < mu(T o T)=" << cp.value
        << " (expect 24): the proper quotient has the larger minimal degree";
    line(9, ok, msg.str());
}

void criterion_13() {
    struct Case {
        unsigned m, p, n;
        std::size_t expect;
    };
    bool ok = true;
    std::ostringstream msg;
    for (const Case& c : {Case{5, 5, 3, 15}, Case{4, 4, 3, 12}, Case{2, 2, 5, 10}}) {
        PermGroup g = monomial_group(c.m, c.p, c.n);
        auto cert = minimal_degree(g, heavy_opts());
        PermGroup cz = centralizer_in_sym(g);
        bool nontrivial = cz.order() > 1;
        bool meets_trivially = true;
        for (const auto& x : cz.elements())
            if (!x.is_identity() && g.contains(x)) meets_trivially = false;
        std::vector<Permutation> gens = g.generators();
        for (const auto& x : cz.generators()) gens.push_back(x);
        PermGroup joint(g.degree(), gens);
        bool product = joint.order() == g.order() * cz.order();
        // mu(G) = deg and the faithful joint action on the same deg points give
        // mu(G) <= mu(G x C) <= deg = mu(G), strictly below mu(G) + mu(C).
        bool exact = cert.value == c.expect && cert.value == g.degree();
        if (!(nontrivial && meets_trivially && product && exact)) ok = false;
        msg << "G(" << c.m << "," << c.p << "," << c.n << "): mu=" << cert.value << " (expect "
            << c.expect << "), |C|=" << cz.order() << ", G meets C "
            << (meets_trivially ? "trivially" : "NONTRIVIALLY") << ", |<G,C>|="
            << joint.order() << "; mu(G x C)=" << g.degree() << " < mu(G)+mu(C).  ";
    }
    line(13, ok, msg.str());
}

// mu(I o I) by enumerating only the subgroups avoiding the central involution:
// those form a join-closed family (every subgroup of a z-free group is z-free,
// and a z-free subgroup is a join of z-free cyclic ones), so saturation with
// pruning is exhaustive without touching the full lattice.
void criterion_14() {
    if (!std::getenv("MINDEG_STRETCH")) {
        std::cout << "criterion 14: SKIP (optional stretch; set MINDEG_STRETCH=1 to run)"
                  << std::endl;
        return;
    }
    PermGroup g = central_product(binary_icosahedral(), binary_icosahedral());
    GroupTable raw(g);
    raw.build_mul_table(); // ~200 MB, turns each product into a table lookup
    auto table = std::make_shared<const GroupTable>(std::move(raw));
    const std::size_t n = table->size();

    auto mn = minimal_normal_subgroups(table);
    bool unique_min = mn.size() == 1 && mn[0].order == 2;
    auto zidx = mn[0].members.to_indices();
    std::uint32_t z = zidx[0] == table->identity() ? zidx[1] : zidx[0];

    auto closure_zfree = [&](std::vector<std::uint32_t> gens) -> std::optional<Bitset> {
        Bitset m(n);
        m.set(table->identity());
        std::vector<std::uint32_t> stack{table->identity()};
        for (auto e : gens)
            if (!m.test(e)) {
                m.set(e);
                stack.push_back(e);
            }
        std::vector<std::uint32_t> elems = stack;
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (auto e : gens) {
                std::uint32_t x = table->mul(elems[i], e);
                if (x == z) return std::nullopt;
                if (!m.test(x)) {
                    m.set(x);
                    elems.push_back(x);
                }
            }
        return m;
    };

    std::map<std::vector<std::uint64_t>, std::vector<std::uint32_t>> seen; // words -> gens
    std::vector<std::pair<Bitset, std::vector<std::uint32_t>>> work;
    for (std::uint32_t e = 0; e < n; ++e) {
        if (e == table->identity()) continue;
        auto m = closure_zfree({e});
        if (m && seen.emplace(m->words(), std::vector<std::uint32_t>{e}).second)
            work.push_back({*m, {e}});
    }
    std::size_t best = 1;
    Bitset best_members(n);
    best_members.set(table->identity());
    for (std::size_t i = 0; i < work.size(); ++i) {
        const auto [members, gens] = work[i];
        if (members.count() > best) {
            best = members.count();
            best_members = members;
        }
        std::vector<bool> done(n, false);
        for (std::uint32_t x = 0; x < n; ++x) {
            if (done[x] || members.test(x) || x == z) continue;
            for (auto h : members.to_indices()) done[table->mul(h, x)] = true;
            auto gens2 = gens;
            gens2.push_back(x);
            auto m = closure_zfree(gens2);
            if (m && seen.emplace(m->words(), gens2).second) work.push_back({*m, gens2});
        }
    }
    // faithfulness of the best coset action: z-free = core-free here, since the
    // unique minimal normal subgroup is <z>
    auto h = subgroup_from_members(table, best_members);
    auto act = coset_action(table, h);
    bool faithful = act.kernel.order == 1 && act.action.order() == BigInt(n);
    std::size_t value = n / best;
    bool ok = unique_min && value == 120 && faithful;
    std::ostringstream msg;
    msg << "mu(I o I)=" << value << " (expect 120): searched " << work.size()
        << " subgroups avoiding the central involution; largest has order " << best
        << "; coset action faithful=" << faithful;
    line(14, ok, msg.str());
}

} // namespace

int main() {
    criterion_3();
    criterion_8();
    criterion_9();
    criterion_13();
    criterion_14();
    std::cout << (failures == 0 ? "all criteria in this suite passed"
                                : std::to_string(failures) + " criterion(s) failed")
              << std::endl;
    return failures;
}
