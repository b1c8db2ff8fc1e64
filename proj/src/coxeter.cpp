#include "mindeg/coxeter.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "mindeg/named_groups.hpp"
#include "mindeg/quaternion.hpp"

namespace mindeg {

namespace {

template <typename S>
PermGroup regular_from_quaternions(std::vector<Quaternion<S>> elems) {
    std::sort(elems.begin(), elems.end());
    std::map<Quaternion<S>, Pt> index;
    for (Pt i = 0; i < elems.size(); ++i) {
        if (!(elems[i].norm() == S(1))) throw std::logic_error("non-unit quaternion in element list");
        index[elems[i]] = i;
    }
    if (index.size() != elems.size()) throw std::logic_error("duplicate quaternion in element list");
    auto mul_idx = [&](Pt x, Pt y) {
        auto it = index.find(elems[x] * elems[y]);
        if (it == index.end()) throw std::logic_error("quaternion list not closed under product");
        return it->second;
    };
    Pt one = index.at(Quaternion<S>{S(1), S(0), S(0), S(0)});

    // deterministic greedy generating set over the canonical element order
    std::vector<Pt> gens;
    std::vector<char> closed(elems.size(), 0);
    std::vector<Pt> members{one};
    closed[one] = 1;
    std::size_t have = 1;
    for (Pt e = 0; e < elems.size() && have < elems.size(); ++e) {
        if (closed[e]) continue;
        gens.push_back(e);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (Pt g : gens) {
                Pt y = mul_idx(members[i], g);
                if (!closed[y]) {
                    closed[y] = 1;
                    members.push_back(y);
                    ++have;
                }
            }
    }

    // right regular action: x -> x * g, a homomorphism under left-to-right
    // composition
    std::vector<Permutation> perms;
    for (Pt g : gens) {
        std::vector<Pt> img(elems.size());
        for (Pt x = 0; x < elems.size(); ++x) img[x] = mul_idx(x, g);
        perms.emplace_back(std::move(img));
    }
    return PermGroup(static_cast<Pt>(elems.size()), perms);
}

template <typename S>
std::vector<Quaternion<S>> hurwitz_units() {
    std::vector<Quaternion<S>> out;
    for (unsigned pos = 0; pos < 4; ++pos)
        for (int sgn : {1, -1}) {
            S c[4] = {S(0), S(0), S(0), S(0)};
            c[pos] = S(sgn);
            out.push_back({c[0], c[1], c[2], c[3]});
        }
    S half{Rational(1, 2)};
    for (int s0 : {1, -1})
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1})
                    out.push_back({S(s0) * half, S(s1) * half, S(s2) * half, S(s3) * half});
    return out;
}

} // namespace

PermGroup coxeter_group(const RootSystem& rs) {
    std::map<RootVec, Pt> index;
    for (Pt i = 0; i < rs.roots.size(); ++i) index[rs.roots[i]] = i;
    std::vector<Permutation> gens;
    for (const auto& alpha : rs.simple_roots) {
        std::vector<Pt> img(rs.roots.size());
        for (Pt i = 0; i < rs.roots.size(); ++i) img[i] = index.at(reflect(rs.roots[i], alpha));
        gens.emplace_back(std::move(img));
    }
    return PermGroup(static_cast<Pt>(rs.roots.size()), gens);
}

PermGroup coxeter_group(char family, unsigned rank) {
    return coxeter_group(root_system(family, rank));
}

PermGroup natural_classical(char family, unsigned n) {
    switch (family) {
    case 'A':
        if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
        return symmetric_group(n + 1);
    case 'B':
    case 'D': {
        unsigned lo = family == 'B' ? 1 : 2;
        if (n < lo) throw std::invalid_argument("rank too small for signed action");
        std::vector<Permutation> gens;
        int sn = static_cast<int>(n);
        for (int i = 0; i + 1 < sn; ++i)
            gens.push_back(from_cycles(2 * n, {{i + 1, i + 2}, {sn + i + 1, sn + i + 2}}));
        if (family == 'B')
            gens.push_back(from_cycles(2 * n, {{sn, 2 * sn}}));
        else
            gens.push_back(from_cycles(2 * n, {{sn - 1, 2 * sn}, {sn, 2 * sn - 1}}));
        return PermGroup(2 * n, gens);
    }
    case 'I':
        if (n < 1) throw std::invalid_argument("I2(m) needs m >= 1");
        return dihedral_group(n);
    default:
        throw std::invalid_argument(std::string("no natural classical action for family '") +
                                    family + "'");
    }
}

PermGroup rotation_subgroup(const PermGroup& w, const std::vector<Permutation>& simple_gens) {
    if (simple_gens.empty()) throw std::invalid_argument("need at least one simple reflection");
    std::vector<Permutation> gens;
    for (std::size_t i = 1; i < simple_gens.size(); ++i)
        gens.push_back(simple_gens[0] * simple_gens[i]);
    PermGroup plus(w.degree(), gens);
    PermGroup wc = w;
    if (plus.order() * 2 != wc.order())
        throw std::invalid_argument("even-length products do not generate an index-2 subgroup");
    return plus;
}

PermGroup binary_tetrahedral() { return regular_from_quaternions(hurwitz_units<QuadNum>()); }

PermGroup binary_octahedral() {
    using S = Quad<2>;
    auto elems = hurwitz_units<S>();
    S r{Rational(0), Rational(1, 2)}; // 1/sqrt(2) = sqrt(2)/2
    for (unsigned a = 0; a < 4; ++a)
        for (unsigned b = a + 1; b < 4; ++b)
            for (int sa : {1, -1})
                for (int sb : {1, -1}) {
                    S c[4] = {S(0), S(0), S(0), S(0)};
                    c[a] = S(sa) * r;
                    c[b] = S(sb) * r;
                    elems.push_back({c[0], c[1], c[2], c[3]});
                }
    return regular_from_quaternions(std::move(elems));
}

PermGroup binary_icosahedral() {
    auto elems = hurwitz_units<QuadNum>();
    QuadNum half{Rational(1, 2)};
    QuadNum base[4] = {QuadNum(0), half, (golden_ratio() - QuadNum(1)) * half,
                       golden_ratio() * half}; // (0, 1, 1/tau, tau) / 2
    // even permutations of the four slots, all signs on the nonzero entries
    std::set<Quaternion<QuadNum>> extra;
    unsigned perm[4] = {0, 1, 2, 3};
    std::vector<std::array<unsigned, 4>> evens;
    do {
        unsigned inv = 0;
        for (unsigned i = 0; i < 4; ++i)
            for (unsigned j = i + 1; j < 4; ++j)
                if (perm[i] > perm[j]) ++inv;
        if (inv % 2 == 0) evens.push_back({perm[0], perm[1], perm[2], perm[3]});
    } while (std::next_permutation(perm, perm + 4));
    for (const auto& p : evens)
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1}) {
                    int sg[4] = {1, s1, s2, s3}; // slot 0 of the pattern is zero
                    QuadNum c[4];
                    for (unsigned i = 0; i < 4; ++i) c[p[i]] = QuadNum(sg[i]) * base[i];
                    extra.insert({c[0], c[1], c[2], c[3]});
                }
    if (extra.size() != 96) throw std::logic_error("icosian pattern count is off");
    elems.insert(elems.end(), extra.begin(), extra.end());
    return regular_from_quaternions(std::move(elems));
}

PermGroup binary_dihedral(unsigned m) {
    if (m < 1) throw std::invalid_argument("binary dihedral needs m >= 1");
    // elements a^k and a^k b, k mod 2m, with b^2 = a^m, b a b^-1 = a^-1;
    // point (k, eps) = eps*2m + k, right regular action
    unsigned n = 4 * m;
    std::vector<Pt> ga(n), gb(n);
    for (unsigned k = 0; k < 2 * m; ++k) {
        ga[k] = (k + 1) % (2 * m);
        ga[2 * m + k] = 2 * m + (k + 2 * m - 1) % (2 * m);
        gb[k] = 2 * m + k;
        gb[2 * m + k] = (k + m) % (2 * m);
    }
    return PermGroup(n, {Permutation(ga), Permutation(gb)});
}

PermGroup binary_cyclic(unsigned m) { return cyclic_regular(m); }

PermGroup q8_signed() {
    // the paper's signed-permutation matrices for i, j, k on (e1, e2, e3, e4)
    auto i = Permutation(std::vector<Pt>{1, 4, 3, 6, 5, 0, 7, 2});
    auto j = Permutation(std::vector<Pt>{2, 7, 4, 1, 6, 3, 0, 5});
    auto k = Permutation(std::vector<Pt>{3, 2, 5, 4, 7, 6, 1, 0});
    return PermGroup(8, {i, j, k});
}

PermGroup monomial_group(unsigned m, unsigned p, unsigned n) {
    if (m < 1 || n < 1 || p < 1 || m % p != 0)
        throw std::invalid_argument("monomial group needs p | m and m, n >= 1");
    auto pt = [&](unsigned r, unsigned i) { return static_cast<Pt>(r * n + i); };
    std::vector<Permutation> gens;
    for (unsigned i = 0; i + 1 < n; ++i) { // coordinate transposition (i, i+1)
        std::vector<Pt> img(m * n);
        for (unsigned r = 0; r < m; ++r)
            for (unsigned c = 0; c < n; ++c)
                img[pt(r, c)] = pt(r, c == i ? i + 1 : c == i + 1 ? i : c);
        gens.emplace_back(std::move(img));
    }
    if (p < m) { // scalar zeta^p on coordinate 1
        std::vector<Pt> img(m * n);
        for (unsigned r = 0; r < m; ++r)
            for (unsigned c = 0; c < n; ++c) img[pt(r, c)] = c == 0 ? pt((r + p) % m, 0) : pt(r, c);
        gens.emplace_back(std::move(img));
    }
    if (n >= 2 && m > 1) { // (zeta, zeta^-1) on coordinates 1, 2
        std::vector<Pt> img(m * n);
        for (unsigned r = 0; r < m; ++r)
            for (unsigned c = 0; c < n; ++c)
                img[pt(r, c)] =
                    c == 0 ? pt((r + 1) % m, 0) : c == 1 ? pt((r + m - 1) % m, 1) : pt(r, c);
        gens.emplace_back(std::move(img));
    }
    if (gens.empty()) return trivial_group(m * n);
    return PermGroup(m * n, gens);
}

PermGroup e6_on_27() {
    auto rs = root_system('E', 7);
    // rational row space of the first six simple roots (the embedded E6)
    std::vector<std::vector<Rational>> rows;
    for (unsigned i = 0; i < 6; ++i) {
        std::vector<Rational> r;
        for (const auto& q : rs.simple_roots[i]) {
            if (!(q.b == 0)) throw std::logic_error("E7 roots should be rational");
            r.push_back(q.a);
        }
        rows.push_back(std::move(r));
    }
    // row echelon form
    std::size_t lead = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        while (lead < 8) {
            std::size_t piv = r;
            while (piv < rows.size() && rows[piv][lead] == 0) ++piv;
            if (piv == rows.size()) {
                ++lead;
                continue;
            }
            std::swap(rows[r], rows[piv]);
            break;
        }
        if (lead == 8) break;
        for (std::size_t r2 = 0; r2 < rows.size(); ++r2)
            if (r2 != r && rows[r2][lead] != 0) {
                Rational f = rows[r2][lead] / rows[r][lead];
                for (std::size_t c = 0; c < 8; ++c) rows[r2][c] -= f * rows[r][c];
            }
        ++lead;
    }
    auto in_span = [&](const RootVec& v) {
        std::vector<Rational> x;
        for (const auto& q : v) x.push_back(q.a);
        for (const auto& row : rows) {
            std::size_t l = 0;
            while (l < 8 && row[l] == 0) ++l;
            if (l == 8) continue;
            if (x[l] != 0) {
                Rational f = x[l] / row[l];
                for (std::size_t c = 0; c < 8; ++c) x[c] -= f * row[c];
            }
        }
        return std::all_of(x.begin(), x.end(), [](const Rational& c) { return c == 0; });
    };

    std::vector<RootVec> reps; // one canonical representative per antipodal pair
    for (const auto& r : rs.roots) {
        if (in_span(r)) continue;
        RootVec neg(r.size());
        for (std::size_t c = 0; c < r.size(); ++c) neg[c] = -r[c];
        if (r < neg) reps.push_back(r);
    }
    if (reps.size() != 27) throw std::logic_error("expected 27 antipodal pairs outside E6");
    std::sort(reps.begin(), reps.end());
    std::map<RootVec, Pt> block;
    for (Pt i = 0; i < reps.size(); ++i) block[reps[i]] = i;
    auto block_of = [&](RootVec v) {
        RootVec neg(v.size());
        for (std::size_t c = 0; c < v.size(); ++c) neg[c] = -v[c];
        auto it = block.find(v < neg ? v : neg);
        if (it == block.end()) throw std::logic_error("reflection left the 27-point set");
        return it->second;
    };

    std::vector<Permutation> gens;
    for (unsigned i = 0; i < 6; ++i) {
        std::vector<Pt> img(27);
        for (Pt b = 0; b < 27; ++b) img[b] = block_of(reflect(reps[b], rs.simple_roots[i]));
        gens.emplace_back(std::move(img));
    }
    PermGroup g(27, gens);
    if (g.order() != 51840) throw std::logic_error("27-point image is not faithful for W(E6)");
    return g;
}

} // namespace mindeg
