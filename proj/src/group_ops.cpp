#include "mindeg/group_ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace mindeg {

namespace {

Permutation embed_left(const Permutation& p, std::size_t right_degree) {
    std::vector<Pt> im(p.degree() + right_degree);
    for (std::size_t i = 0; i < p.degree(); ++i) im[i] = p(static_cast<Pt>(i));
    for (std::size_t i = 0; i < right_degree; ++i)
        im[p.degree() + i] = static_cast<Pt>(p.degree() + i);
    return Permutation(std::move(im));
}

Permutation embed_right(const Permutation& p, std::size_t left_degree) {
    std::vector<Pt> im(left_degree + p.degree());
    for (std::size_t i = 0; i < left_degree; ++i) im[i] = static_cast<Pt>(i);
    for (std::size_t i = 0; i < p.degree(); ++i)
        im[left_degree + i] = static_cast<Pt>(left_degree + p(static_cast<Pt>(i)));
    return Permutation(std::move(im));
}

void check_same_table(const TablePtr& g, const Subgroup& h) {
    if (h.parent.get() != g.get())
        throw std::invalid_argument("subgroup belongs to a different element enumeration");
}

unsigned perm_order(const Permutation& p) {
    unsigned o = 1;
    Permutation q = p;
    while (!q.is_identity()) {
        q = q * p;
        ++o;
    }
    return o;
}

} // namespace

PermGroup direct_product(const PermGroup& g, const PermGroup& h) {
    std::vector<Permutation> gens;
    for (const auto& p : g.generators()) gens.push_back(embed_left(p, h.degree()));
    for (const auto& p : h.generators()) gens.push_back(embed_right(p, g.degree()));
    return PermGroup(g.degree() + h.degree(), std::move(gens));
}

CosetActionResult coset_action(const TablePtr& g, const Subgroup& h) {
    check_same_table(g, h);
    std::size_t n = g->size();
    auto hidx = h.element_indices();
    std::vector<int> coset_of(n, -1);
    std::vector<std::uint32_t> reps;
    for (std::uint32_t e = 0; e < n; ++e) {
        if (coset_of[e] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(e);
        for (std::uint32_t x : hidx) coset_of[g->mul(x, e)] = c;
    }
    std::size_t ncos = reps.size();
    std::vector<Permutation> action_gens;
    for (std::uint32_t gi : g->generator_indices()) {
        std::vector<Pt> im(ncos);
        for (std::size_t c = 0; c < ncos; ++c)
            im[c] = static_cast<Pt>(coset_of[g->mul(reps[c], gi)]);
        action_gens.push_back(Permutation(std::move(im)));
    }
    // kernel = elements of H fixing every coset
    Bitset ker(n);
    for (std::uint32_t x : hidx) {
        bool fixes = true;
        for (std::size_t c = 0; c < ncos && fixes; ++c)
            fixes = coset_of[g->mul(reps[c], x)] == static_cast<int>(c);
        if (fixes) ker.set(x);
    }
    CosetActionResult r{PermGroup(ncos, std::move(action_gens)),
                        subgroup_from_members(g, std::move(ker)), std::move(reps)};
    return r;
}

Subgroup core(const TablePtr& g, const Subgroup& h) {
    return coset_action(g, h).kernel;
}

PermGroup quotient_regular(const TablePtr& g, const Subgroup& n) {
    check_same_table(g, n);
    for (std::uint32_t x : n.generator_hints)
        for (std::uint32_t gi : g->generator_indices())
            if (!n.members.test(g->conj(x, gi)))
                throw std::invalid_argument("quotient_regular: subgroup is not normal");
    auto res = coset_action(g, n);
    if (!(res.kernel.members == n.members))
        throw std::logic_error("quotient_regular: kernel differs from N");
    return res.action;
}

Subgroup center(const TablePtr& g) {
    Bitset z(g->size());
    for (std::uint32_t e = 0; e < g->size(); ++e) {
        bool central = true;
        for (std::uint32_t gi : g->generator_indices())
            if (g->mul(e, gi) != g->mul(gi, e)) {
                central = false;
                break;
            }
        if (central) z.set(e);
    }
    return subgroup_from_members(g, std::move(z));
}

Subgroup normal_closure(const TablePtr& g, const std::vector<std::uint32_t>& elems) {
    std::vector<std::uint32_t> gens = elems;
    Bitset k = g->closure(gens);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint32_t x : k.to_indices()) {
            for (std::uint32_t gi : g->generator_indices()) {
                std::uint32_t y = g->conj(x, gi);
                if (!k.test(y)) {
                    gens.push_back(y);
                    k = g->closure(gens);
                    changed = true;
                }
            }
        }
    }
    Subgroup s;
    s.parent = g;
    s.members = std::move(k);
    s.generator_hints = std::move(gens);
    s.order = s.members.count();
    return s;
}

std::vector<Subgroup> minimal_normal_subgroups(const TablePtr& g) {
    // one representative generator per cyclic prime-order subgroup
    std::unordered_set<Bitset, BitsetHash> cyclic_seen;
    std::vector<std::uint32_t> reps;
    for (std::uint32_t e = 0; e < g->size(); ++e) {
        if (e == g->identity()) continue;
        unsigned o = g->element_order(e);
        bool prime = o >= 2;
        for (unsigned d = 2; d * d <= o; ++d)
            if (o % d == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        if (cyclic_seen.insert(g->closure({e})).second) reps.push_back(e);
    }
    std::vector<Subgroup> closures;
    std::unordered_set<Bitset, BitsetHash> seen;
    for (std::uint32_t e : reps) {
        auto n = normal_closure(g, {e});
        if (seen.insert(n.members).second) closures.push_back(std::move(n));
    }
    std::vector<Subgroup> minimal;
    for (const auto& a : closures) {
        bool is_min = true;
        for (const auto& b : closures)
            if (b.order < a.order && b.members.subset_of(a.members)) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(a);
    }
    std::sort(minimal.begin(), minimal.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.members < b.members;
    });
    return minimal;
}

PermGroup central_product(const PermGroup& g, const PermGroup& h,
                          const Permutation& zg, const Permutation& zh) {
    if (!g.contains(zg) || !h.contains(zh))
        throw std::invalid_argument("central product: designated elements outside the factors");
    for (const auto& s : g.generators())
        if (!(s * zg == zg * s))
            throw std::invalid_argument("central product: zg is not central");
    for (const auto& s : h.generators())
        if (!(s * zh == zh * s))
            throw std::invalid_argument("central product: zh is not central");
    if (perm_order(zg) != perm_order(zh))
        throw std::invalid_argument("central product: central subgroups have different orders");
    PermGroup prod = direct_product(g, h);
    auto table = std::make_shared<const GroupTable>(prod);
    Permutation anti = embed_left(zg, h.degree()) * embed_right(zh.inverse(), g.degree());
    auto n = subgroup_generated(table, {table->index_of(anti)});
    return quotient_regular(table, n);
}

PermGroup central_product(const PermGroup& g, const PermGroup& h) {
    auto zgen = [](const PermGroup& grp) {
        auto table = std::make_shared<const GroupTable>(grp);
        auto z = center(table);
        if (z.order < 2) throw std::invalid_argument("central product: trivial center");
        bool prime = true;
        for (std::size_t d = 2; d * d <= z.order; ++d)
            if (z.order % d == 0) prime = false;
        if (!prime)
            throw std::invalid_argument("central product: center is not of prime order");
        auto idx = z.element_indices();
        std::uint32_t gen = idx[0] == table->identity() ? idx[1] : idx[0];
        return table->element(gen);
    };
    return central_product(g, h, zgen(g), zgen(h));
}

PermGroup centralizer_in_sym(const PermGroup& g) {
    if (!g.is_transitive())
        throw std::invalid_argument(
            "centralizer_in_sym: unsupported input (group must be transitive)");
    auto stab = g.point_stabilizer(0);
    auto ot = g.orbit_transversal(0);
    std::vector<Permutation> gens;
    for (const auto& orb : stab.orbits()) {
        if (orb.size() != 1) continue;
        Pt beta = orb[0];
        if (beta == 0) continue;
        std::vector<Pt> im(g.degree());
        for (std::size_t i = 0; i < ot.points.size(); ++i) im[ot.points[i]] = ot.reps[i](beta);
        gens.push_back(Permutation(std::move(im)));
    }
    return PermGroup(g.degree(), std::move(gens));
}

AbelianType abelian_invariants(const TablePtr& g) {
    for (std::uint32_t a : g->generator_indices())
        for (std::uint32_t b : g->generator_indices())
            if (g->mul(a, b) != g->mul(b, a))
                throw std::invalid_argument("abelian_invariants: group is not abelian");
    std::size_t n = g->size();
    std::vector<unsigned> orders(n);
    for (std::uint32_t e = 0; e < n; ++e) orders[e] = g->element_order(e);

    AbelianType t;
    std::size_t rest = n;
    for (std::size_t p = 2; rest > 1; ++p) {
        if (rest % p != 0) continue;
        // m_k = log_p #{x : ord(x) | p^k}
        std::vector<unsigned> m{0};
        std::uint64_t pk = 1;
        while (true) {
            pk *= p;
            std::size_t cnt = 0;
            for (std::uint32_t e = 0; e < n; ++e)
                if (pk % orders[e] == 0) ++cnt;
            unsigned mk = 0;
            for (std::size_t v = cnt; v > 1; v /= p) ++mk;
            m.push_back(mk);
            if (m.back() == m[m.size() - 2]) break; // p-part exhausted
        }
        // r_k = m_k - m_{k-1} counts the factors of exponent >= k
        for (std::size_t k = 1; k + 1 < m.size(); ++k) {
            unsigned r_k = m[k] - m[k - 1];
            unsigned r_next = m[k + 1] - m[k];
            std::uint64_t f = 1;
            for (std::size_t j = 0; j < k; ++j) f *= p;
            for (unsigned c = r_next; c < r_k; ++c) t.factors.push_back(f);
        }
        while (rest % p == 0) rest /= p;
    }
    std::sort(t.factors.rbegin(), t.factors.rend());
    return t;
}

std::uint32_t submodule_code(const std::vector<unsigned>& digits, unsigned p) {
    std::uint32_t code = 0;
    for (std::size_t i = digits.size(); i-- > 0;) code = code * p + digits[i] % p;
    return code;
}

namespace {

std::vector<unsigned> decode(std::uint32_t code, unsigned n, unsigned p) {
    std::vector<unsigned> d(n);
    for (unsigned i = 0; i < n; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

// Reduced row echelon basis over F_p; canonical signature of a span.
std::vector<std::vector<unsigned>> rref(std::vector<std::vector<unsigned>> rows, unsigned p) {
    auto inv_mod = [p](unsigned a) {
        for (unsigned x = 1; x < p; ++x)
            if (a * x % p == 1) return x;
        throw std::logic_error("not invertible");
    };
    std::size_t n = rows.empty() ? 0 : rows[0].size();
    std::vector<std::vector<unsigned>> basis;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        unsigned iv = inv_mod(rows[r][col]);
        for (auto& v : rows[r]) v = v * iv % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            unsigned f = rows[i][col];
            for (std::size_t j = 0; j < n; ++j)
                rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
        }
        ++r;
        if (r == rows.size()) break;
    }
    rows.resize(r);
    return rows;
}

std::vector<std::uint32_t> span_codes(const std::vector<std::vector<unsigned>>& basis,
                                      unsigned p) {
    std::vector<std::uint32_t> out{0};
    for (const auto& b : basis) {
        std::uint32_t bc = submodule_code(b, p);
        std::vector<std::uint32_t> next;
        for (std::uint32_t prev : out) {
            auto pd = decode(prev, static_cast<unsigned>(b.size()), p);
            for (unsigned c = 0; c < p; ++c) {
                std::vector<unsigned> v(b.size());
                for (std::size_t j = 0; j < b.size(); ++j) v[j] = (pd[j] + c * b[j]) % p;
                next.push_back(submodule_code(v, p));
            }
        }
        (void)bc;
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Submodule> invariant_submodules(unsigned n, unsigned p, bool use_alt) {
    double total = 1;
    for (unsigned i = 0; i < n; ++i) total *= p;
    if (total > (1 << 20)) throw std::invalid_argument("invariant_submodules: p^n exceeds 2^20");

    // coordinate permutations generating Alt(n) or Sym(n)
    std::vector<std::vector<unsigned>> perms;
    if (use_alt) {
        for (unsigned i = 2; i < n; ++i) {
            std::vector<unsigned> s(n);
            std::iota(s.begin(), s.end(), 0u);
            s[0] = 1; s[1] = i; s[i] = 0;
            perms.push_back(std::move(s));
        }
    } else {
        for (unsigned i = 0; i + 1 < n; ++i) {
            std::vector<unsigned> s(n);
            std::iota(s.begin(), s.end(), 0u);
            std::swap(s[i], s[i + 1]);
            perms.push_back(std::move(s));
        }
    }

    auto act = [&](const std::vector<unsigned>& v, const std::vector<unsigned>& s) {
        std::vector<unsigned> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[s[i]] = v[i];
        return w;
    };

    std::uint32_t nvec = static_cast<std::uint32_t>(total);
    // invariant span generated by each vector
    std::map<std::vector<std::vector<unsigned>>, bool> seen;
    std::vector<std::vector<std::vector<unsigned>>> work; // bases
    for (std::uint32_t code = 1; code < nvec; ++code) {
        auto v = decode(code, n, p);
        // orbit of v
        std::vector<std::vector<unsigned>> orbit{v};
        std::set<std::vector<unsigned>> oseen{v};
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (const auto& s : perms) {
                auto w = act(orbit[i], s);
                if (oseen.insert(w).second) orbit.push_back(w);
            }
        auto basis = rref(std::move(orbit), p);
        if (seen.emplace(basis, true).second) work.push_back(std::move(basis));
    }
    // close under joins
    for (std::size_t i = 0; i < work.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            auto rows = work[i];
            rows.insert(rows.end(), work[j].begin(), work[j].end());
            auto basis = rref(std::move(rows), p);
            if (seen.emplace(basis, true).second) work.push_back(std::move(basis));
        }
    // include the zero module
    work.push_back({});

    std::vector<Submodule> out;
    for (const auto& basis : work) {
        Submodule m;
        m.n = n;
        m.p = p;
        m.vectors = span_codes(basis, p);
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), [](const Submodule& a, const Submodule& b) {
        if (a.vectors.size() != b.vectors.size()) return a.vectors.size() < b.vectors.size();
        return a.vectors < b.vectors;
    });
    return out;
}

} // namespace mindeg
