#include "mindeg/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace mindeg {

QuadNum inner(const RootVec& x, const RootVec& y) {
    QuadNum s;
    for (std::size_t i = 0; i < x.size(); ++i) s = s + x[i] * y[i];
    return s;
}

RootVec reflect(const RootVec& v, const RootVec& alpha) {
    QuadNum c = (QuadNum(2) * inner(v, alpha)) / inner(alpha, alpha);
    RootVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] - c * alpha[i];
    return out;
}

namespace {

RootVec vec(unsigned dim, std::initializer_list<std::pair<unsigned, QuadNum>> entries) {
    RootVec v(dim);
    for (const auto& [i, q] : entries) v[i] = q;
    return v;
}

std::vector<RootVec> simple_roots_of(char family, unsigned rank, unsigned& dim) {
    QuadNum half{Rational(1, 2)};
    QuadNum tau = golden_ratio();          // (1 + sqrt 5)/2
    QuadNum taub = tau - QuadNum(1);       // 1/tau
    switch (family) {
    case 'A': {
        if (rank < 1) throw std::invalid_argument("A_n needs n >= 1");
        dim = rank + 1;
        std::vector<RootVec> s;
        for (unsigned i = 0; i < rank; ++i) s.push_back(vec(dim, {{i, 1}, {i + 1, -1}}));
        return s;
    }
    case 'B': {
        if (rank < 1) throw std::invalid_argument("B_n needs n >= 1");
        dim = rank;
        std::vector<RootVec> s;
        for (unsigned i = 0; i + 1 < rank; ++i) s.push_back(vec(dim, {{i, 1}, {i + 1, -1}}));
        s.push_back(vec(dim, {{rank - 1, 1}}));
        return s;
    }
    case 'D': {
        if (rank < 2) throw std::invalid_argument("D_n needs n >= 2");
        dim = rank;
        std::vector<RootVec> s;
        for (unsigned i = 0; i + 1 < rank; ++i) s.push_back(vec(dim, {{i, 1}, {i + 1, -1}}));
        s.push_back(vec(dim, {{rank - 2, 1}, {rank - 1, 1}}));
        return s;
    }
    case 'E': {
        if (rank < 6 || rank > 8) throw std::invalid_argument("E_n needs n in 6..8");
        dim = 8;
        // Bourbaki labeling in the even-coordinate 8-space
        std::vector<RootVec> s;
        RootVec a1(8, -half);
        a1[0] = half;
        a1[7] = half;
        s.push_back(a1);
        s.push_back(vec(8, {{0, 1}, {1, 1}}));
        for (unsigned k = 3; k <= rank; ++k) s.push_back(vec(8, {{k - 3, -1}, {k - 2, 1}}));
        return s;
    }
    case 'F': {
        if (rank != 4) throw std::invalid_argument("F needs rank 4");
        dim = 4;
        return {vec(4, {{1, 1}, {2, -1}}), vec(4, {{2, 1}, {3, -1}}), vec(4, {{3, 1}}),
                {half, -half, -half, -half}};
    }
    case 'H': {
        if (rank == 3) {
            dim = 3;
            return {vec(3, {{0, 2}}), {-tau, taub, QuadNum(-1)}, vec(3, {{2, 2}})};
        }
        if (rank == 4) {
            dim = 4;
            return {vec(4, {{0, -2}}),
                    {tau, QuadNum(-1), taub, QuadNum(0)},
                    {QuadNum(0), tau, -taub, QuadNum(-1)},
                    vec(4, {{3, 2}})};
        }
        throw std::invalid_argument("H needs rank 3 or 4");
    }
    default:
        throw std::invalid_argument(std::string("unknown family '") + family + "'");
    }
}

} // namespace

RootSystem root_system(char family, unsigned rank) {
    RootSystem rs;
    rs.family = family;
    rs.rank = rank;
    rs.simple_roots = simple_roots_of(family, rank, rs.dim);

    std::set<RootVec> closed(rs.simple_roots.begin(), rs.simple_roots.end());
    std::vector<RootVec> work(closed.begin(), closed.end());
    for (std::size_t i = 0; i < work.size(); ++i) {
        RootVec neg(work[i].size());
        for (std::size_t c = 0; c < neg.size(); ++c) neg[c] = -work[i][c];
        if (closed.insert(neg).second) work.push_back(neg);
        for (const auto& alpha : rs.simple_roots) {
            RootVec r = reflect(work[i], alpha);
            if (closed.insert(r).second) work.push_back(std::move(r));
        }
    }

    // canonical order: length class (by norm, component order), then coordinates
    std::map<QuadNum, unsigned> norm_class;
    for (const auto& r : closed) norm_class.emplace(inner(r, r), 0);
    unsigned cls = 0;
    for (auto& [norm, id] : norm_class) id = cls++;
    rs.roots.assign(closed.begin(), closed.end());
    std::stable_sort(rs.roots.begin(), rs.roots.end(), [&](const RootVec& x, const RootVec& y) {
        unsigned cx = norm_class.at(inner(x, x)), cy = norm_class.at(inner(y, y));
        if (cx != cy) return cx < cy;
        return x < y;
    });
    rs.length_class.reserve(rs.roots.size());
    for (const auto& r : rs.roots) rs.length_class.push_back(norm_class.at(inner(r, r)));

    rs.gram.assign(rank, std::vector<QuadNum>(rank));
    for (unsigned i = 0; i < rank; ++i)
        for (unsigned j = 0; j < rank; ++j)
            rs.gram[i][j] = inner(rs.simple_roots[i], rs.simple_roots[j]);
    return rs;
}

} // namespace mindeg
