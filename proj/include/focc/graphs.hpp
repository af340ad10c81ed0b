#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "focc/bicomodule.hpp"

namespace focc {

// Directed graph attached to a FOCC over a set coalgebra: no loops, at most
// one edge per ordered pair.
struct FoccGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges; // (source, target)

    void normalize()
    {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        for (const auto& [s, t] : edges)
            if (s == t)
                throw std::invalid_argument("FoccGraph: loops are not allowed");
    }
};

inline std::string to_dot(const FoccGraph& g)
{
    std::ostringstream os;
    os << "digraph focc {\n";
    for (int v = 0; v < g.vertices; ++v)
        os << "  p" << (v + 1) << ";\n";
    for (const auto& [s, t] : g.edges)
        os << "  p" << (s + 1) << " -> p" << (t + 1) << ";\n";
    os << "}\n";
    return os.str();
}

// lexicographically smallest edge list over all vertex bijections
inline std::vector<std::pair<int, int>> graph_canonical_form(const FoccGraph& g)
{
    std::vector<int> perm(g.vertices);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, int>> best;
    bool first = true;
    do {
        std::vector<std::pair<int, int>> mapped;
        mapped.reserve(g.edges.size());
        for (const auto& [s, t] : g.edges)
            mapped.emplace_back(perm[s], perm[t]);
        std::sort(mapped.begin(), mapped.end());
        if (first || mapped < best) {
            best = std::move(mapped);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool graph_isomorphic(const FoccGraph& a, const FoccGraph& b)
{
    if (a.vertices != b.vertices || a.edges.size() != b.edges.size())
        return false;
    return graph_canonical_form(a) == graph_canonical_form(b);
}

namespace detail {

// Requires S to be spanned by quotient coordinates (every subbicomodule of
// Y^U over a set coalgebra is); returns the coordinate set.
template <ScalarField K>
std::set<int> coordinate_support(const Subspace<K>& S)
{
    std::set<int> support;
    for (int r = 0; r < S.dim(); ++r) {
        Vec<K> v = S.basis_vector(r);
        for (size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero())
                support.insert(static_cast<int>(k));
    }
    if (static_cast<int>(support.size()) != S.dim())
        throw std::invalid_argument("subspace does not split into singleton components");
    return support;
}

template <ScalarField K>
bool is_set_coalgebra(const Coalgebra<K>& C)
{
    for (int i = 0; i < C.n; ++i) {
        if (C.coproduct[i].size() != 1)
            return false;
        auto [j, k, c] = C.coproduct[i][0];
        if (j != i || k != i || !c.is_one() || !C.counit[i].is_one())
            return false;
    }
    return true;
}

} // namespace detail

// Edge convention: the component <[p (x) q]> produces the edge q -> p.
template <ScalarField K>
FoccGraph set_coalgebra_graph(const UniversalBicomodule<K>& U, const Subspace<K>& S)
{
    if (!detail::is_set_coalgebra(U.base))
        throw std::invalid_argument("set_coalgebra_graph: coalgebra is not a set coalgebra");
    const int n = U.base.n;
    FoccGraph g;
    g.vertices = n;
    for (int k : detail::coordinate_support(S)) {
        int rep = U.quot.representative_columns()[k];
        int p = rep / n, q = rep % n;
        g.edges.emplace_back(q, p);
    }
    g.normalize();
    return g;
}

// FOCC isomorphism by explicit search over point bijections; each bijection
// acts through [phi (x) phi] on the universal bicomodule.
template <ScalarField K>
bool set_focc_isomorphic(const UniversalBicomodule<K>& U, const Subspace<K>& S1,
                         const Subspace<K>& S2)
{
    if (!detail::is_set_coalgebra(U.base))
        throw std::invalid_argument("set_focc_isomorphic: coalgebra is not a set coalgebra");
    if (S1.dim() != S2.dim())
        return false;
    const int n = U.base.n;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        CoalgebraMorphism<K> phi{U.base, U.base, Matrix<K>(n, n)};
        for (int v = 0; v < n; ++v)
            phi.map.at(perm[v], v) = K(1);
        if (apply_automorphism(U, phi, S1) == S2)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

struct GraphClass {
    std::vector<std::pair<int, int>> canonical_edges;
    long count = 0; // how many labeled FOCCs fall in this class
};

// All dim-dimensional FOCCs over the set coalgebra on `points` points,
// grouped by graph isomorphism.
inline std::vector<GraphClass> classify_set_foccs(int points, int dim)
{
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p < points; ++p)
        for (int q = 0; q < points; ++q)
            if (p != q)
                pairs.emplace_back(q, p); // edge for component [p (x) q]

    std::map<std::vector<std::pair<int, int>>, long> classes;
    std::vector<int> pick(dim);
    // enumerate dim-subsets of the ordered pairs
    std::function<void(int, int)> rec = [&](int start, int chosen) {
        if (chosen == dim) {
            FoccGraph g;
            g.vertices = points;
            for (int c = 0; c < dim; ++c)
                g.edges.push_back(pairs[pick[c]]);
            g.normalize();
            ++classes[graph_canonical_form(g)];
            return;
        }
        for (int i = start; i <= static_cast<int>(pairs.size()) - (dim - chosen); ++i) {
            pick[chosen] = i;
            rec(i + 1, chosen + 1);
        }
    };
    rec(0, 0);

    std::vector<GraphClass> out;
    for (const auto& [edges, count] : classes)
        out.push_back({edges, count});
    return out;
}

} // namespace focc
