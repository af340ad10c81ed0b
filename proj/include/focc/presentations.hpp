#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "focc/coalgebra.hpp"
#include "focc/hopf.hpp"

namespace focc {

// ---------------------------------------------------------------------------
// Built-in finite-dimensional coalgebras.
// ---------------------------------------------------------------------------

// n x n matrix coalgebra: Delta(e_ab) = sum_c e_ac (x) e_cb, eps(e_ab) = [a==b].
// For n = 2 the basis is labeled {x,u,v,y} = {e11,e12,e21,e22}.
template <ScalarField K = Rational>
Coalgebra<K> matrix_coalgebra(int n)
{
    Coalgebra<K> C;
    C.n = n * n;
    C.labels.resize(C.n);
    C.coproduct.resize(C.n);
    C.counit.assign(C.n, K(0));
    auto idx = [n](int a, int b) { return a * n + b; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (n == 2) {
                static const char* names[4] = {"x", "u", "v", "y"};
                C.labels[idx(a, b)] = names[idx(a, b)];
            } else {
                C.labels[idx(a, b)] = "e" + std::to_string(a + 1) + std::to_string(b + 1);
            }
            for (int c = 0; c < n; ++c)
                C.coproduct[idx(a, b)].emplace_back(idx(a, c), idx(c, b), K(1));
            if (a == b)
                C.counit[idx(a, b)] = K(1);
        }
    return C;
}

// the involution x<->y, u<->v of the 2x2 matrix coalgebra
template <ScalarField K = Rational>
CoalgebraMorphism<K> matrix2_involution()
{
    Coalgebra<K> C = matrix_coalgebra<K>(2);
    Matrix<K> m(4, 4);
    m.at(3, 0) = K(1); // x -> y
    m.at(2, 1) = K(1); // u -> v
    m.at(1, 2) = K(1); // v -> u
    m.at(0, 3) = K(1); // y -> x
    return {C, C, m};
}

// Sweedler coalgebra span{1, g, X, Xg}.
template <ScalarField K = Rational>
Coalgebra<K> sweedler_coalgebra()
{
    Coalgebra<K> C;
    C.n = 4;
    C.labels = {"1", "g", "X", "Xg"};
    C.coproduct.resize(4);
    C.counit = {K(1), K(1), K(0), K(0)};
    C.coproduct[0].emplace_back(0, 0, K(1));
    C.coproduct[1].emplace_back(1, 1, K(1));
    C.coproduct[2].emplace_back(2, 0, K(1)); // X (x) 1
    C.coproduct[2].emplace_back(1, 2, K(1)); // g (x) X
    C.coproduct[3].emplace_back(3, 1, K(1)); // Xg (x) g
    C.coproduct[3].emplace_back(0, 3, K(1)); // 1 (x) Xg
    return C;
}

// the involution (1, X) <-> (g, Xg)
template <ScalarField K = Rational>
CoalgebraMorphism<K> sweedler_involution()
{
    Coalgebra<K> C = sweedler_coalgebra<K>();
    Matrix<K> m(4, 4);
    m.at(1, 0) = K(1);
    m.at(0, 1) = K(1);
    m.at(3, 2) = K(1);
    m.at(2, 3) = K(1);
    return {C, C, m};
}

// C_V = K (+) V with one group-like and dim(V) primitives.
template <ScalarField K = Rational>
Coalgebra<K> vector_space_coalgebra(int dim_v)
{
    Coalgebra<K> C;
    C.n = dim_v + 1;
    C.labels.resize(C.n);
    C.labels[0] = "1";
    C.coproduct.resize(C.n);
    C.counit.assign(C.n, K(0));
    C.counit[0] = K(1);
    C.coproduct[0].emplace_back(0, 0, K(1));
    for (int i = 1; i <= dim_v; ++i) {
        C.labels[i] = "x" + std::to_string(i);
        C.coproduct[i].emplace_back(i, 0, K(1));
        C.coproduct[i].emplace_back(0, i, K(1));
    }
    return C;
}

// Divided-power coalgebra truncated at degree N: Delta(X^n) = sum X^i (x) X^{n-i}.
template <ScalarField K = Rational>
Coalgebra<K> divided_power_coalgebra(int N)
{
    if (N < 0)
        throw std::invalid_argument("divided_power_coalgebra: N >= 0 required");
    Coalgebra<K> C;
    C.n = N + 1;
    C.labels.resize(C.n);
    C.coproduct.resize(C.n);
    C.counit.assign(C.n, K(0));
    C.counit[0] = K(1);
    for (int n = 0; n <= N; ++n) {
        C.labels[n] = n == 0 ? "1" : (n == 1 ? "X" : "X^" + std::to_string(n));
        for (int i = 0; i <= n; ++i)
            C.coproduct[n].emplace_back(i, n - i, K(1));
    }
    return C;
}

// Set coalgebra K(O): every point is group-like.
template <ScalarField K = Rational>
Coalgebra<K> set_coalgebra(int points)
{
    Coalgebra<K> C;
    C.n = points;
    C.labels.resize(points);
    C.coproduct.resize(points);
    C.counit.assign(points, K(1));
    for (int p = 0; p < points; ++p) {
        C.labels[p] = "p" + std::to_string(p + 1);
        C.coproduct[p].emplace_back(p, p, K(1));
    }
    return C;
}

// trivial one-dimensional coalgebra
template <ScalarField K = Rational>
Coalgebra<K> trivial_coalgebra()
{
    Coalgebra<K> C;
    C.n = 1;
    C.labels = {"e"};
    C.coproduct.resize(1);
    C.coproduct[0].emplace_back(0, 0, K(1));
    C.counit = {K(1)};
    return C;
}

// ---------------------------------------------------------------------------
// Finite-dimensional Hopf algebras (table backed).
// ---------------------------------------------------------------------------

// Sweedler's 4-dimensional Hopf algebra: g^2 = 1, X^2 = 0, Xg = -gX.
template <ScalarField K = Rational>
HopfAlgebra<K> sweedler_hopf()
{
    auto be = std::make_shared<TableBackend<K>>();
    Coalgebra<K> C = sweedler_coalgebra<K>();
    be->labels = C.labels;
    be->coproduct_table = C.coproduct;
    be->counit_table = C.counit;
    // indices: 1=0, g=1, X=2, Xg=3
    be->antipode_table = {
        {{0, K(1)}}, {{1, K(1)}}, {{3, K(1)}}, {{2, K(-1)}}};
    be->product.resize(4, std::vector<std::optional<SparseVec<K>>>(4));
    auto set = [&](int i, int j, SparseVec<K> v) { be->product[i][j] = std::move(v); };
    for (int j = 0; j < 4; ++j) {
        set(0, j, {{j, K(1)}});
        set(j, 0, {{j, K(1)}});
    }
    set(1, 1, {{0, K(1)}});
    set(1, 2, {{3, K(-1)}});
    set(1, 3, {{2, K(-1)}});
    set(2, 1, {{3, K(1)}});
    set(2, 2, {});
    set(2, 3, {});
    set(3, 1, {{2, K(1)}});
    set(3, 2, {});
    set(3, 3, {});
    HopfAlgebra<K> H;
    H.unit = 0;
    H.generators = {1, 2};
    H.backend = be;
    return H;
}

// Group algebra K(G) from a multiplication table (table[i][j] = index of g_i g_j).
template <ScalarField K = Rational>
HopfAlgebra<K> group_algebra_hopf(const std::vector<std::vector<int>>& table,
                                  std::vector<std::string> labels, int unit_index)
{
    const int n = static_cast<int>(table.size());
    // group axioms: unit, associativity, inverses
    for (int i = 0; i < n; ++i)
        if (table[unit_index][i] != i || table[i][unit_index] != i)
            throw std::invalid_argument("group_algebra_hopf: unit row/column mismatch");
    std::vector<int> inverse(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (table[i][j] == unit_index && table[j][i] == unit_index)
                inverse[i] = j;
        if (inverse[i] < 0)
            throw std::invalid_argument("group_algebra_hopf: missing inverse");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw std::invalid_argument("group_algebra_hopf: table is not associative");

    auto be = std::make_shared<TableBackend<K>>();
    be->labels = std::move(labels);
    be->coproduct_table.resize(n);
    be->counit_table.assign(n, K(1));
    be->antipode_table.resize(n);
    be->product.resize(n, std::vector<std::optional<SparseVec<K>>>(n));
    for (int i = 0; i < n; ++i) {
        be->coproduct_table[i].emplace_back(i, i, K(1));
        be->antipode_table[i] = {{inverse[i], K(1)}};
        for (int j = 0; j < n; ++j)
            be->product[i][j] = SparseVec<K>{{table[i][j], K(1)}};
    }
    HopfAlgebra<K> H;
    H.unit = unit_index;
    for (int i = 0; i < n; ++i)
        if (i != unit_index)
            H.generators.push_back(i);
    H.backend = be;
    return H;
}

template <ScalarField K = Rational>
HopfAlgebra<K> cyclic_group_hopf(int n)
{
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = i == 0 ? "e" : "g^" + std::to_string(i);
        for (int j = 0; j < n; ++j)
            table[i][j] = (i + j) % n;
    }
    if (n > 1)
        labels[1] = "g";
    return group_algebra_hopf<K>(table, labels, 0);
}

template <ScalarField K = Rational>
HopfAlgebra<K> symmetric_group3_hopf()
{
    // permutations of {0,1,2} in one-line notation
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                             {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::string> labels = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
    const int n = 6;
    auto find = [&](const std::array<int, 3>& p) {
        for (int k = 0; k < n; ++k)
            if (perms[k] == p)
                return k;
        throw std::logic_error("permutation lookup");
    };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::array<int, 3> comp{};
            for (int t = 0; t < 3; ++t)
                comp[t] = perms[i][perms[j][t]];
            table[i][j] = find(comp);
        }
    return group_algebra_hopf<K>(table, labels, 0);
}

// ---------------------------------------------------------------------------
// Truncated PBW presentations. The basis is the closure of a seed degree
// ball under coproduct legs and antipode support, so coproduct and antipode
// tables are total by construction; products stay exact via the rewriter and
// overflow only when a final value leaves the basis.
// ---------------------------------------------------------------------------

template <ScalarField K>
struct PbwHopfSpec {
    PbwAlgebra<K> alg;
    // per-letter coproduct: list of (coeff, left word, right word)
    std::vector<std::vector<std::tuple<K, PbwWord, PbwWord>>> letter_coproduct;
    std::vector<std::vector<std::pair<K, PbwWord>>> letter_antipode;
    std::vector<K> letter_counit;
    std::function<int(const PbwMonomial&)> seed_degree;
    std::vector<int> nil_weight; // per-letter filtration weight (group letter 0)
    // enveloping-type coproducts spread weight across the legs; matrix-type
    // coproducts carry it on each leg
    bool weight_splits_across_legs = true;
    std::vector<PbwMonomial> generators;
    FieldDesc field;
};

template <ScalarField K>
HopfAlgebra<K> build_pbw_hopf(const PbwHopfSpec<K>& spec, int N)
{
    if (N < 1)
        throw std::invalid_argument("build_pbw_hopf: truncation bound must be >= 1");
    auto be = std::make_shared<PbwBackend<K>>();
    be->alg = spec.alg;
    be->trunc_bound = N;
    const int A = spec.alg.arity();

    be->letter_coproduct.resize(A);
    be->letter_antipode.resize(A);
    be->letter_counit = spec.letter_counit;
    for (int l = 0; l < A; ++l) {
        if (l == spec.alg.group_letter)
            continue;
        for (const auto& [c, lw, rw] : spec.letter_coproduct[l]) {
            auto left = spec.alg.normal_order({{K(1), lw}});
            auto right = spec.alg.normal_order({{K(1), rw}});
            for (const auto& [lm, lc] : left)
                for (const auto& [rm, rc] : right) {
                    auto key = std::make_pair(lm, rm);
                    be->letter_coproduct[l][key] += c * lc * rc;
                    if (be->letter_coproduct[l][key].is_zero())
                        be->letter_coproduct[l].erase(key);
                }
        }
        for (const auto& [c, w] : spec.letter_antipode[l])
            for (const auto& [m, mc] : spec.alg.normal_order({{K(1), w}})) {
                be->letter_antipode[l][m] += c * mc;
                if (be->letter_antipode[l][m].is_zero())
                    be->letter_antipode[l].erase(m);
            }
    }

    // seed enumeration: every exponent bounded by the seed degree
    std::set<PbwMonomial> basis_set;
    PbwMonomial cursor{std::vector<int>(A, 0)};
    std::function<void(int)> enumerate = [&](int letter) {
        if (spec.seed_degree(cursor) > N)
            return;
        if (letter == A) {
            if (spec.alg.word_is_normal(word_of(cursor)))
                basis_set.insert(cursor);
            return;
        }
        int lo = letter == spec.alg.group_letter ? -N : 0;
        for (int e = lo; e <= N; ++e) {
            cursor.e[letter] = e;
            if (spec.seed_degree(cursor) <= N)
                enumerate(letter + 1);
        }
        cursor.e[letter] = 0;
    };
    enumerate(0);

    // closure under coproduct legs and antipode support (coefficient-free
    // over-approximation: a larger closed set is still closed, and the exact
    // rows computed later can only have smaller support)
    auto weight = [&](const PbwMonomial& m) {
        int w = 0;
        for (int l = 0; l < A; ++l)
            if (l != spec.alg.group_letter)
                w += spec.nil_weight[l] * m.e[l];
        return w;
    };
    std::vector<PbwMonomial> work(basis_set.begin(), basis_set.end());
    while (!work.empty()) {
        PbwMonomial m = std::move(work.back());
        work.pop_back();
        for (const auto& legs : be->coproduct_support(m)) {
            // filtration soundness of the truncation
            bool sound = spec.weight_splits_across_legs
                             ? weight(legs.first) + weight(legs.second) <= weight(m)
                             : weight(legs.first) <= weight(m) &&
                                   weight(legs.second) <= weight(m);
            if (!sound)
                throw std::logic_error("build_pbw_hopf: coproduct violates the filtration at " +
                                       spec.alg.monomial_label(m));
            for (const PbwMonomial& leg : {legs.first, legs.second})
                if (basis_set.insert(leg).second)
                    work.push_back(leg);
        }
        for (const auto& t : be->antipode_support(m))
            if (basis_set.insert(t).second)
                work.push_back(t);
    }

    be->basis.assign(basis_set.begin(), basis_set.end());
    std::stable_sort(be->basis.begin(), be->basis.end(),
                     [&](const PbwMonomial& a, const PbwMonomial& b) {
                         int da = spec.seed_degree(a), db = spec.seed_degree(b);
                         if (da != db)
                             return da < db;
                         return a < b;
                     });
    be->degrees.resize(be->basis.size());
    for (size_t i = 0; i < be->basis.size(); ++i) {
        be->index[be->basis[i]] = static_cast<int>(i);
        be->degrees[i] = spec.seed_degree(be->basis[i]);
    }

    HopfAlgebra<K> H;
    H.field = spec.field;
    H.truncation = N;
    H.backend = be;
    PbwMonomial unit{std::vector<int>(A, 0)};
    H.unit = be->index.at(unit);
    for (const auto& g : spec.generators)
        H.generators.push_back(be->index.at(g));
    return H;
}

// U(g) for a Lie algebra given by structure constants, truncated at degree N.
// bracket[i][j] lists (k, c) with [X_i, X_j] = sum c X_k (for i < j).
template <ScalarField K = Rational>
HopfAlgebra<K> enveloping_trunc(const std::vector<std::string>& names,
                                const std::map<std::pair<int, int>, std::vector<std::pair<int, K>>>& bracket,
                                int N, FieldDesc field = {})
{
    const int d = static_cast<int>(names.size());
    PbwHopfSpec<K> spec;
    spec.alg.letters = names;
    spec.alg.group_letter = -1;
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < j; ++i) {
            auto it = bracket.find({i, j});
            if (it == bracket.end()) {
                spec.alg.qcommute[{j, i}] = K(1);
                continue;
            }
            // X_j X_i = X_i X_j - [X_i, X_j]
            std::vector<std::pair<K, PbwWord>> terms;
            terms.push_back({K(1), PbwWord{{i, 1}, {j, 1}}});
            for (const auto& [k, c] : it->second)
                terms.push_back({-c, PbwWord{{k, 1}}});
            spec.alg.rules[{j, 1, i}] = std::move(terms);
        }
    spec.letter_coproduct.resize(d);
    spec.letter_antipode.resize(d);
    spec.letter_counit.assign(d, K(0));
    spec.nil_weight.assign(d, 1);
    for (int l = 0; l < d; ++l) {
        spec.letter_coproduct[l] = {{K(1), PbwWord{{l, 1}}, PbwWord{}},
                                    {K(1), PbwWord{}, PbwWord{{l, 1}}}};
        spec.letter_antipode[l] = {{K(-1), PbwWord{{l, 1}}}};
        PbwMonomial g{std::vector<int>(d, 0)};
        g.e[l] = 1;
        spec.generators.push_back(g);
    }
    spec.seed_degree = [d](const PbwMonomial& m) {
        int s = 0;
        for (int l = 0; l < d; ++l)
            s += m.e[l];
        return s;
    };
    spec.field = field;
    return build_pbw_hopf(spec, N);
}

// U_Q(b+): generators X, g, g^{-1} with X g = Q g X; Delta X = X(x)1 + g(x)X.
inline HopfAlgebra<QQp> uq_bplus_trunc(int N)
{
    using K = QQp;
    K Q = K::param();
    PbwHopfSpec<K> spec;
    spec.alg.letters = {"X", "g"};
    spec.alg.group_letter = 1;
    spec.alg.qcommute[{1, 0}] = K(1) / Q; // g X = Q^{-1} X g
    spec.letter_coproduct.resize(2);
    spec.letter_antipode.resize(2);
    spec.letter_counit = {K(0), K(1)};
    spec.nil_weight = {1, 0};
    spec.letter_coproduct[0] = {{K(1), PbwWord{{0, 1}}, PbwWord{}},
                                {K(1), PbwWord{{1, 1}}, PbwWord{{0, 1}}}};
    spec.letter_antipode[0] = {{K(-1), PbwWord{{1, -1}, {0, 1}}}}; // -g^{-1} X
    spec.seed_degree = [](const PbwMonomial& m) { return m.e[0] + std::abs(m.e[1]); };
    spec.generators = {PbwMonomial{{1, 0}}, PbwMonomial{{0, 1}}, PbwMonomial{{0, -1}}};
    spec.field = FieldDesc{"Q"};
    return build_pbw_hopf(spec, N);
}

// U_q(sl2): E, F, K^{+-1} with KE = q^2 EK, KF = q^{-2} FK,
// [E,F] = (K - K^{-1})/(q - q^{-1}).
inline HopfAlgebra<QQp> uq_sl2_trunc(int N)
{
    using K = QQp;
    K q = K::param();
    K qinv = K(1) / q;
    PbwHopfSpec<K> spec;
    spec.alg.letters = {"E", "F", "K"};
    spec.alg.group_letter = 2;
    spec.alg.qcommute[{2, 0}] = q * q;       // K E = q^2 E K
    spec.alg.qcommute[{2, 1}] = qinv * qinv; // K F = q^{-2} F K
    K c = K(1) / (q - qinv);
    spec.alg.rules[{1, 1, 0}] = {{K(1), PbwWord{{0, 1}, {1, 1}}},
                                 {-c, PbwWord{{2, 1}}},
                                 {c, PbwWord{{2, -1}}}}; // F E = E F - (K - K^-1)/(q - q^-1)
    spec.letter_coproduct.resize(3);
    spec.letter_antipode.resize(3);
    spec.letter_counit = {K(0), K(0), K(1)};
    spec.nil_weight = {1, 1, 0};
    spec.letter_coproduct[0] = {{K(1), PbwWord{{0, 1}}, PbwWord{{2, 1}}},
                                {K(1), PbwWord{}, PbwWord{{0, 1}}}}; // E(x)K + 1(x)E
    spec.letter_coproduct[1] = {{K(1), PbwWord{{1, 1}}, PbwWord{}},
                                {K(1), PbwWord{{2, -1}}, PbwWord{{1, 1}}}}; // F(x)1 + K^-1(x)F
    spec.letter_antipode[0] = {{K(-1), PbwWord{{0, 1}, {2, -1}}}}; // -E K^{-1}
    spec.letter_antipode[1] = {{K(-1), PbwWord{{2, 1}, {1, 1}}}};  // -K F
    spec.seed_degree = [](const PbwMonomial& m) {
        return m.e[0] + m.e[1] + std::abs(m.e[2]);
    };
    spec.generators = {PbwMonomial{{1, 0, 0}}, PbwMonomial{{0, 1, 0}}, PbwMonomial{{0, 0, 1}},
                       PbwMonomial{{0, 0, -1}}};
    spec.field = FieldDesc{"q"};
    return build_pbw_hopf(spec, N);
}

// SL_q(2): matrix quantum group with generators x, y, u, v.
inline HopfAlgebra<QQp> slq2_trunc(int N)
{
    using K = QQp;
    K q = K::param();
    K qinv = K(1) / q;
    PbwHopfSpec<K> spec;
    spec.alg.letters = {"v", "x", "y", "u"};
    spec.alg.group_letter = -1;
    spec.alg.qcommute[{1, 0}] = qinv; // x v = q^{-1} v x
    spec.alg.qcommute[{2, 0}] = q;    // y v = q v y
    spec.alg.qcommute[{3, 0}] = K(1); // u v = v u
    spec.alg.qcommute[{3, 1}] = q;    // u x = q x u
    spec.alg.qcommute[{3, 2}] = qinv; // u y = q^{-1} y u
    spec.alg.rules[{1, 1, 2}] = {{K(1), PbwWord{}},
                                 {qinv, PbwWord{{0, 1}, {3, 1}}}}; // x y = 1 + q^{-1} v u
    spec.alg.rules[{2, 1, 1}] = {{K(1), PbwWord{}},
                                 {q, PbwWord{{0, 1}, {3, 1}}}}; // y x = 1 + q v u
    spec.letter_coproduct.resize(4);
    spec.letter_antipode.resize(4);
    spec.letter_counit = {K(0), K(1), K(1), K(0)};
    spec.nil_weight = {1, 1, 1, 1};
    // Delta v = y(x)v + v(x)x ; Delta x = x(x)x + u(x)v
    // Delta y = y(x)y + v(x)u ; Delta u = x(x)u + u(x)y
    spec.letter_coproduct[0] = {{K(1), PbwWord{{2, 1}}, PbwWord{{0, 1}}},
                                {K(1), PbwWord{{0, 1}}, PbwWord{{1, 1}}}};
    spec.letter_coproduct[1] = {{K(1), PbwWord{{1, 1}}, PbwWord{{1, 1}}},
                                {K(1), PbwWord{{3, 1}}, PbwWord{{0, 1}}}};
    spec.letter_coproduct[2] = {{K(1), PbwWord{{2, 1}}, PbwWord{{2, 1}}},
                                {K(1), PbwWord{{0, 1}}, PbwWord{{3, 1}}}};
    spec.letter_coproduct[3] = {{K(1), PbwWord{{1, 1}}, PbwWord{{3, 1}}},
                                {K(1), PbwWord{{3, 1}}, PbwWord{{2, 1}}}};
    spec.weight_splits_across_legs = false; // matrix-type coproduct
    spec.letter_antipode[0] = {{-qinv, PbwWord{{0, 1}}}}; // S(v) = -q^{-1} v
    spec.letter_antipode[1] = {{K(1), PbwWord{{2, 1}}}};  // S(x) = y
    spec.letter_antipode[2] = {{K(1), PbwWord{{1, 1}}}};  // S(y) = x
    spec.letter_antipode[3] = {{-q, PbwWord{{3, 1}}}};    // S(u) = -q u
    spec.seed_degree = [](const PbwMonomial& m) {
        return m.e[0] + m.e[1] + m.e[2] + m.e[3];
    };
    spec.generators = {PbwMonomial{{1, 0, 0, 0}}, PbwMonomial{{0, 1, 0, 0}},
                       PbwMonomial{{0, 0, 1, 0}}, PbwMonomial{{0, 0, 0, 1}}};
    spec.field = FieldDesc{"q"};
    return build_pbw_hopf(spec, N);
}

// kappa-Poincare in the classical basis: Pi0^{+-1}, P_j, M_j, N_j over Q(i)(kappa).
inline HopfAlgebra<QIp> kappa_poincare_trunc(int N)
{
    using K = QIp;
    K i = K(GaussianRational::i());
    K kap = K::param();
    K kinv = K(1) / kap;
    PbwHopfSpec<K> spec;
    spec.alg.letters = {"N1", "N2", "N3", "M1", "M2", "M3", "P1", "P2", "P3", "Pi0"};
    spec.alg.group_letter = 9;
    auto Nl = [](int j) { return j; };
    auto Ml = [](int j) { return 3 + j; };
    auto Pl = [](int j) { return 6 + j; };
    auto eps = [](int a, int b, int c) { // Levi-Civita on {0,1,2}
        if (a == b || b == c || a == c)
            return 0;
        return ((b - a + 3) % 3 == 1) ? 1 : -1;
    };

    // [N_j, N_k] = -i eps_{jkl} M_l  ->  N_k N_j = N_j N_k + i eps_{jkl} M_l (k > j)
    for (int j = 0; j < 3; ++j)
        for (int k = j + 1; k < 3; ++k) {
            std::vector<std::pair<K, PbwWord>> t{{K(1), PbwWord{{Nl(j), 1}, {Nl(k), 1}}}};
            for (int l = 0; l < 3; ++l)
                if (eps(j, k, l) != 0)
                    t.push_back({i * K(eps(j, k, l)), PbwWord{{Ml(l), 1}}});
            spec.alg.rules[{Nl(k), 1, Nl(j)}] = std::move(t);
        }
    // [N_j, M_k] = -i eps_{jkl} N_l  ->  M_k N_j = N_j M_k + i eps_{jkl} N_l
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            std::vector<std::pair<K, PbwWord>> t{{K(1), PbwWord{{Nl(j), 1}, {Ml(k), 1}}}};
            for (int l = 0; l < 3; ++l)
                if (eps(j, k, l) != 0)
                    t.push_back({i * K(eps(j, k, l)), PbwWord{{Nl(l), 1}}});
            spec.alg.rules[{Ml(k), 1, Nl(j)}] = std::move(t);
        }
    // [N_j, P_k] = -(i/2) delta_{jk} G_kappa,
    // G_kappa = kappa(Pi0 - Pi0^{-1}) + (1/kappa) P^2 Pi0^{-1}
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            std::vector<std::pair<K, PbwWord>> t{{K(1), PbwWord{{Nl(j), 1}, {Pl(k), 1}}}};
            if (j == k) {
                t.push_back({i / K(2) * kap, PbwWord{{9, 1}}});
                t.push_back({-(i / K(2)) * kap, PbwWord{{9, -1}}});
                for (int l = 0; l < 3; ++l)
                    t.push_back({(i / K(2)) * kinv, PbwWord{{Pl(l), 2}, {9, -1}}});
            }
            spec.alg.rules[{Pl(k), 1, Nl(j)}] = std::move(t);
        }
    // [M_j, M_k] = i eps_{jkl} M_l  ->  M_k M_j = M_j M_k - i eps_{jkl} M_l (k > j)
    for (int j = 0; j < 3; ++j)
        for (int k = j + 1; k < 3; ++k) {
            std::vector<std::pair<K, PbwWord>> t{{K(1), PbwWord{{Ml(j), 1}, {Ml(k), 1}}}};
            for (int l = 0; l < 3; ++l)
                if (eps(j, k, l) != 0)
                    t.push_back({-i * K(eps(j, k, l)), PbwWord{{Ml(l), 1}}});
            spec.alg.rules[{Ml(k), 1, Ml(j)}] = std::move(t);
        }
    // [M_j, P_k] = i eps_{jkl} P_l  ->  P_k M_j = M_j P_k - i eps_{jkl} P_l
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            std::vector<std::pair<K, PbwWord>> t{{K(1), PbwWord{{Ml(j), 1}, {Pl(k), 1}}}};
            for (int l = 0; l < 3; ++l)
                if (eps(j, k, l) != 0)
                    t.push_back({-i * K(eps(j, k, l)), PbwWord{{Pl(l), 1}}});
            spec.alg.rules[{Pl(k), 1, Ml(j)}] = std::move(t);
        }
    // P's commute among themselves; Pi0 commutes with M, P
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < a; ++b)
            spec.alg.qcommute[{Pl(a), Pl(b)}] = K(1);
    for (int a = 0; a < 3; ++a) {
        spec.alg.qcommute[{9, Ml(a)}] = K(1);
        spec.alg.qcommute[{9, Pl(a)}] = K(1);
    }
    // Pi0^{+-1} N_j swaps pick up P_j corrections
    for (int j = 0; j < 3; ++j) {
        spec.alg.rules[{9, 1, Nl(j)}] = {{K(1), PbwWord{{Nl(j), 1}, {9, 1}}},
                                         {i * kinv, PbwWord{{Pl(j), 1}}}};
        spec.alg.rules[{9, -1, Nl(j)}] = {{K(1), PbwWord{{Nl(j), 1}, {9, -1}}},
                                          {-i * kinv, PbwWord{{Pl(j), 1}, {9, -2}}}};
    }

    spec.letter_coproduct.resize(10);
    spec.letter_antipode.resize(10);
    spec.letter_counit.assign(10, K(0));
    spec.nil_weight = {2, 2, 2, 1, 1, 1, 1, 1, 1, 0};
    for (int j = 0; j < 3; ++j) {
        // Delta N_j = N_j(x)1 + Pi0^{-1}(x)N_j - (1/kappa) eps_{jkl} P_k Pi0^{-1} (x) M_l
        spec.letter_coproduct[Nl(j)] = {{K(1), PbwWord{{Nl(j), 1}}, PbwWord{}},
                                        {K(1), PbwWord{{9, -1}}, PbwWord{{Nl(j), 1}}}};
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l)
                if (eps(j, k, l) != 0)
                    spec.letter_coproduct[Nl(j)].push_back(
                        {-kinv * K(eps(j, k, l)), PbwWord{{Pl(k), 1}, {9, -1}},
                         PbwWord{{Ml(l), 1}}});
        // Delta M_j = M_j(x)1 + 1(x)M_j
        spec.letter_coproduct[Ml(j)] = {{K(1), PbwWord{{Ml(j), 1}}, PbwWord{}},
                                        {K(1), PbwWord{}, PbwWord{{Ml(j), 1}}}};
        // Delta P_j = P_j(x)Pi0 + 1(x)P_j
        spec.letter_coproduct[Pl(j)] = {{K(1), PbwWord{{Pl(j), 1}}, PbwWord{{9, 1}}},
                                        {K(1), PbwWord{}, PbwWord{{Pl(j), 1}}}};
        // S P_j = -P_j Pi0^{-1}; S M_j = -M_j;
        // S N_j = -Pi0 N_j - (1/kappa) eps_{jkl} P_k M_l
        spec.letter_antipode[Pl(j)] = {{K(-1), PbwWord{{Pl(j), 1}, {9, -1}}}};
        spec.letter_antipode[Ml(j)] = {{K(-1), PbwWord{{Ml(j), 1}}}};
        spec.letter_antipode[Nl(j)] = {{K(-1), PbwWord{{9, 1}, {Nl(j), 1}}}};
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l)
                if (eps(j, k, l) != 0)
                    spec.letter_antipode[Nl(j)].push_back(
                        {-kinv * K(eps(j, k, l)), PbwWord{{Pl(k), 1}, {Ml(l), 1}}});
    }
    spec.seed_degree = [](const PbwMonomial& m) {
        int s = std::abs(m.e[9]);
        for (int l = 0; l < 9; ++l)
            s += m.e[l];
        return s;
    };
    for (int l = 0; l < 9; ++l) {
        PbwMonomial g{std::vector<int>(10, 0)};
        g.e[l] = 1;
        spec.generators.push_back(g);
    }
    spec.generators.push_back(PbwMonomial{{0, 0, 0, 0, 0, 0, 0, 0, 0, 1}});
    spec.generators.push_back(PbwMonomial{{0, 0, 0, 0, 0, 0, 0, 0, 0, -1}});
    spec.field = FieldDesc{"kappa"};
    return build_pbw_hopf(spec, N);
}

} // namespace focc
