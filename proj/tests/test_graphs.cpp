#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "focc/graphs.hpp"
#include "focc/presentations.hpp"

using namespace focc;

TEST_CASE("graph extraction from coordinate subspaces")
{
    auto C = set_coalgebra<>(3);
    auto U = build_universal(C);
    Subspace<QQ> S = generate_subbicomodule(U.bicomodule, {U.cls(0, 1)});
    CHECK(S.dim() == 1);
    FoccGraph g = set_coalgebra_graph(U, S);
    REQUIRE(g.edges.size() == 1);
    // component [p1 (x) p2] gives the edge p2 -> p1
    CHECK(g.edges[0] == std::make_pair(1, 0));

    // a skew combination generates both coordinates (singleton subadditivity)
    Vec<QQ> mix(U.dim(), Rational(0));
    vec_axpy(mix, Rational(2), U.cls(0, 1));
    vec_axpy(mix, Rational(-3), U.cls(2, 0));
    Subspace<QQ> S2 = generate_subbicomodule(U.bicomodule, {mix});
    CHECK(S2.dim() == 2);
    CHECK(set_coalgebra_graph(U, S2).edges.size() == 2);

    // a non-coordinate subspace is rejected
    CHECK_THROWS(set_coalgebra_graph(U, Subspace<QQ>(U.dim(), {mix})));
}

TEST_CASE("loops cannot appear")
{
    FoccGraph g;
    g.vertices = 2;
    g.edges = {{0, 0}};
    CHECK_THROWS(g.normalize());
}

TEST_CASE("graph isomorphism distinguishes orientation patterns")
{
    // p->q, r->s (two disjoint arrows) vs p->q, q->p (a 2-cycle)
    FoccGraph two_arrows{4, {{0, 1}, {2, 3}}};
    FoccGraph two_cycle{4, {{0, 1}, {1, 0}}};
    two_arrows.normalize();
    two_cycle.normalize();
    CHECK_FALSE(graph_isomorphic(two_arrows, two_cycle));

    FoccGraph relabel{4, {{2, 0}, {3, 1}}};
    relabel.normalize();
    CHECK(graph_isomorphic(two_arrows, relabel));
}

TEST_CASE("classification counts: 1, 5, 17")
{
    CHECK(classify_set_foccs(6, 1).size() == 1);
    CHECK(classify_set_foccs(6, 2).size() == 5);
    CHECK(classify_set_foccs(6, 3).size() == 17);
    // class sizes add up to the number of labeled calculi
    long total = 0;
    for (const auto& cl : classify_set_foccs(6, 2))
        total += cl.count;
    CHECK(total == 30L * 29 / 2);
}

TEST_CASE("FOCC isomorphism agrees with graph isomorphism (sampled)")
{
    const int points = 5;
    auto C = set_coalgebra<>(points);
    auto U = build_universal(C);
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> vtx(0, points - 1);

    auto random_focc = [&](int dim) {
        std::set<std::pair<int, int>> chosen;
        while (static_cast<int>(chosen.size()) < dim) {
            int p = vtx(rng), q = vtx(rng);
            if (p != q)
                chosen.insert({p, q});
        }
        std::vector<Vec<QQ>> gens;
        for (const auto& [p, q] : chosen)
            gens.push_back(U.cls(p, q));
        return generate_subbicomodule(U.bicomodule, gens);
    };

    for (int t = 0; t < 25; ++t) {
        int dim = 1 + t % 3;
        Subspace<QQ> S1 = random_focc(dim);
        Subspace<QQ> S2 = random_focc(dim);
        bool graph_iso = graph_isomorphic(set_coalgebra_graph(U, S1), set_coalgebra_graph(U, S2));
        bool focc_iso = set_focc_isomorphic(U, S1, S2);
        CHECK(graph_iso == focc_iso);
    }
}

TEST_CASE("DOT export uses the fixed edge convention")
{
    auto C = set_coalgebra<>(3);
    auto U = build_universal(C);
    Subspace<QQ> S = generate_subbicomodule(U.bicomodule, {U.cls(0, 2)});
    std::string dot = to_dot(set_coalgebra_graph(U, S));
    CHECK(dot.find("p3 -> p1;") != std::string::npos);
}
