#include <catch2/catch_amalgamated.hpp>

#include "focc/presentations.hpp"
#include "focc/qlie.hpp"

using namespace focc;

namespace {

const FieldDesc Fq{"q"};
QQp rf(const std::string& s) { return parse_scalar<QQp>(s, Fq); }

struct Sl2Fixture {
    HopfAlgebra<QQp> H = uq_sl2_trunc(6);
    HBar<QQp> HB{H};
    QLieStructure<QQp> Q;

    Sl2Fixture()
    {
        Vec<QQp> kbar = bar("K");
        auto L = generate_yd_submodule(HB, Side::Left, {kbar});
        REQUIRE(L.cert.complete);
        QQp q = QQp::param();
        Vec<QQp> e(H.n(), QQp(0)), f(H.n(), QQp(0));
        e[H.label_index("E")] = QQp(1);
        f[H.label_index("F")] = QQp(1);
        auto ef = *H.mul(e, f);
        auto fe = *H.mul(f, e);
        for (int t = 0; t < H.n(); ++t)
            ef[t] -= q * q * fe[t];
        Q = change_qlie_basis(build_qlie(H, L.space),
                              {bar("K"), bar("E"), bar("F K"), HB.project(sparse_of(ef))},
                              {"u00", "u10", "u01", "u11"});
    }

    Vec<QQp> bar(const std::string& l) const
    {
        Vec<QQp> v(HB.dim(), QQp(0));
        v[HB.to_bar(H.label_index(l))] = QQp(1);
        return v;
    }

    QQp tau(int i, int j, int k, int l) const
    {
        return Q.tau.at(tidx(k, l, 4), tidx(i, j, 4));
    }
    Vec<QQp> tau_col(int i, int j) const { return Q.tau.col(tidx(i, j, 4)); }
    Vec<QQp> tau_expect(std::vector<std::tuple<int, int, QQp>> entries) const
    {
        Vec<QQp> v(16, QQp(0));
        for (const auto& [k, l, c] : entries)
            v[tidx(k, l, 4)] += c;
        return v;
    }
    Vec<QQp> bracket_col(int i, int j) const { return Q.bracket.col(tidx(i, j, 4)); }
    Vec<QQp> bracket_expect(std::vector<std::pair<int, QQp>> entries) const
    {
        Vec<QQp> v(4, QQp(0));
        for (const auto& [k, c] : entries)
            v[k] += c;
        return v;
    }
};

} // namespace

TEST_CASE_METHOD(Sl2Fixture, "U_q(sl2) braiding table on L<K-bar>")
{
    const int u00 = 0, u10 = 1, u01 = 2, u11 = 3;
    QQp one(1);

    CHECK(tau_col(u00, u00) == tau_expect({{u00, u00, one}}));
    CHECK(tau_col(u00, u10) == tau_expect({{u10, u00, rf("q^2")}}));
    CHECK(tau_col(u00, u01) == tau_expect({{u01, u00, rf("q^-2")}}));
    CHECK(tau_col(u00, u11) == tau_expect({{u11, u00, one}}));

    CHECK(tau_col(u10, u00) ==
          tau_expect({{u00, u10, one}, {u10, u00, rf("1-q^2")}}));
    CHECK(tau_col(u10, u10) == tau_expect({{u10, u10, one}}));
    CHECK(tau_col(u10, u01) == tau_expect({{u01, u10, one}, {u11, u00, one}}));
    CHECK(tau_col(u10, u11) ==
          tau_expect({{u11, u10, one}, {u10, u00, rf("-(q^3+q)")}}));

    CHECK(tau_col(u01, u00) ==
          tau_expect({{u00, u01, one}, {u01, u00, rf("1-q^-2")}}));
    CHECK(tau_col(u01, u10) == tau_expect({{u10, u01, one}, {u11, u00, -one}}));
    CHECK(tau_col(u01, u01) == tau_expect({{u01, u01, one}}));
    CHECK(tau_col(u01, u11) ==
          tau_expect({{u11, u01, one}, {u01, u00, rf("q+q^-1")}}));

    CHECK(tau_col(u11, u00) ==
          tau_expect({{u00, u11, one},
                      {u11, u00, rf("2-q^2-q^-2")},
                      {u01, u10, rf("2-q^2-q^-2")},
                      {u10, u01, rf("-(2-q^2-q^-2)")}}));
    CHECK(tau_col(u11, u11) ==
          tau_expect({{u11, u11, one},
                      {u11, u00, rf("q^-1-q^3")},
                      {u01, u10, rf("q^-1-q^3")},
                      {u10, u01, rf("-(q^-1-q^3)")}}));
    CHECK(tau_col(u11, u10) ==
          tau_expect({{u10, u11, rf("q^-2")},
                      {u11, u10, rf("1-q^-2")},
                      {u10, u00, rf("q+q^-1")}}));
    CHECK(tau_col(u11, u01) ==
          tau_expect({{u01, u11, rf("q^2")},
                      {u11, u01, rf("1-q^2")},
                      {u01, u00, rf("-(q^3+q)")}}));
}

TEST_CASE_METHOD(Sl2Fixture, "U_q(sl2) bracket table on L<K-bar>")
{
    const int u00 = 0, u10 = 1, u01 = 2, u11 = 3;
    QQp one(1);

    CHECK(vec_is_zero(bracket_col(u00, u00)));
    CHECK(vec_is_zero(bracket_col(u00, u11)));
    CHECK(bracket_col(u00, u10) == bracket_expect({{u10, rf("q^2-1")}}));
    CHECK(bracket_col(u00, u01) == bracket_expect({{u01, rf("q^-2-1")}}));

    CHECK(bracket_col(u10, u00) == bracket_expect({{u10, rf("1-q^2")}}));
    CHECK(vec_is_zero(bracket_col(u10, u10)));
    CHECK(bracket_col(u10, u01) == bracket_expect({{u11, one}}));
    // pinned by the braiding table, the factorization through (id - tau)
    // and the classical limit
    CHECK(bracket_col(u10, u11) == bracket_expect({{u10, rf("-(q^3+q)")}}));

    CHECK(bracket_col(u01, u00) == bracket_expect({{u01, rf("1-q^-2")}}));
    CHECK(bracket_col(u01, u10) == bracket_expect({{u11, -one}}));
    CHECK(vec_is_zero(bracket_col(u01, u01)));
    CHECK(bracket_col(u01, u11) == bracket_expect({{u01, rf("q+q^-1")}}));

    CHECK(bracket_col(u11, u00) == bracket_expect({{u11, rf("2-q^2-q^-2")}}));
    CHECK(bracket_col(u11, u10) == bracket_expect({{u10, rf("q+q^-1")}}));
    CHECK(bracket_col(u11, u01) == bracket_expect({{u01, rf("-(q+q^3)")}}));
    CHECK(bracket_col(u11, u11) == bracket_expect({{u11, rf("q^-1-q^3")}}));
}

TEST_CASE_METHOD(Sl2Fixture, "U_q(sl2) identities certify symbolically")
{
    auto rep = certify_identities(Q);
    CHECK(rep.braid);
    CHECK(rep.anticommutative);
    CHECK(rep.jacobi1);
    CHECK(rep.jacobi2);
    CHECK(rep.jacobi3);
    CHECK(rep.skipped_triples == 0);
    CHECK(check_bracket_factorization(Q).ok());
}

TEST_CASE_METHOD(Sl2Fixture, "classical limit q -> 1")
{
    auto lim = classical_limit(Q, Rational(1));
    // flip braiding on all 16 basis pairs, after the classical identification
    // u00 = K-bar -> 0: legs containing u00 are discarded
    const int zero_leg = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) {
                    if (k == zero_leg || l == zero_leg)
                        continue;
                    Rational expect = (k == j && l == i) ? Rational(1) : Rational(0);
                    CHECK(lim.tau.at(tidx(k, l, 4), tidx(i, j, 4)) == expect);
                }
    // sl(2)-type constants with u00 -> 0
    const int u00 = 0, u10 = 1, u01 = 2, u11 = 3;
    for (int j = 0; j < 4; ++j) {
        CHECK(vec_is_zero(lim.bracket.col(tidx(u00, j, 4))));
        CHECK(vec_is_zero(lim.bracket.col(tidx(j, u00, 4))));
    }
    Vec<QQ> h(4, Rational(0));
    h[u11] = Rational(1);
    CHECK(lim.bracket.col(tidx(u10, u01, 4)) == h); // [E, F] = H
    Vec<QQ> e2(4, Rational(0));
    e2[u10] = Rational(2);
    CHECK(lim.bracket.col(tidx(u11, u10, 4)) == e2); // [H, E] = 2E
    Vec<QQ> f2(4, Rational(0));
    f2[u01] = Rational(-2);
    CHECK(lim.bracket.col(tidx(u11, u01, 4)) == f2); // [H, F] = -2F

    // a genuine pole is reported
    QLieStructure<QQp> bad = Q;
    bad.bracket.at(0, 0) = rf("1/(1-q)");
    CHECK_THROWS(classical_limit(bad, Rational(1)));
}

TEST_CASE_METHOD(Sl2Fixture, "mutated bracket constants break the certification")
{
    QLieStructure<QQp> bad = Q;
    bad.bracket.at(1, tidx(1, 3, 4)) = rf("q"); // corrupt [u10, u11]
    auto rep = certify_identities(bad);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.jacobi1);
}

TEST_CASE("Sweedler H-bar carries a certified quantum Lie structure")
{
    auto H = sweedler_hopf<>();
    HBar<QQ> HB{H};
    auto Q = build_qlie(H, Subspace<QQ>::full(HB.dim()));
    auto rep = certify_identities(Q);
    CHECK(rep.ok());
    CHECK(check_bracket_factorization(Q).ok());
}

TEST_CASE("cocommutative primitives: flip braiding and Lie brackets")
{
    std::map<std::pair<int, int>, std::vector<std::pair<int, QQ>>> bracket;
    bracket[{0, 1}] = {{1, Rational(1)}}; // [H, E] = E
    auto H = enveloping_trunc<QQ>({"H", "E"}, bracket, 4);
    HBar<QQ> HB{H};
    Vec<QQ> hbar(HB.dim(), Rational(0)), ebar(HB.dim(), Rational(0));
    hbar[HB.to_bar(H.label_index("H"))] = Rational(1);
    ebar[HB.to_bar(H.label_index("E"))] = Rational(1);
    auto L = generate_yd_submodule(HB, Side::Left, {hbar});
    REQUIRE(L.space.dim() == 2);
    auto Q = change_qlie_basis(build_qlie(H, L.space), {hbar, ebar}, {"H", "E"});

    // flip braiding on the primitive generators
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    CHECK(Q.tau.at(tidx(k, l, 2), tidx(i, j, 2)) ==
                          ((k == j && l == i) ? Rational(1) : Rational(0)));
    // [H-bar, E-bar] = E-bar, [E-bar, H-bar] = -E-bar
    Vec<QQ> e(2, Rational(0));
    e[1] = Rational(1);
    CHECK(Q.bracket.col(tidx(0, 1, 2)) == e);
    Vec<QQ> me(2, Rational(0));
    me[1] = Rational(-1);
    CHECK(Q.bracket.col(tidx(1, 0, 2)) == me);
    CHECK(certify_identities(Q).ok());

    // right-handed variant satisfies the mirrored identities
    auto QR = build_qlie_right(H, L.space);
    auto repR = certify_identities(QR, /*right_handed=*/true);
    CHECK(repR.ok());
    CHECK(generate_yd_submodule(HB, Side::Right, {hbar}).space == L.space);
}

TEST_CASE("trivial Hopf algebra gives the empty structure")
{
    auto H = cyclic_group_hopf<>(1);
    HBar<QQ> HB{H};
    CHECK(HB.dim() == 0);
    auto Q = build_qlie(H, Subspace<QQ>(0));
    CHECK(Q.dim() == 0);
    CHECK(certify_identities(Q).ok());
}

TEST_CASE("right-handed structure on Sweedler H-bar")
{
    auto H = sweedler_hopf<>();
    HBar<QQ> HB{H};
    auto QR = build_qlie_right(H, Subspace<QQ>::full(HB.dim()));
    auto rep = certify_identities(QR, /*right_handed=*/true);
    CHECK(rep.braid);
    CHECK(rep.anticommutative);
}
