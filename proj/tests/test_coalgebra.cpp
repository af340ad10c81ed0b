#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "focc/coalgebra.hpp"
#include "focc/presentations.hpp"

using namespace focc;

namespace {
std::mt19937_64 rng(91210);
Vec<QQ> rand_functional(int n)
{
    std::uniform_int_distribution<long> e(-4, 4);
    Vec<QQ> v(n);
    for (auto& x : v)
        x = Rational(e(rng));
    return v;
}
} // namespace

TEST_CASE("validator accepts the built-in coalgebras")
{
    CHECK(validate_coalgebra(trivial_coalgebra<>()).ok());
    CHECK(validate_coalgebra(matrix_coalgebra<>(2)).ok());
    CHECK(validate_coalgebra(matrix_coalgebra<>(3)).ok());
    CHECK(validate_coalgebra(sweedler_coalgebra<>()).ok());
    CHECK(validate_coalgebra(vector_space_coalgebra<>(4)).ok());
    CHECK(validate_coalgebra(divided_power_coalgebra<>(6)).ok());
    CHECK(validate_coalgebra(set_coalgebra<>(5)).ok());
}

TEST_CASE("validator reports a mutated coproduct")
{
    Coalgebra<QQ> C = matrix_coalgebra<>(2);
    // replace Delta(u) = x(x)u + u(x)y by x(x)u only
    int u = C.label_index("u"), x = C.label_index("x");
    C.coproduct[u].clear();
    C.coproduct[u].emplace_back(x, u, Rational(1));
    ValidationReport rep = validate_coalgebra(C);
    CHECK_FALSE(rep.ok());
    bool mentions_u = false;
    for (const auto& v : rep.violations)
        mentions_u = mentions_u || v.find("'u'") != std::string::npos;
    CHECK(mentions_u);
}

TEST_CASE("cocommutativity detection")
{
    CHECK(vector_space_coalgebra<>(3).cocommutative());
    CHECK(divided_power_coalgebra<>(4).cocommutative());
    CHECK(set_coalgebra<>(3).cocommutative());
    CHECK_FALSE(matrix_coalgebra<>(2).cocommutative());
    CHECK_FALSE(sweedler_coalgebra<>().cocommutative());
}

TEST_CASE("direct sum of two trivial coalgebras is the two-point set coalgebra")
{
    auto ds = direct_sum<QQ>({trivial_coalgebra<>(), trivial_coalgebra<>()});
    CHECK(ds.sum.n == 2);
    CHECK(validate_coalgebra(ds.sum).ok());
    Coalgebra<QQ> S2 = set_coalgebra<>(2);
    for (int i = 0; i < 2; ++i) {
        CHECK(ds.sum.counit[i] == S2.counit[i]);
        CHECK(ds.sum.coproduct[i] == S2.coproduct[i]);
    }
    for (const auto& inc : ds.inclusions)
        CHECK(validate_morphism(inc).ok());
}

TEST_CASE("direct sum with a single summand is the identity")
{
    auto ds = direct_sum<QQ>({sweedler_coalgebra<>()});
    CHECK(ds.sum.n == 4);
    CHECK(ds.sum.coproduct == sweedler_coalgebra<>().coproduct);
}

TEST_CASE("M2x2 (+) K is a valid 5-dimensional coalgebra")
{
    auto ds = direct_sum<QQ>({matrix_coalgebra<>(2), trivial_coalgebra<>()});
    CHECK(ds.sum.n == 5);
    CHECK(validate_coalgebra(ds.sum).ok());
}

TEST_CASE("convolution unit law on the Sweedler coalgebra")
{
    DualAlgebra<QQ> D{sweedler_coalgebra<>()};
    for (int t = 0; t < 10; ++t) {
        Vec<QQ> a = rand_functional(4);
        CHECK(D.convolve(D.unit(), a) == a);
        CHECK(D.convolve(a, D.unit()) == a);
    }
}

TEST_CASE("point evaluations are convolution idempotents on set coalgebras")
{
    DualAlgebra<QQ> D{set_coalgebra<>(4)};
    for (int p = 0; p < 4; ++p) {
        Vec<QQ> dp(4, Rational(0));
        dp[p] = Rational(1);
        CHECK(D.convolve(dp, dp) == dp);
    }
}

TEST_CASE("dual of the 2x2 matrix coalgebra is 2x2 matrix multiplication")
{
    Coalgebra<QQ> C = matrix_coalgebra<>(2);
    DualAlgebra<QQ> D{C};
    // identification e_ab^* <-> E_ab; oracle: E_ab E_cd = [b==c] E_ad
    auto star = [&](int i, int j) {
        Vec<QQ> ei(4, Rational(0)), ej(4, Rational(0));
        ei[i] = Rational(1);
        ej[j] = Rational(1);
        return D.convolve(ei, ej);
    };
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    Vec<QQ> expect(4, Rational(0));
                    if (b == c)
                        expect[a * 2 + d] = Rational(1);
                    CHECK(star(a * 2 + b, c * 2 + d) == expect);
                }
    // in the label convention: x^* * u^* = u^*
    Vec<QQ> ex(4, Rational(0)), eu(4, Rational(0));
    ex[C.label_index("x")] = Rational(1);
    eu[C.label_index("u")] = Rational(1);
    CHECK(D.convolve(ex, eu) == eu);
}

TEST_CASE("dual algebras of built-ins are associative and unital")
{
    for (const auto& C :
         {matrix_coalgebra<>(2), sweedler_coalgebra<>(), vector_space_coalgebra<>(3),
          divided_power_coalgebra<>(5), set_coalgebra<>(4)}) {
        DualAlgebra<QQ> D{C};
        CHECK(validate_dual_algebra(D).ok());
    }
}

TEST_CASE("dual algebra is commutative iff the coalgebra is cocommutative")
{
    auto commutative = [](const Coalgebra<QQ>& C) {
        DualAlgebra<QQ> D{C};
        for (int i = 0; i < C.n; ++i)
            for (int j = 0; j < C.n; ++j) {
                Vec<QQ> a(C.n, Rational(0)), b(C.n, Rational(0));
                a[i] = Rational(1);
                b[j] = Rational(1);
                if (D.convolve(a, b) != D.convolve(b, a))
                    return false;
            }
        return true;
    };
    CHECK(commutative(divided_power_coalgebra<>(4)));
    CHECK_FALSE(commutative(matrix_coalgebra<>(2)));
}

TEST_CASE("the named involutions are coalgebra automorphisms")
{
    CHECK(validate_morphism(sweedler_involution<>()).ok());
    CHECK(validate_morphism(matrix2_involution<>()).ok());
    // and squaring them gives the identity
    const auto phi = sweedler_involution<>();
    CHECK(phi.map * phi.map == Matrix<QQ>::identity(4));
}

TEST_CASE("counit is a coalgebra morphism onto the trivial coalgebra")
{
    Coalgebra<QQ> C = sweedler_coalgebra<>();
    CoalgebraMorphism<QQ> eps{C, trivial_coalgebra<>(), Matrix<QQ>(1, 4)};
    for (int i = 0; i < 4; ++i)
        eps.map.at(0, i) = C.counit[i];
    CHECK(validate_morphism(eps).ok());
}
