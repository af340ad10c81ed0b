#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "focc/linalg.hpp"

using namespace focc;

namespace {

std::mt19937_64 rng(77002);

Matrix<QQ> rand_matrix(int rows, int cols)
{
    std::uniform_int_distribution<long> e(-4, 4);
    Matrix<QQ> m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = Rational(e(rng));
    return m;
}

Subspace<QQ> rand_subspace(int ambient, int gens)
{
    std::vector<Vec<QQ>> rows;
    std::uniform_int_distribution<long> e(-3, 3);
    for (int g = 0; g < gens; ++g) {
        Vec<QQ> v(ambient);
        for (auto& x : v)
            x = Rational(e(rng));
        rows.push_back(v);
    }
    return Subspace<QQ>(ambient, rows);
}

} // namespace

TEST_CASE("kernel of the zero map on K is everything")
{
    Matrix<QQ> z(1, 1);
    CHECK(kernel(z).dim() == 1);
}

TEST_CASE("rank-nullity on random 5x7 matrices")
{
    for (int trial = 0; trial < 25; ++trial) {
        Matrix<QQ> m = rand_matrix(5, 7);
        CHECK(m.rank() + kernel(m).dim() == 7);
        CHECK(image(m).dim() == m.rank());
        // membership in the row space agrees with solvability of basis^T x = v
        Subspace<QQ> rows(7, [&] {
            std::vector<Vec<QQ>> r;
            for (int i = 0; i < 5; ++i)
                r.push_back(m.row(i));
            return r;
        }());
        Vec<QQ> v = m.row(0);
        vec_axpy(v, Rational(2), m.row(3));
        CHECK(rows.member(v));
        CHECK(solve(rows.basis().transposed(), v).has_value());
    }
}

TEST_CASE("solve reports inconsistency by absence")
{
    Matrix<QQ> m(2, 2);
    m.at(0, 0) = Rational(1);
    m.at(1, 0) = Rational(1);
    Vec<QQ> good{Rational(2), Rational(2)};
    Vec<QQ> bad{Rational(1), Rational(2)};
    CHECK(solve(m, good).has_value());
    CHECK_FALSE(solve(m, bad).has_value());
}

TEST_CASE("sum and intersection: trivial spans")
{
    Vec<QQ> e1{Rational(1), Rational(0), Rational(0)};
    Vec<QQ> e2{Rational(0), Rational(1), Rational(0)};
    Subspace<QQ> a(3, {e1});
    Subspace<QQ> b(3, {e2});
    CHECK(subspace_sum(a, b).dim() == 2);
    CHECK(subspace_intersect(a, b).dim() == 0);
}

TEST_CASE("Grassmann dimension identity on random subspaces")
{
    for (int trial = 0; trial < 30; ++trial) {
        Subspace<QQ> a = rand_subspace(6, 3);
        Subspace<QQ> b = rand_subspace(6, 3);
        Subspace<QQ> s = subspace_sum(a, b);
        Subspace<QQ> i = subspace_intersect(a, b);
        CHECK(s.dim() + i.dim() == a.dim() + b.dim());
        CHECK(a.contains(i));
        CHECK(b.contains(i));
        CHECK(s.contains(a));
        CHECK(s.contains(b));
        // brute-force oracle for dim(a+b): rank of stacked generator matrix
        std::vector<Vec<QQ>> stacked;
        for (int r = 0; r < a.dim(); ++r)
            stacked.push_back(a.basis_vector(r));
        for (int r = 0; r < b.dim(); ++r)
            stacked.push_back(b.basis_vector(r));
        CHECK(Matrix<QQ>::from_rows(6, stacked).rank() == s.dim());
    }
}

TEST_CASE("quotient: projection/section round trip")
{
    for (int trial = 0; trial < 20; ++trial) {
        Subspace<QQ> s = rand_subspace(7, 3);
        QuotientSpace<QQ> q(7, s);
        CHECK(q.dim() == 7 - s.dim());

        // projection kills exactly the subspace
        for (int r = 0; r < s.dim(); ++r)
            CHECK(vec_is_zero(q.project(s.basis_vector(r))));

        // projection o section = identity on quotient coordinates
        std::uniform_int_distribution<long> e(-3, 3);
        Vec<QQ> qc(q.dim());
        for (auto& x : qc)
            x = Rational(e(rng));
        CHECK(q.project(q.section(qc)) == qc);

        // matrix forms agree
        Matrix<QQ> ps = q.projection_matrix() * q.section_matrix();
        CHECK(ps == Matrix<QQ>::identity(q.dim()));
    }
}

TEST_CASE("rref pivots are deterministic and reduced")
{
    Matrix<QQ> m = rand_matrix(4, 6);
    Matrix<QQ> r = rref(m);
    Matrix<QQ> r2 = rref(r);
    CHECK(r == r2);
}
