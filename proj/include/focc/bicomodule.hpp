#pragma once

#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "focc/coalgebra.hpp"

namespace focc {

// Bicomodule over coalgebras C (left) and D (right) by structure constants:
//   Delta_L(e_i) = sum (c, j, s): s * e_c (x) e_j   in C (x) M
//   Delta_R(e_i) = sum (j, c, s): s * e_j (x) e_c   in M (x) D
template <ScalarField K>
struct Bicomodule {
    Coalgebra<K> left;
    Coalgebra<K> right;
    int dim = 0;
    std::vector<std::vector<std::tuple<int, int, K>>> delta_left;
    std::vector<std::vector<std::tuple<int, int, K>>> delta_right;
    std::vector<std::string> labels;

    Vec<K> delta_left_vec(const Vec<K>& v) const
    {
        Vec<K> out(left.n * dim, K(0));
        for (int i = 0; i < dim; ++i) {
            if (v[i].is_zero())
                continue;
            for (const auto& [c, j, s] : delta_left[i])
                out[tidx(c, j, dim)] += v[i] * s;
        }
        return out;
    }
    Vec<K> delta_right_vec(const Vec<K>& v) const
    {
        Vec<K> out(dim * right.n, K(0));
        for (int i = 0; i < dim; ++i) {
            if (v[i].is_zero())
                continue;
            for (const auto& [j, c, s] : delta_right[i])
                out[tidx(j, c, right.n)] += v[i] * s;
        }
        return out;
    }

    // Bicomodule structure map into C (x) M (x) D, index ((c*dim)+j)*nD + d.
    Vec<K> ldr(const Vec<K>& v) const
    {
        Vec<K> out(left.n * dim * right.n, K(0));
        for (int i = 0; i < dim; ++i) {
            if (v[i].is_zero())
                continue;
            for (const auto& [c, j, s1] : delta_left[i])
                for (const auto& [j2, d, s2] : delta_right[j])
                    out[(c * dim + j2) * right.n + d] += v[i] * s1 * s2;
        }
        return out;
    }
};

template <ScalarField K>
Bicomodule<K> coalgebra_as_bicomodule(const Coalgebra<K>& C)
{
    Bicomodule<K> M{C, C, C.n, {}, {}, C.labels};
    M.delta_left.resize(C.n);
    M.delta_right.resize(C.n);
    for (int i = 0; i < C.n; ++i)
        for (const auto& [j, k, c] : C.coproduct[i]) {
            M.delta_left[i].emplace_back(j, k, c);
            M.delta_right[i].emplace_back(j, k, c);
        }
    return M;
}

template <ScalarField K>
ValidationReport validate_bicomodule(const Bicomodule<K>& M)
{
    ValidationReport rep;
    const int m = M.dim, nl = M.left.n, nr = M.right.n;
    for (int i = 0; i < m; ++i) {
        Vec<K> cl(m, K(0)), cr(m, K(0));
        for (const auto& [c, j, s] : M.delta_left[i])
            cl[j] += M.left.counit[c] * s;
        for (const auto& [j, c, s] : M.delta_right[i])
            cr[j] += M.right.counit[c] * s;
        cl[i] -= K(1);
        cr[i] -= K(1);
        if (!vec_is_zero(cl))
            rep.fail("left counit law fails at index " + std::to_string(i));
        if (!vec_is_zero(cr))
            rep.fail("right counit law fails at index " + std::to_string(i));

        // (Delta (x) id) Delta_L = (id (x) Delta_L) Delta_L
        Vec<K> dl(nl * nl * m, K(0));
        for (const auto& [c, j, s] : M.delta_left[i]) {
            for (const auto& [a, b, c2] : M.left.coproduct[c])
                dl[(a * nl + b) * m + j] += s * c2;
            for (const auto& [c2i, j2, s2] : M.delta_left[j])
                dl[(c * nl + c2i) * m + j2] -= s * s2;
        }
        if (!vec_is_zero(dl))
            rep.fail("left coassociativity fails at index " + std::to_string(i));

        Vec<K> dr(m * nr * nr, K(0));
        for (const auto& [j, c, s] : M.delta_right[i]) {
            for (const auto& [a, b, c2] : M.right.coproduct[c])
                dr[(j * nr + a) * nr + b] += s * c2;
            for (const auto& [j2, c2i, s2] : M.delta_right[j])
                dr[(j2 * nr + c2i) * nr + c] -= s * s2;
        }
        if (!vec_is_zero(dr))
            rep.fail("right coassociativity fails at index " + std::to_string(i));

        // commuting condition (Delta_L (x) id) Delta_R = (id (x) Delta_R) Delta_L
        Vec<K> cc(nl * m * nr, K(0));
        for (const auto& [j, d, s] : M.delta_right[i])
            for (const auto& [c, j2, s2] : M.delta_left[j])
                cc[(c * m + j2) * nr + d] += s * s2;
        for (const auto& [c, j, s] : M.delta_left[i])
            for (const auto& [j2, d, s2] : M.delta_right[j])
                cc[(c * m + j2) * nr + d] -= s * s2;
        if (!vec_is_zero(cc))
            rep.fail("left/right coactions do not commute at index " + std::to_string(i));
    }
    // injectivity of the structure map
    if (rep.ok()) {
        Matrix<K> ldr(nl * m * nr, m);
        for (int i = 0; i < m; ++i) {
            Vec<K> e(m, K(0));
            e[i] = K(1);
            Vec<K> t = M.ldr(e);
            for (int r = 0; r < ldr.rows(); ++r)
                ldr.at(r, i) = t[r];
        }
        if (ldr.rank() != m)
            rep.fail("bicomodule structure map is not injective");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Universal bicomodule  Y^U = C (x) C / Im Delta  with the canonical
// coderivation delta[a(x)b] = a eps(b) - b eps(a).
// ---------------------------------------------------------------------------

template <ScalarField K>
struct UniversalBicomodule {
    Coalgebra<K> base;
    QuotientSpace<K> quot; // of C (x) C by Im Delta
    Bicomodule<K> bicomodule;
    Matrix<K> delta;   // n x dim
    Matrix<K> pi;      // dim x n^2
    Matrix<K> sigma_r; // n^2 x dim
    Matrix<K> sigma_l; // n^2 x dim
    Matrix<K> r_eps;   // n x n^2

    int dim() const { return quot.dim(); }

    // class of e_a (x) e_b in quotient coordinates
    Vec<K> cls(int a, int b) const
    {
        Vec<K> v(base.n * base.n, K(0));
        v[tidx(a, b, base.n)] = K(1);
        return quot.project(v);
    }
    Vec<K> cls_vec(const Vec<K>& cxc) const { return quot.project(cxc); }

    // flip [a(x)b] -> [b(x)a]; well-defined for cocommutative base
    Vec<K> flip_class(const Vec<K>& y) const
    {
        const int n = base.n;
        Vec<K> amb = quot.section(y);
        Vec<K> fl(n * n, K(0));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                fl[tidx(b, a, n)] = amb[tidx(a, b, n)];
        return quot.project(fl);
    }
};

template <ScalarField K>
UniversalBicomodule<K> build_universal(const Coalgebra<K>& C)
{
    const int n = C.n;
    UniversalBicomodule<K> U;
    U.base = C;

    std::vector<Vec<K>> delta_cols;
    for (int i = 0; i < n; ++i) {
        Vec<K> e(n, K(0));
        e[i] = K(1);
        delta_cols.push_back(C.delta_vec(e));
    }
    U.quot = QuotientSpace<K>(n * n, Subspace<K>(n * n, delta_cols));
    const int dim = U.quot.dim();

    Bicomodule<K>& M = U.bicomodule;
    M.left = C;
    M.right = C;
    M.dim = dim;
    M.delta_left.resize(dim);
    M.delta_right.resize(dim);
    M.labels.resize(dim);

    U.delta = Matrix<K>(n, dim);
    U.sigma_r = Matrix<K>(n * n, dim);
    U.sigma_l = Matrix<K>(n * n, dim);
    U.pi = U.quot.projection_matrix();
    U.r_eps = Matrix<K>(n, n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            U.r_eps.at(b, tidx(a, b, n)) += C.counit[a];

    // every coset representative is a simple tensor e_a (x) e_b
    for (int k = 0; k < dim; ++k) {
        int rep = U.quot.representative_columns()[k];
        int a = rep / n, b = rep % n;
        M.labels[k] = "[" + C.labels[a] + "(x)" + C.labels[b] + "]";

        for (const auto& [a1, a2, c] : C.coproduct[a]) {
            Vec<K> cl = U.cls(a2, b);
            for (int t = 0; t < dim; ++t)
                if (!cl[t].is_zero())
                    M.delta_left[k].emplace_back(a1, t, c * cl[t]);
        }
        for (const auto& [b1, b2, c] : C.coproduct[b]) {
            Vec<K> cl = U.cls(a, b1);
            for (int t = 0; t < dim; ++t)
                if (!cl[t].is_zero())
                    M.delta_right[k].emplace_back(t, b2, c * cl[t]);
        }

        U.delta.at(a, k) += C.counit[b];
        U.delta.at(b, k) -= C.counit[a];

        // sigma_R([a(x)b]) = a(x)b - eps(a) Delta(b)
        U.sigma_r.at(tidx(a, b, n), k) += K(1);
        if (!C.counit[a].is_zero())
            for (const auto& [b1, b2, c] : C.coproduct[b])
                U.sigma_r.at(tidx(b1, b2, n), k) -= C.counit[a] * c;
        // sigma_L([a(x)b]) = -a(x)b + eps(b) Delta(a)
        U.sigma_l.at(tidx(a, b, n), k) -= K(1);
        if (!C.counit[b].is_zero())
            for (const auto& [a1, a2, c] : C.coproduct[a])
                U.sigma_l.at(tidx(a1, a2, n), k) += C.counit[b] * c;
    }
    return U;
}

// ---------------------------------------------------------------------------
// Coderivations
// ---------------------------------------------------------------------------

template <ScalarField K>
struct Coderivation {
    Bicomodule<K> source;
    Matrix<K> delta; // C.n x source.dim, target C = source.left
};

// co-Leibniz rule + eps o delta = 0
template <ScalarField K>
ValidationReport check_coderivation(const Matrix<K>& delta, const Bicomodule<K>& M)
{
    ValidationReport rep;
    const Coalgebra<K>& C = M.left;
    const int n = C.n, m = M.dim;
    if (delta.rows() != n || delta.cols() != m) {
        rep.fail("coderivation matrix shape mismatch");
        return rep;
    }
    for (int i = 0; i < m; ++i) {
        Vec<K> lhs(n * n, K(0));
        for (int a = 0; a < n; ++a) {
            if (delta.at(a, i).is_zero())
                continue;
            for (const auto& [j, k, c] : C.coproduct[a])
                lhs[tidx(j, k, n)] += delta.at(a, i) * c;
        }
        // (id (x) delta) Delta_L + (delta (x) id) Delta_R
        for (const auto& [c, j, s] : M.delta_left[i])
            for (int b = 0; b < n; ++b)
                if (!delta.at(b, j).is_zero())
                    lhs[tidx(c, b, n)] -= s * delta.at(b, j);
        for (const auto& [j, d, s] : M.delta_right[i])
            for (int b = 0; b < n; ++b)
                if (!delta.at(b, j).is_zero())
                    lhs[tidx(b, d, n)] -= s * delta.at(b, j);
        if (!vec_is_zero(lhs))
            rep.fail("co-Leibniz rule fails at index " + std::to_string(i));

        K e(0);
        for (int a = 0; a < n; ++a)
            e += C.counit[a] * delta.at(a, i);
        if (!e.is_zero())
            rep.fail("eps o delta != 0 at index " + std::to_string(i));
    }
    return rep;
}

// delta_Gamma(m) = m_(-1) Gamma(m_<0>) - Gamma(m_<0>) m_(1)
template <ScalarField K>
Coderivation<K> internal_coderivation(const Bicomodule<K>& M, const Vec<K>& gamma)
{
    if (static_cast<int>(gamma.size()) != M.dim)
        throw std::invalid_argument("internal_coderivation: functional dimension mismatch");
    Coderivation<K> d{M, Matrix<K>(M.left.n, M.dim)};
    for (int i = 0; i < M.dim; ++i) {
        for (const auto& [c, j, s] : M.delta_left[i])
            if (!gamma[j].is_zero())
                d.delta.at(c, i) += s * gamma[j];
        for (const auto& [j, c, s] : M.delta_right[i])
            if (!gamma[j].is_zero())
                d.delta.at(c, i) -= s * gamma[j];
    }
    return d;
}

// delta_alpha(a) = a_(1) alpha(a_(2)) - a_(2) alpha(a_(1)) on C itself
template <ScalarField K>
Coderivation<K> internal_on_coalgebra(const Coalgebra<K>& C, const Vec<K>& alpha)
{
    return internal_coderivation(coalgebra_as_bicomodule(C), alpha);
}

// hat(delta)(m) = [delta(m_<0>) (x) m_(1)] : M -> Y^U
template <ScalarField K>
Matrix<K> hat_delta(const UniversalBicomodule<K>& U, const Matrix<K>& delta,
                    const Bicomodule<K>& M)
{
    const int n = U.base.n;
    Matrix<K> h(U.dim(), M.dim);
    for (int i = 0; i < M.dim; ++i) {
        Vec<K> acc(n * n, K(0));
        for (const auto& [j, d, s] : M.delta_right[i])
            for (int a = 0; a < n; ++a)
                if (!delta.at(a, j).is_zero())
                    acc[tidx(a, d, n)] += s * delta.at(a, j);
        Vec<K> cl = U.cls_vec(acc);
        for (int r = 0; r < U.dim(); ++r)
            h.at(r, i) = cl[r];
    }
    return h;
}

// ---------------------------------------------------------------------------
// Generation: the smallest subbicomodule containing given vectors is the span
// of the middle legs of the structure map (single pass by coassociativity,
// closure re-verified afterwards).
// ---------------------------------------------------------------------------

template <ScalarField K>
std::vector<Vec<K>> middle_legs(const Bicomodule<K>& M, const Vec<K>& v)
{
    const int m = M.dim, nl = M.left.n, nr = M.right.n;
    Vec<K> t = M.ldr(v);
    std::vector<Vec<K>> legs;
    for (int c = 0; c < nl; ++c)
        for (int d = 0; d < nr; ++d) {
            Vec<K> leg(m, K(0));
            bool nz = false;
            for (int j = 0; j < m; ++j) {
                leg[j] = t[(c * m + j) * nr + d];
                nz = nz || !leg[j].is_zero();
            }
            if (nz)
                legs.push_back(std::move(leg));
        }
    return legs;
}

template <ScalarField K>
Subspace<K> generate_subbicomodule(const Bicomodule<K>& M, const std::vector<Vec<K>>& generators)
{
    std::vector<Vec<K>> span;
    for (const auto& g : generators) {
        if (vec_is_zero(g))
            throw std::invalid_argument("generate_subbicomodule: zero generator");
        for (auto& leg : middle_legs(M, g))
            span.push_back(std::move(leg));
    }
    Subspace<K> S(M.dim, span);
    // mandatory closure re-verification
    for (const auto& g : generators)
        if (!S.member(g))
            throw std::logic_error("generation: generator escaped its own closure");
    for (int r = 0; r < S.dim(); ++r)
        for (const auto& leg : middle_legs(M, S.basis_vector(r)))
            if (!S.member(leg))
                throw std::logic_error("generation: span is not coaction-closed");
    return S;
}

// M^natural = Ker(Delta_L - tau o Delta_R)
template <ScalarField K>
Subspace<K> cocommutator(const Bicomodule<K>& M)
{
    if (M.left.n != M.right.n)
        throw std::invalid_argument("cocommutator: left and right coalgebras differ");
    const int n = M.left.n, m = M.dim;
    Matrix<K> op(n * m, m);
    for (int i = 0; i < m; ++i) {
        for (const auto& [c, j, s] : M.delta_left[i])
            op.at(tidx(c, j, m), i) += s;
        for (const auto& [j, c, s] : M.delta_right[i])
            op.at(tidx(c, j, m), i) -= s;
    }
    return kernel(op);
}

// ---------------------------------------------------------------------------
// Decomposition M = (+) M_ij along a direct-sum splitting of the coalgebra.
// ---------------------------------------------------------------------------

template <ScalarField K>
struct BicomoduleBlock {
    int i, j;
    Subspace<K> part;
};

template <ScalarField K>
std::vector<BicomoduleBlock<K>> decompose_bicomodule(const Bicomodule<K>& M,
                                                     const std::vector<Subspace<K>>& summands)
{
    if (M.left.n != M.right.n)
        throw std::invalid_argument("decompose: bicomodule is not two-sided over one coalgebra");
    const int n = M.left.n, m = M.dim;
    int total = 0;
    for (const auto& s : summands)
        total += s.dim();
    if (total != n)
        throw std::invalid_argument("decompose: summands do not span the coalgebra");

    // projectors onto each summand along the others
    std::vector<Vec<K>> rows;
    std::vector<int> owner;
    for (size_t s = 0; s < summands.size(); ++s)
        for (int r = 0; r < summands[s].dim(); ++r) {
            rows.push_back(summands[s].basis_vector(r));
            owner.push_back(static_cast<int>(s));
        }
    Matrix<K> B = Matrix<K>::from_rows(n, rows); // n x n, invertible
    // coordinates of v in the stacked basis: solve B^T x = v
    Matrix<K> Bt = B.transposed();
    Matrix<K> aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c)
            aug.at(r, c) = Bt.at(r, c);
        aug.at(r, n + r) = K(1);
    }
    if (aug.rref_in_place() != [&] {
            std::vector<int> p(n);
            for (int k = 0; k < n; ++k)
                p[k] = k;
            return p;
        }())
        throw std::invalid_argument("decompose: summands are not independent");
    Matrix<K> Binv(n, n); // (B^T)^{-1}
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            Binv.at(r, c) = aug.at(r, n + c);

    auto projector = [&](int s) {
        Matrix<K> P(n, n);
        for (int r = 0; r < n; ++r) {
            if (owner[r] != s)
                continue;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (!Binv.at(r, b).is_zero() && !B.at(r, a).is_zero())
                        P.at(a, b) += B.at(r, a) * Binv.at(r, b);
        }
        return P;
    };
    std::vector<Matrix<K>> P;
    for (size_t s = 0; s < summands.size(); ++s)
        P.push_back(projector(static_cast<int>(s)));

    std::vector<BicomoduleBlock<K>> blocks;
    int dim_sum = 0;
    for (size_t i = 0; i < summands.size(); ++i)
        for (size_t j = 0; j < summands.size(); ++j) {
            // kernel of (id - P_i (x) id (x) P_j) o LDR
            Matrix<K> op(n * m * n, m);
            for (int v = 0; v < m; ++v) {
                Vec<K> e(m, K(0));
                e[v] = K(1);
                Vec<K> t = M.ldr(e);
                // apply (P_i (x) id (x) P_j) and subtract
                Vec<K> proj(n * m * n, K(0));
                for (int c = 0; c < n; ++c)
                    for (int jj = 0; jj < m; ++jj)
                        for (int d = 0; d < n; ++d) {
                            const K& x = t[(c * m + jj) * n + d];
                            if (x.is_zero())
                                continue;
                            for (int c2 = 0; c2 < n; ++c2) {
                                if (P[i].at(c2, c).is_zero())
                                    continue;
                                for (int d2 = 0; d2 < n; ++d2)
                                    if (!P[j].at(d2, d).is_zero())
                                        proj[(c2 * m + jj) * n + d2] +=
                                            P[i].at(c2, c) * P[j].at(d2, d) * x;
                            }
                        }
                for (int r = 0; r < n * m * n; ++r)
                    op.at(r, v) = t[r] - proj[r];
            }
            Subspace<K> part = kernel(op);
            dim_sum += part.dim();
            if (part.dim() > 0)
                blocks.push_back({static_cast<int>(i), static_cast<int>(j), std::move(part)});
        }
    if (dim_sum != m)
        throw std::logic_error("decompose: blocks do not sum to the bicomodule");
    return blocks;
}

// ---------------------------------------------------------------------------
// Cointegral / coseparability probe: solve the defining linear system.
// ---------------------------------------------------------------------------

template <ScalarField K>
std::optional<Vec<K>> find_cointegral(const Coalgebra<K>& C)
{
    const int n = C.n;
    const int unknowns = n * n;
    std::vector<Vec<K>> rows;
    Vec<K> rhs;
    // omega(Delta c) = eps(c)
    for (int i = 0; i < n; ++i) {
        Vec<K> row(unknowns, K(0));
        for (const auto& [j, k, c] : C.coproduct[i])
            row[tidx(j, k, n)] += c;
        rows.push_back(row);
        rhs.push_back(C.counit[i]);
    }
    // (id (x) omega)(Delta (x) id) = (omega (x) id)(id (x) Delta) on e_a (x) e_b
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int t = 0; t < n; ++t) {
                Vec<K> row(unknowns, K(0));
                for (const auto& [j, k, c] : C.coproduct[a])
                    if (j == t)
                        row[tidx(k, b, n)] += c;
                for (const auto& [j, k, c] : C.coproduct[b])
                    if (k == t)
                        row[tidx(a, j, n)] -= c;
                if (!vec_is_zero(row)) {
                    rows.push_back(row);
                    rhs.push_back(K(0));
                }
            }
    Matrix<K> A = Matrix<K>::from_rows(unknowns, rows);
    return solve(A, rhs);
}

// ---------------------------------------------------------------------------
// Simplicity probe by singleton generation.
// ---------------------------------------------------------------------------

enum class SimpleVerdict { Simple, HasProperSub, Inconclusive };

template <ScalarField K>
struct SimpleProbeResult {
    SimpleVerdict verdict;
    int probes_used = 0;
    std::optional<Subspace<K>> witness; // proper subbicomodule, when found
};

template <ScalarField K>
SimpleProbeResult<K> is_simple_probe(const Bicomodule<K>& M, const Subspace<K>& S,
                                     int random_budget = 32, uint64_t seed = 0x5eed)
{
    if (S.dim() == 0)
        throw std::invalid_argument("is_simple_probe: zero subspace");
    // precondition: S is a subbicomodule
    for (int r = 0; r < S.dim(); ++r)
        for (const auto& leg : middle_legs(M, S.basis_vector(r)))
            if (!S.member(leg))
                throw std::invalid_argument("is_simple_probe: subspace is not closed");

    SimpleProbeResult<K> res{SimpleVerdict::Simple, 0, std::nullopt};
    auto try_vector = [&](const Vec<K>& v) -> bool {
        if (vec_is_zero(v))
            return false;
        Subspace<K> gen = generate_subbicomodule(M, {v});
        ++res.probes_used;
        if (gen.dim() < S.dim()) {
            res.verdict = SimpleVerdict::HasProperSub;
            res.witness = gen;
            return true;
        }
        return false;
    };
    for (int r = 0; r < S.dim(); ++r)
        if (try_vector(S.basis_vector(r)))
            return res;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (int p = 0; p < random_budget; ++p) {
        Vec<K> v(M.dim, K(0));
        for (int r = 0; r < S.dim(); ++r)
            vec_axpy(v, K(coeff(rng)), S.basis_vector(r));
        if (vec_is_zero(v))
            continue;
        if (try_vector(v))
            return res;
    }
    return res; // all probes regenerate S: Simple (probe-budget verdict)
}

// ---------------------------------------------------------------------------
// Morphism machinery on universal bicomodules.
// ---------------------------------------------------------------------------

// [phi (x) phi] : Y^U_C -> Y^U_D as a matrix in quotient coordinates.
template <ScalarField K>
Matrix<K> universal_morphism_matrix(const UniversalBicomodule<K>& src,
                                    const UniversalBicomodule<K>& dst,
                                    const CoalgebraMorphism<K>& phi)
{
    const int ns = src.base.n, nd = dst.base.n;
    Matrix<K> out(dst.dim(), src.dim());
    for (int k = 0; k < src.dim(); ++k) {
        int rep = src.quot.representative_columns()[k];
        int a = rep / ns, b = rep % ns;
        Vec<K> img(nd * nd, K(0));
        for (int a2 = 0; a2 < nd; ++a2) {
            if (phi.map.at(a2, a).is_zero())
                continue;
            for (int b2 = 0; b2 < nd; ++b2)
                if (!phi.map.at(b2, b).is_zero())
                    img[tidx(a2, b2, nd)] += phi.map.at(a2, a) * phi.map.at(b2, b);
        }
        Vec<K> cl = dst.cls_vec(img);
        for (int r = 0; r < dst.dim(); ++r)
            out.at(r, k) = cl[r];
    }
    return out;
}

// image of a subspace of Y^U under [phi (x) phi] for an automorphism phi
template <ScalarField K>
Subspace<K> apply_automorphism(const UniversalBicomodule<K>& U, const CoalgebraMorphism<K>& phi,
                               const Subspace<K>& S)
{
    if (phi.map.rank() != U.base.n)
        throw std::invalid_argument("apply_automorphism: map is not invertible");
    Matrix<K> m = universal_morphism_matrix(U, U, phi);
    std::vector<Vec<K>> rows;
    for (int r = 0; r < S.dim(); ++r)
        rows.push_back(m.apply(S.basis_vector(r)));
    Subspace<K> img(U.dim(), rows);
    if (img.dim() != S.dim())
        throw std::logic_error("apply_automorphism: image dimension changed");
    return img;
}

// induced bicomodule along a coalgebra map phi : C -> D
template <ScalarField K>
Bicomodule<K> induce_along(const CoalgebraMorphism<K>& phi, const Bicomodule<K>& M)
{
    Bicomodule<K> out;
    out.left = phi.target;
    out.right = phi.target;
    out.dim = M.dim;
    out.labels = M.labels;
    out.delta_left.resize(M.dim);
    out.delta_right.resize(M.dim);
    const int nd = phi.target.n;
    for (int i = 0; i < M.dim; ++i) {
        Vec<K> accL(nd * M.dim, K(0));
        for (const auto& [c, j, s] : M.delta_left[i])
            for (int a = 0; a < nd; ++a)
                if (!phi.map.at(a, c).is_zero())
                    accL[tidx(a, j, M.dim)] += s * phi.map.at(a, c);
        for (int a = 0; a < nd; ++a)
            for (int j = 0; j < M.dim; ++j)
                if (!accL[tidx(a, j, M.dim)].is_zero())
                    out.delta_left[i].emplace_back(a, j, accL[tidx(a, j, M.dim)]);
        Vec<K> accR(M.dim * nd, K(0));
        for (const auto& [j, c, s] : M.delta_right[i])
            for (int a = 0; a < nd; ++a)
                if (!phi.map.at(a, c).is_zero())
                    accR[tidx(j, a, nd)] += s * phi.map.at(a, c);
        for (int j = 0; j < M.dim; ++j)
            for (int a = 0; a < nd; ++a)
                if (!accR[tidx(j, a, nd)].is_zero())
                    out.delta_right[i].emplace_back(j, a, accR[tidx(j, a, nd)]);
    }
    return out;
}

// image of delta restricted to a subspace S of the bicomodule
template <ScalarField K>
Subspace<K> coderivation_image(const Matrix<K>& delta, const Subspace<K>& S)
{
    std::vector<Vec<K>> vals;
    for (int r = 0; r < S.dim(); ++r)
        vals.push_back(delta.apply(S.basis_vector(r)));
    return Subspace<K>(delta.rows(), vals);
}

// the bicomodule structure induced on a coaction-closed subspace, in the
// coordinates of its RREF basis
template <ScalarField K>
Bicomodule<K> restrict_bicomodule(const Bicomodule<K>& M, const Subspace<K>& S)
{
    Bicomodule<K> out;
    out.left = M.left;
    out.right = M.right;
    out.dim = S.dim();
    out.delta_left.resize(S.dim());
    out.delta_right.resize(S.dim());
    const int nl = M.left.n, nr = M.right.n;
    for (int r = 0; r < S.dim(); ++r) {
        Vec<K> dl = M.delta_left_vec(S.basis_vector(r));
        for (int c = 0; c < nl; ++c) {
            Vec<K> comp(M.dim);
            for (int j = 0; j < M.dim; ++j)
                comp[j] = dl[tidx(c, j, M.dim)];
            if (vec_is_zero(comp))
                continue;
            auto coords = S.coords(comp);
            if (!coords)
                throw std::invalid_argument("restrict_bicomodule: subspace not left-closed");
            for (int t = 0; t < S.dim(); ++t)
                if (!(*coords)[t].is_zero())
                    out.delta_left[r].emplace_back(c, t, (*coords)[t]);
        }
        Vec<K> dr = M.delta_right_vec(S.basis_vector(r));
        for (int d = 0; d < nr; ++d) {
            Vec<K> comp(M.dim);
            for (int j = 0; j < M.dim; ++j)
                comp[j] = dr[tidx(j, d, nr)];
            if (vec_is_zero(comp))
                continue;
            auto coords = S.coords(comp);
            if (!coords)
                throw std::invalid_argument("restrict_bicomodule: subspace not right-closed");
            for (int t = 0; t < S.dim(); ++t)
                if (!(*coords)[t].is_zero())
                    out.delta_right[r].emplace_back(t, d, (*coords)[t]);
        }
    }
    return out;
}

// delta restricted to S, as a matrix on S coordinates
template <ScalarField K>
Matrix<K> restrict_map(const Matrix<K>& delta, const Subspace<K>& S)
{
    Matrix<K> out(delta.rows(), S.dim());
    for (int r = 0; r < S.dim(); ++r) {
        Vec<K> v = delta.apply(S.basis_vector(r));
        for (int t = 0; t < delta.rows(); ++t)
            out.at(t, r) = v[t];
    }
    return out;
}

} // namespace focc
