#pragma once

#include <string>
#include <vector>

#include "focc/hopf.hpp"

namespace focc {

// ---------------------------------------------------------------------------
// Finite-dimensional dual Hopf algebra H* = H-degree. Basis: the dual basis;
// the unit is the counit functional (not a basis element in general).
// ---------------------------------------------------------------------------

template <ScalarField K>
HopfAlgebra<K> dual_hopf(const HopfAlgebra<K>& H)
{
    if (!H.total())
        throw std::invalid_argument("dual_hopf: total finite-dimensional algebra required");
    const int n = H.n();
    auto be = std::make_shared<TableBackend<K>>();
    be->labels.resize(n);
    be->coproduct_table.resize(n);
    be->counit_table.resize(n, K(0));
    be->antipode_table.resize(n);
    be->product.resize(n, std::vector<std::optional<SparseVec<K>>>(n));

    // products of basis elements, needed for the dual coproduct
    std::vector<std::vector<SparseVec<K>>> prod(n, std::vector<SparseVec<K>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto p = H.mul_chain_sum({{SparseVec<K>{{i, K(1)}}, SparseVec<K>{{j, K(1)}}}});
            if (!p)
                throw std::invalid_argument("dual_hopf: product table is not total");
            prod[i][j] = *p;
        }

    for (int i = 0; i < n; ++i) {
        be->labels[i] = H.label(i) + "*";
        // Delta-degree(e_i*) = mu^*: coefficient of e_i in e_j e_k
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (const auto& [t, c] : prod[j][k])
                    if (t == i && !c.is_zero())
                        be->coproduct_table[i].emplace_back(j, k, c);
        // eps-degree(alpha) = alpha(1)
        for (const auto& [u, cu] : H.unit_vector())
            if (u == i)
                be->counit_table[i] = cu;
        // S-degree = S^T
        for (int j = 0; j < n; ++j)
            for (const auto& [t, c] : H.antipode(j))
                if (t == i && !c.is_zero())
                    be->antipode_table[i].emplace_back(j, c);
        // convolution: (e_i* * e_j*)(c) = coefficient of e_i (x) e_j in Delta(c)
        for (int j = 0; j < n; ++j) {
            std::map<int, K> acc;
            for (int c = 0; c < n; ++c)
                for (const auto& [a, b, s] : H.coproduct(c))
                    if (a == i && b == j)
                        acc[c] += s;
            SparseVec<K> row;
            for (const auto& [c, s] : acc)
                if (!s.is_zero())
                    row.emplace_back(c, s);
            be->product[i][j] = std::move(row);
        }
    }

    HopfAlgebra<K> D;
    D.field = H.field;
    D.backend = be;
    // the unit of H-degree is the counit of H
    bool basis_unit = false;
    for (int i = 0; i < n; ++i) {
        SparseVec<K> eps_vec;
        for (int j = 0; j < n; ++j)
            if (!H.counit(j).is_zero())
                eps_vec.emplace_back(j, H.counit(j));
        if (eps_vec.size() == 1 && eps_vec[0].first == i && eps_vec[0].second.is_one()) {
            D.unit = i;
            basis_unit = true;
            break;
        }
    }
    if (!basis_unit) {
        D.unit = 0;
        for (int j = 0; j < n; ++j)
            if (!H.counit(j).is_zero())
                D.unit_vec.emplace_back(j, H.counit(j));
    }
    for (int i = 0; i < n; ++i)
        D.generators.push_back(i);
    return D;
}

// <X | alpha> on basis elements is the identity matrix; general pairing:
template <ScalarField K>
K pair_eval(const Vec<K>& x, const Vec<K>& alpha)
{
    K acc(0);
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero() && !alpha[i].is_zero())
            acc += x[i] * alpha[i];
    return acc;
}

// ---------------------------------------------------------------------------
// Universal one-forms of the dual: Ker mu-degree in H* (x) H*, with the
// universal differential d(alpha) = alpha (x) eps - eps (x) alpha.
// ---------------------------------------------------------------------------

template <ScalarField K>
struct UniversalOneForms {
    HopfAlgebra<K> H;    // the primal algebra
    HopfAlgebra<K> dual; // H*
    Subspace<K> ker_mu;  // subspace of H* (x) H*, coordinates (i*n + j)
    int n = 0;

    Vec<K> eps_functional() const
    {
        Vec<K> e(n, K(0));
        for (int i = 0; i < n; ++i)
            e[i] = H.counit(i);
        return e;
    }

    // d(alpha) = alpha (x) eps - eps (x) alpha
    Vec<K> d(const Vec<K>& alpha) const
    {
        Vec<K> eps = eps_functional();
        Vec<K> out(n * n, K(0));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                out[tidx(a, b, n)] = alpha[a] * eps[b] - eps[a] * alpha[b];
        return out;
    }

    Vec<K> convolve(const Vec<K>& a, const Vec<K>& b) const
    {
        std::vector<std::vector<SparseVec<K>>> chains{{sparse_of(a), sparse_of(b)}};
        auto r = dual.mul_chain_sum(chains);
        if (!r)
            throw std::logic_error("one-forms: dual product overflow");
        return dense_of(*r, n);
    }

    // right module action (sum a_i (x) b_i) * beta = sum a_i (x) (b_i * beta)
    Vec<K> act_right(const Vec<K>& omega, const Vec<K>& beta) const
    {
        Vec<K> out(n * n, K(0));
        for (int a = 0; a < n; ++a) {
            Vec<K> row(n, K(0));
            for (int b = 0; b < n; ++b)
                row[b] = omega[tidx(a, b, n)];
            if (vec_is_zero(row))
                continue;
            Vec<K> conv = convolve(row, beta);
            for (int b = 0; b < n; ++b)
                out[tidx(a, b, n)] = conv[b];
        }
        return out;
    }
};

template <ScalarField K>
UniversalOneForms<K> universal_one_forms(const HopfAlgebra<K>& H)
{
    UniversalOneForms<K> F{H, dual_hopf(H), {}, H.n()};
    const int n = F.n;
    // mu-degree as an n x n^2 matrix: (alpha (x) beta) -> alpha * beta
    Matrix<K> mu(n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<K> a(n, K(0)), b(n, K(0));
            a[i] = K(1);
            b[j] = K(1);
            Vec<K> c = F.convolve(a, b);
            for (int t = 0; t < n; ++t)
                mu.at(t, tidx(i, j, n)) = c[t];
        }
    F.ker_mu = kernel(mu);
    return F;
}

// ---------------------------------------------------------------------------
// The canonical pairing between Y^U_H and Ker mu-degree, plus the duality
// identity suite (vf8, cd2a-cd6).
// ---------------------------------------------------------------------------

// <[X (x) Y] | omega> = sum alpha^i(X) beta^i(Y); well defined on the quotient
template <ScalarField K>
K pair_focc(const UniversalBicomodule<K>& U, const Vec<K>& y, const Vec<K>& omega)
{
    const int n = U.base.n;
    Vec<K> amb = U.quot.section(y);
    K acc(0);
    for (int t = 0; t < n * n; ++t)
        if (!amb[t].is_zero() && !omega[t].is_zero())
            acc += amb[t] * omega[t];
    return acc;
}

template <ScalarField K>
Matrix<K> pairing_gram(const UniversalBicomodule<K>& U, const UniversalOneForms<K>& F)
{
    Matrix<K> G(U.dim(), F.ker_mu.dim());
    for (int r = 0; r < U.dim(); ++r) {
        Vec<K> e(U.dim(), K(0));
        e[r] = K(1);
        for (int c = 0; c < F.ker_mu.dim(); ++c)
            G.at(r, c) = pair_focc(U, e, F.ker_mu.basis_vector(c));
    }
    return G;
}

struct DualityCheck {
    std::string name;
    long tuples = 0;
    bool ok = true;
};

struct DualityReport {
    std::vector<DualityCheck> checks;
    bool ok() const
    {
        for (const auto& c : checks)
            if (!c.ok)
                return false;
        return true;
    }
};

// exhaustive verification of the seven pairing identities on basis tuples
template <ScalarField K>
DualityReport verify_duality_identities(const HopfAlgebra<K>& H)
{
    DualityReport rep;
    const int n = H.n();
    auto B = bicovariant_universal(H);
    const auto& U = B.U;
    auto F = universal_one_forms(H);
    const auto& Dual = F.dual;

    auto dual_cop = [&](int i) { return Dual.coproduct(i); };

    // vf8: <S(X)|a> = <X|S-degree a>; <XY|a> = a1(X)a2(Y); <X|a*b> = a(X1)b(X2)
    {
        DualityCheck c{"vf8", 0, true};
        for (int x = 0; x < n; ++x)
            for (int a = 0; a < n; ++a) {
                ++c.tuples;
                K lhs(0);
                for (const auto& [t, s] : H.antipode(x))
                    if (t == a)
                        lhs += s;
                K rhs(0);
                for (const auto& [t, s] : Dual.antipode(a))
                    if (t == x)
                        rhs += s;
                if (lhs != rhs)
                    c.ok = false;
            }
        for (int x = 0; x < n && c.ok; ++x)
            for (int y = 0; y < n && c.ok; ++y)
                for (int a = 0; a < n; ++a) {
                    ++c.tuples;
                    auto p = H.mul_chain_sum(
                        {{SparseVec<K>{{x, K(1)}}, SparseVec<K>{{y, K(1)}}}});
                    K lhs(0);
                    for (const auto& [t, s] : *p)
                        if (t == a)
                            lhs += s;
                    K rhs(0);
                    for (const auto& [a1, a2, s] : dual_cop(a))
                        rhs += s * K(a1 == x ? 1 : 0) * K(a2 == y ? 1 : 0);
                    if (lhs != rhs)
                        c.ok = false;
                }
        for (int x = 0; x < n && c.ok; ++x)
            for (int a = 0; a < n && c.ok; ++a)
                for (int b = 0; b < n; ++b) {
                    ++c.tuples;
                    K lhs(0); // <x | a*b>
                    for (const auto& [x1, x2, s] : H.coproduct(x))
                        lhs += s * K(x1 == a ? 1 : 0) * K(x2 == b ? 1 : 0);
                    Vec<K> va(n, K(0)), vb(n, K(0));
                    va[a] = K(1);
                    vb[b] = K(1);
                    K rhs = F.convolve(va, vb)[x];
                    if (lhs != rhs)
                        c.ok = false;
                }
        rep.checks.push_back(c);
    }

    // the one-form pairing identities on exhaustive tuples
    auto omega_basis = [&](int w) { return F.ker_mu.basis_vector(w); };
    const int W = F.ker_mu.dim();

    // cd2a: <Z |> [X(x)Y] | w> = <Z (x) [X(x)Y] | DeltaL-degree(w)> with
    // DeltaL-degree(a (x) b) = a1 * b1 (x) (a2 (x) b2)
    {
        DualityCheck c{"cd2a", 0, true};
        for (int z = 0; z < n && c.ok; ++z)
            for (int k = 0; k < U.dim() && c.ok; ++k)
                for (int w = 0; w < W; ++w) {
                    ++c.tuples;
                    Vec<K> e(U.dim(), K(0));
                    e[k] = K(1);
                    Vec<K> zy = B.act_left(SparseVec<K>{{z, K(1)}}, e);
                    K lhs = pair_focc(U, zy, omega_basis(w));
                    // rhs: expand omega over pairs (a,b)
                    K rhs(0);
                    const Vec<K>& om = omega_basis(w);
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b) {
                            const K& cab = om[tidx(a, b, n)];
                            if (cab.is_zero())
                                continue;
                            for (const auto& [a1, a2, sa] : dual_cop(a))
                                for (const auto& [b1, b2, sb] : dual_cop(b)) {
                                    // (a1 * b1)(z) <[X(x)Y] | a2 (x) b2>
                                    Vec<K> va(n, K(0)), vb(n, K(0));
                                    va[a1] = K(1);
                                    vb[b1] = K(1);
                                    K head = F.convolve(va, vb)[z];
                                    if (head.is_zero())
                                        continue;
                                    Vec<K> o2(n * n, K(0));
                                    o2[tidx(a2, b2, n)] = K(1);
                                    rhs += cab * sa * sb * head * pair_focc(U, e, o2);
                                }
                        }
                    if (lhs != rhs)
                        c.ok = false;
                }
        rep.checks.push_back(c);
    }

    // cd2: <[X(x)Y] <| Z | w> = <[X(x)Y] (x) Z | DeltaR-degree(w)>,
    // DeltaR-degree(a (x) b) = (a1 (x) b1) (x) a2 * b2
    {
        DualityCheck c{"cd2", 0, true};
        for (int z = 0; z < n && c.ok; ++z)
            for (int k = 0; k < U.dim() && c.ok; ++k)
                for (int w = 0; w < W; ++w) {
                    ++c.tuples;
                    Vec<K> e(U.dim(), K(0));
                    e[k] = K(1);
                    Vec<K> yz = B.act_right(e, SparseVec<K>{{z, K(1)}});
                    K lhs = pair_focc(U, yz, omega_basis(w));
                    K rhs(0);
                    const Vec<K>& om = omega_basis(w);
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b) {
                            const K& cab = om[tidx(a, b, n)];
                            if (cab.is_zero())
                                continue;
                            for (const auto& [a1, a2, sa] : dual_cop(a))
                                for (const auto& [b1, b2, sb] : dual_cop(b)) {
                                    Vec<K> va(n, K(0)), vb(n, K(0));
                                    va[a2] = K(1);
                                    vb[b2] = K(1);
                                    K tail = F.convolve(va, vb)[z];
                                    if (tail.is_zero())
                                        continue;
                                    Vec<K> o2(n * n, K(0));
                                    o2[tidx(a1, b1, n)] = K(1);
                                    rhs += cab * sa * sb * tail * pair_focc(U, e, o2);
                                }
                        }
                    if (lhs != rhs)
                        c.ok = false;
                }
        rep.checks.push_back(c);
    }

    // cd3: <DeltaL^U [X(x)Y] | g (x) w> = <[X(x)Y] | g |> w>, g |> w = g*a (x) b
    {
        DualityCheck c{"cd3", 0, true};
        for (int g = 0; g < n && c.ok; ++g)
            for (int k = 0; k < U.dim() && c.ok; ++k)
                for (int w = 0; w < W; ++w) {
                    ++c.tuples;
                    K lhs(0);
                    for (const auto& [cc, j, s] : U.bicomodule.delta_left[k]) {
                        Vec<K> ej(U.dim(), K(0));
                        ej[j] = K(1);
                        lhs += s * K(cc == g ? 1 : 0) * pair_focc(U, ej, omega_basis(w));
                    }
                    // g |> w: convolve g into the first tensor factor
                    Vec<K> gw(n * n, K(0));
                    const Vec<K>& om = omega_basis(w);
                    Vec<K> vg(n, K(0));
                    vg[g] = K(1);
                    for (int b = 0; b < n; ++b) {
                        Vec<K> col(n, K(0));
                        for (int a = 0; a < n; ++a)
                            col[a] = om[tidx(a, b, n)];
                        if (vec_is_zero(col))
                            continue;
                        Vec<K> conv = F.convolve(vg, col);
                        for (int a = 0; a < n; ++a)
                            gw[tidx(a, b, n)] += conv[a];
                    }
                    Vec<K> ek(U.dim(), K(0));
                    ek[k] = K(1);
                    K rhs = pair_focc(U, ek, gw);
                    if (lhs != rhs)
                        c.ok = false;
                }
        rep.checks.push_back(c);
    }

    // cd4: <DeltaR^U [X(x)Y] | w (x) g> = <[X(x)Y] | w <| g>, w <| g = a (x) b*g
    {
        DualityCheck c{"cd4", 0, true};
        for (int g = 0; g < n && c.ok; ++g)
            for (int k = 0; k < U.dim() && c.ok; ++k)
                for (int w = 0; w < W; ++w) {
                    ++c.tuples;
                    K lhs(0);
                    for (const auto& [j, cc, s] : U.bicomodule.delta_right[k]) {
                        Vec<K> ej(U.dim(), K(0));
                        ej[j] = K(1);
                        lhs += s * K(cc == g ? 1 : 0) * pair_focc(U, ej, omega_basis(w));
                    }
                    Vec<K> vg(n, K(0));
                    vg[g] = K(1);
                    Vec<K> ek(U.dim(), K(0));
                    ek[k] = K(1);
                    K rhs = pair_focc(U, ek, F.act_right(omega_basis(w), vg));
                    if (lhs != rhs)
                        c.ok = false;
                }
        rep.checks.push_back(c);
    }

    // cd5: <delta^U [X(x)Y] | a> = <[X(x)Y] | d a> = a(X)eps(Y) - a(Y)eps(X)
    {
        DualityCheck c{"cd5", 0, true};
        for (int k = 0; k < U.dim() && c.ok; ++k)
            for (int a = 0; a < n; ++a) {
                ++c.tuples;
                Vec<K> ek(U.dim(), K(0));
                ek[k] = K(1);
                Vec<K> va(n, K(0));
                va[a] = K(1);
                K lhs = pair_eval(U.delta.apply(ek), va);
                K mid = pair_focc(U, ek, F.d(va));
                // explicit right-hand side on the representative [X (x) Y]
                int rc = U.quot.representative_columns()[k];
                int X = rc / n, Y = rc % n;
                K rhs = K(a == X ? 1 : 0) * H.counit(Y) - K(a == Y ? 1 : 0) * H.counit(X);
                if (lhs != mid || mid != rhs)
                    c.ok = false;
            }
        rep.checks.push_back(c);
    }

    // cd6: <[X(x)1] <| Y | w> = <[X(x)1] (x) Y | Delta-degree(w)> with
    // Delta-degree(a (x) b) = a1 (x) (a2 * b)   (the s' map on the dual side)
    {
        DualityCheck c{"cd6", 0, true};
        for (int X = 0; X < n && c.ok; ++X)
            for (int Y = 0; Y < n && c.ok; ++Y)
                for (int w = 0; w < W; ++w) {
                    ++c.tuples;
                    Vec<K> base = U.cls(X, H.unit);
                    Vec<K> img = B.act_right(base, SparseVec<K>{{Y, K(1)}});
                    K lhs = pair_focc(U, img, omega_basis(w));
                    // rhs = <X-bar (x) Y | s'(w)> evaluated at the representative X;
                    // the contracted combination lands where the pairing is
                    // representative independent
                    K rhs(0);
                    const Vec<K>& om = omega_basis(w);
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b) {
                            const K& cab = om[tidx(a, b, n)];
                            if (cab.is_zero())
                                continue;
                            for (const auto& [a1, a2, sa] : dual_cop(a)) {
                                if (a1 != X)
                                    continue;
                                Vec<K> va(n, K(0)), vb(n, K(0));
                                va[a2] = K(1);
                                vb[b] = K(1);
                                rhs += cab * sa * F.convolve(va, vb)[Y];
                            }
                        }
                    if (lhs != rhs)
                        c.ok = false;
                }
        rep.checks.push_back(c);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Quantum tangent space of the dual and the special covariant vector fields.
// ---------------------------------------------------------------------------

template <ScalarField K>
struct TangentSpace {
    UniversalOneForms<K> forms;
    // functionals on Ker mu-degree, in the coordinates of its RREF basis
    Subspace<K> tangent; // subspace of (Ker mu-degree)^*
};

template <ScalarField K>
TangentSpace<K> tangent_space(const HopfAlgebra<K>& H)
{
    auto F = universal_one_forms(H);
    const int n = F.n;
    const int W = F.ker_mu.dim();
    // constraints: v( d(alpha) * beta - d(alpha) beta(1) ) = 0 for basis alpha, beta
    std::vector<Vec<K>> rows;
    for (int a = 0; a < n; ++a) {
        Vec<K> va(n, K(0));
        va[a] = K(1);
        Vec<K> da = F.d(va);
        for (int b = 0; b < n; ++b) {
            Vec<K> vb(n, K(0));
            vb[b] = K(1);
            Vec<K> lhs = F.act_right(da, vb);
            K beta_at_one(0);
            for (const auto& [u, cu] : F.H.unit_vector())
                beta_at_one += cu * vb[u];
            for (int t = 0; t < n * n; ++t)
                lhs[t] -= beta_at_one * da[t];
            if (vec_is_zero(lhs))
                continue;
            auto crd = F.ker_mu.coords(lhs);
            if (!crd)
                throw std::logic_error("tangent_space: constraint escapes Ker mu-degree");
            if (!vec_is_zero(*crd))
                rows.push_back(*crd);
        }
    }
    Matrix<K> constraints = Matrix<K>::from_rows(W, rows);
    return TangentSpace<K>{std::move(F), kernel(constraints)};
}

// v(X-bar)(sum a^i (x) b^i) = sum a^i(delta(X)) b^i(1), delta(X) = X - eps(X)1
template <ScalarField K>
Vec<K> special_tangent_functional(const TangentSpace<K>& T, const HBar<K>& HB, const Vec<K>& bar)
{
    const int n = T.forms.n;
    SparseVec<K> x = HB.section(bar);
    Vec<K> dx(n, K(0));
    for (const auto& [i, c] : x)
        dx[i] += c;
    K eps = T.forms.H.counit_of(x);
    if (!eps.is_zero())
        for (const auto& [u, cu] : T.forms.H.unit_vector())
            dx[u] -= eps * cu;
    Vec<K> one(n, K(0));
    for (const auto& [u, cu] : T.forms.H.unit_vector())
        one[u] += cu;
    // value on each Ker mu-degree basis vector
    Vec<K> vals(T.forms.ker_mu.dim(), K(0));
    for (int w = 0; w < T.forms.ker_mu.dim(); ++w) {
        const Vec<K> om = T.forms.ker_mu.basis_vector(w);
        K acc(0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const K& cab = om[tidx(a, b, n)];
                if (!cab.is_zero())
                    acc += cab * dx[a] * one[b];
            }
        vals[w] = acc;
    }
    return vals;
}

// evaluate a tangent functional on a one-form given in ambient coordinates
template <ScalarField K>
K tangent_eval(const TangentSpace<K>& T, const Vec<K>& v, const Vec<K>& omega)
{
    auto crd = T.forms.ker_mu.coords(omega);
    if (!crd)
        throw std::invalid_argument("tangent_eval: not a one-form");
    K acc(0);
    for (int w = 0; w < T.forms.ker_mu.dim(); ++w)
        if (!v[w].is_zero() && !(*crd)[w].is_zero())
            acc += v[w] * (*crd)[w];
    return acc;
}

// v^|>(alpha) = v(d alpha_(1)) alpha_(2) as an endomorphism of H-degree
template <ScalarField K>
Matrix<K> vector_field_action(const TangentSpace<K>& T, const Vec<K>& v)
{
    const int n = T.forms.n;
    Matrix<K> m(n, n);
    for (int a = 0; a < n; ++a) {
        for (const auto& [a1, a2, s] : T.forms.dual.coproduct(a)) {
            Vec<K> va(n, K(0));
            va[a1] = K(1);
            K val = tangent_eval(T, v, T.forms.d(va));
            if (!val.is_zero())
                m.at(a2, a) += s * val;
        }
    }
    return m;
}

} // namespace focc
