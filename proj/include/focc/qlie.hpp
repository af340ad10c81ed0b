#pragma once

#include <map>
#include <string>
#include <vector>

#include "focc/hopf.hpp"

namespace focc {

// Small sparse matrix, enough for composing maps on L (x) L (x) L.
template <ScalarField K>
struct SparseMat {
    int rows = 0, cols = 0;
    std::vector<std::map<int, K>> data; // per row

    SparseMat() = default;
    SparseMat(int r, int c) : rows(r), cols(c), data(r) {}

    static SparseMat identity(int n)
    {
        SparseMat m(n, n);
        for (int k = 0; k < n; ++k)
            m.data[k][k] = K(1);
        return m;
    }
    static SparseMat from_dense(const Matrix<K>& d)
    {
        SparseMat m(d.rows(), d.cols());
        for (int r = 0; r < d.rows(); ++r)
            for (int c = 0; c < d.cols(); ++c)
                if (!d.at(r, c).is_zero())
                    m.data[r][c] = d.at(r, c);
        return m;
    }

    void add(int r, int c, const K& v)
    {
        auto& cell = data[r][c];
        cell += v;
        if (cell.is_zero())
            data[r].erase(c);
    }

    friend SparseMat operator*(const SparseMat& a, const SparseMat& b)
    {
        if (a.cols != b.rows)
            throw std::invalid_argument("SparseMat: shape mismatch");
        SparseMat m(a.rows, b.cols);
        for (int r = 0; r < a.rows; ++r)
            for (const auto& [k, av] : a.data[r])
                for (const auto& [c, bv] : b.data[k])
                    m.add(r, c, av * bv);
        return m;
    }
    friend SparseMat operator-(const SparseMat& a, const SparseMat& b)
    {
        if (a.rows != b.rows || a.cols != b.cols)
            throw std::invalid_argument("SparseMat: shape mismatch");
        SparseMat m = a;
        for (int r = 0; r < b.rows; ++r)
            for (const auto& [c, v] : b.data[r])
                m.add(r, c, -v);
        return m;
    }
    bool is_zero() const
    {
        for (const auto& row : data)
            if (!row.empty())
                return false;
        return true;
    }

    // m (x) id_n  and  id_n (x) m
    SparseMat tensor_right_id(int n) const
    {
        SparseMat m(rows * n, cols * n);
        for (int r = 0; r < rows; ++r)
            for (const auto& [c, v] : data[r])
                for (int k = 0; k < n; ++k)
                    m.data[r * n + k][c * n + k] = v;
        return m;
    }
    SparseMat tensor_left_id(int n) const
    {
        SparseMat m(n * rows, n * cols);
        for (int k = 0; k < n; ++k)
            for (int r = 0; r < rows; ++r)
                for (const auto& [c, v] : data[r])
                    m.data[k * rows + r][k * cols + c] = v;
        return m;
    }
};

// Braiding and bracket tables of a Y-D submodule L of H-bar, with per-pair
// totality flags for truncated algebras.
template <ScalarField K>
struct QLieStructure {
    HopfAlgebra<K> H;
    Subspace<K> L;              // in H-bar coordinates
    std::vector<Vec<K>> basis;  // the basis the tables are expressed in
    std::vector<std::string> basis_labels;
    Matrix<K> tau;     // dim^2 x dim^2: tau(e_i (x) e_j) column i*dim+j
    Matrix<K> bracket; // dim x dim^2
    std::vector<std::vector<bool>> pair_total;
    Certificate cert;

    int dim() const { return L.dim(); }
};

namespace detail {

// coordinates of an H-bar (x) H-bar tensor in L (x) L, if it lies there
template <ScalarField K>
std::optional<Matrix<K>> tensor_coords(const Subspace<K>& L,
                                       const std::map<std::pair<int, int>, K>& T)
{
    const int amb = L.ambient(), d = L.dim();
    // contract the left leg first
    std::map<int, Vec<K>> cols; // right bar index -> left vector
    for (const auto& [ab, c] : T)
        cols.try_emplace(ab.second, Vec<K>(amb, K(0))).first->second[ab.first] += c;
    Matrix<K> half(d, amb); // rows: L-coordinate of the left leg
    for (auto& [beta, col] : cols) {
        auto crd = L.coords(col);
        if (!crd)
            return std::nullopt;
        for (int k = 0; k < d; ++k)
            half.at(k, beta) = (*crd)[k];
    }
    Matrix<K> out(d, d);
    for (int k = 0; k < d; ++k) {
        auto crd = L.coords(half.row(k));
        if (!crd)
            return std::nullopt;
        for (int l = 0; l < d; ++l)
            out.at(k, l) = (*crd)[l];
    }
    return out;
}

} // namespace detail

// adjoint action of a general algebra element x (sparse, in H coordinates)
template <ScalarField K>
std::optional<Vec<K>> ad_left_elem(const HBar<K>& HB, const SparseVec<K>& x, const Vec<K>& bar,
                                   Certificate* cert = nullptr)
{
    SparseVec<K> a = HB.section(bar);
    std::vector<std::vector<SparseVec<K>>> chains;
    for (const auto& [xi, xc] : x)
        for (const auto& [x1, x2, c] : HB.H.coproduct(xi)) {
            SparseVec<K> head{{x1, xc * c}};
            chains.push_back({head, a, HB.H.antipode(x2)});
        }
    auto r = HB.H.mul_chain_sum(chains, cert);
    if (!r)
        return std::nullopt;
    return HB.project(*r);
}

// tau_q(X-bar (x) Y-bar) = ad_{X_(1)} Y-bar (x) X_(2)-bar  and
// [X-bar, Y-bar]_q = ad_{delta(X-bar)} Y-bar, delta(X-bar) = X - eps(X) 1.
template <ScalarField K>
QLieStructure<K> build_qlie(const HopfAlgebra<K>& H, const Subspace<K>& L)
{
    HBar<K> HB{H};
    if (!is_yd_submodule(HB, L))
        throw std::invalid_argument("build_qlie: not a Y-D submodule");
    const int d = L.dim();
    QLieStructure<K> Q{H, L, {}, {}, Matrix<K>(d * d, d * d), Matrix<K>(d, d * d),
                       std::vector<std::vector<bool>>(d, std::vector<bool>(d, true)),
                       {}};
    Q.cert.truncation = H.truncation;
    for (int r = 0; r < d; ++r) {
        std::string lbl;
        Vec<K> v = L.basis_vector(r);
        Q.basis.push_back(v);
        for (int t = 0; t < HB.dim(); ++t)
            if (!v[t].is_zero())
                lbl += (lbl.empty() ? "" : " + ") + HB.label(t);
        Q.basis_labels.push_back(lbl);
    }

    for (int i = 0; i < d; ++i) {
        SparseVec<K> xi = HB.section(L.basis_vector(i));
        K eps_x = H.counit_of(xi);
        for (int j = 0; j < d; ++j) {
            Vec<K> vj = L.basis_vector(j);
            // braiding: sum over Delta(section(x))
            std::map<std::pair<int, int>, K> T;
            bool total = true;
            std::string witness;
            for (const auto& [bi, bc] : xi) {
                for (const auto& [x1, x2, c] : H.coproduct(bi)) {
                    if (x2 == H.unit)
                        continue; // second leg dies in H-bar
                    auto w = HB.ad_left(x1, vj, &Q.cert);
                    if (!w) {
                        total = false;
                        break;
                    }
                    int beta = HB.to_bar(x2);
                    for (int t = 0; t < HB.dim(); ++t)
                        if (!(*w)[t].is_zero()) {
                            auto key = std::make_pair(t, beta);
                            T[key] += bc * c * (*w)[t];
                            if (T[key].is_zero())
                                T.erase(key);
                        }
                }
                if (!total)
                    break;
            }
            // bracket: ad_{x - eps(x) 1}
            std::optional<Vec<K>> br = ad_left_elem(HB, xi, vj, &Q.cert);
            if (br) {
                Vec<K> b = *br;
                if (!eps_x.is_zero())
                    vec_axpy(b, -eps_x, vj);
                auto crd = L.coords(b);
                if (!crd)
                    throw std::logic_error("build_qlie: bracket leaves the submodule");
                for (int k = 0; k < d; ++k)
                    Q.bracket.at(k, tidx(i, j, d)) = (*crd)[k];
            } else
                total = false;

            if (!total) {
                Q.pair_total[i][j] = false;
                continue;
            }
            auto coords = detail::tensor_coords(L, T);
            if (!coords)
                throw std::logic_error("build_qlie: braiding leaves the submodule");
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l)
                    Q.tau.at(tidx(k, l, d), tidx(i, j, d)) = coords->at(k, l);
        }
    }
    return Q;
}

// right-handed variant: tau^R(X (x) Y) = Y_(1) (x) ad^R_{Y_(2)} X,
// [X, Y]^R = ad^R_{delta(Y)} X
template <ScalarField K>
QLieStructure<K> build_qlie_right(const HopfAlgebra<K>& H, const Subspace<K>& L)
{
    HBar<K> HB{H};
    const int d = L.dim();
    QLieStructure<K> Q{H, L, {}, {}, Matrix<K>(d * d, d * d), Matrix<K>(d, d * d),
                       std::vector<std::vector<bool>>(d, std::vector<bool>(d, true)),
                       {}};
    Q.cert.truncation = H.truncation;
    for (int r = 0; r < d; ++r)
        Q.basis.push_back(L.basis_vector(r));
    for (int j = 0; j < d; ++j) {
        SparseVec<K> yj = HB.section(L.basis_vector(j));
        K eps_y = H.counit_of(yj);
        for (int i = 0; i < d; ++i) {
            Vec<K> vi = L.basis_vector(i);
            std::map<std::pair<int, int>, K> T;
            bool total = true;
            for (const auto& [bj, bc] : yj) {
                for (const auto& [y1, y2, c] : H.coproduct(bj)) {
                    if (y1 == H.unit)
                        continue;
                    auto w = HB.ad_right(y2, vi, &Q.cert);
                    if (!w) {
                        total = false;
                        break;
                    }
                    int beta = HB.to_bar(y1);
                    for (int t = 0; t < HB.dim(); ++t)
                        if (!(*w)[t].is_zero()) {
                            auto key = std::make_pair(beta, t);
                            T[key] += bc * c * (*w)[t];
                            if (T[key].is_zero())
                                T.erase(key);
                        }
                }
                if (!total)
                    break;
            }
            // bracket^R: ad^R over Delta legs of y, minus eps correction
            std::vector<std::vector<SparseVec<K>>> chains;
            SparseVec<K> a = HB.section(vi);
            for (const auto& [bj, bc] : yj)
                for (const auto& [y1, y2, c] : H.coproduct(bj)) {
                    SparseVec<K> head = HB.H.antipode(y1);
                    for (auto& [idx, cc] : head)
                        cc = cc * bc * c;
                    chains.push_back({head, a, SparseVec<K>{{y2, K(1)}}});
                }
            auto r = H.mul_chain_sum(chains, &Q.cert);
            if (r) {
                Vec<K> b = HB.project(*r);
                if (!eps_y.is_zero())
                    vec_axpy(b, -eps_y, vi);
                auto crd = L.coords(b);
                if (!crd)
                    throw std::logic_error("build_qlie_right: bracket leaves the submodule");
                for (int k = 0; k < d; ++k)
                    Q.bracket.at(k, tidx(i, j, d)) = (*crd)[k];
            } else
                total = false;

            if (!total) {
                Q.pair_total[i][j] = false;
                continue;
            }
            auto coords = detail::tensor_coords(L, T);
            if (!coords)
                throw std::logic_error("build_qlie_right: braiding leaves the submodule");
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l)
                    Q.tau.at(tidx(k, l, d), tidx(i, j, d)) = coords->at(k, l);
        }
    }
    return Q;
}

struct QLieReport {
    bool braid = false;
    bool anticommutative = false; // bracket vanishes on Ker(id - tau)
    bool jacobi1 = false, jacobi2 = false, jacobi3 = false;
    int skipped_triples = 0;
    std::vector<std::string> failures;
    bool ok() const { return braid && anticommutative && jacobi1 && jacobi2 && jacobi3; }
};

// Symbolic verification of the braid relation, braided anticommutativity and
// the three braided Jacobi identities on basis triples. For truncated
// algebras only fully total tables certify; partial pairs are reported.
template <ScalarField K>
QLieReport certify_identities(const QLieStructure<K>& Q, bool right_handed = false)
{
    QLieReport rep;
    const int d = Q.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (!Q.pair_total[i][j])
                ++rep.skipped_triples;
    if (rep.skipped_triples > 0) {
        rep.failures.push_back("truncated: " + std::to_string(rep.skipped_triples) +
                               " pairs not total, identities not certified");
        return rep;
    }

    SparseMat<K> tau = SparseMat<K>::from_dense(Q.tau);
    SparseMat<K> C = SparseMat<K>::from_dense(Q.bracket);
    SparseMat<K> id1 = SparseMat<K>::identity(d);
    SparseMat<K> id2 = SparseMat<K>::identity(d * d);

    // braid relation on L^3
    SparseMat<K> t12 = tau.tensor_right_id(d);
    SparseMat<K> t23 = tau.tensor_left_id(d);
    rep.braid = (t23 * t12 * t23 - t12 * t23 * t12).is_zero();
    if (!rep.braid)
        rep.failures.push_back("braid relation fails");

    // bracket vanishes on Ker(id - tau)
    Subspace<K> ker = kernel(Q.tau - Matrix<K>::identity(d * d));
    rep.anticommutative = true;
    for (int r = 0; r < ker.dim(); ++r)
        if (!vec_is_zero(Q.bracket.apply(ker.basis_vector(r)))) {
            rep.anticommutative = false;
            rep.failures.push_back("bracket does not vanish on Ker(id - tau)");
            break;
        }

    SparseMat<K> C12 = C.tensor_right_id(d);   // C (x) id : L^3 -> L^2
    SparseMat<K> C23 = C.tensor_left_id(d);    // id (x) C : L^3 -> L^2
    SparseMat<K> dtau = id2 - tau;

    if (!right_handed) {
        // qJ1: C(C(x)id) = C(id(x)C)((id-tau)(x)id)
        rep.jacobi1 = (C * C12 - C * C23 * dtau.tensor_right_id(d)).is_zero();
        // qJ2: tau(id(x)C) = (C(x)id)(id(x)tau)(tau(x)id)
        rep.jacobi2 =
            (tau * C23 - C12 * tau.tensor_left_id(d) * tau.tensor_right_id(d)).is_zero();
        // qJ3: tau(C(x)id) - (id(x)C)(tau(x)id)(id(x)tau)
        //      = (C(x)id)(id(x)tau)((id-tau^2)(x)id)
        SparseMat<K> lhs =
            tau * C12 - C23 * tau.tensor_right_id(d) * tau.tensor_left_id(d);
        SparseMat<K> rhs =
            C12 * tau.tensor_left_id(d) * (id2 - tau * tau).tensor_right_id(d);
        rep.jacobi3 = (lhs - rhs).is_zero();
    } else {
        // mirror images under full tensor reversal
        rep.jacobi1 = (C * C23 - C * C12 * dtau.tensor_left_id(d)).is_zero();
        rep.jacobi2 =
            (tau * C12 - C23 * tau.tensor_right_id(d) * tau.tensor_left_id(d)).is_zero();
        SparseMat<K> lhs =
            tau * C23 - C12 * tau.tensor_left_id(d) * tau.tensor_right_id(d);
        SparseMat<K> rhs =
            C23 * tau.tensor_right_id(d) * (id2 - tau * tau).tensor_left_id(d);
        rep.jacobi3 = (lhs - rhs).is_zero();
    }
    if (!rep.jacobi1)
        rep.failures.push_back("first braided Jacobi identity fails");
    if (!rep.jacobi2)
        rep.failures.push_back("second braided Jacobi identity fails");
    if (!rep.jacobi3)
        rep.failures.push_back("third braided Jacobi identity fails");
    return rep;
}

// Re-express the tables in a chosen basis of L (columns of the change matrix
// are the RREF coordinates of the chosen vectors).
template <ScalarField K>
QLieStructure<K> change_qlie_basis(const QLieStructure<K>& Q, const std::vector<Vec<K>>& chosen,
                                   std::vector<std::string> labels = {})
{
    const int d = Q.dim();
    if (static_cast<int>(chosen.size()) != d)
        throw std::invalid_argument("change_qlie_basis: need a full basis");
    Matrix<K> A(d, d);
    for (int i = 0; i < d; ++i) {
        auto crd = Q.L.coords(chosen[i]);
        if (!crd)
            throw std::invalid_argument("change_qlie_basis: vector outside the submodule");
        for (int k = 0; k < d; ++k)
            A.at(k, i) = (*crd)[k];
    }
    // invert A
    Matrix<K> aug(d, 2 * d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c)
            aug.at(r, c) = A.at(r, c);
        aug.at(r, d + r) = K(1);
    }
    if (static_cast<int>(aug.rref_in_place().size()) != d)
        throw std::invalid_argument("change_qlie_basis: chosen vectors are dependent");
    Matrix<K> Ainv(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            Ainv.at(r, c) = aug.at(r, d + c);

    auto kron = [&](const Matrix<K>& m) {
        Matrix<K> out(d * d, d * d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c)
                    for (int e = 0; e < d; ++e)
                        if (!m.at(a, c).is_zero() && !m.at(b, e).is_zero())
                            out.at(tidx(a, b, d), tidx(c, e, d)) = m.at(a, c) * m.at(b, e);
        return out;
    };
    QLieStructure<K> out = Q;
    out.tau = kron(Ainv) * Q.tau * kron(A);
    out.bracket = Ainv * Q.bracket * kron(A);
    out.basis = chosen;
    out.basis_labels = labels.empty() ? Q.basis_labels : std::move(labels);
    return out;
}

// cross-check of the bracket against mu o (delta (x) delta) o (id - tau)
// projected back to H-bar; pairs with overflowing products are skipped
template <ScalarField K>
ValidationReport check_bracket_factorization(const QLieStructure<K>& Q)
{
    ValidationReport rep;
    HBar<K> HB{Q.H};
    const int d = Q.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (!Q.pair_total[i][j])
                continue;
            // rhs = sum over (id - tau)(e_i (x) e_j) of delta(a) delta(b)
            std::map<std::pair<int, int>, K> terms;
            terms[{i, j}] = K(1);
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    const K& t = Q.tau.at(tidx(k, l, d), tidx(i, j, d));
                    if (!t.is_zero()) {
                        auto key = std::make_pair(k, l);
                        terms[key] -= t;
                        if (terms[key].is_zero())
                            terms.erase(key);
                    }
                }
            std::vector<std::vector<SparseVec<K>>> chains;
            for (const auto& [kl, c] : terms) {
                SparseVec<K> da = HB.section(Q.basis[kl.first]);
                K ea = Q.H.counit_of(da);
                if (!ea.is_zero())
                    da.emplace_back(Q.H.unit, -ea);
                SparseVec<K> db = HB.section(Q.basis[kl.second]);
                K eb = Q.H.counit_of(db);
                if (!eb.is_zero())
                    db.emplace_back(Q.H.unit, -eb);
                for (auto& [idx, cc] : da)
                    cc = cc * c;
                chains.push_back({da, db});
            }
            auto prod = Q.H.mul_chain_sum(chains);
            if (!prod)
                continue; // outside the total region
            Vec<K> rhs = HB.project(*prod);
            Vec<K> lhs(HB.dim(), K(0));
            for (int k = 0; k < d; ++k)
                if (!Q.bracket.at(k, tidx(i, j, d)).is_zero())
                    vec_axpy(lhs, Q.bracket.at(k, tidx(i, j, d)), Q.basis[k]);
            for (int t = 0; t < HB.dim(); ++t)
                lhs[t] -= rhs[t];
            if (!vec_is_zero(lhs))
                rep.fail("bracket factorization fails at pair (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
        }
    return rep;
}

// exact specialization of the structure constants at a parameter value
template <class B>
struct QLieSpecialized {
    Matrix<B> tau;
    Matrix<B> bracket;
};

template <class B>
QLieSpecialized<B> classical_limit(const QLieStructure<RatFunc<B>>& Q, const B& value)
{
    const int d = Q.dim();
    QLieSpecialized<B> out{Matrix<B>(d * d, d * d), Matrix<B>(d, d * d)};
    for (int r = 0; r < d * d; ++r)
        for (int c = 0; c < d * d; ++c)
            out.tau.at(r, c) = specialize(Q.tau.at(r, c), value);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d * d; ++c)
            out.bracket.at(r, c) = specialize(Q.bracket.at(r, c), value);
    return out;
}

} // namespace focc
