#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "focc/linalg.hpp"

namespace focc {

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    void fail(std::string what) { violations.push_back(std::move(what)); }
};

// Index of e_i (x) e_j inside C (x) D laid out row-major.
inline int tidx(int i, int j, int dim_second) { return i * dim_second + j; }

// Structure-constant coalgebra: Delta(e_i) = sum (j,k,c) of c * e_j (x) e_k.
template <ScalarField K>
struct Coalgebra {
    int n = 0;
    std::vector<std::string> labels;
    FieldDesc field;
    std::vector<std::vector<std::tuple<int, int, K>>> coproduct;
    std::vector<K> counit;

    int label_index(const std::string& l) const
    {
        for (int i = 0; i < n; ++i)
            if (labels[i] == l)
                return i;
        throw std::invalid_argument("unknown basis label '" + l + "'");
    }

    // Delta as an n^2 x n matrix.
    Matrix<K> delta_matrix() const
    {
        Matrix<K> m(n * n, n);
        for (int i = 0; i < n; ++i)
            for (const auto& [j, k, c] : coproduct[i])
                m.at(tidx(j, k, n), i) += c;
        return m;
    }

    Vec<K> delta_vec(const Vec<K>& v) const
    {
        Vec<K> out(n * n, K(0));
        for (int i = 0; i < n; ++i) {
            if (v[i].is_zero())
                continue;
            for (const auto& [j, k, c] : coproduct[i])
                out[tidx(j, k, n)] += v[i] * c;
        }
        return out;
    }

    K counit_of(const Vec<K>& v) const
    {
        K acc(0);
        for (int i = 0; i < n; ++i)
            if (!v[i].is_zero())
                acc += counit[i] * v[i];
        return acc;
    }

    bool cocommutative() const
    {
        for (int i = 0; i < n; ++i) {
            Vec<K> d(n * n, K(0));
            for (const auto& [j, k, c] : coproduct[i]) {
                d[tidx(j, k, n)] += c;
                d[tidx(k, j, n)] -= c;
            }
            if (!vec_is_zero(d))
                return false;
        }
        return true;
    }
};

template <ScalarField K>
ValidationReport validate_coalgebra(const Coalgebra<K>& C)
{
    ValidationReport rep;
    const int n = C.n;
    if (static_cast<int>(C.coproduct.size()) != n || static_cast<int>(C.counit.size()) != n) {
        rep.fail("table shape inconsistent with dimension");
        return rep;
    }
    for (int i = 0; i < n; ++i) {
        // counit laws (eps (x) id) Delta = id = (id (x) eps) Delta
        Vec<K> left(n, K(0)), right(n, K(0));
        for (const auto& [j, k, c] : C.coproduct[i]) {
            left[k] += C.counit[j] * c;
            right[j] += C.counit[k] * c;
        }
        left[i] -= K(1);
        right[i] -= K(1);
        if (!vec_is_zero(left))
            rep.fail("counit law (eps(*)id) fails at basis '" + C.labels[i] + "'");
        if (!vec_is_zero(right))
            rep.fail("counit law (id(*)eps) fails at basis '" + C.labels[i] + "'");

        // coassociativity entrywise on C (x) C (x) C
        Vec<K> d(n * n * n, K(0));
        for (const auto& [j, k, c] : C.coproduct[i]) {
            for (const auto& [a, b, c2] : C.coproduct[j]) // (Delta (x) id)
                d[(a * n + b) * n + k] += c * c2;
            for (const auto& [a, b, c2] : C.coproduct[k]) // (id (x) Delta)
                d[(j * n + a) * n + b] -= c * c2;
        }
        if (!vec_is_zero(d))
            rep.fail("coassociativity fails at basis '" + C.labels[i] + "'");
    }
    return rep;
}

template <ScalarField K>
struct CoalgebraMorphism {
    Coalgebra<K> source;
    Coalgebra<K> target;
    Matrix<K> map; // target.n x source.n

    Vec<K> apply(const Vec<K>& v) const { return map.apply(v); }
};

template <ScalarField K>
ValidationReport validate_morphism(const CoalgebraMorphism<K>& phi)
{
    ValidationReport rep;
    const auto& S = phi.source;
    const auto& T = phi.target;
    if (phi.map.rows() != T.n || phi.map.cols() != S.n) {
        rep.fail("morphism matrix shape mismatch");
        return rep;
    }
    for (int i = 0; i < S.n; ++i) {
        // (phi (x) phi) Delta_S(e_i) == Delta_T(phi e_i)
        Vec<K> lhs(T.n * T.n, K(0));
        for (const auto& [j, k, c] : S.coproduct[i])
            for (int a = 0; a < T.n; ++a)
                for (int b = 0; b < T.n; ++b)
                    if (!phi.map.at(a, j).is_zero() && !phi.map.at(b, k).is_zero())
                        lhs[tidx(a, b, T.n)] += c * phi.map.at(a, j) * phi.map.at(b, k);
        Vec<K> ei(S.n, K(0));
        ei[i] = K(1);
        Vec<K> rhs = T.delta_vec(phi.apply(ei));
        for (int t = 0; t < T.n * T.n; ++t)
            lhs[t] -= rhs[t];
        if (!vec_is_zero(lhs))
            rep.fail("morphism does not intertwine coproducts at '" + S.labels[i] + "'");
        K eps = S.counit[i] - T.counit_of(phi.apply(ei));
        if (!eps.is_zero())
            rep.fail("morphism does not preserve counit at '" + S.labels[i] + "'");
    }
    return rep;
}

template <ScalarField K>
struct DirectSum {
    Coalgebra<K> sum;
    std::vector<CoalgebraMorphism<K>> inclusions;
    std::vector<int> offsets;
};

template <ScalarField K>
DirectSum<K> direct_sum(const std::vector<Coalgebra<K>>& parts)
{
    if (parts.empty())
        throw std::invalid_argument("direct_sum: no summands");
    DirectSum<K> out;
    Coalgebra<K>& C = out.sum;
    C.field = parts[0].field;
    for (const auto& p : parts) {
        if (!(p.field == C.field))
            throw std::invalid_argument("direct_sum: scalar field mismatch");
        out.offsets.push_back(C.n);
        C.n += p.n;
    }
    C.coproduct.resize(C.n);
    C.counit.resize(C.n, K(0));
    C.labels.resize(C.n);
    for (size_t s = 0; s < parts.size(); ++s) {
        const auto& p = parts[s];
        int off = out.offsets[s];
        for (int i = 0; i < p.n; ++i) {
            C.labels[off + i] = parts.size() == 1 ? p.labels[i]
                                                  : p.labels[i] + "#" + std::to_string(s);
            C.counit[off + i] = p.counit[i];
            for (const auto& [j, k, c] : p.coproduct[i])
                C.coproduct[off + i].emplace_back(off + j, off + k, c);
        }
    }
    for (size_t s = 0; s < parts.size(); ++s) {
        CoalgebraMorphism<K> inc{parts[s], C, Matrix<K>(C.n, parts[s].n)};
        for (int i = 0; i < parts[s].n; ++i)
            inc.map.at(out.offsets[s] + i, i) = K(1);
        out.inclusions.push_back(std::move(inc));
    }
    return out;
}

// Convolution algebra C^* with (alpha*beta)(c) = alpha(c_(1)) beta(c_(2)).
template <ScalarField K>
struct DualAlgebra {
    Coalgebra<K> base;

    // product of functionals given as coordinate vectors in the dual basis
    Vec<K> convolve(const Vec<K>& alpha, const Vec<K>& beta) const
    {
        const int n = base.n;
        Vec<K> out(n, K(0));
        for (int c = 0; c < n; ++c)
            for (const auto& [j, k, s] : base.coproduct[c])
                if (!alpha[j].is_zero() && !beta[k].is_zero())
                    out[c] += s * alpha[j] * beta[k];
        return out;
    }

    Vec<K> unit() const { return base.counit; }
};

template <ScalarField K>
Vec<K> convolution(const DualAlgebra<K>& dual, const Vec<K>& alpha, const Vec<K>& beta)
{
    return dual.convolve(alpha, beta);
}

template <ScalarField K>
ValidationReport validate_dual_algebra(const DualAlgebra<K>& D)
{
    ValidationReport rep;
    const int n = D.base.n;
    auto e = [&](int i) {
        Vec<K> v(n, K(0));
        v[i] = K(1);
        return v;
    };
    for (int i = 0; i < n; ++i) {
        if (D.convolve(D.unit(), e(i)) != e(i) || D.convolve(e(i), D.unit()) != e(i))
            rep.fail("counit is not a two-sided convolution unit at index " + std::to_string(i));
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec<K> l = D.convolve(D.convolve(e(i), e(j)), e(k));
                Vec<K> r = D.convolve(e(i), D.convolve(e(j), e(k)));
                if (l != r) {
                    rep.fail("convolution not associative at triple (" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) + ")");
                    break;
                }
            }
    }
    return rep;
}

} // namespace focc
