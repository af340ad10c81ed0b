#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "focc/bicomodule.hpp"
#include "focc/rewrite.hpp"

namespace focc {

template <ScalarField K>
using SparseVec = std::vector<std::pair<int, K>>; // (basis index, coeff), index-sorted

template <ScalarField K>
SparseVec<K> sparse_of(const Vec<K>& v)
{
    SparseVec<K> out;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            out.emplace_back(static_cast<int>(i), v[i]);
    return out;
}

template <ScalarField K>
Vec<K> dense_of(const SparseVec<K>& v, int n)
{
    Vec<K> out(n, K(0));
    for (const auto& [i, c] : v)
        out[i] += c;
    return out;
}

// Tracks whether a closure computation stayed inside the truncated tables.
struct Certificate {
    bool complete = true;
    int truncation = 0; // 0 = total algebra
    std::string witness;

    void overflow(const std::string& what)
    {
        if (complete) {
            complete = false;
            witness = what;
        }
    }
};

// ---------------------------------------------------------------------------
// Product backends. mul_chain_sum evaluates  sum_k  prod_j  chains[k][j]
// exactly; for PBW-backed algebras the evaluation runs in the free span of
// all normal monomials, so cancellations are seen before any truncation
// verdict. Overflow means the final value has support outside the basis.
// ---------------------------------------------------------------------------

template <ScalarField K>
class HopfBackend {
  public:
    virtual ~HopfBackend() = default;
    virtual int size() const = 0;
    virtual std::string label(int i) const = 0;
    virtual const std::vector<std::tuple<int, int, K>>& coproduct(int i) const = 0;
    virtual K counit(int i) const = 0;
    virtual const SparseVec<K>& antipode(int i) const = 0;
    virtual int degree(int) const { return 0; }
    virtual bool total() const = 0;
    virtual bool mul_chain_sum(const std::vector<std::vector<SparseVec<K>>>& chains,
                               SparseVec<K>& out, std::string& witness) const = 0;
};

// finite-dimensional algebra given by explicit tables (entries may be absent
// for user-supplied partial tables)
template <ScalarField K>
class TableBackend final : public HopfBackend<K> {
  public:
    std::vector<std::string> labels;
    std::vector<std::vector<std::tuple<int, int, K>>> coproduct_table;
    std::vector<K> counit_table;
    std::vector<SparseVec<K>> antipode_table;
    std::vector<std::vector<std::optional<SparseVec<K>>>> product; // [i][j]
    bool is_total = true;

    int size() const override { return static_cast<int>(labels.size()); }
    std::string label(int i) const override { return labels[i]; }
    const std::vector<std::tuple<int, int, K>>& coproduct(int i) const override
    {
        return coproduct_table[i];
    }
    K counit(int i) const override { return counit_table[i]; }
    const SparseVec<K>& antipode(int i) const override { return antipode_table[i]; }
    bool total() const override { return is_total; }

    bool mul_chain_sum(const std::vector<std::vector<SparseVec<K>>>& chains, SparseVec<K>& out,
                       std::string& witness) const override
    {
        std::map<int, K> acc;
        for (const auto& chain : chains) {
            std::map<int, K> cur;
            bool first = true;
            for (const auto& factor : chain) {
                if (first) {
                    for (const auto& [i, c] : factor)
                        cur[i] += c;
                    first = false;
                    continue;
                }
                std::map<int, K> next;
                for (const auto& [i, ci] : cur) {
                    if (ci.is_zero())
                        continue;
                    for (const auto& [j, cj] : factor) {
                        if (cj.is_zero())
                            continue;
                        const auto& entry = product[i][j];
                        if (!entry) {
                            witness = "product " + labels[i] + " * " + labels[j] +
                                      " outside the table";
                            return false;
                        }
                        for (const auto& [k, ck] : *entry)
                            next[k] += ci * cj * ck;
                    }
                }
                cur = std::move(next);
            }
            if (first)
                continue; // empty chain contributes nothing
            for (const auto& [i, c] : cur)
                acc[i] += c;
        }
        out.clear();
        for (const auto& [i, c] : acc)
            if (!c.is_zero())
                out.emplace_back(i, c);
        return true;
    }
};

// truncated algebra backed by a PBW rewriting system on a fixed monomial set
template <ScalarField K>
class PbwBackend final : public HopfBackend<K> {
  public:
    PbwAlgebra<K> alg;
    std::vector<PbwMonomial> basis; // sorted; index 0 need not be the unit
    std::map<PbwMonomial, int> index;
    std::vector<int> degrees;
    int trunc_bound = 0;
    // per-letter structure data
    std::vector<std::map<std::pair<PbwMonomial, PbwMonomial>, K>> letter_coproduct;
    std::vector<std::map<PbwMonomial, K>> letter_antipode;
    std::vector<K> letter_counit;

    using FreeElem = std::map<PbwMonomial, K>;
    using FreeTensor = std::map<std::pair<PbwMonomial, PbwMonomial>, K>;

    int size() const override { return static_cast<int>(basis.size()); }
    std::string label(int i) const override { return alg.monomial_label(basis[i]); }
    int degree(int i) const override { return degrees[i]; }
    bool total() const override { return false; }

    K counit(int i) const override { return counit_mono(basis[i]); }

    K counit_mono(const PbwMonomial& m) const
    {
        K acc(1);
        for (size_t l = 0; l < m.e.size(); ++l) {
            if (m.e[l] == 0)
                continue;
            if (static_cast<int>(l) == alg.group_letter)
                continue; // group-like: counit 1
            acc = acc * kpow(letter_counit[l], static_cast<long>(m.e[l]));
        }
        return acc;
    }

    // support over-approximations used while closing the basis; coefficient
    // free, so no cancellation can hide a leg
    std::set<std::pair<PbwMonomial, PbwMonomial>> coproduct_support(const PbwMonomial& m) const
    {
        PbwMonomial unit{std::vector<int>(alg.arity(), 0)};
        std::set<std::pair<PbwMonomial, PbwMonomial>> acc{{unit, unit}};
        for (size_t l = 0; l < m.e.size(); ++l) {
            if (m.e[l] == 0)
                continue;
            std::vector<std::pair<PbwMonomial, PbwMonomial>> factor;
            int reps = 1;
            if (static_cast<int>(l) == alg.group_letter) {
                PbwMonomial g{std::vector<int>(alg.arity(), 0)};
                g.e[l] = m.e[l];
                factor.emplace_back(g, g);
            } else {
                for (const auto& [legs, c] : letter_coproduct[l])
                    factor.push_back(legs);
                reps = m.e[l];
            }
            for (int rep = 0; rep < reps; ++rep) {
                std::set<std::pair<PbwMonomial, PbwMonomial>> next;
                for (const auto& [al, ar] : acc)
                    for (const auto& [fl, fr] : factor)
                        for (const auto& L : cached_mul_support(al, fl))
                            for (const auto& R : cached_mul_support(ar, fr))
                                next.insert({L, R});
                acc = std::move(next);
            }
        }
        return acc;
    }

    std::set<PbwMonomial> antipode_support(const PbwMonomial& m) const
    {
        PbwMonomial unit{std::vector<int>(alg.arity(), 0)};
        std::set<PbwMonomial> acc{unit};
        for (int l = alg.arity() - 1; l >= 0; --l) {
            if (m.e[l] == 0)
                continue;
            std::vector<PbwMonomial> factor;
            int reps = 1;
            if (l == alg.group_letter) {
                PbwMonomial g{std::vector<int>(alg.arity(), 0)};
                g.e[l] = -m.e[l];
                factor.push_back(g);
            } else {
                for (const auto& [t, c] : letter_antipode[l])
                    factor.push_back(t);
                reps = m.e[l];
            }
            for (int rep = 0; rep < reps; ++rep) {
                std::set<PbwMonomial> next;
                for (const auto& a : acc)
                    for (const auto& f : factor)
                        for (const auto& t : cached_mul_support(a, f))
                            next.insert(t);
                acc = std::move(next);
            }
        }
        return acc;
    }

    // free-space coproduct of a monomial (independent of the basis window)
    FreeTensor coproduct_free(const PbwMonomial& m) const
    {
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            auto hit = cop_cache_.find(m);
            if (hit != cop_cache_.end())
                return hit->second;
        }
        FreeTensor acc;
        PbwMonomial unit{std::vector<int>(alg.arity(), 0)};
        acc[{unit, unit}] = K(1);
        for (size_t l = 0; l < m.e.size(); ++l) {
            if (m.e[l] == 0)
                continue;
            if (static_cast<int>(l) == alg.group_letter) {
                // group-like with any integer exponent
                PbwMonomial g{std::vector<int>(alg.arity(), 0)};
                g.e[l] = m.e[l];
                FreeTensor t;
                t[{g, g}] = K(1);
                acc = tensor_mul(acc, t);
            } else {
                for (int rep = 0; rep < m.e[l]; ++rep)
                    acc = tensor_mul(acc, letter_coproduct[l]);
            }
        }
        std::lock_guard<std::mutex> lock(cache_mutex_);
        cop_cache_.emplace(m, acc);
        return acc;
    }

    const std::vector<std::tuple<int, int, K>>& coproduct(int i) const override
    {
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            auto hit = cop_row_cache_.find(i);
            if (hit != cop_row_cache_.end())
                return hit->second;
        }
        std::vector<std::tuple<int, int, K>> row;
        for (const auto& [legs, c] : coproduct_free(basis[i])) {
            auto lj = index.find(legs.first);
            auto lk = index.find(legs.second);
            if (lj == index.end() || lk == index.end())
                throw std::logic_error("coproduct leg escapes the basis (closure bug) at " +
                                       label(i));
            row.emplace_back(lj->second, lk->second, c);
        }
        std::lock_guard<std::mutex> lock(cache_mutex_);
        return cop_row_cache_.emplace(i, std::move(row)).first->second;
    }

    FreeElem antipode_free(const PbwMonomial& m) const
    {
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            auto hit = antipode_cache_.find(m);
            if (hit != antipode_cache_.end())
                return hit->second;
        }
        PbwMonomial unit{std::vector<int>(alg.arity(), 0)};
        FreeElem acc;
        acc[unit] = K(1);
        // antipode is anti-multiplicative: S(m) = S(last factor) ... S(first)
        for (int l = alg.arity() - 1; l >= 0; --l) {
            if (m.e[l] == 0)
                continue;
            if (l == alg.group_letter) {
                PbwMonomial g{std::vector<int>(alg.arity(), 0)};
                g.e[l] = -m.e[l];
                FreeElem gel;
                gel[g] = K(1);
                acc = free_mul(acc, gel);
            } else {
                for (int rep = 0; rep < m.e[l]; ++rep)
                    acc = free_mul(acc, letter_antipode[l]);
            }
        }
        std::lock_guard<std::mutex> lock(cache_mutex_);
        return antipode_cache_.emplace(m, acc).first->second;
    }

    const SparseVec<K>& antipode(int i) const override
    {
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            auto hit = antipode_row_cache_.find(i);
            if (hit != antipode_row_cache_.end())
                return hit->second;
        }
        SparseVec<K> row;
        for (const auto& [mono, c] : antipode_free(basis[i])) {
            auto it = index.find(mono);
            if (it == index.end())
                throw std::logic_error("antipode escapes the basis (closure bug) at " + label(i));
            row.emplace_back(it->second, c);
        }
        std::lock_guard<std::mutex> lock(cache_mutex_);
        return antipode_row_cache_.emplace(i, std::move(row)).first->second;
    }

    bool mul_chain_sum(const std::vector<std::vector<SparseVec<K>>>& chains, SparseVec<K>& out,
                       std::string& witness) const override
    {
        FreeElem acc;
        for (const auto& chain : chains) {
            if (chain.empty())
                continue;
            FreeElem cur = to_free(chain[0]);
            for (size_t f = 1; f < chain.size(); ++f)
                cur = free_mul(cur, to_free(chain[f]));
            for (const auto& [m, c] : cur) {
                acc[m] += c;
                if (acc[m].is_zero())
                    acc.erase(m);
            }
        }
        out.clear();
        std::map<int, K> byidx;
        for (const auto& [m, c] : acc) {
            if (c.is_zero())
                continue;
            auto it = index.find(m);
            if (it == index.end()) {
                witness = "product leaves the degree-" + std::to_string(trunc_bound) +
                          " basis at monomial " + alg.monomial_label(m);
                return false;
            }
            byidx[it->second] = c;
        }
        for (const auto& [i, c] : byidx)
            out.emplace_back(i, c);
        return true;
    }

    FreeElem free_mul(const FreeElem& a, const FreeElem& b) const
    {
        FreeElem out;
        for (const auto& [m1, c1] : a)
            for (const auto& [m2, c2] : b)
                for (const auto& [m, c] : cached_mono_mul(m1, m2)) {
                    out[m] += c1 * c2 * c;
                    if (out[m].is_zero())
                        out.erase(m);
                }
        return out;
    }

  private:
    FreeElem to_free(const SparseVec<K>& v) const
    {
        FreeElem out;
        for (const auto& [i, c] : v)
            out[basis[i]] += c;
        return out;
    }

    FreeTensor tensor_mul(const FreeTensor& a, const FreeTensor& b) const
    {
        FreeTensor out;
        for (const auto& [p1, c1] : a)
            for (const auto& [p2, c2] : b)
                for (const auto& [l, cl] : cached_mono_mul(p1.first, p2.first))
                    for (const auto& [r, cr] : cached_mono_mul(p1.second, p2.second)) {
                        auto key = std::make_pair(l, r);
                        out[key] += c1 * c2 * cl * cr;
                        if (out[key].is_zero())
                            out.erase(key);
                    }
        return out;
    }

    const std::set<PbwMonomial>& cached_mul_support(const PbwMonomial& a,
                                                    const PbwMonomial& b) const
    {
        auto key = std::make_pair(a, b);
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            auto hit = mul_support_cache_.find(key);
            if (hit != mul_support_cache_.end())
                return hit->second;
        }
        auto value = alg.mul_support(a, b);
        std::lock_guard<std::mutex> lock(cache_mutex_);
        return mul_support_cache_.emplace(key, std::move(value)).first->second;
    }

    const FreeElem& cached_mono_mul(const PbwMonomial& a, const PbwMonomial& b) const
    {
        auto key = std::make_pair(a, b);
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            auto hit = mul_cache_.find(key);
            if (hit != mul_cache_.end())
                return hit->second;
        }
        auto value = alg.mul(a, b);
        std::lock_guard<std::mutex> lock(cache_mutex_);
        return mul_cache_.emplace(key, std::move(value)).first->second;
    }

    mutable std::map<PbwMonomial, FreeTensor> cop_cache_;
    mutable std::map<PbwMonomial, FreeElem> antipode_cache_;
    mutable std::map<int, std::vector<std::tuple<int, int, K>>> cop_row_cache_;
    mutable std::map<int, SparseVec<K>> antipode_row_cache_;
    mutable std::map<std::pair<PbwMonomial, PbwMonomial>, FreeElem> mul_cache_;
    mutable std::map<std::pair<PbwMonomial, PbwMonomial>, std::set<PbwMonomial>>
        mul_support_cache_;
    mutable std::mutex cache_mutex_; // node-based maps keep references stable
};

// ---------------------------------------------------------------------------
// The Hopf algebra handle used by all higher modules.
// ---------------------------------------------------------------------------

template <ScalarField K>
struct HopfAlgebra {
    FieldDesc field;
    int unit = 0;
    SparseVec<K> unit_vec;       // set only when the unit is not a basis element
    std::vector<int> generators; // algebra generators (basis indices), unit excluded
    int truncation = 0;          // informational; 0 = total
    std::shared_ptr<const HopfBackend<K>> backend;

    bool has_basis_unit() const { return unit_vec.empty(); }
    SparseVec<K> unit_vector() const
    {
        if (unit_vec.empty())
            return {{unit, K(1)}};
        return unit_vec;
    }

    int n() const { return backend->size(); }
    std::string label(int i) const { return backend->label(i); }
    const std::vector<std::tuple<int, int, K>>& coproduct(int i) const
    {
        return backend->coproduct(i);
    }
    K counit(int i) const { return backend->counit(i); }
    const SparseVec<K>& antipode(int i) const { return backend->antipode(i); }
    int degree(int i) const { return backend->degree(i); }
    bool total() const { return backend->total(); }

    int label_index(const std::string& l) const
    {
        for (int i = 0; i < n(); ++i)
            if (backend->label(i) == l)
                return i;
        throw std::invalid_argument("unknown basis label '" + l + "'");
    }

    std::optional<SparseVec<K>> mul_chain_sum(const std::vector<std::vector<SparseVec<K>>>& chains,
                                              Certificate* cert = nullptr) const
    {
        SparseVec<K> out;
        std::string witness;
        if (!backend->mul_chain_sum(chains, out, witness)) {
            if (cert)
                cert->overflow(witness);
            return std::nullopt;
        }
        return out;
    }

    std::optional<Vec<K>> mul(const Vec<K>& a, const Vec<K>& b, Certificate* cert = nullptr) const
    {
        auto r = mul_chain_sum({{sparse_of(a), sparse_of(b)}}, cert);
        if (!r)
            return std::nullopt;
        return dense_of(*r, n());
    }

    SparseVec<K> antipode_of(const SparseVec<K>& v) const
    {
        std::map<int, K> acc;
        for (const auto& [i, c] : v)
            for (const auto& [j, cj] : backend->antipode(i))
                acc[j] += c * cj;
        SparseVec<K> out;
        for (const auto& [i, c] : acc)
            if (!c.is_zero())
                out.emplace_back(i, c);
        return out;
    }

    K counit_of(const SparseVec<K>& v) const
    {
        K acc(0);
        for (const auto& [i, c] : v)
            acc += c * backend->counit(i);
        return acc;
    }

    // materialized coalgebra (intended for small algebras)
    Coalgebra<K> coalgebra() const
    {
        Coalgebra<K> C;
        C.n = n();
        C.field = field;
        C.labels.resize(C.n);
        C.coproduct.resize(C.n);
        C.counit.resize(C.n, K(0));
        for (int i = 0; i < C.n; ++i) {
            C.labels[i] = label(i);
            C.coproduct[i] = coproduct(i);
            C.counit[i] = counit(i);
        }
        return C;
    }
};

// ---------------------------------------------------------------------------
// Hopf axiom validation, restricted to the total region of the tables.
// ---------------------------------------------------------------------------

template <ScalarField K>
ValidationReport validate_hopf(const HopfAlgebra<K>& H, int max_explicit = 24)
{
    ValidationReport rep;
    const int n = H.n();
    std::vector<int> sample;
    if (n <= max_explicit)
        for (int i = 0; i < n; ++i)
            sample.push_back(i);
    else {
        sample.push_back(H.unit);
        for (int g : H.generators)
            sample.push_back(g);
        for (int i = 0; i < n; i += std::max(1, n / max_explicit))
            sample.push_back(i);
        std::sort(sample.begin(), sample.end());
        sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
    }
    auto e = [&](int i) {
        SparseVec<K> v{{i, K(1)}};
        return v;
    };

    // coalgebra axioms on the sampled rows
    for (int i : sample) {
        Vec<K> left(n, K(0)), right(n, K(0));
        for (const auto& [j, k, c] : H.coproduct(i)) {
            left[k] += H.counit(j) * c;
            right[j] += H.counit(k) * c;
        }
        left[i] -= K(1);
        right[i] -= K(1);
        if (!vec_is_zero(left) || !vec_is_zero(right))
            rep.fail("counit law fails at '" + H.label(i) + "'");
        std::map<std::tuple<int, int, int>, K> d;
        for (const auto& [j, k, c] : H.coproduct(i)) {
            for (const auto& [a, b, c2] : H.coproduct(j))
                d[{a, b, k}] += c * c2;
            for (const auto& [a, b, c2] : H.coproduct(k))
                d[{j, a, b}] -= c * c2;
        }
        for (const auto& [t, c] : d)
            if (!c.is_zero()) {
                rep.fail("coassociativity fails at '" + H.label(i) + "'");
                break;
            }
    }

    // unit laws
    SparseVec<K> one = H.unit_vector();
    for (int i : sample) {
        auto l = H.mul_chain_sum({{one, e(i)}});
        auto r = H.mul_chain_sum({{e(i), one}});
        if (!l || !r || *l != e(i) || *r != e(i))
            rep.fail("unit law fails at '" + H.label(i) + "'");
    }

    // associativity on sampled triples, inside the total region
    for (int i : sample)
        for (int j : sample)
            for (int k : sample) {
                auto lhs = H.mul_chain_sum({{e(i), e(j), e(k)}});
                if (!lhs)
                    continue; // outside the total region
                auto ij = H.mul_chain_sum({{e(i), e(j)}});
                auto jk = H.mul_chain_sum({{e(j), e(k)}});
                if (!ij || !jk)
                    continue;
                auto l2 = H.mul_chain_sum({{*ij, e(k)}});
                auto r2 = H.mul_chain_sum({{e(i), *jk}});
                if (!l2 || !r2)
                    continue;
                if (*l2 != *r2)
                    rep.fail("associativity fails at (" + H.label(i) + "," + H.label(j) + "," +
                             H.label(k) + ")");
            }

    // Delta and eps are algebra maps on the total region
    for (int i : sample)
        for (int j : sample) {
            auto ij = H.mul_chain_sum({{e(i), e(j)}});
            if (!ij)
                continue;
            // eps multiplicativity
            K eij(0);
            for (const auto& [t, c] : *ij)
                eij += c * H.counit(t);
            if (eij != H.counit(i) * H.counit(j))
                rep.fail("counit is not multiplicative at (" + H.label(i) + "," + H.label(j) +
                         ")");
            // Delta(vw) = Delta(v) Delta(w), computed legwise
            std::map<std::pair<int, int>, K> lhs;
            bool total = true;
            for (const auto& [t, c] : *ij)
                for (const auto& [a, b, c2] : H.coproduct(t))
                    lhs[{a, b}] += c * c2;
            for (const auto& [a1, a2, ca] : H.coproduct(i)) {
                for (const auto& [b1, b2, cb] : H.coproduct(j)) {
                    auto l = H.mul_chain_sum({{e(a1), e(b1)}});
                    auto r = H.mul_chain_sum({{e(a2), e(b2)}});
                    if (!l || !r) {
                        total = false;
                        break;
                    }
                    for (const auto& [x, cx] : *l)
                        for (const auto& [y, cy] : *r)
                            lhs[{x, y}] -= ca * cb * cx * cy;
                }
                if (!total)
                    break;
            }
            if (total)
                for (const auto& [t, c] : lhs)
                    if (!c.is_zero()) {
                        rep.fail("coproduct is not multiplicative at (" + H.label(i) + "," +
                                 H.label(j) + ")");
                        break;
                    }
        }

    // antipode axiom mu(S (x) id)Delta = eta eps = mu(id (x) S)Delta
    for (int i : sample) {
        std::vector<std::vector<SparseVec<K>>> lchains, rchains;
        for (const auto& [a, b, c] : H.coproduct(i)) {
            SparseVec<K> sa = H.antipode_of(e(a));
            SparseVec<K> sb = H.antipode_of(e(b));
            for (auto& [idx, cc] : sa)
                cc = cc * c;
            lchains.push_back({sa, e(b)});
            SparseVec<K> ea = e(a);
            ea[0].second = c;
            rchains.push_back({ea, sb});
        }
        auto l = H.mul_chain_sum(lchains);
        auto r = H.mul_chain_sum(rchains);
        SparseVec<K> expect;
        if (!H.counit(i).is_zero())
            for (const auto& [u, cu] : H.unit_vector())
                expect.emplace_back(u, cu * H.counit(i));
        if (l && *l != expect)
            rep.fail("antipode axiom (S(x)id) fails at '" + H.label(i) + "'");
        if (r && *r != expect)
            rep.fail("antipode axiom (id(x)S) fails at '" + H.label(i) + "'");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// H-bar = H / K1 with its two factor Yetter-Drinfeld structures.
// ---------------------------------------------------------------------------

enum class Side { Left, Right };

template <ScalarField K>
struct HBar {
    HopfAlgebra<K> H;

    int dim() const { return H.n() - 1; }
    int to_bar(int hopf) const
    {
        if (hopf == H.unit)
            return -1;
        return hopf < H.unit ? hopf : hopf - 1;
    }
    int to_hopf(int bar) const { return bar < H.unit ? bar : bar + 1; }

    std::string label(int bar) const { return H.label(to_hopf(bar)) + "-bar"; }

    Vec<K> project(const SparseVec<K>& v) const
    {
        Vec<K> out(dim(), K(0));
        for (const auto& [i, c] : v)
            if (i != H.unit)
                out[to_bar(i)] += c;
        return out;
    }
    SparseVec<K> section(const Vec<K>& bar) const
    {
        SparseVec<K> out;
        for (int b = 0; b < dim(); ++b)
            if (!bar[b].is_zero())
                out.emplace_back(to_hopf(b), bar[b]);
        return out;
    }

    // XiL(a-bar) = a_(1) (x) a_(2)-bar  (legs with unit second factor drop)
    std::vector<std::tuple<int, int, K>> xi_left(int bar) const
    {
        std::vector<std::tuple<int, int, K>> out;
        for (const auto& [j, k, c] : H.coproduct(to_hopf(bar)))
            if (k != H.unit)
                out.emplace_back(j, to_bar(k), c);
        return out;
    }
    // XiR(a-bar) = a_(1)-bar (x) a_(2)
    std::vector<std::tuple<int, int, K>> xi_right(int bar) const
    {
        std::vector<std::tuple<int, int, K>> out;
        for (const auto& [j, k, c] : H.coproduct(to_hopf(bar)))
            if (j != H.unit)
                out.emplace_back(to_bar(j), k, c);
        return out;
    }

    // ad^L_x(a-bar) = class of x_(1) a S(x_(2)), x a basis element
    std::optional<Vec<K>> ad_left(int x, const Vec<K>& bar, Certificate* cert = nullptr) const
    {
        SparseVec<K> a = section(bar);
        std::vector<std::vector<SparseVec<K>>> chains;
        for (const auto& [x1, x2, c] : H.coproduct(x)) {
            SparseVec<K> head{{x1, c}};
            chains.push_back({head, a, H.antipode(x2)});
        }
        auto r = H.mul_chain_sum(chains, cert);
        if (!r)
            return std::nullopt;
        return project(*r);
    }

    // ad^R_x(a-bar) = class of S(x_(1)) a x_(2)
    std::optional<Vec<K>> ad_right(int x, const Vec<K>& bar, Certificate* cert = nullptr) const
    {
        SparseVec<K> a = section(bar);
        std::vector<std::vector<SparseVec<K>>> chains;
        for (const auto& [x1, x2, c] : H.coproduct(x)) {
            SparseVec<K> sa = H.antipode(x1);
            SparseVec<K> sc;
            for (const auto& [i, cc] : sa)
                sc.emplace_back(i, cc * c);
            chains.push_back({sc, a, SparseVec<K>{{x2, K(1)}}});
        }
        auto r = H.mul_chain_sum(chains, cert);
        if (!r)
            return std::nullopt;
        return project(*r);
    }
};

template <ScalarField K>
struct YdGenResult {
    Subspace<K> space; // in H-bar coordinates
    Certificate cert;
};

// Smallest Y-D submodule containing the generators: adjoint closure over the
// algebra generators to a fixpoint, then coefficient-space closure under the
// coaction, iterated jointly; stability re-verified when complete.
template <ScalarField K>
YdGenResult<K> generate_yd_submodule(const HBar<K>& HB, Side side,
                                     const std::vector<Vec<K>>& generators)
{
    for (const auto& g : generators)
        if (vec_is_zero(g))
            throw std::invalid_argument("generate_yd_submodule: zero generator");
    YdGenResult<K> res{Subspace<K>(HB.dim(), generators), {}};
    res.cert.truncation = HB.H.truncation;

    auto coaction_legs = [&](int row) {
        std::vector<Vec<K>> legs;
        Vec<K> v = res.space.basis_vector(row);
        std::map<int, Vec<K>> by_coeff; // coefficient index -> H-bar component
        for (int b = 0; b < HB.dim(); ++b) {
            if (v[b].is_zero())
                continue;
            if (side == Side::Left) {
                for (const auto& [c, k, s] : HB.xi_left(b)) {
                    auto& leg = by_coeff.try_emplace(c, Vec<K>(HB.dim(), K(0))).first->second;
                    leg[k] += v[b] * s;
                }
            } else {
                for (const auto& [k, c, s] : HB.xi_right(b)) {
                    auto& leg = by_coeff.try_emplace(c, Vec<K>(HB.dim(), K(0))).first->second;
                    leg[k] += v[b] * s;
                }
            }
        }
        for (auto& [c, leg] : by_coeff)
            if (!vec_is_zero(leg))
                legs.push_back(std::move(leg));
        return legs;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        // adjoint closure over algebra generators
        bool ad_changed = true;
        while (ad_changed) {
            ad_changed = false;
            for (int r = 0; r < res.space.dim(); ++r) {
                Vec<K> v = res.space.basis_vector(r);
                for (int g : HB.H.generators) {
                    auto w = side == Side::Left ? HB.ad_left(g, v, &res.cert)
                                                : HB.ad_right(g, v, &res.cert);
                    if (!w)
                        continue; // overflow recorded in the certificate
                    if (!res.space.member(*w)) {
                        res.space = subspace_sum(res.space, Subspace<K>(HB.dim(), {*w}));
                        ad_changed = true;
                        changed = true;
                    }
                }
            }
        }
        // coefficient-space closure under the coaction
        for (int r = 0; r < res.space.dim(); ++r)
            for (const auto& leg : coaction_legs(r))
                if (!res.space.member(leg)) {
                    res.space = subspace_sum(res.space, Subspace<K>(HB.dim(), {leg}));
                    changed = true;
                }
    }

    if (res.cert.complete) {
        // re-verify stability under both structures
        for (int r = 0; r < res.space.dim(); ++r) {
            Vec<K> v = res.space.basis_vector(r);
            for (int g : HB.H.generators) {
                auto w =
                    side == Side::Left ? HB.ad_left(g, v, &res.cert) : HB.ad_right(g, v, &res.cert);
                if (!w || !res.space.member(*w))
                    throw std::logic_error("yd generation: adjoint stability re-check failed");
            }
            for (const auto& leg : coaction_legs(r))
                if (!res.space.member(leg))
                    throw std::logic_error("yd generation: coaction stability re-check failed");
        }
    }
    return res;
}

// left-subcomodule generation only (right covariant FOCC data)
template <ScalarField K>
YdGenResult<K> right_covariant_comodule(const HBar<K>& HB, const std::vector<Vec<K>>& generators)
{
    for (const auto& g : generators)
        if (vec_is_zero(g))
            throw std::invalid_argument("right_covariant_comodule: zero generator");
    YdGenResult<K> res{Subspace<K>(HB.dim(), generators), {}};
    res.cert.truncation = HB.H.truncation;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int r = 0; r < res.space.dim(); ++r) {
            Vec<K> v = res.space.basis_vector(r);
            std::map<int, Vec<K>> by_coeff;
            for (int b = 0; b < HB.dim(); ++b) {
                if (v[b].is_zero())
                    continue;
                for (const auto& [c, k, s] : HB.xi_left(b)) {
                    auto& leg = by_coeff.try_emplace(c, Vec<K>(HB.dim(), K(0))).first->second;
                    leg[k] += v[b] * s;
                }
            }
            for (auto& [c, leg] : by_coeff)
                if (!vec_is_zero(leg) && !res.space.member(leg)) {
                    res.space = subspace_sum(res.space, Subspace<K>(HB.dim(), {leg}));
                    changed = true;
                }
        }
    }
    return res;
}

// is L a left-left Y-D submodule? (coaction legs and all adjoint actions stay inside)
template <ScalarField K>
bool is_yd_submodule(const HBar<K>& HB, const Subspace<K>& L, Certificate* cert = nullptr)
{
    for (int r = 0; r < L.dim(); ++r) {
        Vec<K> v = L.basis_vector(r);
        std::map<int, Vec<K>> by_coeff;
        for (int b = 0; b < HB.dim(); ++b) {
            if (v[b].is_zero())
                continue;
            for (const auto& [c, k, s] : HB.xi_left(b)) {
                auto& leg = by_coeff.try_emplace(c, Vec<K>(HB.dim(), K(0))).first->second;
                leg[k] += v[b] * s;
            }
        }
        for (auto& [c, leg] : by_coeff)
            if (!vec_is_zero(leg) && !L.member(leg))
                return false;
        for (int g : HB.H.generators) {
            auto w = HB.ad_left(g, v, cert);
            if (!w || !L.member(*w))
                return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Bicovariant structure on the universal bicomodule of a total Hopf algebra.
// ---------------------------------------------------------------------------

template <ScalarField K>
struct BicovariantUniversal {
    HopfAlgebra<K> H;
    UniversalBicomodule<K> U;

    // x |> [a (x) b] = [x_(1) a (x) x_(2) b]
    Vec<K> act_left(const SparseVec<K>& x, const Vec<K>& y) const
    {
        const int n = H.n();
        Vec<K> amb = U.quot.section(y);
        Vec<K> out(n * n, K(0));
        for (const auto& [xi, xc] : x)
            for (const auto& [x1, x2, c] : H.coproduct(xi))
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        if (amb[tidx(a, b, n)].is_zero())
                            continue;
                        auto pa = H.mul_chain_sum({{SparseVec<K>{{x1, K(1)}},
                                                    SparseVec<K>{{a, K(1)}}}});
                        auto pb = H.mul_chain_sum({{SparseVec<K>{{x2, K(1)}},
                                                    SparseVec<K>{{b, K(1)}}}});
                        if (!pa || !pb)
                            throw std::runtime_error("act_left: product overflow");
                        for (const auto& [ra, ca] : *pa)
                            for (const auto& [rb, cb] : *pb)
                                out[tidx(ra, rb, n)] += xc * c * ca * cb * amb[tidx(a, b, n)];
                    }
        return U.quot.project(out);
    }

    // [a (x) b] <| x = [a x_(1) (x) b x_(2)]
    Vec<K> act_right(const Vec<K>& y, const SparseVec<K>& x) const
    {
        const int n = H.n();
        Vec<K> amb = U.quot.section(y);
        Vec<K> out(n * n, K(0));
        for (const auto& [xi, xc] : x)
            for (const auto& [x1, x2, c] : H.coproduct(xi))
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        if (amb[tidx(a, b, n)].is_zero())
                            continue;
                        auto pa = H.mul_chain_sum({{SparseVec<K>{{a, K(1)}},
                                                    SparseVec<K>{{x1, K(1)}}}});
                        auto pb = H.mul_chain_sum({{SparseVec<K>{{b, K(1)}},
                                                    SparseVec<K>{{x2, K(1)}}}});
                        if (!pa || !pb)
                            throw std::runtime_error("act_right: product overflow");
                        for (const auto& [ra, ca] : *pa)
                            for (const auto& [rb, cb] : *pb)
                                out[tidx(ra, rb, n)] += xc * c * ca * cb * amb[tidx(a, b, n)];
                    }
        return U.quot.project(out);
    }

    Matrix<K> act_left_matrix(int x) const
    {
        Matrix<K> m(U.dim(), U.dim());
        for (int k = 0; k < U.dim(); ++k) {
            Vec<K> e(U.dim(), K(0));
            e[k] = K(1);
            Vec<K> img = act_left(SparseVec<K>{{x, K(1)}}, e);
            for (int r = 0; r < U.dim(); ++r)
                m.at(r, k) = img[r];
        }
        return m;
    }
    Matrix<K> act_right_matrix(int x) const
    {
        Matrix<K> m(U.dim(), U.dim());
        for (int k = 0; k < U.dim(); ++k) {
            Vec<K> e(U.dim(), K(0));
            e[k] = K(1);
            Vec<K> img = act_right(e, SparseVec<K>{{x, K(1)}});
            for (int r = 0; r < U.dim(); ++r)
                m.at(r, k) = img[r];
        }
        return m;
    }

    // P_R(m) = m_<0> <| S(m_(1)),  P_L(m) = S(m_(-1)) |> m_<0>
    Matrix<K> projector_right() const
    {
        Matrix<K> m(U.dim(), U.dim());
        for (int k = 0; k < U.dim(); ++k) {
            Vec<K> e(U.dim(), K(0));
            e[k] = K(1);
            Vec<K> acc(U.dim(), K(0));
            for (const auto& [j, c, s] : U.bicomodule.delta_right[k]) {
                Vec<K> ej(U.dim(), K(0));
                ej[j] = s;
                Vec<K> img = act_right(ej, H.antipode(c));
                for (int r = 0; r < U.dim(); ++r)
                    acc[r] += img[r];
            }
            for (int r = 0; r < U.dim(); ++r)
                m.at(r, k) = acc[r];
        }
        return m;
    }
    Matrix<K> projector_left() const
    {
        Matrix<K> m(U.dim(), U.dim());
        for (int k = 0; k < U.dim(); ++k) {
            Vec<K> acc(U.dim(), K(0));
            for (const auto& [c, j, s] : U.bicomodule.delta_left[k]) {
                Vec<K> ej(U.dim(), K(0));
                ej[j] = s;
                Vec<K> img = act_left(H.antipode(c), ej);
                for (int r = 0; r < U.dim(); ++r)
                    acc[r] += img[r];
            }
            for (int r = 0; r < U.dim(); ++r)
                m.at(r, k) = acc[r];
        }
        return m;
    }

    // Phi_R : H-bar (x) H -> Y^U, (a-bar (x) b) -> [a (x) 1] <| b
    Matrix<K> phi_right(const HBar<K>& HB) const
    {
        const int n = H.n(), d = HB.dim();
        Matrix<K> m(U.dim(), d * n);
        for (int a = 0; a < d; ++a) {
            Vec<K> base = U.cls(HB.to_hopf(a), H.unit);
            for (int b = 0; b < n; ++b) {
                Vec<K> img = act_right(base, SparseVec<K>{{b, K(1)}});
                for (int r = 0; r < U.dim(); ++r)
                    m.at(r, tidx(a, b, n)) = img[r];
            }
        }
        return m;
    }
    // Phi_R^{-1} : [a (x) b] -> (a S(b_(1)))-bar (x) b_(2)
    Matrix<K> phi_right_inv(const HBar<K>& HB) const
    {
        const int n = H.n(), d = HB.dim();
        Matrix<K> m(d * n, U.dim());
        for (int k = 0; k < U.dim(); ++k) {
            int rep = U.quot.representative_columns()[k];
            int a = rep / n, b = rep % n;
            for (const auto& [b1, b2, c] : H.coproduct(b)) {
                auto prod = H.mul_chain_sum(
                    {{SparseVec<K>{{a, K(1)}}, H.antipode(b1)}});
                if (!prod)
                    throw std::runtime_error("phi_right_inv: product overflow");
                Vec<K> bar = HB.project(*prod);
                for (int t = 0; t < d; ++t)
                    if (!bar[t].is_zero())
                        m.at(tidx(t, b2, n), k) += c * bar[t];
            }
        }
        return m;
    }

    // Phi_L : H (x) H-bar -> Y^U, (a (x) b-bar) -> a |> [1 (x) b]
    Matrix<K> phi_left(const HBar<K>& HB) const
    {
        const int n = H.n(), d = HB.dim();
        Matrix<K> m(U.dim(), n * d);
        for (int b = 0; b < d; ++b) {
            Vec<K> base = U.cls(H.unit, HB.to_hopf(b));
            for (int a = 0; a < n; ++a) {
                Vec<K> img = act_left(SparseVec<K>{{a, K(1)}}, base);
                for (int r = 0; r < U.dim(); ++r)
                    m.at(r, tidx(a, b, d)) = img[r];
            }
        }
        return m;
    }
    // Phi_L^{-1} : [a (x) b] -> a_(1) (x) (S(a_(2)) b)-bar
    Matrix<K> phi_left_inv(const HBar<K>& HB) const
    {
        const int n = H.n(), d = HB.dim();
        Matrix<K> m(n * d, U.dim());
        for (int k = 0; k < U.dim(); ++k) {
            int rep = U.quot.representative_columns()[k];
            int a = rep / n, b = rep % n;
            for (const auto& [a1, a2, c] : H.coproduct(a)) {
                auto prod = H.mul_chain_sum({{H.antipode(a2), SparseVec<K>{{b, K(1)}}}});
                if (!prod)
                    throw std::runtime_error("phi_left_inv: product overflow");
                Vec<K> bar = HB.project(*prod);
                for (int t = 0; t < d; ++t)
                    if (!bar[t].is_zero())
                        m.at(tidx(a1, t, d), k) += c * bar[t];
            }
        }
        return m;
    }
};

template <ScalarField K>
BicovariantUniversal<K> bicovariant_universal(const HopfAlgebra<K>& H)
{
    if (!H.total())
        throw std::invalid_argument("bicovariant_universal: total Hopf algebra required");
    if (!H.has_basis_unit())
        throw std::invalid_argument("bicovariant_universal: unit must be a basis element");
    return {H, build_universal(H.coalgebra())};
}

// the image Phi_R(L (x) H) of a Y-D submodule, with closure re-verification
template <ScalarField K>
Subspace<K> bicovariant_focc_from_yd(const BicovariantUniversal<K>& B, const HBar<K>& HB,
                                     const Subspace<K>& L)
{
    if (!is_yd_submodule(HB, L))
        throw std::invalid_argument("bicovariant_focc_from_yd: not a Y-D submodule");
    const int n = B.H.n();
    std::vector<Vec<K>> spanning;
    for (int r = 0; r < L.dim(); ++r) {
        Vec<K> v = L.basis_vector(r);
        Vec<K> base(B.U.dim(), K(0));
        for (int t = 0; t < HB.dim(); ++t)
            if (!v[t].is_zero())
                vec_axpy(base, v[t], B.U.cls(HB.to_hopf(t), B.H.unit));
        for (int b = 0; b < n; ++b)
            spanning.push_back(B.act_right(base, SparseVec<K>{{b, K(1)}}));
    }
    Subspace<K> S(B.U.dim(), spanning);
    // re-verify: closed under both coactions and both actions
    Subspace<K> regen = generate_subbicomodule(B.U.bicomodule, spanning);
    if (!(regen == S))
        throw std::logic_error("bicovariant_focc_from_yd: image is not coaction-closed");
    for (int r = 0; r < S.dim(); ++r)
        for (int g = 0; g < n; ++g) {
            if (!S.member(B.act_left(SparseVec<K>{{g, K(1)}}, S.basis_vector(r))) ||
                !S.member(B.act_right(S.basis_vector(r), SparseVec<K>{{g, K(1)}})))
                throw std::logic_error("bicovariant_focc_from_yd: image is not action-closed");
        }
    return S;
}

// ---------------------------------------------------------------------------
// Woronowicz maps r, r', s, s' on H (x) H (total algebras).
// ---------------------------------------------------------------------------

template <ScalarField K>
struct WoronowiczMaps {
    Matrix<K> r, r_prime, s, s_prime;
    bool antipode_bijective = false;
};

template <ScalarField K>
WoronowiczMaps<K> woronowicz_maps(const HopfAlgebra<K>& H)
{
    if (!H.total())
        throw std::invalid_argument("woronowicz_maps: total Hopf algebra required");
    const int n = H.n();
    WoronowiczMaps<K> W{Matrix<K>(n * n, n * n), Matrix<K>(n * n, n * n), Matrix<K>(n * n, n * n),
                        Matrix<K>(n * n, n * n), false};
    auto mulp = [&](int i, int j) {
        auto p = H.mul_chain_sum({{SparseVec<K>{{i, K(1)}}, SparseVec<K>{{j, K(1)}}}});
        if (!p)
            throw std::runtime_error("woronowicz_maps: product overflow");
        return *p;
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int col = tidx(a, b, n);
            for (const auto& [b1, b2, c] : H.coproduct(b)) {
                for (const auto& [p, cp] : mulp(a, b1)) // r(a(x)b) = a b_(1) (x) b_(2)
                    W.r.at(tidx(p, b2, n), col) += c * cp;
                for (const auto& [p, cp] : mulp(a, b2)) // s(a(x)b) = b_(1) (x) a b_(2)
                    W.s.at(tidx(b1, p, n), col) += c * cp;
            }
            for (const auto& [a1, a2, c] : H.coproduct(a)) {
                for (const auto& [p, cp] : mulp(a1, b)) // r'(a(x)b) = a_(1) b (x) a_(2)
                    W.r_prime.at(tidx(p, a2, n), col) += c * cp;
                for (const auto& [p, cp] : mulp(a2, b)) // s'(a(x)b) = a_(1) (x) a_(2) b
                    W.s_prime.at(tidx(a1, p, n), col) += c * cp;
            }
        }
    Matrix<K> smat(n, n);
    for (int i = 0; i < n; ++i)
        for (const auto& [j, c] : H.antipode(i))
            smat.at(j, i) += c;
    W.antipode_bijective = smat.rank() == n;
    return W;
}

// ---------------------------------------------------------------------------
// The two Y-D structures on H itself (left-left versions).
// ---------------------------------------------------------------------------

template <ScalarField K>
struct YdOnH {
    // coaction XiL(e_i) = sum (j, k, c) e_j (x) e_k
    std::vector<std::vector<std::tuple<int, int, K>>> coaction;
    // action of a basis element on a vector
    std::function<Vec<K>(int, const Vec<K>&)> act;
};

// (i) adjoint action + standard coaction; (ii) multiplication + coadjoint coaction
template <ScalarField K>
std::pair<YdOnH<K>, YdOnH<K>> yd_structures_on_H(const HopfAlgebra<K>& H)
{
    if (!H.total())
        throw std::invalid_argument("yd_structures_on_H: total Hopf algebra required");
    const int n = H.n();
    YdOnH<K> adjoint, woronowicz;
    adjoint.coaction.resize(n);
    woronowicz.coaction.resize(n);
    for (int i = 0; i < n; ++i) {
        adjoint.coaction[i] = H.coproduct(i);
        // XiL(a) = a_(1) S(a_(3)) (x) a_(2)
        std::map<std::pair<int, int>, K> acc;
        for (const auto& [a1, rest, c] : H.coproduct(i))
            for (const auto& [a2, a3, c2] : H.coproduct(rest)) {
                auto p = H.mul_chain_sum({{SparseVec<K>{{a1, K(1)}}, H.antipode(a3)}});
                if (!p)
                    throw std::runtime_error("yd_structures_on_H: product overflow");
                for (const auto& [t, ct] : *p)
                    acc[{t, a2}] += c * c2 * ct;
            }
        for (const auto& [jk, c] : acc)
            if (!c.is_zero())
                woronowicz.coaction[i].emplace_back(jk.first, jk.second, c);
    }
    adjoint.act = [H](int x, const Vec<K>& v) {
        const int nn = H.n();
        Vec<K> out(nn, K(0));
        std::vector<std::vector<SparseVec<K>>> chains;
        for (const auto& [x1, x2, c] : H.coproduct(x))
            chains.push_back({SparseVec<K>{{x1, c}}, sparse_of(v), H.antipode(x2)});
        auto r = H.mul_chain_sum(chains);
        if (!r)
            throw std::runtime_error("adjoint action overflow");
        return dense_of(*r, nn);
    };
    woronowicz.act = [H](int x, const Vec<K>& v) {
        auto r = H.mul_chain_sum({{SparseVec<K>{{x, K(1)}}, sparse_of(v)}});
        if (!r)
            throw std::runtime_error("multiplication action overflow");
        return dense_of(*r, H.n());
    };
    return {adjoint, woronowicz};
}

// Y-D compatibility XiL(a |> u) = a_(1) u_(-1) S(a_(3)) (x) (a_(2) |> u_<0>)
// checked on all basis pairs.
template <ScalarField K>
ValidationReport validate_yd_compat(const HopfAlgebra<K>& H, const YdOnH<K>& Y)
{
    ValidationReport rep;
    const int n = H.n();
    for (int a = 0; a < n; ++a)
        for (int u = 0; u < n; ++u) {
            Vec<K> eu(n, K(0));
            eu[u] = K(1);
            // lhs: XiL(a |> u)
            std::map<std::pair<int, int>, K> lhs;
            Vec<K> au = Y.act(a, eu);
            for (int t = 0; t < n; ++t) {
                if (au[t].is_zero())
                    continue;
                for (const auto& [j, k, c] : Y.coaction[t])
                    lhs[{j, k}] += au[t] * c;
            }
            // rhs: over Delta^2(a) and XiL(u)
            for (const auto& [a1, rest, ca] : H.coproduct(a))
                for (const auto& [a2, a3, ca2] : H.coproduct(rest))
                    for (const auto& [um, uo, cu] : Y.coaction[u]) {
                        auto head = H.mul_chain_sum(
                            {{SparseVec<K>{{a1, K(1)}}, SparseVec<K>{{um, K(1)}},
                              H.antipode(a3)}});
                        if (!head)
                            throw std::runtime_error("validate_yd_compat: overflow");
                        Vec<K> euo(n, K(0));
                        euo[uo] = K(1);
                        Vec<K> tail = Y.act(a2, euo);
                        for (const auto& [h, ch] : *head)
                            for (int t = 0; t < n; ++t)
                                if (!tail[t].is_zero())
                                    lhs[{h, t}] -= ca * ca2 * cu * ch * tail[t];
                    }
            for (const auto& [jk, c] : lhs)
                if (!c.is_zero()) {
                    rep.fail("Y-D compatibility fails at (" + H.label(a) + ", " + H.label(u) +
                             ")");
                    break;
                }
        }
    return rep;
}

} // namespace focc
