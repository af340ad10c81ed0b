#pragma once

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "focc/scalar.hpp"

namespace focc {

// Normal-form monomial over a fixed PBW alphabet: one exponent per letter in
// alphabet order. Nilpotent letters carry exponents >= 0; the designated
// group-like letter (when present) may carry any integer exponent.
struct PbwMonomial {
    std::vector<int> e;

    bool is_unit() const
    {
        for (int x : e)
            if (x != 0)
                return false;
        return true;
    }
    auto operator<=>(const PbwMonomial&) const = default;
};

// word = sequence of (letter, exponent) factors, left to right
using PbwWord = std::vector<std::pair<int, int>>;

inline PbwWord word_of(const PbwMonomial& m)
{
    PbwWord w;
    for (size_t i = 0; i < m.e.size(); ++i)
        if (m.e[i] != 0)
            w.emplace_back(static_cast<int>(i), m.e[i]);
    return w;
}

// Rewriting data for one PBW presentation. Two rule kinds:
//   * qcommute[(L,R)] = c  (L > R):  L^a R^b -> c^{ab} R^b L^a
//   * rules[(L,s,R)] = terms:        L^{s} R -> sum coeff * word  (s = +-1)
// A pair (L,R) with L > R must be covered by one of the two. rules may also
// cover in-order pairs (L < R) that reduce, e.g. x y = 1 + q^{-1} u v.
template <ScalarField K>
struct PbwAlgebra {
    std::vector<std::string> letters;
    int group_letter = -1;
    std::map<std::pair<int, int>, K> qcommute;
    std::map<std::tuple<int, int, int>, std::vector<std::pair<K, PbwWord>>> rules;
    long step_budget = 4'000'000;

    int arity() const { return static_cast<int>(letters.size()); }

    PbwMonomial monomial(const PbwWord& w) const
    {
        PbwMonomial m{std::vector<int>(letters.size(), 0)};
        for (const auto& [l, x] : w)
            m.e[l] += x;
        return m;
    }

    bool word_is_normal(const PbwWord& w) const
    {
        for (size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k].first >= w[k + 1].first)
                return false;
            if (rules.count({w[k].first, sgn(w[k].second), w[k + 1].first}))
                return false;
        }
        for (const auto& [l, x] : w)
            if (l != group_letter && x < 0)
                throw std::logic_error("negative exponent on a nilpotent letter");
        return true;
    }

    // normal-order a linear combination of words
    std::map<PbwMonomial, K> normal_order(std::vector<std::pair<K, PbwWord>> work) const
    {
        std::map<PbwMonomial, K> out;
        long steps = 0;
        while (!work.empty()) {
            auto [coeff, w] = std::move(work.back());
            work.pop_back();
            if (coeff.is_zero())
                continue;
            if (++steps > step_budget)
                throw std::runtime_error("normal_order: rewrite step budget exceeded");

            // drop zero exponents, merge adjacent equal letters
            PbwWord v;
            for (const auto& f : w) {
                if (f.second == 0)
                    continue;
                if (!v.empty() && v.back().first == f.first)
                    v.back().second += f.second;
                else
                    v.push_back(f);
            }
            while (!v.empty() && v.back().second == 0)
                v.pop_back();

            // leftmost reducible adjacent pair
            bool rewrote = false;
            for (size_t k = 0; k + 1 < v.size() && !rewrote; ++k) {
                auto [L, a] = v[k];
                auto [R, b] = v[k + 1];
                if (L == R) { // merged above unless zero appeared in between
                    continue;
                }
                int s = a > 0 ? 1 : -1;
                auto rule = rules.find({L, s, R});
                if (rule != rules.end()) {
                    // peel one unit of L against R: prefix L^{a-s} (expansion) R^{b-1} suffix
                    for (const auto& [rc, rw] : rule->second) {
                        PbwWord next(v.begin(), v.begin() + k);
                        if (a != s)
                            next.emplace_back(L, a - s);
                        next.insert(next.end(), rw.begin(), rw.end());
                        if (b != 1)
                            next.emplace_back(R, b - 1);
                        next.insert(next.end(), v.begin() + k + 2, v.end());
                        work.emplace_back(coeff * rc, std::move(next));
                    }
                    rewrote = true;
                    break;
                }
                if (L > R) {
                    auto qc = qcommute.find({L, R});
                    if (qc == qcommute.end())
                        throw std::logic_error("normal_order: no rule for pair " + letters[L] +
                                               "," + letters[R]);
                    PbwWord next(v.begin(), v.begin() + k);
                    next.emplace_back(R, b);
                    next.emplace_back(L, a);
                    next.insert(next.end(), v.begin() + k + 2, v.end());
                    work.emplace_back(coeff * kpow(qc->second, long(a) * b), std::move(next));
                    rewrote = true;
                    break;
                }
            }
            if (rewrote)
                continue;

            PbwMonomial m = monomial(v);
            auto it = out.find(m);
            if (it == out.end())
                out.emplace(m, coeff);
            else {
                it->second += coeff;
                if (it->second.is_zero())
                    out.erase(it);
            }
        }
        return out;
    }

    std::map<PbwMonomial, K> mul(const PbwMonomial& m1, const PbwMonomial& m2) const
    {
        PbwWord w = word_of(m1);
        PbwWord w2 = word_of(m2);
        w.insert(w.end(), w2.begin(), w2.end());
        return normal_order({{K(1), w}});
    }

    // Coefficient-free variant: the union of all normal monomials reachable by
    // rewriting, a sound over-approximation of the support of the exact value
    // (coefficients can only cancel, never create new monomials).
    std::set<PbwMonomial> normal_order_support(std::vector<PbwWord> work) const
    {
        std::set<PbwMonomial> out;
        std::set<PbwWord> seen;
        long steps = 0;
        while (!work.empty()) {
            PbwWord w = std::move(work.back());
            work.pop_back();
            if (++steps > step_budget)
                throw std::runtime_error("normal_order_support: rewrite step budget exceeded");
            PbwWord v;
            for (const auto& f : w) {
                if (f.second == 0)
                    continue;
                if (!v.empty() && v.back().first == f.first)
                    v.back().second += f.second;
                else
                    v.push_back(f);
            }
            while (!v.empty() && v.back().second == 0)
                v.pop_back();
            if (!seen.insert(v).second)
                continue;

            bool rewrote = false;
            for (size_t k = 0; k + 1 < v.size() && !rewrote; ++k) {
                auto [L, a] = v[k];
                auto [R, b] = v[k + 1];
                if (L == R)
                    continue;
                int s = a > 0 ? 1 : -1;
                auto rule = rules.find({L, s, R});
                if (rule != rules.end()) {
                    for (const auto& [rc, rw] : rule->second) {
                        PbwWord next(v.begin(), v.begin() + k);
                        if (a != s)
                            next.emplace_back(L, a - s);
                        next.insert(next.end(), rw.begin(), rw.end());
                        if (b != 1)
                            next.emplace_back(R, b - 1);
                        next.insert(next.end(), v.begin() + k + 2, v.end());
                        work.push_back(std::move(next));
                    }
                    rewrote = true;
                    break;
                }
                if (L > R) {
                    PbwWord next(v.begin(), v.begin() + k);
                    next.emplace_back(R, b);
                    next.emplace_back(L, a);
                    next.insert(next.end(), v.begin() + k + 2, v.end());
                    work.push_back(std::move(next));
                    rewrote = true;
                    break;
                }
            }
            if (!rewrote)
                out.insert(monomial(v));
        }
        return out;
    }

    std::set<PbwMonomial> mul_support(const PbwMonomial& m1, const PbwMonomial& m2) const
    {
        PbwWord w = word_of(m1);
        PbwWord w2 = word_of(m2);
        w.insert(w.end(), w2.begin(), w2.end());
        return normal_order_support({w});
    }

    std::string monomial_label(const PbwMonomial& m) const
    {
        if (m.is_unit())
            return "1";
        std::string out;
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0)
                continue;
            if (!out.empty())
                out += " ";
            out += letters[i];
            if (m.e[i] != 1)
                out += "^" + std::to_string(m.e[i]);
        }
        return out;
    }

  private:
    static int sgn(int x) { return x >= 0 ? 1 : -1; }
};

} // namespace focc
