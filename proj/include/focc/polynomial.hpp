#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace focc {

// Dense univariate polynomial over a field K. Invariant: no trailing zero
// coefficients; the zero polynomial has an empty coefficient vector.
template <class K>
class Poly {
  public:
    Poly() = default;
    explicit Poly(K c)
    {
        if (!c.is_zero())
            coeffs_.push_back(std::move(c));
    }
    explicit Poly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly x(int power = 1)
    {
        std::vector<K> c(power + 1, K(0));
        c[power] = K(1);
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const K& coeff(int k) const
    {
        static const K zero = K(0);
        if (k < 0 || k >= static_cast<int>(coeffs_.size()))
            return zero;
        return coeffs_[k];
    }
    const K& leading() const
    {
        if (is_zero())
            throw std::domain_error("Poly: leading coefficient of zero");
        return coeffs_.back();
    }
    const std::vector<K>& coeffs() const { return coeffs_; }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }
    Poly& operator+=(const Poly& o)
    {
        if (coeffs_.size() < o.coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), K(0));
        for (size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (coeffs_.size() < o.coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), K(0));
        for (size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero())
            return Poly();
        std::vector<K> c(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
        for (size_t p = 0; p < a.coeffs_.size(); ++p) {
            if (a.coeffs_[p].is_zero())
                continue;
            for (size_t r = 0; r < b.coeffs_.size(); ++r)
                c[p + r] += a.coeffs_[p] * b.coeffs_[r];
        }
        return Poly(std::move(c));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const K& c) const
    {
        if (c.is_zero())
            return Poly();
        Poly r = *this;
        for (auto& x : r.coeffs_)
            x = x * c;
        return r;
    }

    // Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<Poly, Poly> divrem(const Poly& d) const
    {
        if (d.is_zero())
            throw std::domain_error("Poly: division by zero polynomial");
        Poly rem = *this;
        if (rem.degree() < d.degree())
            return {Poly(), rem};
        std::vector<K> q(rem.degree() - d.degree() + 1, K(0));
        K lead_inv = K(1) / d.leading();
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int shift = rem.degree() - d.degree();
            K factor = rem.leading() * lead_inv;
            q[shift] = factor;
            // rem -= factor * x^shift * d
            for (int k = 0; k <= d.degree(); ++k)
                rem.coeffs_[k + shift] -= factor * d.coeff(k);
            rem.trim();
        }
        return {Poly(std::move(q)), rem};
    }

    K eval(const K& at) const
    {
        K acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * at + *it;
        return acc;
    }

    Poly monic() const
    {
        if (is_zero())
            return *this;
        return scaled(K(1) / leading());
    }

  private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

    std::vector<K> coeffs_;
};

// Monic gcd by the Euclidean algorithm.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b)
{
    while (!b.is_zero()) {
        auto [q, r] = a.divrem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace focc
