#pragma once

#include <stdexcept>
#include <utility>

#include "focc/polynomial.hpp"

namespace focc {

// Fraction field of K[x] in one formal parameter. Canonical form: numerator
// and denominator coprime, denominator monic, zero = 0/1. Laurent monomials
// x^{-n} live here as 1/x^n, so the whole ring of Laurent polynomials embeds.
template <class K>
class RatFunc {
  public:
    RatFunc() : num_(), den_(Poly<K>(K(1))) {}
    RatFunc(long n) : num_(Poly<K>(K(n))), den_(Poly<K>(K(1))) {}
    RatFunc(K c) : num_(Poly<K>(std::move(c))), den_(Poly<K>(K(1))) {}
    explicit RatFunc(Poly<K> p) : num_(std::move(p)), den_(Poly<K>(K(1))) {}
    RatFunc(Poly<K> n, Poly<K> d) : num_(std::move(n)), den_(std::move(d))
    {
        if (den_.is_zero())
            throw std::domain_error("RatFunc: zero denominator");
        normalize();
    }

    static RatFunc param(int power = 1)
    {
        if (power >= 0)
            return RatFunc(Poly<K>::x(power));
        return RatFunc(Poly<K>(K(1)), Poly<K>::x(-power));
    }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const
    {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b)
    {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b)
    {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b)
    {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b)
    {
        if (b.is_zero())
            throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inverse() const
    {
        if (is_zero())
            throw std::domain_error("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }

    // Exact substitution of the parameter. Canonical form means a vanishing
    // denominator is a genuine pole, not a removable one.
    K eval(const K& at) const
    {
        K d = den_.eval(at);
        if (d.is_zero())
            throw std::domain_error("RatFunc: pole at substitution point");
        return num_.eval(at) / d;
    }

  private:
    void normalize()
    {
        if (num_.is_zero()) {
            den_ = Poly<K>(K(1));
            return;
        }
        Poly<K> g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divrem(g).first;
            den_ = den_.divrem(g).first;
        }
        K lead_inv = K(1) / den_.leading();
        if (!lead_inv.is_one()) {
            num_ = num_.scaled(lead_inv);
            den_ = den_.scaled(lead_inv);
        }
    }

    Poly<K> num_;
    Poly<K> den_;
};

} // namespace focc
