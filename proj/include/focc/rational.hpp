#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace focc {

// Arbitrary-precision rational, canonical form (gcd-reduced, positive denominator).
// Thin wrapper around mpq_class that guarantees canonicalization on every
// construction path; arithmetic on canonical operands stays canonical.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d)
    {
        if (d == 0)
            throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d)
    {
        if (d == 0)
            throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }

    static Rational from_decimal_string(const std::string& s)
    {
        Rational r;
        r.v_ = mpq_class(s);
        r.v_.canonicalize();
        return r;
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rational operator-() const
    {
        Rational r;
        r.v_ = -v_;
        return r;
    }
    Rational& operator+=(const Rational& o)
    {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o)
    {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o)
    {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

    Rational inverse() const
    {
        if (is_zero())
            throw std::domain_error("Rational: inverse of zero");
        Rational r;
        r.v_ = 1 / v_;
        return r;
    }

    int sign() const { return sgn(v_); }

    std::string str() const { return v_.get_str(); }

  private:
    mpq_class v_;
};

} // namespace focc
