#pragma once

#include <cctype>
#include <concepts>
#include <stdexcept>
#include <string>

#include "focc/gaussian.hpp"
#include "focc/polynomial.hpp"
#include "focc/ratfunc.hpp"
#include "focc/rational.hpp"

namespace focc {

// All coefficient arithmetic in the engine is generic over an exact field.
template <class K>
concept ScalarField = requires(K a, K b) {
    K(0);
    K(1);
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
};

using QQ = Rational;
using QI = GaussianRational;
using QQp = RatFunc<Rational>;         // Q(t), t a formal parameter
using QIp = RatFunc<GaussianRational>; // Q(i)(t)

template <class K>
struct field_traits {
    static constexpr bool has_imaginary = false;
    static constexpr bool has_parameter = false;
};
template <>
struct field_traits<GaussianRational> {
    static constexpr bool has_imaginary = true;
    static constexpr bool has_parameter = false;
    static GaussianRational imaginary_unit() { return GaussianRational::i(); }
};
template <class B>
struct field_traits<RatFunc<B>> {
    static constexpr bool has_imaginary = field_traits<B>::has_imaginary;
    static constexpr bool has_parameter = true;
    static RatFunc<B> imaginary_unit()
        requires(field_traits<B>::has_imaginary)
    {
        return RatFunc<B>(field_traits<B>::imaginary_unit());
    }
    static RatFunc<B> parameter(int power = 1) { return RatFunc<B>::param(power); }
};

// Runtime half of the field description: which parameter symbol (if any) the
// scalar grammar accepts. The compile-time half is the field type itself.
struct FieldDesc {
    std::string param; // empty: no formal parameter

    bool operator==(const FieldDesc&) const = default;
};

template <ScalarField K>
K kpow(K base, long e)
{
    if (e < 0) {
        if (base.is_zero())
            throw std::domain_error("kpow: negative power of zero");
        base = K(1) / base;
        e = -e;
    }
    K acc(1);
    while (e) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Scalar literal grammar: integers, `i`, one parameter symbol, + - * / ^ with
// integer exponents (negative allowed), parentheses.
// ---------------------------------------------------------------------------

template <ScalarField K>
class ScalarParser {
  public:
    ScalarParser(std::string_view text, const FieldDesc& fd) : s_(text), fd_(fd) {}

    K parse()
    {
        K v = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw std::invalid_argument("scalar parse: trailing input at '" +
                                        std::string(s_.substr(pos_)) + "'");
        return v;
    }

  private:
    K expr()
    {
        K v = term();
        for (;;) {
            skip_ws();
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    K term()
    {
        K v = factor();
        for (;;) {
            skip_ws();
            if (eat('*'))
                v = v * factor();
            else if (eat('/')) {
                K d = factor();
                if (d.is_zero())
                    throw std::domain_error("scalar parse: division by zero");
                v = v / d;
            } else
                return v;
        }
    }

    K factor()
    {
        skip_ws();
        if (eat('-'))
            return -factor();
        if (eat('+'))
            return factor();
        K v = atom();
        skip_ws();
        if (eat('^')) {
            long e = integer_exponent();
            v = kpow(v, e);
        }
        return v;
    }

    K atom()
    {
        skip_ws();
        if (pos_ >= s_.size())
            throw std::invalid_argument("scalar parse: unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            K v = expr();
            skip_ws();
            if (!eat(')'))
                throw std::invalid_argument("scalar parse: missing ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return from_integer_literal(std::string(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (name == "i") {
                if constexpr (field_traits<K>::has_imaginary)
                    return field_traits<K>::imaginary_unit();
                else
                    throw std::invalid_argument("scalar parse: 'i' not available in this field");
            }
            if (!fd_.param.empty() && name == fd_.param) {
                if constexpr (field_traits<K>::has_parameter)
                    return field_traits<K>::parameter();
                else
                    throw std::invalid_argument("scalar parse: field has no parameter");
            }
            throw std::invalid_argument("scalar parse: unknown symbol '" + name + "'");
        }
        throw std::invalid_argument(std::string("scalar parse: unexpected character '") + c + "'");
    }

    long integer_exponent()
    {
        skip_ws();
        bool neg = false;
        if (eat('('))
            return finish_paren_exponent();
        if (eat('-'))
            neg = true;
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw std::invalid_argument("scalar parse: integer exponent expected");
        long e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + (s_[pos_] - '0');
            if (e > 1'000'000)
                throw std::invalid_argument("scalar parse: exponent too large");
            ++pos_;
        }
        return neg ? -e : e;
    }

    long finish_paren_exponent()
    {
        long e = integer_exponent();
        skip_ws();
        if (!eat(')'))
            throw std::invalid_argument("scalar parse: missing ')' in exponent");
        return e;
    }

    K from_integer_literal(const std::string& digits)
    {
        mpz_class z(digits);
        Rational r(z);
        if constexpr (std::is_same_v<K, Rational>)
            return r;
        else if constexpr (std::is_same_v<K, GaussianRational>)
            return GaussianRational(r);
        else if constexpr (std::is_same_v<K, RatFunc<Rational>>)
            return RatFunc<Rational>(r);
        else
            return RatFunc<GaussianRational>(GaussianRational(r));
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    std::string_view s_;
    FieldDesc fd_;
    size_t pos_ = 0;
};

template <ScalarField K>
K parse_scalar(std::string_view text, const FieldDesc& fd = {})
{
    return ScalarParser<K>(text, fd).parse();
}

// ---------------------------------------------------------------------------
// Canonical printing. parse(print(x)) == x for every canonical scalar.
// ---------------------------------------------------------------------------

inline std::string scalar_str(const Rational& v, const FieldDesc& = {}) { return v.str(); }

inline std::string scalar_str(const GaussianRational& v, const FieldDesc& = {})
{
    if (v.im().is_zero())
        return v.re().str();
    std::string im;
    if (v.im().is_one())
        im = "i";
    else if ((-v.im()).is_one())
        im = "-i";
    else
        im = v.im().str() + "*i";
    if (v.re().is_zero())
        return im;
    if (im[0] == '-')
        return v.re().str() + im;
    return v.re().str() + "+" + im;
}

namespace detail {

// True when the printed coefficient must be parenthesized before "*param^k".
inline bool coeff_needs_parens(const Rational&) { return false; }
inline bool coeff_needs_parens(const GaussianRational& v)
{
    return !v.im().is_zero() && !v.re().is_zero();
}

template <class B>
std::string poly_str(const Poly<B>& p, const std::string& name)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const B& c = p.coeff(k);
        if (c.is_zero())
            continue;
        std::string term;
        std::string base;
        if (k == 1)
            base = name;
        else if (k > 1)
            base = name + "^" + std::to_string(k);
        if (k == 0) {
            term = scalar_str(c);
            if (coeff_needs_parens(c))
                term = "(" + term + ")";
        } else if (c.is_one()) {
            term = base;
        } else if ((-c).is_one()) {
            term = "-" + base;
        } else {
            std::string cs = scalar_str(c);
            if (coeff_needs_parens(c))
                cs = "(" + cs + ")";
            term = cs + "*" + base;
        }
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += term;
        else
            out += "+" + term;
    }
    return out;
}

} // namespace detail

template <class B>
std::string scalar_str(const RatFunc<B>& v, const FieldDesc& fd = {})
{
    std::string name = fd.param.empty() ? "q" : fd.param;
    std::string num = detail::poly_str(v.num(), name);
    if (v.is_polynomial())
        return num;
    return "(" + num + ")/(" + detail::poly_str(v.den(), name) + ")";
}

// Exact substitution of the formal parameter; throws on a pole.
template <class B>
B specialize(const RatFunc<B>& s, const B& value)
{
    return s.eval(value);
}

} // namespace focc
