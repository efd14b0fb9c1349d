#pragma once

#include <cctype>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "scalar.hpp"

namespace affhom {

// Scalar text syntax.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' ['-'] integer)?
//   atom   := number ['i'] | 'i' | 'pi' | 'zeta12' | 'sqrt3'
//           | 'sqrt' '(' expr ')' | 'exp' '(' expr ')' | '(' expr ')'
//
// A number is an integer, a rational "p/q" (one token, so "1/2i" is i/2),
// or a decimal. Integers and rationals are exact; decimals are approximate.
// exp(i*pi*r) is exact for r in (1/6)Z; exp of any purely imaginary
// argument keeps an exact unit modulus. pi is only exact inside exp.

namespace detail {

enum class Kind { Real, Imag, General };

inline Kind kind_mul(Kind a, Kind b)
{
    if (a == Kind::General || b == Kind::General) return Kind::General;
    return a == b ? Kind::Real : Kind::Imag;
}

inline Kind kind_add(Kind a, Kind b) { return a == b ? a : Kind::General; }

// s0 + s1 * pi
struct Value {
    Scalar s0;
    Scalar s1;
    bool has_pi = false;
    Kind kind = Kind::Real;

    Scalar collapse() const
    {
        if (!has_pi) return s0;
        return s0 + s1 * Scalar::approx({std::numbers::pi, 0.0});
    }
};

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Scalar run()
    {
        Value v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v.collapse();
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw InputError("scalar \"" + std::string(s_) + "\": " + what + " at position " + std::to_string(pos_));
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool eat_word(std::string_view w)
    {
        skip();
        if (s_.substr(pos_, w.size()) != w) return false;
        const std::size_t end = pos_ + w.size();
        if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
        pos_ = end;
        return true;
    }

    Value expr()
    {
        Value v = term();
        for (;;) {
            if (eat('+')) {
                v = add(v, term(), false);
            } else if (eat('-')) {
                v = add(v, term(), true);
            } else {
                return v;
            }
        }
    }

    Value term()
    {
        Value v = unary();
        for (;;) {
            if (eat('*')) {
                v = mul(v, unary());
            } else if (eat('/')) {
                v = div(v, unary());
            } else {
                return v;
            }
        }
    }

    Value unary()
    {
        if (eat('-')) {
            Value v = unary();
            v.s0 = -v.s0;
            v.s1 = -v.s1;
            return v;
        }
        if (eat('+')) return unary();
        return power();
    }

    Value power()
    {
        Value v = atom();
        if (!eat('^')) return v;
        const bool neg = eat('-');
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        const long e = std::stol(std::string(s_.substr(start, pos_ - start)));
        if (v.has_pi) fail("powers of expressions containing pi are not supported");
        v.s0 = v.s0.pow(neg ? -e : e);
        if (v.kind == Kind::Imag && e % 2 == 0) v.kind = Kind::Real;
        return v;
    }

    Value atom()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (eat('(')) {
            Value v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (eat_word("zeta12")) return {Scalar(CycloScalar::zeta_power(1)), Scalar(0), false, Kind::General};
        if (eat_word("sqrt3")) return {Scalar(CycloScalar::sqrt3()), Scalar(0), false, Kind::Real};
        if (eat_word("pi")) return {Scalar(0), Scalar(1), true, Kind::Real};
        if (eat_word("i")) return {Scalar(CycloScalar::i()), Scalar(0), false, Kind::Imag};
        if (eat_word("sqrt")) {
            if (!eat('(')) fail("expected '('");
            Value v = expr();
            if (!eat(')')) fail("expected ')'");
            return sqrt_of(v);
        }
        if (eat_word("exp")) {
            if (!eat('(')) fail("expected '('");
            Value v = expr();
            if (!eat(')')) fail("expected ')'");
            return exp_of(v);
        }
        fail("unknown token");
    }

    Value number()
    {
        const std::size_t start = pos_;
        auto digits = [&] {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        };
        digits();
        bool decimal = false;
        bool rational = false;
        if (pos_ < s_.size() && s_[pos_] == '.') {
            decimal = true;
            ++pos_;
            digits();
            if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
                ++pos_;
                if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
                digits();
            }
        } else if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            rational = true;
            ++pos_;
            digits();
        }
        const std::string tok(s_.substr(start, pos_ - start));
        Scalar val;
        if (decimal) {
            val = Scalar::approx({std::stod(tok), 0.0});
        } else {
            Rational q(tok);
            if (rational && q.get_den() == 0) fail("zero denominator");
            q.canonicalize();
            val = Scalar(q);
        }
        Kind kind = Kind::Real;
        if (pos_ < s_.size() && s_[pos_] == 'i' &&
            (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
            ++pos_;
            val = val * Scalar(CycloScalar::i());
            kind = Kind::Imag;
        }
        return {val, Scalar(0), false, kind};
    }

    static Value add(const Value& a, const Value& b, bool minus)
    {
        Value out;
        out.s0 = minus ? a.s0 - b.s0 : a.s0 + b.s0;
        out.s1 = minus ? a.s1 - b.s1 : a.s1 + b.s1;
        out.has_pi = a.has_pi || b.has_pi;
        out.kind = kind_add(a.kind, b.kind);
        return out;
    }

    Value mul(const Value& a, const Value& b) const
    {
        if (a.has_pi && b.has_pi) fail("pi^2 is not supported");
        Value out;
        out.s0 = a.s0 * b.s0;
        out.s1 = a.has_pi ? a.s1 * b.s0 : (b.has_pi ? a.s0 * b.s1 : Scalar(0));
        out.has_pi = a.has_pi || b.has_pi;
        out.kind = kind_mul(a.kind, b.kind);
        return out;
    }

    Value div(const Value& a, const Value& b) const
    {
        if (b.has_pi) fail("division by an expression containing pi is not supported");
        const Scalar inv = b.s0.inverse();
        Value out;
        out.s0 = a.s0 * inv;
        out.s1 = a.s1 * inv;
        out.has_pi = a.has_pi;
        out.kind = kind_mul(a.kind, b.kind);
        return out;
    }

    static std::optional<Integer> exact_root(const Integer& n)
    {
        if (n < 0) return std::nullopt;
        Integer r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        if (r * r == n) return r;
        return std::nullopt;
    }

    Value sqrt_of(const Value& v) const
    {
        const Scalar x = v.collapse();
        if (x.is_exact() && x.exact()[1] == 0 && x.exact()[2] == 0 && x.exact()[3] == 0) {
            Rational q = x.exact()[0];
            const bool neg = sgn(q) < 0;
            if (neg) q = -q;
            const Scalar unit = neg ? Scalar(CycloScalar::i()) : Scalar(1);
            const Kind k = neg ? Kind::Imag : Kind::Real;
            const auto rn = exact_root(q.get_num());
            const auto rd = exact_root(q.get_den());
            if (rn && rd) return {unit * Scalar(Rational(*rn, *rd)), Scalar(0), false, k};
            // q = 3 s^2 gives s sqrt3
            const Rational t = q / 3;
            const auto tn = exact_root(t.get_num());
            const auto td = exact_root(t.get_den());
            if (tn && td) return {unit * Scalar(Rational(*tn, *td)) * Scalar(CycloScalar::sqrt3()), Scalar(0), false, k};
            const double r = std::sqrt(q.get_d());
            Scalar approx = Scalar::approx({r, 0.0});
            return {unit * approx, Scalar(0), false, k};
        }
        const std::complex<double> r = std::sqrt(x.to_complex());
        const Kind k = v.kind == Kind::Real && x.to_complex().real() >= 0 ? Kind::Real : Kind::General;
        return {Scalar::approx(r, x.error()), Scalar(0), false, k};
    }

    Value exp_of(const Value& v) const
    {
        // exact branch: argument i*pi*r with r rational
        if (v.has_pi && v.s0.is_exact() && v.s0.exact().is_zero() && v.s1.is_exact()) {
            const CycloScalar& c = v.s1.exact();
            if (c[0] == 0 && c[1] == 0 && c[2] == 0) {
                const Rational r = c[3];
                const Rational six = r * 6;
                if (is_integer(six)) {
                    const long k = six.get_num().get_si();
                    return {Scalar(CycloScalar::zeta_power(((k % 12) + 12) % 12)), Scalar(0), false, Kind::General};
                }
                ApproxScalar a = ApproxScalar::from(std::polar(1.0, std::numbers::pi * r.get_d()));
                a.modulus_sq = QSqrt3(1);
                return {Scalar(a), Scalar(0), false, Kind::General};
            }
        }
        const Scalar x = v.collapse();
        const std::complex<double> z = x.to_complex();
        if (v.kind == Kind::Imag) {
            ApproxScalar a = ApproxScalar::from(std::polar(1.0, z.imag()), x.error());
            a.modulus_sq = QSqrt3(1);
            return {Scalar(a), Scalar(0), false, Kind::General};
        }
        const std::complex<double> e = std::exp(z);
        return {Scalar::approx(e, std::abs(e) * x.error()), Scalar(0), false,
                v.kind == Kind::Real ? Kind::Real : Kind::General};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Scalar parse_scalar(std::string_view text) { return detail::Parser(text).run(); }

} // namespace affhom
