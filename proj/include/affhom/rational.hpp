#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>

#include "errors.hpp"

namespace affhom {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) throw DivisionByZero();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer floor_div(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline int sign(const Rational& q) { return sgn(q); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::size_t hash_integer(const mpz_t z)
{
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) * 0x9e3779b97f4a7c15ULL;
    const std::size_t limbs = mpz_size(z);
    for (std::size_t i = 0; i < limbs; ++i) {
        h ^= static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

inline std::size_t hash_rational(const Rational& q)
{
    std::size_t h = hash_integer(q.get_num_mpz_t());
    h ^= hash_integer(q.get_den_mpz_t()) + 0x517cc1b727220a95ULL + (h << 6) + (h >> 2);
    return h;
}

inline std::size_t hash_combine(std::size_t seed, std::size_t h)
{
    return seed ^ (h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace affhom
