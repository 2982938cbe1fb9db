#ifndef GAUGECOHO_NUMBERS_HPP
#define GAUGECOHO_NUMBERS_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace gaugecoho {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) { return v.get_str(); }

inline Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Representative of v in [0, p).
inline Integer mod_floor(const Integer& v, std::uint64_t p)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
    return r;
}

// a * b mod p without overflow.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);

bool is_prime(std::uint64_t p);

} // namespace gaugecoho

#endif
