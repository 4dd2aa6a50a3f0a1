#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace hforest {

using BigInt = mpz_class;

inline BigInt big_pow(const BigInt& base, uint64_t exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline bool divides(const BigInt& d, const BigInt& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Quotient a/d for exact divisions only (undefined otherwise).
inline BigInt div_exact(const BigInt& a, const BigInt& d) {
    BigInt r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return r;
}

}  // namespace hforest
