#ifndef IWACALC_INTEGER_HPP
#define IWACALC_INTEGER_HPP

#include <string>

#include <gmpxx.h>

// Small helpers over GMP integers shared by the p-adic layers.

namespace iwacalc
{

// p^k for k >= 0.
mpz_class prime_power(unsigned long p, long k);

// p-adic valuation of a nonzero integer.
long valuation(const mpz_class &x, unsigned long p);

// Non-negative residue of x modulo m.
mpz_class reduce(const mpz_class &x, const mpz_class &m);

// Inverse of a unit modulo m. Throws DomainError when x is not invertible.
mpz_class inverse_mod(const mpz_class &x, const mpz_class &m);

bool is_odd_prime(unsigned long p);

// Throws UsageError unless p is an odd prime.
void require_odd_prime(unsigned long p);

// Strict decimal parse ("-12", "7"); throws SchemaError otherwise.
mpz_class parse_decimal(const std::string &text);

} // namespace iwacalc

#endif
