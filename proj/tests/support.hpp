#ifndef IWACALC_TESTS_SUPPORT_HPP
#define IWACALC_TESTS_SUPPORT_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include <iwacalc/integer.hpp>
#include <iwacalc/series.hpp>

namespace iwacalc::testing
{

inline gmp_randclass &rng()
{
    static gmp_randclass r(gmp_randinit_mt);
    static bool seeded = false;
    if (!seeded) {
        r.seed(20261014UL);
        seeded = true;
    }
    return r;
}

inline unsigned long uniform(unsigned long bound)
{
    const mpz_class x = rng().get_z_range(bound);
    return x.get_ui();
}

// Uniform numerators modulo p^N with denominator p^s.
inline TruncatedSeries random_series(unsigned long p, std::size_t d, long n, long s = 0)
{
    const mpz_class modulus = prime_power(p, n);
    std::vector<mpz_class> c(d + 1);
    for (auto &x : c) {
        x = rng().get_z_range(modulus);
    }
    return TruncatedSeries(p, std::move(c), n, s);
}

inline TruncatedSeries polynomial(unsigned long p, std::vector<long> coeffs, std::size_t d, long n)
{
    std::vector<mpz_class> c(d + 1);
    for (std::size_t i = 0; i < coeffs.size() && i <= d; ++i) {
        c[i] = coeffs[i];
    }
    return TruncatedSeries(p, std::move(c), n);
}

// Exact product of integer polynomials.
inline std::vector<mpz_class> convolve(const std::vector<mpz_class> &a, const std::vector<mpz_class> &b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    std::vector<mpz_class> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

inline mpz_class binomial(unsigned long n, unsigned long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// p-adic valuation of a nonzero rational.
inline long rational_valuation(const mpq_class &q, unsigned long p)
{
    return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

} // namespace iwacalc::testing

#endif
