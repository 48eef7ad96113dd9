#include <doctest.h>

#include <iwacalc/errors.hpp>
#include <iwacalc/series.hpp>

#include "support.hpp"

using namespace iwacalc;
using namespace iwacalc::testing;

namespace
{

TruncatedSeries from_exact(unsigned long p, const std::vector<mpz_class> &c, std::size_t d, long n)
{
    std::vector<mpz_class> out(d + 1);
    for (std::size_t i = 0; i <= d && i < c.size(); ++i) {
        out[i] = c[i];
    }
    return TruncatedSeries(p, std::move(out), n);
}

// ((1+X)^{p^n} - 1) / X, coefficientwise binom(p^n, i + 1).
std::vector<mpz_class> binomial_product(unsigned long p, unsigned n, std::size_t d)
{
    const unsigned long q = prime_power(p, n).get_ui();
    std::vector<mpz_class> c(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        c[i] = i + 1 <= q ? binomial(q, i + 1) : mpz_class(0);
    }
    return c;
}

} // namespace

TEST_CASE("series arithmetic examples")
{
    const auto a = polynomial(3, {1, 1}, 6, 8);
    const auto b = polynomial(3, {1, -1}, 6, 8);
    CHECK(a * b == polynomial(3, {1, 0, -1}, 6, 8));
    CHECK((a * TruncatedSeries(3, 6, 8)).is_zero());

    const auto phi = polynomial(3, {3, 3, 1}, 6, 8);
    const auto sq = convolve({3, 3, 1}, {3, 3, 1});
    CHECK(phi * phi == from_exact(3, sq, 6, 8));
}

TEST_CASE("multiplication matches schoolbook convolution")
{
    for (unsigned long p : {3UL, 5UL}) {
        const mpz_class m = prime_power(p, 6);
        for (int t = 0; t < 50; ++t) {
            const auto f = random_series(p, 9, 6);
            const auto g = random_series(p, 9, 6);
            std::vector<mpz_class> fc(f.numerators().begin(), f.numerators().end());
            std::vector<mpz_class> gc(g.numerators().begin(), g.numerators().end());
            auto prod = convolve(fc, gc);
            for (std::size_t i = 0; i <= 9; ++i) {
                mpz_class r = prod[i] % m;
                if (r < 0) {
                    r += m;
                }
                CHECK((f * g).numerator(i) == r);
            }
        }
    }
}

TEST_CASE("normal form and precision bookkeeping")
{
    // 3 X / 3 = X: s drops, numerator precision drops with it
    const TruncatedSeries f(3, {0, 3, 9}, 6, 1);
    CHECK(f.denominator_exp() == 0);
    CHECK(f.absolute_precision() == 5);
    CHECK(f == polynomial(3, {0, 1, 3}, 2, 5));

    const TruncatedSeries z(3, {9, 18}, 2, 1);
    CHECK(z.is_zero());
    CHECK(z.absolute_precision() == 1);
    CHECK(z.denominator_exp() == 0);

    const auto h = polynomial(3, {1, 2}, 4, 6).scaled_by_p(-2);
    CHECK(h.denominator_exp() == 2);
    CHECK(h.coefficient(0).valuation() == -2);
    CHECK(h.valuation() == -2);

    // sum aligned to the larger denominator, precision is the min of absolute precisions
    const auto s = h + polynomial(3, {0, 0, 1}, 4, 3);
    CHECK(s.absolute_precision() == 3);
}

TEST_CASE("series inverse")
{
    for (int t = 0; t < 50; ++t) {
        auto f = random_series(5, 12, 7);
        if (f.numerator(0) % 5 == 0) {
            f = f + TruncatedSeries::constant(5, 1, 12, 7);
        }
        CHECK(equal_at_precision(f * f.inverse(), TruncatedSeries::constant(5, 1, 12, 7)));
    }
    CHECK_THROWS(polynomial(3, {3, 1}, 5, 5).inverse());
}

TEST_CASE("shift and truncation helpers")
{
    const auto f = polynomial(3, {1, 2, 3, 4, 5}, 4, 6);
    CHECK(f.shift_down(2) == polynomial(3, {3, 4, 5}, 2, 6));
    CHECK(f.low_part(2) == polynomial(3, {1, 2}, 4, 6));
    CHECK(f.truncate(1) == polynomial(3, {1, 2}, 1, 6));
    CHECK(TruncatedSeries::monomial(3, 2, 4, 6) == polynomial(3, {0, 0, 1}, 4, 6));
    CHECK(TruncatedSeries::monomial(3, 7, 4, 6).is_zero());
}

TEST_CASE("ring axioms on random triples")
{
    for (unsigned long p : {3UL, 5UL, 7UL}) {
        for (int t = 0; t < 1000; ++t) {
            const auto f = random_series(p, 6, 5, static_cast<long>(uniform(3)));
            const auto g = random_series(p, 6, 5, static_cast<long>(uniform(3)));
            const auto h = random_series(p, 6, 5, static_cast<long>(uniform(3)));
            REQUIRE(equal_at_precision((f + g) + h, f + (g + h)));
            REQUIRE(equal_at_precision(f + g, g + f));
            REQUIRE(equal_at_precision((f * g) * h, f * (g * h)));
            REQUIRE(equal_at_precision(f * g, g * f));
            REQUIRE(equal_at_precision(f * (g + h), f * g + f * h));
            REQUIRE((f - f).is_zero());
        }
    }
}

TEST_CASE("shifted cyclotomic polynomial")
{
    CHECK(cyclotomic_shifted(3, 1, 4, 10) == polynomial(3, {3, 3, 1}, 4, 10));
    CHECK_THROWS_AS(cyclotomic_shifted(3, 0, 4, 10), UsageError);

    for (unsigned long p : {3UL, 5UL, 7UL}) {
        for (unsigned n = 1; n <= 3; ++n) {
            const auto phi = cyclotomic_shifted(p, n, 30, 12);
            CHECK(phi.denominator_exp() == 0);
            CHECK(phi.numerator(0) == p);
            // all coefficients below the leading one are divisible by p
            const unsigned long deg = prime_power(p, n).get_ui() - prime_power(p, n - 1).get_ui();
            for (std::size_t i = 0; i < std::min<std::size_t>(deg, 31); ++i) {
                CHECK(phi.numerator(i) % p == 0);
            }
            if (deg <= 30) {
                CHECK(phi.numerator(deg) == 1);
            }
        }
    }
}

TEST_CASE("Phi_9(1+X) by exact polynomial division")
{
    // (1+X)^9 - 1 divided by (1+X)^3 - 1
    std::vector<mpz_class> num(10), den(4);
    for (unsigned long i = 1; i <= 9; ++i) {
        num[i] = binomial(9, i);
    }
    for (unsigned long i = 1; i <= 3; ++i) {
        den[i] = binomial(3, i);
    }
    // strip the common factor X
    num.erase(num.begin());
    den.erase(den.begin());
    std::vector<mpz_class> quot(num.size() - den.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        quot[k] = num[k + den.size() - 1] / den.back();
        for (std::size_t j = 0; j < den.size(); ++j) {
            num[k + j] -= quot[k] * den[j];
        }
    }
    for (const auto &r : num) {
        REQUIRE(r == 0);
    }
    const std::vector<mpz_class> expected{3, 9, 18, 21, 15, 6, 1};
    CHECK(quot == expected);
    CHECK(cyclotomic_shifted(3, 2, 8, 10) == from_exact(3, quot, 8, 10));
}

TEST_CASE("cyclotomic product telescopes to binomials")
{
    for (unsigned long p : {3UL, 5UL}) {
        for (unsigned n = 1; n <= 4; ++n) {
            CHECK(equal_at_precision(cyclotomic_product(p, n, 40, 15), from_exact(p, binomial_product(p, n, 40), 40, 15)));
        }
    }
}

TEST_CASE("log(1+X)/(pX)")
{
    const auto f = log_over_px(3, 2, 10);
    CHECK(f.denominator_exp() >= 1);
    CHECK(equal_at_precision(f.coefficient(0), PadicScalar::from_rational(3, 1, 3, 8)));
    CHECK(equal_at_precision(f.coefficient(1), PadicScalar::from_rational(3, -1, 6, 8)));
    CHECK(equal_at_precision(f.coefficient(2), PadicScalar::from_rational(3, 1, 9, 8)));
    for (unsigned long p : {3UL, 5UL}) {
        const auto g = log_over_px(p, 30, 12);
        for (std::size_t k = 0; k <= 30; ++k) {
            const long sign = k % 2 == 0 ? 1 : -1;
            const auto expected = PadicScalar::from_rational(p, sign, mpz_class(p * (k + 1)), g.absolute_precision());
            CHECK(equal_at_precision(g.coefficient(k), expected));
        }
    }
    const auto l = log_one_plus_x(5, 20, 12);
    CHECK(equal_at_precision(l, (log_over_px(5, 20, 12) * TruncatedSeries::monomial(5, 1, 20, 12)).scaled_by_p(1)));
}

TEST_CASE("agreement of normalized cyclotomic products with log(1+X)/(pX)")
{
    // v_p of prod_{k<=n} Phi_{3^k}(1+X) / 3^{n+1} - log(1+X)/(3X) modulo X^10.
    const unsigned long p = 3;
    const std::size_t d = 9;
    const std::vector<long> frozen{-3, -1, 0, 1, 2, 3, 4, 5};
    for (unsigned n = 1; n <= 8; ++n) {
        // exact rational oracle
        long oracle = std::numeric_limits<long>::max();
        const mpz_class q = prime_power(p, n);
        for (std::size_t i = 0; i <= d; ++i) {
            const mpz_class b = i + 1 <= q ? binomial(q.get_ui(), i + 1) : mpz_class(0);
            mpq_class diff = mpq_class(b, prime_power(p, n + 1)) - mpq_class(i % 2 == 0 ? 1 : -1, p * (i + 1));
            diff.canonicalize();
            if (diff != 0) {
                oracle = std::min(oracle, rational_valuation(diff, p));
            }
        }
        CHECK(oracle == frozen[n - 1]);

        const auto partial = cyclotomic_product(p, n, d, 40).scaled_by_p(-static_cast<long>(n + 1));
        const auto diff = partial - log_over_px(p, d, 40);
        CHECK(diff.valuation() == frozen[n - 1]);
    }
}

TEST_CASE("log gamma ratio")
{
    const auto u = PadicScalar::from_integer(3, 4, 20);
    const auto f = log_gamma_ratio(3, 10, 20, u);
    const auto back = f * padic_log(u);
    CHECK(equal_at_precision(back, log_one_plus_x(3, 10, 20)));
}
