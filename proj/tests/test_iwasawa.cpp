#include <doctest.h>

#include <iwacalc/errors.hpp>
#include <iwacalc/iwasawa.hpp>

#include "support.hpp"

using namespace iwacalc;
using namespace iwacalc::testing;

namespace
{

// -X (1+X)^{-1}, the substitution behind iota
TruncatedSeries iota_inner(unsigned long p, std::size_t d, long n)
{
    const auto one_plus_x = polynomial(p, {1, 1}, d, n);
    return -(TruncatedSeries::monomial(p, 1, d, n) * one_plus_x.inverse());
}

TruncatedSeries random_unit(unsigned long p, std::size_t d, long n)
{
    auto u = random_series(p, d, n);
    if (u.numerator(0) % p == 0) {
        u = u + TruncatedSeries::constant(p, 1, d, n);
    }
    return u;
}

} // namespace

TEST_CASE("idempotents")
{
    const unsigned long p = 5;
    const auto one = IwasawaElement::one(p, 8, 6);
    auto sum = IwasawaElement::zero(p, 8, 6);
    for (std::size_t a = 0; a < p - 1; ++a) {
        const auto ea = idempotent(p, a, 8, 6);
        CHECK(equal_at_precision(ea * ea, ea));
        sum = sum + ea;
        for (std::size_t b = 0; b < p - 1; ++b) {
            if (a != b) {
                CHECK(equal_at_precision(ea * idempotent(p, b, 8, 6), IwasawaElement::zero(p, 8, 6)));
            }
        }
        CHECK(equal_at_precision(involution_iota(ea), idempotent(p, (p - 1 - a) % (p - 1), 8, 6)));
    }
    CHECK(equal_at_precision(sum, one));
    CHECK_THROWS(IwasawaElement(p, {TruncatedSeries(p, 8, 6)}));
}

TEST_CASE("iota examples")
{
    const std::size_t d = 10;
    const auto x = TruncatedSeries::monomial(3, 1, d, 8);
    std::vector<long> geometric(d + 1);
    for (std::size_t i = 1; i <= d; ++i) {
        geometric[i] = i % 2 == 1 ? -1 : 1;
    }
    CHECK(involution_iota(x) == polynomial(3, geometric, d, 8));

    const auto g = polynomial(3, {1, 1}, d, 8);
    CHECK(equal_at_precision(involution_iota(g) * g, TruncatedSeries::constant(3, 1, d, 8)));
}

TEST_CASE("iota agrees with substitution and is a ring involution")
{
    for (unsigned long p : {3UL, 5UL}) {
        const std::size_t d = 20;
        const auto inner = iota_inner(p, d, 8);
        for (int t = 0; t < 50; ++t) {
            const auto f = random_series(p, d, 8, static_cast<long>(uniform(2)));
            const auto g = random_series(p, d, 8);
            CHECK(equal_at_precision(involution_iota(f), f.compose(inner)));
            CHECK(involution_iota(involution_iota(f)) == f);
            CHECK(equal_at_precision(involution_iota(f * g), involution_iota(f) * involution_iota(g)));
            CHECK(equal_at_precision(involution_iota(f + g), involution_iota(f) + involution_iota(g)));
        }
    }
}

TEST_CASE("weierstrass examples")
{
    const auto w0 = weierstrass(polynomial(3, {3, 3}, 10, 8));
    CHECK(w0.mu == 1);
    CHECK(w0.lambda == 0);
    CHECK(equal_at_precision(w0.unit, polynomial(3, {1, 1}, 10, 7)));
    CHECK(w0.certified);

    const auto w1 = weierstrass(polynomial(3, {3, 1}, 10, 8));
    CHECK(w1.mu == 0);
    CHECK(w1.lambda == 1);
    CHECK(w1.distinguished == polynomial(3, {3, 1}, 10, 8));
    CHECK(w1.certified);

    // (X+3)(X^2+3X+3)(2+X), factored back
    const auto distinguished = convolve({3, 1}, {3, 3, 1});
    const auto product = convolve(distinguished, {2, 1});
    std::vector<long> pc;
    for (const auto &c : product) {
        pc.push_back(c.get_si());
    }
    std::vector<long> dc;
    for (const auto &c : distinguished) {
        dc.push_back(c.get_si());
    }
    const auto w3 = weierstrass(polynomial(3, pc, 30, 8));
    CHECK(w3.mu == 0);
    CHECK(w3.lambda == 3);
    CHECK(w3.certified);
    CHECK(w3.distinguished == polynomial(3, dc, 30, 8));
    CHECK(equal_at_precision(w3.unit, polynomial(3, {2, 1}, w3.unit.x_precision(), 8)));
}

TEST_CASE("weierstrass factorization reproduces the input")
{
    const unsigned long p = 3;
    int certified = 0;
    for (int t = 0; t < 100; ++t) {
        const std::size_t lambda = uniform(4);
        const long mu = static_cast<long>(uniform(3));
        std::vector<mpz_class> c(31);
        const mpz_class m = prime_power(p, 8);
        for (std::size_t i = 0; i <= 30; ++i) {
            c[i] = rng().get_z_range(m);
            if (i < lambda) {
                c[i] *= p;
            }
        }
        if (c[lambda] % p == 0) {
            c[lambda] += 1;
        }
        for (auto &x : c) {
            x *= prime_power(p, mu);
        }
        const TruncatedSeries f(p, c, 8);
        const auto w = weierstrass(f);
        CHECK(w.mu == mu);
        CHECK(w.lambda == lambda);
        CHECK(w.distinguished.numerator(lambda) == 1);
        for (std::size_t i = 0; i < lambda; ++i) {
            CHECK(w.distinguished.numerator(i) % p == 0);
        }
        const std::size_t dx = w.unit.x_precision();
        const auto recon = (w.distinguished.truncate(dx) * w.unit).scaled_by_p(mu);
        CHECK(equal_at_precision(recon.with_p_precision(std::min(recon.p_precision(), w.precision + mu)),
                                 f.truncate(dx).with_p_precision(w.precision + mu)));
        certified += w.certified ? 1 : 0;
    }
    CHECK(certified > 50);
}

TEST_CASE("weierstrass errors")
{
    CHECK_THROWS_AS(weierstrass(TruncatedSeries(3, 10, 6)), PrecisionError);
    CHECK_THROWS_AS(weierstrass(polynomial(3, {3, 3, 3, 1}, 4, 6)), PrecisionError);
    CHECK_THROWS_AS(weierstrass(polynomial(3, {1, 1}, 4, 6).scaled_by_p(-1)), UsageError);
}

TEST_CASE("char_poly examples")
{
    const unsigned long p = 3;
    const std::size_t d = 10;
    const auto xp = polynomial(p, {3, 1}, d, 8);
    const auto zero = TruncatedSeries(p, d, 8);
    const SeriesMatrix diag(p, 2, d, {xp, zero, zero, xp});
    CHECK(char_poly(ModulePresentation(diag)) == xp * xp);

    const auto x = TruncatedSeries::monomial(p, 1, d, 8);
    const auto pc = TruncatedSeries::constant(p, 3, d, 8);
    const SeriesMatrix m(p, 2, d, {x, pc, pc, x});
    CHECK(char_poly(ModulePresentation(m)) == polynomial(p, {-9, 0, 1}, d, 8));

    CHECK_THROWS_AS(ModulePresentation(SeriesMatrix(p, 2, d, 8)), PrecisionError);
    CHECK_THROWS(ModulePresentation(SeriesMatrix::scalar(xp.scaled_by_p(-1), 2)));
}

TEST_CASE("planted determinant survives row operations")
{
    const unsigned long p = 5;
    const std::size_t d = 12;
    for (int t = 0; t < 20; ++t) {
        std::vector<TruncatedSeries> diag;
        TruncatedSeries planted = TruncatedSeries::constant(p, 1, d, 8);
        for (int k = 0; k < 3; ++k) {
            diag.push_back(random_series(p, d, 8));
            planted = planted * diag.back();
        }
        SeriesMatrix m(p, 3, d, 8);
        for (std::size_t k = 0; k < 3; ++k) {
            m.set(k, k, diag[k]);
        }
        for (int op = 0; op < 6; ++op) {
            const std::size_t i = uniform(3);
            const std::size_t j = (i + 1 + uniform(2)) % 3;
            const auto r = random_series(p, d, 8);
            for (std::size_t c = 0; c < 3; ++c) {
                m.set(i, c, m(i, c) + r * m(j, c));
            }
        }
        if (planted.is_zero()) {
            continue;
        }
        CHECK(equal_at_precision(char_poly(ModulePresentation(m)), planted));
    }
}

TEST_CASE("char_poly of a block diagonal presentation is the product")
{
    const unsigned long p = 3;
    const std::size_t d = 10;
    const auto a = random_series(p, d, 8), b = random_series(p, d, 8), c = random_series(p, d, 8),
               e = random_series(p, d, 8), f = random_series(p, d, 8);
    const auto z = TruncatedSeries(p, d, 8);
    const SeriesMatrix block1(p, 2, d, {a, b, c, e});
    const SeriesMatrix whole(p, 3, d, {a, b, z, c, e, z, z, z, f});
    CHECK(equal_at_precision(char_poly(ModulePresentation(whole)),
                             char_poly(ModulePresentation(block1)) * f));
}

TEST_CASE("functional equation comparator")
{
    const unsigned long p = 3;
    const std::size_t d = 20;
    const auto x = TruncatedSeries::monomial(p, 1, d, 8);
    CHECK(functional_equation_compare(x, x).pass);

    const auto xp = polynomial(p, {3, 1}, d, 8);
    const auto fy = random_unit(p, d, 8) * involution_iota(xp);
    const auto ok = functional_equation_compare(xp, fy);
    CHECK(ok.pass);
    CHECK(ok.lambda[0] == 1);

    const auto bad = functional_equation_compare(x, x * x);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->find("lambda") != std::string::npos);
}

TEST_CASE("Euler characteristic exponents")
{
    auto e = euler_characteristic_exponent(3, 1, 1, 1, 0, 2, 1);
    CHECK(e.global == -1);
    CHECK(e.local == 2);
    e = euler_characteristic_exponent(3, 0, 5, 7, 2, 4, 2);
    CHECK(e.global == 0);
    CHECK(e.local == 0);
    e = euler_characteristic_exponent(3, 2, 3, 2, 1, 4, 2);
    CHECK(e.global == -72);
    CHECK(e.local == 144);
    CHECK_THROWS_AS(euler_characteristic_exponent(3, 1, 1, 1, 0, 2, 3), UsageError);
}
