#include <doctest.h>

#include <iwacalc/errors.hpp>
#include <iwacalc/integer.hpp>
#include <iwacalc/padic.hpp>

#include "support.hpp"

using namespace iwacalc;
using iwacalc::testing::rng;

namespace
{

// Extended Euclid, independent of mpz_invert.
mpz_class euclid_inverse(mpz_class a, const mpz_class &m)
{
    mpz_class r0 = m, r1 = a % m, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const mpz_class q = r0 / r1;
        mpz_class tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    REQUIRE(r0 == 1);
    return ((t0 % m) + m) % m;
}

} // namespace

TEST_CASE("integer helpers")
{
    CHECK(prime_power(3, 4) == 81);
    CHECK(valuation(mpz_class(162), 3) == 4);
    CHECK(reduce(mpz_class(-1), mpz_class(9)) == 8);
    CHECK(is_odd_prime(3));
    CHECK(is_odd_prime(7919));
    CHECK_FALSE(is_odd_prime(2));
    CHECK_FALSE(is_odd_prime(9));
    CHECK_THROWS_AS(require_odd_prime(4), UsageError);
    CHECK(parse_decimal("-12") == -12);
    CHECK_THROWS_AS(parse_decimal("1e3"), SchemaError);
    CHECK_THROWS_AS(inverse_mod(mpz_class(3), mpz_class(9)), DomainError);
}

TEST_CASE("scalar arithmetic examples")
{
    const auto one = PadicScalar::from_integer(3, 1, 10);
    const auto two = PadicScalar::from_integer(3, 2, 10);
    const auto sum = one + two;
    CHECK(sum.valuation() == 1);
    CHECK(sum.unit() == 1);
    CHECK(sum.to_integer() == 3);

    const auto zero = PadicScalar::exact_zero(5);
    const auto x = PadicScalar::from_integer(5, 17, 6);
    CHECK((zero * x).is_exact_zero());

    const auto third = PadicScalar::from_rational(3, 1, 3, 8);
    const auto two_thirds = third + third;
    CHECK(two_thirds.valuation() == -1);
    CHECK(two_thirds.unit() == 2);

    CHECK_THROWS_AS(one + PadicScalar::from_integer(5, 1, 4), UsageError);
}

TEST_CASE("precision never grows")
{
    const auto a = PadicScalar::from_integer(3, 1, 5);
    const auto b = PadicScalar::from_integer(3, 1, 3);
    CHECK((a + b).absolute_precision() == 3);
    CHECK((a - a).is_zero());
    CHECK_FALSE((a - a).is_exact_zero());
    CHECK((a - a).absolute_precision() == 5);
    const auto c = PadicScalar::from_integer(3, 9, 6);
    // v(a) = 0, v(c) = 2: product known to min(N_a + 2, N_c + 0) = 6
    CHECK((a * c).absolute_precision() == 6);
}

TEST_CASE("inversion examples")
{
    const auto inv = invert(PadicScalar::from_integer(3, 2, 4));
    CHECK(inv.valuation() == 0);
    CHECK(inv.unit() == euclid_inverse(2, 81));
    CHECK(inv.unit() == 41);

    CHECK(invert(PadicScalar::from_integer(5, 1, 6)).to_integer() == 1);

    const auto u = invert(PadicScalar::from_integer(3, 3, 6));
    CHECK(u.valuation() == -1);
    CHECK(u.unit() == 1);

    CHECK_THROWS_AS(invert(PadicScalar::exact_zero(3)), DomainError);
    CHECK_THROWS_AS(invert(PadicScalar::zero(3, 4)), DomainError);
    CHECK_THROWS_AS(invert(PadicScalar::from_integer(3, 27, 3)), DomainError);
}

TEST_CASE("inverse times value is one for random units")
{
    for (unsigned long p : {3UL, 5UL, 7UL}) {
        const mpz_class m = prime_power(p, 12);
        for (int t = 0; t < 200; ++t) {
            mpz_class x = rng().get_z_range(m);
            if (x % p == 0) {
                x += 1;
            }
            const auto a = PadicScalar::from_integer(p, x, 12);
            const auto inv = invert(a);
            CHECK(inv.unit() == euclid_inverse(x, m));
            CHECK(equal_at_precision(a * inv, PadicScalar::from_integer(p, 1, 12)));
        }
    }
}

TEST_CASE("padic log is a homomorphism on principal units")
{
    const unsigned long p = 5;
    const auto u = PadicScalar::from_integer(p, 1 + 5, 20);
    const auto w = PadicScalar::from_integer(p, 1 + 25 * 3, 20);
    const auto lhs = padic_log(u * w);
    const auto rhs = padic_log(u) + padic_log(w);
    CHECK(equal_at_precision(lhs, rhs));
    CHECK(padic_log(u).valuation() == 1);
    CHECK_THROWS_AS(padic_log(PadicScalar::from_integer(p, 2, 10)), DomainError);
}
