#include <iwacalc/errors.hpp>
#include <iwacalc/integer.hpp>

#include <cctype>

namespace iwacalc
{

mpz_class prime_power(unsigned long p, long k)
{
    if (k < 0) {
        throw UsageError("prime_power: negative exponent " + std::to_string(k));
    }
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), p, static_cast<unsigned long>(k));
    return out;
}

long valuation(const mpz_class &x, unsigned long p)
{
    if (x == 0) {
        throw DomainError("valuation of zero");
    }
    mpz_class rest;
    mpz_class prime{p};
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

mpz_class reduce(const mpz_class &x, const mpz_class &m)
{
    mpz_class out;
    mpz_mod(out.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return out;
}

mpz_class inverse_mod(const mpz_class &x, const mpz_class &m)
{
    if (m == 1) {
        return 0;
    }
    mpz_class out;
    if (mpz_invert(out.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw DomainError("element is not invertible modulo " + m.get_str());
    }
    return out;
}

bool is_odd_prime(unsigned long p)
{
    if (p < 3 || p % 2 == 0) {
        return false;
    }
    for (unsigned long d = 3; d * d <= p; d += 2) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

void require_odd_prime(unsigned long p)
{
    if (!is_odd_prime(p)) {
        throw UsageError("p must be an odd prime, got " + std::to_string(p));
    }
}

mpz_class parse_decimal(const std::string &text)
{
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        i = 1;
    }
    if (i == text.size()) {
        throw SchemaError("not a decimal integer: '" + text + "'");
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw SchemaError("not a decimal integer: '" + text + "'");
        }
    }
    return mpz_class(text[0] == '+' ? text.substr(1) : text, 10);
}

} // namespace iwacalc
