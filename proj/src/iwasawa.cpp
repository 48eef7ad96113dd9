#include <iwacalc/errors.hpp>
#include <iwacalc/integer.hpp>
#include <iwacalc/iwasawa.hpp>

#include <algorithm>

namespace iwacalc
{

IwasawaElement::IwasawaElement(unsigned long p, std::vector<TruncatedSeries> components)
    : m_p(p), m_components(std::move(components))
{
    require_odd_prime(p);
    if (m_components.size() != p - 1) {
        throw UsageError("IwasawaElement needs exactly p - 1 = " + std::to_string(p - 1) + " components, got "
                         + std::to_string(m_components.size()));
    }
    for (const auto &c : m_components) {
        if (c.prime() != p || c.x_precision() != m_components.front().x_precision()) {
            throw UsageError("IwasawaElement components must share p and x-precision");
        }
    }
}

IwasawaElement IwasawaElement::one(unsigned long p, std::size_t x_precision, long p_precision)
{
    return IwasawaElement(p, std::vector<TruncatedSeries>(p - 1, TruncatedSeries::constant(p, 1, x_precision, p_precision)));
}

IwasawaElement IwasawaElement::zero(unsigned long p, std::size_t x_precision, long p_precision)
{
    return IwasawaElement(p, std::vector<TruncatedSeries>(p - 1, TruncatedSeries(p, x_precision, p_precision)));
}

IwasawaElement operator+(const IwasawaElement &a, const IwasawaElement &b)
{
    if (a.m_p != b.m_p) {
        throw UsageError("IwasawaElement: different primes");
    }
    std::vector<TruncatedSeries> out;
    for (std::size_t i = 0; i < a.m_components.size(); ++i) {
        out.push_back(a.m_components[i] + b.m_components[i]);
    }
    return IwasawaElement(a.m_p, std::move(out));
}

IwasawaElement operator*(const IwasawaElement &a, const IwasawaElement &b)
{
    if (a.m_p != b.m_p) {
        throw UsageError("IwasawaElement: different primes");
    }
    std::vector<TruncatedSeries> out;
    for (std::size_t i = 0; i < a.m_components.size(); ++i) {
        out.push_back(a.m_components[i] * b.m_components[i]);
    }
    return IwasawaElement(a.m_p, std::move(out));
}

bool operator==(const IwasawaElement &a, const IwasawaElement &b)
{
    return a.m_p == b.m_p && a.m_components == b.m_components;
}

bool equal_at_precision(const IwasawaElement &a, const IwasawaElement &b)
{
    if (a.prime() != b.prime()) {
        return false;
    }
    for (std::size_t i = 0; i < a.components().size(); ++i) {
        if (!equal_at_precision(a.component(i), b.component(i))) {
            return false;
        }
    }
    return true;
}

IwasawaElement idempotent(unsigned long p, std::size_t eta, std::size_t x_precision, long p_precision)
{
    require_odd_prime(p);
    std::vector<TruncatedSeries> cs(p - 1, TruncatedSeries(p, x_precision, p_precision));
    cs[eta % (p - 1)] = TruncatedSeries::constant(p, 1, x_precision, p_precision);
    return IwasawaElement(p, std::move(cs));
}

TruncatedSeries involution_iota(const TruncatedSeries &f)
{
    // f(-X/(1+X)): coefficient m >= 1 is (-1)^m sum_{k=1}^m c_k binom(m-1, k-1)
    const std::size_t d = f.x_precision();
    const auto c = f.numerators();
    std::vector<mpz_class> out(d + 1);
    out[0] = c[0];
    std::vector<mpz_class> row{1}; // binom(m-1, .)
    for (std::size_t m = 1; m <= d; ++m) {
        mpz_class acc = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            mpz_addmul(acc.get_mpz_t(), c[k].get_mpz_t(), row[k - 1].get_mpz_t());
        }
        out[m] = (m % 2 == 0) ? acc : mpz_class(-acc);
        std::vector<mpz_class> next(row.size() + 1);
        next[0] = 1;
        next[row.size()] = 1;
        for (std::size_t i = 1; i < row.size(); ++i) {
            next[i] = row[i - 1] + row[i];
        }
        row = std::move(next);
    }
    return TruncatedSeries(f.prime(), std::move(out), f.p_precision(), f.denominator_exp());
}

IwasawaElement involution_iota(const IwasawaElement &f)
{
    const unsigned long p = f.prime();
    std::vector<TruncatedSeries> out(f.components());
    for (std::size_t eta = 0; eta < p - 1; ++eta) {
        out[(p - 1 - eta) % (p - 1)] = involution_iota(f.component(eta));
    }
    return IwasawaElement(p, std::move(out));
}

WeierstrassData weierstrass(const TruncatedSeries &f)
{
    const unsigned long p = f.prime();
    if (f.denominator_exp() != 0) {
        throw UsageError("weierstrass: input must be integral, got denominator p^" + std::to_string(f.denominator_exp()));
    }
    if (f.is_zero()) {
        throw PrecisionError("weierstrass: series is zero at precision p^" + std::to_string(f.p_precision())
                                 + "; mu is not certifiable",
                             1);
    }
    const long n = f.p_precision();
    const std::size_t d = f.x_precision();
    const auto c = f.numerators();

    long mu = n;
    for (const auto &x : c) {
        if (x != 0) {
            mu = std::min(mu, valuation(x, p));
        }
    }
    std::size_t lambda = 0;
    while (c[lambda] == 0 || valuation(c[lambda], p) != mu) {
        ++lambda;
    }

    const long ng = n - mu;
    const mpz_class pmu = prime_power(p, mu);
    std::vector<mpz_class> gc(c.begin(), c.end());
    for (auto &x : gc) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), pmu.get_mpz_t());
    }
    const TruncatedSeries g(p, gc, ng);

    if (lambda == 0) {
        return WeierstrassData{mu, 0, TruncatedSeries::constant(p, 1, d, ng), g, ng, true};
    }
    if (d < 2 * lambda - 1) {
        throw PrecisionError("weierstrass: x-precision " + std::to_string(d) + " too small for lambda = "
                                 + std::to_string(lambda) + " (need D >= 2 lambda - 1)",
                             0);
    }

    // g = A + X^lambda B with A = 0 mod p and B a unit. Weierstrass division
    // of X^lambda by g: the quotient q satisfies q B = w with
    // w = sum_k (-T)^k (1), T(u) = tau(A B^{-1} u), tau = shift down by lambda.
    // Each application of T gains v(A) digits and loses lambda x-digits.
    const TruncatedSeries a = g.low_part(lambda);
    const TruncatedSeries b = g.shift_down(lambda);
    const TruncatedSeries b_inv = b.inverse();
    std::size_t x = d - lambda;
    const TruncatedSeries e = a.truncate(x) * b_inv;
    const long va = a.is_zero() ? ng : std::max(1L, a.numerator_valuation());
    const long needed = (ng + va - 1) / va - 1;

    TruncatedSeries term = TruncatedSeries::constant(p, 1, x, ng);
    TruncatedSeries w = term;
    long k = 0;
    while (k < needed && x >= 2 * lambda - 1) {
        x -= lambda;
        term = -(e.truncate(x + lambda) * term.truncate(x + lambda)).shift_down(lambda);
        w = w.truncate(x) + term;
        ++k;
    }
    const long precision = std::min(ng, (k + 1) * va);

    const TruncatedSeries q = (w * b_inv.truncate(x)).with_p_precision(precision);
    const TruncatedSeries qg = q * g.truncate(x);
    std::vector<mpz_class> pc(d + 1);
    for (std::size_t i = 0; i < lambda; ++i) {
        pc[i] = qg.numerator(i);
    }
    pc[lambda] = 1;
    TruncatedSeries distinguished(p, std::move(pc), precision);
    for (std::size_t i = 0; i < lambda; ++i) {
        if (mpz_divisible_ui_p(distinguished.numerator(i).get_mpz_t(), p) == 0) {
            throw Error("weierstrass: internal invariant breach, non-distinguished factor");
        }
    }
    return WeierstrassData{mu, lambda, std::move(distinguished), q.inverse(), precision, precision == ng};
}

ModulePresentation::ModulePresentation(SeriesMatrix matrix)
    : m_matrix(std::move(matrix)), m_det(m_matrix.determinant())
{
    for (const auto &f : m_matrix.entries()) {
        if (f.denominator_exp() != 0) {
            throw UsageError("presentation entries must lie in Z_p[[X]]");
        }
    }
    if (m_det.is_zero()) {
        throw PrecisionError("determinant of the presentation is zero at precision; torsion is not certifiable", 1);
    }
}

TruncatedSeries char_poly(const ModulePresentation &presentation)
{
    return presentation.determinant();
}

ComparisonReport functional_equation_compare(const TruncatedSeries &fx, const TruncatedSeries &fy)
{
    const WeierstrassData wx = weierstrass(fx);
    const WeierstrassData wy = weierstrass(involution_iota(fy));
    ComparisonReport r;
    r.mu[0] = wx.mu;
    r.mu[1] = wy.mu;
    r.lambda[0] = wx.lambda;
    r.lambda[1] = wy.lambda;
    r.certified[0] = wx.certified;
    r.certified[1] = wy.certified;
    r.precision = std::min(wx.precision, wy.precision);
    if (wx.mu != wy.mu) {
        r.witness = "mu mismatch: " + std::to_string(wx.mu) + " vs " + std::to_string(wy.mu);
        return r;
    }
    if (wx.lambda != wy.lambda) {
        r.witness = "lambda mismatch: " + std::to_string(wx.lambda) + " vs " + std::to_string(wy.lambda);
        return r;
    }
    const std::size_t dmin = std::min(wx.distinguished.x_precision(), wy.distinguished.x_precision());
    const TruncatedSeries px = wx.distinguished.truncate(dmin).with_p_precision(r.precision);
    const TruncatedSeries py = wy.distinguished.truncate(dmin).with_p_precision(r.precision);
    const TruncatedSeries diff = px - py;
    if (!diff.is_zero()) {
        std::size_t i = 0;
        while (diff.numerator(i) == 0) {
            ++i;
        }
        r.witness = "distinguished polynomials differ at X^" + std::to_string(i) + ": " + px.numerator(i).get_str()
                    + " vs " + py.numerator(i).get_str() + " mod " + std::to_string(wx.distinguished.prime()) + "^"
                    + std::to_string(r.precision);
        return r;
    }
    r.pass = true;
    return r;
}

EulerExponents euler_characteristic_exponent(unsigned long p, unsigned long m, unsigned long e,
                                             unsigned long deg_f, unsigned long n_level, unsigned long g,
                                             unsigned long g_minus)
{
    require_odd_prime(p);
    if (g_minus > g) {
        throw UsageError("g_minus must not exceed g");
    }
    const mpz_class base = mpz_class(m) * prime_power(p, static_cast<long>(n_level)) * e * deg_f;
    return EulerExponents{-(base * g_minus), base * g};
}

} // namespace iwacalc
