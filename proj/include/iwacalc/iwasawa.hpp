#ifndef IWACALC_IWASAWA_HPP
#define IWACALC_IWASAWA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <iwacalc/series.hpp>
#include <iwacalc/series_matrix.hpp>

namespace iwacalc
{

// Element of Z_p[Delta][[X]] in its isotypic decomposition: component eta
// (an exponent modulo p - 1 relative to a fixed generator of Delta) is the
// image under e_eta, a truncated element of Z_p[[X]].
class IwasawaElement
{
public:
    IwasawaElement(unsigned long p, std::vector<TruncatedSeries> components);

    static IwasawaElement one(unsigned long p, std::size_t x_precision, long p_precision);
    static IwasawaElement zero(unsigned long p, std::size_t x_precision, long p_precision);

    unsigned long prime() const noexcept
    {
        return m_p;
    }
    const TruncatedSeries &component(std::size_t eta) const
    {
        return m_components.at(eta);
    }
    const std::vector<TruncatedSeries> &components() const noexcept
    {
        return m_components;
    }

    friend IwasawaElement operator+(const IwasawaElement &a, const IwasawaElement &b);
    friend IwasawaElement operator*(const IwasawaElement &a, const IwasawaElement &b);
    friend bool operator==(const IwasawaElement &a, const IwasawaElement &b);

private:
    unsigned long m_p;
    std::vector<TruncatedSeries> m_components;
};

bool equal_at_precision(const IwasawaElement &a, const IwasawaElement &b);

// e_eta = (1/(p-1)) sum_sigma eta(sigma)^{-1} sigma: 1 in slot eta, 0 elsewhere.
IwasawaElement idempotent(unsigned long p, std::size_t eta, std::size_t x_precision, long p_precision);

// sigma -> sigma^{-1}: X -> (1+X)^{-1} - 1 on Z_p[[X]].
TruncatedSeries involution_iota(const TruncatedSeries &f);
// Also sends the eta-component to the (-eta)-component.
IwasawaElement involution_iota(const IwasawaElement &f);

// f = p^mu * distinguished * unit.
struct WeierstrassData {
    long mu = 0;
    std::size_t lambda = 0;
    // monic of degree lambda, lower coefficients divisible by p, known modulo p^precision
    TruncatedSeries distinguished;
    // unit of Z_p[[X]], possibly at lower x-precision than the input
    TruncatedSeries unit;
    // p-adic digits to which the distinguished polynomial is determined
    long precision = 0;
    // precision equals the full precision N - mu of the input
    bool certified = false;
};

// Weierstrass preparation of an integral truncated series. The series is
// read as the polynomial c_0 + ... + c_D X^D. Throws PrecisionError when no
// coefficient is certainly nonzero, or when the x-precision is too small to
// determine the distinguished polynomial to one digit.
WeierstrassData weierstrass(const TruncatedSeries &f);

// Square presentation matrix of a torsion Z_p[[X]]-module.
class ModulePresentation
{
public:
    // Entries must be integral. Throws PrecisionError when the determinant is
    // zero at the tracked precision.
    explicit ModulePresentation(SeriesMatrix matrix);

    std::size_t size() const noexcept
    {
        return m_matrix.size();
    }
    const SeriesMatrix &matrix() const noexcept
    {
        return m_matrix;
    }
    const TruncatedSeries &determinant() const noexcept
    {
        return m_det;
    }

private:
    SeriesMatrix m_matrix;
    TruncatedSeries m_det;
};

// Characteristic power series: det of the presentation matrix.
TruncatedSeries char_poly(const ModulePresentation &presentation);

struct ComparisonReport {
    bool pass = false;
    long mu[2] = {0, 0};
    std::size_t lambda[2] = {0, 0};
    // digits at which the distinguished polynomials were compared
    long precision = 0;
    bool certified[2] = {false, false};
    std::optional<std::string> witness;
};

// f_X and iota(f_Y) generate the same ideal: equal mu, lambda and distinguished polynomial.
ComparisonReport functional_equation_compare(const TruncatedSeries &fx, const TruncatedSeries &fy);

struct EulerExponents {
    mpz_class global;
    mpz_class local;
};

// (-m p^n e deg_f g_minus, m p^n e deg_f g).
EulerExponents euler_characteristic_exponent(unsigned long p, unsigned long m, unsigned long e,
                                             unsigned long deg_f, unsigned long n_level, unsigned long g,
                                             unsigned long g_minus);

} // namespace iwacalc

#endif
