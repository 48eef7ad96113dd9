#ifndef IWACALC_FROBENIUS_HPP
#define IWACALC_FROBENIUS_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include <iwacalc/padic.hpp>
#include <iwacalc/series_matrix.hpp>
#include <iwacalc/zp_matrix.hpp>

namespace iwacalc
{

// Frobenius matrix C_phi = C * S in a basis v_1..v_g whose first g_minus
// vectors span Fil^0, where S is diagonal with 1/p on the "scaled" block and
// 1 elsewhere. For primal data the scaled block is the trailing g_plus
// vectors; the dual of primal data has the leading g_minus vectors scaled.
class FrobeniusData
{
public:
    FrobeniusData(ZpMatrix c, std::size_t g_minus, std::size_t g_plus, Side orientation = Side::primal);

    unsigned long prime() const noexcept
    {
        return m_c.prime();
    }
    std::size_t g_minus() const noexcept
    {
        return m_g_minus;
    }
    std::size_t g_plus() const noexcept
    {
        return m_g_plus;
    }
    std::size_t size() const noexcept
    {
        return m_c.size();
    }
    // p-adic precision of the entries of C.
    long precision() const noexcept
    {
        return m_c.precision();
    }
    Side orientation() const noexcept
    {
        return m_orientation;
    }
    const ZpMatrix &c() const noexcept
    {
        return m_c;
    }
    const ZpMatrix &c_inverse() const noexcept
    {
        return m_c_inverse;
    }

    // Whether basis vector i carries the 1/p scaling.
    bool is_scaled(std::size_t i) const noexcept;
    // p * C_phi, an integral matrix.
    ZpMatrix scaled_frobenius() const;
    // C_phi over Q_p, row-major.
    std::vector<PadicScalar> frobenius_matrix() const;

    friend bool operator==(const FrobeniusData &a, const FrobeniusData &b);

private:
    ZpMatrix m_c;
    ZpMatrix m_c_inverse;
    std::size_t m_g_minus;
    std::size_t m_g_plus;
    Side m_orientation;
};

// Validates shape and det(C) in Z_p^x. Entries are integers taken modulo p^precision.
FrobeniusData build_frobenius(const std::vector<std::vector<mpz_class>> &c, std::size_t g_minus,
                              std::size_t g_plus, unsigned long p, long precision);
// Entries given as p-adic scalars; each must be integral. Working precision is
// the smallest absolute precision among the entries.
FrobeniusData build_frobenius(const std::vector<std::vector<PadicScalar>> &c, std::size_t g_minus,
                              std::size_t g_plus);

// g = 2, g_+ = g_- = 1 with the convention C = [[a_p, -1], [1, 0]]; requires v_p(a_p) >= 1.
FrobeniusData build_frobenius_from_ap(const PadicScalar &ap, long precision);

// C*_phi = (1/p) (C_phi^{-1})^t = (C^{-1})^t diag((1/p) I_{g_-}, I_{g_+}).
FrobeniusData dual_frobenius(const FrobeniusData &fd);

// Uniform entries modulo p^precision, rejection-sampled until det(C) is a unit.
FrobeniusData random_frobenius(unsigned long p, std::size_t g_minus, std::size_t g_plus, long precision,
                               gmp_randclass &rng);

} // namespace iwacalc

#endif
