#ifndef IWACALC_LOGMATRIX_HPP
#define IWACALC_LOGMATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <iwacalc/frobenius.hpp>
#include <iwacalc/series_matrix.hpp>

namespace iwacalc
{

// Working-precision defaults: n_max = 6, D = 2 p^2, N = 2 (n_max + 2).
struct LogMatrixDefaults {
    static constexpr unsigned n_max = 6;
    static std::size_t x_precision(unsigned long p)
    {
        return 2 * p * p;
    }
    static long p_precision(unsigned n_max_ = n_max)
    {
        return 2 * (static_cast<long>(n_max_) + 2);
    }
};

// C_n = diag(I, Phi_{p^n}(1+X) I) C^{-1} (primal) or
// C*_n = diag(Phi_{p^n}(1+X) I, I) C^t (dual); integral entries.
SeriesMatrix block_factor(const FrobeniusData &fd, unsigned n, Side side, std::size_t x_precision,
                          long p_precision);

// M_n = C_phi^{n+1} C_n ... C_1 (or its dual). Requires N > n + 1.
SeriesMatrix logarithmic_matrix(const FrobeniusData &fd, unsigned n, Side side, std::size_t x_precision,
                                long p_precision);

// M_1, ..., M_{n_max}, sharing the partial products. Requires N > n_max + 1.
std::vector<SeriesMatrix> logarithmic_matrices(const FrobeniusData &fd, unsigned n_max, Side side,
                                               std::size_t x_precision, long p_precision);

// C_phi^{n+1} * factors[n-1] * ... * factors[0] where C_phi is taken from
// `oriented` as is (no dualization). Used to assemble M_n from explicit,
// possibly modified, block factors.
SeriesMatrix assemble_logarithmic_matrix(const FrobeniusData &oriented, std::span<const SeriesMatrix> factors);

struct ConvergenceStep {
    unsigned n;
    // min over entries/coefficients of v_p(M_{n+1} - M_n); when the difference
    // vanishes at precision this is the absolute precision and lower_bound is set.
    long agreement_valuation = 0;
    long absolute_precision = 0;
    bool lower_bound = false;
    std::optional<std::string> error;
};

std::vector<ConvergenceStep> convergence_run(const FrobeniusData &fd, unsigned n_max, std::size_t x_precision,
                                             long p_precision);

struct CheckWitness {
    std::size_t row = 0;
    std::size_t col = 0;
    std::size_t coefficient = 0;
    std::string lhs;
    std::string rhs;
};

struct CheckReport {
    std::string check;
    bool pass = false;
    unsigned n = 0;
    // absolute precision at which lhs - rhs was tested
    long absolute_precision = 0;
    // absolute precision minus the valuation of the right-hand side:
    // the number of significant digits the comparison actually constrains
    long verified_digits = 0;
    std::optional<CheckWitness> witness;
    std::vector<CheckReport> parts;
};

// Entrywise comparison lhs == rhs at the tracked precision.
CheckReport compare_matrices(const std::string &check, const SeriesMatrix &lhs, const SeriesMatrix &rhs);

// M_n^t M*_n = p^{-(n+1)} prod_{k<=n} Phi_{p^k}(1+X) I_g, checked exactly.
CheckReport verify_orthogonality(const FrobeniusData &fd, unsigned n, std::size_t x_precision, long p_precision);
// Same identity for explicitly supplied M_n and M*_n.
CheckReport orthogonality_report(const SeriesMatrix &primal, const SeriesMatrix &dual, unsigned n);

// det M_n = det(C) p^{-(n+1) g_+} (prod Phi)^{g_+} and
// det M_n det M*_n = p^{-(n+1) g} (prod Phi)^g.
CheckReport determinant_identity_check(const FrobeniusData &fd, unsigned n, std::size_t x_precision,
                                       long p_precision);

} // namespace iwacalc

#endif
