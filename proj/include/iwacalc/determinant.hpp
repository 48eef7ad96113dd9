#ifndef IWACALC_DETERMINANT_HPP
#define IWACALC_DETERMINANT_HPP

#include <cstddef>
#include <vector>

namespace iwacalc
{

// Division-free determinant (Berkowitz / Samuelson) of an n x n row-major
// matrix over a commutative ring. Only +, -, * and copies of `zero` / `one`
// are used, so it is safe over truncated local rings where exact division
// by a pivot is unavailable. O(n^4) ring multiplications.
template <typename T>
T berkowitz_determinant(const std::vector<T> &a, std::size_t n, const T &zero, const T &one)
{
    if (n == 0) {
        return one;
    }
    auto at = [&](std::size_t i, std::size_t j) -> const T & { return a[i * n + j]; };
    // characteristic polynomial coefficients of the leading r x r block, highest degree first
    std::vector<T> v{one, zero - at(0, 0)};
    for (std::size_t r = 1; r < n; ++r) {
        std::vector<T> c(r + 2, zero);
        c[0] = one;
        c[1] = zero - at(r, r);
        std::vector<T> col(r, zero);
        for (std::size_t i = 0; i < r; ++i) {
            col[i] = at(i, r);
        }
        for (std::size_t k = 2; k <= r + 1; ++k) {
            T dot = zero;
            for (std::size_t i = 0; i < r; ++i) {
                dot = dot + at(r, i) * col[i];
            }
            c[k] = zero - dot;
            if (k <= r) {
                std::vector<T> next(r, zero);
                for (std::size_t i = 0; i < r; ++i) {
                    for (std::size_t j = 0; j < r; ++j) {
                        next[i] = next[i] + at(i, j) * col[j];
                    }
                }
                col = std::move(next);
            }
        }
        std::vector<T> w(r + 2, zero);
        for (std::size_t i = 0; i < r + 2; ++i) {
            for (std::size_t j = 0; j <= std::min(i, r); ++j) {
                w[i] = w[i] + c[i - j] * v[j];
            }
        }
        v = std::move(w);
    }
    return (n % 2 == 1) ? zero - v[n] : v[n];
}

} // namespace iwacalc

#endif
