#ifndef COMPLEXFORGE_RATIONAL_LINALG_HPP
#define COMPLEXFORGE_RATIONAL_LINALG_HPP

#include "complexforge/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace complexforge {

/// Dense row-major matrix over the rationals; just enough linear algebra
/// for exact rank and small exact solves.
struct RationalMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Rational> data;

    RationalMatrix() = default;
    RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Rational& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Rank by fraction-free-ish Gaussian elimination (exact, no tolerances).
inline std::size_t rational_rank(RationalMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        const Rational inv = Rational(1) / m.at(rank, col);
        for (std::size_t j = col; j < m.cols; ++j) m.at(rank, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            const Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

/// Solves A x = b exactly; nullopt when the system is inconsistent.
/// For underdetermined consistent systems free variables are set to zero.
inline std::optional<std::vector<Rational>> rational_solve(RationalMatrix a,
                                                           std::vector<Rational> b) {
    const std::size_t n = a.rows, m = a.cols;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && a.at(pivot, col) == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != rank) {
            for (std::size_t j = col; j < m; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
            std::swap(b[pivot], b[rank]);
        }
        const Rational inv = Rational(1) / a.at(rank, col);
        for (std::size_t j = col; j < m; ++j) a.at(rank, j) *= inv;
        b[rank] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || a.at(i, col) == 0) continue;
            const Rational f = a.at(i, col);
            for (std::size_t j = col; j < m; ++j) a.at(i, j) -= f * a.at(rank, j);
            b[i] -= f * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < n; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rational> x(m, Rational(0));
    for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = b[i];
    return x;
}

} // namespace complexforge

#endif
