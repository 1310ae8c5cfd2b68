#ifndef ORETEL_MATRIX_HPP
#define ORETEL_MATRIX_HPP

#include "oretel/mpoly.hpp"
#include "oretel/ratfunc.hpp"

#include <cassert>
#include <vector>

namespace oretel {

template <class F>
class Matrix {
public:
    Matrix() : r_(0), c_(0) {}
    Matrix(size_t r, size_t c) : r_(r), c_(c), a_(r * c) {}
    Matrix(size_t r, size_t c, F fill) : r_(r), c_(c), a_(r * c, fill) {}

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    F& at(size_t i, size_t j) { return a_[i * c_ + j]; }
    const F& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = 0; k < c_; ++k) std::swap(at(i, k), at(j, k));
    }

private:
    size_t r_, c_;
    std::vector<F> a_;
};

// Basis of the right nullspace over a field (ModInt or Rat): Gauss-Jordan
// elimination; `one` supplies the multiplicative identity of F.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m, const F& one) {
    const size_t R = m.rows(), C = m.cols();
    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < C && rank < R; ++col) {
        size_t pr = rank;
        while (pr < R && m.at(pr, col).is_zero()) ++pr;
        if (pr == R) continue;
        m.swap_rows(rank, pr);
        F inv = one / m.at(rank, col);
        for (size_t k = col; k < C; ++k) m.at(rank, k) = m.at(rank, k) * inv;
        for (size_t i = 0; i < R; ++i) {
            if (i == rank || m.at(i, col).is_zero()) continue;
            F f = m.at(i, col);
            for (size_t k = col; k < C; ++k)
                m.at(i, k) = m.at(i, k) - f * m.at(rank, k);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(C, false);
    for (size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<F>> basis;
    for (size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> x(C, F());
        x[f] = one;
        for (size_t r = 0; r < rank; ++r) {
            // x[pivot_col[r]] = -m[r][f]
            if (!m.at(r, f).is_zero()) x[pivot_col[r]] = F() - m.at(r, f);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

inline std::vector<std::vector<ModInt>> nullspace_mod(const Matrix<ModInt>& m, uint32_t p) {
    return nullspace(m, ModInt(1, p));
}

// Right-nullspace basis of a matrix with entries in Q[w], computed by
// fraction-free cross-multiplication elimination with per-row content
// stripping.  Basis vectors come back with polynomial entries of content 1.
std::vector<std::vector<MPoly<Rat>>> nullspace_fraction_free(Matrix<MPoly<Rat>> m);

} // namespace oretel

#endif
