#pragma once

#include "holonorm/errors.hpp"
#include "holonorm/exact/bipoly.hpp"
#include "holonorm/exact/poly.hpp"
#include "holonorm/exact/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace holonorm {

/// Row-major dense matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(size_t a, size_t b) {
        if (a == b)
            return;
        for (size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> data_;
};

/// Integral-domain operations needed by fraction-free elimination.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Integer> {
    static bool is_zero(const Integer& a) { return a == 0; }
    static Integer one() { return 1; }
    static Integer exact_div(const Integer& a, const Integer& b) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
};

template <>
struct RingTraits<Poly> {
    static bool is_zero(const Poly& a) { return a.is_zero(); }
    static Poly one() { return Poly{1}; }
    static Poly exact_div(const Poly& a, const Poly& b) { return holonorm::exact_div(a, b); }
};

template <>
struct RingTraits<BiPoly> {
    static bool is_zero(const BiPoly& a) { return a.is_zero(); }
    static BiPoly one() { return BiPoly(1); }
    static BiPoly exact_div(const BiPoly& a, const BiPoly& b) { return holonorm::exact_div(a, b); }
};

/// Fraction-free (Bareiss) Gauss-Jordan elimination over an integral domain. Every division is
/// exact, every pivot row ends with the same pivot value d and zeros in the other pivot columns,
/// so the right nullspace has a basis with entries in the ring: for each free column f,
/// v[f] = d and v[pivot column of row r] = -A[r][f].
template <class R>
std::vector<std::vector<R>> nullspace_ring(Matrix<R> a) {
    using Ops = RingTraits<R>;
    const size_t rows = a.rows(), cols = a.cols();
    R prev = Ops::one();
    std::vector<size_t> pivot_cols;
    std::vector<bool> is_pivot(cols, false);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && Ops::is_zero(a(p, c)))
            ++p;
        if (p == rows)
            continue;
        a.swap_rows(p, r);
        const R pivot = a(r, c);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r)
                continue;
            const R factor = a(i, c);
            for (size_t j = 0; j < cols; ++j) {
                if (j == c)
                    continue;
                R t = pivot * a(i, j) - factor * a(r, j);
                a(i, j) = Ops::exact_div(t, prev);
            }
            a(i, c) = R();
        }
        prev = pivot;
        pivot_cols.push_back(c);
        is_pivot[c] = true;
        ++r;
    }

    std::vector<std::vector<R>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<R> v(cols, R());
        v[f] = prev;
        for (size_t k = 0; k < pivot_cols.size(); ++k)
            v[pivot_cols[k]] = R() - a(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact right nullspace of a rational matrix via fraction-free elimination on the row-scaled
/// integer matrix. Each basis vector is returned content-free with a positive last nonzero entry.
/// Empty iff the nullspace is trivial.
std::vector<std::vector<Rational>> nullspace_ff(const Matrix<Rational>& m);

} // namespace holonorm
