// Exact integer linear algebra: Smith normal form, ranks over Q and Z/p,
// and a dense diagonalization that keeps its unimodular transforms.

#ifndef HALFCUBE_INTEGER_MATRIX_HPP
#define HALFCUBE_INTEGER_MATRIX_HPP

#include "halfcube/complex.hpp"
#include "halfcube/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace halfcube {

class DenseIntegerMatrix {
public:
    DenseIntegerMatrix() = default;
    DenseIntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    DenseIntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static DenseIntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    DenseIntegerMatrix operator*(const DenseIntegerMatrix& rhs) const;
    friend bool operator==(const DenseIntegerMatrix&, const DenseIntegerMatrix&) = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[target] += factor * row[source]
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
    /// col[target] += factor * col[source]
    void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

DenseIntegerMatrix to_dense(const BoundaryMatrix& m);

struct SmithForm {
    /// Nonzero invariant factors, positive, each dividing the next.
    std::vector<Integer> factors;
    std::size_t rank = 0;

    /// Invariant factors greater than one.
    std::vector<Integer> torsion() const;
};

/// Sparse elimination with the smallest-magnitude pivot, ties broken by (row, col).
SmithForm smith_normal_form(const BoundaryMatrix& m);
SmithForm smith_normal_form(const DenseIntegerMatrix& m);

/// left * m * right = diagonal with nonzero entries at (i, i) for i < rank.
/// The transforms are unimodular and their inverses are tracked alongside.
struct Diagonalization {
    DenseIntegerMatrix left, left_inverse, right, right_inverse, diagonal;
    std::size_t rank = 0;
};

Diagonalization diagonalize(const DenseIntegerMatrix& m);

/// Exact determinant of a square matrix (fraction-free elimination).
Integer determinant(const DenseIntegerMatrix& m);

/// Rank over Q by sparse fraction-free elimination.
std::size_t rank_rational(const BoundaryMatrix& m);

namespace serial {
/// Rank over Z/p, p prime below 2^31.
std::size_t rank_mod_p(const BoundaryMatrix& m, std::uint32_t p);
} // namespace serial

namespace parallel {
std::size_t rank_mod_p(const BoundaryMatrix& m, std::uint32_t p);
} // namespace parallel

} // namespace halfcube

#endif
