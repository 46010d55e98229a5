#include "halfcube/integer_matrix.hpp"

#include "sparse_elimination.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace halfcube {

DenseIntegerMatrix::DenseIntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("DenseIntegerMatrix: ragged initializer");
        for (long long v : row)
            data_.emplace_back(v);
    }
}

DenseIntegerMatrix DenseIntegerMatrix::identity(std::size_t n)
{
    DenseIntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

DenseIntegerMatrix DenseIntegerMatrix::operator*(const DenseIntegerMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("DenseIntegerMatrix: shape mismatch in product");
    DenseIntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                if (rhs(k, j) != 0)
                    out(i, j) += a * rhs(k, j);
        }
    return out;
}

void DenseIntegerMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void DenseIntegerMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

void DenseIntegerMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor)
{
    if (factor == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(source, c) != 0)
            (*this)(target, c) += factor * (*this)(source, c);
}

void DenseIntegerMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor)
{
    if (factor == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        if ((*this)(r, source) != 0)
            (*this)(r, target) += factor * (*this)(r, source);
}

DenseIntegerMatrix to_dense(const BoundaryMatrix& m)
{
    DenseIntegerMatrix out(m.rows, m.cols);
    for (std::size_t c = 0; c < m.cols; ++c)
        for (const auto& e : m.columns[c])
            out(e.row, c) = e.value;
    return out;
}

std::vector<Integer> SmithForm::torsion() const
{
    std::vector<Integer> out;
    for (const auto& f : factors)
        if (f > 1)
            out.push_back(f);
    return out;
}

namespace {

using Row = detail::SparseVec<Integer>;

struct Pivot {
    std::size_t row;
    std::uint32_t col;
    Integer value;
};

std::optional<Pivot> smallest_pivot(const std::vector<Row>& rows, const std::vector<char>& active)
{
    std::optional<Pivot> best;
    Integer best_abs;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!active[r])
            continue;
        for (std::size_t e = 0; e < rows[r].size(); ++e) {
            Integer a = abs(rows[r].val[e]);
            if (!best || a < best_abs) {
                best = Pivot{r, rows[r].idx[e], rows[r].val[e]};
                best_abs = std::move(a);
                if (best_abs == 1)
                    return best;
            }
        }
    }
    return best;
}

void make_divisibility_chain(std::vector<Integer>& d)
{
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (d[j] % d[i] == 0)
                continue;
            const Integer g = gcd(d[i], d[j]);
            const Integer l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
}

SmithForm smith_of_rows(std::vector<Row> rows)
{
    std::vector<char> active(rows.size(), 1);
    SmithForm out;

    while (auto pivot = smallest_pivot(rows, active)) {
        const Integer& p = pivot->value;
        bool clean = true;

        // Row operations clear the pivot column.
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot->row || !active[r])
                continue;
            const Integer* a = rows[r].find(pivot->col);
            if (!a)
                continue;
            const Integer q = *a / p;
            if (*a - q * p != 0)
                clean = false;
            if (q != 0) {
                std::vector<std::uint32_t> fill;
                rows[r] = detail::combine(detail::IntegerRing{}, Integer(1), rows[r], Integer(-q),
                                          rows[pivot->row], fill);
            }
        }
        if (!clean)
            continue;

        // The pivot column is clear, so column operations only touch the pivot row.
        Row& prow = rows[pivot->row];
        Row reduced;
        for (std::size_t e = 0; e < prow.size(); ++e) {
            if (prow.idx[e] == pivot->col) {
                reduced.idx.push_back(prow.idx[e]);
                reduced.val.push_back(prow.val[e]);
                continue;
            }
            Integer rem = prow.val[e] % p;
            if (rem != 0) {
                clean = false;
                reduced.idx.push_back(prow.idx[e]);
                reduced.val.push_back(std::move(rem));
            }
        }
        const Integer value = p;
        prow = std::move(reduced);
        if (!clean)
            continue;

        out.factors.push_back(abs(value));
        active[pivot->row] = 0;
    }
    make_divisibility_chain(out.factors);
    out.rank = out.factors.size();
    return out;
}

} // namespace

SmithForm smith_normal_form(const BoundaryMatrix& m)
{
    return smith_of_rows(detail::rows_of(m, detail::IntegerRing{}));
}

SmithForm smith_normal_form(const DenseIntegerMatrix& m)
{
    std::vector<Row> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0) {
                rows[r].idx.push_back(static_cast<std::uint32_t>(c));
                rows[r].val.push_back(m(r, c));
            }
    return smith_of_rows(std::move(rows));
}

Diagonalization diagonalize(const DenseIntegerMatrix& m)
{
    const std::size_t R = m.rows(), C = m.cols();
    Diagonalization d{DenseIntegerMatrix::identity(R), DenseIntegerMatrix::identity(R), DenseIntegerMatrix::identity(C),
                      DenseIntegerMatrix::identity(C), m, 0};
    auto& a = d.diagonal;

    const auto row_op = [&](std::size_t target, std::size_t source, const Integer& f) {
        a.add_row_multiple(target, source, f);
        d.left.add_row_multiple(target, source, f);
        d.left_inverse.add_col_multiple(source, target, -f);
    };
    const auto col_op = [&](std::size_t target, std::size_t source, const Integer& f) {
        a.add_col_multiple(target, source, f);
        d.right.add_col_multiple(target, source, f);
        d.right_inverse.add_row_multiple(source, target, -f);
    };
    const auto swap_r = [&](std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        d.left.swap_rows(i, j);
        d.left_inverse.swap_cols(i, j);
    };
    const auto swap_c = [&](std::size_t i, std::size_t j) {
        a.swap_cols(i, j);
        d.right.swap_cols(i, j);
        d.right_inverse.swap_rows(i, j);
    };

    for (std::size_t t = 0; t < std::min(R, C); ++t) {
        while (true) {
            std::size_t br = R, bc = C;
            Integer best;
            for (std::size_t r = t; r < R; ++r)
                for (std::size_t c = t; c < C; ++c)
                    if (a(r, c) != 0 && (br == R || abs(a(r, c)) < best)) {
                        best = abs(a(r, c));
                        br = r;
                        bc = c;
                    }
            if (br == R)
                return d;
            swap_r(t, br);
            swap_c(t, bc);

            bool clean = true;
            for (std::size_t r = t + 1; r < R; ++r) {
                if (a(r, t) == 0)
                    continue;
                const Integer q = a(r, t) / a(t, t);
                row_op(r, t, -q);
                if (a(r, t) != 0)
                    clean = false;
            }
            for (std::size_t c = t + 1; c < C; ++c) {
                if (a(t, c) == 0)
                    continue;
                const Integer q = a(t, c) / a(t, t);
                col_op(c, t, -q);
                if (a(t, c) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        d.rank = t + 1;
    }
    return d;
}

Integer determinant(const DenseIntegerMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    DenseIntegerMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            a.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rank_rational(const BoundaryMatrix& m)
{
    return detail::sparse_rank(m, detail::FractionFreeField{}, detail::Schedule::Serial);
}

} // namespace halfcube
