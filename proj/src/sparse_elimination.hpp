// Sparse Gaussian elimination for rank computation, parametrized by the
// coefficient arithmetic. Pivot order: shortest active row first, then the
// cheapest entry in it (unit entries for integers), then the sparsest column.
#ifndef HALFCUBE_SRC_SPARSE_ELIMINATION_HPP
#define HALFCUBE_SRC_SPARSE_ELIMINATION_HPP

#include "halfcube/complex.hpp"
#include "halfcube/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace halfcube::detail {

template <class T>
struct SparseVec {
    std::vector<std::uint32_t> idx;
    std::vector<T> val;

    std::size_t size() const { return idx.size(); }
    bool empty() const { return idx.empty(); }

    const T* find(std::uint32_t col) const
    {
        const auto it = std::lower_bound(idx.begin(), idx.end(), col);
        if (it == idx.end() || *it != col)
            return nullptr;
        return &val[static_cast<std::size_t>(it - idx.begin())];
    }
};

template <class Field>
std::vector<SparseVec<typename Field::value_type>> rows_of(const BoundaryMatrix& m, const Field& field)
{
    std::vector<SparseVec<typename Field::value_type>> rows(m.rows);
    for (std::size_t c = 0; c < m.cols; ++c)
        for (const auto& e : m.columns[c]) {
            auto v = field.from_int(e.value);
            if (field.is_zero(v))
                continue;
            rows[e.row].idx.push_back(static_cast<std::uint32_t>(c));
            rows[e.row].val.push_back(std::move(v));
        }
    return rows;
}

/// out = alpha * target + beta * source; columns new to target go to `fill`.
template <class Field>
SparseVec<typename Field::value_type> combine(const Field& field, const typename Field::value_type& alpha,
                                              const SparseVec<typename Field::value_type>& target,
                                              const typename Field::value_type& beta,
                                              const SparseVec<typename Field::value_type>& source,
                                              std::vector<std::uint32_t>& fill)
{
    SparseVec<typename Field::value_type> out;
    out.idx.reserve(target.size() + source.size());
    out.val.reserve(target.size() + source.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < source.size()) {
        if (j == source.size() || (i < target.size() && target.idx[i] < source.idx[j])) {
            auto v = field.mul(alpha, target.val[i]);
            if (!field.is_zero(v)) {
                out.idx.push_back(target.idx[i]);
                out.val.push_back(std::move(v));
            }
            ++i;
        } else if (i == target.size() || source.idx[j] < target.idx[i]) {
            auto v = field.mul(beta, source.val[j]);
            if (!field.is_zero(v)) {
                out.idx.push_back(source.idx[j]);
                out.val.push_back(std::move(v));
                fill.push_back(source.idx[j]);
            }
            ++j;
        } else {
            auto v = field.add(field.mul(alpha, target.val[i]), field.mul(beta, source.val[j]));
            if (!field.is_zero(v)) {
                out.idx.push_back(target.idx[i]);
                out.val.push_back(std::move(v));
            }
            ++i;
            ++j;
        }
    }
    field.normalize(out);
    return out;
}

struct ModPField {
    using value_type = std::uint32_t;
    std::uint32_t p;

    value_type from_int(long long v) const
    {
        long long r = v % static_cast<long long>(p);
        return static_cast<value_type>(r < 0 ? r + p : r);
    }
    bool is_zero(value_type v) const { return v == 0; }
    value_type mul(value_type a, value_type b) const
    {
        return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p);
    }
    value_type add(value_type a, value_type b) const
    {
        const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<value_type>(s >= p ? s - p : s);
    }
    value_type inverse(value_type a) const
    {
        // Fermat: a^(p-2)
        std::uint64_t result = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1)
                result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<value_type>(result);
    }
    int score(value_type) const { return 0; }
    /// Coefficients (alpha, beta) that zero the pivot column of a row holding `a`.
    std::pair<value_type, value_type> coefficients(value_type pivot, value_type a) const
    {
        return {1, static_cast<value_type>((p - mul(a, inverse(pivot))) % p)};
    }
    void normalize(SparseVec<value_type>&) const {}
};

struct FractionFreeField {
    using value_type = Integer;

    value_type from_int(long long v) const { return Integer(v); }
    bool is_zero(const value_type& v) const { return v == 0; }
    value_type mul(const value_type& a, const value_type& b) const
    {
        if (a == 1)
            return b;
        return a * b;
    }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    /// Pivot preference inside a row: small magnitudes first, capped.
    int score(const value_type& v) const
    {
        const Integer a = abs(v);
        return a > 1000 ? 1000 : a.convert_to<int>();
    }
    std::pair<value_type, value_type> coefficients(const value_type& pivot, const value_type& a) const
    {
        if (a % pivot == 0)
            return {1, -(a / pivot)};
        const Integer g = gcd(a, pivot);
        return {pivot / g, -(a / g)};
    }
    void normalize(SparseVec<value_type>& row) const
    {
        if (row.empty())
            return;
        Integer g = 0;
        for (const auto& v : row.val) {
            g = gcd(g, v);
            if (g == 1)
                return;
        }
        if (g > 1)
            for (auto& v : row.val)
                v /= g;
    }
};

/// Same arithmetic without dividing rows by their content; row operations
/// must stay unimodular when invariant factors are wanted.
struct IntegerRing : FractionFreeField {
    void normalize(SparseVec<value_type>&) const {}
};

enum class Schedule { Serial, OpenMP };

template <class Field>
std::size_t sparse_rank(const BoundaryMatrix& m, const Field& field, Schedule schedule)
{
    using Value = typename Field::value_type;
    auto rows = rows_of(m, field);
    std::vector<std::vector<std::uint32_t>> col_rows(m.cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (auto c : rows[r].idx)
            col_rows[c].push_back(static_cast<std::uint32_t>(r));

    std::vector<char> active(rows.size(), 1);
    std::vector<std::uint32_t> stamp(rows.size(), std::numeric_limits<std::uint32_t>::max());
    std::size_t rank = 0;

    for (std::uint32_t step = 0;; ++step) {
        std::size_t pivot_row = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!active[r])
                continue;
            if (rows[r].empty()) {
                active[r] = 0;
                continue;
            }
            if (pivot_row == rows.size() || rows[r].size() < rows[pivot_row].size())
                pivot_row = r;
        }
        if (pivot_row == rows.size())
            break;

        const auto& prow = rows[pivot_row];
        std::size_t best = 0;
        for (std::size_t e = 1; e < prow.size(); ++e) {
            const int s = field.score(prow.val[e]), sb = field.score(prow.val[best]);
            if (s < sb || (s == sb && col_rows[prow.idx[e]].size() < col_rows[prow.idx[best]].size()))
                best = e;
        }
        const std::uint32_t pivot_col = prow.idx[best];
        const Value pivot_value = prow.val[best];
        active[pivot_row] = 0;
        ++rank;

        std::vector<std::uint32_t> targets;
        for (auto r : col_rows[pivot_col]) {
            if (!active[r] || stamp[r] == step)
                continue;
            stamp[r] = step;
            if (rows[r].find(pivot_col))
                targets.push_back(r);
        }
        col_rows[pivot_col].clear();

        std::vector<std::vector<std::uint32_t>> fills(targets.size());
        const auto count = static_cast<std::ptrdiff_t>(targets.size());
        const auto update = [&](std::ptrdiff_t t) {
            auto& row = rows[targets[t]];
            const Value a = *row.find(pivot_col);
            const auto [alpha, beta] = field.coefficients(pivot_value, a);
            row = combine(field, alpha, row, beta, rows[pivot_row], fills[t]);
        };
        if (schedule == Schedule::OpenMP) {
#pragma omp parallel for schedule(dynamic, 4) if (count > 32)
            for (std::ptrdiff_t t = 0; t < count; ++t)
                update(t);
        } else {
            for (std::ptrdiff_t t = 0; t < count; ++t)
                update(t);
        }
        for (std::size_t t = 0; t < targets.size(); ++t)
            for (auto c : fills[t])
                col_rows[c].push_back(targets[t]);
    }
    return rank;
}

} // namespace halfcube::detail

#endif
