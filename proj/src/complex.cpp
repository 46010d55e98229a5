#include "halfcube/complex.hpp"
#include "detail.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

namespace halfcube {

namespace {

// Fraction-free row echelon form that grows one vector at a time.
class IncrementalRank {
public:
    explicit IncrementalRank(std::size_t width) : width_(width) {}

    bool try_add(std::vector<long long> v)
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t p = pivots_[r];
            if (v[p] == 0)
                continue;
            const long long a = rows_[r][p];
            const long long b = v[p];
            for (std::size_t j = 0; j < width_; ++j)
                v[j] = a * v[j] - b * rows_[r][j];
            normalize(v);
        }
        const auto it = std::find_if(v.begin(), v.end(), [](long long x) { return x != 0; });
        if (it == v.end())
            return false;
        pivots_.push_back(static_cast<std::size_t>(it - v.begin()));
        rows_.push_back(std::move(v));
        return true;
    }

private:
    static void normalize(std::vector<long long>& v)
    {
        long long g = 0;
        for (long long x : v)
            g = std::gcd(g, x);
        if (g > 1)
            for (auto& x : v)
                x /= g;
    }

    std::size_t width_;
    std::vector<std::vector<long long>> rows_;
    std::vector<std::size_t> pivots_;
};

std::vector<long long> halved_difference(const Vertex& a, const Vertex& b)
{
    std::vector<long long> out(a.dimension());
    for (int i = 0; i < a.dimension(); ++i)
        out[i] = (a.coordinate(i) - b.coordinate(i)) / 2;
    return out;
}

template <class T>
int bareiss_sign(std::vector<T> m, std::size_t size)
{
    int sign = 1;
    T prev = 1;
    for (std::size_t k = 0; k < size; ++k) {
        if (m[k * size + k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < size && m[swap_row * size + k] == 0)
                ++swap_row;
            if (swap_row == size)
                return 0;
            for (std::size_t j = 0; j < size; ++j)
                std::swap(m[k * size + j], m[swap_row * size + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j)
                m[i * size + j] = (m[i * size + j] * m[k * size + k] - m[i * size + k] * m[k * size + j]) / prev;
            m[i * size + k] = 0;
        }
        prev = m[k * size + k];
    }
    if (size == 0)
        return 1;
    const T& det = m[size * size - 1];
    return det == 0 ? 0 : (det > 0 ? sign : -sign);
}

void check_degree(const CellComplex& c, int degree)
{
    if (degree < 1 || degree > c.dimension())
        throw std::invalid_argument("boundary degree out of range");
}

} // namespace

int determinant_sign(std::vector<long long> matrix, std::size_t size)
{
    // Entries here are in {-1, 0, 1}; minors stay below 14^7, so products fit.
    if (size <= 14)
        return bareiss_sign(std::move(matrix), size);
    std::vector<Integer> big(matrix.begin(), matrix.end());
    return bareiss_sign(std::move(big), size);
}

OrientedFrame orient_cell(const FaceDescriptor& cell)
{
    OrientedFrame frame;
    frame.tuple.push_back(0);
    if (cell.dim == 0)
        return frame;

    const auto& verts = cell.vertices;
    const std::size_t n = static_cast<std::size_t>(cell.ambient_dimension());
    IncrementalRank span(n);
    std::vector<std::vector<long long>> basis;
    for (std::size_t j = 1; j < verts.size() && basis.size() < static_cast<std::size_t>(cell.dim); ++j) {
        auto v = halved_difference(verts[j], verts[0]);
        if (span.try_add(v)) {
            frame.tuple.push_back(j);
            basis.push_back(std::move(v));
        }
    }
    if (basis.size() != static_cast<std::size_t>(cell.dim))
        throw std::logic_error("orient_cell: vertices do not span a " + std::to_string(cell.dim) + "-cell");

    const std::size_t d = basis.size();
    IncrementalRank rows(d);
    for (std::size_t i = 0; i < n && frame.pivot_rows.size() < d; ++i) {
        std::vector<long long> row(d);
        for (std::size_t b = 0; b < d; ++b)
            row[b] = basis[b][i];
        if (rows.try_add(std::move(row)))
            frame.pivot_rows.push_back(static_cast<int>(i));
    }
    std::vector<long long> restricted(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            restricted[a * d + b] = basis[b][frame.pivot_rows[a]];
    frame.sign = determinant_sign(std::move(restricted), d);
    return frame;
}

std::vector<std::vector<long long>> frame_basis(const FaceDescriptor& cell, const OrientedFrame& frame)
{
    std::vector<std::vector<long long>> basis;
    const Vertex& origin = cell.vertices[frame.tuple.front()];
    for (std::size_t j = 1; j < frame.tuple.size(); ++j)
        basis.push_back(halved_difference(cell.vertices[frame.tuple[j]], origin));
    return basis;
}

int relative_sign(const OrientedFrame& frame, std::span<const std::vector<long long>> vectors)
{
    const std::size_t d = frame.pivot_rows.size();
    if (vectors.size() != d)
        throw std::invalid_argument("relative_sign: expected one vector per frame dimension");
    std::vector<long long> restricted(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            restricted[a * d + b] = vectors[b][frame.pivot_rows[a]];
    return determinant_sign(std::move(restricted), d) * frame.sign;
}

int incidence_sign(const FaceDescriptor& cell, const OrientedFrame& cell_frame, const FaceDescriptor& facet,
                   const OrientedFrame& facet_frame)
{
    const auto outside = std::find_if(cell.vertices.begin(), cell.vertices.end(), [&](const Vertex& v) {
        return !std::binary_search(facet.vertices.begin(), facet.vertices.end(), v);
    });
    if (outside == cell.vertices.end())
        throw std::logic_error("incidence_sign: facet contains every vertex of the cell");

    const Vertex& origin = facet.vertices[facet_frame.tuple.front()];
    std::vector<std::vector<long long>> vectors;
    vectors.push_back(halved_difference(origin, *outside));
    for (std::size_t j = 1; j < facet_frame.tuple.size(); ++j)
        vectors.push_back(halved_difference(facet.vertices[facet_frame.tuple[j]], origin));
    const int s = relative_sign(cell_frame, vectors);
    if (s == 0)
        throw std::logic_error("incidence_sign: degenerate facet frame");
    return s;
}

std::size_t BoundaryMatrix::nonzeros() const
{
    std::size_t total = 0;
    for (const auto& col : columns)
        total += col.size();
    return total;
}

int BoundaryMatrix::at(std::size_t row, std::size_t col) const
{
    const auto& c = columns.at(col);
    const auto it = std::lower_bound(c.begin(), c.end(), row,
                                     [](const SparseEntry& e, std::size_t r) { return e.row < r; });
    return (it != c.end() && it->row == row) ? it->value : 0;
}

void write_triplets(std::ostream& os, const BoundaryMatrix& m)
{
    os << m.degree << ' ' << m.rows << ' ' << m.cols << ' ' << m.nonzeros() << '\n';
    for (std::size_t c = 0; c < m.cols; ++c)
        for (const auto& e : m.columns[c])
            os << e.row << ' ' << c << ' ' << e.value << '\n';
}

BoundaryMatrix read_triplets(std::istream& is)
{
    BoundaryMatrix m;
    std::size_t nnz = 0;
    if (!(is >> m.degree >> m.rows >> m.cols >> nnz))
        throw std::runtime_error("read_triplets: malformed header");
    m.columns.resize(m.cols);
    for (std::size_t k = 0; k < nnz; ++k) {
        std::size_t r = 0, c = 0;
        int v = 0;
        if (!(is >> r >> c >> v))
            throw std::runtime_error("read_triplets: truncated entry list");
        if (r >= m.rows || c >= m.cols)
            throw std::runtime_error("read_triplets: entry outside matrix bounds");
        m.columns[c].push_back({r, v});
    }
    for (auto& col : m.columns)
        std::sort(col.begin(), col.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.row < b.row; });
    return m;
}

bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper)
{
    if (lower.cols != upper.rows)
        throw std::invalid_argument("composes_to_zero: shape mismatch");
    std::vector<long long> acc(lower.rows, 0);
    std::vector<std::size_t> touched;
    for (const auto& col : upper.columns) {
        touched.clear();
        for (const auto& mid : col)
            for (const auto& e : lower.columns[mid.row]) {
                if (acc[e.row] == 0)
                    touched.push_back(e.row);
                acc[e.row] += static_cast<long long>(mid.value) * e.value;
            }
        bool zero = true;
        for (std::size_t r : touched) {
            zero = zero && acc[r] == 0;
            acc[r] = 0;
        }
        if (!zero)
            return false;
    }
    return true;
}

bool retained_in(const FaceDescriptor& f, int k_cut)
{
    const bool halfcube = f.kind == FaceKind::HalfCubeL || f.kind == FaceKind::TopCell;
    return !(halfcube && f.dim >= k_cut);
}

CellComplex::CellComplex(std::shared_ptr<const FaceLattice> lattice, int k_cut)
    : lattice_(std::move(lattice)), k_cut_(k_cut)
{
    if (!lattice_)
        throw std::invalid_argument("CellComplex: null lattice");
    const int n = lattice_->dimension();
    if (k_cut < 3 || k_cut > n + 1)
        throw std::invalid_argument("CellComplex: k_cut must lie in [3, n+1], got " + std::to_string(k_cut));

    lattice_ids_.resize(n + 1);
    complex_ids_.resize(n + 1);
    facets_.resize(n + 1);
    frames_.resize(n + 1);
    flips_.resize(n + 1);
    for (int dim = 0; dim <= n; ++dim) {
        const auto faces = lattice_->faces(dim);
        complex_ids_[dim].assign(faces.size(), -1);
        for (std::size_t i = 0; i < faces.size(); ++i)
            if (retained_in(faces[i], k_cut)) {
                complex_ids_[dim][i] = static_cast<std::ptrdiff_t>(lattice_ids_[dim].size());
                lattice_ids_[dim].push_back(i);
            }
    }

    for (int dim = 0; dim <= n; ++dim) {
        const std::size_t count = lattice_ids_[dim].size();
        facets_[dim].resize(count);
        frames_[dim].resize(count);
        flips_[dim].assign(count, 1);
        for (std::size_t j = 0; j < count; ++j) {
            if (dim == 0)
                continue;
            for (std::size_t lf : lattice_->facets(FaceRef{dim, lattice_ids_[dim][j]})) {
                const std::ptrdiff_t id = complex_ids_[dim - 1][lf];
                if (id < 0)
                    throw std::logic_error("CellComplex: facet of a retained cell was deleted");
                facets_[dim][j].push_back(static_cast<std::size_t>(id));
            }
        }
        const std::ptrdiff_t signed_count = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 32)
        for (std::ptrdiff_t j = 0; j < signed_count; ++j)
            frames_[dim][j] = orient_cell(lattice_->face(FaceRef{dim, lattice_ids_[dim][j]}));
    }
}

int CellComplex::top_dimension() const
{
    int top = 0;
    for (int d = 0; d <= dimension(); ++d)
        if (!lattice_ids_[d].empty())
            top = d;
    return top;
}

std::size_t CellComplex::count(int dim) const
{
    if (dim < 0 || dim > dimension())
        return 0;
    return lattice_ids_[dim].size();
}

std::size_t CellComplex::total() const
{
    std::size_t t = 0;
    for (const auto& ids : lattice_ids_)
        t += ids.size();
    return t;
}

const FaceDescriptor& CellComplex::cell(CellRef ref) const
{
    return lattice_->face(FaceRef{ref.dim, lattice_ids_.at(ref.dim).at(ref.index)});
}

std::optional<CellRef> CellComplex::find(const VertexKey& key) const
{
    const auto ref = lattice_->find(key);
    if (!ref)
        return std::nullopt;
    const std::ptrdiff_t id = complex_ids_[ref->dim][ref->index];
    if (id < 0)
        return std::nullopt;
    return CellRef{ref->dim, static_cast<std::size_t>(id)};
}

CellComplex CellComplex::reoriented(std::uint64_t seed) const
{
    CellComplex copy = *this;
    std::mt19937_64 rng(seed);
    for (auto& dim_flips : copy.flips_)
        for (auto& f : dim_flips)
            f = (rng() & 1u) ? -1 : 1;
    return copy;
}

CellComplex build_complex(std::shared_ptr<const FaceLattice> lattice, int k_cut)
{
    return CellComplex(std::move(lattice), k_cut);
}

CellComplex build_complex(int n, int k_cut)
{
    return CellComplex(std::make_shared<const FaceLattice>(n), k_cut);
}

void check_boundary_squares_zero(std::span<const BoundaryMatrix> boundaries)
{
    for (std::size_t i = 1; i < boundaries.size(); ++i)
        if (!composes_to_zero(boundaries[i - 1], boundaries[i]))
            throw std::logic_error("boundary composite nonzero in degree " +
                                   std::to_string(boundaries[i].degree) + " (orientation bug)");
}

std::vector<BoundaryMatrix> boundary_matrices(const CellComplex& c)
{
    std::vector<BoundaryMatrix> out;
    for (int d = 1; d <= c.dimension(); ++d)
        out.push_back(parallel::assemble_boundary(c, d));
    check_boundary_squares_zero(out);
    return out;
}

long long euler_characteristic(const CellComplex& c)
{
    long long chi = 0;
    for (int d = 0; d <= c.dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(c.count(d));
    return chi;
}

namespace detail {

std::vector<SparseEntry> assemble_column(const CellComplex& c, int degree, std::size_t col)
{
    const CellRef ref{degree, col};
    const auto& cell = c.cell(ref);
    const auto& frame = c.frame(ref);
    std::vector<SparseEntry> out;
    for (std::size_t f : c.facets(ref)) {
        const CellRef fref{degree - 1, f};
        const int s = incidence_sign(cell, frame, c.cell(fref), c.frame(fref));
        out.push_back({f, s * c.flip(ref) * c.flip(fref)});
    }
    return out;
}

BoundaryMatrix empty_boundary(const CellComplex& c, int degree)
{
    check_degree(c, degree);
    BoundaryMatrix m;
    m.degree = degree;
    m.rows = c.count(degree - 1);
    m.cols = c.count(degree);
    m.columns.resize(m.cols);
    return m;
}

} // namespace detail

} // namespace halfcube
