// Cellular chain complexes of the half cube and of its subcomplexes obtained
// by deleting half-cube-shaped cells of dimension >= k_cut.
//
// Orientation convention: a d-cell is oriented by the ordered basis
// (p1 - p0, ..., pd - p0), where (p0, ..., pd) is the lexicographically
// smallest affinely independent subsequence of its sorted vertex list. The
// incidence of a facet is the sign of (outward vector, facet basis) measured
// against the cell basis. Every determinant is evaluated in exact integer
// arithmetic.

#ifndef HALFCUBE_COMPLEX_HPP
#define HALFCUBE_COMPLEX_HPP

#include "halfcube/faces.hpp"

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace halfcube {

/// Orientation data of one cell.
struct OrientedFrame {
    /// Positions into the cell's vertex list.
    std::vector<std::size_t> tuple;
    /// Coordinates on which the basis restricts to a nonsingular square matrix.
    std::vector<int> pivot_rows;
    /// Sign of that restricted determinant.
    int sign = 1;
};

OrientedFrame orient_cell(const FaceDescriptor& cell);

/// Basis vectors of a frame, halved so that entries lie in {-1, 0, 1}.
std::vector<std::vector<long long>> frame_basis(const FaceDescriptor& cell, const OrientedFrame& frame);

/// Sign of the determinant of vectors lying in the frame's span, measured in
/// the frame's basis. Returns 0 if they are dependent.
int relative_sign(const OrientedFrame& frame, std::span<const std::vector<long long>> vectors);

/// Incidence number [cell : facet] in {-1, +1}.
int incidence_sign(const FaceDescriptor& cell, const OrientedFrame& cell_frame, const FaceDescriptor& facet,
                   const OrientedFrame& facet_frame);

/// Exact sign of a determinant of a small integer matrix (row-major, size x size).
int determinant_sign(std::vector<long long> matrix, std::size_t size);

struct CellRef {
    int dim = 0;
    std::size_t index = 0;
    friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

struct SparseEntry {
    std::size_t row;
    int value;
    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Column-sparse integer matrix of a boundary map; rows are (degree-1)-cells.
struct BoundaryMatrix {
    int degree = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<SparseEntry>> columns;

    std::size_t nonzeros() const;
    int at(std::size_t row, std::size_t col) const;
    friend bool operator==(const BoundaryMatrix&, const BoundaryMatrix&) = default;
};

/// Sparse triplet text format: header "degree rows cols nnz", then one
/// "row col value" line per nonzero in column-major order.
void write_triplets(std::ostream& os, const BoundaryMatrix& m);
BoundaryMatrix read_triplets(std::istream& is);

/// True when lower * upper is the zero matrix.
bool composes_to_zero(const BoundaryMatrix& lower, const BoundaryMatrix& upper);

class CellComplex {
public:
    /// 3 <= k_cut <= n + 1; k_cut = n + 1 keeps every face.
    CellComplex(std::shared_ptr<const FaceLattice> lattice, int k_cut);

    int dimension() const { return lattice_->dimension(); }
    int k_cut() const { return k_cut_; }
    bool is_full() const { return k_cut_ == dimension() + 1; }
    /// Largest d with at least one d-cell.
    int top_dimension() const;

    std::size_t count(int dim) const;
    std::size_t total() const;
    const FaceDescriptor& cell(CellRef ref) const;
    std::span<const std::size_t> facets(CellRef ref) const { return facets_.at(ref.dim).at(ref.index); }
    const OrientedFrame& frame(CellRef ref) const { return frames_.at(ref.dim).at(ref.index); }
    /// Extra orientation factor (+1 unless the complex was reoriented).
    int flip(CellRef ref) const { return flips_.at(ref.dim).at(ref.index); }

    std::optional<CellRef> find(const VertexKey& key) const;
    std::size_t lattice_index(CellRef ref) const { return lattice_ids_.at(ref.dim).at(ref.index); }
    const FaceLattice& lattice() const { return *lattice_; }
    std::shared_ptr<const FaceLattice> shared_lattice() const { return lattice_; }

    /// Copy with every cell's orientation reversed independently with probability 1/2.
    CellComplex reoriented(std::uint64_t seed) const;

private:
    std::shared_ptr<const FaceLattice> lattice_;
    int k_cut_;
    std::vector<std::vector<std::size_t>> lattice_ids_;
    std::vector<std::vector<std::ptrdiff_t>> complex_ids_;
    std::vector<std::vector<std::vector<std::size_t>>> facets_;
    std::vector<std::vector<OrientedFrame>> frames_;
    std::vector<std::vector<int>> flips_;
};

/// Whether a face survives in the subcomplex with parameter k_cut.
bool retained_in(const FaceDescriptor& f, int k_cut);

CellComplex build_complex(int n, int k_cut);
CellComplex build_complex(std::shared_ptr<const FaceLattice> lattice, int k_cut);

/// Boundary maps for degrees 1..n (entry d-1 is the degree-d map). Throws
/// std::logic_error if some composite is nonzero.
std::vector<BoundaryMatrix> boundary_matrices(const CellComplex& c);

/// Throws std::logic_error naming the first degree whose composite is nonzero.
void check_boundary_squares_zero(std::span<const BoundaryMatrix> boundaries);

long long euler_characteristic(const CellComplex& c);

namespace serial {
/// Reference assembly of one boundary map.
BoundaryMatrix assemble_boundary(const CellComplex& c, int degree);
} // namespace serial

namespace parallel {
/// OpenMP assembly, column-parallel; identical output to the serial version.
BoundaryMatrix assemble_boundary(const CellComplex& c, int degree);
} // namespace parallel

} // namespace halfcube

#endif
