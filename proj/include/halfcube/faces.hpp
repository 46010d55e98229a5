// Face lattice of the n-dimensional half cube.
//
// Every face is stored with a descriptor (how it arises combinatorially) and
// its sorted vertex list. Two faces are equal iff their vertex lists are
// equal; descriptors of edges are not unique, so the smaller opposite point
// is kept.

#ifndef HALFCUBE_FACES_HPP
#define HALFCUBE_FACES_HPP

#include "halfcube/core.hpp"
#include "halfcube/numeric.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace halfcube {

enum class FaceKind { Vertex, SimplexK, HalfCubeL, TopCell };

std::string to_string(FaceKind kind);

struct FaceDescriptor {
    FaceKind kind = FaceKind::Vertex;
    int dim = 0;
    /// The vertex itself, the opposite point of a simplex, or the smallest
    /// member of a half cube face.
    Vertex point;
    Mask mask;
    std::vector<Vertex> vertices;

    int ambient_dimension() const { return point.dimension(); }
    VertexKey key() const;

    friend bool operator==(const FaceDescriptor& a, const FaceDescriptor& b)
    {
        return a.vertices == b.vertices;
    }
};

std::string to_string(const FaceDescriptor& f);

FaceDescriptor make_vertex_face(const Vertex& v);
/// Simplex on clique_K(opposite, mask); the mask needs at least 2 elements.
FaceDescriptor make_simplex_face(const Vertex& opposite, const Mask& mask);
/// Half cube face on clique_L(base, mask), 3 <= |mask|; the full mask gives the top cell.
FaceDescriptor make_halfcube_face(const Vertex& base, const Mask& mask);
FaceDescriptor make_top_cell(int n);

/// Codimension-1 faces by descriptor arithmetic.
std::vector<FaceDescriptor> facets_of(const FaceDescriptor& f);

/// Closed-form face counts.
std::uint64_t closed_form_simplex_count(int n, int dim);
std::uint64_t closed_form_halfcube_count(int n, int dim);
std::uint64_t closed_form_face_count(int n, int dim);
std::uint64_t closed_form_top_facet_count(int n);

struct FaceRef {
    int dim = 0;
    std::size_t index = 0;
    friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

struct VertexKeyHash {
    std::size_t operator()(const VertexKey& key) const noexcept;
};

struct Intersection {
    std::vector<Vertex> vertices;
    /// Set when the common vertex set is a face of the lattice.
    std::optional<FaceRef> face;

    bool empty() const { return vertices.empty(); }
    bool is_face_or_empty() const { return empty() || face.has_value(); }
};

class FaceLattice {
public:
    /// Builds all faces with facet relations; 4 <= n <= kMaxDimension.
    explicit FaceLattice(int n);

    int dimension() const { return n_; }

    std::span<const FaceDescriptor> faces(int dim) const { return faces_.at(dim); }
    const FaceDescriptor& face(FaceRef ref) const { return faces_.at(ref.dim).at(ref.index); }
    std::size_t count(int dim) const { return faces_.at(dim).size(); }
    std::size_t count(int dim, FaceKind kind) const;
    std::size_t total() const;

    /// Indices (into dimension dim-1) of the facets of a face.
    std::span<const std::size_t> facets(FaceRef ref) const { return facets_.at(ref.dim).at(ref.index); }

    std::optional<FaceRef> find(const VertexKey& key) const;
    std::optional<FaceRef> find(const FaceDescriptor& f) const { return find(f.key()); }

    Intersection intersect(FaceRef a, FaceRef b) const;

private:
    int n_;
    std::vector<std::vector<FaceDescriptor>> faces_;
    std::vector<std::vector<std::vector<std::size_t>>> facets_;
    std::unordered_map<VertexKey, FaceRef, VertexKeyHash> index_;
};

FaceLattice build_face_lattice(int n);

/// Faces per dimension, sorted by key, without the facet relation.
std::vector<std::vector<FaceDescriptor>> enumerate_faces(int n);

/// Intersection of two faces given by descriptor; both must be faces of the lattice.
Intersection face_intersection(const FaceLattice& lattice, const FaceDescriptor& f, const FaceDescriptor& g);

/// Exact membership test for the convex hull of a simplex face.
bool contains_point_simplexK(const FaceDescriptor& f, std::span<const Rational> x);

} // namespace halfcube

#endif
