// Vertices of the n-cube, parity classes, and the clique combinatorics of the
// half cube graph (vertices of even parity joined at Hamming distance 2).
//
// Coordinates are 0-based throughout. A vertex is stored as a bit mask where
// bit i set means coordinate i equals -1.

#ifndef HALFCUBE_CORE_HPP
#define HALFCUBE_CORE_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace halfcube {

inline constexpr int kMaxDimension = 32;

using Bits = std::uint32_t;

/// Sorted list of vertex bit masks; the canonical identity of a vertex set.
using VertexKey = std::vector<Bits>;

void check_dimension(int n);

class Vertex {
public:
    Vertex() = default;
    Vertex(int n, Bits bits);

    /// Builds a vertex from a list of +1/-1 entries.
    static Vertex from_signs(std::span<const int> signs);
    static Vertex from_signs(std::initializer_list<int> signs);

    int dimension() const { return n_; }
    Bits bits() const { return bits_; }

    /// +1 or -1.
    int coordinate(int i) const;
    std::vector<int> signs() const;

    int negatives() const;
    /// Member of the even class (the vertex set of the half cube).
    bool is_even() const { return negatives() % 2 == 0; }

    Vertex flipped(Bits mask) const { return Vertex(n_, bits_ ^ mask); }

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;

private:
    int n_ = 0;
    Bits bits_ = 0;
};

std::string to_string(const Vertex& v);

/// A subset of {0, ..., n-1}.
class Mask {
public:
    Mask() = default;
    Mask(int n, Bits bits);
    static Mask from_indices(int n, std::initializer_list<int> indices);
    static Mask full(int n);

    int dimension() const { return n_; }
    Bits bits() const { return bits_; }
    int size() const;
    bool contains(int i) const { return (bits_ >> i) & 1u; }
    std::vector<int> indices() const;

    Mask without(int i) const { return Mask(n_, bits_ & ~(Bits{1} << i)); }
    Mask with(int i) const { return Mask(n_, bits_ | (Bits{1} << i)); }

    friend bool operator==(const Mask&, const Mask&) = default;
    friend auto operator<=>(const Mask&, const Mask&) = default;

private:
    int n_ = 0;
    Bits bits_ = 0;
};

std::string to_string(const Mask& m);

/// Vertex list in ascending bit order.
struct CliqueSet {
    std::vector<Vertex> vertices;

    std::size_t size() const { return vertices.size(); }
    VertexKey key() const;
    friend bool operator==(const CliqueSet&, const CliqueSet&) = default;
};

CliqueSet make_clique_set(std::vector<Vertex> vertices);

int hamming_distance(const Vertex& x, const Vertex& y);

std::uint64_t binomial(int n, int k);

/// All vertices of the given parity, ascending.
std::vector<Vertex> even_vertices(int n);
std::vector<Vertex> odd_vertices(int n);

/// All masks of the given cardinality, ascending by bits.
std::vector<Mask> masks_of_size(int n, int size);

/// Vertices differing from an odd vertex in exactly one coordinate of the mask.
CliqueSet clique_K(const Vertex& opposite, const Mask& mask);

/// Even vertices agreeing with an even base vertex outside the mask.
CliqueSet clique_L(const Vertex& base, const Mask& mask);

struct KDescriptor {
    Vertex opposite;
    Mask mask;
    friend bool operator==(const KDescriptor&, const KDescriptor&) = default;
};

/// Majority-vote recovery of the opposite point and mask; needs at least 3 vertices.
KDescriptor recover_K_descriptor(const CliqueSet& c);

/// True when every pair of vertices is at Hamming distance 2.
bool is_clique(const CliqueSet& c);

enum class CliqueType { KType, LType, AmbiguousSmall };

struct CliqueClass {
    CliqueType type;
    /// Opposite point for K-type, smallest member for L-type, unused otherwise.
    Vertex point;
    Mask mask;
    VertexKey key;
};

CliqueClass classify_clique(const CliqueSet& c);

/// Distinct cliques of the given size, generated from descriptors, ordered by key.
std::vector<CliqueSet> enumerate_cliques(int n, int size);

} // namespace halfcube

#endif
