// The Coxeter group W(D_n) as signed permutations with an even number of
// sign changes, its action on the face lattice and on H_{k-1}(C_{n,k}).

#ifndef HALFCUBE_SYMMETRY_HPP
#define HALFCUBE_SYMMETRY_HPP

#include "halfcube/complex.hpp"
#include "halfcube/integer_matrix.hpp"
#include "halfcube/numeric.hpp"

#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace halfcube {

/// v -> w with w[i] = sign[i] * v[perm^-1(i)]; perm is 0-based.
class SignedPermutation {
public:
    SignedPermutation() = default;
    SignedPermutation(std::vector<int> perm, std::vector<int> signs);

    static SignedPermutation identity(int n);
    /// Sign changes at coordinates i and j.
    static SignedPermutation double_flip(int n, int i, int j);
    /// Transposition of coordinates i and j.
    static SignedPermutation transposition(int n, int i, int j);

    int dimension() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& signs() const { return signs_; }
    bool in_WDn() const;

    /// (g * h)(v) = g(h(v)).
    SignedPermutation operator*(const SignedPermutation& h) const;
    SignedPermutation inverse() const;

    Vertex apply(const Vertex& v) const;
    Mask apply(const Mask& m) const;
    std::vector<long long> apply(std::span<const long long> x) const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> perm_;
    std::vector<int> signs_;
};

std::string to_string(const SignedPermutation& g);

/// Adjacent transpositions and the sign change at the last two coordinates.
std::vector<SignedPermutation> wdn_generators(int n);
SignedPermutation random_wdn_element(int n, std::mt19937_64& rng);
/// Closure of the generators; intended for n <= 5.
std::vector<SignedPermutation> enumerate_wdn(int n);
/// 2^(n-1) n!
Integer wdn_order(int n);

/// Linear map with a rational matrix (row-major), acting on sign vectors.
class LinearSymmetry {
public:
    LinearSymmetry(int n, std::vector<Rational> matrix);
    static LinearSymmetry from(const SignedPermutation& g);
    /// Reflection in the hyperplane orthogonal to (1, 1, 1, 1).
    static LinearSymmetry special_reflection_n4();

    int dimension() const { return n_; }
    const std::vector<Rational>& matrix() const { return matrix_; }
    std::vector<Rational> apply(std::span<const Rational> x) const;
    /// Throws std::domain_error if the image is not a sign vector.
    Vertex apply(const Vertex& v) const;

private:
    int n_;
    std::vector<Rational> matrix_;
};

Vertex act_on_vertex(const SignedPermutation& g, const Vertex& v);

/// Image face by descriptor arithmetic. Throws std::invalid_argument unless g
/// lies in W(D_n) and f is a face of the lattice.
FaceDescriptor act_on_face(const SignedPermutation& g, const FaceDescriptor& f, const FaceLattice& lattice);

/// Image of a lattice face under any linear symmetry, by its vertex set.
/// Throws std::domain_error if the image vertex set is not a face.
FaceRef act_on_face(const LinearSymmetry& g, FaceRef f, const FaceLattice& lattice);

enum class OrbitGroup { WDn, WDnPlusSpecialReflection };

struct Orbit {
    FaceDescriptor representative;
    std::size_t size = 0;
    std::size_t k_type = 0;
    std::size_t l_type = 0;

    /// "vertex", "top", "K", "L" or "K+L".
    std::string type() const;
};

struct OrbitReport {
    int n = 0;
    OrbitGroup group = OrbitGroup::WDn;
    /// Orbits per dimension, ordered by representative key.
    std::vector<std::vector<Orbit>> per_dimension;
};

/// The special reflection is only defined for n = 4 (std::invalid_argument otherwise).
OrbitReport orbits(const FaceLattice& lattice, OrbitGroup group);
OrbitReport orbits(int n, OrbitGroup group);

/// The action of W(D_n) on H_{k-1}(C_{n,k}) in a fixed integral basis.
class HomologyRepresentation {
public:
    HomologyRepresentation(int n, int k);

    int dimension() const { return n_; }
    int k_cut() const { return k_; }
    std::size_t rank() const { return basis_.cols(); }
    const CellComplex& complex() const { return *complex_; }
    /// Basis cycles, one column each, in the (k-1)-cells of the complex.
    const DenseIntegerMatrix& basis() const { return basis_; }

    /// Signed permutation matrix of g on the (k-1)-chains.
    DenseIntegerMatrix chain_action(const SignedPermutation& g) const;
    /// Matrix of g_* in the basis.
    DenseIntegerMatrix action(const SignedPermutation& g) const;
    /// Coordinates of a (k-1)-cycle in the basis; throws if it is not a cycle.
    std::vector<Integer> coordinates(const std::vector<Integer>& cycle) const;

private:
    int n_, k_;
    std::unique_ptr<CellComplex> complex_;
    std::size_t kernel_offset_ = 0;
    std::size_t boundary_rank_ = 0;
    DenseIntegerMatrix right_inverse_;
    DenseIntegerMatrix quotient_left_;
    DenseIntegerMatrix basis_;
};

DenseIntegerMatrix homology_action(int n, int k, const SignedPermutation& g);

Integer trace(const DenseIntegerMatrix& m);

} // namespace halfcube

#endif
