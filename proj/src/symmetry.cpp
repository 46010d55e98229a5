#include "halfcube/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace halfcube {

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs))
{
    const int n = static_cast<int>(perm_.size());
    check_dimension(n);
    if (static_cast<int>(signs_.size()) != n)
        throw std::invalid_argument("SignedPermutation: perm and signs differ in length");
    std::vector<char> seen(n, 0);
    for (int p : perm_) {
        if (p < 0 || p >= n || seen[p])
            throw std::invalid_argument("SignedPermutation: not a permutation of 0..n-1");
        seen[p] = 1;
    }
    for (int s : signs_)
        if (s != 1 && s != -1)
            throw std::invalid_argument("SignedPermutation: signs must be +1 or -1");
}

SignedPermutation SignedPermutation::identity(int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return SignedPermutation(std::move(p), std::vector<int>(n, 1));
}

SignedPermutation SignedPermutation::double_flip(int n, int i, int j)
{
    if (i == j)
        throw std::invalid_argument("double_flip: coordinates must differ");
    auto g = identity(n);
    g.signs_.at(i) = -1;
    g.signs_.at(j) = -1;
    return g;
}

SignedPermutation SignedPermutation::transposition(int n, int i, int j)
{
    auto g = identity(n);
    std::swap(g.perm_.at(i), g.perm_.at(j));
    return g;
}

bool SignedPermutation::in_WDn() const
{
    return std::count(signs_.begin(), signs_.end(), -1) % 2 == 0;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& h) const
{
    const int n = dimension();
    if (h.dimension() != n)
        throw std::invalid_argument("SignedPermutation: dimension mismatch in product");
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i)
        inv[perm_[i]] = i;
    std::vector<int> p(n), s(n);
    for (int i = 0; i < n; ++i) {
        p[i] = perm_[h.perm_[i]];
        s[i] = signs_[i] * h.signs_[inv[i]];
    }
    return SignedPermutation(std::move(p), std::move(s));
}

SignedPermutation SignedPermutation::inverse() const
{
    const int n = dimension();
    std::vector<int> p(n), s(n);
    for (int i = 0; i < n; ++i) {
        p[perm_[i]] = i;
        s[i] = signs_[perm_[i]];
    }
    return SignedPermutation(std::move(p), std::move(s));
}

Vertex SignedPermutation::apply(const Vertex& v) const
{
    if (v.dimension() != dimension())
        throw std::invalid_argument("SignedPermutation::apply: dimension mismatch");
    Bits out = 0;
    for (int j = 0; j < dimension(); ++j) {
        const int i = perm_[j];
        const Bits bit = ((v.bits() >> j) & 1u) ^ (signs_[i] < 0 ? 1u : 0u);
        out |= bit << i;
    }
    return Vertex(dimension(), out);
}

Mask SignedPermutation::apply(const Mask& m) const
{
    if (m.dimension() != dimension())
        throw std::invalid_argument("SignedPermutation::apply: dimension mismatch");
    Bits out = 0;
    for (int j : m.indices())
        out |= Bits{1} << perm_[j];
    return Mask(dimension(), out);
}

std::vector<long long> SignedPermutation::apply(std::span<const long long> x) const
{
    if (static_cast<int>(x.size()) != dimension())
        throw std::invalid_argument("SignedPermutation::apply: dimension mismatch");
    std::vector<long long> out(x.size());
    for (int j = 0; j < dimension(); ++j)
        out[perm_[j]] = signs_[perm_[j]] * x[j];
    return out;
}

std::string to_string(const SignedPermutation& g)
{
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < g.dimension(); ++i)
        os << (i ? " " : "") << (g.signs()[g.perm()[i]] < 0 ? "-" : "") << g.perm()[i];
    os << "]";
    return os.str();
}

std::vector<SignedPermutation> wdn_generators(int n)
{
    if (n < 2)
        throw std::invalid_argument("wdn_generators: need n >= 2");
    std::vector<SignedPermutation> gens;
    for (int i = 0; i + 1 < n; ++i)
        gens.push_back(SignedPermutation::transposition(n, i, i + 1));
    gens.push_back(SignedPermutation::double_flip(n, n - 2, n - 1));
    return gens;
}

SignedPermutation random_wdn_element(int n, std::mt19937_64& rng)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<int> s(n, 1);
    std::bernoulli_distribution coin(0.5);
    int negatives = 0;
    for (int i = 0; i + 1 < n; ++i)
        if (coin(rng)) {
            s[i] = -1;
            ++negatives;
        }
    if (negatives % 2 == 1)
        s[n - 1] = -1;
    return SignedPermutation(std::move(p), std::move(s));
}

std::vector<SignedPermutation> enumerate_wdn(int n)
{
    const auto gens = wdn_generators(n);
    std::set<SignedPermutation> seen{SignedPermutation::identity(n)};
    std::vector<SignedPermutation> frontier{SignedPermutation::identity(n)};
    while (!frontier.empty()) {
        std::vector<SignedPermutation> next;
        for (const auto& g : frontier)
            for (const auto& s : gens) {
                auto h = s * g;
                if (seen.insert(h).second)
                    next.push_back(std::move(h));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

Integer wdn_order(int n)
{
    Integer f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return (Integer(1) << (n - 1)) * f;
}

LinearSymmetry::LinearSymmetry(int n, std::vector<Rational> matrix) : n_(n), matrix_(std::move(matrix))
{
    check_dimension(n);
    if (matrix_.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("LinearSymmetry: matrix must be n x n");
}

LinearSymmetry LinearSymmetry::from(const SignedPermutation& g)
{
    const int n = g.dimension();
    std::vector<Rational> m(static_cast<std::size_t>(n) * n, 0);
    for (int j = 0; j < n; ++j)
        m[static_cast<std::size_t>(g.perm()[j]) * n + j] = g.signs()[g.perm()[j]];
    return LinearSymmetry(n, std::move(m));
}

LinearSymmetry LinearSymmetry::special_reflection_n4()
{
    // x - (x.u) u / 2 with u = (1, 1, 1, 1)
    std::vector<Rational> m(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m[i * 4 + j] = Rational(i == j ? 1 : -1, 2);
    return LinearSymmetry(4, std::move(m));
}

std::vector<Rational> LinearSymmetry::apply(std::span<const Rational> x) const
{
    if (static_cast<int>(x.size()) != n_)
        throw std::invalid_argument("LinearSymmetry::apply: dimension mismatch");
    std::vector<Rational> out(n_, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out[i] += matrix_[static_cast<std::size_t>(i) * n_ + j] * x[j];
    return out;
}

Vertex LinearSymmetry::apply(const Vertex& v) const
{
    std::vector<Rational> x;
    for (int s : v.signs())
        x.emplace_back(s);
    const auto y = apply(x);
    std::vector<int> signs;
    for (const auto& c : y) {
        if (c != 1 && c != -1)
            throw std::domain_error("LinearSymmetry: image of " + to_string(v) + " is not a sign vector");
        signs.push_back(c == 1 ? 1 : -1);
    }
    return Vertex::from_signs(signs);
}

Vertex act_on_vertex(const SignedPermutation& g, const Vertex& v) { return g.apply(v); }

FaceDescriptor act_on_face(const SignedPermutation& g, const FaceDescriptor& f, const FaceLattice& lattice)
{
    if (!g.in_WDn())
        throw std::invalid_argument("act_on_face: " + to_string(g) + " is not in W(D_n)");
    if (g.dimension() != lattice.dimension() || f.ambient_dimension() != lattice.dimension())
        throw std::invalid_argument("act_on_face: dimension mismatch");
    if (!lattice.find(f))
        throw std::invalid_argument("act_on_face: face is not in the lattice");

    FaceDescriptor image;
    switch (f.kind) {
    case FaceKind::Vertex: image = make_vertex_face(g.apply(f.point)); break;
    case FaceKind::SimplexK: image = make_simplex_face(g.apply(f.point), g.apply(f.mask)); break;
    case FaceKind::HalfCubeL: image = make_halfcube_face(g.apply(f.point), g.apply(f.mask)); break;
    case FaceKind::TopCell: image = make_top_cell(f.ambient_dimension()); break;
    }
    const auto ref = lattice.find(image);
    if (!ref)
        throw std::logic_error("act_on_face: image " + to_string(image) + " is not a face");
    return lattice.face(*ref);
}

namespace {

VertexKey image_key(const std::vector<Bits>& table, const FaceDescriptor& f)
{
    VertexKey key;
    key.reserve(f.vertices.size());
    for (const auto& v : f.vertices)
        key.push_back(table[v.bits()]);
    std::sort(key.begin(), key.end());
    return key;
}

/// Images of every even vertex; odd slots are left as zero.
std::vector<Bits> vertex_table(const LinearSymmetry& g)
{
    const int n = g.dimension();
    std::vector<Bits> table(std::size_t{1} << n, 0);
    for (const auto& v : even_vertices(n))
        table[v.bits()] = g.apply(v).bits();
    return table;
}

std::vector<Bits> vertex_table(const SignedPermutation& g)
{
    const int n = g.dimension();
    std::vector<Bits> table(std::size_t{1} << n, 0);
    for (const auto& v : even_vertices(n))
        table[v.bits()] = g.apply(v).bits();
    return table;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

FaceRef act_on_face(const LinearSymmetry& g, FaceRef f, const FaceLattice& lattice)
{
    if (g.dimension() != lattice.dimension())
        throw std::invalid_argument("act_on_face: dimension mismatch");
    VertexKey key;
    for (const auto& v : lattice.face(f).vertices)
        key.push_back(g.apply(v).bits());
    std::sort(key.begin(), key.end());
    const auto ref = lattice.find(key);
    if (!ref)
        throw std::domain_error("act_on_face: image of " + to_string(lattice.face(f)) + " is not a face");
    return *ref;
}

std::string Orbit::type() const
{
    if (representative.kind == FaceKind::Vertex)
        return "vertex";
    if (representative.kind == FaceKind::TopCell)
        return "top";
    if (k_type && l_type)
        return "K+L";
    return k_type ? "K" : "L";
}

OrbitReport orbits(const FaceLattice& lattice, OrbitGroup group)
{
    const int n = lattice.dimension();
    if (group == OrbitGroup::WDnPlusSpecialReflection && n != 4)
        throw std::invalid_argument("orbits: the special reflection exists only for n = 4");

    std::vector<std::vector<Bits>> tables;
    for (const auto& g : wdn_generators(n))
        tables.push_back(vertex_table(g));
    if (group == OrbitGroup::WDnPlusSpecialReflection)
        tables.push_back(vertex_table(LinearSymmetry::special_reflection_n4()));

    OrbitReport report{n, group, {}};
    for (int d = 0; d <= n; ++d) {
        const auto faces = lattice.faces(d);
        UnionFind uf(faces.size());
        for (const auto& table : tables)
            for (std::size_t i = 0; i < faces.size(); ++i) {
                const auto ref = lattice.find(image_key(table, faces[i]));
                if (!ref || ref->dim != d)
                    throw std::logic_error("orbits: generator maps " + to_string(faces[i]) + " outside the lattice");
                uf.unite(i, ref->index);
            }
        std::map<std::size_t, Orbit> by_root;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            auto [it, fresh] = by_root.try_emplace(uf.find(i));
            if (fresh)
                it->second.representative = faces[i];
            ++it->second.size;
            if (faces[i].kind == FaceKind::SimplexK)
                ++it->second.k_type;
            if (faces[i].kind == FaceKind::HalfCubeL)
                ++it->second.l_type;
        }
        std::vector<Orbit> list;
        for (auto& [root, orbit] : by_root)
            list.push_back(std::move(orbit));
        report.per_dimension.push_back(std::move(list));
    }
    return report;
}

OrbitReport orbits(int n, OrbitGroup group)
{
    if (group == OrbitGroup::WDnPlusSpecialReflection && n != 4)
        throw std::invalid_argument("orbits: the special reflection exists only for n = 4");
    return orbits(FaceLattice(n), group);
}

namespace {

DenseIntegerMatrix columns_from(const DenseIntegerMatrix& m, std::size_t first)
{
    DenseIntegerMatrix out(m.rows(), m.cols() - first);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = first; c < m.cols(); ++c)
            out(r, c - first) = m(r, c);
    return out;
}

DenseIntegerMatrix rows_from(const DenseIntegerMatrix& m, std::size_t first)
{
    DenseIntegerMatrix out(m.rows() - first, m.cols());
    for (std::size_t r = first; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r - first, c) = m(r, c);
    return out;
}

std::vector<Integer> multiply(const DenseIntegerMatrix& m, const std::vector<Integer>& x)
{
    std::vector<Integer> y(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0 && x[c] != 0)
                y[r] += m(r, c) * x[c];
    return y;
}

} // namespace

HomologyRepresentation::HomologyRepresentation(int n, int k) : n_(n), k_(k)
{
    if (k < 3 || k > n)
        throw std::invalid_argument("HomologyRepresentation: need 3 <= k <= n");
    complex_ = std::make_unique<CellComplex>(build_complex(n, k));
    const auto boundaries = boundary_matrices(*complex_);
    const int q = k - 1;

    const auto cycles = diagonalize(to_dense(boundaries[q - 1]));
    kernel_offset_ = cycles.rank;
    right_inverse_ = cycles.right_inverse;

    const auto image = right_inverse_ * to_dense(boundaries[q]);
    for (std::size_t r = 0; r < kernel_offset_; ++r)
        for (std::size_t c = 0; c < image.cols(); ++c)
            if (image(r, c) != 0)
                throw std::logic_error("HomologyRepresentation: boundary is not a cycle");
    const auto quotient = diagonalize(rows_from(image, kernel_offset_));
    for (std::size_t i = 0; i < quotient.rank; ++i)
        if (abs(quotient.diagonal(i, i)) != 1)
            throw std::logic_error("HomologyRepresentation: homology has torsion");
    boundary_rank_ = quotient.rank;
    quotient_left_ = quotient.left;

    basis_ = columns_from(cycles.right, kernel_offset_) * columns_from(quotient.left_inverse, boundary_rank_);
}

DenseIntegerMatrix HomologyRepresentation::chain_action(const SignedPermutation& g) const
{
    const int q = k_ - 1;
    const auto& c = *complex_;
    const std::size_t N = c.count(q);
    DenseIntegerMatrix out(N, N);
    for (std::size_t i = 0; i < N; ++i) {
        const CellRef from{q, i};
        const auto& cell = c.cell(from);
        const auto image = act_on_face(g, cell, c.lattice());
        const auto to = c.find(image.key());
        if (!to)
            throw std::logic_error("chain_action: image of " + to_string(cell) + " left the complex");
        std::vector<std::vector<long long>> vectors;
        for (const auto& b : frame_basis(cell, c.frame(from)))
            vectors.push_back(g.apply(b));
        const int s = relative_sign(c.frame(*to), vectors);
        if (s == 0)
            throw std::logic_error("chain_action: degenerate image frame");
        out(to->index, i) = s * c.flip(from) * c.flip(*to);
    }
    return out;
}

std::vector<Integer> HomologyRepresentation::coordinates(const std::vector<Integer>& cycle) const
{
    const auto z = multiply(right_inverse_, cycle);
    for (std::size_t r = 0; r < kernel_offset_; ++r)
        if (z[r] != 0)
            throw std::invalid_argument("coordinates: chain is not a cycle");
    const std::vector<Integer> x(z.begin() + static_cast<std::ptrdiff_t>(kernel_offset_), z.end());
    const auto y = multiply(quotient_left_, x);
    return {y.begin() + static_cast<std::ptrdiff_t>(boundary_rank_), y.end()};
}

DenseIntegerMatrix HomologyRepresentation::action(const SignedPermutation& g) const
{
    const auto G = chain_action(g);
    const std::size_t m = rank();
    DenseIntegerMatrix out(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Integer> column(basis_.rows());
        for (std::size_t r = 0; r < basis_.rows(); ++r)
            column[r] = basis_(r, j);
        const auto coords = coordinates(multiply(G, column));
        for (std::size_t i = 0; i < m; ++i)
            out(i, j) = coords[i];
    }
    return out;
}

DenseIntegerMatrix homology_action(int n, int k, const SignedPermutation& g)
{
    return HomologyRepresentation(n, k).action(g);
}

Integer trace(const DenseIntegerMatrix& m)
{
    Integer t = 0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
        t += m(i, i);
    return t;
}

} // namespace halfcube
