#include "halfcube/faces.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace halfcube {

std::string to_string(FaceKind kind)
{
    switch (kind) {
    case FaceKind::Vertex: return "vertex";
    case FaceKind::SimplexK: return "K";
    case FaceKind::HalfCubeL: return "L";
    case FaceKind::TopCell: return "top";
    }
    return "?";
}

VertexKey FaceDescriptor::key() const
{
    VertexKey k;
    k.reserve(vertices.size());
    for (const auto& v : vertices)
        k.push_back(v.bits());
    return k;
}

std::string to_string(const FaceDescriptor& f)
{
    std::ostringstream os;
    switch (f.kind) {
    case FaceKind::Vertex: os << "V" << to_string(f.point); break;
    case FaceKind::SimplexK: os << "K" << to_string(f.point) << to_string(f.mask); break;
    case FaceKind::HalfCubeL: os << "L" << to_string(f.point) << to_string(f.mask); break;
    case FaceKind::TopCell: os << "TOP" << f.ambient_dimension(); break;
    }
    return os.str();
}

FaceDescriptor make_vertex_face(const Vertex& v)
{
    if (!v.is_even())
        throw std::invalid_argument("vertex face must have even parity");
    return FaceDescriptor{FaceKind::Vertex, 0, v, Mask(v.dimension(), 0), {v}};
}

FaceDescriptor make_simplex_face(const Vertex& opposite, const Mask& mask)
{
    if (mask.size() < 2)
        throw std::invalid_argument("simplex face needs a mask of size at least 2");
    Vertex point = opposite;
    if (mask.size() == 2) {
        // Both endpoints' common neighbours in the odd class are opposite points.
        const Vertex other = opposite.flipped(mask.bits());
        point = std::min(opposite, other);
    }
    auto clique = clique_K(point, mask);
    return FaceDescriptor{FaceKind::SimplexK, mask.size() - 1, point, mask, std::move(clique.vertices)};
}

FaceDescriptor make_top_cell(int n)
{
    check_dimension(n);
    auto clique = clique_L(Vertex(n, 0), Mask::full(n));
    return FaceDescriptor{FaceKind::TopCell, n, Vertex(n, 0), Mask::full(n), std::move(clique.vertices)};
}

FaceDescriptor make_halfcube_face(const Vertex& base, const Mask& mask)
{
    if (mask.size() < 3)
        throw std::invalid_argument("half cube face needs a mask of size at least 3");
    if (mask.size() == base.dimension())
        return make_top_cell(base.dimension());
    auto clique = clique_L(base, mask);
    const Vertex point = clique.vertices.front();
    return FaceDescriptor{FaceKind::HalfCubeL, mask.size(), point, mask, std::move(clique.vertices)};
}

namespace {

// Facets of a half cube face with mask size at least 4.
std::vector<FaceDescriptor> halfcube_facets(const Vertex& base, const Mask& mask)
{
    std::vector<FaceDescriptor> out;
    const Bits s = mask.bits();
    Bits sub = s;
    while (true) {
        if (std::popcount(sub) % 2 == 1)
            out.push_back(make_simplex_face(base.flipped(sub), mask));
        if (sub == 0)
            break;
        sub = (sub - 1) & s;
    }
    const auto idx = mask.indices();
    for (int i : idx) {
        const int partner = (i == idx.front()) ? idx[1] : idx.front();
        const Mask rest = mask.without(i);
        out.push_back(make_halfcube_face(base, rest));
        out.push_back(make_halfcube_face(base.flipped((Bits{1} << i) | (Bits{1} << partner)), rest));
    }
    return out;
}

} // namespace

std::vector<FaceDescriptor> facets_of(const FaceDescriptor& f)
{
    std::vector<FaceDescriptor> out;
    switch (f.kind) {
    case FaceKind::Vertex:
        throw std::invalid_argument("facets_of: a vertex has no facets");
    case FaceKind::SimplexK:
        for (int i : f.mask.indices()) {
            const Mask rest = f.mask.without(i);
            if (rest.size() == 1)
                out.push_back(make_vertex_face(f.point.flipped(rest.bits())));
            else
                out.push_back(make_simplex_face(f.point, rest));
        }
        break;
    case FaceKind::HalfCubeL:
    case FaceKind::TopCell:
        if (f.mask.size() == 3) {
            for (std::size_t skip = 0; skip < f.vertices.size(); ++skip) {
                std::vector<Vertex> tri;
                for (std::size_t j = 0; j < f.vertices.size(); ++j)
                    if (j != skip)
                        tri.push_back(f.vertices[j]);
                const auto d = recover_K_descriptor(CliqueSet{std::move(tri)});
                out.push_back(make_simplex_face(d.opposite, d.mask));
            }
        } else {
            out = halfcube_facets(f.point, f.mask);
        }
        break;
    }
    return out;
}

std::uint64_t closed_form_simplex_count(int n, int dim)
{
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    if (dim == 1)
        return (half / 2) * binomial(n, 2);
    if (dim >= 2 && dim < n)
        return half * binomial(n, dim + 1);
    return 0;
}

std::uint64_t closed_form_halfcube_count(int n, int dim)
{
    if (dim >= 3 && dim < n)
        return (std::uint64_t{1} << (n - dim)) * binomial(n, dim);
    return 0;
}

std::uint64_t closed_form_face_count(int n, int dim)
{
    if (dim == 0)
        return std::uint64_t{1} << (n - 1);
    if (dim == n)
        return 1;
    return closed_form_simplex_count(n, dim) + closed_form_halfcube_count(n, dim);
}

std::uint64_t closed_form_top_facet_count(int n)
{
    if (n == 4)
        return 16;
    return (std::uint64_t{1} << (n - 1)) + 2 * static_cast<std::uint64_t>(n);
}

std::size_t VertexKeyHash::operator()(const VertexKey& key) const noexcept
{
    std::uint64_t h = 1469598103934665603ull;
    for (Bits b : key) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

namespace {

void sort_by_key(std::vector<FaceDescriptor>& faces)
{
    std::sort(faces.begin(), faces.end(),
              [](const FaceDescriptor& a, const FaceDescriptor& b) { return a.vertices < b.vertices; });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

void check_lattice_dimension(int n)
{
    check_dimension(n);
    if (n < 4)
        throw std::invalid_argument("face lattice requires n >= 4, got " + std::to_string(n));
}

} // namespace

std::vector<std::vector<FaceDescriptor>> enumerate_faces(int n)
{
    check_lattice_dimension(n);
    std::vector<std::vector<FaceDescriptor>> faces(n + 1);

    for (const auto& v : even_vertices(n))
        faces[0].push_back(make_vertex_face(v));

    const auto odd = odd_vertices(n);
    for (int dim = 1; dim < n; ++dim) {
        auto& bucket = faces[dim];
        for (const auto& mask : masks_of_size(n, dim + 1))
            for (const auto& opposite : odd)
                bucket.push_back(make_simplex_face(opposite, mask));
        if (dim >= 3) {
            for (const auto& mask : masks_of_size(n, dim)) {
                const Bits outside_all = Mask::full(n).bits() & ~mask.bits();
                const Bits low = mask.bits() & (~mask.bits() + 1);
                Bits outside = outside_all;
                while (true) {
                    Bits base = outside;
                    if (std::popcount(base) % 2 == 1)
                        base |= low;
                    bucket.push_back(make_halfcube_face(Vertex(n, base), mask));
                    if (outside == 0)
                        break;
                    outside = (outside - 1) & outside_all;
                }
            }
        }
        sort_by_key(bucket);
    }
    faces[n].push_back(make_top_cell(n));
    return faces;
}

FaceLattice::FaceLattice(int n) : n_(n), faces_(enumerate_faces(n)), facets_(n + 1)
{
    for (int dim = 0; dim <= n_; ++dim)
        for (std::size_t i = 0; i < faces_[dim].size(); ++i)
            index_.emplace(faces_[dim][i].key(), FaceRef{dim, i});

    for (int dim = 1; dim <= n_; ++dim) {
        const auto& bucket = faces_[dim];
        auto& links = facets_[dim];
        links.resize(bucket.size());
        const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(bucket.size());
        bool missing = false;
#pragma omp parallel for schedule(dynamic, 64)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            std::vector<std::size_t> ids;
            for (const auto& facet : facets_of(bucket[i])) {
                const auto it = index_.find(facet.key());
                if (it == index_.end() || it->second.dim != dim - 1) {
#pragma omp atomic write
                    missing = true;
                    continue;
                }
                ids.push_back(it->second.index);
            }
            std::sort(ids.begin(), ids.end());
            links[i] = std::move(ids);
        }
        if (missing)
            throw std::logic_error("facet outside the lattice in dimension " + std::to_string(dim));
    }
}

std::size_t FaceLattice::count(int dim, FaceKind kind) const
{
    return static_cast<std::size_t>(std::count_if(faces_.at(dim).begin(), faces_.at(dim).end(),
                                                  [kind](const FaceDescriptor& f) { return f.kind == kind; }));
}

std::size_t FaceLattice::total() const
{
    std::size_t t = 0;
    for (const auto& b : faces_)
        t += b.size();
    return t;
}

std::optional<FaceRef> FaceLattice::find(const VertexKey& key) const
{
    const auto it = index_.find(key);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Intersection FaceLattice::intersect(FaceRef a, FaceRef b) const
{
    const auto& va = face(a).vertices;
    const auto& vb = face(b).vertices;
    Intersection out;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(out.vertices));
    if (!out.vertices.empty()) {
        VertexKey key;
        key.reserve(out.vertices.size());
        for (const auto& v : out.vertices)
            key.push_back(v.bits());
        out.face = find(key);
    }
    return out;
}

FaceLattice build_face_lattice(int n) { return FaceLattice(n); }

Intersection face_intersection(const FaceLattice& lattice, const FaceDescriptor& f, const FaceDescriptor& g)
{
    const auto a = lattice.find(f);
    const auto b = lattice.find(g);
    if (!a || !b)
        throw std::invalid_argument("face_intersection: face does not belong to this lattice");
    return lattice.intersect(*a, *b);
}

bool contains_point_simplexK(const FaceDescriptor& f, std::span<const Rational> x)
{
    if (f.kind != FaceKind::SimplexK)
        throw std::invalid_argument("contains_point_simplexK: face is not a simplex face");
    const int n = f.ambient_dimension();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("contains_point_simplexK: dimension mismatch");
    Rational sum = 0;
    for (int i = 0; i < n; ++i) {
        const int vi = f.point.coordinate(i);
        const Rational offset = vi * (x[i] - vi);
        if (!f.mask.contains(i) && x[i] != vi)
            return false;
        if (offset > 0)
            return false;
        if (f.mask.contains(i))
            sum += offset;
    }
    return sum == -2;
}

} // namespace halfcube
