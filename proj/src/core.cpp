#include "halfcube/core.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace halfcube {

namespace {

std::uint64_t width_limit(int n) { return std::uint64_t{1} << n; }

Bits full_bits(int n) { return static_cast<Bits>(width_limit(n) - 1); }

} // namespace

void check_dimension(int n)
{
    if (n < 1 || n > kMaxDimension)
        throw std::invalid_argument("dimension " + std::to_string(n) + " outside [1, " +
                                    std::to_string(kMaxDimension) + "]");
}

Vertex::Vertex(int n, Bits bits) : n_(n), bits_(bits)
{
    check_dimension(n);
    if (bits >= width_limit(n))
        throw std::invalid_argument("vertex bits exceed dimension");
}

Vertex Vertex::from_signs(std::span<const int> signs)
{
    const int n = static_cast<int>(signs.size());
    check_dimension(n);
    Bits bits = 0;
    for (int i = 0; i < n; ++i) {
        if (signs[i] == -1)
            bits |= Bits{1} << i;
        else if (signs[i] != 1)
            throw std::invalid_argument("vertex coordinates must be +1 or -1");
    }
    return Vertex(n, bits);
}

Vertex Vertex::from_signs(std::initializer_list<int> signs)
{
    return from_signs(std::span<const int>(signs.begin(), signs.size()));
}

int Vertex::coordinate(int i) const { return ((bits_ >> i) & 1u) ? -1 : 1; }

std::vector<int> Vertex::signs() const
{
    std::vector<int> out(n_);
    for (int i = 0; i < n_; ++i)
        out[i] = coordinate(i);
    return out;
}

int Vertex::negatives() const { return std::popcount(bits_); }

std::string to_string(const Vertex& v)
{
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < v.dimension(); ++i)
        os << (i ? "," : "") << v.coordinate(i);
    os << ')';
    return os.str();
}

Mask::Mask(int n, Bits bits) : n_(n), bits_(bits)
{
    check_dimension(n);
    if (bits >= width_limit(n))
        throw std::invalid_argument("mask bits exceed dimension");
}

Mask Mask::from_indices(int n, std::initializer_list<int> indices)
{
    check_dimension(n);
    Bits bits = 0;
    for (int i : indices) {
        if (i < 0 || i >= n)
            throw std::invalid_argument("mask index out of range");
        bits |= Bits{1} << i;
    }
    return Mask(n, bits);
}

Mask Mask::full(int n)
{
    check_dimension(n);
    return Mask(n, full_bits(n));
}

int Mask::size() const { return std::popcount(bits_); }

std::vector<int> Mask::indices() const
{
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (contains(i))
            out.push_back(i);
    return out;
}

std::string to_string(const Mask& m)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i : m.indices()) {
        os << (first ? "" : ",") << i;
        first = false;
    }
    os << '}';
    return os.str();
}

VertexKey CliqueSet::key() const
{
    VertexKey k;
    k.reserve(vertices.size());
    for (const auto& v : vertices)
        k.push_back(v.bits());
    return k;
}

CliqueSet make_clique_set(std::vector<Vertex> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return CliqueSet{std::move(vertices)};
}

int hamming_distance(const Vertex& x, const Vertex& y)
{
    if (x.dimension() != y.dimension())
        throw std::invalid_argument("hamming_distance: dimension mismatch");
    return std::popcount(x.bits() ^ y.bits());
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::vector<Vertex> even_vertices(int n)
{
    check_dimension(n);
    std::vector<Vertex> out;
    for (std::uint64_t b = 0; b < width_limit(n); ++b)
        if (std::popcount(b) % 2 == 0)
            out.emplace_back(n, static_cast<Bits>(b));
    return out;
}

std::vector<Vertex> odd_vertices(int n)
{
    check_dimension(n);
    std::vector<Vertex> out;
    for (std::uint64_t b = 0; b < width_limit(n); ++b)
        if (std::popcount(b) % 2 == 1)
            out.emplace_back(n, static_cast<Bits>(b));
    return out;
}

std::vector<Mask> masks_of_size(int n, int size)
{
    check_dimension(n);
    std::vector<Mask> out;
    if (size < 0 || size > n)
        return out;
    for (std::uint64_t b = 0; b < width_limit(n); ++b)
        if (std::popcount(b) == size)
            out.emplace_back(n, static_cast<Bits>(b));
    return out;
}

CliqueSet clique_K(const Vertex& opposite, const Mask& mask)
{
    if (opposite.dimension() != mask.dimension())
        throw std::invalid_argument("clique_K: dimension mismatch");
    if (opposite.is_even())
        throw std::invalid_argument("clique_K: opposite point must have odd parity");
    if (mask.size() == 0)
        throw std::invalid_argument("clique_K: empty mask");
    std::vector<Vertex> out;
    for (int i : mask.indices())
        out.push_back(opposite.flipped(Bits{1} << i));
    return make_clique_set(std::move(out));
}

CliqueSet clique_L(const Vertex& base, const Mask& mask)
{
    if (base.dimension() != mask.dimension())
        throw std::invalid_argument("clique_L: dimension mismatch");
    if (!base.is_even())
        throw std::invalid_argument("clique_L: base point must have even parity");
    std::vector<Vertex> out;
    // Walk all submasks of the mask, keeping even-sized flips.
    const Bits s = mask.bits();
    Bits sub = s;
    while (true) {
        if (std::popcount(sub) % 2 == 0)
            out.push_back(base.flipped(sub));
        if (sub == 0)
            break;
        sub = (sub - 1) & s;
    }
    return make_clique_set(std::move(out));
}

KDescriptor recover_K_descriptor(const CliqueSet& c)
{
    if (c.size() < 3)
        throw std::invalid_argument("recover_K_descriptor: fewer than 3 vertices, descriptor not unique");
    const int n = c.vertices.front().dimension();
    Bits majority = 0;
    for (int i = 0; i < n; ++i) {
        std::size_t negative = 0;
        for (const auto& v : c.vertices)
            negative += (v.bits() >> i) & 1u;
        if (2 * negative == c.size())
            throw std::invalid_argument("recover_K_descriptor: no majority, not of K-form");
        if (2 * negative > c.size())
            majority |= Bits{1} << i;
    }
    const Vertex opposite(n, majority);
    if (opposite.is_even())
        throw std::invalid_argument("recover_K_descriptor: majority vertex is even, not of K-form");
    Bits mask = 0;
    for (const auto& v : c.vertices) {
        const Bits diff = v.bits() ^ majority;
        if (std::popcount(diff) != 1)
            throw std::invalid_argument("recover_K_descriptor: vertex not adjacent to majority, not of K-form");
        mask |= diff;
    }
    KDescriptor d{opposite, Mask(n, mask)};
    if (clique_K(d.opposite, d.mask) != c)
        throw std::invalid_argument("recover_K_descriptor: not of K-form");
    return d;
}

bool is_clique(const CliqueSet& c)
{
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (hamming_distance(c.vertices[i], c.vertices[j]) != 2)
                return false;
    return true;
}

CliqueClass classify_clique(const CliqueSet& c)
{
    if (c.size() == 0)
        throw std::invalid_argument("classify_clique: empty set");
    if (!is_clique(c))
        throw std::invalid_argument("classify_clique: some pair is not at Hamming distance 2");
    const int n = c.vertices.front().dimension();
    if (c.size() <= 2)
        return {CliqueType::AmbiguousSmall, c.vertices.front(), Mask(n, 0), c.key()};

    Bits agree_and = ~Bits{0}, agree_or = 0;
    for (const auto& v : c.vertices) {
        agree_and &= v.bits();
        agree_or |= v.bits();
    }
    const Bits varying = (agree_and ^ agree_or) & full_bits(n);

    if (c.size() == 4 && std::popcount(varying) == 3)
        return {CliqueType::LType, c.vertices.front(), Mask(n, varying), c.key()};

    const KDescriptor d = recover_K_descriptor(c);
    return {CliqueType::KType, d.opposite, d.mask, c.key()};
}

std::vector<CliqueSet> enumerate_cliques(int n, int size)
{
    check_dimension(n);
    if (n < 4)
        throw std::invalid_argument("enumerate_cliques: n must be at least 4");
    if (size < 1)
        throw std::invalid_argument("enumerate_cliques: size must be positive");

    std::vector<CliqueSet> out;
    if (size == 1) {
        for (const auto& v : even_vertices(n))
            out.push_back(CliqueSet{{v}});
        return out;
    }
    for (const auto& opposite : odd_vertices(n))
        for (const auto& mask : masks_of_size(n, size))
            out.push_back(clique_K(opposite, mask));
    if (size == 4) {
        for (const auto& base : even_vertices(n))
            for (const auto& mask : masks_of_size(n, 3))
                out.push_back(clique_L(base, mask));
    }
    std::sort(out.begin(), out.end(),
              [](const CliqueSet& a, const CliqueSet& b) { return a.key() < b.key(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace halfcube
