#include "halfcube/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace halfcube {

namespace {

bool same_face(const FaceDescriptor& a, const FaceDescriptor& b)
{
    return a.kind == b.kind && a.dim == b.dim && a.point == b.point && a.mask == b.mask && a.vertices == b.vertices;
}

FaceKind kind_from_int(int k)
{
    if (k < 0 || k > 3)
        throw std::runtime_error("cache: bad face kind");
    return static_cast<FaceKind>(k);
}

} // namespace

bool deep_equal(const CachedComplex& a, const CachedComplex& b)
{
    if (a.n != b.n || a.k_cut != b.k_cut || a.cells.size() != b.cells.size() || a.boundaries != b.boundaries)
        return false;
    for (std::size_t d = 0; d < a.cells.size(); ++d) {
        if (a.cells[d].size() != b.cells[d].size())
            return false;
        for (std::size_t i = 0; i < a.cells[d].size(); ++i)
            if (!same_face(a.cells[d][i], b.cells[d][i]))
                return false;
    }
    return true;
}

CachedComplex snapshot(const CellComplex& c, std::span<const BoundaryMatrix> boundaries)
{
    CachedComplex out;
    out.n = c.dimension();
    out.k_cut = c.k_cut();
    for (int d = 0; d <= c.dimension(); ++d) {
        std::vector<FaceDescriptor> cells;
        for (std::size_t i = 0; i < c.count(d); ++i)
            cells.push_back(c.cell(CellRef{d, i}));
        out.cells.push_back(std::move(cells));
    }
    out.boundaries.assign(boundaries.begin(), boundaries.end());
    return out;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, int n, int k_cut)
{
    return dir / ("complex_n" + std::to_string(n) + "_k" + std::to_string(k_cut) + ".txt");
}

void store_complex(const std::filesystem::path& dir, const CachedComplex& entry)
{
    std::filesystem::create_directories(dir);
    const auto path = cache_file(dir, entry.n, entry.k_cut);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream os(tmp);
        if (!os)
            throw std::runtime_error("cache: cannot write " + tmp);
        os << "halfcube-cache " << kCacheFormatVersion << " " << kOrientationTag << "\n";
        os << entry.n << " " << entry.k_cut << "\n";
        for (std::size_t d = 0; d < entry.cells.size(); ++d) {
            os << "cells " << d << " " << entry.cells[d].size() << "\n";
            for (const auto& f : entry.cells[d]) {
                os << static_cast<int>(f.kind) << " " << f.point.bits() << " " << f.mask.bits() << " "
                   << f.vertices.size();
                for (const auto& v : f.vertices)
                    os << " " << v.bits();
                os << "\n";
            }
        }
        for (const auto& b : entry.boundaries) {
            os << "boundary\n";
            write_triplets(os, b);
        }
        if (!os)
            throw std::runtime_error("cache: write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

std::optional<CachedComplex> load_complex(const std::filesystem::path& dir, int n, int k_cut)
{
    std::ifstream is(cache_file(dir, n, k_cut));
    if (!is)
        return std::nullopt;
    try {
        std::string magic, tag;
        int version = 0;
        is >> magic >> version >> tag;
        if (magic != "halfcube-cache" || version != kCacheFormatVersion || tag != kOrientationTag)
            return std::nullopt;
        CachedComplex out;
        is >> out.n >> out.k_cut;
        if (!is || out.n != n || out.k_cut != k_cut)
            return std::nullopt;
        for (int d = 0; d <= n; ++d) {
            std::string word;
            int dim = -1;
            std::size_t count = 0;
            is >> word >> dim >> count;
            if (!is || word != "cells" || dim != d)
                return std::nullopt;
            std::vector<FaceDescriptor> cells;
            cells.reserve(count);
            for (std::size_t i = 0; i < count; ++i) {
                int kind = 0;
                Bits point = 0, mask = 0;
                std::size_t nv = 0;
                is >> kind >> point >> mask >> nv;
                FaceDescriptor f;
                f.kind = kind_from_int(kind);
                f.dim = d;
                f.point = Vertex(n, point);
                f.mask = Mask(n, mask);
                for (std::size_t j = 0; j < nv; ++j) {
                    Bits v = 0;
                    is >> v;
                    f.vertices.emplace_back(n, v);
                }
                if (!is)
                    return std::nullopt;
                cells.push_back(std::move(f));
            }
            out.cells.push_back(std::move(cells));
        }
        for (int d = 1; d <= n; ++d) {
            std::string word;
            is >> word;
            if (word != "boundary")
                return std::nullopt;
            out.boundaries.push_back(read_triplets(is));
        }
        return out;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::vector<BoundaryMatrix> cached_boundaries(const std::filesystem::path& dir, const CellComplex& c)
{
    if (auto hit = load_complex(dir, c.dimension(), c.k_cut())) {
        // Only trust the file if it describes the same cells in the same order.
        const CachedComplex fresh = snapshot(c, hit->boundaries);
        if (deep_equal(*hit, fresh))
            return hit->boundaries;
    }
    auto boundaries = boundary_matrices(c);
    store_complex(dir, snapshot(c, boundaries));
    return boundaries;
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag_value)
{
    if (!flag_value.empty())
        return std::filesystem::path(flag_value);
    if (const char* env = std::getenv("HALFCUBE_CACHE_DIR"); env && *env)
        return std::filesystem::path(env);
    return std::nullopt;
}

} // namespace halfcube
