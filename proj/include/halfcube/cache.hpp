// On-disk cache of cell lists and boundary maps, one file per (n, k_cut).
//
// File layout (text):
//   halfcube-cache <format version> <orientation tag>
//   <n> <k_cut>
//   per dimension: "cells <dim> <count>" then one line per cell:
//     <kind> <point bits> <mask bits> <vertex count> <vertex bits>...
//   per degree: "boundary" then the sparse triplet block of that map.
// A file whose version or tag differs is ignored and rewritten.

#ifndef HALFCUBE_CACHE_HPP
#define HALFCUBE_CACHE_HPP

#include "halfcube/complex.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace halfcube {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kOrientationTag = "lexmin-halved";

struct CachedComplex {
    int n = 0;
    int k_cut = 0;
    std::vector<std::vector<FaceDescriptor>> cells;
    std::vector<BoundaryMatrix> boundaries;
};

/// Field-by-field equality, descriptors included.
bool deep_equal(const CachedComplex& a, const CachedComplex& b);

CachedComplex snapshot(const CellComplex& c, std::span<const BoundaryMatrix> boundaries);

std::filesystem::path cache_file(const std::filesystem::path& dir, int n, int k_cut);

void store_complex(const std::filesystem::path& dir, const CachedComplex& entry);
/// nullopt when the file is missing, unreadable or of another version.
std::optional<CachedComplex> load_complex(const std::filesystem::path& dir, int n, int k_cut);

/// Boundary maps from the cache when present, otherwise computed and stored.
std::vector<BoundaryMatrix> cached_boundaries(const std::filesystem::path& dir, const CellComplex& c);

/// Directory from the flag if given, else from HALFCUBE_CACHE_DIR, else none.
std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag_value);

} // namespace halfcube

#endif
