// Integer homology of the complexes C_{n,k}.

#ifndef HALFCUBE_HOMOLOGY_HPP
#define HALFCUBE_HOMOLOGY_HPP

#include "halfcube/complex.hpp"
#include "halfcube/integer_matrix.hpp"
#include "halfcube/numeric.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace halfcube {

/// How torsion is certified.
///  Rank: ranks over Q only, torsion left open.
///  ModP: Q ranks must agree with ranks mod 2, 3 and 5 (rules out 2-, 3- and 5-torsion only).
///  Snf:  full Smith normal form of every boundary map.
enum class Certification { Rank, ModP, Snf };

std::string to_string(Certification c);
Certification parse_certification(const std::string& s);

inline constexpr std::uint32_t kCertificatePrimes[] = {2, 3, 5};

struct HomologyProfile {
    int n = 0;
    int k_cut = 0;
    bool reduced = false;
    Certification certification = Certification::Rank;
    std::vector<std::size_t> cells;
    /// rank of the degree-d boundary map at index d-1, over Q.
    std::vector<std::size_t> ranks;
    std::vector<long long> betti;
    /// Invariant factors > 1 per degree (filled only under Snf).
    std::vector<std::vector<Integer>> torsion;
    /// Unknown under Rank; under ModP, false means some prime rank dropped.
    std::optional<bool> torsion_free;

    /// Alternating sum of unreduced Betti numbers.
    long long euler_characteristic() const;
    /// Betti numbers vanish outside `degree`.
    bool concentrated_in(int degree) const;
};

HomologyProfile homology_of(const CellComplex& c, bool reduced = true, Certification cert = Certification::Snf);
HomologyProfile homology_of(const CellComplex& c, std::span<const BoundaryMatrix> boundaries, bool reduced,
                            Certification cert);

/// rank H_{k-1}(C_{n,k}) by the alternating sum.
Integer betti_closed_form(int n, int k);

/// Cell counts of C_{n,k} per dimension, from the face census alone.
std::vector<std::uint64_t> closed_form_cell_counts(int n, int k_cut);

/// Cells touched by the largest boundary map (rows + columns).
std::uint64_t largest_boundary_size(int n, int k_cut);

enum class TableMode { Computed, ClosedForm, Both };
enum class EntryStatus { Match, Mismatch, Computed, ClosedFormOnly, Skipped };

std::string to_string(TableMode m);
TableMode parse_table_mode(const std::string& s);
std::string to_string(EntryStatus s);

struct BettiEntry {
    int n = 0;
    int k = 0;
    std::optional<HomologyProfile> profile;
    Integer closed_form;
    Integer triangle;
    EntryStatus status = EntryStatus::Skipped;
    std::string note;
};

struct BettiTableOptions {
    TableMode mode = TableMode::Both;
    Certification certification = Certification::Rank;
    /// Entries whose largest boundary map exceeds this are skipped.
    std::uint64_t max_cells = 50000;
    /// 0 leaves the OpenMP default.
    int threads = 0;
};

/// One entry per 4 <= n <= n_max, 3 <= k <= n; (n, k) jobs run in parallel.
std::vector<BettiEntry> betti_table(int n_max, const BettiTableOptions& options = {});

} // namespace halfcube

#endif
