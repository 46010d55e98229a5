#include "halfcube/homology.hpp"

#include "halfcube/triangle.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

namespace halfcube {

std::string to_string(Certification c)
{
    switch (c) {
    case Certification::Rank: return "rank";
    case Certification::ModP: return "modp";
    case Certification::Snf: return "snf";
    }
    return "?";
}

Certification parse_certification(const std::string& s)
{
    if (s == "rank")
        return Certification::Rank;
    if (s == "modp")
        return Certification::ModP;
    if (s == "snf")
        return Certification::Snf;
    throw std::invalid_argument("unknown certification level '" + s + "'");
}

long long HomologyProfile::euler_characteristic() const
{
    long long chi = reduced ? 1 : 0;
    for (std::size_t d = 0; d < betti.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * betti[d];
    return chi;
}

bool HomologyProfile::concentrated_in(int degree) const
{
    for (std::size_t d = 0; d < betti.size(); ++d)
        if (static_cast<int>(d) != degree && betti[d] != 0)
            return false;
    return true;
}

namespace {

std::size_t rank_mod(const BoundaryMatrix& m, std::uint32_t p)
{
    // Inside a job-parallel region the kernel stays serial.
    return omp_in_parallel() ? serial::rank_mod_p(m, p) : parallel::rank_mod_p(m, p);
}

} // namespace

HomologyProfile homology_of(const CellComplex& c, std::span<const BoundaryMatrix> boundaries, bool reduced,
                            Certification cert)
{
    const int n = c.dimension();
    if (static_cast<int>(boundaries.size()) != n)
        throw std::invalid_argument("homology_of: expected one boundary map per degree 1..n");
    check_boundary_squares_zero(boundaries);

    HomologyProfile h;
    h.n = n;
    h.k_cut = c.k_cut();
    h.reduced = reduced;
    h.certification = cert;
    for (int d = 0; d <= n; ++d)
        h.cells.push_back(c.count(d));
    h.torsion.assign(static_cast<std::size_t>(n) + 1, {});

    bool primes_agree = true;
    for (const auto& b : boundaries) {
        std::size_t r = 0;
        if (cert == Certification::Snf) {
            const auto snf = smith_normal_form(b);
            r = snf.rank;
            h.torsion[b.degree - 1] = snf.torsion();
        } else {
            r = rank_rational(b);
        }
        if (cert == Certification::ModP)
            for (auto p : kCertificatePrimes)
                primes_agree = primes_agree && rank_mod(b, p) == r;
        h.ranks.push_back(r);
    }

    for (int d = 0; d <= n; ++d) {
        long long b = static_cast<long long>(h.cells[d]);
        if (d >= 1)
            b -= static_cast<long long>(h.ranks[d - 1]);
        if (d < n)
            b -= static_cast<long long>(h.ranks[d]);
        h.betti.push_back(b);
    }
    if (reduced)
        h.betti[0] -= 1;

    if (cert == Certification::Snf) {
        bool none = true;
        for (const auto& t : h.torsion)
            none = none && t.empty();
        h.torsion_free = none;
    } else if (cert == Certification::ModP) {
        h.torsion_free = primes_agree;
    }
    return h;
}

HomologyProfile homology_of(const CellComplex& c, bool reduced, Certification cert)
{
    const auto b = boundary_matrices(c);
    return homology_of(c, b, reduced, cert);
}

Integer betti_closed_form(int n, int k)
{
    if (k < 3 || k > n)
        throw std::invalid_argument("betti_closed_form: need 3 <= k <= n");
    return betti_alternating(n, k);
}

std::vector<std::uint64_t> closed_form_cell_counts(int n, int k_cut)
{
    if (n < 4 || k_cut < 3 || k_cut > n + 1)
        throw std::invalid_argument("closed_form_cell_counts: parameters out of range");
    std::vector<std::uint64_t> counts;
    for (int d = 0; d <= n; ++d) {
        if (d < k_cut)
            counts.push_back(closed_form_face_count(n, d));
        else
            counts.push_back(closed_form_simplex_count(n, d));
    }
    return counts;
}

std::uint64_t largest_boundary_size(int n, int k_cut)
{
    const auto counts = closed_form_cell_counts(n, k_cut);
    std::uint64_t best = 0;
    for (std::size_t d = 1; d < counts.size(); ++d)
        if (counts[d] > 0)
            best = std::max(best, counts[d] + counts[d - 1]);
    return best;
}

std::string to_string(TableMode m)
{
    switch (m) {
    case TableMode::Computed: return "computed";
    case TableMode::ClosedForm: return "closed_form";
    case TableMode::Both: return "both";
    }
    return "?";
}

TableMode parse_table_mode(const std::string& s)
{
    if (s == "computed")
        return TableMode::Computed;
    if (s == "closed_form")
        return TableMode::ClosedForm;
    if (s == "both")
        return TableMode::Both;
    throw std::invalid_argument("unknown table mode '" + s + "'");
}

std::string to_string(EntryStatus s)
{
    switch (s) {
    case EntryStatus::Match: return "match";
    case EntryStatus::Mismatch: return "mismatch";
    case EntryStatus::Computed: return "computed";
    case EntryStatus::ClosedFormOnly: return "closed_form";
    case EntryStatus::Skipped: return "skipped";
    }
    return "?";
}

std::vector<BettiEntry> betti_table(int n_max, const BettiTableOptions& options)
{
    if (n_max < 4)
        throw std::invalid_argument("betti_table: n_max must be at least 4");
    std::vector<BettiEntry> entries;
    for (int n = 4; n <= n_max; ++n)
        for (int k = 3; k <= n; ++k) {
            BettiEntry e;
            e.n = n;
            e.k = k;
            e.closed_form = betti_closed_form(n, k);
            e.triangle = predicted_betti(n, k);
            e.status = EntryStatus::ClosedFormOnly;
            entries.push_back(std::move(e));
        }
    if (options.mode == TableMode::ClosedForm)
        return entries;

    std::map<int, std::shared_ptr<const FaceLattice>> lattices;
    for (auto& e : entries) {
        const auto size = largest_boundary_size(e.n, e.k);
        if (size > options.max_cells) {
            e.status = EntryStatus::Skipped;
            e.note = "largest boundary map touches " + std::to_string(size) + " cells, budget " +
                     std::to_string(options.max_cells);
            continue;
        }
        if (!lattices.count(e.n))
            lattices[e.n] = std::make_shared<const FaceLattice>(e.n);
    }

    const auto count = static_cast<std::ptrdiff_t>(entries.size());
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::ptrdiff_t i = count - 1; i >= 0; --i) {
        auto& e = entries[i];
        if (e.status == EntryStatus::Skipped)
            continue;
        try {
            const CellComplex c(lattices.at(e.n), e.k);
            e.profile = homology_of(c, true, options.certification);
        } catch (const std::exception& ex) {
            e.status = EntryStatus::Skipped;
            e.note = ex.what();
            continue;
        }
        if (options.mode == TableMode::Computed) {
            e.status = EntryStatus::Computed;
            continue;
        }
        const auto& h = *e.profile;
        const bool ok = h.betti[e.k - 1] == e.closed_form && e.closed_form == e.triangle &&
                        h.concentrated_in(e.k - 1) && h.torsion_free.value_or(true);
        e.status = ok ? EntryStatus::Match : EntryStatus::Mismatch;
    }
    return entries;
}

} // namespace halfcube
