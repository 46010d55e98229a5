#include "oracles.hpp"

#include "halfcube/homology.hpp"
#include "halfcube/triangle.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace halfcube;

namespace {

Integer alternating(int n, int k)
{
    Integer s = 0;
    for (int i = k; i <= n; ++i)
        s += ((k + i) % 2 ? -1 : 1) * (Integer(1) << (n - i)) * oracle::binomial(n, i);
    return s;
}

/// Betti numbers of a chain complex from dense ranks over Q.
std::vector<long long> dense_betti(const CellComplex& c)
{
    const auto bs = boundary_matrices(c);
    std::vector<std::size_t> rank(bs.size() + 2, 0);
    for (const auto& b : bs) {
        std::vector<std::vector<oracle::Rational>> a(b.rows, std::vector<oracle::Rational>(b.cols, 0));
        for (std::size_t col = 0; col < b.cols; ++col)
            for (const auto& e : b.columns[col])
                a[e.row][col] = e.value;
        rank[b.degree] = oracle::dense_rank(a);
    }
    std::vector<long long> betti;
    for (int d = 0; d <= c.dimension(); ++d)
        betti.push_back(static_cast<long long>(c.count(d)) - static_cast<long long>(rank[d]) -
                        static_cast<long long>(rank[d + 1]));
    betti[0] -= 1;
    return betti;
}

} // namespace

TEST_CASE("full complex is acyclic")
{
    for (int n = 4; n <= 5; ++n) {
        const auto h = homology_of(build_complex(n, n + 1));
        CHECK(h.reduced);
        for (auto b : h.betti)
            CHECK(b == 0);
        CHECK(h.torsion_free == true);
        CHECK(h.euler_characteristic() == 1);
    }
}

TEST_CASE("small subcomplexes")
{
    const auto h43 = homology_of(build_complex(4, 3));
    CHECK(h43.betti[2] == 7);
    CHECK(h43.concentrated_in(2));
    CHECK(h43.torsion_free == true);
    for (const auto& t : h43.torsion)
        CHECK(t.empty());

    const auto h44 = homology_of(build_complex(4, 4));
    CHECK(h44.betti[3] == 1);
    CHECK(h44.concentrated_in(3));

    const auto h53 = homology_of(build_complex(5, 3));
    CHECK(h53.betti[2] == 31);

    const auto h55 = homology_of(build_complex(5, 5));
    CHECK(h55.betti[4] == 1);
}

TEST_CASE("unreduced homology keeps degree zero")
{
    const auto h = homology_of(build_complex(4, 3), false, Certification::Rank);
    CHECK_FALSE(h.reduced);
    CHECK(h.betti[0] == 1);
    CHECK(h.betti[2] == 7);
    CHECK_FALSE(h.torsion_free.has_value());
    CHECK(h.euler_characteristic() == 8);
}

TEST_CASE("Betti numbers agree with dense rank oracle")
{
    for (int n = 4; n <= 5; ++n)
        for (int k = 3; k <= n + 1; ++k) {
            const auto c = build_complex(n, k);
            const auto want = dense_betti(c);
            const auto h = homology_of(c, true, Certification::ModP);
            REQUIRE(h.betti.size() >= want.size());
            for (std::size_t d = 0; d < want.size(); ++d)
                CHECK(h.betti[d] == want[d]);
            CHECK(h.torsion_free == true);
        }
}

TEST_CASE("concentration and rank formula through n = 6")
{
    for (int n = 4; n <= 6; ++n)
        for (int k = 3; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            const auto c = build_complex(n, k);
            const auto h = homology_of(c, true, Certification::Snf);
            CHECK(h.concentrated_in(k - 1));
            CHECK(h.torsion_free == true);
            CHECK(Integer(h.betti[k - 1]) == alternating(n, k));
            CHECK(Integer(h.betti[k - 1]) == predicted_betti(n, k));
            CHECK(h.euler_characteristic() == euler_characteristic(c));
        }
    CHECK(homology_of(build_complex(6, 3), true, Certification::Rank).betti[2] == 111);
}

TEST_CASE("homology does not depend on cell orientations")
{
    const auto c = build_complex(5, 4);
    const auto base = homology_of(c, true, Certification::Snf);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto h = homology_of(c.reoriented(seed), true, Certification::Snf);
        CHECK(h.betti == base.betti);
        CHECK(h.torsion == base.torsion);
        CHECK(h.ranks == base.ranks);
    }
}

TEST_CASE("closed forms")
{
    for (int n = 4; n <= 12; ++n)
        for (int k = 3; k <= n; ++k) {
            CHECK(betti_closed_form(n, k) == alternating(n, k));
            CHECK(betti_closed_form(n, k) == predicted_betti(n, k));
        }
    for (int n = 4; n <= 7; ++n)
        for (int k = 3; k <= n + 1; ++k) {
            const auto c = build_complex(n, k);
            const auto counts = closed_form_cell_counts(n, k);
            std::uint64_t largest = 0;
            for (int d = 0; d <= n; ++d) {
                CHECK(counts[d] == c.count(d));
                if (d >= 1)
                    largest = std::max<std::uint64_t>(largest, c.count(d) + c.count(d - 1));
            }
            CHECK(largest_boundary_size(n, k) == largest);
        }
}

TEST_CASE("Betti table")
{
    const auto table = betti_table(6, {TableMode::Both, Certification::Rank, 50000, 0});
    CHECK(table.size() == 9);
    for (const auto& e : table) {
        CAPTURE(e.n);
        CAPTURE(e.k);
        CHECK(e.status == EntryStatus::Match);
        REQUIRE(e.profile);
        CHECK(Integer(e.profile->betti[e.k - 1]) == e.triangle);
    }

    const auto closed = betti_table(9, {TableMode::ClosedForm, Certification::Rank, 50000, 0});
    for (const auto& e : closed) {
        CHECK(e.status == EntryStatus::ClosedFormOnly);
        CHECK(e.closed_form == e.triangle);
        CHECK_FALSE(e.profile);
    }

    const auto tight = betti_table(5, {TableMode::Computed, Certification::Rank, 200, 1});
    bool any_skipped = false;
    for (const auto& e : tight) {
        if (e.status == EntryStatus::Skipped) {
            any_skipped = true;
            CHECK_FALSE(e.note.empty());
            CHECK(largest_boundary_size(e.n, e.k) > 200);
        } else {
            CHECK(e.status == EntryStatus::Computed);
        }
    }
    CHECK(any_skipped);
    CHECK_THROWS_AS(betti_table(3), std::invalid_argument);
}

TEST_CASE("option parsing")
{
    for (auto c : {Certification::Rank, Certification::ModP, Certification::Snf})
        CHECK(parse_certification(to_string(c)) == c);
    for (auto m : {TableMode::Computed, TableMode::ClosedForm, TableMode::Both})
        CHECK(parse_table_mode(to_string(m)) == m);
    CHECK_THROWS_AS(parse_certification("full"), std::invalid_argument);
    CHECK(to_string(EntryStatus::Match) == "match");
}
