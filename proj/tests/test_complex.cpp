#include "oracles.hpp"

#include "halfcube/complex.hpp"
#include "halfcube/triangle.hpp"

#include <doctest.h>

#include <memory>
#include <sstream>
#include <stdexcept>

using namespace halfcube;

namespace {

std::vector<std::vector<oracle::Rational>> dense_q(const BoundaryMatrix& m)
{
    std::vector<std::vector<oracle::Rational>> out(m.rows, std::vector<oracle::Rational>(m.cols, 0));
    for (std::size_t c = 0; c < m.cols; ++c)
        for (const auto& e : m.columns[c])
            out[e.row][c] = e.value;
    return out;
}

} // namespace

TEST_CASE("cell counts of the subcomplexes")
{
    const auto c44 = build_complex(4, 4);
    CHECK(c44.count(0) == 8);
    CHECK(c44.count(1) == 24);
    CHECK(c44.count(2) == 32);
    CHECK(c44.count(3) == 16);
    CHECK(c44.count(4) == 0);

    const auto c53 = build_complex(5, 3);
    const std::vector<std::size_t> expected{16, 80, 160, 80, 16, 0};
    for (int d = 0; d <= 5; ++d)
        CHECK(c53.count(d) == expected[d]);
    for (std::size_t i = 0; i < c53.count(3); ++i)
        CHECK(c53.cell({3, i}).kind == FaceKind::SimplexK);

    for (int n = 4; n <= 7; ++n)
        for (int k = 3; k <= n + 1; ++k) {
            const auto c = build_complex(n, k);
            for (int i = 0; i <= n; ++i) {
                std::uint64_t want = closed_form_face_count(n, i);
                if (i >= k && i < n)
                    want -= (std::uint64_t{1} << (n - i)) * oracle::binomial(n, i).convert_to<std::uint64_t>();
                if (i == n && k <= n)
                    want = 0;
                CHECK(c.count(i) == want);
            }
        }
    CHECK_THROWS_AS(build_complex(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_complex(4, 6), std::invalid_argument);
    CHECK_THROWS_AS(build_complex(3, 3), std::invalid_argument);
}

TEST_CASE("subcomplexes are closed under taking facets")
{
    for (int n = 4; n <= 6; ++n)
        for (int k = 3; k <= n; ++k) {
            const auto c = build_complex(n, k);
            for (int d = 1; d <= n; ++d)
                for (std::size_t i = 0; i < c.count(d); ++i)
                    for (const auto& f : facets_of(c.cell({d, i})))
                        CHECK(c.find(f.key()).has_value());
        }
}

TEST_CASE("Euler characteristics")
{
    for (int n = 4; n <= 7; ++n) {
        CHECK(euler_characteristic(build_complex(n, n + 1)) == 1);
        for (int k = 3; k <= n; ++k) {
            const auto t = predicted_betti(n, k).convert_to<long long>();
            CHECK(euler_characteristic(build_complex(n, k)) == 1 + ((k - 1) % 2 == 0 ? 1 : -1) * t);
        }
    }
    CHECK(euler_characteristic(build_complex(4, 3)) == 8);
    CHECK(euler_characteristic(build_complex(6, 4)) == -48);
    CHECK(euler_characteristic(build_complex(4, 4)) == 0);
}

TEST_CASE("boundary matrix shape")
{
    for (int n = 4; n <= 6; ++n)
        for (int k = 3; k <= n + 1; ++k) {
            const auto c = build_complex(n, k);
            const auto bs = boundary_matrices(c);
            for (const auto& b : bs)
                for (std::size_t col = 0; col < b.cols; ++col) {
                    CHECK(b.columns[col].size() == c.facets({b.degree, col}).size());
                    int sum = 0;
                    for (const auto& e : b.columns[col]) {
                        CHECK((e.value == 1 || e.value == -1));
                        sum += e.value;
                    }
                    if (b.degree == 1)
                        CHECK(sum == 0);
                }
            for (std::size_t d = 1; d < bs.size(); ++d)
                CHECK(composes_to_zero(bs[d - 1], bs[d]));
        }
}

TEST_CASE("edge incidence has rank seven on eight vertices")
{
    const auto bs = boundary_matrices(build_complex(4, 4));
    CHECK(oracle::dense_rank(dense_q(bs[0])) == 7);
}

TEST_CASE("low skeleta agree with the full complex")
{
    for (int n = 4; n <= 6; ++n) {
        const auto full = boundary_matrices(build_complex(n, n + 1));
        for (int k = 3; k <= n; ++k) {
            const auto part = boundary_matrices(build_complex(n, k));
            for (int i = 1; i <= k - 2; ++i)
                CHECK(part[i - 1] == full[i - 1]);
        }
    }
}

TEST_CASE("serial and parallel assembly agree")
{
    for (int n = 4; n <= 6; ++n)
        for (int k = 3; k <= n + 1; ++k) {
            const auto c = build_complex(n, k);
            for (int d = 1; d <= n; ++d)
                CHECK(serial::assemble_boundary(c, d) == parallel::assemble_boundary(c, d));
        }
}

TEST_CASE("reoriented complexes still square to zero")
{
    const auto c = build_complex(5, 4);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto r = c.reoriented(seed);
        const auto bs = boundary_matrices(r);
        for (std::size_t d = 1; d < bs.size(); ++d)
            CHECK(composes_to_zero(bs[d - 1], bs[d]));
        int flipped = 0;
        for (int d = 0; d <= 5; ++d)
            for (std::size_t i = 0; i < r.count(d); ++i)
                flipped += r.flip({d, i}) < 0;
        CHECK(flipped > 0);
    }
}

TEST_CASE("composes_to_zero detects a bad product")
{
    BoundaryMatrix lower{1, 2, 1, {{{0, 1}, {1, -1}}}};
    BoundaryMatrix upper{2, 1, 1, {{{0, 1}}}};
    CHECK_FALSE(composes_to_zero(lower, upper));
    std::vector<BoundaryMatrix> bad{lower, upper};
    CHECK_THROWS_AS(check_boundary_squares_zero(bad), std::logic_error);
}

TEST_CASE("triplet round trip")
{
    const auto bs = boundary_matrices(build_complex(5, 4));
    for (const auto& b : bs) {
        std::stringstream ss;
        write_triplets(ss, b);
        CHECK(read_triplets(ss) == b);
    }
    std::stringstream small;
    write_triplets(small, BoundaryMatrix{1, 2, 1, {{{0, -1}, {1, 1}}}});
    CHECK(small.str() == "1 2 1 2\n0 0 -1\n1 0 1\n");
    std::stringstream broken("1 2 1 3\n0 0 1\n");
    CHECK_THROWS(read_triplets(broken));
}

TEST_CASE("orientation frames")
{
    const FaceLattice lattice(5);
    for (int d = 1; d <= 5; ++d)
        for (std::size_t i = 0; i < lattice.count(d); i += 3) {
            const auto& f = lattice.face({d, i});
            const auto frame = orient_cell(f);
            CHECK(frame.tuple.size() == static_cast<std::size_t>(d + 1));
            CHECK(frame.pivot_rows.size() == static_cast<std::size_t>(d));
            const auto basis = frame_basis(f, frame);
            CHECK(relative_sign(frame, basis) == 1);
            auto swapped = basis;
            if (swapped.size() >= 2) {
                std::swap(swapped[0], swapped[1]);
                CHECK(relative_sign(frame, swapped) == -1);
                swapped[1] = swapped[0];
                CHECK(relative_sign(frame, swapped) == 0);
            }
        }
    CHECK(determinant_sign({0, 1, 1, 0}, 2) == -1);
    CHECK(determinant_sign({2, 0, 0, 3}, 2) == 1);
    CHECK(determinant_sign({1, 2, 2, 4}, 2) == 0);
}
