#include "oracles.hpp"

#include "halfcube/symmetry.hpp"
#include "halfcube/triangle.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

using namespace halfcube;

namespace {

Vertex V(std::initializer_list<int> s) { return Vertex::from_signs(s); }

/// The group element as an integer matrix acting on column vectors.
std::vector<std::vector<long long>> matrix_of(const SignedPermutation& g)
{
    const int n = g.dimension();
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (int j = 0; j < n; ++j) {
        std::vector<long long> e(n, 0);
        e[j] = 1;
        const auto col = g.apply(std::span<const long long>(e));
        for (int i = 0; i < n; ++i)
            m[i][j] = col[i];
    }
    return m;
}

} // namespace

TEST_CASE("signed permutations form a group")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 4 + trial % 3;
        const auto g = random_wdn_element(n, rng), h = random_wdn_element(n, rng), k = random_wdn_element(n, rng);
        CHECK(g.in_WDn());
        CHECK((g * h) * k == g * (h * k));
        CHECK(g * g.inverse() == SignedPermutation::identity(n));
        CHECK(g.inverse() * g == SignedPermutation::identity(n));
        CHECK(g * SignedPermutation::identity(n) == g);
        for (Bits b = 0; b < (Bits{1} << n); b += 3) {
            const Vertex v(n, b);
            CHECK((g * h).apply(v) == g.apply(h.apply(v)));
        }
    }
    CHECK_FALSE(SignedPermutation({0, 1, 2, 3}, {-1, 1, 1, 1}).in_WDn());
    CHECK(SignedPermutation::double_flip(4, 0, 1).in_WDn());
    CHECK_THROWS_AS(SignedPermutation({0, 0, 2, 3}, {1, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SignedPermutation({0, 1, 2, 3}, {1, 2, 1, 1}), std::invalid_argument);
}

TEST_CASE("group order")
{
    for (int n = 4; n <= 5; ++n) {
        const auto all = enumerate_wdn(n);
        CHECK(Integer(all.size()) == wdn_order(n));
        std::set<SignedPermutation> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
        for (const auto& g : all)
            CHECK(g.in_WDn());
    }
    CHECK(wdn_order(4) == 192);
    CHECK(wdn_order(5) == 1920);
    for (int n = 4; n <= 10; ++n) {
        Integer fact = 1;
        for (int i = 2; i <= n; ++i)
            fact *= i;
        // Half of all 2^n n! signed permutations have an even number of sign changes.
        CHECK(wdn_order(n) == (Integer(1) << n) * fact / 2);
    }
    const auto gens = wdn_generators(5);
    CHECK(gens.size() == 5);
    CHECK(gens.back() == SignedPermutation::double_flip(5, 3, 4));
}

TEST_CASE("action on vertices")
{
    const auto v = V({1, 1, 1, 1});
    CHECK(act_on_vertex(SignedPermutation::identity(4), v) == v);
    const auto w = act_on_vertex(SignedPermutation::double_flip(4, 0, 1), v);
    CHECK(w == V({-1, -1, 1, 1}));
    CHECK(w.is_even());

    // (gv)_i = s_i v_{perm^-1(i)}, compared with the matrix picture.
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = random_wdn_element(5, rng);
        const auto m = matrix_of(g);
        for (Bits b = 0; b < 32; ++b) {
            const Vertex x(5, b);
            const auto s = x.signs();
            std::vector<int> y(5, 0);
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j)
                    y[i] += static_cast<int>(m[i][j]) * s[j];
            CHECK(act_on_vertex(g, x) == Vertex::from_signs(y));
            CHECK(act_on_vertex(g, x).is_even() == x.is_even());
        }
    }

    std::uniform_int_distribution<Bits> pick(0, 63);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto g = random_wdn_element(6, rng);
        const Vertex a(6, pick(rng)), b(6, pick(rng));
        CHECK(hamming_distance(act_on_vertex(g, a), act_on_vertex(g, b)) == hamming_distance(a, b));
    }
    CHECK_THROWS_AS(act_on_vertex(SignedPermutation::identity(4), Vertex(5, 0)), std::invalid_argument);
}

TEST_CASE("action on faces preserves type and the lattice")
{
    const FaceLattice lattice(5);
    auto gens = wdn_generators(5);
    gens.push_back(SignedPermutation::identity(5));
    for (const auto& g : gens)
        for (int d = 0; d <= 5; ++d)
            for (const auto& f : lattice.faces(d)) {
                const auto img = act_on_face(g, f, lattice);
                CHECK(img.kind == f.kind);
                CHECK(img.dim == f.dim);
                CHECK(lattice.find(img).has_value());
                VertexKey direct;
                for (const auto& v : f.vertices)
                    direct.push_back(g.apply(v).bits());
                std::sort(direct.begin(), direct.end());
                CHECK(img.key() == direct);
                if (g == SignedPermutation::identity(5))
                    CHECK(img == f);
            }
    const SignedPermutation odd({0, 1, 2, 3, 4}, {-1, 1, 1, 1, 1});
    CHECK_THROWS_AS(act_on_face(odd, lattice.face({3, 0}), lattice), std::invalid_argument);
}

TEST_CASE("group maps each subcomplex to itself")
{
    std::mt19937_64 rng(2);
    for (int n = 4; n <= 6; ++n)
        for (int k = 3; k <= n; ++k) {
            const auto c = build_complex(n, k);
            for (int trial = 0; trial < 3; ++trial) {
                const auto g = random_wdn_element(n, rng);
                for (int d = 0; d <= n; ++d)
                    for (std::size_t i = 0; i < c.count(d); ++i) {
                        const auto img = act_on_face(g, c.cell({d, i}), c.lattice());
                        const auto ref = c.find(img.key());
                        REQUIRE(ref);
                        CHECK(ref->dim == d);
                        CHECK(c.cell(*ref).kind == c.cell({d, i}).kind);
                    }
            }
        }
}

TEST_CASE("the special reflection in dimension four")
{
    const auto r = LinearSymmetry::special_reflection_n4();
    for (const auto& v : even_vertices(4))
        CHECK(r.apply(r.apply(v)) == v);
    CHECK(r.apply(V({1, 1, 1, 1})) == V({-1, -1, -1, -1}));

    const FaceLattice lattice(4);
    const auto src = make_halfcube_face(V({1, 1, 1, 1}), Mask::from_indices(4, {0, 1, 2}));
    const auto dst = make_simplex_face(V({-1, -1, -1, 1}), Mask::full(4));
    const auto img = act_on_face(r, *lattice.find(src), lattice);
    CHECK(lattice.face(img).key() == dst.key());
    CHECK(lattice.face(img).kind == FaceKind::SimplexK);

    // Odd vertices are not sent to sign vectors.
    CHECK_THROWS_AS(r.apply(V({-1, 1, 1, 1})), std::domain_error);
    const auto id = LinearSymmetry::from(SignedPermutation::identity(4));
    CHECK(act_on_face(id, FaceRef{2, 5}, lattice) == FaceRef{2, 5});
}

TEST_CASE("orbits")
{
    for (int n = 4; n <= 7; ++n) {
        CAPTURE(n);
        const FaceLattice lattice(n);
        const auto report = orbits(lattice, OrbitGroup::WDn);
        for (int d = 0; d <= n; ++d) {
            const auto& list = report.per_dimension[d];
            std::size_t sum = 0;
            for (const auto& o : list) {
                sum += o.size;
                CHECK(wdn_order(n) % o.size == 0);
                CHECK((o.k_type == 0 || o.l_type == 0));
            }
            CHECK(sum == lattice.count(d));
            const std::size_t expected = (d >= 3 && d < n) ? 2 : 1;
            CHECK(list.size() == expected);
        }
    }
    const auto five = orbits(5, OrbitGroup::WDn);
    std::multiset<std::size_t> sizes;
    for (const auto& o : five.per_dimension[3])
        sizes.insert(o.size);
    CHECK(sizes == std::multiset<std::size_t>{40, 80});
    for (const auto& o : five.per_dimension[3])
        CHECK(o.type() == (o.size == 80 ? "K" : "L"));

    const auto four = orbits(4, OrbitGroup::WDn);
    REQUIRE(four.per_dimension[3].size() == 2);
    for (const auto& o : four.per_dimension[3])
        CHECK(o.size == 8);

    const auto ext = orbits(4, OrbitGroup::WDnPlusSpecialReflection);
    REQUIRE(ext.per_dimension[3].size() == 1);
    CHECK(ext.per_dimension[3][0].size == 16);
    CHECK(ext.per_dimension[3][0].type() == "K+L");
    for (int d = 0; d <= 4; ++d)
        CHECK(ext.per_dimension[d].size() == 1);
    CHECK_THROWS_AS(orbits(5, OrbitGroup::WDnPlusSpecialReflection), std::invalid_argument);
}

TEST_CASE("homology representation")
{
    std::mt19937_64 rng(17);
    for (auto [n, k] : {std::pair{4, 3}, std::pair{4, 4}, std::pair{5, 3}}) {
        CAPTURE(n);
        CAPTURE(k);
        const HomologyRepresentation rep(n, k);
        const auto rank = rep.rank();
        CHECK(Integer(rank) == predicted_betti(n, k));
        CHECK(rep.action(SignedPermutation::identity(n)) == DenseIntegerMatrix::identity(rank));

        // Basis columns have unit coordinates.
        for (std::size_t j = 0; j < rank; ++j) {
            std::vector<Integer> cyc(rep.basis().rows());
            for (std::size_t i = 0; i < cyc.size(); ++i)
                cyc[i] = rep.basis()(i, j);
            const auto coords = rep.coordinates(cyc);
            for (std::size_t i = 0; i < rank; ++i)
                CHECK(coords[i] == (i == j ? 1 : 0));
        }

        for (int trial = 0; trial < 5; ++trial) {
            const auto g = random_wdn_element(n, rng), h = random_wdn_element(n, rng);
            const auto gs = rep.action(g), hs = rep.action(h);
            CHECK(rep.action(g * h) == gs * hs);
            CHECK(abs(determinant(gs)) == 1);
            CHECK(trace(rep.action(h * g * h.inverse())) == trace(gs));
            const auto chain = rep.chain_action(g);
            for (std::size_t col = 0; col < chain.cols(); ++col) {
                int nonzero = 0;
                for (std::size_t row = 0; row < chain.rows(); ++row)
                    if (chain(row, col) != 0) {
                        ++nonzero;
                        CHECK(abs(chain(row, col)) == 1);
                    }
                CHECK(nonzero == 1);
            }
        }
        CHECK(homology_action(n, k, SignedPermutation::identity(n)) == DenseIntegerMatrix::identity(rank));
    }
    const HomologyRepresentation rep(4, 3);
    std::vector<Integer> not_cycle(rep.basis().rows(), 0);
    not_cycle[0] = 1;
    CHECK_THROWS(rep.coordinates(not_cycle));
    CHECK(trace(DenseIntegerMatrix{{1, 2}, {3, 4}}) == 5);
}
