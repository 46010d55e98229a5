#include "halfcube/homology.hpp"
#include "halfcube/morse.hpp"
#include "halfcube/triangle.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

using namespace halfcube;

namespace {

/// Four vertices and the four edges of a square, above the empty cell.
HasseDiagram square()
{
    HasseDiagram h;
    h.add(-1, {});
    for (int i = 0; i < 4; ++i)
        h.add(0, {0});
    h.add(1, {1, 2}); // 5: ab
    h.add(1, {2, 3}); // 6: bc
    h.add(1, {3, 4}); // 7: cd
    h.add(1, {4, 1}); // 8: da
    return h;
}

} // namespace

TEST_CASE("Hasse diagram layout")
{
    const auto c = build_complex(4, 4);
    const auto h = hasse_diagram(c);
    CHECK(h.size() == c.total() + 1);
    CHECK(h.dims[0] == -1);
    CHECK(h.facets[0].empty());
    for (int d = 0; d <= 3; ++d)
        for (std::size_t i = 0; i < c.count(d); ++i) {
            const auto node = node_of(c, {d, i});
            CHECK(h.dims[node] == d);
            const auto back = cell_of(c, node);
            REQUIRE(back);
            CHECK(*back == CellRef{d, i});
            CHECK(h.facets[node].size() == (d == 0 ? 1 : c.facets({d, i}).size()));
        }
    CHECK_FALSE(cell_of(c, 0));
    CHECK_THROWS_AS(cell_of(c, h.size()), std::out_of_range);
    HasseDiagram bad;
    CHECK_THROWS_AS(bad.add(0, {0}), std::invalid_argument);
}

TEST_CASE("pair count and coverage of V_k")
{
    const auto c = build_complex(5, 3);
    const auto m = build_matching_Vk(c);
    CHECK(m.pairs.size() == 80);
    CHECK(m.coordinate == 4);

    for (int n = 4; n <= 6; ++n)
        for (int k = 3; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            const auto cx = build_complex(n, k);
            const auto mk = build_matching_Vk(cx);
            std::set<std::size_t> used;
            for (const auto& p : mk.pairs) {
                used.insert(p.lower);
                used.insert(p.upper);
            }
            for (int d = 0; d <= n; ++d)
                for (std::size_t i = 0; i < cx.count(d); ++i) {
                    const auto& f = cx.cell({d, i});
                    const bool paired = used.count(node_of(cx, {d, i})) > 0;
                    if (d >= k)
                        CHECK(paired);
                    if (f.kind != FaceKind::SimplexK)
                        CHECK_FALSE(paired);
                    else if (f.mask.size() >= k + 1)
                        CHECK(paired);
                    else if (f.mask.size() == k)
                        CHECK(paired == !f.mask.contains(n - 1));
                    else
                        CHECK_FALSE(paired);
                }
        }
}

TEST_CASE("V_k is an acyclic discrete vector field")
{
    for (int n = 4; n <= 6; ++n)
        for (int k = 3; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            const auto c = build_complex(n, k);
            const auto m = build_matching_Vk(c);
            const auto field = validate_vector_field(m);
            CHECK_MESSAGE(field.valid, field.problem);
            const auto cert = check_acyclic(m);
            CHECK(cert.acyclic);
            CHECK(cert.order.size() == m.hasse.size());

            // The order really is topological for H(V).
            std::vector<std::size_t> pos(m.hasse.size());
            for (std::size_t i = 0; i < cert.order.size(); ++i)
                pos[cert.order[i]] = i;
            std::set<std::pair<std::size_t, std::size_t>> matched;
            for (const auto& p : m.pairs)
                matched.insert({p.lower, p.upper});
            for (std::size_t cell = 0; cell < m.hasse.size(); ++cell)
                for (auto f : m.hasse.facets[cell]) {
                    if (matched.count({f, cell}))
                        CHECK(pos[cell] < pos[f]);
                    else
                        CHECK(pos[f] < pos[cell]);
                }

            const auto census = unpaired_census(m);
            CHECK(census.empty_cell_unpaired);
            for (std::size_t p = static_cast<std::size_t>(k); p < census.unpaired.size(); ++p)
                CHECK(census.unpaired[p] == 0);
            CHECK(census.alternating_sum() == euler_characteristic(c));
            const auto h = homology_of(c, true, Certification::Rank);
            CHECK(census.unpaired[k - 1] >= static_cast<std::size_t>(h.betti[k - 1]));
        }
}

TEST_CASE("any fixed coordinate gives an acyclic matching")
{
    const auto c = build_complex(5, 4);
    for (int j = 0; j < 5; ++j) {
        const auto m = build_matching_Vk(c, j);
        CHECK(m.coordinate == j);
        CHECK(validate_vector_field(m).valid);
        CHECK(check_acyclic(m).acyclic);
        CHECK(unpaired_census(m).alternating_sum() == euler_characteristic(c));
    }
    CHECK_THROWS_AS(build_matching_Vk(c, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_matching_Vk(c, -1), std::invalid_argument);
    CHECK_THROWS_AS(build_matching_Vk(build_complex(5, 6)), std::invalid_argument);
}

TEST_CASE("empty matching is acyclic")
{
    MorseMatching m{hasse_diagram(build_complex(4, 3)), {}, -1};
    CHECK(validate_vector_field(m).valid);
    const auto cert = check_acyclic(m);
    CHECK(cert.acyclic);
    const auto census = unpaired_census(m);
    CHECK(census.alternating_sum() == 8);
}

TEST_CASE("closed V-path yields a cycle witness")
{
    MorseMatching m{square(), {{1, 5}, {2, 6}, {3, 7}, {4, 8}}, -1};
    REQUIRE(validate_vector_field(m).valid);
    const auto cert = check_acyclic(m);
    CHECK_FALSE(cert.acyclic);
    REQUIRE(cert.cycle.size() == 8);
    std::set<std::pair<std::size_t, std::size_t>> matched;
    for (const auto& p : m.pairs)
        matched.insert({p.lower, p.upper});
    for (std::size_t i = 0; i < cert.cycle.size(); ++i) {
        const auto from = cert.cycle[i], to = cert.cycle[(i + 1) % cert.cycle.size()];
        const auto& up = m.hasse.facets[to];
        const auto& down = m.hasse.facets[from];
        const bool upward = std::find(up.begin(), up.end(), from) != up.end() && !matched.count({from, to});
        const bool downward = std::find(down.begin(), down.end(), to) != down.end() && matched.count({to, from});
        CHECK((upward || downward));
    }

    MorseMatching open{square(), {{1, 5}, {2, 6}, {3, 7}}, -1};
    CHECK(check_acyclic(open).acyclic);
}

TEST_CASE("invalid vector fields are rejected")
{
    MorseMatching skip{square(), {{1, 6}}, -1};
    CHECK_FALSE(validate_vector_field(skip).valid);
    MorseMatching reuse{square(), {{1, 5}, {1, 8}}, -1};
    CHECK_FALSE(validate_vector_field(reuse).valid);
    MorseMatching empty_cell{square(), {{0, 1}}, -1};
    CHECK_FALSE(validate_vector_field(empty_cell).valid);
    MorseMatching codim{square(), {{0, 5}}, -1};
    CHECK_FALSE(validate_vector_field(codim).valid);
    MorseMatching missing{square(), {{1, 50}}, -1};
    CHECK_FALSE(validate_vector_field(missing).valid);
}

TEST_CASE("pair export")
{
    const auto c = build_complex(4, 3);
    const auto m = build_matching_Vk(c);
    std::ostringstream os;
    write_pairs(os, m, c);
    std::istringstream is(os.str());
    std::string line;
    std::size_t lines = 0;
    while (std::getline(is, line)) {
        ++lines;
        CHECK(line.front() == '[');
        CHECK(line.find("] [") != std::string::npos);
    }
    CHECK(lines == m.pairs.size());
    CHECK(key_string({3, 5, 6, 9}) == "[3,5,6,9]");
}
