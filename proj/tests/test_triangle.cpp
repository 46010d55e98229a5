#include "oracles.hpp"

#include "halfcube/triangle.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace halfcube;

namespace {

const std::vector<std::vector<long long>> kRows = {
    {1}, {1, 1}, {1, 3, 1}, {1, 5, 7, 1}, {1, 7, 17, 15, 1}, {1, 9, 31, 49, 31, 1}, {1, 11, 49, 111, 129, 63, 1},
};

/// Table by the recurrence, written out independently of the library.
std::vector<std::vector<Integer>> reference(int n_max)
{
    std::vector<std::vector<Integer>> t(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        t[n].assign(n + 1, 0);
        t[n][0] = t[n][n] = 1;
        for (int k = 1; k < n; ++k)
            t[n][k] = 2 * t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
}

} // namespace

TEST_CASE("first seven rows")
{
    const auto t = triangle_recurrence(6);
    REQUIRE(t.size() == 7);
    for (int n = 0; n <= 6; ++n) {
        REQUIRE(t[n].size() == kRows[n].size());
        for (int k = 0; k <= n; ++k)
            CHECK(t[n][k] == kRows[n][k]);
    }
    CHECK(t[4] != std::vector<Integer>(t[4].rbegin(), t[4].rend()));
    CHECK(t[6] != std::vector<Integer>(t[6].rbegin(), t[6].rend()));
}

TEST_CASE("closed formulas at anchor points")
{
    CHECK(triangle_alternating(6, 3) == 111);
    CHECK(triangle_alternating(4, 1) == 7);
    CHECK(triangle_positive(5, 2) == 31);
    CHECK(gf_coefficients(3, 6)[6] == 111);
    for (auto c : gf_coefficients(0, 20))
        CHECK(c == 1);
    for (int n = 0; n <= 20; ++n) {
        CHECK(triangle_alternating(n, n) == 1);
        CHECK(triangle_positive(n, 0) == 1);
    }
}

TEST_CASE("four routes agree up to n = 30")
{
    const auto ref = reference(30);
    const auto rec = triangle_recurrence(30);
    std::vector<std::vector<Integer>> gf(31);
    for (int k = 0; k <= 30; ++k)
        gf[k] = gf_coefficients(k, 30);
    for (int n = 0; n <= 30; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(rec[n][k] == ref[n][k]);
            CHECK(triangle_alternating(n, k) == ref[n][k]);
            CHECK(triangle_positive(n, k) == ref[n][k]);
            CHECK(gf[n - k][n] == ref[n][k]);
        }
    for (int k = 1; k <= 10; ++k)
        for (int n = 0; n < k; ++n)
            CHECK(gf[k][n] == 0);
}

TEST_CASE("Strehl identity")
{
    const auto t = reference(30);
    for (int n = 1; n <= 30; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(t[n][k - 1] + t[n][k] == (Integer(1) << k) * oracle::binomial(n, k));
    CHECK(strehl_identity_check(30));
    CHECK(t[6][2] + t[6][3] == 160);
    for (int n = 1; n <= 30; ++n) {
        CHECK(t[n][n - 1] == (Integer(1) << n) - 1);
        CHECK(t[n][1] == 2 * n - 1);
    }
}

TEST_CASE("binomials and predicted Betti numbers")
{
    CHECK(big_binomial(5, 2) == 10);
    CHECK(big_binomial(5, 6) == 0);
    CHECK(big_binomial(5, -1) == 0);
    CHECK(big_binomial(60, 30) == Integer("118264581564861424"));
    CHECK(predicted_betti(4, 3) == 7);
    CHECK(predicted_betti(6, 3) == 111);
    for (int n = 3; n <= 12; ++n)
        CHECK(predicted_betti(n, n) == 1);
    for (int n = 4; n <= 12; ++n)
        for (int k = 3; k <= n; ++k)
            CHECK(betti_alternating(n, k) == predicted_betti(n, k));
    CHECK_THROWS_AS(predicted_betti(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(predicted_betti(4, 5), std::invalid_argument);
}
