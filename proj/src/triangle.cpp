#include "halfcube/triangle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace halfcube {

namespace {

Integer pow2(int e) { return Integer(1) << e; }

int sign_of_power(int e) { return (e % 2 == 0) ? 1 : -1; }

void check_entry(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("triangle entry (" + std::to_string(n) + ", " + std::to_string(k) +
                                    ") out of range");
}

} // namespace

Integer big_binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

TriangleTable triangle_recurrence(int n_max)
{
    if (n_max < 0)
        throw std::invalid_argument("triangle_recurrence: negative row count");
    TriangleTable t(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        t[n].assign(static_cast<std::size_t>(n) + 1, 0);
        t[n][0] = 1;
        t[n][n] = 1;
        for (int k = 1; k < n; ++k)
            t[n][k] = 2 * t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
}

Integer triangle_alternating(int n, int k)
{
    check_entry(n, k);
    Integer s = 0;
    for (int i = n - k; i <= n; ++i)
        s += sign_of_power(n - k - i) * pow2(n - i) * big_binomial(n, i);
    return s;
}

Integer triangle_positive(int n, int k)
{
    check_entry(n, k);
    const auto binom = [](int a, int b) -> Integer {
        if (a == -1 && b == -1)
            return 1;
        return big_binomial(a, b);
    };
    Integer s = 0;
    for (int i = n - k; i <= n; ++i)
        s += big_binomial(n, i) * binom(i - 1, n - k - 1);
    return s;
}

std::vector<Integer> gf_coefficients(int k, int n_max)
{
    if (k < 0 || n_max < 0)
        throw std::invalid_argument("gf_coefficients: negative argument");
    // Denominator (1 - 2x)^k (1 - x), constant term 1.
    std::vector<Integer> den{1};
    const auto multiply = [&den](const Integer& a1) {
        std::vector<Integer> next(den.size() + 1, 0);
        for (std::size_t i = 0; i < den.size(); ++i) {
            next[i] += den[i];
            next[i + 1] += a1 * den[i];
        }
        den = std::move(next);
    };
    for (int i = 0; i < k; ++i)
        multiply(-2);
    multiply(-1);

    std::vector<Integer> c(static_cast<std::size_t>(n_max) + 1, 0);
    for (int m = 0; m <= n_max; ++m) {
        Integer v = (m == k) ? 1 : 0;
        for (std::size_t j = 1; j < den.size() && j <= static_cast<std::size_t>(m); ++j)
            v -= den[j] * c[m - j];
        c[m] = v;
    }
    return c;
}

bool strehl_identity_check(int n_max)
{
    const auto t = triangle_recurrence(std::max(n_max, 0));
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k)
            if (t[n][k - 1] + t[n][k] != pow2(k) * big_binomial(n, k))
                return false;
    return true;
}

Integer betti_alternating(int n, int k)
{
    check_entry(n, k);
    Integer s = 0;
    for (int i = k; i <= n; ++i)
        s += sign_of_power(k + i) * pow2(n - i) * big_binomial(n, i);
    return s;
}

Integer predicted_betti(int n, int k)
{
    if (k < 3 || k > n)
        throw std::invalid_argument("predicted_betti: need 3 <= k <= n, got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    return triangle_alternating(n, n - k);
}

} // namespace halfcube
