// The triangle T(n, k) with T(n, 0) = T(n, n) = 1 and
// T(n, k) = 2 T(n-1, k-1) + T(n-1, k), computed four independent ways.
// Entries outside 0 <= k <= n are zero.

#ifndef HALFCUBE_TRIANGLE_HPP
#define HALFCUBE_TRIANGLE_HPP

#include "halfcube/numeric.hpp"

#include <vector>

namespace halfcube {

/// Row n holds T(n, 0..n).
using TriangleTable = std::vector<std::vector<Integer>>;

/// Exact binomial coefficient; zero unless 0 <= k <= n.
Integer big_binomial(int n, int k);

TriangleTable triangle_recurrence(int n_max);

/// Sum over i = n-k..n of (-1)^(n-k-i) 2^(n-i) C(n, i).
Integer triangle_alternating(int n, int k);

/// Sum over i = n-k..n of C(n, i) C(i-1, n-k-1), with C(-1, -1) = 1.
Integer triangle_positive(int n, int k);

/// T(n, n-k) for n = 0..n_max, read off x^k / ((1-2x)^k (1-x)).
std::vector<Integer> gf_coefficients(int k, int n_max);

/// T(n, k-1) + T(n, k) == 2^k C(n, k) for all 1 <= k <= n <= n_max.
bool strehl_identity_check(int n_max);

/// Sum over i = k..n of (-1)^(k+i) 2^(n-i) C(n, i).
Integer betti_alternating(int n, int k);

/// T(n, n-k); requires 3 <= k <= n.
Integer predicted_betti(int n, int k);

} // namespace halfcube

#endif
