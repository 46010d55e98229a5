#include "halfcube/integer_matrix.hpp"

#include "../sparse_elimination.hpp"

#include <stdexcept>
#include <string>

namespace halfcube {

namespace {

void check_modulus(std::uint32_t p)
{
    if (p < 2 || p >= (std::uint32_t{1} << 31))
        throw std::invalid_argument("rank_mod_p: modulus out of range");
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0)
            throw std::invalid_argument("rank_mod_p: modulus " + std::to_string(p) + " is not prime");
}

} // namespace

namespace serial {

std::size_t rank_mod_p(const BoundaryMatrix& m, std::uint32_t p)
{
    check_modulus(p);
    return detail::sparse_rank(m, detail::ModPField{p}, detail::Schedule::Serial);
}

} // namespace serial

namespace parallel {

std::size_t rank_mod_p(const BoundaryMatrix& m, std::uint32_t p)
{
    check_modulus(p);
    return detail::sparse_rank(m, detail::ModPField{p}, detail::Schedule::OpenMP);
}

} // namespace parallel

} // namespace halfcube
