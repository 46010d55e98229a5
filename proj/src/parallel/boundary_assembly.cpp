#include "halfcube/complex.hpp"
#include "../detail.hpp"

#include <cstddef>

namespace halfcube {

namespace serial {

BoundaryMatrix assemble_boundary(const CellComplex& c, int degree)
{
    BoundaryMatrix m = detail::empty_boundary(c, degree);
    for (std::size_t j = 0; j < m.cols; ++j)
        m.columns[j] = detail::assemble_column(c, degree, j);
    return m;
}

} // namespace serial

namespace parallel {

BoundaryMatrix assemble_boundary(const CellComplex& c, int degree)
{
    BoundaryMatrix m = detail::empty_boundary(c, degree);
    const auto cols = static_cast<std::ptrdiff_t>(m.cols);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t j = 0; j < cols; ++j)
        m.columns[j] = detail::assemble_column(c, degree, static_cast<std::size_t>(j));
    return m;
}

} // namespace parallel

} // namespace halfcube
