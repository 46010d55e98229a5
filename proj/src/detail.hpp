// Internal helpers shared between the serial and OpenMP kernels.
#ifndef HALFCUBE_SRC_DETAIL_HPP
#define HALFCUBE_SRC_DETAIL_HPP

#include "halfcube/complex.hpp"

#include <vector>

namespace halfcube::detail {

std::vector<SparseEntry> assemble_column(const CellComplex& c, int degree, std::size_t col);
BoundaryMatrix empty_boundary(const CellComplex& c, int degree);

} // namespace halfcube::detail

#endif
