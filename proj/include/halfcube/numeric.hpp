#ifndef HALFCUBE_NUMERIC_HPP
#define HALFCUBE_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace halfcube {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace halfcube

#endif
