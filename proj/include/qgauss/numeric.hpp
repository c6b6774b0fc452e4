#ifndef QGAUSS_NUMERIC_HPP
#define QGAUSS_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace qgauss {

// Arbitrary-precision integers and rationals. Coefficients at the scales
// this library scans exceed 64 bits, so every coefficient-carrying value
// goes through BigInt.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

} // namespace qgauss

#endif
