#pragma once

// Extended-precision copies of the group generators, for deciding crossing
// configurations that double precision cannot separate.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <vector>

#include "fsimple/surface_group.hpp"

namespace fsimple {

using Precise = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>,
                                              boost::multiprecision::et_off>;

struct PreciseMat {
  Precise a{1}, b{0}, c{0}, d{1};
};

PreciseMat operator*(const PreciseMat& x, const PreciseMat& y);
PreciseMat inverse(const PreciseMat& m);  // assumes unit determinant

// Generators rebuilt from the surface parameters at 200 decimal digits, with
// unit determinant.
std::vector<PreciseMat> precise_generators(const SurfaceGroup& G);

}  // namespace fsimple
