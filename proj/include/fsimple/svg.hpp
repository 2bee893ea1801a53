#pragma once

// Static disk-model pictures.

#include <complex>
#include <string>
#include <vector>

#include "fsimple/geometry.hpp"

namespace fsimple {

struct DiskPicture {
  std::vector<std::complex<double>> polygon;  // disk-model vertices, joined by geodesics
  std::vector<GeodesicLine> axes;    // drawn as geodesic arcs
  std::vector<BoundaryPoint> ticks;  // limit-set sample
  std::size_t maxTicks = 4000;       // evenly thinned beyond this
  std::string title;
};

// Fixed-precision coordinates, so equal inputs give byte-identical files.
std::string render_svg(const DiskPicture& pic);

}  // namespace fsimple
