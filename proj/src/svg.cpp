#include "fsimple/svg.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fsimple/format.hpp"

namespace fsimple {

namespace {

using C = std::complex<double>;

constexpr double kScale = 200.0;  // disk radius in pixels
constexpr double kPad = 20.0;
constexpr int kSamples = 96;

std::string coord(C w) {
  return fmt_fixed(kPad + kScale * (1.0 + w.real()), 3) + "," +
         fmt_fixed(kPad + kScale * (1.0 - w.imag()), 3);
}

std::string xy(C w, const char* idx) {
  return std::string("x") + idx + "=\"" + fmt_fixed(kPad + kScale * (1.0 + w.real()), 3) + "\" y" + idx +
         "=\"" + fmt_fixed(kPad + kScale * (1.0 - w.imag()), 3) + "\"";
}

// Points along the disk geodesic segment from p to q.
std::vector<C> segment(C p, C q) {
  const auto to0 = [&](C z) { return (z - p) / (1.0 - std::conj(p) * z); };
  const auto back = [&](C w) { return (w + p) / (1.0 + std::conj(p) * w); };
  const C end = to0(q);
  std::vector<C> out;
  for (int k = 0; k <= kSamples; ++k) out.push_back(back(end * (static_cast<double>(k) / kSamples)));
  return out;
}

// Points along the complete geodesic with the given ideal endpoints.
std::vector<C> full_line(const GeodesicLine& l) {
  const double a = l.first().disk_angle(), b = l.second().disk_angle();
  const C p = std::polar(1.0, a), q = std::polar(1.0, b);
  const double half = std::remainder(b - a, 2.0 * std::numbers::pi) / 2.0;
  std::vector<C> out;
  if (std::abs(std::abs(half) - std::numbers::pi / 2.0) < 1e-9) {
    for (int k = 0; k <= kSamples; ++k) {
      const double t = static_cast<double>(k) / kSamples;
      out.push_back(p * (1.0 - t) + q * t);
    }
    return out;
  }
  // Circle orthogonal to the unit circle through p and q.
  const double mid = a + half;
  const C centre = std::polar(1.0 / std::cos(half), mid);
  const double radius = std::abs(std::tan(half));
  const double s0 = std::arg(p - centre), s1 = std::arg(q - centre);
  const double sweep = std::remainder(s1 - s0, 2.0 * std::numbers::pi);
  for (int k = 0; k <= kSamples; ++k)
    out.push_back(centre + std::polar(radius, s0 + sweep * static_cast<double>(k) / kSamples));
  return out;
}

void polyline(std::ostringstream& os, const std::vector<C>& pts, const char* style) {
  os << "<polyline fill=\"none\" " << style << " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << coord(pts[i]);
  os << "\"/>\n";
}

}  // namespace

std::string render_svg(const DiskPicture& pic) {
  std::ostringstream os;
  const std::string size = fmt_fixed(2.0 * (kScale + kPad), 0);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  if (!pic.title.empty()) os << "<title>" << pic.title << "</title>\n";
  os << "<circle cx=\"" << fmt_fixed(kPad + kScale, 3) << "\" cy=\"" << fmt_fixed(kPad + kScale, 3)
     << "\" r=\"" << fmt_fixed(kScale, 3) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (std::size_t i = 0; i < pic.polygon.size(); ++i)
    polyline(os, segment(pic.polygon[i], pic.polygon[(i + 1) % pic.polygon.size()]),
             "stroke=\"#1f4e9a\" stroke-width=\"1.2\"");
  for (const GeodesicLine& l : pic.axes) polyline(os, full_line(l), "stroke=\"#b03a2e\" stroke-width=\"0.8\"");
  const std::size_t n = pic.ticks.size();
  const std::size_t step = n > pic.maxTicks && pic.maxTicks > 0 ? (n + pic.maxTicks - 1) / pic.maxTicks : 1;
  for (std::size_t i = 0; i < n; i += step) {
    const double t = pic.ticks[i].disk_angle();
    os << "<line " << xy(std::polar(1.0, t), "1") << " " << xy(std::polar(1.04, t), "2")
       << " stroke=\"#117a65\" stroke-width=\"0.5\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace fsimple
