#pragma once

// Hyperbolic-plane primitives in the upper half-plane model.
//
// An Isometry is an element of PSL(2,R) acting by z -> (az+b)/(cz+d). Entries
// are renormalized to determinant one after every construction and
// composition, and the sign is fixed so that the first significant entry in
// reading order is positive; equality is always tested up to global sign.

#include <array>
#include <complex>
#include <iosfwd>

namespace fsimple {

inline constexpr double kGeomEps = 1e-9;   // geometric predicates
inline constexpr double kDetEps = 1e-12;   // determinant drift

using Point = std::complex<double>;  // interior point, Im > 0

class BoundaryPoint {
 public:
  BoundaryPoint() = default;  // the point 0
  static BoundaryPoint infinity() {
    BoundaryPoint p;
    p.infinite_ = true;
    return p;
  }
  static BoundaryPoint real(double x);

  bool is_infinite() const noexcept { return infinite_; }
  double value() const;  // throws InvalidArgument at infinity

  // Position on the unit circle after the Cayley map z -> (z-i)/(z+i).
  std::complex<double> disk_point() const noexcept;
  double disk_angle() const noexcept;  // in [0, 2*pi)

  friend bool operator==(const BoundaryPoint& p, const BoundaryPoint& q) noexcept {
    return p.infinite_ == q.infinite_ && (p.infinite_ || p.x_ == q.x_);
  }

 private:
  bool infinite_ = false;
  double x_ = 0.0;
};

// Euclidean distance between the two points on the unit circle.
double chordal_distance(const BoundaryPoint& p, const BoundaryPoint& q) noexcept;

// Unordered pair of distinct boundary points, stored finite-ascending with
// infinity last so that equality ignores the order given at construction.
class GeodesicLine {
 public:
  GeodesicLine(BoundaryPoint p, BoundaryPoint q);
  const BoundaryPoint& first() const noexcept { return p_; }
  const BoundaryPoint& second() const noexcept { return q_; }
  friend bool operator==(const GeodesicLine&, const GeodesicLine&) = default;

 private:
  BoundaryPoint p_, q_;
};

enum class IsometryKind { elliptic, parabolic, hyperbolic };

class Isometry {
 public:
  Isometry() = default;  // identity
  // Throws InvalidArgument unless ad - bc > 0.
  Isometry(double a, double b, double c, double d);
  // Keeps the given bits; for entries that were already normalized (cache
  // files). Throws InvalidArgument if the determinant is not 1 within 1e-6.
  static Isometry from_normalized(const std::array<double, 4>& e);

  double a() const noexcept { return m_[0]; }
  double b() const noexcept { return m_[1]; }
  double c() const noexcept { return m_[2]; }
  double d() const noexcept { return m_[3]; }
  const std::array<double, 4>& entries() const noexcept { return m_; }

  double trace() const noexcept { return m_[0] + m_[3]; }
  double determinant() const noexcept;
  Isometry inverse() const noexcept;

  Point apply(Point z) const noexcept;
  BoundaryPoint apply(const BoundaryPoint& x) const noexcept;
  GeodesicLine apply(const GeodesicLine& l) const;

  // Max-entry distance to `other`, minimized over the global sign.
  double distance(const Isometry& other) const noexcept;
  bool is_identity(double tol = kGeomEps) const noexcept;

 private:
  struct Raw {};
  Isometry(Raw, double a, double b, double c, double d) noexcept : m_{a, b, c, d} {}
  friend Isometry compose(const Isometry& f, const Isometry& g) noexcept;
  void normalize() noexcept;
  void rescale(double slack) noexcept;
  void fix_sign() noexcept;

  std::array<double, 4> m_{1.0, 0.0, 0.0, 1.0};
};

// f after g: the matrix product f*g.
Isometry compose(const Isometry& f, const Isometry& g) noexcept;
inline Isometry operator*(const Isometry& f, const Isometry& g) noexcept { return compose(f, g); }
bool approx_equal(const Isometry& f, const Isometry& g, double tol = kGeomEps) noexcept;
std::ostream& operator<<(std::ostream& os, const Isometry& g);

// Throws InvalidArgument("trivial element") on +-identity and Uncertain when
// |tr| sits within the band (tol, 10*tol] around 2.
IsometryKind classify(const Isometry& g, double tol = kGeomEps);

// 2*arccosh(|tr g|/2); throws InvalidArgument unless g is hyperbolic.
double translation_length(const Isometry& g);

struct OrientedAxis {
  BoundaryPoint repelling;
  BoundaryPoint attracting;
  GeodesicLine line() const { return {repelling, attracting}; }
};

OrientedAxis oriented_axis(const Isometry& g);
GeodesicLine axis(const Isometry& g);

// Fixed points of a hyperbolic 2x2 matrix given up to positive or negative
// scale. Used where the matrix entries would overflow a normalized Isometry.
OrientedAxis projective_fixed_points(double a, double b, double c, double d);

// True iff the endpoint pairs alternate around the boundary circle, i.e. the
// geodesics cross. Throws InvalidArgument("degenerate configuration") when two
// of the four endpoints coincide within kGeomEps (chordal metric).
bool link(const GeodesicLine& l1, const GeodesicLine& l2);

// Throws InvalidArgument for points that are not in the open upper half-plane.
double hyperbolic_distance(Point z1, Point z2);

// Orthogonal projection of z onto the geodesic.
Point project_to_line(Point z, const OrientedAxis& line);

// Isometry sending repelling -> 0, attracting -> infinity and foot -> i.
// `foot` must lie on the line.
Isometry frame_for(const OrientedAxis& line, Point foot);

// Translation by t along the oriented line (towards the attracting end).
Isometry translation_along(const OrientedAxis& line, double t);

// Counterclockwise rotation by theta about i, and translation by d along
// the imaginary axis (upwards); in the disk model "up" at the centre is the
// direction of angle 0.
Isometry rotation_about_i(double theta) noexcept;
Isometry translation_up(double d);

std::complex<double> to_disk(Point z) noexcept;
Point from_disk(std::complex<double> w) noexcept;

}  // namespace fsimple
