#include "fsimple/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "fsimple/errors.hpp"

namespace fsimple {

namespace {

// ad - bc with one rounding (Kahan's fma trick).
double det2(double a, double b, double c, double d) noexcept {
  const double w = b * c;
  const double e = std::fma(-b, c, w);
  const double f = std::fma(a, d, -w);
  return f + e;
}

// Map sending p -> 0 and q -> infinity, not yet scaled to put anything at i.
Isometry base_frame(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (q.is_infinite()) return Isometry(1.0, -p.value(), 0.0, 1.0);
  if (p.is_infinite()) return Isometry(0.0, -1.0, 1.0, -q.value());
  const double x = p.value(), y = q.value();
  if (x > y) return Isometry(1.0, -x, 1.0, -y);
  return Isometry(-1.0, x, 1.0, -y);
}

// Quotients that overflow are the point at infinity.
BoundaryPoint from_quotient(double v) noexcept {
  return std::isfinite(v) ? BoundaryPoint::real(v) : BoundaryPoint::infinity();
}

}  // namespace

BoundaryPoint BoundaryPoint::real(double x) {
  if (!std::isfinite(x)) throw InvalidArgument("boundary point must be finite or infinity()");
  BoundaryPoint p;
  p.x_ = x;
  return p;
}

double BoundaryPoint::value() const {
  if (infinite_) throw InvalidArgument("point at infinity has no real value");
  return x_;
}

std::complex<double> BoundaryPoint::disk_point() const noexcept {
  if (infinite_) return {1.0, 0.0};
  const double n = x_ * x_ + 1.0;
  return {(x_ * x_ - 1.0) / n, -2.0 * x_ / n};
}

double BoundaryPoint::disk_angle() const noexcept {
  if (infinite_) return 0.0;
  double t = std::atan2(-2.0 * x_, x_ * x_ - 1.0);
  if (t < 0.0) t += 2.0 * std::numbers::pi;
  if (t >= 2.0 * std::numbers::pi) t = 0.0;
  return t;
}

double chordal_distance(const BoundaryPoint& p, const BoundaryPoint& q) noexcept {
  if (p.is_infinite() && q.is_infinite()) return 0.0;
  if (p.is_infinite() || q.is_infinite()) {
    const double x = p.is_infinite() ? q.value() : p.value();
    return 2.0 / std::sqrt(1.0 + x * x);
  }
  const double x = p.value(), y = q.value();
  return 2.0 * std::abs(x - y) / std::sqrt((1.0 + x * x) * (1.0 + y * y));
}

GeodesicLine::GeodesicLine(BoundaryPoint p, BoundaryPoint q) : p_(p), q_(q) {
  if (p == q) throw InvalidArgument("geodesic line needs two distinct endpoints");
  if (p_.is_infinite() || (!q_.is_infinite() && q_.value() < p_.value())) std::swap(p_, q_);
}

Isometry::Isometry(double a, double b, double c, double d) : m_{a, b, c, d} {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d)))
    throw InvalidArgument("isometry entries must be finite");
  if (!(det2(a, b, c, d) > 0.0)) throw InvalidArgument("isometry needs positive determinant");
  rescale(0.0);
  fix_sign();
}

Isometry Isometry::from_normalized(const std::array<double, 4>& e) {
  for (double x : e)
    if (!std::isfinite(x)) throw InvalidArgument("isometry entries must be finite");
  if (std::abs(det2(e[0], e[1], e[2], e[3]) - 1.0) > 1e-6)
    throw InvalidArgument("entries are not normalized");
  return Isometry(Raw{}, e[0], e[1], e[2], e[3]);
}

void Isometry::normalize() noexcept {
  // Products of unit-determinant matrices only drift by rounding, and for
  // large entries that drift grows with |ad| + |bc| while the entries are
  // still accurate; rescaling them would spread the drift into every entry.
  // So products are rescaled only on drift that is gross relative to the
  // entry size, and constructors always.
  rescale(1e-6);
  fix_sign();
}

void Isometry::rescale(double slack) noexcept {
  const double det = det2(m_[0], m_[1], m_[2], m_[3]);
  const double size = std::max(1.0, std::abs(m_[0] * m_[3]) + std::abs(m_[1] * m_[2]));
  if (det > 0.0 && std::abs(det - 1.0) > slack * size) {
    const double s = 1.0 / std::sqrt(det);
    for (double& x : m_) x *= s;
  }
}

void Isometry::fix_sign() noexcept {
  // Entries below this are treated as rounding noise when picking the sign.
  double scale = 0.0;
  for (double x : m_) scale = std::max(scale, std::abs(x));
  const double thresh = 1e-12 * scale;
  for (double x : m_) {
    if (std::abs(x) > thresh) {
      if (x < 0.0)
        for (double& y : m_) y = -y;
      break;
    }
  }
}

double Isometry::determinant() const noexcept { return det2(m_[0], m_[1], m_[2], m_[3]); }

Isometry Isometry::inverse() const noexcept {
  Isometry r(Raw{}, m_[3], -m_[1], -m_[2], m_[0]);
  r.normalize();
  return r;
}

Point Isometry::apply(Point z) const noexcept {
  // Im = y / |cz + d|^2 for unit determinant; the direct quotient loses it to
  // cancellation once the entries are large.
  const Point w = m_[2] * z + m_[3];
  const double n = std::norm(w);
  const double x = z.real(), y = z.imag();
  const double re = (m_[0] * x + m_[1]) * (m_[2] * x + m_[3]) + m_[0] * m_[2] * y * y;
  return {re / n, y / n};
}

BoundaryPoint Isometry::apply(const BoundaryPoint& x) const noexcept {
  if (x.is_infinite()) {
    if (m_[2] == 0.0) return BoundaryPoint::infinity();
    return from_quotient(m_[0] / m_[2]);
  }
  const double v = x.value();
  const double den = m_[2] * v + m_[3];
  if (den == 0.0) return BoundaryPoint::infinity();
  return from_quotient((m_[0] * v + m_[1]) / den);
}

GeodesicLine Isometry::apply(const GeodesicLine& l) const {
  return GeodesicLine(apply(l.first()), apply(l.second()));
}

double Isometry::distance(const Isometry& o) const noexcept {
  double plus = 0.0, minus = 0.0;
  for (int i = 0; i < 4; ++i) {
    plus = std::max(plus, std::abs(m_[i] - o.m_[i]));
    minus = std::max(minus, std::abs(m_[i] + o.m_[i]));
  }
  return std::min(plus, minus);
}

bool Isometry::is_identity(double tol) const noexcept { return distance(Isometry()) <= tol; }

Isometry compose(const Isometry& f, const Isometry& g) noexcept {
  const auto& x = f.m_;
  const auto& y = g.m_;
  Isometry r(Isometry::Raw{}, x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
             x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]);
  r.normalize();
  return r;
}

bool approx_equal(const Isometry& f, const Isometry& g, double tol) noexcept {
  return f.distance(g) <= tol;
}

std::ostream& operator<<(std::ostream& os, const Isometry& g) {
  return os << "[[" << g.a() << ", " << g.b() << "], [" << g.c() << ", " << g.d() << "]]";
}

IsometryKind classify(const Isometry& g, double tol) {
  if (g.is_identity(tol)) throw InvalidArgument("trivial element");
  const double gap = std::abs(g.trace()) - 2.0;
  if (std::abs(gap) <= tol) return IsometryKind::parabolic;
  if (std::abs(gap) <= 10.0 * tol)
    throw Uncertain("trace within tolerance band of 2: cannot classify");
  return gap > 0.0 ? IsometryKind::hyperbolic : IsometryKind::elliptic;
}

double translation_length(const Isometry& g) {
  if (classify(g) != IsometryKind::hyperbolic)
    throw InvalidArgument("translation length needs a hyperbolic element");
  return 2.0 * std::acosh(std::abs(g.trace()) / 2.0);
}

OrientedAxis projective_fixed_points(double a, double b, double c, double d) {
  // Rescale so the largest entry is 1; the fixed points do not depend on it.
  const double s = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (!(s > 0.0) || !std::isfinite(s)) throw InvalidArgument("degenerate matrix");
  a /= s, b /= s, c /= s, d /= s;
  if (c == 0.0) {
    if (a == d) throw InvalidArgument("matrix is not hyperbolic");
    const auto fin = BoundaryPoint::real(b / (d - a));
    if (std::abs(a) > std::abs(d)) return {fin, BoundaryPoint::infinity()};
    return {BoundaryPoint::infinity(), fin};
  }
  // c z^2 + (d - a) z - b = 0, solved in the cancellation-free form.
  const double B = d - a;
  const double disc = B * B + 4.0 * b * c;
  if (!(disc > 0.0)) throw InvalidArgument("matrix is not hyperbolic");
  const double q = -0.5 * (B + std::copysign(std::sqrt(disc), B));
  const double z1 = q / c;
  const double z2 = -b / q;
  // Eigenvector (z, 1) has eigenvalue cz + d; the larger modulus attracts.
  const double e1 = std::abs(c * z1 + d), e2 = std::abs(c * z2 + d);
  if (e1 > e2) return {BoundaryPoint::real(z2), BoundaryPoint::real(z1)};
  return {BoundaryPoint::real(z1), BoundaryPoint::real(z2)};
}

OrientedAxis oriented_axis(const Isometry& g) {
  if (classify(g) != IsometryKind::hyperbolic) throw InvalidArgument("axis needs a hyperbolic element");
  return projective_fixed_points(g.a(), g.b(), g.c(), g.d());
}

GeodesicLine axis(const Isometry& g) { return oriented_axis(g).line(); }

bool link(const GeodesicLine& l1, const GeodesicLine& l2) {
  for (const auto* x : {&l1.first(), &l1.second()})
    for (const auto* y : {&l2.first(), &l2.second()})
      if (chordal_distance(*x, *y) < kGeomEps) throw InvalidArgument("degenerate configuration");
  // l1.first() is finite by the canonical ordering.
  const double p = l1.first().value();
  const auto inside = [&](const BoundaryPoint& x) {
    if (x.is_infinite()) return false;
    const double v = x.value();
    if (l1.second().is_infinite()) return v > p;
    return p < v && v < l1.second().value();
  };
  return inside(l2.first()) != inside(l2.second());
}

double hyperbolic_distance(Point z1, Point z2) {
  const double y1 = z1.imag(), y2 = z2.imag();
  if (!(y1 > 0.0 && y2 > 0.0) || !std::isfinite(std::abs(z1)) || !std::isfinite(std::abs(z2)))
    throw InvalidArgument("hyperbolic distance needs points in the open upper half-plane");
  return 2.0 * std::asinh(std::abs(z1 - z2) / (2.0 * std::sqrt(y1 * y2)));
}

Point project_to_line(Point z, const OrientedAxis& line) {
  const Isometry m = base_frame(line.repelling, line.attracting);
  const Point w = m.apply(z);
  return m.inverse().apply(Point(0.0, std::abs(w)));
}

Isometry frame_for(const OrientedAxis& line, Point foot) {
  const Isometry m = base_frame(line.repelling, line.attracting);
  const double y = std::abs(m.apply(foot));
  const double r = std::sqrt(y);
  return Isometry(1.0 / r, 0.0, 0.0, r) * m;
}

Isometry translation_along(const OrientedAxis& line, double t) {
  const Isometry m = base_frame(line.repelling, line.attracting);
  return m.inverse() * translation_up(t) * m;
}

Isometry rotation_about_i(double theta) noexcept {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return Isometry(c, s, -s, c);
}

Isometry translation_up(double d) {
  return Isometry(std::exp(d / 2.0), 0.0, 0.0, std::exp(-d / 2.0));
}

std::complex<double> to_disk(Point z) noexcept {
  const Point i(0.0, 1.0);
  return (z - i) / (z + i);
}

Point from_disk(std::complex<double> w) noexcept {
  const Point i(0.0, 1.0);
  return i * (1.0 + w) / (1.0 - w);
}

}  // namespace fsimple
