#include "fsimple/surface_group.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "fsimple/errors.hpp"
#include "fsimple/precise.hpp"

#include <boost/math/constants/constants.hpp>

namespace fsimple {

namespace {

constexpr double kPi = std::numbers::pi;

template <class T>
T pi() {
  return boost::math::constants::pi<T>();
}

double acosh_of(double x) { return std::acosh(x); }
Precise acosh_of(const Precise& x) { return log(x + sqrt(x * x - 1)); }

// Plain 2x2 real matrix; determinant may be -1 (reflections act on conj z).
template <class T>
struct Mat {
  T a, b, c, d;
};

template <class T>
Mat<T> mul(const Mat<T>& x, const Mat<T>& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

template <class T>
Mat<T> inv(const Mat<T>& x) {
  const T det = x.a * x.d - x.b * x.c;
  return {x.d / det, -x.b / det, -x.c / det, x.a / det};
}

template <class T>
Mat<T> rot(const T& theta) {
  using std::cos, std::sin;
  const T c = cos(theta / 2), s = sin(theta / 2);
  return {c, s, -s, c};
}

template <class T>
Mat<T> up(const T& d) {
  using std::exp;
  return {exp(d / 2), T(0), T(0), exp(-d / 2)};
}

// Reflection in the line frame(imaginary axis).
template <class T>
Mat<T> reflect_in(const Mat<T>& frame) {
  const Mat<T> flip{T(-1), T(0), T(0), T(1)};
  return mul(mul(frame, flip), inv(frame));
}

template <class T>
Mat<T> conj(const Mat<T>& g, const Mat<T>& h) {
  return mul(mul(h, g), inv(h));
}

template <class T>
struct Pt {
  T x, y;
};

template <class T>
Pt<T> apply(const Mat<T>& m, const Pt<T>& z) {
  // (a z + b) / (c z + d) for z = x + iy.
  const T nr = m.a * z.x + m.b, ni = m.a * z.y, dr = m.c * z.x + m.d, di = m.c * z.y;
  const T n = dr * dr + di * di;
  return {(nr * dr + ni * di) / n, (ni * dr - nr * di) / n};
}

// Hyperboloid-model centroid of points of the upper half-plane.
template <class T>
Pt<T> centroid(const std::vector<Pt<T>>& pts) {
  using std::sqrt;
  T X(0), Y(0), Tt(0);
  for (const Pt<T>& z : pts) {
    const T r2 = z.x * z.x + z.y * z.y;
    X += z.x / z.y;
    Y += (r2 - 1) / (2 * z.y);
    Tt += (r2 + 1) / (2 * z.y);
  }
  const T n = sqrt(Tt * Tt - X * X - Y * Y);
  X /= n, Y /= n, Tt /= n;
  const T y = 1 / (Tt - Y);
  return {X * y, y};
}

template <class T>
std::vector<Mat<T>> octagon_mats() {
  using std::sqrt;
  // Inradius of the regular octagon with angles pi/4: cosh r = cot(pi/8).
  const T r = acosh_of(1 + sqrt(T(2)));
  // x_k glues side k+4 to side k (side k faces direction k*pi/4 from the centre).
  Mat<T> x[4];
  for (int k = 0; k < 4; ++k) {
    const T th = k * pi<T>() / 4;
    x[k] = mul(mul(rot<T>(th + pi<T>()), up<T>(2 * r)), rot<T>(pi<T>() - th));
  }
  // Opposite-side pairings satisfy y0 y1 y2 y3 Y0 Y1 Y2 Y3 = 1 with
  // y = (x0, x1^-1, x2, x3^-1); rewrite as a product of two commutators.
  const Mat<T> y0 = x[0], y1 = inv(x[1]), y2 = x[2], y3 = inv(x[3]);
  const Mat<T> q = mul(y1, y2);
  const Mat<T> z = mul(q, y0);
  const Mat<T> p = mul(q, y3);
  return {inv(y1), q, z, inv(p)};
}

template <class T>
std::vector<Mat<T>> fn_mats(const T& l1, const T& l2, const T& l3, const T& t1, const T& t2,
                            const T& t3) {
  using std::cosh, std::sinh;
  // Right-angled hexagon with alternate sides l_i/2; the seam opposite
  // side k has cosh s_k = (cosh h_i cosh h_j + cosh h_k) / (sinh h_i sinh h_j).
  const T h[3] = {l1 / 2, l2 / 2, l3 / 2};
  const auto seam = [&](int i, int j, int k) {
    return acosh_of((cosh(h[i]) * cosh(h[j]) + cosh(h[k])) / (sinh(h[i]) * sinh(h[j])));
  };
  const T s1 = seam(1, 2, 0), s2 = seam(2, 0, 1), s3 = seam(0, 1, 2);

  // Walk the boundary turning left by a right angle at each corner; frame n
  // maps the imaginary axis onto side n, walking upwards from i.
  Mat<T> F{T(1), T(0), T(0), T(1)};
  Mat<T> frames[6];
  std::vector<Pt<T>> corners;
  const T sides[6] = {h[0], s3, h[1], s1, h[2], s2};
  for (int n = 0; n < 6; ++n) {
    frames[n] = F;
    corners.push_back(apply(F, Pt<T>{T(0), T(1)}));
    F = mul(mul(F, up<T>(sides[n])), rot<T>(pi<T>() / 2));
  }
  const Mat<T> &fb1 = frames[0], &fs3 = frames[1], &fb2 = frames[2], &fs1 = frames[3],
               &fb3 = frames[4], &fs2 = frames[5];

  const Mat<T> B1 = reflect_in(fb1), B2 = reflect_in(fb2), B3 = reflect_in(fb3);
  const Mat<T> S1 = reflect_in(fs1), S2 = reflect_in(fs2), S3 = reflect_in(fs3);

  // One pair of pants is generated by the seam-reflection products; the
  // second is attached through the pants-curve reflections, twisted along
  // each pants curve.
  const Mat<T> a = mul(S2, S3), b = mul(S3, S1);
  const auto twist = [&](const Mat<T>& fr, const T& t) { return conj(up<T>(t), fr); };
  const Mat<T> T1 = twist(fb1, t1), T2 = twist(fb2, t2), T3 = twist(fb3, t3);
  const Mat<T> s = mul(mul(T2, mul(B2, B1)), inv(T1));
  const Mat<T> q = mul(mul(T3, mul(B3, B1)), inv(T1));

  // Move the hexagon centroid to i.
  const Pt<T> c = centroid(corners);
  const Mat<T> M{T(1), -c.x, T(0), c.y};
  return {conj(a, M), conj(b, M), conj(s, M), conj(q, M)};
}

Isometry to_iso(const Mat<double>& m) { return Isometry(m.a, m.b, m.c, m.d); }

PreciseMat to_precise(const Mat<Precise>& m) {
  const Precise s = 1 / sqrt(m.a * m.d - m.b * m.c);
  return {m.a * s, m.b * s, m.c * s, m.d * s};
}

}  // namespace

PreciseMat operator*(const PreciseMat& x, const PreciseMat& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

PreciseMat inverse(const PreciseMat& m) { return {m.d, -m.b, -m.c, m.a}; }

std::vector<PreciseMat> precise_generators(const SurfaceGroup& G) {
  std::vector<Mat<Precise>> ms;
  if (G.kind == SurfaceKind::octagon) {
    ms = octagon_mats<Precise>();
  } else {
    const auto& p = G.params;
    ms = fn_mats<Precise>(Precise(p[0]), Precise(p[1]), Precise(p[2]), Precise(p[3]), Precise(p[4]),
                          Precise(p[5]));
  }
  std::vector<PreciseMat> out;
  for (const auto& m : ms) out.push_back(to_precise(m));
  return out;
}

std::string SurfaceGroup::key() const {
  std::string k = label;
  char buf[40];
  for (double p : params) {
    std::snprintf(buf, sizeof buf, ",%.17g", p);
    k += buf;
  }
  return k;
}

SurfaceGroup octagon_group() {
  SurfaceGroup G;
  G.kind = SurfaceKind::octagon;
  G.label = "octagon";
  G.genus = 2;
  for (const auto& m : octagon_mats<double>()) G.generators.push_back(to_iso(m));
  G.relator = Word::parse("abABcdCD");
  G.volume = 2.0 * kPi * (2.0 * G.genus - 2.0);
  G.basepoint = Point(0.0, 1.0);
  verify_group(G);
  return G;
}

SurfaceGroup fenchel_nielsen_group(double l1, double l2, double l3, double t1, double t2,
                                   double t3) {
  for (double v : {l1, l2, l3, t1, t2, t3})
    if (!std::isfinite(v)) throw InvalidArgument("Fenchel-Nielsen parameters must be finite");
  if (!(l1 > 0.0 && l2 > 0.0 && l3 > 0.0))
    throw InvalidArgument("Fenchel-Nielsen lengths must be positive");
  SurfaceGroup G;
  G.kind = SurfaceKind::fenchel_nielsen;
  G.label = "fn";
  G.params = {l1, l2, l3, t1, t2, t3};
  G.genus = 2;
  for (const auto& m : fn_mats<double>(l1, l2, l3, t1, t2, t3)) G.generators.push_back(to_iso(m));
  G.relator = Word::parse("abdCBcAD");
  G.volume = 2.0 * kPi * (2.0 * G.genus - 2.0);
  G.basepoint = Point(0.0, 1.0);
  G.gluing_curves = {Word::parse("a"), Word::parse("b"), Word::parse("ab")};
  verify_group(G);
  return G;
}

Isometry evaluate(const SurfaceGroup& G, const Word& w) {
  Isometry r;
  const int n = G.num_generators();
  for (Letter l : w.letters()) {
    const int k = letter_gen(l);
    if (k >= n) throw InvalidArgument("generator index out of range");
    r = r * (letter_inverse(l) ? G.generators[static_cast<std::size_t>(k)].inverse()
                               : G.generators[static_cast<std::size_t>(k)]);
  }
  return r;
}

double relator_defect(const SurfaceGroup& G) { return evaluate(G, G.relator).distance(Isometry()); }

void verify_group(const SurfaceGroup& G) {
  if (G.num_generators() != 2 * G.genus) throw ComputationError(G.label + ": wrong generator count");
  const double defect = relator_defect(G);
  if (!(defect <= 1e-7)) throw ComputationError(G.label + ": relator is not the identity");
  if (std::abs(G.volume - 2.0 * kPi * (2.0 * G.genus - 2.0)) > 1e-9)
    throw ComputationError(G.label + ": volume mismatch");
  for (const Isometry& g : G.generators)
    if (classify(g) != IsometryKind::hyperbolic)
      throw ComputationError(G.label + ": non-hyperbolic generator");
}

}  // namespace fsimple
