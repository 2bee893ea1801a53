#include "fsimple/curves.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "fsimple/errors.hpp"
#include "fsimple/format.hpp"
#include "fsimple/parallel.hpp"
#include "fsimple/precise.hpp"

namespace fsimple {

namespace {

// Crossing positions computed through different ball elements scatter by up
// to ~1e-6; distinct crossings are separated by far more.
constexpr double kKeyTol = 1e-5;
// Translates this close to the axis, or crossing it at an angle this small,
// are re-examined in extended precision: lifts of words with long powers
// fellow-travel the axis at distances far below double rounding.
constexpr double kCoincideTol = 1e-6;
constexpr double kDeferGap = 1e-9;

std::vector<Isometry> letter_matrices(const SurfaceGroup& G) {
  std::vector<Isometry> m;
  for (const Isometry& g : G.generators) {
    m.push_back(g);
    m.push_back(g.inverse());
  }
  return m;
}

// 2x2 product kept as mantissa matrix times 2^exp.
struct Scaled {
  double m[4] = {1.0, 0.0, 0.0, 1.0};
  long exp = 0;

  void mul(const Isometry& g) {
    const double a = m[0] * g.a() + m[1] * g.c(), b = m[0] * g.b() + m[1] * g.d();
    const double c = m[2] * g.a() + m[3] * g.c(), d = m[2] * g.b() + m[3] * g.d();
    m[0] = a, m[1] = b, m[2] = c, m[3] = d;
    const double big = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    if (big > 0x1p64 || (big < 0x1p-64 && big > 0.0)) {
      int e = 0;
      std::frexp(big, &e);
      for (double& x : m) x = std::ldexp(x, -e);
      exp += e;
    }
  }
  // log |trace|
  double log_abs_trace() const { return std::log(std::abs(m[0] + m[3])) + exp * std::log(2.0); }
};

Scaled rotation_product(const std::vector<Isometry>& lm, const Word& w, std::size_t start) {
  Scaled s;
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) s.mul(lm[w[(start + k) % n]]);
  return s;
}

double length_from(const Scaled& s) {
  const double lt = s.log_abs_trace();
  if (lt > 20.0) return 2.0 * lt;
  const double tr = std::exp(lt);
  if (!(tr > 2.0 + kGeomEps)) throw InvalidArgument("word is not hyperbolic");
  return 2.0 * std::acosh(tr / 2.0);
}

OrientedAxis axis_from(const Scaled& s) {
  length_from(s);  // hyperbolicity check
  return projective_fixed_points(s.m[0], s.m[1], s.m[2], s.m[3]);
}

void check_word(const SurfaceGroup& G, const Word& w) {
  if (w.max_gen() >= G.num_generators()) throw InvalidArgument("generator index out of range");
}

// Balls are shared across calls in one process.
std::shared_ptr<const std::vector<BallElement>> cached_ball(const SurfaceGroup& G, int radius,
                                                            const BallOptions& opt) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const std::vector<BallElement>>> memo;
  const std::string key = G.key() + "|" + std::to_string(radius) + "|" + fmt_double(opt.tol);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  auto ball = std::make_shared<const std::vector<BallElement>>(enumerate_ball(G, radius, opt));
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(key, ball).first->second;
}

struct Pending {
  std::size_t ball, i, j;
};

struct KeySet {
  ToleranceSet<2> keys{kKeyTol};
  std::vector<int> radius;  // shortest ball word that produced the key
  bool coincident = false;
  std::vector<Pending> pending;  // undecided in double precision

  void add(const std::array<double, 2>& k, int r) {
    auto [idx, fresh] = keys.find_or_insert(k);
    if (fresh)
      radius.push_back(r);
    else
      radius[idx] = std::min(radius[idx], r);
  }
};

// Crossings far along either lift from the feet of the frames involved come
// with large entries and poor positions; each one is also seen from the
// feet just before it on both lifts.
constexpr double kFootWindow = 1.0;

bool near_foot(const LiftFrames& F, std::size_t i, double local) {
  const double next = i + 1 < F.offsets.size() ? F.offsets[i + 1] : F.length;
  return local >= -kFootWindow && local <= next - F.offsets[i] + kFootWindow;
}

std::array<double, 2> crossing_key(const LiftFrames& F1, std::size_t i, double local1,
                                   const LiftFrames& F2, std::size_t j, double local2) {
  const auto wrap = [](double t, double ell) { return t - ell * std::floor((t + kGeomEps) / ell); };
  return {wrap(F1.offsets[i] + local1, F1.length), wrap(F2.offsets[j] + local2, F2.length)};
}

// Lifts of curve 2 crossing one period of the lift of curve 1 through the
// basepoint region, keyed by the crossing position along each curve. Parallel
// strands of a long power are crossed by a transverse strand at nearly one
// point and angle, but at positions along the strands a period apart.
KeySet scan_crossings(const LiftFrames& F1, const LiftFrames& F2,
                      const std::vector<BallElement>& ball, int workers) {
  const std::size_t nb = ball.size();
  std::vector<KeySet> parts(chunk_count(nb, workers));
  parallel_chunks(nb, workers, [&](std::size_t chunk, std::size_t lo, std::size_t hi) {
    KeySet& out = parts[chunk];
    for (std::size_t si = lo; si < hi; ++si) {
      const Isometry& s = ball[si].iso;
      const int r = static_cast<int>(ball[si].word.size());
      for (std::size_t i = 0; i < F1.frames.size(); ++i) {
        const Isometry N = F1.frames[i] * s;
        for (std::size_t j = 0; j < F2.frames_inv.size(); ++j) {
          const Isometry K = N * F2.frames_inv[j];
          // The image of the imaginary axis has endpoints u = b/d, v = a/c.
          // With ad - bc = 1, ad + bc = (u+v)/(v-u) is the cosine of the
          // crossing angle when |.| < 1 and cosh of the distance otherwise;
          // ab + cd is sinh of the distance from i to the image line. Both
          // are unchanged by translations along the axis.
          const double a = K.a(), b = K.b(), c = K.c(), d = K.d();
          const double cosine = a * d + b * c;
          const double gap = 1.0 - std::abs(cosine);
          if ((std::abs(gap) <= kCoincideTol && std::abs(a * b + c * d) <= kCoincideTol) ||
              std::abs(gap) <= kDeferGap) {
            out.pending.push_back({si, i, j});
            continue;
          }
          if (gap < 0.0) continue;
          const double local = 0.5 * std::log(-(a * b) / (c * d));
          const double local2 = 0.5 * std::log(-(b * d) / (a * c));
          if (!near_foot(F1, i, local) || !near_foot(F2, j, local2)) continue;
          out.add(crossing_key(F1, i, local, F2, j, local2), r);
        }
      }
    }
  });
  KeySet all;
  for (const KeySet& p : parts) {
    all.coincident = all.coincident || p.coincident;
    for (std::size_t k = 0; k < p.keys.size(); ++k) all.add(p.keys[k], p.radius[k]);
    all.pending.insert(all.pending.end(), p.pending.begin(), p.pending.end());
  }
  return all;
}

std::shared_ptr<const std::vector<PreciseMat>> cached_precise_letters(const SurfaceGroup& G) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const std::vector<PreciseMat>>> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(G.key());
    if (it != memo.end()) return it->second;
  }
  std::vector<PreciseMat> lm;
  for (const PreciseMat& g : precise_generators(G)) {
    lm.push_back(g);
    lm.push_back(inverse(g));
  }
  auto p = std::make_shared<const std::vector<PreciseMat>>(std::move(lm));
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(G.key(), p).first->second;
}

// Extended-precision counterpart of the lift frames, built on demand.
class PreciseFrames {
 public:
  PreciseFrames(std::shared_ptr<const std::vector<PreciseMat>> lm, const Word& w, Point base)
      : lm_(std::move(lm)), w_(w), bx_(base.real()), by_(base.imag()) {}

  const PreciseMat& frame(std::size_t i) {
    auto it = memo_.find(i);
    if (it == memo_.end()) it = memo_.emplace(i, build(i)).first;
    return it->second;
  }

 private:
  PreciseMat build(std::size_t start) const {
    PreciseMat W;
    const std::size_t n = w_.size();
    for (std::size_t k = 0; k < n; ++k) W = W * (*lm_)[w_[(start + k) % n]];
    if (W.c == 0) throw Uncertain("axis through infinity in extended precision");
    // Fixed points of W; the one with the larger eigenvalue attracts.
    const Precise B = W.d - W.a;
    const Precise disc = B * B + 4 * W.b * W.c;
    if (!(disc > 0)) throw Uncertain("rotation is not hyperbolic in extended precision");
    const Precise root = sqrt(disc);
    const Precise q = -(B + (B < 0 ? -root : root)) / 2;
    Precise z1 = q / W.c, z2 = -W.b / q;
    if (abs(W.c * z1 + W.d) < abs(W.c * z2 + W.d)) std::swap(z1, z2);
    const Precise& rep = z2;
    const Precise& att = z1;
    PreciseMat m = rep > att ? PreciseMat{Precise(1), -rep, Precise(1), -att}
                             : PreciseMat{Precise(-1), rep, Precise(1), -att};
    const Precise s = 1 / sqrt(m.a * m.d - m.b * m.c);
    m = {m.a * s, m.b * s, m.c * s, m.d * s};
    // Scale so the foot of the basepoint lands on i: |m(base)| becomes 1.
    const Precise nr = m.a * bx_ + m.b, ni = m.a * by_, dr = m.c * bx_ + m.d, di = m.c * by_;
    const Precise r = sqrt(sqrt((nr * nr + ni * ni) / (dr * dr + di * di)));
    return {m.a / r, m.b / r, m.c * r, m.d * r};
  }

  std::shared_ptr<const std::vector<PreciseMat>> lm_;
  Word w_;
  Precise bx_, by_;
  std::map<std::size_t, PreciseMat> memo_;
};

// Decides the deferred translates with 200-digit arithmetic and adds their
// crossings to ks.
void resolve_pending(const SurfaceGroup& G, const Word& w1, const Word& w2, const LiftFrames& F1,
                     const LiftFrames& F2, const std::vector<BallElement>& ball, KeySet& ks) {
  if (ks.pending.empty()) return;
  const auto lm = cached_precise_letters(G);
  PreciseFrames P1(lm, w1, G.basepoint), P2(lm, w2, G.basepoint);
  std::map<std::size_t, PreciseMat> sm;
  // Coincident lifts vanish to working precision; genuine separations of
  // the words handled here stay far above this.
  const Precise tiny("1e-150");
  for (const Pending& p : ks.pending) {
    auto it = sm.find(p.ball);
    if (it == sm.end()) {
      PreciseMat S;
      for (Letter l : ball[p.ball].word.letters()) S = S * (*lm)[l];
      it = sm.emplace(p.ball, S).first;
    }
    const PreciseMat K = P1.frame(p.i) * it->second * inverse(P2.frame(p.j));
    const Precise cosine = K.a * K.d + K.b * K.c;
    const Precise gap = 1 - abs(cosine);
    if (abs(gap) <= tiny) {
      if (abs(K.a * K.b + K.c * K.d) <= tiny) {
        ks.coincident = true;
        continue;
      }
      throw Uncertain("translate is asymptotic or tangent to the axis in extended precision");
    }
    if (gap < 0) continue;
    const double local = static_cast<double>(log(-(K.a * K.b) / (K.c * K.d)) / 2);
    const double local2 = static_cast<double>(log(-(K.b * K.d) / (K.a * K.c)) / 2);
    if (!near_foot(F1, p.i, local) || !near_foot(F2, p.j, local2)) continue;
    ks.add(crossing_key(F1, p.i, local, F2, p.j, local2), static_cast<int>(ball[p.ball].word.size()));
  }
  ks.pending.clear();
}

std::pair<int, int> counts(const KeySet& ks, int searchRadius) {
  int at_r = 0;
  for (int r : ks.radius)
    if (r <= searchRadius) ++at_r;
  return {at_r, static_cast<int>(ks.radius.size())};
}

LiftFrames frames_for_class(const SurfaceGroup& G, const ConjClass& cls) {
  return lift_frames(G, cls.canonical);
}

}  // namespace

LiftFrames lift_frames(const SurfaceGroup& G, const Word& word) {
  check_word(G, word);
  const Word w = cyclic_reduce(word);
  if (w.empty()) throw InvalidArgument("trivial element");
  const auto lm = letter_matrices(G);
  const std::size_t n = w.size();
  LiftFrames F;
  for (std::size_t i = 0; i < n; ++i) {
    const OrientedAxis ax = axis_from(rotation_product(lm, w, i));
    F.axes.push_back(ax);
    const Isometry M = frame_for(ax, project_to_line(G.basepoint, ax));
    F.frames.push_back(M);
    F.frames_inv.push_back(M.inverse());
  }
  // Rotation i+1 has axis x_i^-1 (axis i), so frame_i x_i frame_{i+1}^-1
  // translates along the imaginary axis by the spacing of the two feet.
  double pos = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    F.offsets.push_back(pos);
    const Isometry D = F.frames[i] * lm[w[i]] * F.frames_inv[(i + 1) % n];
    const Point z = D.apply(Point(0.0, 1.0));
    if (std::abs(z.real()) > 1e-6 * std::abs(z))
      throw ComputationError("lift frames are inconsistent along the word");
    pos += std::log(std::abs(z));
  }
  F.length = pos;
  const double ell = length_from(rotation_product(lm, w, 0));
  if (std::abs(F.length - ell) > 1e-6 * std::max(1.0, ell))
    throw ComputationError("lift frame spacing does not add up to the translation length");
  F.length = ell;
  return F;
}

double word_length(const SurfaceGroup& G, const Word& w) {
  check_word(G, w);
  return length_from(rotation_product(letter_matrices(G), w, 0));
}

OrientedAxis word_axis(const SurfaceGroup& G, const Word& w) {
  check_word(G, w);
  return axis_from(rotation_product(letter_matrices(G), w, 0));
}

CrossingCount self_intersection(const SurfaceGroup& G, const ConjClass& cls, int searchRadius,
                                const CrossingOptions& opt) {
  if (searchRadius < 0) throw InvalidArgument("search radius must be non-negative");
  if (!cls.primitive || cyclic_period_count(cls.canonical) > 1)
    throw InvalidArgument("self-intersection needs a primitive class");
  const LiftFrames F = frames_for_class(G, cls);
  const auto ball = cached_ball(G, searchRadius + 2, opt.ball);
  KeySet ks = scan_crossings(F, F, *ball, opt.workers);
  const Word w = cyclic_reduce(cls.canonical);
  resolve_pending(G, w, w, F, F, *ball, ks);
  const auto [at_r, at_r2] = counts(ks, searchRadius);
  if (at_r % 2 != 0)
    throw ComputationError("incomplete search: odd crossing count for " + cls.canonical.str());
  CrossingCount out;
  out.count = at_r / 2;
  out.countAtRadius2 = at_r2 / 2;
  out.certified = at_r == at_r2;
  out.searchRadius = searchRadius;
  return out;
}

CrossingCount intersection_number(const SurfaceGroup& G, const ConjClass& c1, const ConjClass& c2,
                                  int searchRadius, const CrossingOptions& opt) {
  if (searchRadius < 0) throw InvalidArgument("search radius must be non-negative");
  if (c1 == c2) throw InvalidArgument("use self_intersection for identical classes");
  const LiftFrames F1 = frames_for_class(G, c1);
  const LiftFrames F2 = frames_for_class(G, c2);
  const auto ball = cached_ball(G, searchRadius + 2, opt.ball);
  KeySet ks = scan_crossings(F1, F2, *ball, opt.workers);
  resolve_pending(G, cyclic_reduce(c1.canonical), cyclic_reduce(c2.canonical), F1, F2, *ball, ks);
  if (ks.coincident && !opt.allowShared) throw InvalidArgument("use self_intersection: the classes share a geodesic");
  const auto [at_r, at_r2] = counts(ks, searchRadius);
  CrossingCount out;
  out.count = at_r;
  out.countAtRadius2 = at_r2;
  out.certified = at_r == at_r2;
  out.searchRadius = searchRadius;
  return out;
}

GeodesicRecord make_record(const SurfaceGroup& G, const ConjClass& cls, int searchRadius,
                           const CrossingOptions& opt) {
  GeodesicRecord rec;
  rec.cls = cls;
  rec.iso = evaluate(G, cls.canonical);
  rec.length = translation_length(rec.iso);
  const CrossingCount cc = self_intersection(G, cls, searchRadius, opt);
  rec.selfInt = cc.count;
  rec.certified = cc.certified;
  rec.searchRadius = searchRadius;
  return rec;
}

std::vector<GeodesicRecord> census(const SurfaceGroup& G, int wordRadius, int searchRadius,
                                   const CrossingOptions& opt) {
  std::vector<GeodesicRecord> out;
  for (const ConjClass& cls : conjugacy_classes(G, wordRadius)) {
    if (!cls.primitive) continue;
    if (evaluate(G, cls.canonical).is_identity(kMatrixTol)) continue;
    out.push_back(make_record(G, cls, searchRadius, opt));
  }
  std::stable_sort(out.begin(), out.end(), [](const GeodesicRecord& x, const GeodesicRecord& y) {
    if (x.length != y.length) return x.length < y.length;
    return x.cls < y.cls;
  });
  return out;
}

SystoleResult systole(const SurfaceGroup& G, int radius) {
  if (radius < 2) throw InvalidArgument("systole radius must be at least 2");
  SystoleResult best, inner;
  best.length = inner.length = INFINITY;
  for (const ConjClass& cls : conjugacy_classes(G, radius)) {
    const Isometry g = evaluate(G, cls.canonical);
    if (g.is_identity(kMatrixTol)) continue;
    const double l = translation_length(g);
    if (l < best.length - kGeomEps) best = {l, cls, false};
    if (static_cast<int>(cls.canonical.size()) <= radius - 2 && l < inner.length - kGeomEps)
      inner = {l, cls, false};
  }
  if (!std::isfinite(best.length)) throw ComputationError("no non-trivial class found");
  best.stable = std::abs(best.length - inner.length) <= kGeomEps;
  return best;
}

double FilterSpec::operator()(double t) const {
  switch (kind) {
    case FilterKind::constant: return c;
    case FilterKind::power: return c * std::pow(t, p);
    case FilterKind::linear: return c * t;
    case FilterKind::logquotient: return c * t / std::log1p(t);
  }
  return c;
}

FilterSpec FilterSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
  std::vector<double> v;
  std::stringstream ss(args);
  for (std::string item; std::getline(ss, item, ',');) v.push_back(parse_double(item));
  FilterSpec f;
  const auto need = [&](std::size_t n) {
    if (v.size() != n)
      throw InvalidArgument("filter '" + kind + "' takes " + std::to_string(n) + " parameter(s)");
  };
  if (kind == "constant") {
    need(1);
    f.kind = FilterKind::constant;
    f.c = v[0];
    if (!(f.c >= 0.0)) throw InvalidArgument("constant filter needs c >= 0");
  } else if (kind == "power") {
    need(2);
    f.kind = FilterKind::power;
    f.c = v[0];
    f.p = v[1];
    if (!(f.c > 0.0 && f.p > 0.0)) throw InvalidArgument("power filter needs c > 0 and p > 0");
  } else if (kind == "linear") {
    need(1);
    f.kind = FilterKind::linear;
    f.c = v[0];
    if (!(f.c > 0.0)) throw InvalidArgument("linear filter needs tau > 0");
  } else if (kind == "logquotient") {
    need(1);
    f.kind = FilterKind::logquotient;
    f.c = v[0];
    if (!(f.c > 0.0)) throw InvalidArgument("logquotient filter needs c > 0");
  } else {
    throw InvalidArgument("unknown filter kind '" + kind + "'");
  }
  for (double x : v)
    if (!std::isfinite(x)) throw InvalidArgument("filter parameters must be finite");
  return f;
}

std::string FilterSpec::str() const {
  switch (kind) {
    case FilterKind::constant: return "constant:" + fmt_double(c);
    case FilterKind::power: return "power:" + fmt_double(c) + "," + fmt_double(p);
    case FilterKind::linear: return "linear:" + fmt_double(c);
    case FilterKind::logquotient: return "logquotient:" + fmt_double(c);
  }
  return "";
}

std::vector<GeodesicRecord> f_simple_filter(const std::vector<GeodesicRecord>& records,
                                            const FilterSpec& f) {
  std::vector<GeodesicRecord> out;
  for (const auto& r : records) {
    if (!r.certified)
      throw ComputationError("uncertified record " + r.cls.canonical.str() + " passed to filter");
    if (r.selfInt <= f(r.length)) out.push_back(r);
  }
  std::stable_sort(out.begin(), out.end(), [](const GeodesicRecord& x, const GeodesicRecord& y) {
    if (x.length != y.length) return x.length < y.length;
    return x.cls < y.cls;
  });
  return out;
}

long long Schedule::at(int n) const {
  if (n < 1) throw InvalidArgument("schedules start at n = 1");
  switch (kind) {
    case Kind::exponential: {
      const double v = std::pow(base, n);
      if (!(v < 1e15)) throw InvalidArgument("schedule value too large");
      return std::llround(v);
    }
    case Kind::list:
      if (static_cast<std::size_t>(n) > values.size())
        throw InvalidArgument("schedule list has no entry for n = " + std::to_string(n));
      return values[static_cast<std::size_t>(n - 1)];
    case Kind::minimal: break;
  }
  throw InvalidArgument("minimal schedules are resolved by beta_family_power_minimal");
}

Schedule Schedule::parse(const std::string& text) {
  Schedule s;
  if (text == "minimal") {
    s.kind = Kind::minimal;
    return s;
  }
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidArgument("schedule must be exp:B, list:a,b,... or minimal");
  const std::string kind = text.substr(0, colon), args = text.substr(colon + 1);
  if (kind == "exp") {
    s.kind = Kind::exponential;
    s.base = parse_double(args);
    if (!(s.base >= 1.0 && std::isfinite(s.base))) throw InvalidArgument("exp schedule needs base >= 1");
  } else if (kind == "list") {
    s.kind = Kind::list;
    std::stringstream ss(args);
    for (std::string item; std::getline(ss, item, ',');) {
      const double v = parse_double(item);
      if (!(v >= 0.0) || v != std::floor(v)) throw InvalidArgument("schedule entries must be non-negative integers");
      s.values.push_back(static_cast<long long>(v));
    }
    if (s.values.empty()) throw InvalidArgument("empty schedule list");
  } else {
    throw InvalidArgument("unknown schedule kind '" + kind + "'");
  }
  return s;
}

std::string Schedule::str() const {
  switch (kind) {
    case Kind::exponential: return "exp:" + fmt_double(base);
    case Kind::minimal: return "minimal";
    case Kind::list: {
      std::string s = "list:";
      for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
      return s;
    }
  }
  return "";
}

std::vector<Word> beta_family_power(const ConjClass& gamma, const ConjClass& alpha,
                                    const Schedule& schedule, int count) {
  if (gamma == alpha) throw InvalidArgument("beta family needs distinct gamma and alpha");
  std::vector<Word> out;
  for (int n = 1; n <= count; ++n)
    out.push_back(gamma.canonical.pow(n) * alpha.canonical.pow(static_cast<int>(schedule.at(n))));
  return out;
}

std::vector<Word> beta_family_power_minimal(const SurfaceGroup& G, const ConjClass& gamma,
                                            const ConjClass& alpha, const FilterSpec& f, int count,
                                            int searchRadius, long long cap) {
  if (gamma == alpha) throw InvalidArgument("beta family needs distinct gamma and alpha");
  std::vector<Word> out;
  for (int n = 1; n <= count; ++n) {
    bool found = false;
    for (long long a = 0; a <= cap && !found; ++a) {
      const Word w = gamma.canonical.pow(n) * alpha.canonical.pow(static_cast<int>(a));
      const ConjClass cls = ConjClass::of(w);
      if (!cls.primitive) continue;
      const CrossingCount cc = self_intersection(G, cls, searchRadius);
      if (!cc.certified) continue;
      if (cc.count <= f(word_length(G, w))) {
        out.push_back(w);
        found = true;
      }
    }
    if (!found)
      throw ComputationError("no f-simple beta word with a_n <= " + std::to_string(cap) +
                             " for n = " + std::to_string(n));
  }
  return out;
}

std::vector<Word> beta_family_twist(const SurfaceGroup& G, const Word& gamma, const Word& omega,
                                    const Word& eta, const Schedule& schedule, int count,
                                    int searchRadius) {
  const ConjClass ec = ConjClass::of(eta);
  const CrossingCount cc = self_intersection(G, ec, searchRadius);
  if (!cc.certified || cc.count != 0) throw ComputationError("eta is not certified simple");
  std::vector<Word> out;
  for (int n = 1; n <= count; ++n)
    out.push_back(eta.pow(static_cast<int>(schedule.at(n))) * gamma.pow(2 * n) * omega);
  return out;
}

std::vector<double> endpoint_convergence(const SurfaceGroup& G, const ConjClass& gamma,
                                         const std::vector<Word>& family) {
  if (family.empty()) throw InvalidArgument("empty family");
  const OrientedAxis target = word_axis(G, gamma.canonical);
  const auto lm = letter_matrices(G);
  std::vector<double> out;
  for (const Word& raw : family) {
    check_word(G, raw);
    const Word w = cyclic_reduce(raw);
    if (w.empty()) throw InvalidArgument("trivial family member");
    double best = INFINITY;
    for (std::size_t r = 0; r < w.size(); ++r) {
      const OrientedAxis ax = axis_from(rotation_product(lm, w, r));
      const double same = chordal_distance(ax.attracting, target.attracting) +
                          chordal_distance(ax.repelling, target.repelling);
      const double flip = chordal_distance(ax.attracting, target.repelling) +
                          chordal_distance(ax.repelling, target.attracting);
      best = std::min({best, same, flip});
    }
    out.push_back(best);
  }
  return out;
}

}  // namespace fsimple
