#include "fsimple/limit_set.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "fsimple/errors.hpp"
#include "fsimple/format.hpp"
#include "fsimple/parallel.hpp"

namespace fsimple {

namespace {

constexpr double kPointTol = 1e-9;
// Surface groups have no parabolics: |trace| this close to 2 is the identity.
constexpr double kTraceFloor = 2.0 + 1e-6;

// Generator letters of a subgroup as host isometries, conjugated so that the
// host basepoint sits at i.
std::vector<Isometry> subgroup_letters(const Subgroup& S) {
  const Point o = S.host.basepoint;
  const double sy = std::sqrt(o.imag());
  const Isometry P(sy, o.real() / sy, 0.0, 1.0 / sy);
  const Isometry Pi = P.inverse();
  std::vector<Isometry> m;
  for (const Word& w : S.gens) {
    const Isometry g = Pi * evaluate(S.host, w) * P;
    m.push_back(g);
    m.push_back(g.inverse());
  }
  return m;
}

// cosh of the displacement of i.
double cosh_displacement(const Isometry& g) {
  const auto& e = g.entries();
  return std::max(1.0, 0.5 * (e[0] * e[0] + e[1] * e[1] + e[2] * e[2] + e[3] * e[3]));
}

double displacement(const Isometry& g) { return std::acosh(cosh_displacement(g)); }

std::size_t free_ball_size(int letters, int radius) {
  std::size_t n = 1, layer = static_cast<std::size_t>(letters);
  for (int r = 1; r <= radius; ++r) {
    n += layer;
    layer *= static_cast<std::size_t>(letters - 1);
  }
  return n;
}

Word host_word(const Subgroup& S, const Word& sub) {
  Word w;
  for (Letter l : sub.letters()) {
    const Word& g = S.gens[static_cast<std::size_t>(letter_gen(l))];
    w = w * (letter_inverse(l) ? g.inverse() : g);
  }
  return w;
}

// Reduced words of length 2 in the subgroup letters (or length 1 when the
// radius is 1); every reduced word of length >= 2 extends exactly one.
std::vector<std::vector<int>> prefixes(int nl, int radius) {
  std::vector<std::vector<int>> out;
  for (int x = 0; x < nl; ++x) {
    if (radius < 2) {
      out.push_back({x});
      continue;
    }
    for (int y = 0; y < nl; ++y)
      if (y != (x ^ 1)) out.push_back({x, y});
  }
  return out;
}

// Depth-first walk over reduced words extending a prefix, calling
// visit(g, depth) for every word, prefix included.
template <class Visit>
void walk(const std::vector<Isometry>& lm, const std::vector<int>& prefix, int radius, Visit&& visit) {
  const int nl = static_cast<int>(lm.size());
  Isometry g;
  for (int x : prefix) g = g * lm[static_cast<std::size_t>(x)];
  struct Frame {
    Isometry g;
    int last;
    int depth;
  };
  std::vector<Frame> stack{{g, prefix.back(), static_cast<int>(prefix.size())}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (!visit(f.g, f.depth) || f.depth == radius) continue;
    for (int x = nl - 1; x >= 0; --x)
      if (x != (f.last ^ 1)) stack.push_back({f.g * lm[static_cast<std::size_t>(x)], x, f.depth + 1});
  }
}

void fit_line(const std::vector<double>& xs, const std::vector<double>& ys, double& slope,
              double& rms) {
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
  mx /= n, my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  slope = sxy / sxx;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (my + slope * (xs[i] - mx));
    ss += r * r;
  }
  rms = std::sqrt(ss / n);
}

DimensionEstimate finish(DimensionMethod m, double slope, double rms, std::vector<double> params) {
  DimensionEstimate e;
  e.method = m;
  e.rawSlope = slope;
  e.value = std::clamp(slope, 0.0, 1.0);
  e.clamped = e.value != slope;
  e.residual = rms;
  e.params = std::move(params);
  return e;
}

void check_cut_classes(const CutSubgroup& C, int radius, const CrossingOptions& opt) {
  const Subgroup& S = C.group;
  std::set<ConjClass> seen;
  CrossingOptions o = opt;
  o.allowShared = true;
  for (const ConjClass& sub : enumerate_cyclic_classes(static_cast<int>(S.gens.size()), radius)) {
    const Word w = cyclic_reduce(host_word(S, sub.canonical));
    if (w.empty()) throw ComputationError("cut subgroup word collapses in the host");
    const ConjClass cls = ConjClass::of(w);
    if (cls.root() == C.eta || !seen.insert(cls).second) continue;
    bool ok = false;
    for (int r = 1; r <= 5 && !ok; r += 2) {
      const CrossingCount cc = intersection_number(S.host, C.eta, cls, r, o);
      if (!cc.certified) continue;
      if (cc.count != 0)
        throw ComputationError("cut subgroup element " + w.str() + " crosses the cutting curve");
      ok = true;
    }
    if (!ok) throw ComputationError("could not certify disjointness of " + w.str() + " from the cutting curve");
  }
}

}  // namespace

Subgroup make_subgroup(const SurfaceGroup& host, std::vector<Word> gens, std::string label,
                       int freeCheckRadius) {
  if (gens.empty()) throw InvalidArgument("subgroup needs at least one generator");
  Subgroup S{host, std::move(gens), false, std::move(label)};
  for (const Word& w : S.gens) {
    if (w.max_gen() >= host.num_generators()) throw InvalidArgument("generator index out of range");
    if (w.empty() || classify(evaluate(host, w)) != IsometryKind::hyperbolic)
      throw InvalidArgument("subgroup generator " + w.str() + " is not hyperbolic");
  }
  const auto lm = subgroup_letters(S);
  const int nl = static_cast<int>(lm.size());
  IsometryIndex index;
  index.find_or_insert(Isometry());
  std::size_t words = 1;
  bool collision = false;
  for (const auto& p : prefixes(nl, freeCheckRadius)) {
    walk(lm, p, freeCheckRadius, [&](const Isometry& g, int) {
      ++words;
      if (!index.find_or_insert(g).second) collision = true;
      return true;
    });
  }
  // Length-1 words are skipped by length-2 prefixes; count them separately.
  if (freeCheckRadius >= 2)
    for (int x = 0; x < nl; ++x) {
      ++words;
      if (!index.find_or_insert(lm[static_cast<std::size_t>(x)]).second) collision = true;
    }
  S.free = !collision && words == free_ball_size(nl, freeCheckRadius);
  return S;
}

std::vector<Word> nielsen_reduce(const SurfaceGroup& host, std::vector<Word> gens) {
  const Point o = host.basepoint;
  const auto disp = [&](const Word& w) { return hyperbolic_distance(o, evaluate(host, w).apply(o)); };
  std::vector<double> d;
  for (const Word& w : gens) d.push_back(disp(w));
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (i == j) continue;
        for (const Word& x : {gens[j], gens[j].inverse()})
          for (const Word& c : {gens[i] * x, x * gens[i]}) {
            const double dc = disp(c);
            if (dc < d[i] * (1.0 - 1e-9)) {
              gens[i] = c;
              d[i] = dc;
              changed = true;
            }
          }
      }
  }
  return gens;
}

Subgroup full_subgroup(const SurfaceGroup& host) {
  std::vector<Word> gens;
  for (int k = 0; k < host.num_generators(); ++k) gens.push_back(Word::generator(k));
  return make_subgroup(host, std::move(gens), host.label + "-full");
}

CutSubgroup cut_subgroup(const SurfaceGroup& G, const ConjClass& eta, int verifyRadius,
                         const CrossingOptions& opt) {
  if (verifyRadius < 1) throw InvalidArgument("verification radius must be at least 1");
  std::vector<Word> gens;
  if (eta == ConjClass::of(Word::parse("a"))) {
    if (G.kind == SurfaceKind::octagon)
      gens = {Word::parse("a"), Word::parse("c"), Word::parse("d")};
    else if (G.kind == SurfaceKind::fenchel_nielsen)
      gens = {Word::parse("b"), Word::parse("cAC"), Word::parse("dC")};
  }
  if (gens.empty()) throw InvalidArgument("unsupported cutting curve " + eta.canonical.str());

  const CrossingCount simple = self_intersection(G, eta, kDefaultSearchRadius, opt);
  if (!simple.certified || simple.count != 0)
    throw ComputationError("cutting curve is not certified simple");

  CutSubgroup C;
  gens = nielsen_reduce(G, std::move(gens));
  C.group = make_subgroup(G, std::move(gens), G.label + "-cut-" + eta.canonical.str());
  if (!C.group.free) throw ComputationError("cut subgroup generators satisfy a relation");
  C.eta = eta;
  C.etaLength = translation_length(evaluate(G, eta.canonical));
  C.boundaryLength = 2.0 * C.etaLength;
  C.coreVolume = G.volume;
  check_cut_classes(C, verifyRadius, opt);
  C.verifiedRadius = verifyRadius;
  return C;
}

std::vector<GrowthRow> orbit_growth(const Subgroup& S, double rMax, int wordRadius,
                                    const GrowthOptions& opt) {
  if (!(rMax > 0.0) || !std::isfinite(rMax)) throw InvalidArgument("R_max must be positive");
  if (wordRadius < 1) throw InvalidArgument("word radius must be at least 1");
  const int rows = static_cast<int>(std::floor(rMax + kGeomEps)) + 1;
  std::vector<long long> hist(static_cast<std::size_t>(rows), 0);
  bool truncated = false;
  // Bucket k counts elements with k-1 < d <= k.
  const auto bucket = [&](double d) { return static_cast<long long>(std::ceil(d - kGeomEps)); };
  if (!(opt.pruneMargin >= 0.0)) throw InvalidArgument("prune margin must be non-negative");
  const double keep = rMax + opt.pruneMargin;
  const double coshKeep = std::cosh(keep), coshCount = std::cosh(rMax + kGeomEps);

  if (S.free) {
    const auto lm = subgroup_letters(S);
    const auto pre = prefixes(static_cast<int>(lm.size()), wordRadius);
    struct Part {
      std::vector<long long> hist;
      bool truncated = false;
    };
    std::vector<Part> parts(chunk_count(pre.size(), opt.workers));
    parallel_chunks(pre.size(), opt.workers, [&](std::size_t c, std::size_t lo, std::size_t hi) {
      Part& part = parts[c];
      part.hist.assign(hist.size(), 0);
      for (std::size_t p = lo; p < hi; ++p)
        walk(lm, pre[p], wordRadius, [&](const Isometry& g, int depth) {
          const double h = cosh_displacement(g);
          if (h > coshKeep) return false;
          if (depth == wordRadius) part.truncated = true;
          if (h <= coshCount) {
            const long long k = bucket(std::acosh(h));
            if (k < rows) ++part.hist[static_cast<std::size_t>(k)];
          }
          return true;
        });
    });
    for (const Part& p : parts) {
      for (std::size_t k = 0; k < hist.size(); ++k) hist[k] += p.hist[k];
      truncated = truncated || p.truncated;
    }
    if (wordRadius >= 2)
      for (const Isometry& g : lm) {
        const double d = displacement(g);
        if (d <= rMax + kGeomEps && bucket(d) < rows) ++hist[static_cast<std::size_t>(bucket(d))];
      }
    ++hist[0];  // identity
  } else {
    // Relations present: dedup elements layer by layer.
    const auto lm = subgroup_letters(S);
    const int nl = static_cast<int>(lm.size());
    IsometryIndex index(opt.ball.tol);
    std::vector<std::pair<Isometry, int>> layer{{Isometry(), -1}};
    index.find_or_insert(Isometry());
    ++hist[0];
    for (int len = 1; len <= wordRadius; ++len) {
      std::vector<std::vector<Isometry>> parts(chunk_count(layer.size(), opt.workers));
      std::vector<std::vector<int>> lasts(parts.size());
      parallel_chunks(layer.size(), opt.workers, [&](std::size_t c, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
          for (int x = 0; x < nl; ++x) {
            if (layer[i].second >= 0 && x == (layer[i].second ^ 1)) continue;
            parts[c].push_back(layer[i].first * lm[static_cast<std::size_t>(x)]);
            lasts[c].push_back(x);
          }
      });
      std::vector<std::pair<Isometry, int>> next;
      for (std::size_t c = 0; c < parts.size(); ++c)
        for (std::size_t k = 0; k < parts[c].size(); ++k) {
          if (!index.find_or_insert(parts[c][k]).second) continue;
          const double d = displacement(parts[c][k]);
          if (d > keep) continue;
          next.push_back({parts[c][k], lasts[c][k]});
          if (len == wordRadius) truncated = true;
          if (d <= rMax + kGeomEps && bucket(d) < rows) ++hist[static_cast<std::size_t>(bucket(d))];
        }
      layer = std::move(next);
    }
  }
  if (truncated)
    throw ComputationError("growth table truncated: word radius " + std::to_string(wordRadius) +
                           " does not saturate R_max = " + fmt_double(rMax));
  std::vector<GrowthRow> table;
  long long acc = 0;
  for (int k = 0; k < rows; ++k) {
    acc += hist[static_cast<std::size_t>(k)];
    table.push_back({static_cast<double>(k), acc});
  }
  return table;
}

DimensionEstimate critical_exponent(const std::vector<GrowthRow>& table, double windowStart) {
  if (table.size() < 5) throw InvalidArgument("critical exponent needs at least 5 growth rows");
  if (!(windowStart >= 0.0 && windowStart < 1.0)) throw InvalidArgument("fit window start must be in [0, 1)");
  const double last = table.back().R;
  std::vector<double> xs, ys;
  for (const GrowthRow& row : table)
    if (row.R >= windowStart * last && row.N > 0) {
      xs.push_back(row.R);
      ys.push_back(std::log(static_cast<double>(row.N)));
    }
  if (xs.size() < 2) throw InvalidArgument("fit window holds fewer than 2 rows");
  double slope = 0.0, rms = 0.0;
  fit_line(xs, ys, slope, rms);
  return finish(DimensionMethod::orbitGrowth, slope, rms, {windowStart, xs.front(), xs.back()});
}

std::vector<BoundaryPoint> limit_set_sample(const Subgroup& S, int wordRadius, int workers) {
  if (wordRadius < 1) throw InvalidArgument("sample word radius must be at least 1");
  const Point o = S.host.basepoint;
  const double sy = std::sqrt(o.imag());
  const Isometry P(sy, o.real() / sy, 0.0, 1.0 / sy);
  const Isometry Pinv = P.inverse();
  const auto lm = subgroup_letters(S);
  const auto pre = prefixes(static_cast<int>(lm.size()), wordRadius);

  struct Item {
    double angle;
    BoundaryPoint point;
  };
  const auto collect = [&](const Isometry& g, std::vector<Item>& out) {
    // Long products lose about eps * |g|^2 of trace accuracy; elements whose
    // trace gap is below that are skipped rather than misclassified.
    const auto& e = g.entries();
    const double big = std::max({std::abs(e[0]), std::abs(e[1]), std::abs(e[2]), std::abs(e[3])});
    if (!(std::abs(g.trace()) > kTraceFloor + 1e-15 * big * big)) return;
    // Undo the basepoint conjugation before taking the fixed point.
    const Isometry h = P * g * Pinv;
    const OrientedAxis ax = projective_fixed_points(h.a(), h.b(), h.c(), h.d());
    out.push_back({ax.attracting.disk_angle(), ax.attracting});
  };
  std::vector<std::vector<Item>> parts(chunk_count(pre.size(), workers));
  parallel_chunks(pre.size(), workers, [&](std::size_t c, std::size_t lo, std::size_t hi) {
    for (std::size_t p = lo; p < hi; ++p)
      walk(lm, pre[p], wordRadius, [&](const Isometry& g, int) {
        collect(g, parts[c]);
        return true;
      });
  });
  std::vector<Item> all;
  if (wordRadius >= 2)
    for (const Isometry& g : lm) collect(g, all);
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::stable_sort(all.begin(), all.end(),
                   [](const Item& x, const Item& y) { return x.angle < y.angle; });
  std::vector<BoundaryPoint> out;
  double prev = -INFINITY, first = INFINITY;
  for (const Item& it : all) {
    if (it.angle - prev <= kPointTol) continue;
    if (!out.empty() && it.angle + 2.0 * std::numbers::pi - first <= kPointTol) continue;
    if (out.empty()) first = it.angle;
    out.push_back(it.point);
    prev = it.angle;
  }
  return out;
}

DimensionEstimate box_dimension(const std::vector<BoundaryPoint>& points,
                                const std::vector<double>& scales) {
  if (points.size() < 100) throw InvalidArgument("box counting needs at least 100 points");
  if (scales.size() < 4) throw InvalidArgument("box counting needs at least 4 scales");
  const auto [lo, hi] = std::minmax_element(scales.begin(), scales.end());
  if (!(*lo > 0.0)) throw InvalidArgument("scales must be positive");
  if (*hi / *lo < 100.0 * (1.0 - 1e-12)) throw InvalidArgument("scales must span at least 2 decades");
  std::vector<double> angles;
  angles.reserve(points.size());
  for (const BoundaryPoint& p : points) angles.push_back(p.disk_angle());
  std::sort(angles.begin(), angles.end());
  std::vector<double> xs, ys;
  for (double s : scales) {
    long long occupied = 0, prev = -1;
    for (double a : angles) {
      const auto box = static_cast<long long>(std::floor(a / s));
      if (box != prev) ++occupied, prev = box;
    }
    xs.push_back(std::log(1.0 / s));
    ys.push_back(std::log(static_cast<double>(occupied)));
  }
  double slope = 0.0, rms = 0.0;
  fit_line(xs, ys, slope, rms);
  return finish(DimensionMethod::boxCounting, slope, rms, scales);
}

std::vector<double> geometric_scales(double hi, double lo, int count) {
  if (!(hi > lo && lo > 0.0) || count < 2) throw InvalidArgument("bad scale range");
  std::vector<double> out;
  for (int k = 0; k < count; ++k)
    out.push_back(hi * std::pow(lo / hi, static_cast<double>(k) / (count - 1)));
  return out;
}

}  // namespace fsimple
