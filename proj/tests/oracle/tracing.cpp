#include "tracing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

namespace oracle {

namespace {

Mobius normalized(Mobius m) {
  const C s = std::sqrt(m.a * m.d - m.b * m.c);
  return {m.a / s, m.b / s, m.c / s, m.d / s};
}

double dot(C u, C v) { return u.real() * v.real() + u.imag() * v.imag(); }
double cross(C u, C v) { return u.real() * v.imag() - u.imag() * v.real(); }

struct Hyp {
  double t, x, y;
};

Hyp lift(C k) {
  const double s = 1.0 / std::sqrt(1.0 - std::norm(k));
  return {s, s * k.real(), s * k.imag()};
}

double minkowski(const Hyp& p, const Hyp& q) { return -p.t * q.t + p.x * q.x + p.y * q.y; }

// Interior angle at v between the geodesics towards u and w.
double vertex_angle(C u, C v, C w) {
  const Hyp V = lift(v), U = lift(u), W = lift(w);
  const double uv = minkowski(U, V), wv = minkowski(W, V);
  const Hyp TU{U.t + uv * V.t, U.x + uv * V.x, U.y + uv * V.y};
  const Hyp TW{W.t + wv * V.t, W.x + wv * V.x, W.y + wv * V.y};
  const double c = minkowski(TU, TW) / std::sqrt(minkowski(TU, TU) * minkowski(TW, TW));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

C on_circle(C w) { return w / std::abs(w); }

}  // namespace

Mobius Mobius::operator*(const Mobius& o) const {
  return normalized({a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d});
}

C klein_to_disk(C k) { return k / (1.0 + std::sqrt(std::max(0.0, 1.0 - std::norm(k)))); }
C disk_to_klein(C w) { return 2.0 * w / (1.0 + std::norm(w)); }

double klein_distance(C p, C q) {
  const double c = (1.0 - dot(p, q)) / std::sqrt((1.0 - std::norm(p)) * (1.0 - std::norm(q)));
  return std::acosh(std::max(1.0, c));
}

TracingOracle::TracingOracle(const fsimple::SurfaceGroup& G, fsimple::Point centre, int radius) {
  const C I(0.0, 1.0);
  // Cayley map to the disk, then the disk translation sending the centre to 0.
  const C p = (centre - I) / (centre + I);
  const Mobius cay{1.0, -I, 1.0, I};
  const Mobius shift{1.0, -p, -std::conj(p), 1.0};
  const Mobius to = normalized(shift * cay);
  const Mobius from = to.inverse();
  for (const fsimple::Isometry& g : G.generators)
    gens_.push_back(to * Mobius{g.a(), g.b(), g.c(), g.d()} * from);

  // Freely reduced words up to the radius.
  std::vector<Mobius> elems;
  struct Node {
    Mobius m;
    int last;
  };
  std::vector<Node> layer{{Mobius{}, -1}};
  const int letters = 2 * static_cast<int>(gens_.size());
  for (int len = 1; len <= radius; ++len) {
    std::vector<Node> next;
    for (const Node& n : layer)
      for (int l = 0; l < letters; ++l) {
        if (n.last >= 0 && (l ^ 1) == n.last) continue;
        const Mobius g = (l & 1) ? gens_[static_cast<std::size_t>(l / 2)].inverse()
                                 : gens_[static_cast<std::size_t>(l / 2)];
        next.push_back({n.m * g, l});
        elems.push_back(next.back().m);
      }
    layer = std::move(next);
  }

  // Distinct orbit points, nearest first.
  std::vector<std::pair<C, Mobius>> orbit;
  for (const Mobius& m : elems) orbit.push_back({m(0.0), m});
  std::sort(orbit.begin(), orbit.end(), [](const auto& x, const auto& y) {
    if (std::abs(x.first) != std::abs(y.first)) return std::abs(x.first) < std::abs(y.first);
    return std::arg(x.first) < std::arg(y.first);
  });

  std::vector<C> poly{{1.5, 1.5}, {-1.5, 1.5}, {-1.5, -1.5}, {1.5, -1.5}};
  std::vector<int> label(4, -1);
  std::vector<Side> cand;
  for (const auto& [q, m] : orbit) {
    if (std::abs(q) < 1e-9) continue;
    const double den = 1.0 - std::norm(q);
    Side s;
    s.offset = (1.0 + std::norm(q)) / den - 1.0;
    s.normal = -2.0 * q / den;
    s.g = m;
    std::vector<double> fv;
    bool cuts = false;
    for (C v : poly) {
      fv.push_back(f(s, v));
      if (fv.back() < 0.0) cuts = true;
    }
    if (!cuts) continue;
    bool dup = false;
    for (const Side& o : cand)
      if (std::abs(o.g(0.0) - q) < 1e-9) dup = true;
    if (dup) continue;
    const int id = static_cast<int>(cand.size());
    cand.push_back(s);
    std::vector<C> np;
    std::vector<int> nl;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (i + 1) % n;
      const bool in_i = fv[i] >= 0.0, in_j = fv[j] >= 0.0;
      const C cut = poly[i] + (fv[i] / (fv[i] - fv[j])) * (poly[j] - poly[i]);
      if (in_i) {
        np.push_back(poly[i]);
        nl.push_back(label[i]);
        if (!in_j) {
          np.push_back(cut);
          nl.push_back(id);
        }
      } else if (in_j) {
        np.push_back(cut);
        nl.push_back(label[i]);
      }
    }
    // Merge vertices that the cut left on top of each other.
    poly.clear();
    label.clear();
    for (std::size_t i = 0; i < np.size(); ++i) {
      const C nextv = np[(i + 1) % np.size()];
      if (std::abs(nextv - np[i]) < 1e-12 && np.size() > 3) continue;
      poly.push_back(np[i]);
      label.push_back(nl[i]);
    }
  }

  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (label[i] < 0) throw std::logic_error("Dirichlet domain is not bounded by the given radius");
    if (std::norm(poly[i]) >= 1.0) throw std::logic_error("Dirichlet domain reaches the boundary");
    vertices_.push_back(poly[i]);
    sides_.push_back(cand[static_cast<std::size_t>(label[i])]);
  }
  const std::size_t n = vertices_.size();
  double angles = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    angles += vertex_angle(vertices_[(i + n - 1) % n], vertices_[i], vertices_[(i + 1) % n]);
  area_ = (static_cast<double>(n) - 2.0) * std::numbers::pi - angles;

  // Side pairings: g^-1 carries side k onto the side of g^-1.
  for (std::size_t k = 0; k < n; ++k) {
    const Mobius inv = sides_[k].g.inverse();
    const C target = inv(0.0);
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(sides_[j].g(0.0) - target) < 1e-8) sides_[k].partner = static_cast<int>(j);
    if (sides_[k].partner < 0) throw std::logic_error("unpaired side");
    const std::size_t j = static_cast<std::size_t>(sides_[k].partner);
    const C a = act(inv, vertices_[k]), b = act(inv, vertices_[(k + 1) % n]);
    if (std::abs(a - vertices_[(j + 1) % n]) > 1e-7 || std::abs(b - vertices_[j]) > 1e-7)
      throw std::logic_error("side pairing does not match the vertices");
  }
}

double TracingOracle::f(const Side& s, C k) const { return s.offset + dot(s.normal, k); }

Mobius TracingOracle::evaluate(const fsimple::Word& w) const {
  Mobius m;
  for (fsimple::Letter l : w.letters()) {
    const Mobius& g = gens_[static_cast<std::size_t>(fsimple::letter_gen(l))];
    m = m * (fsimple::letter_inverse(l) ? g.inverse() : g);
  }
  return m;
}

std::vector<Chord> TracingOracle::trace(const fsimple::Word& word) const {
  const Mobius M = evaluate(word);
  const C tr = M.a + M.d;
  if (std::abs(tr) <= 2.0 + 1e-9) throw std::invalid_argument("not hyperbolic");
  const double ell = 2.0 * std::acosh(std::abs(tr) / 2.0);

  // Fixed points of M on the circle; the attracting one has |c w + d| > 1.
  const C disc = std::sqrt((M.a - M.d) * (M.a - M.d) + 4.0 * M.b * M.c);
  C r = on_circle((M.a - M.d - disc) / (2.0 * M.c));
  C s = on_circle((M.a - M.d + disc) / (2.0 * M.c));
  if (std::abs(M.c * r + M.d) > std::abs(M.c * s + M.d)) std::swap(r, s);

  // Pull the point of the line nearest the centre into the domain.
  C x = r + (-dot(r, s - r) / std::norm(s - r)) * (s - r);
  for (int it = 0;; ++it) {
    if (it > 10000) throw std::logic_error("reduction into the domain does not terminate");
    std::size_t worst = sides_.size();
    double fw = -1e-13;
    for (std::size_t k = 0; k < sides_.size(); ++k) {
      const double v = f(sides_[k], x);
      if (v < fw) {
        fw = v;
        worst = k;
      }
    }
    if (worst == sides_.size()) break;
    const Mobius inv = sides_[worst].g.inverse();
    x = act(inv, x);
    r = on_circle(inv(r));
    s = on_circle(inv(s));
  }

  const C r0 = r, s0 = s;
  std::vector<Chord> out;
  double total = 0.0;
  for (int step = 0;; ++step) {
    if (step > 100000) throw std::logic_error("trace does not close");
    double tin = -1e300, tout = 1e300, second = 1e300;
    std::size_t exit = 0;
    for (std::size_t k = 0; k < sides_.size(); ++k) {
      const double alpha = f(sides_[k], r), beta = dot(sides_[k].normal, s - r);
      if (beta == 0.0) continue;
      const double t = -alpha / beta;
      if (beta > 0.0) {
        tin = std::max(tin, t);
      } else if (t < tout) {
        second = tout;
        tout = t;
        exit = k;
      } else {
        second = std::min(second, t);
      }
    }
    if (!(tout - tin > 1e-9)) throw Ambiguous("geodesic grazes the domain");
    if (second - tout < 1e-9) throw Ambiguous("geodesic runs through a vertex");
    const Chord ch{r + tin * (s - r), r + tout * (s - r)};
    total += klein_distance(ch.from, ch.to);
    out.push_back(ch);
    const Mobius inv = sides_[exit].g.inverse();
    r = on_circle(inv(r));
    s = on_circle(inv(s));
    if (std::abs(r - r0) + std::abs(s - s0) < 1e-8) break;
  }
  if (std::abs(total - ell) > 1e-6 * std::max(1.0, ell))
    throw std::logic_error("traced length " + std::to_string(total) + " differs from " +
                           std::to_string(ell));
  return out;
}

int count_crossings(const std::vector<Chord>& x, const std::vector<Chord>& y, bool same) {
  constexpr double eps = 1e-9;
  int n = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = same ? i + 1 : 0; j < y.size(); ++j) {
      const C p = x[i].from, dp = x[i].to - x[i].from;
      const C q = y[j].from, dq = y[j].to - y[j].from;
      const double den = cross(dp, dq);
      if (std::abs(den) < 1e-14) {
        if (std::abs(cross(q - p, dp)) < 1e-12) {
          const double u0 = dot(q - p, dp) / std::norm(dp), u1 = dot(q + dq - p, dp) / std::norm(dp);
          if (std::max(u0, u1) > -eps && std::min(u0, u1) < 1.0 + eps)
            throw Ambiguous("overlapping chords");
        }
        continue;
      }
      const double u = cross(q - p, dq) / den, v = cross(q - p, dp) / den;
      const bool inside = u > eps && u < 1.0 - eps && v > eps && v < 1.0 - eps;
      const bool near = u > -eps && u < 1.0 + eps && v > -eps && v < 1.0 + eps;
      if (inside)
        ++n;
      else if (near)
        throw Ambiguous("crossing on the domain boundary");
    }
  return n;
}

int TracingOracle::self_intersection(const fsimple::Word& w) const {
  const auto ch = trace(w);
  return count_crossings(ch, ch, true);
}

int TracingOracle::intersection(const fsimple::Word& u, const fsimple::Word& v) const {
  return count_crossings(trace(u), trace(v), false);
}

namespace {

// Generic centres near the basepoint, built once per group.
const std::vector<std::unique_ptr<TracingOracle>>& oracles_for(const fsimple::SurfaceGroup& G) {
  static std::mutex mu;
  static std::map<std::string, std::vector<std::unique_ptr<TracingOracle>>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(G.key());
  if (it != memo.end()) return it->second;
  std::vector<std::unique_ptr<TracingOracle>> v;
  const double y = G.basepoint.imag();
  for (C off : {C(0.031, 0.017), C(-0.043, -0.011), C(0.067, 0.041), C(-0.021, 0.063), C(0.052, -0.048)})
    v.push_back(std::make_unique<TracingOracle>(G, G.basepoint + y * off));
  return memo.emplace(G.key(), std::move(v)).first->second;
}

template <class F>
int first_unambiguous(const fsimple::SurfaceGroup& G, F&& run) {
  std::string last;
  for (const auto& o : oracles_for(G)) {
    try {
      return run(*o);
    } catch (const Ambiguous& e) {
      last = e.what();
    }
  }
  throw Ambiguous("every centre was ambiguous: " + last);
}

}  // namespace

int traced_self_intersection(const fsimple::SurfaceGroup& G, const fsimple::Word& w) {
  return first_unambiguous(G, [&](const TracingOracle& o) { return o.self_intersection(w); });
}

int traced_intersection(const fsimple::SurfaceGroup& G, const fsimple::Word& u, const fsimple::Word& v) {
  return first_unambiguous(G, [&](const TracingOracle& o) { return o.intersection(u, v); });
}

}  // namespace oracle
