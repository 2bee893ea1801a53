#pragma once

// Closed geodesics: crossing counts, systole, f-simple filtering and the
// curve families used to approximate geodesics by f-simple ones.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fsimple/enumeration.hpp"

namespace fsimple {

// Frames along the lifts of a closed geodesic through the basepoint region.
// Rotation i of the word (letters i.. then ..i-1) has axis axes[i]; frames[i]
// maps it to the imaginary axis with the foot of the basepoint at i, and
// offsets[i] is the position of that foot along the lift of rotation 0.
struct LiftFrames {
  std::vector<OrientedAxis> axes;
  std::vector<Isometry> frames;
  std::vector<Isometry> frames_inv;
  std::vector<double> offsets;
  double length = 0.0;  // sum of consecutive foot spacings
};

// Works for words of any length: products are formed with a running scale so
// entries never overflow. Throws InvalidArgument for non-hyperbolic words.
LiftFrames lift_frames(const SurfaceGroup& G, const Word& cyclic);

// Translation length of a possibly very long word (log-scale product).
double word_length(const SurfaceGroup& G, const Word& w);

// Axis of a possibly very long word.
OrientedAxis word_axis(const SurfaceGroup& G, const Word& w);

struct CrossingCount {
  int count = 0;
  bool certified = false;
  int searchRadius = 0;
  int countAtRadius2 = 0;  // count with the search radius enlarged by 2
};

struct CrossingOptions {
  int workers = 1;
  BallOptions ball;
  // intersection_number: skip translates lying on the first curve's geodesic
  // instead of rejecting (curves freely homotopic to a power of the first).
  bool allowShared = false;
};

// Default search radius: 3, the smallest radius that certifies every
// primitive octagon class of word length <= 4 (see tests).
inline constexpr int kDefaultSearchRadius = 3;

// Self-intersection number of a primitive class. Crossings of lifts with one
// period of the axis are found among translates P_i s P_j^-1 (P_i prefixes of
// the word, s in the group ball of radius searchRadius + 2); certified when
// the radius-searchRadius subset already finds them all.
// Throws InvalidArgument for non-primitive classes and ComputationError
// ("incomplete search") if the raw count is odd.
CrossingCount self_intersection(const SurfaceGroup& G, const ConjClass& cls, int searchRadius,
                                const CrossingOptions& opt = {});

// Geometric intersection number of two distinct classes.
// Throws InvalidArgument("use self_intersection") if they are the same curve.
CrossingCount intersection_number(const SurfaceGroup& G, const ConjClass& c1,
                                  const ConjClass& c2, int searchRadius,
                                  const CrossingOptions& opt = {});

struct GeodesicRecord {
  ConjClass cls;
  Isometry iso;
  double length = 0.0;
  int selfInt = 0;
  bool certified = false;
  int searchRadius = 0;
};

GeodesicRecord make_record(const SurfaceGroup& G, const ConjClass& cls, int searchRadius,
                           const CrossingOptions& opt = {});

// Records for the primitive hyperbolic classes of word length <= wordRadius,
// sorted by length then canonical word.
std::vector<GeodesicRecord> census(const SurfaceGroup& G, int wordRadius, int searchRadius,
                                   const CrossingOptions& opt = {});

struct SystoleResult {
  double length = 0.0;
  ConjClass witness;
  bool stable = false;
};

// Shortest translation length over non-trivial classes of word length <=
// radius; stable when radius - 2 gives the same value within 1e-9.
SystoleResult systole(const SurfaceGroup& G, int radius);

enum class FilterKind { constant, power, linear, logquotient };

// constant c: f = c (c >= 0); power (c, p): c t^p; linear tau: tau t;
// logquotient c: c t / log(1 + t).
struct FilterSpec {
  FilterKind kind = FilterKind::constant;
  double c = 0.0;
  double p = 1.0;

  double operator()(double t) const;
  // "constant:0", "power:1,2", "linear:0.01", "logquotient:1"
  static FilterSpec parse(const std::string& text);
  std::string str() const;
};

// Records with selfInt <= f(length), ordered by length. Throws
// ComputationError on an uncertified record.
std::vector<GeodesicRecord> f_simple_filter(const std::vector<GeodesicRecord>& records,
                                            const FilterSpec& f);

// n -> a_n for n = 1, 2, ...
struct Schedule {
  enum class Kind { exponential, list, minimal } kind = Kind::exponential;
  double base = 2.0;
  std::vector<long long> values;

  long long at(int n) const;  // not for Kind::minimal
  // "exp:4", "list:0,1,5", "minimal"
  static Schedule parse(const std::string& text);
  std::string str() const;
};

// gamma^n alpha^{a_n} for n = 1..count.
std::vector<Word> beta_family_power(const ConjClass& gamma, const ConjClass& alpha,
                                    const Schedule& schedule, int count);

// Minimal a_n in [0, cap] making gamma^n alpha^{a_n} f-simple (certified
// counts); throws ComputationError if none is found.
std::vector<Word> beta_family_power_minimal(const SurfaceGroup& G, const ConjClass& gamma,
                                            const ConjClass& alpha, const FilterSpec& f,
                                            int count, int searchRadius, long long cap = 64);

// eta^{a_n} gamma^{2n} omega for n = 1..count. eta must be certified simple.
std::vector<Word> beta_family_twist(const SurfaceGroup& G, const Word& gamma, const Word& omega,
                                    const Word& eta, const Schedule& schedule, int count,
                                    int searchRadius = kDefaultSearchRadius);

// Distance between the endpoint pair of the best-aligned lift of each family
// member and the endpoint pair of the axis of gamma's canonical word: the sum
// of the two chordal distances, minimized over lifts and orientations. The
// max of the two would stall whenever only one endpoint moves.
std::vector<double> endpoint_convergence(const SurfaceGroup& G, const ConjClass& gamma,
                                         const std::vector<Word>& family);

}  // namespace fsimple
