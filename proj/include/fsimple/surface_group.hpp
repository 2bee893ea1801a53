#pragma once

// Genus-2 Fuchsian groups: the regular-octagon (Bolza) surface and surfaces
// glued from two pairs of pants with Fenchel-Nielsen coordinates.

#include <string>
#include <vector>

#include "fsimple/geometry.hpp"
#include "fsimple/word.hpp"

namespace fsimple {

enum class SurfaceKind { octagon, fenchel_nielsen };

struct SurfaceGroup {
  SurfaceKind kind = SurfaceKind::octagon;
  std::string label;
  std::vector<double> params;  // (l1, l2, l3, t1, t2, t3) for FN, empty otherwise
  int genus = 2;
  std::vector<Isometry> generators;
  Word relator;
  double volume = 0.0;
  // Centre of the fundamental domain used as orbit base point.
  Point basepoint{0.0, 1.0};
  // Pants curves of length l1, l2, l3 (FN surfaces only).
  std::vector<Word> gluing_curves;

  int num_generators() const noexcept { return static_cast<int>(generators.size()); }
  // Stable text identifying the group, used for cache keys.
  std::string key() const;
};

// Generators a, b, c, d with relator [a,b][c,d]. The four generators are
// systoles of length 2*arccosh(1+sqrt 2); a and b (c and d) meet once.
SurfaceGroup octagon_group();

// Throws InvalidArgument unless every l_i > 0 and all inputs are finite.
// Generators a, b are translations along the first and second pants curves;
// the word "ab" is the third. Relator a b d C B c A D.
SurfaceGroup fenchel_nielsen_group(double l1, double l2, double l3, double t1, double t2,
                                   double t3);

// Ordered product of generator matrices; throws InvalidArgument for letters
// outside the generating set.
Isometry evaluate(const SurfaceGroup& G, const Word& w);

// Relator, volume and hyperbolicity checks; throws ComputationError.
void verify_group(const SurfaceGroup& G);

// Largest entrywise deviation of the relator from +-identity.
double relator_defect(const SurfaceGroup& G);

}  // namespace fsimple
