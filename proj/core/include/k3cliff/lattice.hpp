#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "k3cliff/errors.hpp"
#include "k3cliff/numeric.hpp"

namespace k3cliff {

// A divisor class x*L + y*E in the fixed basis (L, E) of the rank-2 Picard
// lattice. Plain coordinates, no normalization: equality is coordinate
// equality, and negative coordinates are legal (effectivity is a separate
// predicate in linsys).
struct DivisorClass {
  Int x;
  Int y;

  static DivisorClass polarization() { return {1, 0}; }  // the class L
  static DivisorClass elliptic() { return {0, 1}; }      // the class E
  static DivisorClass zero() { return {0, 0}; }

  bool is_zero() const { return x == 0 && y == 0; }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

inline DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  return {a.x + b.x, a.y + b.y};
}
inline DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  return {a.x - b.x, a.y - b.y};
}
inline DivisorClass operator-(const DivisorClass& a) { return {-a.x, -a.y}; }
inline DivisorClass operator*(const Int& n, const DivisorClass& a) {
  return {n * a.x, n * a.y};
}

// Total order for deterministic census/witness output.
inline bool operator<(const DivisorClass& a, const DivisorClass& b) {
  return a.x != b.x ? a.x < b.x : a.y < b.y;
}

std::string to_string(const DivisorClass& d);
std::ostream& operator<<(std::ostream& os, const DivisorClass& d);

// The rank-2 even hyperbolic lattice Z*L + Z*E with Gram matrix
// [[2(g-1), d], [d, 0]], together with the log of geometric assumptions
// imported by the construction (existence of the surface, nefness of L,
// smoothness of a member of |E|). Those are recorded, not verified: they
// live outside the lattice model.
class SurfaceModel {
 public:
  SurfaceModel(Int genus, Int degree);

  const Int& genus() const { return genus_; }
  const Int& degree() const { return degree_; }

  std::array<std::array<Int, 2>, 2> gram() const;
  Int gram_determinant() const;  // always -d^2 (signature (1,1))

  const std::vector<std::string>& assumptions() const { return assumptions_; }

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;

 private:
  Int genus_;
  Int degree_;
  std::vector<std::string> assumptions_;
};

// Builds the model for genus g >= 3 and degree d >= 2; throws RangeError
// outside that range.
SurfaceModel make_surface(const Int& genus, const Int& degree);

// Intersection pairing 2(g-1)*x1*x2 + d*(x1*y2 + x2*y1). Symmetric bilinear.
Int pairing(const SurfaceModel& s, const DivisorClass& a, const DivisorClass& b);

// pairing(s, d, d); always even (even lattice).
Int self_intersection(const SurfaceModel& s, const DivisorClass& d);

// Riemann-Roch Euler characteristic on a K3 surface: D^2/2 + 2.
Int euler_char(const SurfaceModel& s, const DivisorClass& d);

}  // namespace k3cliff
