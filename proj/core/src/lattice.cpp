#include "k3cliff/lattice.hpp"

#include <sstream>

namespace k3cliff {

std::string to_string(const DivisorClass& d) {
  std::ostringstream os;
  os << "(" << d.x << ", " << d.y << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DivisorClass& d) {
  return os << to_string(d);
}

SurfaceModel::SurfaceModel(Int genus, Int degree)
    : genus_(std::move(genus)), degree_(std::move(degree)) {
  if (genus_ < 3)
    throw RangeError("surface model requires genus >= 3, got " + genus_.str());
  if (degree_ < 2)
    throw RangeError("surface model requires degree >= 2, got " + degree_.str());
  assumptions_ = {
      "imported: a K3 surface S with Picard lattice exactly Z*L + Z*E realizing "
      "this Gram matrix exists (surjectivity of the period map; not lattice-checkable)",
      "imported: L is nef on S",
      "imported: |E| contains a smooth elliptic curve",
  };
}

std::array<std::array<Int, 2>, 2> SurfaceModel::gram() const {
  return {{{2 * (genus_ - 1), degree_}, {degree_, Int(0)}}};
}

Int SurfaceModel::gram_determinant() const { return -(degree_ * degree_); }

SurfaceModel make_surface(const Int& genus, const Int& degree) {
  return SurfaceModel(genus, degree);
}

Int pairing(const SurfaceModel& s, const DivisorClass& a, const DivisorClass& b) {
  return 2 * (s.genus() - 1) * a.x * b.x + s.degree() * (a.x * b.y + b.x * a.y);
}

Int self_intersection(const SurfaceModel& s, const DivisorClass& d) {
  return pairing(s, d, d);
}

Int euler_char(const SurfaceModel& s, const DivisorClass& d) {
  return self_intersection(s, d) / 2 + 2;  // D^2 is even on this lattice
}

}  // namespace k3cliff
