#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "k3cliff/lattice.hpp"

namespace k3cliff {

// A cohomology dimension as certified by the rule ledger: an exact value, a
// lower bound, or no information. The ledger never guesses; anything the
// recorded rules do not force stays Unknown or AtLeast.
class CohomologyValue {
 public:
  enum class Kind { Exact, AtLeast, Unknown };

  CohomologyValue() : kind_(Kind::Unknown), value_(0) {}  // Unknown

  static CohomologyValue exact(Int n);
  static CohomologyValue at_least(Int n);
  static CohomologyValue unknown() { return CohomologyValue(); }

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ == Kind::Exact; }
  bool is_unknown() const { return kind_ == Kind::Unknown; }

  // Payload of an Exact or AtLeast value; empty for Unknown.
  std::optional<Int> lower_bound() const;

  // Payload of an Exact value; empty otherwise.
  std::optional<Int> exact_value() const;

  friend bool operator==(const CohomologyValue&, const CohomologyValue&) = default;

 private:
  Kind kind_;
  Int value_;
};

std::string to_string(const CohomologyValue& v);
std::ostream& operator<<(std::ostream& os, const CohomologyValue& v);

// h^0/h^1/h^2 of a class on the surface, with the name of the ledger rule
// that produced them.
struct CohomologyProfile {
  CohomologyValue h0;
  CohomologyValue h1;
  CohomologyValue h2;
  std::string rule;
};

enum class EffectiveSide { Positive, Negative, Unknown };
std::string to_string(EffectiveSide side);

// Certificate that |L| is base point free: the only possible obstruction is
// a class B with B^2 = 0 and B.L = 1, and the Diophantine branch analysis
// finds none on any legal model.
struct BpfCertificate {
  bool holds = false;
  std::vector<DivisorClass> obstructions;  // every B with B^2 = 0, B.L = 1
  std::string method;                      // "exact-diophantine" or "box-search"
};

struct NefRootEvidence {
  DivisorClass root;             // the (-2)-class as returned by root_classes
  EffectiveSide side;            // which of +-root is effective
  DivisorClass effective_class;  // the effective representative
  Int pairing_with_polarization; // L . effective_class
};

struct NefCertificate {
  enum class Status { Holds, Fails, Undecided };
  Status status = Status::Holds;
  std::vector<NefRootEvidence> evidence;
  bool holds() const { return status == Status::Holds; }
};

// All classes B with B^2 = -2, exactly. B^2 = 2x((g-1)x + dy) = -2 forces
// x((g-1)x + dy) = -1, so x = +-1 and integral solutions exist iff d | g,
// giving {(1, -g/d), (-1, g/d)}.
std::vector<DivisorClass> root_classes(const SurfaceModel& s);

// Checks L against the effective side of every root class.
NefCertificate nef_certificate(const SurfaceModel& s);

// Exact Diophantine solution of B^2 = 0 and B.L = 1 (branch analysis, never
// a box scan): the search radius must not influence a certificate.
BpfCertificate base_point_free_certificate(const SurfaceModel& s);

// For D != 0 with chi(D) >= 1 exactly one of +-D is effective; the effective
// side is the one pairing positively with the nef big class L. Unknown when
// D.L = 0 or D^2 < -2. Throws RangeError on the zero class.
EffectiveSide effective_side(const SurfaceModel& s, const DivisorClass& d);

// Best profile derivable from the rule ledger (structure sheaf, multiples of
// the elliptic class, the polarization, Serre duality against an effective
// side, and the Euler-characteristic lower bound).
CohomologyProfile cohomology_profile(const SurfaceModel& s, const DivisorClass& d);

// Restriction of D to a smooth curve C in |L| through the sequence
// 0 -> O_S(D-L) -> O_S(D) -> O_C(D) -> 0, with exactness reported only when
// every needed input of the long exact sequence is exact.
struct RestrictionProfile {
  CohomologyValue h0_on_curve;
  CohomologyValue h1_on_curve;
  Int degree_on_curve;  // = D.L
  std::string rule;
};

RestrictionProfile restriction_to_curve(const SurfaceModel& s, const DivisorClass& d);

}  // namespace k3cliff
