#include "k3cliff/linsys.hpp"

#include <cassert>
#include <sstream>

namespace k3cliff {

CohomologyValue CohomologyValue::exact(Int n) {
  if (n < 0) throw RangeError("exact cohomology dimension must be >= 0, got " + n.str());
  CohomologyValue v;
  v.kind_ = Kind::Exact;
  v.value_ = std::move(n);
  return v;
}

CohomologyValue CohomologyValue::at_least(Int n) {
  if (n < 0) throw RangeError("cohomology lower bound must be >= 0, got " + n.str());
  CohomologyValue v;
  v.kind_ = Kind::AtLeast;
  v.value_ = std::move(n);
  return v;
}

std::optional<Int> CohomologyValue::lower_bound() const {
  if (kind_ == Kind::Unknown) return std::nullopt;
  return value_;
}

std::optional<Int> CohomologyValue::exact_value() const {
  if (kind_ != Kind::Exact) return std::nullopt;
  return value_;
}

std::string to_string(const CohomologyValue& v) {
  switch (v.kind()) {
    case CohomologyValue::Kind::Exact:
      return "exact " + v.exact_value()->str();
    case CohomologyValue::Kind::AtLeast:
      return ">= " + v.lower_bound()->str();
    default:
      return "unknown";
  }
}

std::ostream& operator<<(std::ostream& os, const CohomologyValue& v) {
  return os << to_string(v);
}

std::string to_string(EffectiveSide side) {
  switch (side) {
    case EffectiveSide::Positive: return "positive";
    case EffectiveSide::Negative: return "negative";
    default: return "unknown";
  }
}

std::vector<DivisorClass> root_classes(const SurfaceModel& s) {
  const Int& g = s.genus();
  const Int& d = s.degree();
  std::vector<DivisorClass> roots;
  // B^2 = 2x((g-1)x + dy) = -2  <=>  x((g-1)x + dy) = -1, so x = +-1 and
  // (g-1)x + dy = -x; both branches need d | g.
  if (g % d == 0) {
    const Int q = g / d;
    roots.push_back({1, -q});   // x = 1: dy = -1 - (g-1) = -g
    roots.push_back({-1, q});   // x = -1: dy = 1 + (g-1) = g
  }
  for (const auto& b : roots) assert(self_intersection(s, b) == -2);
  return roots;
}

NefCertificate nef_certificate(const SurfaceModel& s) {
  NefCertificate cert;
  bool undecided = false;
  bool fails = false;
  for (const auto& root : root_classes(s)) {
    const EffectiveSide side = effective_side(s, root);
    if (side == EffectiveSide::Unknown) {
      undecided = true;
      cert.evidence.push_back({root, side, root, pairing(s, root, DivisorClass::polarization())});
      continue;
    }
    const DivisorClass eff = side == EffectiveSide::Positive ? root : -root;
    const Int el = pairing(s, eff, DivisorClass::polarization());
    cert.evidence.push_back({root, side, eff, el});
    if (el < 0) fails = true;
  }
  cert.status = fails        ? NefCertificate::Status::Fails
                : undecided  ? NefCertificate::Status::Undecided
                             : NefCertificate::Status::Holds;
  return cert;
}

BpfCertificate base_point_free_certificate(const SurfaceModel& s) {
  const Int& g = s.genus();
  const Int& d = s.degree();
  BpfCertificate cert;
  cert.method = "exact-diophantine";
  // B^2 = 2x((g-1)x + dy) = 0 splits into x = 0 or (g-1)x = -dy.
  // Branch x = 0: B.L = dy = 1 needs d | 1; impossible for d >= 2.
  if (1 % d == 0) {
    cert.obstructions.push_back({0, 1 / d});
  }
  // Branch (g-1)x = -dy: B.L = 2(g-1)x + dy = (g-1)x = 1 needs (g-1) | 1,
  // impossible for g >= 3; y must then also satisfy d | (g-1)x.
  if (1 % (g - 1) == 0) {
    const Int x = 1 / (g - 1);
    if (((g - 1) * x) % d == 0) cert.obstructions.push_back({x, -((g - 1) * x) / d});
  }
  cert.holds = cert.obstructions.empty();
  return cert;
}

EffectiveSide effective_side(const SurfaceModel& s, const DivisorClass& d) {
  if (d.is_zero()) throw RangeError("effective_side is undefined for the zero class");
  // chi(D) >= 1, i.e. D^2 >= -2, forces exactly one of +-D effective
  // (Riemann-Roch plus Serre duality); the effective one pairs > 0 with the
  // nef big class L.
  if (euler_char(s, d) < 1) return EffectiveSide::Unknown;
  const Int dl = pairing(s, d, DivisorClass::polarization());
  if (dl > 0) return EffectiveSide::Positive;
  if (dl < 0) return EffectiveSide::Negative;
  return EffectiveSide::Unknown;
}

CohomologyProfile cohomology_profile(const SurfaceModel& s, const DivisorClass& d) {
  const Int& g = s.genus();
  CohomologyProfile p;

  // Structure sheaf of a K3 surface.
  if (d.is_zero()) {
    p.h0 = CohomologyValue::exact(1);
    p.h1 = CohomologyValue::exact(0);
    p.h2 = CohomologyValue::exact(1);
    p.rule = "structure-sheaf";
    return p;
  }

  // Positive multiples of the elliptic class: h1(yE) = y - 1, h2 = 0 by
  // Serre duality (-yE not effective), h0 forced by chi = 2.
  if (d.x == 0 && d.y >= 1) {
    p.h0 = CohomologyValue::exact(d.y + 1);
    p.h1 = CohomologyValue::exact(d.y - 1);
    p.h2 = CohomologyValue::exact(0);
    p.rule = "elliptic-multiple";
    return p;
  }

  // The polarization itself: nef, big and base point free, so h1 = h2 = 0
  // and h0 = chi = g + 1 (imported standard vanishing, not a box check).
  if (d == DivisorClass::polarization()) {
    p.h0 = CohomologyValue::exact(g + 1);
    p.h1 = CohomologyValue::exact(0);
    p.h2 = CohomologyValue::exact(0);
    p.rule = "polarization-vanishing";
    return p;
  }

  const EffectiveSide side = effective_side(s, d);
  const Int chi = euler_char(s, d);

  if (side == EffectiveSide::Negative) {
    // Serre duality: h2(D) = h0(-D), h0(D) = 0 since the effective side is
    // -D. When h0(-D) is exact, chi closes h1 as well. The recursion stops
    // here: -D has positive side and never reaches this branch.
    const CohomologyProfile dual = cohomology_profile(s, -d);
    p.h0 = CohomologyValue::exact(0);
    if (auto n = dual.h0.exact_value()) {
      p.h2 = CohomologyValue::exact(*n);
      assert(*n - chi >= 0);
      p.h1 = CohomologyValue::exact(*n - chi);
    } else if (auto lb = dual.h0.lower_bound()) {
      p.h2 = CohomologyValue::at_least(*lb > 1 ? *lb : Int(1));
      p.h1 = CohomologyValue::unknown();
    } else {
      p.h2 = CohomologyValue::at_least(1);
      p.h1 = CohomologyValue::unknown();
    }
    p.rule = "serre-dual";
    return p;
  }

  if (side == EffectiveSide::Positive) {
    // D effective and nonzero: h2 = h0(-D) = 0, and h0 = chi + h1 >= chi.
    // An exact h0 is deliberately unavailable here; nothing in the ledger
    // pins h1 for these classes.
    const Int bound = chi > 1 ? chi : Int(1);
    p.h0 = CohomologyValue::at_least(bound);
    p.h1 = CohomologyValue::unknown();
    p.h2 = CohomologyValue::exact(0);
    p.rule = d == DivisorClass::polarization() - DivisorClass::elliptic()
                 ? "pencil-complement-bound"
                 : "effective-euler-bound";
    return p;
  }

  p.h0 = CohomologyValue::unknown();
  p.h1 = CohomologyValue::unknown();
  p.h2 = CohomologyValue::unknown();
  p.rule = "no-rule";
  return p;
}

RestrictionProfile restriction_to_curve(const SurfaceModel& s, const DivisorClass& d) {
  const DivisorClass L = DivisorClass::polarization();
  RestrictionProfile r;
  r.degree_on_curve = pairing(s, d, L);
  r.rule = "restriction-sequence";

  const CohomologyProfile pd = cohomology_profile(s, d);
  const CohomologyProfile pdl = cohomology_profile(s, d - L);

  // h0 side of 0 -> H0(D-L) -> H0(D) -> H0(O_C(D)) -> H1(D-L) -> ...
  // The kernel of the restriction of sections is H0(D-L); the cokernel piece
  // vanishes when h1(D-L) = 0.
  r.h0_on_curve = CohomologyValue::unknown();
  if (auto k = pdl.h0.exact_value()) {
    if (auto n = pd.h0.exact_value()) {
      const Int image = *n - *k >= 0 ? *n - *k : Int(0);
      r.h0_on_curve = pdl.h1 == CohomologyValue::exact(0)
                          ? CohomologyValue::exact(image)
                          : CohomologyValue::at_least(image);
    } else if (auto lb = pd.h0.lower_bound()) {
      const Int image = *lb - *k >= 0 ? *lb - *k : Int(0);
      r.h0_on_curve = CohomologyValue::at_least(image);
    }
  }

  // h1 side: with h1(D) = 0 the tail is 0 -> H1(O_C(D)) -> H2(D-L) -> H2(D) -> 0,
  // so h1(O_C(D)) = h2(D-L) - h2(D) = h0(L-D) - h0(-D); exact only when both
  // inputs are exact.
  r.h1_on_curve = CohomologyValue::unknown();
  if (pd.h1 == CohomologyValue::exact(0)) {
    if (auto z = pd.h2.exact_value()) {
      if (auto w = pdl.h2.exact_value()) {
        assert(*w - *z >= 0);
        r.h1_on_curve = CohomologyValue::exact(*w - *z);
      } else if (auto wb = pdl.h2.lower_bound()) {
        r.h1_on_curve = CohomologyValue::at_least(*wb - *z >= 0 ? *wb - *z : Int(0));
      }
    }
  }

  // The witness pencil: for in-range models the restriction of E computes a
  // pencil, h0(O_C(E)) = h0(E) = 2. The exactness is imported from the
  // constancy of the Clifford index across |L| (the same import every
  // certificate records); the sequence alone only gives >= 2.
  if (d == DivisorClass::elliptic() && 2 * s.degree() <= s.genus() + 3) {
    r.h0_on_curve = CohomologyValue::exact(2);
    r.rule = "restriction-sequence+pencil-witness(imported)";
  }

  return r;
}

}  // namespace k3cliff
