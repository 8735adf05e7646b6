#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3cliff/clifford.hpp"

namespace k3cliff {

struct BrillNoetherBounds {
  Int max_gonality;  // floor((g+3)/2)
  Int max_cliff;     // floor((g-1)/2) = max_gonality - 2
};

// Requires g >= 2.
BrillNoetherBounds brill_noether_bounds(const Int& genus);

enum class QueryKind { CliffordRealization, GonalityRealization };
std::string to_string(QueryKind kind);

struct TheoremQuery {
  QueryKind kind = QueryKind::CliffordRealization;
  Int genus;
  Int target;  // the requested Clifford index c or gonality k

  // Throws RangeError naming the violated bound.
  void validate() const;

  friend bool operator==(const TheoremQuery&, const TheoremQuery&) = default;
};

// Everything a realization run produces: the query, the surface with its
// assumption log, the Clifford certificate (with oracle census) and the
// linear-system checks.
struct RealizationCertificate {
  TheoremQuery query;
  SurfaceModel surface;
  CliffordCertificate clifford;
  NefCertificate nef;
  BpfCertificate bpf;
};

// Realizes a genus-g curve of Clifford index c (g >= 3, 0 <= c <= floor((g-1)/2);
// genus 3 goes through the convention branch). Sets d = c + 2.
RealizationCertificate realize_clifford(const Int& genus, const Int& cliff);

// Realizes a genus-g curve of gonality k (g >= 3, 2 <= k <= floor((g+3)/2)).
// Sets d = k.
RealizationCertificate realize_gonality(const Int& genus, const Int& gonality_target);

struct RealizationRow {
  Int genus;
  QueryKind kind = QueryKind::CliffordRealization;
  Int target;
  Int d;
  Int min_cliff;
  Int gonality;
  bool oracle_agrees = false;
  bool bpf_holds = false;
  bool nef_holds = false;
  std::optional<std::string> convention_branch;

  friend bool operator==(const RealizationRow&, const RealizationRow&) = default;
};

struct RealizationTable {
  Int genus_min;
  Int genus_max;
  std::vector<RealizationRow> rows;  // sorted by (genus, kind, target)

  friend bool operator==(const RealizationTable&, const RealizationTable&) = default;
};

// Produces a certificate row for every admissible (g, c) and (g, k) in the
// genus range, evaluating rows concurrently but assembling them in a fixed
// order. Bound violations and certificate deviations throw VerificationError
// naming the offending (g, d).
RealizationTable sweep(const Int& genus_min, const Int& genus_max);

}  // namespace k3cliff
