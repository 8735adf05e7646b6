#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3cliff/linsys.hpp"

namespace k3cliff {

// deg A - 2(h0(A) - 1) for a line bundle on a curve. Throws RangeError for
// h0 < 1.
Int clifford_of_bundle(const Int& degree, const Int& h0);

// Lattice form of the Clifford value of O_C(D): D.L - D^2 - 2. Symmetric
// under D <-> L - D as an algebraic identity.
Int clifford_value(const SurfaceModel& s, const DivisorClass& d);

enum class Contribution { Yes, No, Indeterminate };
std::string to_string(Contribution c);

struct ContributionResult {
  Contribution verdict = Contribution::Indeterminate;
  std::string evidence;  // the restriction dimensions the verdict rests on
};

// Whether O_C(D) contributes to the Clifford index of C: certified Yes only
// when the ledger gives h0(O_C(D)) >= 2 and h1(O_C(D)) >= 2, certified No
// only on an exact value below 2, Indeterminate otherwise.
ContributionResult contributes_to_clifford(const SurfaceModel& s, const DivisorClass& d);

// Executes the constraint elimination for a class D with D and L-D both
// effective on a model with 2 <= d <= floor((g+3)/2): pairing against the
// nef classes E and L pins x in {0,1} and bounds y, and the h1 ledger for
// multiples of E eliminates everything except (0,1) and (1,-1). Throws
// RangeError outside the degree range.
std::vector<DivisorClass> candidate_classes(const SurfaceModel& s);

struct BruteForceCensus {
  std::uint64_t examined = 0;       // classes in the box
  std::uint64_t nef_rejected = 0;   // failed a necessary nef pairing
  std::uint64_t excluded = 0;       // ledger refuted the section-count pattern
  std::uint64_t survivors = 0;
  std::uint64_t certified = 0;      // survivors with certified contribution
  std::uint64_t indeterminate = 0;  // survivors the ledger cannot settle

  friend bool operator==(const BruteForceCensus&, const BruteForceCensus&) = default;
};

struct BruteForceResult {
  std::optional<Int> minimum;          // min clifford_value over survivors
  std::vector<DivisorClass> survivors; // sorted
  BruteForceCensus census;
};

// Derived safe enumeration radius: survivors satisfy x in {0,1} and
// 0 <= y*d <= 2(g-1), so x_bound = 2 and y_bound = ceil(2(g-1)/d) + 1
// cover everything.
Int safe_x_radius();
Int safe_y_radius(const SurfaceModel& s);

// Independent enumeration oracle: scans the whole box, filters by the
// necessary nef pairings and the ledger exclusions, and reports minimum,
// survivors and a census. Throws RangeError when the bounds are below the
// derived safe radius.
BruteForceResult brute_force_clifford(const SurfaceModel& s, const Int& x_bound,
                                      const Int& y_bound);

struct CliffordCertificate {
  Int genus;
  Int degree_d;
  Int min_cliff;
  Int gonality;
  std::vector<DivisorClass> witnesses;
  std::vector<DivisorClass> candidate_set;
  bool oracle_agrees = false;
  std::optional<std::string> convention_branch;  // set for genus-3 models
  std::vector<std::string> checks;               // check log
  std::vector<std::string> assumption_log;
  BruteForceResult oracle;                       // the agreeing enumeration
};

// Minimizes the Clifford value over the candidate set, cross-checks the
// witness pencil, compares with the enumeration oracle, and packages the
// result. Genus 3 takes the convention branch keyed by d. Requires
// 2 <= d <= floor((g+3)/2).
CliffordCertificate minimum_clifford(const SurfaceModel& s);

// The gonality d, certified by the sandwich: the witness pencil has degree d
// and two sections (gonality <= d) while the Clifford bound gives
// gonality >= min_cliff + 2 = d.
Int gonality(const SurfaceModel& s);

}  // namespace k3cliff
