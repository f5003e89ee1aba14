#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symknot/diagram/tangle.hpp"
#include "symknot/khovanov/bigraded.hpp"
#include "symknot/khovanov/cube.hpp"
#include "symknot/symunion/symmetric_union.hpp"

namespace symknot::khovanov {

BigradedDims khovanov_homology(const PlanarDiagram& d, int max_crossings = kDefaultCrossingLimit);
BigradedDims khovanov_homology(const CubeComplex& cube);

// Basepoint is an arc label; for crossingless diagrams loops are labeled
// 1..k as in PD text.
BigradedDims reduced_khovanov(const PlanarDiagram& d, int basepoint, int max_crossings = kDefaultCrossingLimit);

struct LeeHomology {
  // (homological grading, quantum filtration grading) of each surviving
  // generator, sorted.
  std::vector<Bigrading> generators;
  // Quantum jumps of the cancellation stages that were needed, e.g. {0, 4}.
  std::vector<int> stages;
};

LeeHomology lee_homology(const PlanarDiagram& d, int max_crossings = kDefaultCrossingLimit);
// Average quantum filtration grading of the two Lee survivors of a knot.
int lee_s_invariant(const PlanarDiagram& d, int max_crossings = kDefaultCrossingLimit);
int s_from_lee(const LeeHomology& lee);

// One node of the long exact sequence
//   Kh^{i,j+1}(D1) -> Kh^{i,j}(D) -> Kh^{i-c,j-3c-1}(D0) -> Kh^{i+1,j+1}(D1)
// indexed by the grading (i, j) of D.
struct SkeinNode {
  int i = 0;
  int j = 0;
  long long dim_one = 0;   // H of the 1-resolved subcomplex
  long long dim_d = 0;
  long long dim_zero = 0;  // H of the 0-resolved quotient
  long long rank_include = 0;
  long long rank_project = 0;
  long long rank_connect = 0;  // from the zero term at (i, j) to the one term at (i+1, j)
};

struct SkeinReport {
  int crossing = 0;
  int c = 0;  // n-(D0) - n-(D)
  std::vector<SkeinNode> nodes;
  BigradedDims kh_d;
  BigradedDims kh_one;   // Kh(D1) in its own gradings
  BigradedDims kh_zero;  // Kh(D0) in its own gradings
  bool exact = false;
  // Subcomplex and quotient homology match Kh(D1), Kh(D0) under the shifts.
  bool shifts_match = false;
  std::vector<std::string> failures;
  bool ok() const { return exact && shifts_match; }
};

SkeinReport skein_les_verify(const PlanarDiagram& d, int crossing, int max_crossings = 12);

struct AxisSkeinReport {
  SkeinReport skein;
  int twist_crossing = 0;
  bool c_is_minus_one = false;
  // L = 1-resolution has two components.
  bool link_has_two_components = false;
};

// Skein sequence at the first twist crossing of a one-slot union with n > 0.
AxisSkeinReport skein_axis_verify(const symunion::SymmetricUnionSpec& spec, int max_crossings = 12);

struct FamilyMember {
  int n = 0;
  BigradedDims kh;
  bool nontrivial = false;
  std::optional<MaximalBigrading> maximal;
};

struct FamilyCheck {
  int m = 0;
  bool maximal_matches = false;
  Bigrading claim_grading;  // (-a-m, -b-2(m+1)), expected nonzero
  bool claim_nonzero = false;
  Bigrading witness;  // (a+m, b+2(m+1))
  long long witness_dim = 0;
  long long mirror_dim = 0;
  bool asymmetric = false;
  bool passed() const { return maximal_matches && claim_nonzero && asymmetric; }
};

struct FamilyReport {
  std::vector<FamilyMember> members;
  std::optional<int> k;
  std::optional<MaximalBigrading> base;
  std::vector<FamilyCheck> checks;
  bool vacuous = false;
  std::string message;
  bool passed() const;
};

// K_n = build(half, [n]) for n in [lo, hi]. The half needs one twist slot and
// an unknotted partial knot.
FamilyReport family_experiment(const diagram::TangleCode& half, int lo, int hi,
                               int max_crossings = kDefaultCrossingLimit);

}  // namespace symknot::khovanov
