#pragma once

#include <string>
#include <vector>

#include "nec/permutation.hpp"
#include "nec/representation.hpp"
#include "nec/signature.hpp"

namespace nec {

/// Conjugate g c_{ij} g^-1 lying in the subgroup, one per coset K fixed by
/// reflection generator c{cycle}.{position}.
struct InducedReflection {
  int cycle;
  int position;
  Point coset;

  std::string name() const;  // "c1.0@3"

  friend auto operator<=>(InducedReflection const&,
                          InducedReflection const&) = default;
};

enum class OrbitKind { elliptic, link };

/// One orbit of the dihedral group generated by two linked reflections.
struct OrbitAnalysis {
  std::vector<Point> orbit;
  int m = 1;  // common length of the (cd)-cycles inside the orbit
  OrbitKind kind = OrbitKind::elliptic;
  int period = 1;  // n / m
  // link kind only
  InducedReflection end1{};
  InducedReflection end2{};
};

/// Analysis of <c{i}.{j-1}, c{i}.{j}> with link period n.
struct DihedralPairAnalysis {
  int cycle;
  int position;  // j; the pair is (c{i}.{j-1}, c{i}.{j})
  int n;
  Permutation product;
  std::vector<OrbitAnalysis> orbits;
};

struct Link {
  InducedReflection end1;
  InducedReflection end2;
  int period = 1;
  bool closing = false;  // comes from e c_0 e^-1 = c_s

  bool self_link() const { return end1 == end2; }
};

/// A closed chain of links; becomes one period cycle of the subgroup.
struct Chain {
  std::vector<InducedReflection> vertices;  // cyclic, in walking order
  std::vector<int> periods;                 // periods[t] joins vertices t, t+1
  PeriodCycle cycle;                        // periods without 1s, canonical
};

struct EllipticContribution {
  enum class Source { elliptic_generator, dihedral_orbit };
  Source source;
  std::string origin;  // "x1" or "<c1.1,c1.2>"
  std::vector<Point> cosets;
  int period;
};

struct AreaDerivation {
  Rational parent_area;
  int index;
  Rational subgroup_area;
  Rational residual;  // alpha * g
  int genus;
};

struct SubgroupReport {
  explicit SubgroupReport(CosetAction input) : action(std::move(input)) {}

  CosetAction action;
  bool unverified_input = false;  // ran with failing long relation
  std::vector<InducedReflection> induced_reflections;
  std::vector<DihedralPairAnalysis> dihedral_pairs;
  std::vector<EllipticContribution> elliptic_contributions;
  std::vector<Link> links;
  std::vector<Chain> chains;
  std::vector<int> proper_periods;
  std::vector<PeriodCycle> period_cycles;
  OrientabilityVerdict orientability;
  AreaDerivation area;
  NecSignature signature;
  std::vector<std::string> flags;
};

/// Thrown when the action contradicts the dihedral-orbit structure theorem.
class InconsistentAction : public InconsistentAnalysis {
 public:
  using InconsistentAnalysis::InconsistentAnalysis;
};

std::vector<InducedReflection> induced_reflections(CosetAction const& action);

/// Proper periods induced by the elliptic generators x_j: n/m for each cycle
/// of length m of x_j, when n/m > 1.
std::vector<EllipticContribution> proper_periods_from_elliptics(
    CosetAction const& action);

/// Orbit classification of <c, d>. `c` and `d` are generator indices of two
/// reflections linked with period n.
std::vector<OrbitAnalysis> analyze_dihedral_pair(int c, int d, int n,
                                                 CosetAction const& action);

/// Period-1 links from e_i c_{i,0} e_i^-1 = c_{i,s_i}: each fixed point k of
/// c_{i,s_i} links c_{i,s_i}@k to c_{i,0}@(k e_i).
std::vector<Link> closing_links(int cycle, CosetAction const& action);

/// Throws InconsistentAction if some vertex does not have degree 2.
std::vector<Chain> assemble_chains(std::vector<Link> const& links);

struct PipelineOptions {
  bool allow_invalid_relators = false;
};

SubgroupReport subgroup_signature(CosetAction const& action,
                                  PipelineOptions const& options = {});

/// Checks the canonical Fuchsian area relation between the input and output
/// signatures of a report.
bool fuchsian_cross_check(SubgroupReport const& report);

}  // namespace nec
