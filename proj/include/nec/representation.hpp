#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nec/permutation.hpp"
#include "nec/signature.hpp"

namespace nec {

/// Bad generator set or degree when binding permutations to a presentation.
class ActionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Permutation action of the canonical generators of an NEC group on the
/// cosets 1..N of a subgroup. The subgroup is the stabilizer of point 1.
class CosetAction {
 public:
  /// Images are given per generator name; every canonical generator must be
  /// present exactly once and have degree `degree`.
  CosetAction(NecSignature const& sig, int degree,
              std::map<std::string, Permutation> const& images);

  /// Images indexed like `presentation().generators()`.
  CosetAction(NecSignature const& sig, std::vector<Permutation> images);

  static CosetAction trivial(NecSignature const& sig);

  NecSignature const& signature() const noexcept {
    return presentation_.signature();
  }
  Presentation const& presentation() const noexcept { return presentation_; }
  int degree() const noexcept { return degree_; }

  Permutation const& image(int generator) const { return images_.at(generator); }
  Permutation const& image(std::string_view name) const;
  std::vector<Permutation> const& images() const noexcept { return images_; }

  Permutation evaluate(std::vector<Letter> const& word) const;
  Permutation evaluate(Relator const& rel) const;

  friend bool operator==(CosetAction const& a, CosetAction const& b) {
    return a.signature() == b.signature() && a.images_ == b.images_;
  }

 private:
  Presentation presentation_;
  int degree_ = 1;
  std::vector<Permutation> images_;
};

/// Expected generator names, comma separated.
std::string expected_generator_names(Presentation const& pres);

struct RelatorFailure {
  int relator;  // index into presentation().relators()
  std::string text;
  Permutation image;
};

struct ActionReport {
  int relators_checked = 0;
  std::vector<RelatorFailure> failures;
  std::vector<std::vector<Point>> orbits;
  bool transitive = false;

  bool ok() const noexcept { return failures.empty() && transitive; }
  bool only_long_relation_fails(Presentation const& pres) const;
};

/// Evaluates every relator and checks transitivity. Never stops at the first
/// failure.
ActionReport validate_action(CosetAction const& action);

/// Re-bases the action on the orbit of `p`: p becomes point 1, the remaining
/// orbit points keep their relative order.
CosetAction restrict_to_orbit(CosetAction const& action, Point p);

/// Index of the stabilizer of point 1. Throws ActionError when intransitive.
int point_stabilizer_index(CosetAction const& action);

enum class OrientabilityKind { fuchsian, orientable_nec, nonorientable };

std::string to_string(OrientabilityKind kind);

struct WitnessStep {
  Point from;
  int generator;
  bool inverse;
  Point to;
};

/// Closed walk in the Schreier graph with reflection loops removed.
struct Witness {
  Point base = 1;
  std::vector<WitnessStep> steps;

  std::vector<Letter> word() const;
};

struct OrientabilityVerdict {
  OrientabilityKind kind = OrientabilityKind::fuchsian;
  int reflection_loops = 0;
  std::optional<Witness> witness;  // set iff kind == nonorientable
};

/// Sign propagation over a spanning forest of the Schreier graph with
/// reflection loops deleted. `shuffle_seed` randomizes the traversal order
/// (vertex roots and generator order); the verdict never depends on it.
OrientabilityVerdict orientability(
    CosetAction const& action,
    std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Product of the generator orientation signs along `word`.
int word_sign(Presentation const& pres, std::vector<Letter> const& word);

}  // namespace nec
