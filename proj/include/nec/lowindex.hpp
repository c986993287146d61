#pragma once

#include <cstddef>
#include <vector>

#include "nec/hoare.hpp"
#include "nec/representation.hpp"
#include "nec/signature.hpp"

namespace nec {

struct IndexTwoSubgroup {
  std::vector<int> signs;  // per generator, +1 or -1
  CosetAction action;
  SubgroupReport report;
};

/// Kernels of all nontrivial homomorphisms onto C_2 = {+1, -1}, in order of
/// the bitmask (bit g set = generator g maps to -1).
std::vector<IndexTwoSubgroup> index_two_subgroups(NecSignature const& sig);

/// Largest degree accepted by search_actions.
inline constexpr int max_search_degree = 7;

struct SearchResult {
  std::vector<CosetAction> actions;
  bool truncated = false;  // stopped at the result limit
  std::size_t nodes = 0;   // search-tree nodes visited
};

/// Exhaustive depth-first search over generator images in S_N satisfying all
/// relators, keeping transitive actions only. Actions are deduplicated up to
/// relabeling of points 2..N and returned in their canonical (breadth-first
/// from point 1) labeling, in order of discovery.
SearchResult search_actions(NecSignature const& sig, int degree,
                            std::size_t limit = 100000);

/// Relabels a transitive action by breadth-first search from point 1 over the
/// generators in presentation order. Two actions agree up to a relabeling
/// fixing 1 iff their canonical forms are equal.
CosetAction canonical_labeling(CosetAction const& action);

}  // namespace nec
