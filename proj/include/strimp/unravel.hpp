#ifndef STRIMP_UNRAVEL_HPP_
#define STRIMP_UNRAVEL_HPP_

#include <optional>
#include <vector>

#include "strimp/kripke.hpp"

namespace strimp {

/// Tree-unfolded model. Worlds are R-paths from the source point,
/// breadth-first, lexicographic by source-world index; world 0 is the root
/// (the one-element path). The relation is path extension, plus the
/// reflexive closure for the reflexive variant.
struct UnravelledModel {
  Model model;
  std::vector<int> depth_map;      // path length (edge count) per world
  std::vector<int> source_world;   // last element of each path
  std::optional<int> truncated_at; // depth bound; nullopt for the full tree
};

/// Unravels pm from its point. depth == nullopt builds the full tree and
/// requires the reachable part to be acyclic. reflexive == true requires a
/// reflexive source frame and a finite depth (the reflexive unravelling is
/// always infinite).
UnravelledModel unravel(const PointedModel& pm, std::optional<int> depth,
                        bool reflexive);

}  // namespace strimp

#endif  // STRIMP_UNRAVEL_HPP_
