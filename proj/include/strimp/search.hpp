#ifndef STRIMP_SEARCH_HPP_
#define STRIMP_SEARCH_HPP_

#include <optional>

#include "strimp/sequents.hpp"

namespace strimp {

struct SearchConfig {
  SystemTag system = SystemTag::Kp;
  int max_depth = 6;
  int formula_size_cap = 16;  // bound on synthesized witness formulas
};

/// Tree depth: 1 for a leaf node.
int derivation_depth(const Derivation& d);

/// Bounded backward proof search with iterative deepening on tree depth.
/// Any returned tree concludes exactly s and passes check_derivation in the
/// configured system. Not-found carries no semantic claim.
std::optional<Derivation> prove(const Sequent& s, const SearchConfig& cfg);

}  // namespace strimp

#endif  // STRIMP_SEARCH_HPP_
