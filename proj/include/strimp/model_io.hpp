#ifndef STRIMP_MODEL_IO_HPP_
#define STRIMP_MODEL_IO_HPP_

#include <string>

#include "strimp/kripke.hpp"
#include "strimp/sequents.hpp"
#include "strimp/unravel.hpp"

namespace strimp {

/// Model file format:
///   {"worlds": n, "rel": [[s,t],...], "val": {"p":[w,...], ...}}
/// "val" may be omitted (a bare frame). World indices must be < n;
/// duplicate relation pairs are rejected.
Model model_from_json(const std::string& text);
std::string model_to_json(const Model& m, int indent = -1);

/// Unravelled model: the model format plus a "depth_map" array.
std::string unravelled_to_json(const UnravelledModel& um, int indent = -1);

/// Derivation file format:
///   {"rule": "...", "conclusion": {"ctx": [...], "goal": "..."},
///    "params": {...}, "premises": [...]}
/// Formulas are strings in the concrete formula syntax; params fields are
/// "phi", "psi", "chi", "alpha", "gamma" (array) and "p".
Derivation derivation_from_json(const std::string& text);
std::string derivation_to_json(const Derivation& d, int indent = -1);

/// Sequent text syntax: context formulas separated by commas, ";", goal.
/// Without ";" the whole string is the goal and the context is empty.
Sequent parse_sequent(const std::string& text);

}  // namespace strimp

#endif  // STRIMP_MODEL_IO_HPP_
