#ifndef STRIMP_CONSEQUENCE_HPP_
#define STRIMP_CONSEQUENCE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "strimp/classes.hpp"
#include "strimp/kripke.hpp"
#include "strimp/sequents.hpp"

namespace strimp {

/// Outcome of a bounded search for a refuting pointed model. No counter-
/// model up to the bound never claims full validity, only "valid up to".
struct Verdict {
  int max_worlds = 0;
  std::optional<PointedModel> countermodel;

  bool valid_up_to() const { return !countermodel.has_value(); }
};

/// False iff every context formula holds at (m, w) and the goal fails.
bool sequent_true_at(const Model& m, int w, const Sequent& s);

/// True iff the sequent is true at every world of m.
bool sequent_valid_in_model(const Model& m, const Sequent& s);

inline constexpr int kConsequenceWorldCap = 4;

/// Brute-force consequence over the class members with 1..max_worlds
/// worlds and valuations over the given atoms. Returns the least refuting
/// (model, point) in enumeration order (world count, then relation bitmask,
/// then valuation, then point), or a valid-up-to verdict. atoms must cover
/// every atom of s; max_worlds must be within the cap.
Verdict semantic_consequence(const Sequent& s, ModelClass c, int max_worlds,
                             const std::vector<std::string>& atoms);

/// The class a system is sound for.
ModelClass class_of(SystemTag tag);

struct AuditReport {
  bool ok = false;
  std::string reason;
  std::optional<PointedModel> violation;
};

/// Checks the derivation in sys and then confirms its conclusion is valid
/// over the enumerated members of the matching class. A countermodel here
/// signals an implementation bug, never a property of the logic.
AuditReport soundness_audit(const Derivation& d, const ProofSystem& sys,
                            int max_worlds);

}  // namespace strimp

#endif  // STRIMP_CONSEQUENCE_HPP_
