#include "strimp/consequence.hpp"

#include <algorithm>

namespace strimp {

bool sequent_true_at(const Model& m, int w, const Sequent& s) {
  if (w < 0 || w >= m.frame().size()) {
    throw Error("sequent_true_at: world out of range");
  }
  for (const Formula& f : s.context()) {
    if (!satisfies(m, w, f)) return true;
  }
  return satisfies(m, w, s.goal());
}

bool sequent_valid_in_model(const Model& m, const Sequent& s) {
  for (int w = 0; w < m.frame().size(); ++w) {
    if (!sequent_true_at(m, w, s)) return false;
  }
  return true;
}

Verdict semantic_consequence(const Sequent& s, ModelClass c, int max_worlds,
                             const std::vector<std::string>& atoms) {
  if (max_worlds < 1 || max_worlds > kConsequenceWorldCap) {
    throw Error("semantic_consequence: max_worlds outside 1.." +
                std::to_string(kConsequenceWorldCap));
  }
  std::set<std::string> needed = strimp::atoms(s.context());
  for (const std::string& a : strimp::atoms(s.goal())) needed.insert(a);
  for (const std::string& a : needed) {
    if (std::find(atoms.begin(), atoms.end(), a) == atoms.end()) {
      throw Error("semantic_consequence: atom '" + a +
                  "' of the sequent is not covered by the atom list");
    }
  }

  for (int n = 1; n <= max_worlds; ++n) {
    ClassEnumerator en(c, n, atoms);
    while (auto m = en.next()) {
      for (int w = 0; w < n; ++w) {
        if (!sequent_true_at(*m, w, s)) {
          return Verdict{max_worlds, PointedModel(std::move(*m), w)};
        }
      }
    }
  }
  return Verdict{max_worlds, std::nullopt};
}

ModelClass class_of(SystemTag tag) {
  switch (tag) {
    case SystemTag::Kp:
      return ModelClass::Kp;
    case SystemTag::Tp:
      return ModelClass::Tp;
    case SystemTag::Bp:
      return ModelClass::Bp;
    case SystemTag::V:
      return ModelClass::V;
    case SystemTag::KB4p:
      return ModelClass::KB4p;
    case SystemTag::I:
      return ModelClass::I;
    case SystemTag::O:
      return ModelClass::O;
    case SystemTag::C:
      return ModelClass::C;
  }
  throw Error("class_of: unknown system");
}

AuditReport soundness_audit(const Derivation& d, const ProofSystem& sys,
                            int max_worlds) {
  DerivationCheck check = check_derivation(d, sys);
  if (!check.ok) {
    return AuditReport{false, "derivation check failed: " + check.reason,
                       std::nullopt};
  }
  std::set<std::string> needed = atoms(d.conclusion.context());
  for (const std::string& a : atoms(d.conclusion.goal())) needed.insert(a);
  std::vector<std::string> atom_list(needed.begin(), needed.end());

  Verdict v = semantic_consequence(d.conclusion, class_of(sys.tag()),
                                   max_worlds, atom_list);
  if (!v.valid_up_to()) {
    return AuditReport{
        false,
        "soundness violation: countermodel found for a checkable derivation",
        v.countermodel};
  }
  return AuditReport{true, "", std::nullopt};
}

}  // namespace strimp
