#ifndef STRIMP_SEQUENTS_HPP_
#define STRIMP_SEQUENTS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "strimp/formula.hpp"

namespace strimp {

/// Right-simple sequent: a finite context set and one goal formula.
class Sequent {
 public:
  Sequent(FormulaSet context, Formula goal);

  const FormulaSet& context() const { return context_; }
  const Formula& goal() const { return goal_; }

  bool operator==(const Sequent& other) const;
  std::strong_ordering operator<=>(const Sequent& other) const;

  std::string to_string() const;  // "a, b ; goal"

 private:
  FormulaSet context_;
  Formula goal_;
};

enum class RuleName {
  A,
  Mon,
  Cut,
  Bot,
  AndI,
  AndE_L,
  AndE_R,
  Imp0,
  Imp1,
  Imp2,
  Refl,
  Tran,
  Sym1,
  Sym2,
  PropMinus,
  PropTr,
  PropSy,
};

inline constexpr RuleName kAllRules[] = {
    RuleName::A,      RuleName::Mon,    RuleName::Cut,       RuleName::Bot,
    RuleName::AndI,   RuleName::AndE_L, RuleName::AndE_R,    RuleName::Imp0,
    RuleName::Imp1,   RuleName::Imp2,   RuleName::Refl,      RuleName::Tran,
    RuleName::Sym1,   RuleName::Sym2,   RuleName::PropMinus,
    RuleName::PropTr, RuleName::PropSy};

/// Premise count: 0 for axioms, 1 for Mon/Imp1, 2 for Cut/Sym1.
int rule_arity(RuleName r);
std::string rule_name(RuleName r);
std::optional<RuleName> rule_from_name(const std::string& name);

/// Instantiation witnesses for a rule application. Which fields a rule
/// reads: A{phi}; Mon{}; Cut{gamma,psi}; Bot{phi}; AndI/AndE{phi,psi};
/// Imp0{phi}; Imp1{psi}; Imp2{phi,psi,chi}; Refl{phi,psi}; Tran{phi,psi};
/// Sym1{gamma,phi,psi}; Sym2{alpha,phi,psi,chi}; Prop*{atom}.
struct RuleParams {
  std::optional<Formula> phi;
  std::optional<Formula> psi;
  std::optional<Formula> chi;
  std::optional<Formula> alpha;
  std::optional<FormulaSet> gamma;
  std::optional<std::string> atom;
};

enum class SystemTag { Kp, Tp, Bp, V, KB4p, I, O, C };

inline constexpr SystemTag kAllSystems[] = {
    SystemTag::Kp,   SystemTag::Tp, SystemTag::Bp, SystemTag::V,
    SystemTag::KB4p, SystemTag::I,  SystemTag::O,  SystemTag::C};

/// One of the eight axiomatized systems: the common base rules
/// {A, Mon, Cut, Bot, AndI, AndE_L, AndE_R, Imp0, Imp1, Imp2} plus the
/// per-system extras.
class ProofSystem {
 public:
  explicit ProofSystem(SystemTag tag);

  SystemTag tag() const { return tag_; }
  bool allows(RuleName r) const;
  const std::vector<RuleName>& allowed() const { return allowed_; }

  std::string name() const;  // CLI tag: kp, tp, bp, v, kb4p, i, o, c
  static std::optional<ProofSystem> from_name(const std::string& name);

 private:
  SystemTag tag_;
  std::vector<RuleName> allowed_;
};

struct StepCheck {
  bool ok = false;
  std::string reason;  // empty when ok

  static StepCheck pass() { return {true, ""}; }
  static StepCheck fail(std::string why) { return {false, std::move(why)}; }
};

/// Checks one rule application against its schema. Premises are given as
/// bare sequents; params carry the rule's witnesses.
StepCheck check_step(const Sequent& conclusion, RuleName rule,
                     const RuleParams& params,
                     const std::vector<Sequent>& premises);

/// Derivation tree: conclusion, rule, witnesses and sub-derivations.
struct Derivation {
  Sequent conclusion;
  RuleName rule;
  RuleParams params;
  std::vector<Derivation> premises;
};

struct DerivationCheck {
  bool ok = false;
  std::string reason;
  std::vector<int> path;  // child indices from the root to the failing node

  static DerivationCheck pass() { return {true, "", {}}; }
};

/// Checks every node in preorder; reports the first node whose rule is not
/// in the system or whose step fails.
DerivationCheck check_derivation(const Derivation& d, const ProofSystem& sys);

/// Derived-rule expansions, following the standard constructions:
/// dt0 turns a derivation of ({phi}, psi) into one of ({}, phi->psi) via
/// Imp1, Imp0 and Cut; the fin rules build n-ary conjunction
/// introduction/projection out of AndI/AndE and Cut; the imp_fin rules wrap
/// the fin rules in Imp1.
Derivation expand_dt0(const Derivation& premise);
Derivation expand_fin_and_i(const std::vector<Formula>& fs);
/// index is 1-based, matching the projection "⊢ φ_i".
Derivation expand_fin_and_e(const std::vector<Formula>& fs, std::size_t index);
Derivation expand_imp_fin_and_i(const Formula& alpha,
                                const std::vector<Formula>& fs);
Derivation expand_imp_fin_and_e(const Formula& alpha,
                                const std::vector<Formula>& fs,
                                std::size_t index);

}  // namespace strimp

#endif  // STRIMP_SEQUENTS_HPP_
