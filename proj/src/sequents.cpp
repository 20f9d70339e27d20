#include "strimp/sequents.hpp"

#include <algorithm>
#include <utility>

namespace strimp {

namespace {

FormulaSet set_union(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

FormulaSet set_with(const FormulaSet& a, const Formula& f) {
  FormulaSet out = a;
  out.insert(f);
  return out;
}

bool subset_of(const FormulaSet& a, const FormulaSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Formula bot() { return Formula::bottom(); }

// (bot -> bot)
Formula top_imp() { return Formula::imp(bot(), bot()); }

}  // namespace

Sequent::Sequent(FormulaSet context, Formula goal)
    : context_(std::move(context)), goal_(std::move(goal)) {}

bool Sequent::operator==(const Sequent& other) const {
  return goal_ == other.goal_ && context_ == other.context_;
}

std::strong_ordering Sequent::operator<=>(const Sequent& other) const {
  if (auto c = goal_ <=> other.goal_; c != std::strong_ordering::equal) {
    return c;
  }
  if (auto c = context_.size() <=> other.context_.size();
      c != std::strong_ordering::equal) {
    return c;
  }
  auto it = context_.begin();
  auto jt = other.context_.begin();
  for (; it != context_.end(); ++it, ++jt) {
    if (auto c = *it <=> *jt; c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

std::string Sequent::to_string() const {
  std::string out;
  bool first = true;
  for (const Formula& f : context_) {
    if (!first) out += ", ";
    out += strimp::to_string(f);
    first = false;
  }
  out += " ; ";
  out += strimp::to_string(goal_);
  return out;
}

int rule_arity(RuleName r) {
  switch (r) {
    case RuleName::Mon:
    case RuleName::Imp1:
      return 1;
    case RuleName::Cut:
    case RuleName::Sym1:
      return 2;
    default:
      return 0;
  }
}

std::string rule_name(RuleName r) {
  switch (r) {
    case RuleName::A:
      return "A";
    case RuleName::Mon:
      return "Mon";
    case RuleName::Cut:
      return "Cut";
    case RuleName::Bot:
      return "Bot";
    case RuleName::AndI:
      return "AndI";
    case RuleName::AndE_L:
      return "AndE_L";
    case RuleName::AndE_R:
      return "AndE_R";
    case RuleName::Imp0:
      return "Imp0";
    case RuleName::Imp1:
      return "Imp1";
    case RuleName::Imp2:
      return "Imp2";
    case RuleName::Refl:
      return "Refl";
    case RuleName::Tran:
      return "Tran";
    case RuleName::Sym1:
      return "Sym1";
    case RuleName::Sym2:
      return "Sym2";
    case RuleName::PropMinus:
      return "PropMinus";
    case RuleName::PropTr:
      return "PropTr";
    case RuleName::PropSy:
      return "PropSy";
  }
  throw Error("rule_name: unknown rule");
}

std::optional<RuleName> rule_from_name(const std::string& name) {
  for (RuleName r : kAllRules) {
    if (rule_name(r) == name) return r;
  }
  return std::nullopt;
}

ProofSystem::ProofSystem(SystemTag tag) : tag_(tag) {
  allowed_ = {RuleName::A,     RuleName::Mon,    RuleName::Cut,
              RuleName::Bot,   RuleName::AndI,   RuleName::AndE_L,
              RuleName::AndE_R, RuleName::Imp0,  RuleName::Imp1,
              RuleName::Imp2};
  switch (tag) {
    case SystemTag::Kp:
      allowed_.push_back(RuleName::PropMinus);
      break;
    case SystemTag::Tp:
      allowed_.push_back(RuleName::Refl);
      allowed_.push_back(RuleName::PropMinus);
      break;
    case SystemTag::Bp:
      allowed_.push_back(RuleName::Sym1);
      allowed_.push_back(RuleName::Sym2);
      allowed_.push_back(RuleName::PropSy);
      break;
    case SystemTag::V:
      allowed_.push_back(RuleName::Tran);
      allowed_.push_back(RuleName::PropTr);
      break;
    case SystemTag::KB4p:
      allowed_.push_back(RuleName::Tran);
      allowed_.push_back(RuleName::Sym1);
      allowed_.push_back(RuleName::Sym2);
      allowed_.push_back(RuleName::PropTr);
      break;
    case SystemTag::I:
      allowed_.push_back(RuleName::Refl);
      allowed_.push_back(RuleName::Tran);
      allowed_.push_back(RuleName::PropTr);
      break;
    case SystemTag::O:
      allowed_.push_back(RuleName::Refl);
      allowed_.push_back(RuleName::Sym1);
      allowed_.push_back(RuleName::Sym2);
      allowed_.push_back(RuleName::PropSy);
      break;
    case SystemTag::C:
      allowed_.push_back(RuleName::Refl);
      allowed_.push_back(RuleName::Tran);
      allowed_.push_back(RuleName::Sym1);
      allowed_.push_back(RuleName::Sym2);
      allowed_.push_back(RuleName::PropTr);
      break;
  }
}

bool ProofSystem::allows(RuleName r) const {
  return std::find(allowed_.begin(), allowed_.end(), r) != allowed_.end();
}

std::string ProofSystem::name() const {
  switch (tag_) {
    case SystemTag::Kp:
      return "kp";
    case SystemTag::Tp:
      return "tp";
    case SystemTag::Bp:
      return "bp";
    case SystemTag::V:
      return "v";
    case SystemTag::KB4p:
      return "kb4p";
    case SystemTag::I:
      return "i";
    case SystemTag::O:
      return "o";
    case SystemTag::C:
      return "c";
  }
  throw Error("ProofSystem::name: unknown tag");
}

std::optional<ProofSystem> ProofSystem::from_name(const std::string& name) {
  for (SystemTag t : kAllSystems) {
    ProofSystem sys(t);
    if (sys.name() == name) return sys;
  }
  return std::nullopt;
}

namespace {

StepCheck need(bool cond, const std::string& why) {
  return cond ? StepCheck::pass() : StepCheck::fail(why);
}

StepCheck check_axiom_shape(const Sequent& conclusion,
                            const FormulaSet& wanted_context,
                            const Formula& wanted_goal) {
  if (!(conclusion.goal() == wanted_goal)) {
    return StepCheck::fail("goal does not match the rule schema");
  }
  if (conclusion.context() != wanted_context) {
    return StepCheck::fail("context does not match the rule schema");
  }
  return StepCheck::pass();
}

}  // namespace

StepCheck check_step(const Sequent& conclusion, RuleName rule,
                     const RuleParams& params,
                     const std::vector<Sequent>& premises) {
  if (static_cast<int>(premises.size()) != rule_arity(rule)) {
    return StepCheck::fail("arity mismatch: " + rule_name(rule) + " takes " +
                           std::to_string(rule_arity(rule)) + " premise(s)");
  }

  switch (rule) {
    case RuleName::A: {
      if (!params.phi) return StepCheck::fail("missing witness phi");
      const Formula& phi = *params.phi;
      if (!(conclusion.goal() == phi)) {
        return StepCheck::fail("goal is not phi");
      }
      return need(conclusion.context().count(phi) > 0,
                  "phi not in the context");
    }

    case RuleName::Mon: {
      const Sequent& premise = premises[0];
      if (!(premise.goal() == conclusion.goal())) {
        return StepCheck::fail("goal changed across Mon");
      }
      return need(subset_of(premise.context(), conclusion.context()),
                  "premise context is not a subset of the conclusion context");
    }

    case RuleName::Cut: {
      if (!params.gamma) return StepCheck::fail("missing witness gamma");
      if (!params.psi) return StepCheck::fail("missing witness psi");
      const FormulaSet& gamma = *params.gamma;
      const Formula& psi = *params.psi;
      const Sequent& major = premises[0];  // gamma ∪ {psi} ⊢ goal
      const Sequent& minor = premises[1];  // delta ⊢ psi
      if (!(major.goal() == conclusion.goal())) {
        return StepCheck::fail("first premise goal differs from conclusion");
      }
      if (major.context() != set_with(gamma, psi)) {
        return StepCheck::fail(
            "first premise context is not gamma together with psi");
      }
      if (!(minor.goal() == psi)) {
        return StepCheck::fail("second premise goal is not psi");
      }
      return need(conclusion.context() == set_union(gamma, minor.context()),
                  "conclusion context is not gamma joined with the second "
                  "premise context");
    }

    case RuleName::Bot: {
      if (!params.phi) return StepCheck::fail("missing witness phi");
      return check_axiom_shape(conclusion, {bot()}, *params.phi);
    }

    case RuleName::AndI: {
      if (!params.phi || !params.psi) {
        return StepCheck::fail("missing witness phi/psi");
      }
      return check_axiom_shape(conclusion, {*params.phi, *params.psi},
                               Formula::conj(*params.phi, *params.psi));
    }

    case RuleName::AndE_L: {
      if (!params.phi || !params.psi) {
        return StepCheck::fail("missing witness phi/psi");
      }
      return check_axiom_shape(conclusion,
                               {Formula::conj(*params.phi, *params.psi)},
                               *params.phi);
    }

    case RuleName::AndE_R: {
      if (!params.phi || !params.psi) {
        return StepCheck::fail("missing witness phi/psi");
      }
      return check_axiom_shape(conclusion,
                               {Formula::conj(*params.phi, *params.psi)},
                               *params.psi);
    }

    case RuleName::Imp0: {
      if (!params.phi) return StepCheck::fail("missing witness phi");
      return check_axiom_shape(conclusion, {},
                               Formula::imp(*params.phi, *params.phi));
    }

    case RuleName::Imp1: {
      if (!params.psi) return StepCheck::fail("missing witness psi");
      const Formula& psi = *params.psi;
      const Sequent& premise = premises[0];
      if (!(conclusion.goal() == Formula::imp(psi, premise.goal()))) {
        return StepCheck::fail("goal is not psi -> premise goal");
      }
      FormulaSet mapped;
      for (const Formula& chi : premise.context()) {
        mapped.insert(Formula::imp(psi, chi));
      }
      return need(conclusion.context() == mapped,
                  "context is not the psi-> image of the premise context");
    }

    case RuleName::Imp2: {
      if (!params.phi || !params.psi || !params.chi) {
        return StepCheck::fail("missing witness phi/psi/chi");
      }
      return check_axiom_shape(
          conclusion,
          {Formula::imp(*params.phi, *params.psi),
           Formula::imp(*params.psi, *params.chi)},
          Formula::imp(*params.phi, *params.chi));
    }

    case RuleName::Refl: {
      if (!params.phi || !params.psi) {
        return StepCheck::fail("missing witness phi/psi");
      }
      return check_axiom_shape(
          conclusion, {*params.phi, Formula::imp(*params.phi, *params.psi)},
          *params.psi);
    }

    case RuleName::Tran: {
      if (!params.phi || !params.psi) {
        return StepCheck::fail("missing witness phi/psi");
      }
      Formula body = Formula::imp(*params.phi, *params.psi);
      return check_axiom_shape(conclusion, {body},
                               Formula::imp(top_imp(), body));
    }

    case RuleName::Sym1: {
      if (!params.gamma) return StepCheck::fail("missing witness gamma");
      if (!params.phi || !params.psi) {
        return StepCheck::fail("missing witness phi/psi");
      }
      const FormulaSet& gamma = *params.gamma;
      const Formula& phi = *params.phi;
      const Formula& psi = *params.psi;
      const Formula& chi = conclusion.goal();
      if (!(premises[0].goal() == chi) || !(premises[1].goal() == chi)) {
        return StepCheck::fail("premise goals differ from the conclusion");
      }
      if (premises[0].context() != set_with(gamma, psi)) {
        return StepCheck::fail(
            "first premise context is not gamma together with psi");
      }
      Formula negated = Formula::imp(Formula::imp(phi, psi), bot());
      if (premises[1].context() != set_with(gamma, negated)) {
        return StepCheck::fail(
            "second premise context is not gamma together with "
            "(phi -> psi) -> _|_");
      }
      return need(conclusion.context() == set_with(gamma, phi),
                  "conclusion context is not gamma together with phi");
    }

    case RuleName::Sym2: {
      if (!params.alpha || !params.phi || !params.psi || !params.chi) {
        return StepCheck::fail("missing witness alpha/phi/psi/chi");
      }
      const Formula& alpha = *params.alpha;
      const Formula& phi = *params.phi;
      const Formula& psi = *params.psi;
      const Formula& chi = *params.chi;
      Formula first = Formula::imp(Formula::conj(alpha, psi), chi);
      Formula second = Formula::imp(
          Formula::conj(alpha,
                        Formula::imp(Formula::imp(phi, psi), bot())),
          chi);
      return check_axiom_shape(
          conclusion, {first, second},
          Formula::imp(Formula::conj(alpha, phi), chi));
    }

    case RuleName::PropMinus: {
      if (!params.atom) return StepCheck::fail("missing witness atom");
      if (!is_valid_atom_name(*params.atom)) {
        return StepCheck::fail("witness p must be an atom");
      }
      Formula p = Formula::atom(*params.atom);
      return check_axiom_shape(
          conclusion, {p},
          Formula::imp(Formula::imp(top_imp(), bot()), p));
    }

    case RuleName::PropTr: {
      if (!params.atom) return StepCheck::fail("missing witness atom");
      if (!is_valid_atom_name(*params.atom)) {
        return StepCheck::fail("witness p must be an atom");
      }
      Formula p = Formula::atom(*params.atom);
      return check_axiom_shape(conclusion, {p}, Formula::imp(top_imp(), p));
    }

    case RuleName::PropSy: {
      if (!params.atom) return StepCheck::fail("missing witness atom");
      if (!is_valid_atom_name(*params.atom)) {
        return StepCheck::fail("witness p must be an atom");
      }
      Formula p = Formula::atom(*params.atom);
      return check_axiom_shape(
          conclusion, {p},
          Formula::imp(Formula::imp(Formula::imp(p, bot()), bot()), p));
    }
  }
  return StepCheck::fail("unknown rule");
}

namespace {

bool check_node(const Derivation& d, const ProofSystem& sys,
                DerivationCheck& out, std::vector<int>& path) {
  if (!sys.allows(d.rule)) {
    out.ok = false;
    out.reason = "rule-not-in-system: " + rule_name(d.rule) +
                 " is not available in " + sys.name();
    out.path = path;
    return false;
  }
  std::vector<Sequent> premise_sequents;
  premise_sequents.reserve(d.premises.size());
  for (const Derivation& p : d.premises) {
    premise_sequents.push_back(p.conclusion);
  }
  StepCheck step = check_step(d.conclusion, d.rule, d.params, premise_sequents);
  if (!step.ok) {
    out.ok = false;
    out.reason = "step-invalid: " + step.reason;
    out.path = path;
    return false;
  }
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    path.push_back(static_cast<int>(i));
    if (!check_node(d.premises[i], sys, out, path)) return false;
    path.pop_back();
  }
  return true;
}

}  // namespace

DerivationCheck check_derivation(const Derivation& d, const ProofSystem& sys) {
  DerivationCheck out = DerivationCheck::pass();
  std::vector<int> path;
  check_node(d, sys, out, path);
  return out;
}

namespace {

Derivation axiom(RuleName rule, RuleParams params, Sequent conclusion) {
  return Derivation{std::move(conclusion), rule, std::move(params), {}};
}

// Left-associated conjunction of fs[0..k].
Formula conj_prefix(const std::vector<Formula>& fs, std::size_t k) {
  Formula out = fs[0];
  for (std::size_t i = 1; i <= k; ++i) out = Formula::conj(out, fs[i]);
  return out;
}

}  // namespace

Derivation expand_dt0(const Derivation& premise) {
  if (premise.conclusion.context().size() != 1) {
    throw Error("expand_dt0: premise context must be a singleton");
  }
  Formula phi = *premise.conclusion.context().begin();
  Formula psi = premise.conclusion.goal();
  Formula phi_phi = Formula::imp(phi, phi);
  Formula phi_psi = Formula::imp(phi, psi);

  RuleParams imp1_params;
  imp1_params.psi = phi;
  Derivation imp1{Sequent({phi_phi}, phi_psi), RuleName::Imp1,
                  std::move(imp1_params), {premise}};

  RuleParams imp0_params;
  imp0_params.phi = phi;
  Derivation imp0 = axiom(RuleName::Imp0, std::move(imp0_params),
                          Sequent({}, phi_phi));

  RuleParams cut_params;
  cut_params.gamma = FormulaSet{};
  cut_params.psi = phi_phi;
  return Derivation{Sequent({}, phi_psi), RuleName::Cut, std::move(cut_params),
                    {std::move(imp1), std::move(imp0)}};
}

Derivation expand_fin_and_i(const std::vector<Formula>& fs) {
  if (fs.size() < 2) throw Error("expand_fin_and_i: need at least 2 formulas");
  std::size_t n = fs.size();
  if (n == 2) {
    RuleParams params;
    params.phi = fs[0];
    params.psi = fs[1];
    return axiom(RuleName::AndI, std::move(params),
                 Sequent({fs[0], fs[1]}, Formula::conj(fs[0], fs[1])));
  }
  std::vector<Formula> init(fs.begin(), fs.end() - 1);
  Derivation sub = expand_fin_and_i(init);  // {f1..f(n-1)} ⊢ prefix
  Formula prefix = conj_prefix(fs, n - 2);
  Formula last = fs[n - 1];

  RuleParams andi_params;
  andi_params.phi = prefix;
  andi_params.psi = last;
  Derivation andi = axiom(RuleName::AndI, std::move(andi_params),
                          Sequent({prefix, last}, Formula::conj(prefix, last)));

  RuleParams cut_params;
  cut_params.gamma = FormulaSet{last};
  cut_params.psi = prefix;
  FormulaSet all(fs.begin(), fs.end());
  return Derivation{Sequent(std::move(all), Formula::conj(prefix, last)),
                    RuleName::Cut, std::move(cut_params),
                    {std::move(andi), std::move(sub)}};
}

Derivation expand_fin_and_e(const std::vector<Formula>& fs,
                            std::size_t index) {
  std::size_t n = fs.size();
  if (n < 2) throw Error("expand_fin_and_e: need at least 2 formulas");
  if (index < 1 || index > n) {
    throw Error("expand_fin_and_e: index out of range");
  }
  Formula whole = conj_prefix(fs, n - 1);
  Formula prefix = conj_prefix(fs, n - 2);
  Formula last = fs[n - 1];
  if (index == n) {
    RuleParams params;
    params.phi = prefix;
    params.psi = last;
    return axiom(RuleName::AndE_R, std::move(params), Sequent({whole}, last));
  }
  RuleParams left_params;
  left_params.phi = prefix;
  left_params.psi = last;
  Derivation left = axiom(RuleName::AndE_L, std::move(left_params),
                          Sequent({whole}, prefix));
  if (n == 2) return left;  // index == 1, prefix == fs[0]

  std::vector<Formula> init(fs.begin(), fs.end() - 1);
  Derivation sub = expand_fin_and_e(init, index);  // {prefix} ⊢ fs[index-1]

  RuleParams cut_params;
  cut_params.gamma = FormulaSet{};
  cut_params.psi = prefix;
  return Derivation{Sequent({whole}, fs[index - 1]), RuleName::Cut,
                    std::move(cut_params), {std::move(sub), std::move(left)}};
}

namespace {

Derivation wrap_imp1(const Formula& alpha, Derivation sub) {
  FormulaSet mapped;
  for (const Formula& chi : sub.conclusion.context()) {
    mapped.insert(Formula::imp(alpha, chi));
  }
  Formula goal = Formula::imp(alpha, sub.conclusion.goal());
  RuleParams params;
  params.psi = alpha;
  return Derivation{Sequent(std::move(mapped), std::move(goal)),
                    RuleName::Imp1, std::move(params), {std::move(sub)}};
}

}  // namespace

Derivation expand_imp_fin_and_i(const Formula& alpha,
                                const std::vector<Formula>& fs) {
  return wrap_imp1(alpha, expand_fin_and_i(fs));
}

Derivation expand_imp_fin_and_e(const Formula& alpha,
                                const std::vector<Formula>& fs,
                                std::size_t index) {
  return wrap_imp1(alpha, expand_fin_and_e(fs, index));
}

}  // namespace strimp
