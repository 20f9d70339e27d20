#include "strimp/search.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "strimp/consequence.hpp"

namespace strimp {

int derivation_depth(const Derivation& d) {
  int deepest = 0;
  for (const Derivation& p : d.premises) {
    deepest = std::max(deepest, derivation_depth(p));
  }
  return 1 + deepest;
}

namespace {

void collect_subformulas(const Formula& f, FormulaSet& out) {
  out.insert(f);
  if (f.is(Formula::Kind::And) || f.is(Formula::Kind::Imp)) {
    collect_subformulas(f.left(), out);
    collect_subformulas(f.right(), out);
  }
}

class Prover {
 public:
  Prover(const Sequent& root, const SearchConfig& cfg)
      : sys_(cfg.system), cfg_(cfg) {
    // Witness pool for Cut and Sym1: subformulas of the root sequent,
    // closed under one f -> _|_ wrap and identities f -> f, size-capped.
    FormulaSet subs;
    for (const Formula& f : root.context()) collect_subformulas(f, subs);
    collect_subformulas(root.goal(), subs);
    FormulaSet pool = subs;
    for (const Formula& f : subs) {
      pool.insert(Formula::imp(f, Formula::bottom()));
      pool.insert(Formula::imp(f, f));
    }
    for (const Formula& f : pool) {
      if (formula_size(f) <= cfg.formula_size_cap) witnesses_.push_back(f);
    }

    // Small members of the matching class: a subgoal refuted by one of
    // them is non-derivable by soundness, so the search drops it at once.
    std::set<std::string> atom_set = atoms(root.context());
    for (const std::string& a : atoms(root.goal())) atom_set.insert(a);
    if (static_cast<int>(atom_set.size()) <= kEnumerationAtomCap) {
      std::vector<std::string> atom_list(atom_set.begin(), atom_set.end());
      for (int n = 1; n <= 2; ++n) {
        for (Model& m : enumerate_class(class_of(cfg.system), n, atom_list)) {
          refuters_.push_back(std::move(m));
        }
      }
    }
  }

  std::optional<Derivation> run(const Sequent& root) {
    for (int depth = 1; depth <= cfg_.max_depth; ++depth) {
      if (auto d = attempt(root, depth)) return d;
    }
    return std::nullopt;
  }

 private:
  bool refuted(const Sequent& s) {
    auto it = refuted_cache_.find(s);
    if (it != refuted_cache_.end()) return it->second;
    bool result = false;
    for (const Model& m : refuters_) {
      for (int w = 0; w < m.frame().size() && !result; ++w) {
        if (!sequent_true_at(m, w, s)) result = true;
      }
      if (result) break;
    }
    refuted_cache_.emplace(s, result);
    return result;
  }

  std::optional<Derivation> attempt(const Sequent& s, int budget) {
    if (budget <= 0) return std::nullopt;
    if (auto it = proved_.find(s);
        it != proved_.end() && derivation_depth(it->second) <= budget) {
      return it->second;
    }
    if (auto it = failed_.find(s); it != failed_.end() && it->second >= budget) {
      return std::nullopt;
    }
    if (refuted(s)) {
      failed_[s] = cfg_.max_depth;
      return std::nullopt;
    }

    std::optional<Derivation> result = try_axioms(s, budget);
    if (!result) result = try_imp1(s, budget);
    if (!result && sys_.allows(RuleName::Sym1)) result = try_sym1(s, budget);
    if (!result) result = try_cut(s, budget);

    if (result) {
      auto it = proved_.find(s);
      if (it == proved_.end() ||
          derivation_depth(it->second) > derivation_depth(*result)) {
        proved_.insert_or_assign(s, *result);
      }
      return result;
    }
    auto [it, inserted] = failed_.emplace(s, budget);
    if (!inserted) it->second = std::max(it->second, budget);
    return std::nullopt;
  }

  // Wraps an exact-context axiom instance in Mon when the goal sequent has
  // a larger context.
  std::optional<Derivation> finish_axiom(const Sequent& s, int budget,
                                         RuleName rule, RuleParams params,
                                         FormulaSet instance_context) {
    Sequent instance(std::move(instance_context), s.goal());
    Derivation node{instance, rule, std::move(params), {}};
    if (instance.context() == s.context()) return node;
    if (budget < 2) return std::nullopt;
    return Derivation{s, RuleName::Mon, RuleParams{}, {std::move(node)}};
  }

  std::optional<Derivation> try_axioms(const Sequent& s, int budget) {
    const FormulaSet& ctx = s.context();
    const Formula& goal = s.goal();
    const Formula bottom = Formula::bottom();
    const Formula top = Formula::imp(bottom, bottom);

    auto in_ctx = [&](const Formula& f) { return ctx.count(f) > 0; };

    if (sys_.allows(RuleName::A) && in_ctx(goal)) {
      RuleParams params;
      params.phi = goal;
      return Derivation{s, RuleName::A, std::move(params), {}};
    }

    if (sys_.allows(RuleName::Bot) && in_ctx(bottom)) {
      RuleParams params;
      params.phi = goal;
      if (auto d = finish_axiom(s, budget, RuleName::Bot, std::move(params),
                                {bottom})) {
        return d;
      }
    }

    if (sys_.allows(RuleName::AndI) && goal.is(Formula::Kind::And) &&
        in_ctx(goal.left()) && in_ctx(goal.right())) {
      RuleParams params;
      params.phi = goal.left();
      params.psi = goal.right();
      if (auto d = finish_axiom(s, budget, RuleName::AndI, std::move(params),
                                {goal.left(), goal.right()})) {
        return d;
      }
    }

    for (const Formula& c : ctx) {
      if (!c.is(Formula::Kind::And)) continue;
      if (sys_.allows(RuleName::AndE_L) && c.left() == goal) {
        RuleParams params;
        params.phi = c.left();
        params.psi = c.right();
        if (auto d = finish_axiom(s, budget, RuleName::AndE_L,
                                  std::move(params), {c})) {
          return d;
        }
      }
      if (sys_.allows(RuleName::AndE_R) && c.right() == goal) {
        RuleParams params;
        params.phi = c.left();
        params.psi = c.right();
        if (auto d = finish_axiom(s, budget, RuleName::AndE_R,
                                  std::move(params), {c})) {
          return d;
        }
      }
    }

    if (sys_.allows(RuleName::Imp0) && goal.is(Formula::Kind::Imp) &&
        goal.left() == goal.right()) {
      RuleParams params;
      params.phi = goal.left();
      if (auto d =
              finish_axiom(s, budget, RuleName::Imp0, std::move(params), {})) {
        return d;
      }
    }

    if (sys_.allows(RuleName::Imp2) && goal.is(Formula::Kind::Imp)) {
      for (const Formula& c : ctx) {
        if (!c.is(Formula::Kind::Imp) || !(c.left() == goal.left())) continue;
        Formula partner = Formula::imp(c.right(), goal.right());
        if (!in_ctx(partner)) continue;
        RuleParams params;
        params.phi = goal.left();
        params.psi = c.right();
        params.chi = goal.right();
        if (auto d = finish_axiom(s, budget, RuleName::Imp2, std::move(params),
                                  {c, partner})) {
          return d;
        }
      }
    }

    if (sys_.allows(RuleName::Refl)) {
      for (const Formula& c : ctx) {
        if (!c.is(Formula::Kind::Imp) || !(c.right() == goal)) continue;
        if (!in_ctx(c.left())) continue;
        RuleParams params;
        params.phi = c.left();
        params.psi = c.right();
        if (auto d = finish_axiom(s, budget, RuleName::Refl, std::move(params),
                                  {c.left(), c})) {
          return d;
        }
      }
    }

    if (sys_.allows(RuleName::Tran) && goal.is(Formula::Kind::Imp) &&
        goal.left() == top && goal.right().is(Formula::Kind::Imp) &&
        in_ctx(goal.right())) {
      RuleParams params;
      params.phi = goal.right().left();
      params.psi = goal.right().right();
      if (auto d = finish_axiom(s, budget, RuleName::Tran, std::move(params),
                                {goal.right()})) {
        return d;
      }
    }

    if (sys_.allows(RuleName::Sym2) && goal.is(Formula::Kind::Imp) &&
        goal.left().is(Formula::Kind::And)) {
      Formula alpha = goal.left().left();
      Formula phi = goal.left().right();
      Formula chi = goal.right();
      for (const Formula& c : ctx) {
        // looking for (alpha & psi) -> chi
        if (!c.is(Formula::Kind::Imp) || !(c.right() == chi)) continue;
        if (!c.left().is(Formula::Kind::And)) continue;
        if (!(c.left().left() == alpha)) continue;
        Formula psi = c.left().right();
        Formula partner = Formula::imp(
            Formula::conj(alpha, Formula::imp(Formula::imp(phi, psi),
                                              Formula::bottom())),
            chi);
        if (!in_ctx(partner)) continue;
        RuleParams params;
        params.alpha = alpha;
        params.phi = phi;
        params.psi = psi;
        params.chi = chi;
        if (auto d = finish_axiom(s, budget, RuleName::Sym2, std::move(params),
                                  {c, partner})) {
          return d;
        }
      }
    }

    struct PropPattern {
      RuleName rule;
      bool matches;
      Formula p;
    };
    if (goal.is(Formula::Kind::Imp)) {
      std::vector<PropPattern> patterns;
      Formula head = goal.left();
      Formula tail = goal.right();
      if (tail.is(Formula::Kind::Atom)) {
        // ((_|_ -> _|_) -> _|_) -> p
        patterns.push_back({RuleName::PropMinus,
                            head == Formula::imp(top, bottom), tail});
        // (_|_ -> _|_) -> p
        patterns.push_back({RuleName::PropTr, head == top, tail});
        // ((p -> _|_) -> _|_) -> p
        patterns.push_back(
            {RuleName::PropSy,
             head == Formula::imp(Formula::imp(tail, bottom), bottom), tail});
      }
      for (const PropPattern& pat : patterns) {
        if (!pat.matches || !sys_.allows(pat.rule) || !in_ctx(pat.p)) continue;
        RuleParams params;
        params.atom = pat.p.atom_name();
        if (auto d = finish_axiom(s, budget, pat.rule, std::move(params),
                                  {pat.p})) {
          return d;
        }
      }
    }

    return std::nullopt;
  }

  std::optional<Derivation> try_imp1(const Sequent& s, int budget) {
    if (budget < 2 || !s.goal().is(Formula::Kind::Imp)) return std::nullopt;
    Formula psi = s.goal().left();
    FormulaSet stripped;
    for (const Formula& c : s.context()) {
      if (!c.is(Formula::Kind::Imp) || !(c.left() == psi)) return std::nullopt;
      stripped.insert(c.right());
    }
    Sequent premise(std::move(stripped), s.goal().right());
    auto sub = attempt(premise, budget - 1);
    if (!sub) return std::nullopt;
    RuleParams params;
    params.psi = psi;
    return Derivation{s, RuleName::Imp1, std::move(params), {std::move(*sub)}};
  }

  std::optional<Derivation> try_sym1(const Sequent& s, int budget) {
    if (budget < 2) return std::nullopt;
    for (const Formula& phi : s.context()) {
      FormulaSet gamma = s.context();
      gamma.erase(phi);
      for (const Formula& psi : witnesses_) {
        Formula wrapped =
            Formula::imp(Formula::imp(phi, psi), Formula::bottom());
        if (formula_size(wrapped) > cfg_.formula_size_cap) continue;
        FormulaSet first_ctx = gamma;
        first_ctx.insert(psi);
        FormulaSet second_ctx = gamma;
        second_ctx.insert(wrapped);
        auto first = attempt(Sequent(std::move(first_ctx), s.goal()),
                             budget - 1);
        if (!first) continue;
        auto second = attempt(Sequent(std::move(second_ctx), s.goal()),
                              budget - 1);
        if (!second) continue;
        RuleParams params;
        params.gamma = gamma;
        params.phi = phi;
        params.psi = psi;
        return Derivation{s, RuleName::Sym1, std::move(params),
                          {std::move(*first), std::move(*second)}};
      }
    }
    return std::nullopt;
  }

  std::optional<Derivation> try_cut(const Sequent& s, int budget) {
    if (budget < 2) return std::nullopt;
    for (const Formula& psi : witnesses_) {
      if (s.context().count(psi) > 0) continue;
      FormulaSet major_ctx = s.context();
      major_ctx.insert(psi);
      auto major = attempt(Sequent(std::move(major_ctx), s.goal()), budget - 1);
      if (!major) continue;
      auto minor = attempt(Sequent(s.context(), psi), budget - 1);
      if (!minor) continue;
      RuleParams params;
      params.gamma = s.context();
      params.psi = psi;
      return Derivation{s, RuleName::Cut, std::move(params),
                        {std::move(*major), std::move(*minor)}};
    }
    return std::nullopt;
  }

  ProofSystem sys_;
  SearchConfig cfg_;
  std::vector<Formula> witnesses_;
  std::vector<Model> refuters_;
  std::map<Sequent, bool> refuted_cache_;
  std::map<Sequent, Derivation> proved_;
  std::map<Sequent, int> failed_;
};

}  // namespace

std::optional<Derivation> prove(const Sequent& s, const SearchConfig& cfg) {
  if (cfg.max_depth < 1) throw Error("prove: max_depth must be positive");
  Prover prover(s, cfg);
  auto result = prover.run(s);
  if (result) {
    DerivationCheck check = check_derivation(*result, ProofSystem(cfg.system));
    if (!check.ok) {
      throw Error("prove: internal error, produced tree fails to check: " +
                  check.reason);
    }
    if (!(result->conclusion == s)) {
      throw Error("prove: internal error, tree concludes the wrong sequent");
    }
  }
  return result;
}

}  // namespace strimp
