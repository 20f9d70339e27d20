#include "strimp/search.hpp"

#include "doctest.h"
#include "strimp/consequence.hpp"
#include "strimp/model_io.hpp"
#include "support/corpus.hpp"

using namespace strimp;
using namespace strimp::testing;

namespace {

std::vector<std::string> sequent_atoms(const Sequent& s) {
  std::set<std::string> names = atoms(s.context());
  for (const std::string& a : atoms(s.goal())) names.insert(a);
  return {names.begin(), names.end()};
}

}  // namespace

TEST_CASE("prove finds single axiom nodes") {
  SUBCASE("Imp0 in every system at depth 1") {
    Sequent s({}, F("p -> p"));
    for (SystemTag t : kAllSystems) {
      auto d = prove(s, SearchConfig{t, 1, 16});
      REQUIRE(d.has_value());
      CHECK(d->rule == RuleName::Imp0);
      CHECK(d->premises.empty());
    }
  }
  SUBCASE("PropSy in O at depth 1") {
    auto d = prove(Sequent({F("p")}, F("((p -> _|_) -> _|_) -> p")),
                   SearchConfig{SystemTag::O, 1, 16});
    REQUIRE(d.has_value());
    CHECK(d->rule == RuleName::PropSy);
  }
}

TEST_CASE("prove assembles the DT0 recipe for (p & q) -> p") {
  Sequent s({}, F("(p & q) -> p"));
  auto d = prove(s, SearchConfig{SystemTag::Kp, 4, 16});
  REQUIRE(d.has_value());
  CHECK(derivation_depth(*d) <= 4);
  CHECK(check_derivation(*d, ProofSystem(SystemTag::Kp)).ok);
  AuditReport audit = soundness_audit(*d, ProofSystem(SystemTag::Kp), 3);
  CHECK(audit.ok);
}

TEST_CASE("positive corpus proves within depth 6 and audits sound") {
  for (const ProveCase& pc : prove_corpus()) {
    if (!pc.expect_found) continue;
    SearchConfig cfg{pc.system, 6, 16};
    auto d = prove(pc.sequent, cfg);
    REQUIRE_MESSAGE(d.has_value(), pc.name.c_str());
    CHECK(d->conclusion == pc.sequent);
    CHECK(check_derivation(*d, ProofSystem(pc.system)).ok);
    AuditReport audit = soundness_audit(*d, ProofSystem(pc.system), 3);
    CHECK_MESSAGE(audit.ok, pc.name.c_str());
  }
}

TEST_CASE("expected-not-found goals fail and have countermodels") {
  for (const ProveCase& pc : prove_corpus()) {
    if (pc.expect_found) continue;
    SearchConfig cfg{pc.system, 6, 16};
    CHECK_MESSAGE(!prove(pc.sequent, cfg).has_value(), pc.name.c_str());
    Verdict v = semantic_consequence(pc.sequent, class_of(pc.system), 3,
                                     sequent_atoms(pc.sequent));
    REQUIRE_MESSAGE(!v.valid_up_to(), pc.name.c_str());
    // the countermodel genuinely refutes the sequent inside the class
    CHECK(class_member(v.countermodel->model(), class_of(pc.system)));
    CHECK_FALSE(sequent_true_at(v.countermodel->model(),
                                v.countermodel->point(), pc.sequent));
  }
}

TEST_CASE("search output is deterministic") {
  Sequent s({F("p & q & r")}, F("q"));
  SearchConfig cfg{SystemTag::Kp, 6, 16};
  auto a = prove(s, cfg);
  auto b = prove(s, cfg);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(derivation_to_json(*a) == derivation_to_json(*b));
}

TEST_CASE("prove validates the depth") {
  CHECK_THROWS_AS(prove(Sequent({}, F("p -> p")), SearchConfig{SystemTag::Kp,
                                                               0, 16}),
                  Error);
}
