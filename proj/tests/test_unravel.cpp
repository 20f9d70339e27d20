#include "strimp/unravel.hpp"

#include "doctest.h"
#include "strimp/classes.hpp"
#include "support/gen.hpp"

using namespace strimp;
using namespace strimp::testing;

namespace {

std::vector<std::pair<int, int>> reflexive_closure(const Frame& fr) {
  std::vector<std::pair<int, int>> pairs = fr.pairs();
  for (int w = 0; w < fr.size(); ++w) {
    if (!fr.related(w, w)) pairs.emplace_back(w, w);
  }
  return pairs;
}

bool acyclic_from(const Frame& fr, int start) {
  // plain recursive three-colour DFS, independent of the library's check
  std::vector<int> color(fr.size(), 0);
  auto dfs = [&](int w, auto&& self) -> bool {
    color[w] = 1;
    for (int t : fr.successors(w).worlds()) {
      if (color[t] == 1) return false;
      if (color[t] == 0 && !self(t, self)) return false;
    }
    color[w] = 2;
    return true;
  };
  return dfs(start, dfs);
}

}  // namespace

TEST_CASE("unravel examples") {
  SUBCASE("2-chain, full tree") {
    Model m(Frame(2, {{0, 1}}), {{"p", WorldSet::of(2, {1})}});
    UnravelledModel um = unravel(PointedModel(m, 0), std::nullopt, false);
    CHECK(um.model.frame().size() == 2);
    CHECK(um.model.frame().pairs() ==
          std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(um.depth_map == std::vector<int>{0, 1});
    CHECK(um.source_world == std::vector<int>{0, 1});
    CHECK(um.model.valuation_of("p") == WorldSet::of(2, {1}));
    CHECK_FALSE(um.truncated_at.has_value());
  }
  SUBCASE("self-loop, depth 2") {
    Model m(Frame(1, {{0, 0}}), {});
    UnravelledModel um = unravel(PointedModel(m, 0), 2, false);
    CHECK(um.model.frame().size() == 3);
    CHECK(um.model.frame().pairs() ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(um.depth_map == std::vector<int>{0, 1, 2});
  }
  SUBCASE("self-loop, depth 1, reflexive closure") {
    Model m(Frame(1, {{0, 0}}), {});
    UnravelledModel um = unravel(PointedModel(m, 0), 1, true);
    CHECK(um.model.frame().size() == 2);
    CHECK(um.model.frame().pairs() ==
          std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}});
  }
  SUBCASE("breadth-first numbering, lexicographic by source world") {
    Model m(Frame(2, {{0, 0}, {0, 1}}), {});
    UnravelledModel um = unravel(PointedModel(m, 0), 2, false);
    // paths: (0); (0,0),(0,1); (0,0,0),(0,0,1)
    CHECK(um.source_world == std::vector<int>{0, 0, 1, 0, 1});
    CHECK(um.depth_map == std::vector<int>{0, 1, 1, 2, 2});
    CHECK(um.model.frame().pairs() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {1, 4}});
  }
}

TEST_CASE("unravel input validation") {
  Model loop(Frame(1, {{0, 0}}), {});
  CHECK_THROWS_AS(unravel(PointedModel(loop, 0), std::nullopt, false), Error);
  CHECK_THROWS_AS(unravel(PointedModel(loop, 0), std::nullopt, true), Error);
  Model chain(Frame(2, {{0, 1}}), {});
  CHECK_THROWS_AS(unravel(PointedModel(chain, 0), 2, true), Error);

  // cyclic part not reachable from the point is fine
  Model side(Frame(3, {{0, 1}, {2, 2}}), {});
  CHECK(unravel(PointedModel(side, 0), std::nullopt, false)
            .model.frame()
            .size() == 2);
}

TEST_CASE("full unravelling preserves satisfaction at the path tail") {
  ModelGen models(303030, {"p", "q"});
  FormulaGen formulas(313131, {"p", "q"});
  int cases = 0;
  for (int i = 0; i < 400 && cases < 120; ++i) {
    Model m = models.model(3);
    for (int w = 0; w < m.frame().size(); ++w) {
      if (!acyclic_from(m.frame(), w)) continue;
      ++cases;
      UnravelledModel um = unravel(PointedModel(m, w), std::nullopt, false);
      for (int j = 0; j < 20; ++j) {
        Formula f = formulas.sized(6);
        for (int u = 0; u < um.model.frame().size(); ++u) {
          CHECK(satisfies(um.model, u, f) ==
                satisfies(m, um.source_world[u], f));
        }
      }
    }
  }
  CHECK(cases >= 120);
}

TEST_CASE("truncated unravelling preserves shallow formulas") {
  ModelGen models(323232, {"p", "q"});
  FormulaGen formulas(333333, {"p", "q"});
  for (int i = 0; i < 120; ++i) {
    Model m = models.model(3);
    int k = 1 + static_cast<int>(models.rng()() % 3);
    UnravelledModel um = unravel(PointedModel(m, 0), k, false);
    for (int j = 0; j < 15; ++j) {
      Formula f = formulas.sized(6);
      for (int u = 0; u < um.model.frame().size(); ++u) {
        if (imp_depth(f) <= k - um.depth_map[u]) {
          CHECK(satisfies(um.model, u, f) ==
                satisfies(m, um.source_world[u], f));
        }
      }
    }
    // the reflexive variant on the reflexive closure of the same model
    Model refl_m(Frame(m.frame().size(), reflexive_closure(m.frame())),
                 m.valuation());
    UnravelledModel rum = unravel(PointedModel(refl_m, 0), k, true);
    for (int j = 0; j < 15; ++j) {
      Formula f = formulas.sized(6);
      for (int u = 0; u < rum.model.frame().size(); ++u) {
        if (imp_depth(f) <= k - rum.depth_map[u]) {
          CHECK(satisfies(rum.model, u, f) ==
                satisfies(refl_m, rum.source_world[u], f));
        }
      }
    }
  }
}

TEST_CASE("a P- source unravels into the interpretation condition") {
  // exact on acyclic sources with the full tree
  ModelGen models(343434, {});
  int exact_cases = 0;
  for (int i = 0; i < 400 && exact_cases < 60; ++i) {
    Frame fr = models.frame(3);
    if (!acyclic_from(fr, 0)) continue;
    // draw valuations from the P--admissible subsets of the frame
    std::vector<WorldSet> admissible;
    for_each_subset(fr.size(), [&](const WorldSet& x) {
      if (pminus_admissible(fr, x)) admissible.push_back(x);
    });
    Model m(fr, {{"p", admissible[models.rng()() % admissible.size()]},
                 {"q", admissible[models.rng()() % admissible.size()]}});
    REQUIRE(class_member(m, ModelClass::Pminus));
    ++exact_cases;
    UnravelledModel um = unravel(PointedModel(m, 0), std::nullopt, false);
    CHECK(class_member(um.model, ModelClass::Kp));
  }
  CHECK(exact_cases >= 60);

  // interior worlds of a truncation satisfy the proposition inclusion
  ModelGen truncated(353535, {});
  for (int i = 0; i < 120; ++i) {
    Frame fr = truncated.frame(3);
    std::vector<WorldSet> admissible;
    for_each_subset(fr.size(), [&](const WorldSet& x) {
      if (pminus_admissible(fr, x)) admissible.push_back(x);
    });
    Model m(fr, {{"p", admissible[truncated.rng()() % admissible.size()]}});
    int k = 1 + static_cast<int>(truncated.rng()() % 3);
    UnravelledModel um = unravel(PointedModel(m, 0), k, false);
    const Frame& ufr = um.model.frame();
    WorldSet vp = um.model.valuation_of("p");
    WorldSet image = r_image(ufr, vp);
    WorldSet lhs = image & r_box(ufr, image);
    for (int u = 0; u < ufr.size(); ++u) {
      if (um.depth_map[u] < k && lhs.test(u)) CHECK(vp.test(u));
    }
  }
}

TEST_CASE("reflexive unravelling lands in the T^p conditions") {
  ModelGen models(363637, {});
  for (int i = 0; i < 120; ++i) {
    Frame base = models.frame(3);
    Frame fr(base.size(), reflexive_closure(base));
    Model m(fr, {{"p", models.subset(fr.size())}});
    int k = 1 + static_cast<int>(models.rng()() % 2);
    UnravelledModel um = unravel(PointedModel(m, 0), k, true);
    const Frame& ufr = um.model.frame();
    CHECK(frame_has(ufr, FrameCondition::Reflexive));
    WorldSet vp = um.model.valuation_of("p");
    WorldSet image = r_image(ufr, vp);
    WorldSet lhs = image & r_box(ufr, image);
    for (int u = 0; u < ufr.size(); ++u) {
      if (um.depth_map[u] < k && lhs.test(u)) CHECK(vp.test(u));
    }
  }
}

TEST_CASE("path edges form a tree rooted at world 0") {
  ModelGen models(373737, {"p"});
  for (int i = 0; i < 100; ++i) {
    Model m = models.model(3);
    int k = 1 + static_cast<int>(models.rng()() % 3);
    bool reflexive = (i % 2 == 0);
    Model source =
        reflexive
            ? Model(Frame(m.frame().size(), reflexive_closure(m.frame())),
                    m.valuation())
            : m;
    UnravelledModel um = unravel(PointedModel(source, 0), k, reflexive);
    const Frame& fr = um.model.frame();
    // dropping the loops of the reflexive closure, every non-root world
    // has exactly one predecessor and the root has none
    for (int w = 0; w < fr.size(); ++w) {
      int indegree = 0;
      for (int u : fr.predecessors(w).worlds()) {
        if (u != w) ++indegree;
      }
      if (reflexive) CHECK(fr.related(w, w));
      CHECK(indegree == (w == 0 ? 0 : 1));
    }
  }
}

TEST_CASE("the path-tail map is a bounded morphism on interior worlds") {
  ModelGen models(383838, {"p"});
  for (int i = 0; i < 150; ++i) {
    Model m = models.model(3);
    int k = 1 + static_cast<int>(models.rng()() % 3);
    UnravelledModel um = unravel(PointedModel(m, 0), k, false);
    const Frame& ufr = um.model.frame();
    for (int u = 0; u < ufr.size(); ++u) {
      // forth: edges project onto source edges
      for (int v : ufr.successors(u).worlds()) {
        CHECK(m.frame().related(um.source_world[u], um.source_world[v]));
      }
      // back: interior worlds cover every source successor
      if (um.depth_map[u] < k) {
        for (int t : m.frame().successors(um.source_world[u]).worlds()) {
          bool covered = false;
          for (int v : ufr.successors(u).worlds()) {
            if (um.source_world[v] == t) covered = true;
          }
          CHECK(covered);
        }
      }
    }
  }
}
