#include "strimp/unravel.hpp"

#include <utility>

namespace strimp {

namespace {

// Detects a cycle among the worlds reachable from start.
bool reachable_part_cyclic(const Frame& fr, int start) {
  enum class Color { White, Grey, Black };
  std::vector<Color> color(fr.size(), Color::White);
  // iterative DFS with an explicit exit marker
  std::vector<std::pair<int, bool>> stack{{start, false}};
  while (!stack.empty()) {
    auto [w, leaving] = stack.back();
    stack.pop_back();
    if (leaving) {
      color[w] = Color::Black;
      continue;
    }
    if (color[w] != Color::White) continue;
    color[w] = Color::Grey;
    stack.emplace_back(w, true);
    for (int t : fr.successors(w).worlds()) {
      if (color[t] == Color::Grey) return true;
      if (color[t] == Color::White) stack.emplace_back(t, false);
    }
  }
  return false;
}

}  // namespace

UnravelledModel unravel(const PointedModel& pm, std::optional<int> depth,
                        bool reflexive) {
  const Model& source = pm.model();
  const Frame& fr = source.frame();

  if (depth && *depth < 0) throw Error("unravel: negative depth");
  if (reflexive) {
    if (!depth) {
      throw Error("unravel: the reflexive unravelling is infinite; a depth "
                  "bound is required");
    }
    if (!frame_has(fr, FrameCondition::Reflexive)) {
      throw Error("unravel: reflexive unravelling needs a reflexive frame");
    }
  }
  if (!depth && reachable_part_cyclic(fr, pm.point())) {
    throw Error("unravel: reachable part is cyclic; the full unravelling "
                "would be infinite");
  }

  std::vector<int> last{pm.point()};
  std::vector<int> level{0};
  std::vector<std::pair<int, int>> edges;

  // breadth-first expansion; children follow ascending source-world order
  for (std::size_t u = 0; u < last.size(); ++u) {
    if (depth && level[u] >= *depth) continue;
    for (int t : fr.successors(last[u]).worlds()) {
      int v = static_cast<int>(last.size());
      last.push_back(t);
      level.push_back(level[u] + 1);
      edges.emplace_back(static_cast<int>(u), v);
    }
  }

  int n = static_cast<int>(last.size());
  if (reflexive) {
    for (int w = 0; w < n; ++w) edges.emplace_back(w, w);
  }
  Frame unravelled(n, edges);

  std::map<std::string, WorldSet> val;
  for (const auto& [atom, ws] : source.valuation()) {
    WorldSet lifted(n);
    for (int w = 0; w < n; ++w) {
      if (ws.test(last[w])) lifted.set(w);
    }
    val.emplace(atom, std::move(lifted));
  }

  return UnravelledModel{Model(std::move(unravelled), std::move(val)),
                         std::move(level), std::move(last), depth};
}

}  // namespace strimp
