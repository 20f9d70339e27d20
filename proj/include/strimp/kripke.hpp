#ifndef STRIMP_KRIPKE_HPP_
#define STRIMP_KRIPKE_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "strimp/formula.hpp"

namespace strimp {

/// Subset of a frame's worlds, stored as a dense bitmask over 0..n-1.
/// Ordering is by numeric value of the mask (world 0 = least significant
/// bit), which fixes the enumeration order used everywhere.
class WorldSet {
 public:
  WorldSet() = default;
  explicit WorldSet(int universe);
  static WorldSet full(int universe);
  static WorldSet of(int universe, std::initializer_list<int> worlds);

  int universe() const { return n_; }
  bool test(int w) const;
  WorldSet& set(int w, bool value = true);
  bool empty() const;
  int count() const;
  bool subset_of(const WorldSet& other) const;

  WorldSet operator&(const WorldSet& other) const;
  WorldSet operator|(const WorldSet& other) const;
  WorldSet complement() const;

  bool operator==(const WorldSet& other) const;
  std::strong_ordering operator<=>(const WorldSet& other) const;

  /// Member worlds in ascending order.
  std::vector<int> worlds() const;

  /// Steps to the next subset in ascending bitmask order. Returns false
  /// when stepping past the full set (the set wraps to empty).
  bool increment();

  std::string to_string() const;  // e.g. "{0,2}"

 private:
  void check_universe(const WorldSet& other) const;

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

enum class FrameCondition { Reflexive, Symmetric, Transitive };

/// Finite frame: worlds 0..size-1 with a binary relation kept as per-world
/// successor and predecessor masks.
class Frame {
 public:
  Frame(int size, const std::vector<std::pair<int, int>>& pairs);

  int size() const { return size_; }
  bool related(int s, int t) const;
  const WorldSet& successors(int w) const;
  const WorldSet& predecessors(int w) const;

  /// Relation as an ascending list of pairs.
  std::vector<std::pair<int, int>> pairs() const;

  bool operator==(const Frame& other) const;

 private:
  int size_;
  std::vector<WorldSet> succ_;
  std::vector<WorldSet> pred_;
};

/// Model: frame plus valuation. Atoms not present in the map denote the
/// empty set.
class Model {
 public:
  Model(Frame frame, std::map<std::string, WorldSet> valuation);

  const Frame& frame() const { return frame_; }
  const std::map<std::string, WorldSet>& valuation() const { return valuation_; }
  WorldSet valuation_of(const std::string& atom) const;

  bool operator==(const Model& other) const;

 private:
  Frame frame_;
  std::map<std::string, WorldSet> valuation_;
};

class PointedModel {
 public:
  PointedModel(Model model, int point);

  const Model& model() const { return model_; }
  int point() const { return point_; }

 private:
  Model model_;
  int point_;
};

/// R[X]: worlds reachable in one step from some member of x.
WorldSet r_image(const Frame& fr, const WorldSet& x);

/// R□(X): worlds all of whose successors lie in x.
WorldSet r_box(const Frame& fr, const WorldSet& x);

/// R◇(X) = -R□(-X).
WorldSet r_diamond(const Frame& fr, const WorldSet& x);

/// X is a proposition iff R[X] ∩ R□(R[X]) ⊆ X.
bool is_proposition(const Frame& fr, const WorldSet& x);

inline constexpr int kPropositionEnumerationCap = 16;

/// All propositions of fr in ascending bitmask order. Throws when fr.size()
/// exceeds the cap.
std::vector<WorldSet> propositions(const Frame& fr,
                                   int cap = kPropositionEnumerationCap);

bool frame_has(const Frame& fr, FrameCondition c);

/// Pointwise satisfaction: bottom fails everywhere, implication quantifies
/// over successors.
bool satisfies(const Model& m, int w, const Formula& f);

/// Extension of f, computed bottom-up via
/// ||b|| = {}, ||p|| = V(p), ||f&g|| = ||f|| ∩ ||g||,
/// ||f->g|| = R□(-||f|| ∪ ||g||).
WorldSet extension(const Model& m, const Formula& f);

/// True iff every valuation set is a proposition.
bool is_interpretation(const Model& m);

}  // namespace strimp

#endif  // STRIMP_KRIPKE_HPP_
