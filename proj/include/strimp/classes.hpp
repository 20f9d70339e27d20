#ifndef STRIMP_CLASSES_HPP_
#define STRIMP_CLASSES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strimp/kripke.hpp"

namespace strimp {

/// The eight interpretation classes plus the two auxiliary model classes.
enum class ModelClass { Kp, Tp, Bp, V, KB4p, I, O, C, Pminus, Re };

inline constexpr ModelClass kAllModelClasses[] = {
    ModelClass::Kp,   ModelClass::Tp, ModelClass::Bp,     ModelClass::V,
    ModelClass::KB4p, ModelClass::I,  ModelClass::O,      ModelClass::C,
    ModelClass::Pminus, ModelClass::Re};

/// Valuation requirement of a class: every valuation set a proposition, the
/// weaker inclusion V(p) ⊆ R□(-R□({}) ∪ V(p)), or none.
enum class ValuationCondition { Interpretation, PminusInclusion, None };

struct ClassSpec {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  ValuationCondition valuation = ValuationCondition::None;
};

ClassSpec class_spec(ModelClass c);

/// CLI tag: kp, tp, bp, v, kb4p, i, o, c, p-, re.
std::string class_tag(ModelClass c);
std::optional<ModelClass> class_from_tag(const std::string& tag);

bool class_member(const Model& m, ModelClass c);

/// True iff x satisfies the P- inclusion x ⊆ R□(-R□({}) ∪ x) on fr.
bool pminus_admissible(const Frame& fr, const WorldSet& x);

inline constexpr int kEnumerationWorldCap = 4;
inline constexpr int kEnumerationAtomCap = 3;

/// Pull-based enumeration of every class member with exactly n_worlds
/// worlds and valuations over the given atoms. Order: relation bitmask
/// ascending (bit s*n+t for the pair (s,t)), then valuation assignments
/// with the last atom varying fastest, candidate sets in ascending bitmask
/// order.
class ClassEnumerator {
 public:
  ClassEnumerator(ModelClass c, int n_worlds, std::vector<std::string> atoms);

  std::optional<Model> next();

 private:
  bool advance_frame();
  Model current_model() const;

  ModelClass class_;
  ClassSpec spec_;
  int n_;
  std::vector<std::string> atoms_;

  std::uint64_t rel_bits_ = 0;
  bool frames_done_ = false;
  bool have_frame_ = false;
  std::optional<Frame> frame_;
  std::vector<WorldSet> candidates_;   // class-legal valuation sets
  std::vector<std::size_t> odometer_;  // candidate index per atom
  bool valuations_done_ = false;
};

/// Convenience: drains the enumerator.
std::vector<Model> enumerate_class(ModelClass c, int n_worlds,
                                   const std::vector<std::string>& atoms);

}  // namespace strimp

#endif  // STRIMP_CLASSES_HPP_
