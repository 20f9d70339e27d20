#include "strimp/classes.hpp"

#include <utility>

namespace strimp {

ClassSpec class_spec(ModelClass c) {
  switch (c) {
    case ModelClass::Kp:
      return {false, false, false, ValuationCondition::Interpretation};
    case ModelClass::Tp:
      return {true, false, false, ValuationCondition::Interpretation};
    case ModelClass::Bp:
      return {false, true, false, ValuationCondition::Interpretation};
    case ModelClass::V:
      return {false, false, true, ValuationCondition::Interpretation};
    case ModelClass::KB4p:
      return {false, true, true, ValuationCondition::Interpretation};
    case ModelClass::I:
      return {true, false, true, ValuationCondition::Interpretation};
    case ModelClass::O:
      return {true, true, false, ValuationCondition::Interpretation};
    case ModelClass::C:
      return {true, true, true, ValuationCondition::Interpretation};
    case ModelClass::Pminus:
      return {false, false, false, ValuationCondition::PminusInclusion};
    case ModelClass::Re:
      return {true, false, false, ValuationCondition::None};
  }
  throw Error("class_spec: unknown class");
}

std::string class_tag(ModelClass c) {
  switch (c) {
    case ModelClass::Kp:
      return "kp";
    case ModelClass::Tp:
      return "tp";
    case ModelClass::Bp:
      return "bp";
    case ModelClass::V:
      return "v";
    case ModelClass::KB4p:
      return "kb4p";
    case ModelClass::I:
      return "i";
    case ModelClass::O:
      return "o";
    case ModelClass::C:
      return "c";
    case ModelClass::Pminus:
      return "p-";
    case ModelClass::Re:
      return "re";
  }
  throw Error("class_tag: unknown class");
}

std::optional<ModelClass> class_from_tag(const std::string& tag) {
  for (ModelClass c : kAllModelClasses) {
    if (class_tag(c) == tag) return c;
  }
  return std::nullopt;
}

bool pminus_admissible(const Frame& fr, const WorldSet& x) {
  WorldSet dead_end_free = r_box(fr, WorldSet(fr.size())).complement();
  return x.subset_of(r_box(fr, dead_end_free | x));
}

bool class_member(const Model& m, ModelClass c) {
  ClassSpec spec = class_spec(c);
  const Frame& fr = m.frame();
  if (spec.reflexive && !frame_has(fr, FrameCondition::Reflexive)) return false;
  if (spec.symmetric && !frame_has(fr, FrameCondition::Symmetric)) return false;
  if (spec.transitive && !frame_has(fr, FrameCondition::Transitive)) {
    return false;
  }
  switch (spec.valuation) {
    case ValuationCondition::Interpretation:
      return is_interpretation(m);
    case ValuationCondition::PminusInclusion:
      for (const auto& [atom, ws] : m.valuation()) {
        if (!pminus_admissible(fr, ws)) return false;
      }
      return true;
    case ValuationCondition::None:
      return true;
  }
  return true;
}

ClassEnumerator::ClassEnumerator(ModelClass c, int n_worlds,
                                 std::vector<std::string> atoms)
    : class_(c), spec_(class_spec(c)), n_(n_worlds), atoms_(std::move(atoms)) {
  if (n_worlds < 1 || n_worlds > kEnumerationWorldCap) {
    throw Error("enumerate_class: world count " + std::to_string(n_worlds) +
                " outside 1.." + std::to_string(kEnumerationWorldCap));
  }
  if (static_cast<int>(atoms_.size()) > kEnumerationAtomCap) {
    throw Error("enumerate_class: more than " +
                std::to_string(kEnumerationAtomCap) + " atoms");
  }
}

bool ClassEnumerator::advance_frame() {
  const std::uint64_t total = std::uint64_t{1} << (n_ * n_);
  while (!frames_done_) {
    if (rel_bits_ >= total) {
      frames_done_ = true;
      return false;
    }
    std::vector<std::pair<int, int>> pairs;
    for (int s = 0; s < n_; ++s) {
      for (int t = 0; t < n_; ++t) {
        if ((rel_bits_ >> (s * n_ + t)) & 1) pairs.emplace_back(s, t);
      }
    }
    ++rel_bits_;
    Frame fr(n_, pairs);
    if (spec_.reflexive && !frame_has(fr, FrameCondition::Reflexive)) continue;
    if (spec_.symmetric && !frame_has(fr, FrameCondition::Symmetric)) continue;
    if (spec_.transitive && !frame_has(fr, FrameCondition::Transitive)) {
      continue;
    }

    candidates_.clear();
    switch (spec_.valuation) {
      case ValuationCondition::Interpretation:
        candidates_ = propositions(fr);
        break;
      case ValuationCondition::PminusInclusion: {
        WorldSet x(n_);
        do {
          if (pminus_admissible(fr, x)) candidates_.push_back(x);
        } while (x.increment());
        break;
      }
      case ValuationCondition::None: {
        WorldSet x(n_);
        do {
          candidates_.push_back(x);
        } while (x.increment());
        break;
      }
    }
    frame_ = std::move(fr);
    odometer_.assign(atoms_.size(), 0);
    valuations_done_ = false;
    have_frame_ = true;
    return true;
  }
  return false;
}

Model ClassEnumerator::current_model() const {
  std::map<std::string, WorldSet> val;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    val.emplace(atoms_[i], candidates_[odometer_[i]]);
  }
  return Model(*frame_, std::move(val));
}

std::optional<Model> ClassEnumerator::next() {
  while (true) {
    if (!have_frame_ || valuations_done_) {
      if (!advance_frame()) return std::nullopt;
    }
    Model out = current_model();
    // advance the odometer, last atom fastest
    valuations_done_ = true;
    for (std::size_t i = atoms_.size(); i-- > 0;) {
      if (++odometer_[i] < candidates_.size()) {
        valuations_done_ = false;
        break;
      }
      odometer_[i] = 0;
    }
    if (atoms_.empty()) valuations_done_ = true;
    return out;
  }
}

std::vector<Model> enumerate_class(ModelClass c, int n_worlds,
                                   const std::vector<std::string>& atoms) {
  ClassEnumerator en(c, n_worlds, atoms);
  std::vector<Model> out;
  while (auto m = en.next()) out.push_back(std::move(*m));
  return out;
}

}  // namespace strimp
