#include "strimp/kripke.hpp"

#include <algorithm>
#include <bit>

namespace strimp {

namespace {

int word_count(int universe) { return (universe + 63) / 64; }

}  // namespace

WorldSet::WorldSet(int universe) : n_(universe), words_(word_count(universe)) {
  if (universe < 0) throw Error("WorldSet: negative universe");
}

WorldSet WorldSet::full(int universe) {
  WorldSet s(universe);
  for (int w = 0; w < universe; ++w) s.set(w);
  return s;
}

WorldSet WorldSet::of(int universe, std::initializer_list<int> worlds) {
  WorldSet s(universe);
  for (int w : worlds) s.set(w);
  return s;
}

bool WorldSet::test(int w) const {
  if (w < 0 || w >= n_) throw Error("WorldSet: world out of range");
  return (words_[w / 64] >> (w % 64)) & 1;
}

WorldSet& WorldSet::set(int w, bool value) {
  if (w < 0 || w >= n_) throw Error("WorldSet: world out of range");
  if (value) {
    words_[w / 64] |= std::uint64_t{1} << (w % 64);
  } else {
    words_[w / 64] &= ~(std::uint64_t{1} << (w % 64));
  }
  return *this;
}

bool WorldSet::empty() const {
  for (auto word : words_) {
    if (word != 0) return false;
  }
  return true;
}

int WorldSet::count() const {
  int total = 0;
  for (auto word : words_) total += std::popcount(word);
  return total;
}

void WorldSet::check_universe(const WorldSet& other) const {
  if (n_ != other.n_) throw Error("WorldSet: universe mismatch");
}

bool WorldSet::subset_of(const WorldSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

WorldSet WorldSet::operator&(const WorldSet& other) const {
  check_universe(other);
  WorldSet out(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i] = words_[i] & other.words_[i];
  }
  return out;
}

WorldSet WorldSet::operator|(const WorldSet& other) const {
  check_universe(other);
  WorldSet out(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i] = words_[i] | other.words_[i];
  }
  return out;
}

WorldSet WorldSet::complement() const {
  WorldSet out(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i] = ~words_[i];
  }
  // clear bits beyond the universe
  if (n_ % 64 != 0 && !out.words_.empty()) {
    out.words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }
  return out;
}

bool WorldSet::operator==(const WorldSet& other) const {
  return n_ == other.n_ && words_ == other.words_;
}

std::strong_ordering WorldSet::operator<=>(const WorldSet& other) const {
  check_universe(other);
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (words_[i] != other.words_[i]) {
      return words_[i] <=> other.words_[i];
    }
  }
  return std::strong_ordering::equal;
}

std::vector<int> WorldSet::worlds() const {
  std::vector<int> out;
  for (int w = 0; w < n_; ++w) {
    if (test(w)) out.push_back(w);
  }
  return out;
}

bool WorldSet::increment() {
  for (int w = 0; w < n_; ++w) {
    if (!test(w)) {
      set(w);
      return true;
    }
    set(w, false);
  }
  return false;  // wrapped past the full set
}

std::string WorldSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int w : worlds()) {
    if (!first) out += ",";
    out += std::to_string(w);
    first = false;
  }
  out += "}";
  return out;
}

Frame::Frame(int size, const std::vector<std::pair<int, int>>& pairs)
    : size_(size) {
  if (size < 1) throw Error("Frame: world set must be non-empty");
  succ_.assign(size, WorldSet(size));
  pred_.assign(size, WorldSet(size));
  for (auto [s, t] : pairs) {
    if (s < 0 || s >= size || t < 0 || t >= size) {
      throw Error("Frame: relation pair (" + std::to_string(s) + "," +
                  std::to_string(t) + ") out of range");
    }
    if (succ_[s].test(t)) {
      throw Error("Frame: duplicate relation pair (" + std::to_string(s) +
                  "," + std::to_string(t) + ")");
    }
    succ_[s].set(t);
    pred_[t].set(s);
  }
}

bool Frame::related(int s, int t) const { return succ_[s].test(t); }

const WorldSet& Frame::successors(int w) const {
  if (w < 0 || w >= size_) throw Error("Frame: world out of range");
  return succ_[w];
}

const WorldSet& Frame::predecessors(int w) const {
  if (w < 0 || w >= size_) throw Error("Frame: world out of range");
  return pred_[w];
}

std::vector<std::pair<int, int>> Frame::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s < size_; ++s) {
    for (int t : succ_[s].worlds()) out.emplace_back(s, t);
  }
  return out;
}

bool Frame::operator==(const Frame& other) const {
  return size_ == other.size_ && succ_ == other.succ_;
}

Model::Model(Frame frame, std::map<std::string, WorldSet> valuation)
    : frame_(std::move(frame)), valuation_(std::move(valuation)) {
  for (const auto& [atom, ws] : valuation_) {
    if (ws.universe() != frame_.size()) {
      throw Error("Model: valuation of '" + atom + "' not bound by the frame");
    }
  }
}

WorldSet Model::valuation_of(const std::string& atom) const {
  auto it = valuation_.find(atom);
  if (it == valuation_.end()) return WorldSet(frame_.size());
  return it->second;
}

bool Model::operator==(const Model& other) const {
  return frame_ == other.frame_ && valuation_ == other.valuation_;
}

PointedModel::PointedModel(Model model, int point)
    : model_(std::move(model)), point_(point) {
  if (point < 0 || point >= model_.frame().size()) {
    throw Error("PointedModel: point out of range");
  }
}

WorldSet r_image(const Frame& fr, const WorldSet& x) {
  if (x.universe() != fr.size()) throw Error("r_image: set not bound by frame");
  WorldSet out(fr.size());
  for (int s = 0; s < fr.size(); ++s) {
    if (x.test(s)) out = out | fr.successors(s);
  }
  return out;
}

WorldSet r_box(const Frame& fr, const WorldSet& x) {
  if (x.universe() != fr.size()) throw Error("r_box: set not bound by frame");
  WorldSet out(fr.size());
  for (int s = 0; s < fr.size(); ++s) {
    if (fr.successors(s).subset_of(x)) out.set(s);
  }
  return out;
}

WorldSet r_diamond(const Frame& fr, const WorldSet& x) {
  if (x.universe() != fr.size()) {
    throw Error("r_diamond: set not bound by frame");
  }
  return r_box(fr, x.complement()).complement();
}

bool is_proposition(const Frame& fr, const WorldSet& x) {
  if (x.universe() != fr.size()) {
    throw Error("is_proposition: set not bound by frame");
  }
  WorldSet image = r_image(fr, x);
  return (image & r_box(fr, image)).subset_of(x);
}

std::vector<WorldSet> propositions(const Frame& fr, int cap) {
  if (fr.size() > cap) {
    throw Error("propositions: frame size " + std::to_string(fr.size()) +
                " exceeds enumeration cap " + std::to_string(cap));
  }
  std::vector<WorldSet> out;
  WorldSet x(fr.size());
  do {
    if (is_proposition(fr, x)) out.push_back(x);
  } while (x.increment());
  return out;
}

bool frame_has(const Frame& fr, FrameCondition c) {
  int n = fr.size();
  switch (c) {
    case FrameCondition::Reflexive:
      for (int w = 0; w < n; ++w) {
        if (!fr.related(w, w)) return false;
      }
      return true;
    case FrameCondition::Symmetric:
      for (int s = 0; s < n; ++s) {
        for (int t : fr.successors(s).worlds()) {
          if (!fr.related(t, s)) return false;
        }
      }
      return true;
    case FrameCondition::Transitive:
      for (int s = 0; s < n; ++s) {
        for (int t : fr.successors(s).worlds()) {
          if (!fr.successors(t).subset_of(fr.successors(s))) return false;
        }
      }
      return true;
  }
  return false;
}

bool satisfies(const Model& m, int w, const Formula& f) {
  if (w < 0 || w >= m.frame().size()) {
    throw Error("satisfies: world out of range");
  }
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      return false;
    case Formula::Kind::Atom:
      return m.valuation_of(f.atom_name()).test(w);
    case Formula::Kind::And:
      return satisfies(m, w, f.left()) && satisfies(m, w, f.right());
    case Formula::Kind::Imp: {
      Formula lhs = f.left();
      Formula rhs = f.right();
      for (int t : m.frame().successors(w).worlds()) {
        if (satisfies(m, t, lhs) && !satisfies(m, t, rhs)) return false;
      }
      return true;
    }
  }
  return false;
}

WorldSet extension(const Model& m, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      return WorldSet(m.frame().size());
    case Formula::Kind::Atom:
      return m.valuation_of(f.atom_name());
    case Formula::Kind::And:
      return extension(m, f.left()) & extension(m, f.right());
    case Formula::Kind::Imp:
      return r_box(m.frame(),
                   extension(m, f.left()).complement() | extension(m, f.right()));
  }
  return WorldSet(m.frame().size());
}

bool is_interpretation(const Model& m) {
  for (const auto& [atom, ws] : m.valuation()) {
    if (!is_proposition(m.frame(), ws)) return false;
  }
  return true;
}

}  // namespace strimp
