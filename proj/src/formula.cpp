#include "strimp/formula.hpp"

#include <cctype>
#include <utility>

namespace strimp {

namespace {

std::size_t hash_mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_atom(const std::string& name) {
  return hash_mix(1, std::hash<std::string>{}(name));
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(message + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) {
    throw Error("invalid atom name: '" + name + "'");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->name = std::move(name);
  node->hash = hash_atom(node->name);
  return Formula(std::move(node));
}

Formula Formula::bottom() {
  static const std::shared_ptr<const Node> instance = [] {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Bottom;
    node->hash = 2;
    return node;
  }();
  return Formula(instance);
}

Formula Formula::conj(const Formula& left, const Formula& right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->left = left.node_;
  node->right = right.node_;
  node->hash = hash_mix(hash_mix(3, left.hash()), right.hash());
  return Formula(std::move(node));
}

Formula Formula::imp(const Formula& left, const Formula& right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Imp;
  node->left = left.node_;
  node->right = right.node_;
  node->hash = hash_mix(hash_mix(4, left.hash()), right.hash());
  return Formula(std::move(node));
}

const std::string& Formula::atom_name() const {
  if (kind() != Kind::Atom) throw Error("atom_name: not an atom");
  return node_->name;
}

Formula Formula::left() const {
  if (kind() != Kind::And && kind() != Kind::Imp) {
    throw Error("left: formula has no subterms");
  }
  return Formula(node_->left);
}

Formula Formula::right() const {
  if (kind() != Kind::And && kind() != Kind::Imp) {
    throw Error("right: formula has no subterms");
  }
  return Formula(node_->right);
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash) return false;
  return compare(*node_, *other.node_) == std::strong_ordering::equal;
}

std::strong_ordering Formula::operator<=>(const Formula& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  return compare(*node_, *other.node_);
}

std::strong_ordering Formula::compare(const Node& a, const Node& b) {
  if (a.kind != b.kind) {
    return static_cast<unsigned char>(a.kind) <=>
           static_cast<unsigned char>(b.kind);
  }
  switch (a.kind) {
    case Kind::Atom:
      return a.name.compare(b.name) <=> 0;
    case Kind::Bottom:
      return std::strong_ordering::equal;
    case Kind::And:
    case Kind::Imp: {
      auto c = compare(*a.left, *b.left);
      if (c != std::strong_ordering::equal) return c;
      return compare(*a.right, *b.right);
    }
  }
  return std::strong_ordering::equal;
}

ModalFormula ModalFormula::atom(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->name = std::move(name);
  return ModalFormula(std::move(node));
}

ModalFormula ModalFormula::bottom() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Bottom;
  return ModalFormula(std::move(node));
}

ModalFormula ModalFormula::conj(const ModalFormula& left,
                                const ModalFormula& right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->left = left.node_;
  node->right = right.node_;
  return ModalFormula(std::move(node));
}

ModalFormula ModalFormula::imp(const ModalFormula& left,
                               const ModalFormula& right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Imp;
  node->left = left.node_;
  node->right = right.node_;
  return ModalFormula(std::move(node));
}

ModalFormula ModalFormula::box(const ModalFormula& inner) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Box;
  node->left = inner.node_;
  return ModalFormula(std::move(node));
}

const std::string& ModalFormula::atom_name() const {
  if (kind() != Kind::Atom) throw Error("atom_name: not an atom");
  return node_->name;
}

ModalFormula ModalFormula::left() const {
  if (kind() != Kind::And && kind() != Kind::Imp) {
    throw Error("left: modal formula has no subterms");
  }
  return ModalFormula(node_->left);
}

ModalFormula ModalFormula::right() const {
  if (kind() != Kind::And && kind() != Kind::Imp) {
    throw Error("right: modal formula has no subterms");
  }
  return ModalFormula(node_->right);
}

ModalFormula ModalFormula::inner() const {
  if (kind() != Kind::Box) throw Error("inner: not a box");
  return ModalFormula(node_->left);
}

bool ModalFormula::operator==(const ModalFormula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Atom:
      return node_->name == other.node_->name;
    case Kind::Bottom:
      return true;
    case Kind::Box:
      return inner() == other.inner();
    case Kind::And:
    case Kind::Imp:
      return left() == other.left() && right() == other.right();
  }
  return false;
}

bool is_valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name.substr(1)) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return name != "bot";
}

namespace {

// ---- parser --------------------------------------------------------------

enum class TokKind { Ident, Bottom, Amp, Arrow, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {TokKind::End, "", start};
      return;
    }
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      current_ = {TokKind::LParen, "(", start};
    } else if (c == ')') {
      ++pos_;
      current_ = {TokKind::RParen, ")", start};
    } else if (c == '&') {
      ++pos_;
      current_ = {TokKind::Amp, "&", start};
    } else if (c == '-') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        pos_ += 2;
        current_ = {TokKind::Arrow, "->", start};
      } else {
        throw ParseError("expected '->'", start);
      }
    } else if (c == '_') {
      if (text_.substr(pos_, 3) == "_|_") {
        pos_ += 3;
        current_ = {TokKind::Bottom, "_|_", start};
      } else {
        throw ParseError("expected '_|_'", start);
      }
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_ + 1;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) ||
              text_[end] == '_')) {
        ++end;
      }
      std::string word(text_.substr(pos_, end - pos_));
      pos_ = end;
      if (word == "bot") {
        current_ = {TokKind::Bottom, word, start};
      } else {
        current_ = {TokKind::Ident, word, start};
      }
    } else {
      throw ParseError(std::string("unknown token '") + c + "'", start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) {}

  Formula parse_all() {
    Formula f = parse_imp();
    const Token& t = lexer_.peek();
    if (t.kind != TokKind::End) {
      throw ParseError("unexpected '" + t.text + "' after formula", t.pos);
    }
    return f;
  }

 private:
  // imp := conj ("->" imp)?          (right-associative)
  Formula parse_imp() {
    Formula lhs = parse_conj();
    if (lexer_.peek().kind == TokKind::Arrow) {
      lexer_.take();
      return Formula::imp(lhs, parse_imp());
    }
    return lhs;
  }

  // conj := atom ("&" atom)*         (left-associative)
  Formula parse_conj() {
    Formula lhs = parse_atom();
    while (lexer_.peek().kind == TokKind::Amp) {
      lexer_.take();
      lhs = Formula::conj(lhs, parse_atom());
    }
    return lhs;
  }

  Formula parse_atom() {
    Token t = lexer_.take();
    switch (t.kind) {
      case TokKind::Ident:
        return Formula::atom(t.text);
      case TokKind::Bottom:
        return Formula::bottom();
      case TokKind::LParen: {
        Formula inner = parse_imp();
        Token close = lexer_.take();
        if (close.kind != TokKind::RParen) {
          throw ParseError("expected ')'", close.pos);
        }
        return inner;
      }
      case TokKind::End:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  Lexer lexer_;
};

// ---- printer -------------------------------------------------------------

// Precedence levels, loosest first: imp (0), conj (1), atom (2). A node is
// parenthesized when printed at a level tighter than its own.
void print_to(const Formula& f, int level, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.atom_name();
      return;
    case Formula::Kind::Bottom:
      out += "_|_";
      return;
    case Formula::Kind::And:
      if (level > 1) {
        out += '(';
        print_to(f, 0, out);
        out += ')';
        return;
      }
      print_to(f.left(), 1, out);   // left-assoc: nested "&" stays bare
      out += " & ";
      print_to(f.right(), 2, out);  // right operand at atom level
      return;
    case Formula::Kind::Imp:
      if (level > 0) {
        out += '(';
        print_to(f, 0, out);
        out += ')';
        return;
      }
      print_to(f.left(), 1, out);   // antecedent at conj level
      out += " -> ";
      print_to(f.right(), 0, out);  // right-assoc: consequent stays bare
      return;
  }
}

void print_to(const ModalFormula& f, int level, std::string& out) {
  switch (f.kind()) {
    case ModalFormula::Kind::Atom:
      out += f.atom_name();
      return;
    case ModalFormula::Kind::Bottom:
      out += "_|_";
      return;
    case ModalFormula::Kind::Box:
      out += "[]";
      print_to(f.inner(), 2, out);  // box binds tightest
      return;
    case ModalFormula::Kind::And:
      if (level > 1) {
        out += '(';
        print_to(f, 0, out);
        out += ')';
        return;
      }
      print_to(f.left(), 1, out);
      out += " & ";
      print_to(f.right(), 2, out);
      return;
    case ModalFormula::Kind::Imp:
      if (level > 0) {
        out += '(';
        print_to(f, 0, out);
        out += ')';
        return;
      }
      print_to(f.left(), 1, out);
      out += " -> ";
      print_to(f.right(), 0, out);
      return;
  }
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out.insert(f.atom_name());
      return;
    case Formula::Kind::Bottom:
      return;
    case Formula::Kind::And:
    case Formula::Kind::Imp:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
      return;
  }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const Formula& f) {
  std::string out;
  print_to(f, 0, out);
  return out;
}

std::string to_string(const ModalFormula& f) {
  std::string out;
  print_to(f, 0, out);
  return out;
}

ModalFormula translate_modal(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return ModalFormula::atom(f.atom_name());
    case Formula::Kind::Bottom:
      return ModalFormula::bottom();
    case Formula::Kind::And:
      return ModalFormula::conj(translate_modal(f.left()),
                                translate_modal(f.right()));
    case Formula::Kind::Imp:
      return ModalFormula::box(ModalFormula::imp(translate_modal(f.left()),
                                                 translate_modal(f.right())));
  }
  throw Error("translate_modal: unreachable");
}

int imp_depth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Bottom:
      return 0;
    case Formula::Kind::And:
      return std::max(imp_depth(f.left()), imp_depth(f.right()));
    case Formula::Kind::Imp:
      return 1 + std::max(imp_depth(f.left()), imp_depth(f.right()));
  }
  return 0;
}

int formula_size(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Bottom:
      return 1;
    case Formula::Kind::And:
    case Formula::Kind::Imp:
      return 1 + formula_size(f.left()) + formula_size(f.right());
  }
  return 1;
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

std::set<std::string> atoms(const FormulaSet& fs) {
  std::set<std::string> out;
  for (const Formula& f : fs) collect_atoms(f, out);
  return out;
}

}  // namespace strimp
