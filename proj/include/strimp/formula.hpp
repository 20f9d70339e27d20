#ifndef STRIMP_FORMULA_HPP_
#define STRIMP_FORMULA_HPP_

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace strimp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Propositional formula over atoms, bottom, conjunction and (strict)
/// implication. Immutable value type; equality and ordering are structural.
class Formula {
 public:
  enum class Kind : unsigned char { Atom, Bottom, And, Imp };

  static Formula atom(std::string name);
  static Formula bottom();
  static Formula conj(const Formula& left, const Formula& right);
  static Formula imp(const Formula& left, const Formula& right);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return kind() == k; }

  const std::string& atom_name() const;  // Atom only
  Formula left() const;                  // And/Imp only
  Formula right() const;                 // And/Imp only

  bool operator==(const Formula& other) const;
  std::strong_ordering operator<=>(const Formula& other) const;
  std::size_t hash() const { return node_->hash; }

 private:
  struct Node {
    Kind kind;
    std::size_t hash;
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static std::strong_ordering compare(const Node& a, const Node& b);

  std::shared_ptr<const Node> node_;
};

using FormulaSet = std::set<Formula>;

/// Modal formula: the image language of the box translation. Output-only;
/// there is no parser for it.
class ModalFormula {
 public:
  enum class Kind : unsigned char { Atom, Bottom, And, Imp, Box };

  static ModalFormula atom(std::string name);
  static ModalFormula bottom();
  static ModalFormula conj(const ModalFormula& left, const ModalFormula& right);
  static ModalFormula imp(const ModalFormula& left, const ModalFormula& right);
  static ModalFormula box(const ModalFormula& inner);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return kind() == k; }

  const std::string& atom_name() const;
  ModalFormula left() const;   // And/Imp
  ModalFormula right() const;  // And/Imp
  ModalFormula inner() const;  // Box

  bool operator==(const ModalFormula& other) const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit ModalFormula(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Parses the concrete syntax:
///   formula := imp ; imp := conj ("->" imp)? ; conj := atom ("&" atom)* ;
///   atom := IDENT | "_|_" | "bot" | "(" formula ")".
/// "&" binds tighter than "->"; "&" is left-associative, "->" right-associative.
/// Throws ParseError with the offending byte offset on malformed input.
Formula parse(std::string_view text);

/// Minimal-parenthesization printer; parse(to_string(f)) == f.
std::string to_string(const Formula& f);
std::string to_string(const ModalFormula& f);

/// Box translation: homomorphic on atoms, bottom and conjunction; every
/// implication in the image is wrapped in a box.
ModalFormula translate_modal(const Formula& f);

/// Implication-nesting depth: 0 for atoms/bottom, max of children for "&",
/// 1 + max of children for "->".
int imp_depth(const Formula& f);

/// Node count.
int formula_size(const Formula& f);

/// Atom names occurring in f, sorted.
std::set<std::string> atoms(const Formula& f);
std::set<std::string> atoms(const FormulaSet& fs);

/// True iff name matches [a-zA-Z][a-zA-Z0-9_]* and is not the reserved
/// keyword "bot".
bool is_valid_atom_name(std::string_view name);

}  // namespace strimp

#endif  // STRIMP_FORMULA_HPP_
