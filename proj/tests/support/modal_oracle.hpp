#ifndef STRIMP_TESTS_MODAL_ORACLE_HPP_
#define STRIMP_TESTS_MODAL_ORACLE_HPP_

#include <algorithm>

#include "strimp/kripke.hpp"

namespace strimp::testing {

/// Standard relational satisfaction for the modal language: implication is
/// material at a world, box quantifies over successors. This is the oracle
/// the translation is validated against; it stays independent of the
/// library's satisfaction path.
inline bool modal_satisfies(const Model& m, int w, const ModalFormula& f) {
  switch (f.kind()) {
    case ModalFormula::Kind::Bottom:
      return false;
    case ModalFormula::Kind::Atom:
      return m.valuation_of(f.atom_name()).test(w);
    case ModalFormula::Kind::And:
      return modal_satisfies(m, w, f.left()) && modal_satisfies(m, w, f.right());
    case ModalFormula::Kind::Imp:
      return !modal_satisfies(m, w, f.left()) ||
             modal_satisfies(m, w, f.right());
    case ModalFormula::Kind::Box:
      for (int t : m.frame().successors(w).worlds()) {
        if (!modal_satisfies(m, t, f.inner())) return false;
      }
      return true;
  }
  return false;
}

inline int box_count(const ModalFormula& f) {
  switch (f.kind()) {
    case ModalFormula::Kind::Atom:
    case ModalFormula::Kind::Bottom:
      return 0;
    case ModalFormula::Kind::And:
    case ModalFormula::Kind::Imp:
      return box_count(f.left()) + box_count(f.right());
    case ModalFormula::Kind::Box:
      return 1 + box_count(f.inner());
  }
  return 0;
}

inline int modal_depth(const ModalFormula& f) {
  switch (f.kind()) {
    case ModalFormula::Kind::Atom:
    case ModalFormula::Kind::Bottom:
      return 0;
    case ModalFormula::Kind::And:
    case ModalFormula::Kind::Imp:
      return std::max(modal_depth(f.left()), modal_depth(f.right()));
    case ModalFormula::Kind::Box:
      return 1 + modal_depth(f.inner());
  }
  return 0;
}

inline int imp_node_count(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Bottom:
      return 0;
    case Formula::Kind::And:
      return imp_node_count(f.left()) + imp_node_count(f.right());
    case Formula::Kind::Imp:
      return 1 + imp_node_count(f.left()) + imp_node_count(f.right());
  }
  return 0;
}

/// Every implication node in the box translation's image sits directly
/// under a box.
inline bool implications_boxed(const ModalFormula& f) {
  switch (f.kind()) {
    case ModalFormula::Kind::Atom:
    case ModalFormula::Kind::Bottom:
      return true;
    case ModalFormula::Kind::Imp:
      return false;  // a bare implication not guarded by a box
    case ModalFormula::Kind::And:
      return implications_boxed(f.left()) && implications_boxed(f.right());
    case ModalFormula::Kind::Box: {
      ModalFormula body = f.inner();
      if (body.is(ModalFormula::Kind::Imp)) {
        return implications_boxed(body.left()) &&
               implications_boxed(body.right());
      }
      return implications_boxed(body);
    }
  }
  return false;
}

}  // namespace strimp::testing

#endif  // STRIMP_TESTS_MODAL_ORACLE_HPP_
