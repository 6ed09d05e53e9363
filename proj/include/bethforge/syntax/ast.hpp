#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bethforge/errors.hpp"

namespace bethforge::syntax {

enum class Lang { L, LP, SLP, TI };

std::string lang_name(Lang l);
std::optional<Lang> lang_from_name(const std::string& name);

enum class VarKind : unsigned char { Number, Functional, Lawlike, Lawless, SetVar };

// A variable is identified by (kind, level, index). Number variables live at
// level 0; functional/lawlike/lawless variables require level >= 1; set
// variables belong to the TI languages.
struct SortedVar {
  unsigned index = 0;
  unsigned level = 0;
  VarKind kind = VarKind::Number;

  friend bool operator==(const SortedVar&, const SortedVar&) = default;
  friend auto operator<=>(const SortedVar&, const SortedVar&) = default;
};

std::string var_name(const SortedVar& v);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Terms (level 0) and n-functionals (level n) share one node type; `level`
// caches the sort of the whole expression.
struct Expr {
  enum class Tag : unsigned char {
    Zero,   // constant 0
    K,      // constant K^level, level >= 1
    Var,    // sorted variable
    Succ,   // S(a)
    Plus,   // a + b
    Times,  // a * b
    N,      // N^level(a), level >= 1
    Ap,     // Ap^level(a, b): a of level `level`, b a term; result level-1
    Cat,    // cat(a, b): sequence-code append, level 0
    BarSeg, // bar(a, b): initial segment code of a 1-functional, level 0
    Kap     // kap(a, b): Kleene application, level 0 (uninterpreted)
  };

  Tag tag;
  unsigned level = 0;  // level of this expression (Ap: level of the functional position)
  SortedVar var;       // Tag::Var
  ExprPtr a, b;

  // Level of the value this expression denotes (Ap applies one level down).
  unsigned value_level() const { return tag == Tag::Ap ? level - 1 : level; }
};

ExprPtr mk_zero();
ExprPtr mk_k(unsigned level);
ExprPtr mk_var(SortedVar v);
ExprPtr mk_succ(ExprPtr a);
ExprPtr mk_plus(ExprPtr a, ExprPtr b);
ExprPtr mk_times(ExprPtr a, ExprPtr b);
ExprPtr mk_n(unsigned level, ExprPtr a);
ExprPtr mk_ap(ExprPtr fun, ExprPtr arg);  // level taken from fun
ExprPtr mk_cat(ExprPtr a, ExprPtr b);
ExprPtr mk_barseg(ExprPtr f, ExprPtr t);
ExprPtr mk_kap(ExprPtr e, ExprPtr x);
ExprPtr mk_numeral(std::uint64_t n);

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Tag : unsigned char {
    Falsum,
    Prop,     // named propositional atom (used by the forcing engine)
    EqN,      // e1 =_level e2
    MemN,     // e1 in_level e2, e1 of level `level`, e2 of level+1
    Proves,   // |-_{e1} f1, f1 an L-formula
    And,
    Or,
    Implies,
    Forall,
    Exists
  };

  Tag tag;
  unsigned level = 0;   // EqN / MemN
  std::string prop;     // Prop
  ExprPtr e1, e2;
  FormulaPtr f1, f2;
  SortedVar bound;      // Forall / Exists
};

FormulaPtr mk_falsum();
FormulaPtr mk_prop(std::string name);
FormulaPtr mk_eq(ExprPtr l, ExprPtr r);           // level inferred, must agree
FormulaPtr mk_mem(ExprPtr elem, ExprPtr set);     // levels n and n+1
FormulaPtr mk_proves(ExprPtr t, FormulaPtr inner);
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_not(FormulaPtr a);  // sugar: a -> _|_
FormulaPtr mk_forall(SortedVar v, FormulaPtr body);
FormulaPtr mk_exists(SortedVar v, FormulaPtr body);
FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b);  // (a -> b) & (b -> a)

// y <= x and y < x in the arithmetic of L: le(a,b) = ex w. a + w = b,
// lt(a,b) = ex w. S(a) + w = b, with w fresh for a, b.
FormulaPtr mk_le(ExprPtr a, ExprPtr b);
FormulaPtr mk_lt(ExprPtr a, ExprPtr b);

bool is_not(const FormulaPtr& f);         // recognizes a -> _|_
FormulaPtr not_body(const FormulaPtr& f); // the a of a -> _|_

bool expr_eq(const ExprPtr& a, const ExprPtr& b);
bool formula_eq(const FormulaPtr& a, const FormulaPtr& b);   // structural
bool alpha_eq(const FormulaPtr& a, const FormulaPtr& b);     // up to bound renaming

std::set<SortedVar> free_vars(const ExprPtr& e);
std::set<SortedVar> free_vars(const FormulaPtr& f);
std::set<SortedVar> all_vars(const FormulaPtr& f);

// Maximal level over parameters (free variables); 0 when closed.
unsigned sort_of(const FormulaPtr& f);

// Universal closure over free variables in canonical index-then-level order.
FormulaPtr closure(const FormulaPtr& f);

// Capture-avoiding substitution of e for v; levels must match.
ExprPtr substitute(const ExprPtr& target, const SortedVar& v, const ExprPtr& e);
FormulaPtr substitute(const FormulaPtr& target, const SortedVar& v, const ExprPtr& e);

SortedVar fresh_var(const SortedVar& like, const std::set<SortedVar>& avoid);

// Throws SortError / LanguageError when the tree violates the sorting rules
// or uses an atom outside `lang`; `s` caps variable levels.
void check_sorted(const ExprPtr& e, Lang lang, unsigned s);
void check_sorted(const FormulaPtr& f, Lang lang, unsigned s);

std::string print(const ExprPtr& e);
std::string print(const FormulaPtr& f);

}  // namespace bethforge::syntax
