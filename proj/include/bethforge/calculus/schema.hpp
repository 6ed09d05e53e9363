#pragma once

#include <map>
#include <optional>

#include "bethforge/syntax/ast.hpp"

namespace bethforge::calculus {

using namespace bethforge::syntax;

enum class TheoryId { L, LP, SLP, TI, TIstar };

struct Theory {
  TheoryId id = TheoryId::L;
  unsigned s = 1;

  Lang lang() const {
    return id == TheoryId::L ? Lang::L
           : id == TheoryId::TI || id == TheoryId::TIstar ? Lang::TI
           : id == TheoryId::SLP ? Lang::SLP
                                 : Lang::LP;
  }
  friend bool operator==(const Theory&, const Theory&) = default;
};

std::string theory_name(TheoryId id);
std::optional<TheoryId> theory_from_name(const std::string& name);

// Extension order: L <= LP <= SLP and TI* <= TI (at equal or growing s).
bool theory_extends(const Theory& big, const Theory& small);

enum class AxiomFamily {
  L1, L2, L3, L5, L6, L7, Induction,
  CS1, CS2, CS3,
  LL1, LL2, LL3,
  C1, C2, KS, WC, BI, MP, CT,
  TI1, TI2, TI3, TI4, Compr, Ext,
  Equality
};

std::string family_name(AxiomFamily f);
std::optional<AxiomFamily> family_from_name(const std::string& name);

// Instantiation record: how a closed formula matches a schema.
struct AxiomInstance {
  AxiomFamily family;
  FormulaPtr phi;                               // main schema formula, when any
  FormulaPtr psi;                               // second formula (BI)
  std::map<std::string, std::string> meta;      // side-condition witnesses, levels
};

// Parts supplied to instantiate_schema. Which fields matter depends on the
// family; unset designated variables get canonical fresh choices.
struct SchemaParts {
  FormulaPtr phi;
  FormulaPtr psi;               // BI
  unsigned level = 0;           // n of LL1/LL2/LL3/WC/Compr/Ext/L5/L6, m of C1/C2/KS
  unsigned alt = 0;             // selects the half of a paired axiom (L1..L3, L5, L6, TI1..3)
  std::optional<SortedVar> x, y, z;   // designated first-order variables
  std::optional<SortedVar> fvar;      // designated functional / lawless / set variable
  std::optional<SortedVar> fvar2;     // second such variable (L6, LL2, Ext)
  ExprPtr term;                 // witness term of L7
  unsigned uniq_level = 0;      // n of C2 (level of the unique G)
};

// Matches a closed, well-sorted formula of `lang` against every axiom
// schema expressible in that language, verifying all side conditions.
std::optional<AxiomInstance> recognize_schema(const FormulaPtr& closed, Lang lang, unsigned s);

// Schema membership in a specific theory's axiom set.
std::optional<AxiomInstance> is_axiom(const Theory& th, const FormulaPtr& phi);

// Builds the closed instance; throws SideConditionError when the parts
// violate the schema's side conditions.
FormulaPtr instantiate_schema(AxiomFamily family, const SchemaParts& parts);

// The families a theory admits as axioms.
bool theory_admits(const Theory& th, AxiomFamily f);

}  // namespace bethforge::calculus
