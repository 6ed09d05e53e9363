#pragma once

#include <memory>
#include <variant>

#include "bethforge/calculus/schema.hpp"

namespace bethforge::calculus {

// Natural deduction over sequents (assumption multiset |- conclusion).
// Weakening is built into every rule: a premise may use any sub-multiset of
// the node's assumptions (plus its discharged hypothesis).
enum class RuleId {
  Assume, Axiom,
  AndI, AndE1, AndE2,
  OrI1, OrI2, OrE,
  ImpI, ImpE, BotE,
  ForallI, ForallE, ExistsI, ExistsE,
  Dne,          // classical double-negation elimination
  EqRefl, EqSubst
};

std::string rule_name(RuleId r);
std::optional<RuleId> rule_from_name(const std::string& name);

struct ProofNode;
using ProofNodePtr = std::shared_ptr<ProofNode>;

struct ProofNode {
  RuleId rule;
  std::vector<FormulaPtr> assumptions;
  FormulaPtr conclusion;
  std::vector<ProofNodePtr> premises;

  std::optional<AxiomFamily> axiom_family;  // Axiom
  std::optional<SortedVar> eigen;           // ForallI / ExistsE (inferred when absent)
  ExprPtr witness;                          // ForallE / ExistsI (inferred when absent)
};

struct ProofTree {
  Theory theory{TheoryId::L, 1};
  bool classical = false;
  ProofNodePtr root;
};

struct CheckOk {
  Theory theory;
  FormulaPtr conclusion;
};

// Throws RuleError / EigenvariableError / AxiomError on an invalid proof.
CheckOk check_proof(const ProofTree& p);

// Non-throwing wrapper: the error string on failure.
std::variant<CheckOk, std::string> check_verdict(const ProofTree& p);

// ---- construction helpers (tests and derived-principle scripts) ----

ProofNodePtr assume(FormulaPtr phi);
ProofNodePtr axiom(FormulaPtr instance, std::optional<AxiomFamily> family = std::nullopt);
ProofNodePtr and_i(ProofNodePtr a, ProofNodePtr b);
ProofNodePtr and_e1(FormulaPtr concl, ProofNodePtr ab);
ProofNodePtr and_e2(FormulaPtr concl, ProofNodePtr ab);
ProofNodePtr or_i1(FormulaPtr disj, ProofNodePtr a);
ProofNodePtr or_i2(FormulaPtr disj, ProofNodePtr b);
ProofNodePtr or_e(ProofNodePtr disj, FormulaPtr hypA, ProofNodePtr fromA, FormulaPtr hypB,
                  ProofNodePtr fromB);
ProofNodePtr imp_i(FormulaPtr hyp, ProofNodePtr body);
ProofNodePtr imp_e(ProofNodePtr imp, ProofNodePtr arg);
ProofNodePtr bot_e(FormulaPtr concl, ProofNodePtr bot);
ProofNodePtr forall_i(SortedVar x, FormulaPtr quantified, ProofNodePtr body);
ProofNodePtr forall_e(ExprPtr witness, ProofNodePtr all);
ProofNodePtr exists_i(FormulaPtr quantified, ExprPtr witness, ProofNodePtr inst);
ProofNodePtr exists_e(ProofNodePtr ex, SortedVar eigen, ProofNodePtr body);
ProofNodePtr dne(ProofNodePtr notnot);
ProofNodePtr eq_refl(ExprPtr t);
ProofNodePtr eq_subst(ProofNodePtr eq, ProofNodePtr phi_of_lhs, FormulaPtr concl);

// ---- line-oriented proof file format ----
//
//   theory SLP 2
//   logic HPC
//   1: axiom CS1 [] {} |- <formula>
//   2: assume [] {p} |- p
//   3: imp_intro [2] {} |- p -> p
//   qed 3
ProofTree parse_proof_file(const std::string& contents);
std::string format_proof(const ProofTree& p);

}  // namespace bethforge::calculus
