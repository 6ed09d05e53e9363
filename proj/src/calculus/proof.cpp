#include "bethforge/calculus/proof.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <functional>
#include <map>
#include <unordered_set>

#include "bethforge/syntax/parse.hpp"

namespace bethforge::calculus {

using FTag = Formula::Tag;
using ETag = Expr::Tag;

std::string rule_name(RuleId r) {
  switch (r) {
    case RuleId::Assume: return "assume";
    case RuleId::Axiom: return "axiom";
    case RuleId::AndI: return "and_intro";
    case RuleId::AndE1: return "and_elim_l";
    case RuleId::AndE2: return "and_elim_r";
    case RuleId::OrI1: return "or_intro_l";
    case RuleId::OrI2: return "or_intro_r";
    case RuleId::OrE: return "or_elim";
    case RuleId::ImpI: return "imp_intro";
    case RuleId::ImpE: return "imp_elim";
    case RuleId::BotE: return "bot_elim";
    case RuleId::ForallI: return "forall_intro";
    case RuleId::ForallE: return "forall_elim";
    case RuleId::ExistsI: return "exists_intro";
    case RuleId::ExistsE: return "exists_elim";
    case RuleId::Dne: return "dne";
    case RuleId::EqRefl: return "eq_refl";
    case RuleId::EqSubst: return "eq_subst";
  }
  return "?";
}

std::optional<RuleId> rule_from_name(const std::string& name) {
  static const std::pair<const char*, RuleId> table[] = {
      {"assume", RuleId::Assume}, {"axiom", RuleId::Axiom},
      {"and_intro", RuleId::AndI}, {"and_elim_l", RuleId::AndE1}, {"and_elim_r", RuleId::AndE2},
      {"or_intro_l", RuleId::OrI1}, {"or_intro_r", RuleId::OrI2}, {"or_elim", RuleId::OrE},
      {"imp_intro", RuleId::ImpI}, {"imp_elim", RuleId::ImpE}, {"bot_elim", RuleId::BotE},
      {"forall_intro", RuleId::ForallI}, {"forall_elim", RuleId::ForallE},
      {"exists_intro", RuleId::ExistsI}, {"exists_elim", RuleId::ExistsE},
      {"dne", RuleId::Dne}, {"eq_refl", RuleId::EqRefl}, {"eq_subst", RuleId::EqSubst}};
  for (auto& [n, r] : table)
    if (name == n) return r;
  return std::nullopt;
}

namespace {

bool ctx_contains(const std::vector<FormulaPtr>& ctx, const FormulaPtr& f) {
  return std::any_of(ctx.begin(), ctx.end(), [&](const FormulaPtr& g) { return alpha_eq(f, g); });
}

bool ctx_subset(const std::vector<FormulaPtr>& small, const std::vector<FormulaPtr>& big) {
  return std::all_of(small.begin(), small.end(),
                     [&](const FormulaPtr& f) { return ctx_contains(big, f); });
}

std::vector<FormulaPtr> ctx_minus(const std::vector<FormulaPtr>& ctx, const FormulaPtr& f) {
  std::vector<FormulaPtr> out;
  for (const auto& g : ctx)
    if (!alpha_eq(f, g)) out.push_back(g);
  return out;
}

std::set<SortedVar> ctx_free(const std::vector<FormulaPtr>& ctx) {
  std::set<SortedVar> out;
  for (const auto& f : ctx) {
    auto fv = free_vars(f);
    out.insert(fv.begin(), fv.end());
  }
  return out;
}

bool lawlike_sorted(const ExprPtr& e) {
  for (const auto& v : free_vars(e))
    if (v.kind != VarKind::Number && v.kind != VarKind::Lawlike) return false;
  return true;
}

bool kind_compatible(const SortedVar& x, const ExprPtr& t) {
  if (t->value_level() != x.level) return false;
  switch (x.kind) {
    case VarKind::Number: return true;
    case VarKind::Functional: return true;
    case VarKind::Lawlike: return lawlike_sorted(t);
    case VarKind::Lawless: return t->tag == ETag::Var && t->var.kind == VarKind::Lawless;
    case VarKind::SetVar: return t->tag == ETag::Var && t->var.kind == VarKind::SetVar;
  }
  return false;
}

// find t with psi == phi[x := t]; positions where phi rebinds x are opaque
struct InstanceFinder {
  const SortedVar& x;
  ExprPtr found;
  bool conflict = false;

  void expr(const ExprPtr& a, const ExprPtr& b, bool shadowed) {
    if (conflict) return;
    if (!shadowed && a->tag == ETag::Var && a->var == x) {
      if (found && !expr_eq(found, b)) conflict = true;
      else found = b;
      return;
    }
    if (a->tag != b->tag) return;  // leave verification to the caller
    if (a->a && b->a) expr(a->a, b->a, shadowed);
    if (a->b && b->b) expr(a->b, b->b, shadowed);
  }

  void formula(const FormulaPtr& a, const FormulaPtr& b, bool shadowed) {
    if (conflict || a->tag != b->tag) return;
    bool sh = shadowed;
    if (a->tag == FTag::Forall || a->tag == FTag::Exists) sh = shadowed || a->bound == x;
    if (a->e1 && b->e1) expr(a->e1, b->e1, sh);
    if (a->e2 && b->e2) expr(a->e2, b->e2, sh);
    if (a->f1 && b->f1) formula(a->f1, b->f1, sh);
    if (a->f2 && b->f2) formula(a->f2, b->f2, sh);
  }
};

ExprPtr default_witness(const SortedVar& x) {
  switch (x.kind) {
    case VarKind::Number: return mk_zero();
    case VarKind::Functional: case VarKind::Lawlike: return mk_k(x.level);
    default: return mk_var(x);
  }
}

std::optional<ExprPtr> infer_instance(const FormulaPtr& phi, const SortedVar& x,
                                      const FormulaPtr& psi, const ExprPtr& hint) {
  std::vector<ExprPtr> cands;
  if (hint) cands.push_back(hint);
  InstanceFinder f{x, nullptr, false};
  f.formula(phi, psi, false);
  if (!f.conflict && f.found) cands.push_back(f.found);
  cands.push_back(mk_var(x));
  cands.push_back(default_witness(x));
  for (const auto& t : cands) {
    if (t->value_level() != x.level) continue;
    try {
      if (alpha_eq(substitute(phi, x, t), psi)) return t;
    } catch (const SortError&) {
    }
  }
  return std::nullopt;
}

// Leibniz template: a formula tpl and variable v with tpl[v:=lhs] = a and
// tpl[v:=rhs] = b, built by replacing the positions where a and b differ.
struct TemplateBuilder {
  ExprPtr lhs, rhs;
  SortedVar v;
  bool ok = true;

  ExprPtr expr(const ExprPtr& a, const ExprPtr& b) {
    if (!ok) return a;
    if (expr_eq(a, b)) return a;
    if (expr_eq(a, lhs) && expr_eq(b, rhs)) return mk_var(v);
    if (a->tag != b->tag || a->level != b->level ||
        (a->tag == ETag::Var && !(a->var == b->var))) {
      ok = false;
      return a;
    }
    ExprPtr na = a->a ? expr(a->a, b->a) : nullptr;
    ExprPtr nb = a->b ? expr(a->b, b->b) : nullptr;
    if (!ok) return a;
    Expr out = *a;
    out.a = na;
    out.b = nb;
    return std::make_shared<Expr>(out);
  }

  FormulaPtr formula(const FormulaPtr& a, const FormulaPtr& b) {
    if (!ok) return a;
    if (a->tag != b->tag) { ok = false; return a; }
    Formula out = *a;
    if (a->tag == FTag::Forall || a->tag == FTag::Exists) {
      if (!(a->bound == b->bound)) { ok = false; return a; }
    }
    if (a->tag == FTag::Prop && a->prop != b->prop) { ok = false; return a; }
    if (a->tag == FTag::EqN || a->tag == FTag::MemN) {
      if (a->level != b->level) { ok = false; return a; }
    }
    if (a->e1) out.e1 = expr(a->e1, b->e1);
    if (a->e2) out.e2 = expr(a->e2, b->e2);
    if (a->f1) out.f1 = formula(a->f1, b->f1);
    if (a->f2) out.f2 = formula(a->f2, b->f2);
    return std::make_shared<Formula>(out);
  }
};

struct Checker {
  const ProofTree& tree;
  std::unordered_set<const ProofNode*> done;

  void fail(const ProofNode& n, const std::string& why) {
    throw RuleError(rule_name(n.rule) + " |- " + print(n.conclusion) + ": " + why);
  }

  void subset_or_fail(const ProofNode& n, const std::vector<FormulaPtr>& small) {
    if (!ctx_subset(small, n.assumptions)) fail(n, "premise assumptions exceed the node's");
  }

  void check(const ProofNode& n) {
    if (done.count(&n)) return;
    for (const auto& p : n.premises) check(*p);

    Lang lang = tree.theory.lang();
    check_sorted(n.conclusion, lang, tree.theory.s);
    for (const auto& a : n.assumptions) check_sorted(a, lang, tree.theory.s);

    auto prem = [&](std::size_t i) -> const ProofNode& {
      if (i >= n.premises.size()) fail(n, "missing premise");
      return *n.premises[i];
    };
    auto arity = [&](std::size_t k) {
      if (n.premises.size() != k)
        fail(const_cast<ProofNode&>(n),
             "expected " + std::to_string(k) + " premises, got " + std::to_string(n.premises.size()));
    };

    switch (n.rule) {
      case RuleId::Assume:
        arity(0);
        if (!ctx_contains(n.assumptions, n.conclusion)) fail(n, "conclusion is not among the assumptions");
        break;

      case RuleId::Axiom: {
        arity(0);
        std::optional<AxiomInstance> inst;
        try {
          inst = is_axiom(tree.theory, n.conclusion);
        } catch (const ForgeError& e) {
          throw AxiomError(std::string(e.what()) + " in axiom leaf " + print(n.conclusion));
        }
        if (!inst)
          throw AxiomError("not an axiom of " + theory_name(tree.theory.id) + "_" +
                           std::to_string(tree.theory.s) + ": " + print(n.conclusion));
        if (n.axiom_family && *n.axiom_family != inst->family)
          throw AxiomError("axiom leaf cites " + family_name(*n.axiom_family) +
                           " but matches " + family_name(inst->family));
        break;
      }

      case RuleId::AndI: {
        arity(2);
        if (n.conclusion->tag != FTag::And) fail(n, "conclusion is not a conjunction");
        if (!alpha_eq(prem(0).conclusion, n.conclusion->f1) ||
            !alpha_eq(prem(1).conclusion, n.conclusion->f2))
          fail(n, "premises do not match the conjuncts");
        subset_or_fail(n, prem(0).assumptions);
        subset_or_fail(n, prem(1).assumptions);
        break;
      }

      case RuleId::AndE1: case RuleId::AndE2: {
        arity(1);
        const FormulaPtr& c = prem(0).conclusion;
        if (c->tag != FTag::And) fail(n, "premise is not a conjunction");
        const FormulaPtr& want = n.rule == RuleId::AndE1 ? c->f1 : c->f2;
        if (!alpha_eq(want, n.conclusion)) fail(n, "conclusion is not the selected conjunct");
        subset_or_fail(n, prem(0).assumptions);
        break;
      }

      case RuleId::OrI1: case RuleId::OrI2: {
        arity(1);
        if (n.conclusion->tag != FTag::Or) fail(n, "conclusion is not a disjunction");
        const FormulaPtr& want = n.rule == RuleId::OrI1 ? n.conclusion->f1 : n.conclusion->f2;
        if (!alpha_eq(want, prem(0).conclusion)) fail(n, "premise is not the selected disjunct");
        subset_or_fail(n, prem(0).assumptions);
        break;
      }

      case RuleId::OrE: {
        arity(3);
        const FormulaPtr& d = prem(0).conclusion;
        if (d->tag != FTag::Or) fail(n, "major premise is not a disjunction");
        if (!alpha_eq(prem(1).conclusion, n.conclusion) ||
            !alpha_eq(prem(2).conclusion, n.conclusion))
          fail(n, "case conclusions differ from the node conclusion");
        subset_or_fail(n, prem(0).assumptions);
        subset_or_fail(n, ctx_minus(prem(1).assumptions, d->f1));
        subset_or_fail(n, ctx_minus(prem(2).assumptions, d->f2));
        break;
      }

      case RuleId::ImpI: {
        arity(1);
        if (n.conclusion->tag != FTag::Implies) fail(n, "conclusion is not an implication");
        if (!alpha_eq(prem(0).conclusion, n.conclusion->f2)) fail(n, "premise is not the consequent");
        subset_or_fail(n, ctx_minus(prem(0).assumptions, n.conclusion->f1));
        break;
      }

      case RuleId::ImpE: {
        arity(2);
        const FormulaPtr& imp = prem(0).conclusion;
        if (imp->tag != FTag::Implies) fail(n, "major premise is not an implication");
        if (!alpha_eq(imp->f1, prem(1).conclusion)) fail(n, "minor premise does not match the antecedent");
        if (!alpha_eq(imp->f2, n.conclusion)) fail(n, "conclusion is not the consequent");
        subset_or_fail(n, prem(0).assumptions);
        subset_or_fail(n, prem(1).assumptions);
        break;
      }

      case RuleId::BotE: {
        arity(1);
        if (prem(0).conclusion->tag != FTag::Falsum) fail(n, "premise is not falsum");
        subset_or_fail(n, prem(0).assumptions);
        break;
      }

      case RuleId::ForallI: {
        arity(1);
        if (n.conclusion->tag != FTag::Forall) fail(n, "conclusion is not universal");
        SortedVar x = n.conclusion->bound;
        const FormulaPtr& body = n.conclusion->f1;
        SortedVar a = x;
        if (n.eigen) a = *n.eigen;
        else {
          // infer: premise must be body[x := a] for a variable a
          auto t = infer_instance(body, x, prem(0).conclusion, nullptr);
          if (t && (*t)->tag == ETag::Var) a = (*t)->var;
        }
        if (a.level != x.level || a.kind != x.kind)
          throw EigenvariableError("eigenvariable " + var_name(a) + " has the wrong sort");
        if (!alpha_eq(substitute(body, x, mk_var(a)), prem(0).conclusion))
          fail(n, "premise is not the body at the eigenvariable");
        auto fv = ctx_free(prem(0).assumptions);
        if (fv.count(a))
          throw EigenvariableError(var_name(a) + " occurs free in an open assumption");
        if (free_vars(n.conclusion).count(a))
          throw EigenvariableError(var_name(a) + " occurs free in the conclusion");
        subset_or_fail(n, prem(0).assumptions);
        break;
      }

      case RuleId::ForallE: {
        arity(1);
        const FormulaPtr& all = prem(0).conclusion;
        if (all->tag != FTag::Forall) fail(n, "premise is not universal");
        auto t = infer_instance(all->f1, all->bound, n.conclusion, n.witness);
        if (!t) fail(n, "conclusion is not an instance of the premise");
        if (!kind_compatible(all->bound, *t))
          fail(n, "witness " + print(*t) + " is not admissible for " + var_name(all->bound));
        subset_or_fail(n, prem(0).assumptions);
        break;
      }

      case RuleId::ExistsI: {
        arity(1);
        if (n.conclusion->tag != FTag::Exists) fail(n, "conclusion is not existential");
        auto t = infer_instance(n.conclusion->f1, n.conclusion->bound, prem(0).conclusion,
                                n.witness);
        if (!t) fail(n, "premise is not an instance of the conclusion body");
        if (!kind_compatible(n.conclusion->bound, *t))
          fail(n, "witness " + print(*t) + " is not admissible for " +
                      var_name(n.conclusion->bound));
        subset_or_fail(n, prem(0).assumptions);
        break;
      }

      case RuleId::ExistsE: {
        arity(2);
        const FormulaPtr& ex = prem(0).conclusion;
        if (ex->tag != FTag::Exists) fail(n, "major premise is not existential");
        if (!alpha_eq(prem(1).conclusion, n.conclusion)) fail(n, "minor conclusion differs");
        SortedVar x = ex->bound;
        std::vector<SortedVar> cands;
        if (n.eigen) cands.push_back(*n.eigen);
        else {
          cands.push_back(x);
          for (const auto& A : prem(1).assumptions) {
            auto t = infer_instance(ex->f1, x, A, nullptr);
            if (t && (*t)->tag == ETag::Var) cands.push_back((*t)->var);
          }
        }
        bool found = false;
        std::string why = "no admissible eigenvariable";
        for (const auto& a : cands) {
          if (a.level != x.level || a.kind != x.kind) continue;
          FormulaPtr hyp = substitute(ex->f1, x, mk_var(a));
          auto rest = ctx_minus(prem(1).assumptions, hyp);
          if (!ctx_subset(rest, n.assumptions)) { why = "case assumptions exceed the node's"; continue; }
          auto fv = ctx_free(rest);
          if (fv.count(a) || free_vars(n.conclusion).count(a) || free_vars(ex).count(a)) {
            why = var_name(a) + " is not fresh";
            continue;
          }
          found = true;
          break;
        }
        if (!found) throw EigenvariableError(why);
        subset_or_fail(n, prem(0).assumptions);
        break;
      }

      case RuleId::Dne: {
        if (!tree.classical)
          fail(n, "double-negation elimination in an intuitionistic proof");
        arity(1);
        FormulaPtr nn = mk_not(mk_not(n.conclusion));
        if (!alpha_eq(prem(0).conclusion, nn)) fail(n, "premise is not the double negation");
        subset_or_fail(n, prem(0).assumptions);
        break;
      }

      case RuleId::EqRefl: {
        arity(0);
        if (n.conclusion->tag != FTag::EqN || !expr_eq(n.conclusion->e1, n.conclusion->e2))
          fail(n, "conclusion is not a reflexive equation");
        break;
      }

      case RuleId::EqSubst: {
        arity(2);
        const FormulaPtr& eq = prem(0).conclusion;
        if (eq->tag != FTag::EqN) fail(n, "major premise is not an equation");
        std::set<SortedVar> avoid = free_vars(prem(1).conclusion);
        auto cf = free_vars(n.conclusion);
        avoid.insert(cf.begin(), cf.end());
        auto ef = free_vars(eq);
        avoid.insert(ef.begin(), ef.end());
        SortedVar v = fresh_var(
            SortedVar{0, eq->level, eq->level == 0 ? VarKind::Number : VarKind::Functional}, avoid);
        TemplateBuilder tb{eq->e1, eq->e2, v, true};
        FormulaPtr tpl = tb.formula(prem(1).conclusion, n.conclusion);
        bool good = tb.ok && alpha_eq(substitute(tpl, v, eq->e1), prem(1).conclusion) &&
                    alpha_eq(substitute(tpl, v, eq->e2), n.conclusion);
        if (!good) fail(n, "conclusion is not a replacement instance of the premise");
        subset_or_fail(n, prem(0).assumptions);
        subset_or_fail(n, prem(1).assumptions);
        break;
      }
    }
    done.insert(&n);
  }
};

}  // namespace

CheckOk check_proof(const ProofTree& p) {
  if (!p.root) throw RuleError("empty proof");
  Checker c{p, {}};
  c.check(*p.root);
  if (!p.root->assumptions.empty())
    throw RuleError("root sequent has undischarged assumptions");
  return CheckOk{p.theory, p.root->conclusion};
}

std::variant<CheckOk, std::string> check_verdict(const ProofTree& p) {
  try {
    return check_proof(p);
  } catch (const ForgeError& e) {
    return std::string(e.what());
  }
}

// ---- builders ----

namespace {
ProofNodePtr node(RuleId r, std::vector<FormulaPtr> ctx, FormulaPtr concl,
                  std::vector<ProofNodePtr> prem) {
  auto n = std::make_shared<ProofNode>();
  n->rule = r;
  n->assumptions = std::move(ctx);
  n->conclusion = std::move(concl);
  n->premises = std::move(prem);
  return n;
}

std::vector<FormulaPtr> merge(const std::vector<FormulaPtr>& a, const std::vector<FormulaPtr>& b) {
  std::vector<FormulaPtr> out = a;
  for (const auto& f : b)
    if (!ctx_contains(out, f)) out.push_back(f);
  return out;
}
}  // namespace

ProofNodePtr assume(FormulaPtr phi) { return node(RuleId::Assume, {phi}, phi, {}); }

ProofNodePtr axiom(FormulaPtr instance, std::optional<AxiomFamily> family) {
  auto n = node(RuleId::Axiom, {}, std::move(instance), {});
  n->axiom_family = family;
  return n;
}

ProofNodePtr and_i(ProofNodePtr a, ProofNodePtr b) {
  auto ctx = merge(a->assumptions, b->assumptions);
  auto concl = mk_and(a->conclusion, b->conclusion);
  return node(RuleId::AndI, std::move(ctx), std::move(concl), {std::move(a), std::move(b)});
}

ProofNodePtr and_e1(FormulaPtr concl, ProofNodePtr ab) {
  auto ctx = ab->assumptions;
  return node(RuleId::AndE1, std::move(ctx), std::move(concl), {std::move(ab)});
}

ProofNodePtr and_e2(FormulaPtr concl, ProofNodePtr ab) {
  auto ctx = ab->assumptions;
  return node(RuleId::AndE2, std::move(ctx), std::move(concl), {std::move(ab)});
}

ProofNodePtr or_i1(FormulaPtr disj, ProofNodePtr a) {
  auto ctx = a->assumptions;
  return node(RuleId::OrI1, std::move(ctx), std::move(disj), {std::move(a)});
}

ProofNodePtr or_i2(FormulaPtr disj, ProofNodePtr b) {
  auto ctx = b->assumptions;
  return node(RuleId::OrI2, std::move(ctx), std::move(disj), {std::move(b)});
}

ProofNodePtr or_e(ProofNodePtr disj, FormulaPtr hypA, ProofNodePtr fromA, FormulaPtr hypB,
                  ProofNodePtr fromB) {
  auto ctx = merge(disj->assumptions,
                   merge(ctx_minus(fromA->assumptions, hypA), ctx_minus(fromB->assumptions, hypB)));
  auto concl = fromA->conclusion;
  return node(RuleId::OrE, std::move(ctx), std::move(concl),
              {std::move(disj), std::move(fromA), std::move(fromB)});
}

ProofNodePtr imp_i(FormulaPtr hyp, ProofNodePtr body) {
  auto ctx = ctx_minus(body->assumptions, hyp);
  auto concl = mk_implies(hyp, body->conclusion);
  return node(RuleId::ImpI, std::move(ctx), std::move(concl), {std::move(body)});
}

ProofNodePtr imp_e(ProofNodePtr imp, ProofNodePtr arg) {
  auto ctx = merge(imp->assumptions, arg->assumptions);
  auto concl = imp->conclusion->f2;
  return node(RuleId::ImpE, std::move(ctx), std::move(concl), {std::move(imp), std::move(arg)});
}

ProofNodePtr bot_e(FormulaPtr concl, ProofNodePtr bot) {
  auto ctx = bot->assumptions;
  return node(RuleId::BotE, std::move(ctx), std::move(concl), {std::move(bot)});
}

ProofNodePtr forall_i(SortedVar x, FormulaPtr quantified, ProofNodePtr body) {
  auto ctx = body->assumptions;
  auto n = node(RuleId::ForallI, std::move(ctx), std::move(quantified), {std::move(body)});
  n->eigen = x;
  return n;
}

ProofNodePtr forall_e(ExprPtr witness, ProofNodePtr all) {
  auto ctx = all->assumptions;
  const FormulaPtr& q = all->conclusion;
  auto concl = substitute(q->f1, q->bound, witness);
  auto n = node(RuleId::ForallE, std::move(ctx), std::move(concl), {std::move(all)});
  n->witness = std::move(witness);
  return n;
}

ProofNodePtr exists_i(FormulaPtr quantified, ExprPtr witness, ProofNodePtr inst) {
  auto ctx = inst->assumptions;
  auto n = node(RuleId::ExistsI, std::move(ctx), std::move(quantified), {std::move(inst)});
  n->witness = std::move(witness);
  return n;
}

ProofNodePtr exists_e(ProofNodePtr ex, SortedVar eigen, ProofNodePtr body) {
  const FormulaPtr& q = ex->conclusion;
  FormulaPtr hyp = substitute(q->f1, q->bound, mk_var(eigen));
  auto ctx = merge(ex->assumptions, ctx_minus(body->assumptions, hyp));
  auto concl = body->conclusion;
  auto n = node(RuleId::ExistsE, std::move(ctx), std::move(concl), {std::move(ex), std::move(body)});
  n->eigen = eigen;
  return n;
}

ProofNodePtr dne(ProofNodePtr notnot) {
  auto ctx = notnot->assumptions;
  auto concl = not_body(not_body(notnot->conclusion));
  return node(RuleId::Dne, std::move(ctx), std::move(concl), {std::move(notnot)});
}

ProofNodePtr eq_refl(ExprPtr t) { return node(RuleId::EqRefl, {}, mk_eq(t, t), {}); }

ProofNodePtr eq_subst(ProofNodePtr eq, ProofNodePtr phi_of_lhs, FormulaPtr concl) {
  auto ctx = merge(eq->assumptions, phi_of_lhs->assumptions);
  return node(RuleId::EqSubst, std::move(ctx), std::move(concl),
              {std::move(eq), std::move(phi_of_lhs)});
}

// ---- text format ----

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ProofTree parse_proof_file(const std::string& contents) {
  ProofTree tree;
  std::map<long, ProofNodePtr> nodes;
  std::optional<long> qed;
  std::istringstream in(contents);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    if (s.rfind("theory ", 0) == 0) {
      std::istringstream h(s.substr(7));
      std::string name;
      unsigned sval = 1;
      h >> name >> sval;
      auto id = theory_from_name(name);
      if (!id) throw SyntaxError(lineno, "unknown theory " + name);
      tree.theory = Theory{*id, sval};
      continue;
    }
    if (s.rfind("logic ", 0) == 0) {
      std::string l = trim(s.substr(6));
      if (l == "HPC") tree.classical = false;
      else if (l == "CPC") tree.classical = true;
      else throw SyntaxError(lineno, "unknown logic " + l);
      continue;
    }
    if (s.rfind("qed", 0) == 0) {
      qed = std::stol(trim(s.substr(3)));
      continue;
    }
    // <id>: <rule> [<args>] [ids] {assumptions} |- formula
    auto colon = s.find(':');
    if (colon == std::string::npos) throw SyntaxError(lineno, "expected '<id>:'");
    long id = std::stol(s.substr(0, colon));
    auto lb = s.find('[', colon);
    auto rb = s.find(']', lb);
    auto lbrace = s.find('{', rb);
    auto rbrace = s.find('}', lbrace);
    auto turnstile = s.find("|-", rbrace);
    if (lb == std::string::npos || rb == std::string::npos || lbrace == std::string::npos ||
        rbrace == std::string::npos || turnstile == std::string::npos)
      throw SyntaxError(lineno, "malformed proof line");

    std::string rulepart = trim(s.substr(colon + 1, lb - colon - 1));
    std::string idspart = s.substr(lb + 1, rb - lb - 1);
    std::string ctxpart = s.substr(lbrace + 1, rbrace - lbrace - 1);
    std::string formpart = trim(s.substr(turnstile + 2));

    std::istringstream rp(rulepart);
    std::string rname;
    rp >> rname;
    auto rid = rule_from_name(rname);
    if (!rid) throw SyntaxError(lineno, "unknown rule " + rname);
    std::string arg;
    std::getline(rp, arg);
    arg = trim(arg);

    auto n = std::make_shared<ProofNode>();
    n->rule = *rid;

    Lang lang = tree.theory.lang();
    unsigned sv = tree.theory.s;
    n->conclusion = parse_formula(formpart, lang, sv);
    std::size_t start = 0;
    while (start < ctxpart.size()) {
      auto sep = ctxpart.find(';', start);
      std::string piece = trim(ctxpart.substr(start, sep == std::string::npos ? sep : sep - start));
      if (!piece.empty()) n->assumptions.push_back(parse_formula(piece, lang, sv));
      if (sep == std::string::npos) break;
      start = sep + 1;
    }
    std::istringstream ip(idspart);
    long pid;
    while (ip >> pid) {
      auto it = nodes.find(pid);
      if (it == nodes.end()) throw SyntaxError(lineno, "unknown premise id " + std::to_string(pid));
      n->premises.push_back(it->second);
    }
    if (!arg.empty()) {
      switch (*rid) {
        case RuleId::Axiom: {
          auto fam = family_from_name(arg);
          if (!fam) throw SyntaxError(lineno, "unknown axiom family " + arg);
          n->axiom_family = fam;
          break;
        }
        case RuleId::ForallI: case RuleId::ExistsE:
          n->eigen = parse_var_name(arg);
          break;
        case RuleId::ForallE: case RuleId::ExistsI:
          n->witness = parse_expr(arg, lang, sv);
          break;
        default:
          throw SyntaxError(lineno, "rule " + rname + " takes no argument");
      }
    }
    nodes[id] = n;
  }
  if (nodes.empty()) throw SyntaxError(0, "no proof nodes");
  tree.root = qed ? nodes.at(*qed) : nodes.rbegin()->second;
  return tree;
}

std::string format_proof(const ProofTree& p) {
  std::ostringstream out;
  out << "theory " << theory_name(p.theory.id) << " " << p.theory.s << "\n";
  out << "logic " << (p.classical ? "CPC" : "HPC") << "\n";
  std::map<const ProofNode*, long> ids;
  long next = 1;
  std::function<void(const ProofNodePtr&)> walk = [&](const ProofNodePtr& n) {
    if (ids.count(n.get())) return;
    for (const auto& q : n->premises) walk(q);
    long id = next++;
    ids[n.get()] = id;
    out << id << ": " << rule_name(n->rule);
    if (n->axiom_family) out << " " << family_name(*n->axiom_family);
    if (n->eigen) out << " " << var_name(*n->eigen);
    if (n->witness) out << " " << print(n->witness);
    out << " [";
    for (std::size_t i = 0; i < n->premises.size(); ++i) {
      if (i) out << " ";
      out << ids[n->premises[i].get()];
    }
    out << "] {";
    for (std::size_t i = 0; i < n->assumptions.size(); ++i) {
      if (i) out << "; ";
      out << print(n->assumptions[i]);
    }
    out << "} |- " << print(n->conclusion) << "\n";
  };
  walk(p.root);
  out << "qed " << ids[p.root.get()] << "\n";
  return out.str();
}

}  // namespace bethforge::calculus
