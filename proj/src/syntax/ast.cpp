#include "bethforge/syntax/ast.hpp"

#include <algorithm>
#include <map>

namespace bethforge::syntax {

using ETag = Expr::Tag;
using FTag = Formula::Tag;

std::string lang_name(Lang l) {
  switch (l) {
    case Lang::L: return "L";
    case Lang::LP: return "LP";
    case Lang::SLP: return "SLP";
    case Lang::TI: return "TI";
  }
  return "?";
}

std::optional<Lang> lang_from_name(const std::string& name) {
  if (name == "L") return Lang::L;
  if (name == "LP") return Lang::LP;
  if (name == "SLP") return Lang::SLP;
  if (name == "TI") return Lang::TI;
  return std::nullopt;
}

// Concrete variable names carry a presentation letter folded into the index:
// number variables cycle through x y z u v w (index = 6q + r), the other
// kinds through three letters each (index = 3q + r). The mapping is a
// bijection, so names round-trip and distinct names are distinct variables.
namespace {
constexpr const char* kNumberLetters = "xyzuvw";
const char* const kFunctionalLetters[3] = {"F", "G", "H"};
const char* const kLawlikeLetters[3] = {"A", "B", "C"};
const char* const kLawlessLetters[3] = {"LF", "LG", "LH"};
const char* const kSetLetters[3] = {"X", "Y", "Z"};
}  // namespace

std::string var_name(const SortedVar& v) {
  if (v.kind == VarKind::Number)
    return std::string(1, kNumberLetters[v.index % 6]) + std::to_string(v.index / 6);
  const char* const* letters = v.kind == VarKind::Functional ? kFunctionalLetters
                               : v.kind == VarKind::Lawlike  ? kLawlikeLetters
                               : v.kind == VarKind::Lawless  ? kLawlessLetters
                                                             : kSetLetters;
  return std::string(letters[v.index % 3]) + std::to_string(v.level) + "_" +
         std::to_string(v.index / 3);
}

ExprPtr mk_zero() {
  static const ExprPtr z = std::make_shared<Expr>(Expr{ETag::Zero, 0, {}, nullptr, nullptr});
  return z;
}

ExprPtr mk_k(unsigned level) {
  if (level < 1) throw SortError("K requires level >= 1");
  return std::make_shared<Expr>(Expr{ETag::K, level, {}, nullptr, nullptr});
}

ExprPtr mk_var(SortedVar v) {
  if (v.kind == VarKind::Number && v.level != 0)
    throw SortError("number variable must have level 0");
  if ((v.kind == VarKind::Functional || v.kind == VarKind::Lawlike ||
       v.kind == VarKind::Lawless) && v.level < 1)
    throw SortError("functional variable must have level >= 1");
  return std::make_shared<Expr>(Expr{ETag::Var, v.level, v, nullptr, nullptr});
}

namespace {
void want_term(const ExprPtr& e, const char* who) {
  if (e->value_level() != 0) throw SortError(std::string(who) + " expects a level-0 term");
}
}  // namespace

ExprPtr mk_succ(ExprPtr a) {
  want_term(a, "S");
  return std::make_shared<Expr>(Expr{ETag::Succ, 0, {}, std::move(a), nullptr});
}

ExprPtr mk_plus(ExprPtr a, ExprPtr b) {
  want_term(a, "+"); want_term(b, "+");
  return std::make_shared<Expr>(Expr{ETag::Plus, 0, {}, std::move(a), std::move(b)});
}

ExprPtr mk_times(ExprPtr a, ExprPtr b) {
  want_term(a, "*"); want_term(b, "*");
  return std::make_shared<Expr>(Expr{ETag::Times, 0, {}, std::move(a), std::move(b)});
}

ExprPtr mk_n(unsigned level, ExprPtr a) {
  if (level < 1) throw SortError("N requires level >= 1");
  if (a->value_level() != level)
    throw SortError("N" + std::to_string(level) + " applied to a level-" +
                    std::to_string(a->value_level()) + " expression");
  return std::make_shared<Expr>(Expr{ETag::N, level, {}, std::move(a), nullptr});
}

ExprPtr mk_ap(ExprPtr fun, ExprPtr arg) {
  unsigned k = fun->value_level();
  if (k < 1) throw SortError("Ap applied to a level-0 expression");
  want_term(arg, "Ap");
  return std::make_shared<Expr>(Expr{ETag::Ap, k, {}, std::move(fun), std::move(arg)});
}

ExprPtr mk_cat(ExprPtr a, ExprPtr b) {
  want_term(a, "cat"); want_term(b, "cat");
  return std::make_shared<Expr>(Expr{ETag::Cat, 0, {}, std::move(a), std::move(b)});
}

ExprPtr mk_barseg(ExprPtr f, ExprPtr t) {
  if (f->value_level() != 1) throw SortError("bar expects a 1-functional");
  want_term(t, "bar");
  return std::make_shared<Expr>(Expr{ETag::BarSeg, 0, {}, std::move(f), std::move(t)});
}

ExprPtr mk_kap(ExprPtr e, ExprPtr x) {
  want_term(e, "kap"); want_term(x, "kap");
  return std::make_shared<Expr>(Expr{ETag::Kap, 0, {}, std::move(e), std::move(x)});
}

ExprPtr mk_numeral(std::uint64_t n) {
  ExprPtr e = mk_zero();
  for (std::uint64_t i = 0; i < n; ++i) e = mk_succ(e);
  return e;
}

FormulaPtr mk_falsum() {
  static const FormulaPtr f = std::make_shared<Formula>(Formula{FTag::Falsum});
  return f;
}

FormulaPtr mk_prop(std::string name) {
  Formula f{FTag::Prop};
  f.prop = std::move(name);
  return std::make_shared<Formula>(std::move(f));
}

FormulaPtr mk_eq(ExprPtr l, ExprPtr r) {
  if (l->value_level() != r->value_level())
    throw SortError("=: operands of levels " + std::to_string(l->value_level()) + " and " +
                    std::to_string(r->value_level()));
  Formula f{FTag::EqN};
  f.level = l->value_level();
  f.e1 = std::move(l);
  f.e2 = std::move(r);
  return std::make_shared<Formula>(std::move(f));
}

FormulaPtr mk_mem(ExprPtr elem, ExprPtr set) {
  if (set->value_level() != elem->value_level() + 1)
    throw SortError("in: element level " + std::to_string(elem->value_level()) +
                    " vs set level " + std::to_string(set->value_level()));
  Formula f{FTag::MemN};
  f.level = elem->value_level();
  f.e1 = std::move(elem);
  f.e2 = std::move(set);
  return std::make_shared<Formula>(std::move(f));
}

FormulaPtr mk_proves(ExprPtr t, FormulaPtr inner) {
  want_term(t, "proves");
  Formula f{FTag::Proves};
  f.e1 = std::move(t);
  f.f1 = std::move(inner);
  return std::make_shared<Formula>(std::move(f));
}

namespace {
FormulaPtr mk_bin(FTag tag, FormulaPtr a, FormulaPtr b) {
  Formula f{tag};
  f.f1 = std::move(a);
  f.f2 = std::move(b);
  return std::make_shared<Formula>(std::move(f));
}
}  // namespace

FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) { return mk_bin(FTag::And, std::move(a), std::move(b)); }
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) { return mk_bin(FTag::Or, std::move(a), std::move(b)); }
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b) { return mk_bin(FTag::Implies, std::move(a), std::move(b)); }
FormulaPtr mk_not(FormulaPtr a) { return mk_implies(std::move(a), mk_falsum()); }

FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b) {
  return mk_and(mk_implies(a, b), mk_implies(b, a));
}

FormulaPtr mk_forall(SortedVar v, FormulaPtr body) {
  Formula f{FTag::Forall};
  f.bound = v;
  f.f1 = std::move(body);
  return std::make_shared<Formula>(std::move(f));
}

FormulaPtr mk_exists(SortedVar v, FormulaPtr body) {
  Formula f{FTag::Exists};
  f.bound = v;
  f.f1 = std::move(body);
  return std::make_shared<Formula>(std::move(f));
}

FormulaPtr mk_le(ExprPtr a, ExprPtr b) {
  std::set<SortedVar> avoid = free_vars(a);
  auto fb = free_vars(b);
  avoid.insert(fb.begin(), fb.end());
  SortedVar w = fresh_var(SortedVar{0, 0, VarKind::Number}, avoid);
  return mk_exists(w, mk_eq(mk_plus(std::move(a), mk_var(w)), std::move(b)));
}

FormulaPtr mk_lt(ExprPtr a, ExprPtr b) { return mk_le(mk_succ(std::move(a)), std::move(b)); }

bool is_not(const FormulaPtr& f) {
  return f->tag == FTag::Implies && f->f2->tag == FTag::Falsum;
}

FormulaPtr not_body(const FormulaPtr& f) { return f->f1; }

bool expr_eq(const ExprPtr& a, const ExprPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->tag != b->tag || a->level != b->level) return false;
  switch (a->tag) {
    case ETag::Zero: case ETag::K: return true;
    case ETag::Var: return a->var == b->var;
    case ETag::Succ: case ETag::N: return expr_eq(a->a, b->a);
    default: return expr_eq(a->a, b->a) && expr_eq(a->b, b->b);
  }
}

bool formula_eq(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case FTag::Falsum: return true;
    case FTag::Prop: return a->prop == b->prop;
    case FTag::EqN: case FTag::MemN:
      return a->level == b->level && expr_eq(a->e1, b->e1) && expr_eq(a->e2, b->e2);
    case FTag::Proves:
      return expr_eq(a->e1, b->e1) && formula_eq(a->f1, b->f1);
    case FTag::And: case FTag::Or: case FTag::Implies:
      return formula_eq(a->f1, b->f1) && formula_eq(a->f2, b->f2);
    case FTag::Forall: case FTag::Exists:
      return a->bound == b->bound && formula_eq(a->f1, b->f1);
  }
  return false;
}

namespace {

void collect_free(const ExprPtr& e, std::set<SortedVar>& bound, std::set<SortedVar>& out) {
  if (!e) return;
  if (e->tag == ETag::Var) {
    if (!bound.count(e->var)) out.insert(e->var);
    return;
  }
  collect_free(e->a, bound, out);
  collect_free(e->b, bound, out);
}

void collect_free(const FormulaPtr& f, std::set<SortedVar>& bound, std::set<SortedVar>& out) {
  if (!f) return;
  switch (f->tag) {
    case FTag::Forall:
    case FTag::Exists: {
      bool fresh = bound.insert(f->bound).second;
      collect_free(f->f1, bound, out);
      if (fresh) bound.erase(f->bound);
      return;
    }
    default:
      collect_free(f->e1, bound, out);
      collect_free(f->e2, bound, out);
      collect_free(f->f1, bound, out);
      collect_free(f->f2, bound, out);
  }
}

void collect_all(const FormulaPtr& f, std::set<SortedVar>& out) {
  if (!f) return;
  if (f->tag == FTag::Forall || f->tag == FTag::Exists) out.insert(f->bound);
  std::set<SortedVar> none;
  collect_free(f->e1, none, out);
  collect_free(f->e2, none, out);
  collect_all(f->f1, out);
  collect_all(f->f2, out);
}

}  // namespace

std::set<SortedVar> free_vars(const ExprPtr& e) {
  std::set<SortedVar> bound, out;
  collect_free(e, bound, out);
  return out;
}

std::set<SortedVar> free_vars(const FormulaPtr& f) {
  std::set<SortedVar> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::set<SortedVar> all_vars(const FormulaPtr& f) {
  std::set<SortedVar> out;
  collect_all(f, out);
  return out;
}

unsigned sort_of(const FormulaPtr& f) {
  unsigned m = 0;
  for (const auto& v : free_vars(f)) m = std::max(m, v.level);
  return m;
}

FormulaPtr closure(const FormulaPtr& f) {
  auto fv = free_vars(f);
  std::vector<SortedVar> vs(fv.begin(), fv.end());
  // index-then-level order; at equal index the higher level is quantified
  // first, matching the closure shape of the L axioms
  std::sort(vs.begin(), vs.end(), [](const SortedVar& a, const SortedVar& b) {
    if (a.index != b.index) return a.index < b.index;
    if (a.level != b.level) return a.level > b.level;
    return a.kind < b.kind;
  });
  FormulaPtr out = f;
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) out = mk_forall(*it, out);
  return out;
}

SortedVar fresh_var(const SortedVar& like, const std::set<SortedVar>& avoid) {
  unsigned step = like.kind == VarKind::Number ? 6 : 3;
  for (unsigned idx = 0;; idx += step) {
    SortedVar cand{idx, like.level, like.kind};
    if (!avoid.count(cand)) return cand;
  }
}

ExprPtr substitute(const ExprPtr& target, const SortedVar& v, const ExprPtr& e) {
  if (!target) return target;
  switch (target->tag) {
    case ETag::Zero: case ETag::K: return target;
    case ETag::Var:
      if (target->var == v) {
        if (e->value_level() != v.level)
          throw SortError("substitute: level mismatch for " + var_name(v));
        return e;
      }
      return target;
    case ETag::Succ: return mk_succ(substitute(target->a, v, e));
    case ETag::N: return mk_n(target->level, substitute(target->a, v, e));
    case ETag::Plus: return mk_plus(substitute(target->a, v, e), substitute(target->b, v, e));
    case ETag::Times: return mk_times(substitute(target->a, v, e), substitute(target->b, v, e));
    case ETag::Ap: return mk_ap(substitute(target->a, v, e), substitute(target->b, v, e));
    case ETag::Cat: return mk_cat(substitute(target->a, v, e), substitute(target->b, v, e));
    case ETag::BarSeg: return mk_barseg(substitute(target->a, v, e), substitute(target->b, v, e));
    case ETag::Kap: return mk_kap(substitute(target->a, v, e), substitute(target->b, v, e));
  }
  return target;
}

FormulaPtr substitute(const FormulaPtr& target, const SortedVar& v, const ExprPtr& e) {
  if (!target) return target;
  switch (target->tag) {
    case FTag::Falsum: case FTag::Prop: return target;
    case FTag::EqN:
      return mk_eq(substitute(target->e1, v, e), substitute(target->e2, v, e));
    case FTag::MemN:
      return mk_mem(substitute(target->e1, v, e), substitute(target->e2, v, e));
    case FTag::Proves:
      return mk_proves(substitute(target->e1, v, e), substitute(target->f1, v, e));
    case FTag::And: return mk_and(substitute(target->f1, v, e), substitute(target->f2, v, e));
    case FTag::Or: return mk_or(substitute(target->f1, v, e), substitute(target->f2, v, e));
    case FTag::Implies:
      return mk_implies(substitute(target->f1, v, e), substitute(target->f2, v, e));
    case FTag::Forall:
    case FTag::Exists: {
      if (target->bound == v) return target;  // v is shadowed
      auto efv = free_vars(e);
      FormulaPtr body = target->f1;
      SortedVar b = target->bound;
      if (efv.count(b)) {
        // rename the bound variable away from the capture
        std::set<SortedVar> avoid = efv;
        auto bf = free_vars(body);
        avoid.insert(bf.begin(), bf.end());
        avoid.insert(v);
        SortedVar nb = fresh_var(b, avoid);
        body = substitute(body, b, mk_var(nb));
        b = nb;
      }
      body = substitute(body, v, e);
      return target->tag == FTag::Forall ? mk_forall(b, body) : mk_exists(b, body);
    }
  }
  return target;
}

namespace {

// Alpha-equivalence via parallel bound-variable numbering.
struct AlphaCtx {
  std::map<SortedVar, unsigned> la, lb;
  unsigned next = 0;
};

bool alpha_expr(const ExprPtr& a, const ExprPtr& b, const AlphaCtx& ctx) {
  if (a->tag != b->tag || a->level != b->level) return false;
  switch (a->tag) {
    case ETag::Zero: case ETag::K: return true;
    case ETag::Var: {
      auto ia = ctx.la.find(a->var);
      auto ib = ctx.lb.find(b->var);
      if (ia != ctx.la.end() || ib != ctx.lb.end())
        return ia != ctx.la.end() && ib != ctx.lb.end() && ia->second == ib->second;
      return a->var == b->var;
    }
    case ETag::Succ: case ETag::N: return alpha_expr(a->a, b->a, ctx);
    default:
      return alpha_expr(a->a, b->a, ctx) && alpha_expr(a->b, b->b, ctx);
  }
}

bool alpha_formula(const FormulaPtr& a, const FormulaPtr& b, AlphaCtx& ctx) {
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case FTag::Falsum: return true;
    case FTag::Prop: return a->prop == b->prop;
    case FTag::EqN: case FTag::MemN:
      return a->level == b->level && alpha_expr(a->e1, b->e1, ctx) && alpha_expr(a->e2, b->e2, ctx);
    case FTag::Proves:
      return alpha_expr(a->e1, b->e1, ctx) && alpha_formula(a->f1, b->f1, ctx);
    case FTag::And: case FTag::Or: case FTag::Implies:
      return alpha_formula(a->f1, b->f1, ctx) && alpha_formula(a->f2, b->f2, ctx);
    case FTag::Forall: case FTag::Exists: {
      if (a->bound.level != b->bound.level || a->bound.kind != b->bound.kind) return false;
      auto sa = ctx.la.find(a->bound);
      auto sb = ctx.lb.find(b->bound);
      bool hada = sa != ctx.la.end(), hadb = sb != ctx.lb.end();
      unsigned preva = hada ? sa->second : 0, prevb = hadb ? sb->second : 0;
      ctx.la[a->bound] = ctx.next;
      ctx.lb[b->bound] = ctx.next;
      ++ctx.next;
      bool ok = alpha_formula(a->f1, b->f1, ctx);
      if (hada) ctx.la[a->bound] = preva; else ctx.la.erase(a->bound);
      if (hadb) ctx.lb[b->bound] = prevb; else ctx.lb.erase(b->bound);
      return ok;
    }
  }
  return false;
}

}  // namespace

bool alpha_eq(const FormulaPtr& a, const FormulaPtr& b) {
  AlphaCtx ctx;
  return alpha_formula(a, b, ctx);
}

namespace {

void check_var(const SortedVar& v, Lang lang, unsigned s) {
  if (v.level > s)
    throw SortError("variable " + var_name(v) + " has level above s=" + std::to_string(s));
  bool ti = lang == Lang::TI;
  switch (v.kind) {
    case VarKind::Number: break;
    case VarKind::SetVar:
      if (!ti) throw LanguageError("set variable " + var_name(v) + " outside TI");
      break;
    default:
      if (ti) throw LanguageError("functional variable " + var_name(v) + " in TI");
  }
}

}  // namespace

void check_sorted(const ExprPtr& e, Lang lang, unsigned s) {
  if (!e) return;
  switch (e->tag) {
    case ETag::Zero: return;
    case ETag::K:
      if (lang == Lang::TI) throw LanguageError("K constant in TI");
      if (e->level > s) throw SortError("K level above s");
      return;
    case ETag::Var: check_var(e->var, lang, s); return;
    case ETag::N: case ETag::Ap:
      if (lang == Lang::TI) throw LanguageError("functional term in TI");
      if (e->level > s) throw SortError("functional symbol level above s");
      break;
    case ETag::Cat: case ETag::BarSeg: case ETag::Kap:
      if (lang == Lang::TI) throw LanguageError("defined term symbol in TI");
      break;
    default: break;
  }
  check_sorted(e->a, lang, s);
  check_sorted(e->b, lang, s);
}

void check_sorted(const FormulaPtr& f, Lang lang, unsigned s) {
  if (!f) return;
  switch (f->tag) {
    case FTag::Falsum: case FTag::Prop: return;
    case FTag::EqN:
      if (f->level > s) throw SortError("= level above s");
      check_sorted(f->e1, lang, s);
      check_sorted(f->e2, lang, s);
      return;
    case FTag::MemN:
      if (lang != Lang::TI) throw LanguageError("'in' atom outside TI");
      if (f->level + 1 > s) throw SortError("'in' level above s");
      check_sorted(f->e1, lang, s);
      check_sorted(f->e2, lang, s);
      return;
    case FTag::Proves:
      if (lang != Lang::LP && lang != Lang::SLP)
        throw LanguageError("'proves' atom outside LP/SLP");
      check_sorted(f->e1, lang, s);
      check_sorted(f->f1, Lang::L, s);  // inner formula is an L-formula
      return;
    case FTag::Forall: case FTag::Exists:
      check_var(f->bound, lang, s);
      check_sorted(f->f1, lang, s);
      return;
    default:
      check_sorted(f->f1, lang, s);
      check_sorted(f->f2, lang, s);
  }
}

namespace {

// expression precedence: 1 = +, 2 = *, 3 = atomic/application
int eprec(const ExprPtr& e) {
  switch (e->tag) {
    case ETag::Plus: return 1;
    case ETag::Times: return 2;
    default: return 3;
  }
}

std::optional<std::uint64_t> numeral_value(const ExprPtr& e) {
  std::uint64_t n = 0;
  const Expr* p = e.get();
  while (p->tag == ETag::Succ) { ++n; p = p->a.get(); }
  if (p->tag == ETag::Zero) return n;
  return std::nullopt;
}

void print_expr(const ExprPtr& e, int parent, bool right, std::string& out) {
  if (auto n = numeral_value(e)) { out += std::to_string(*n); return; }
  switch (e->tag) {
    case ETag::Zero: out += "0"; return;
    case ETag::K: out += "K" + std::to_string(e->level); return;
    case ETag::Var: out += var_name(e->var); return;
    case ETag::Succ:
      out += "S(";
      print_expr(e->a, 0, false, out);
      out += ")";
      return;
    case ETag::N:
      out += "N" + std::to_string(e->level) + "(";
      print_expr(e->a, 0, false, out);
      out += ")";
      return;
    case ETag::Ap:
      out += "Ap" + std::to_string(e->level) + "(";
      print_expr(e->a, 0, false, out);
      out += ", ";
      print_expr(e->b, 0, false, out);
      out += ")";
      return;
    case ETag::Cat: case ETag::BarSeg: case ETag::Kap:
      out += e->tag == ETag::Cat ? "cat(" : e->tag == ETag::BarSeg ? "bar(" : "kap(";
      print_expr(e->a, 0, false, out);
      out += ", ";
      print_expr(e->b, 0, false, out);
      out += ")";
      return;
    case ETag::Plus: case ETag::Times: {
      int prec = eprec(e);
      bool wrap = prec < parent || (prec == parent && right);  // left-assoc
      if (wrap) out += "(";
      print_expr(e->a, prec, false, out);
      out += e->tag == ETag::Plus ? " + " : " * ";
      print_expr(e->b, prec, true, out);
      if (wrap) out += ")";
      return;
    }
  }
}

// formula precedence: 1 = ->, 2 = |, 3 = &, 4 = ~ and atoms; quantifiers are 0
int fprec(const FormulaPtr& f) {
  if (is_not(f)) return 4;
  switch (f->tag) {
    case FTag::Implies: return 1;
    case FTag::Or: return 2;
    case FTag::And: return 3;
    case FTag::Forall: case FTag::Exists: return 0;
    default: return 5;
  }
}

void print_formula(const FormulaPtr& f, int parent, bool right, std::string& out) {
  switch (f->tag) {
    case FTag::Falsum: out += "_|_"; return;
    case FTag::Prop: out += f->prop; return;
    case FTag::EqN:
      print_expr(f->e1, 0, false, out);
      out += " =" + std::to_string(f->level) + " ";
      print_expr(f->e2, 0, false, out);
      return;
    case FTag::MemN:
      print_expr(f->e1, 0, false, out);
      out += " in" + std::to_string(f->level) + " ";
      print_expr(f->e2, 0, false, out);
      return;
    case FTag::Proves:
      out += "proves(";
      print_expr(f->e1, 0, false, out);
      out += ", ";
      print_formula(f->f1, 0, false, out);
      out += ")";
      return;
    case FTag::Forall: case FTag::Exists: {
      bool wrap = parent > 0;
      if (wrap) out += "(";
      out += f->tag == FTag::Forall ? "all " : "ex ";
      out += var_name(f->bound);
      out += ". ";
      print_formula(f->f1, 0, false, out);
      if (wrap) out += ")";
      return;
    }
    default: break;
  }
  if (is_not(f)) {
    out += "~";
    const FormulaPtr& body = f->f1;
    bool bare = body->tag == FTag::Prop || body->tag == FTag::Falsum ||
                body->tag == FTag::Proves || body->tag == FTag::Forall ||
                body->tag == FTag::Exists || is_not(body);
    if (!bare) {
      out += "(";
      print_formula(body, 0, false, out);
      out += ")";
    } else {
      print_formula(body, 4, false, out);
    }
    return;
  }
  int prec = fprec(f);
  // -> is right-associative; & and | are left-associative
  bool rassoc = f->tag == FTag::Implies;
  bool wrap = prec < parent || (prec == parent && (rassoc ? !right : right));
  if (wrap) out += "(";
  print_formula(f->f1, prec, false, out);
  out += f->tag == FTag::And ? " & " : f->tag == FTag::Or ? " | " : " -> ";
  print_formula(f->f2, prec, true, out);
  if (wrap) out += ")";
}

}  // namespace

std::string print(const ExprPtr& e) {
  std::string out;
  print_expr(e, 0, false, out);
  return out;
}

std::string print(const FormulaPtr& f) {
  std::string out;
  print_formula(f, 0, false, out);
  return out;
}

}  // namespace bethforge::syntax
