#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bethforge/syntax/ast.hpp"
#include "bethforge/syntax/godel.hpp"
#include "bethforge/syntax/parse.hpp"
#include "test_support.hpp"

using namespace bethforge;
using namespace bethforge::syntax;

namespace {

SortedVar num(unsigned i) { return SortedVar{i * 6, 0, VarKind::Number}; }
SortedVar fun(unsigned level, unsigned i) { return SortedVar{i * 3, level, VarKind::Functional}; }
SortedVar setv(unsigned level, unsigned i) { return SortedVar{i * 3, level, VarKind::SetVar}; }

// Random well-formed ASTs for round-trip and normal-form checks.
ExprPtr gen_term(Rng& rng, unsigned depth) {
  if (depth == 0) {
    switch (rng.below(3)) {
      case 0: return mk_zero();
      case 1: return mk_numeral(rng.below(4));
      default: return mk_var(num(static_cast<unsigned>(rng.below(3))));
    }
  }
  switch (rng.below(5)) {
    case 0: return mk_succ(gen_term(rng, depth - 1));
    case 1: return mk_plus(gen_term(rng, depth - 1), gen_term(rng, depth - 1));
    case 2: return mk_times(gen_term(rng, depth - 1), gen_term(rng, depth - 1));
    case 3: {
      unsigned lvl = 1 + static_cast<unsigned>(rng.below(2));
      ExprPtr f = mk_var(fun(lvl, static_cast<unsigned>(rng.below(2))));
      ExprPtr e = f;
      for (unsigned k = lvl; k >= 1; --k) e = mk_ap(e, gen_term(rng, 0));
      return e;
    }
    default: return gen_term(rng, 0);
  }
}

ExprPtr gen_functional(Rng& rng, unsigned level, unsigned depth) {
  if (depth == 0) {
    if (rng.coin()) return mk_k(level);
    switch (rng.below(3)) {
      case 0: return mk_var(fun(level, static_cast<unsigned>(rng.below(2))));
      case 1: return mk_var(SortedVar{static_cast<unsigned>(rng.below(2)) * 3, level, VarKind::Lawlike});
      default: return mk_var(SortedVar{static_cast<unsigned>(rng.below(2)) * 3, level, VarKind::Lawless});
    }
  }
  switch (rng.below(3)) {
    case 0: return mk_n(level, gen_functional(rng, level, depth - 1));
    case 1: return mk_ap(gen_functional(rng, level + 1, depth - 1), gen_term(rng, 0));
    default: return gen_functional(rng, level, 0);
  }
}

FormulaPtr gen_formula(Rng& rng, unsigned depth, bool allow_proves) {
  if (depth == 0) {
    switch (rng.below(4)) {
      case 0: return mk_falsum();
      case 1: return mk_prop(rng.coin() ? "p" : "q");
      case 2: return mk_eq(gen_term(rng, 1), gen_term(rng, 1));
      default: {
        unsigned lvl = 1 + static_cast<unsigned>(rng.below(2));
        return mk_eq(gen_functional(rng, lvl, 1), gen_functional(rng, lvl, 1));
      }
    }
  }
  switch (rng.below(7)) {
    case 0: return mk_and(gen_formula(rng, depth - 1, allow_proves), gen_formula(rng, depth - 1, allow_proves));
    case 1: return mk_or(gen_formula(rng, depth - 1, allow_proves), gen_formula(rng, depth - 1, allow_proves));
    case 2: return mk_implies(gen_formula(rng, depth - 1, allow_proves), gen_formula(rng, depth - 1, allow_proves));
    case 3: return mk_not(gen_formula(rng, depth - 1, allow_proves));
    case 4: {
      SortedVar v = rng.coin() ? num(static_cast<unsigned>(rng.below(3)))
                               : fun(1 + static_cast<unsigned>(rng.below(2)),
                                     static_cast<unsigned>(rng.below(2)));
      FormulaPtr body = gen_formula(rng, depth - 1, allow_proves);
      return rng.coin() ? mk_forall(v, body) : mk_exists(v, body);
    }
    case 5:
      if (allow_proves)
        return mk_proves(gen_term(rng, 1), gen_formula(rng, depth > 1 ? 1 : 0, false));
      return gen_formula(rng, depth - 1, allow_proves);
    default: return gen_formula(rng, 0, allow_proves);
  }
}

}  // namespace

TEST_CASE("parse: grammar reading of the spec examples") {
  auto f = parse_formula("Ap1(K1, 0) =0 0", Lang::L, 1);
  REQUIRE(f->tag == Formula::Tag::EqN);
  CHECK(f->level == 0);
  CHECK(f->e1->tag == Expr::Tag::Ap);
  CHECK(f->e1->level == 1);
  CHECK(f->e1->a->tag == Expr::Tag::K);
  CHECK(f->e2->tag == Expr::Tag::Zero);

  auto g = parse_formula("x1 in0 X1_1", Lang::TI, 1);
  REQUIRE(g->tag == Formula::Tag::MemN);
  CHECK(g->level == 0);
  CHECK(g->e1->var.kind == VarKind::Number);
  CHECK(g->e2->var.kind == VarKind::SetVar);
  CHECK(g->e2->var.level == 1);

  CHECK_THROWS_AS(parse_formula("Ap1(x1, 0) =0 0", Lang::L, 1), SortError);
}

TEST_CASE("parse: language gating") {
  CHECK_THROWS_AS(parse_formula("x1 in0 X1_1", Lang::L, 1), LanguageError);
  CHECK_THROWS_AS(parse_formula("proves(0, 0 =0 0)", Lang::TI, 1), LanguageError);
  CHECK_THROWS_AS(parse_formula("proves(0, 0 =0 0)", Lang::L, 1), LanguageError);
  CHECK_NOTHROW(parse_formula("proves(0, 0 =0 0)", Lang::LP, 1));
  // inner formula of proves must be an L-formula
  CHECK_THROWS_AS(parse_formula("proves(0, proves(0, 0 =0 0))", Lang::LP, 1), LanguageError);
  CHECK_THROWS_AS(parse_formula("F2_0 =2 F2_0", Lang::L, 1), SortError);
}

TEST_CASE("parse: levels may be omitted on = and in") {
  auto f = parse_formula("all z0. (z0 in0 X1_1 -> z0 = 0)", Lang::TI, 1);
  CHECK(f->tag == Formula::Tag::Forall);
  auto g = parse_formula("K1 = K1", Lang::L, 1);
  CHECK(g->level == 1);
  CHECK_THROWS_AS(parse_formula("K1 =0 K1", Lang::L, 1), SortError);
}

TEST_CASE("print and parse: spec formulas round-trip to a normal form") {
  const char* inputs[] = {
      "Ap1(K1, 0) =0 0",
      "x1 in0 X1_1",
      "all x0. (x0 =0 0 | ~(x0 =0 0))",
      "all LF1_0. all LG1_0. (LF1_0 =1 LG1_0 | ~(LF1_0 =1 LG1_0))",
      "p -> q -> p",
      "ex F2_0. all x0. Ap1(Ap2(F2_0, x0), 0) =0 x0",
      "proves(S(x0), 0 =0 0) & ~_|_",
      "0 + 1 * 2 =0 x0 * (x0 + 1)",
  };
  for (const char* in : inputs) {
    Lang lang = std::string(in).find("in0") != std::string::npos ? Lang::TI : Lang::SLP;
    auto f = parse_formula(in, lang, 2);
    std::string once = print(f);
    auto g = parse_formula(once, lang, 2);
    CHECK(print(g) == once);
    CHECK(alpha_eq(f, g));
  }
}

TEST_CASE("sort_of: maximal parameter level") {
  // all x0. x0 =0 0 has no parameters
  auto f = parse_formula("all x0. x0 =0 0", Lang::L, 2);
  CHECK(sort_of(f) == 0);
  // F1(x) = 0 with F1, x free
  auto g = parse_formula("Ap1(F1_0, x0) =0 0", Lang::L, 2);
  CHECK(sort_of(g) == 1);
  // all F2. (F2(x) =1 G1) has G1, x free; the bound F2 does not count
  auto h = parse_formula("all F2_0. Ap2(F2_0, x0) =1 G1_0", Lang::L, 2);
  CHECK(sort_of(h) == 1);
}

TEST_CASE("closure: quantifies parameters in canonical order") {
  auto f = parse_formula("all x0. x0 =0 0", Lang::L, 1);
  CHECK(formula_eq(closure(f), f));  // closed formula unchanged

  auto g = parse_formula("Ap1(F1_0, x0) =0 0", Lang::L, 1);
  auto cg = closure(g);
  CHECK(sort_of(cg) == 0);
  CHECK(free_vars(cg).empty());
  CHECK(print(cg) == "all F1_0. all x0. Ap1(F1_0, x0) =0 0");

  auto ll2 = parse_formula("LF1_0 =1 LG1_0 | ~(LF1_0 =1 LG1_0)", Lang::L, 1);
  auto cll2 = closure(ll2);
  CHECK(cll2->tag == Formula::Tag::Forall);
  CHECK(cll2->f1->tag == Formula::Tag::Forall);
  CHECK(free_vars(cll2).empty());
}

TEST_CASE("substitute: direct, capture-avoiding, functional") {
  auto f = parse_formula("x0 =0 0", Lang::L, 1);
  auto r = substitute(f, num(0), mk_succ(mk_zero()));
  CHECK(print(r) == "1 =0 0");

  // substitute(ex x (x = y), y, x) renames the binder
  auto g = parse_formula("ex x0. x0 =0 y0", Lang::L, 1);
  SortedVar y = parse_var_name("y0");
  auto rg = substitute(g, y, mk_var(num(0)));
  CHECK(rg->tag == Formula::Tag::Exists);
  CHECK(rg->bound != num(0));
  CHECK(print(rg) == "ex x1. x1 =0 x0");
  CHECK(alpha_eq(rg, parse_formula("ex w9. w9 =0 x0", Lang::L, 1)));

  auto h = parse_formula("Ap1(F1_0, 0) =0 0", Lang::L, 1);
  auto rh = substitute(h, fun(1, 0), mk_n(1, mk_k(1)));
  CHECK(print(rh) == "Ap1(N1(K1), 0) =0 0");

  CHECK_THROWS_AS(substitute(h, fun(1, 0), mk_zero()), SortError);
}

TEST_CASE("substitution and closure preserve well-sortedness") {
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    auto f = gen_formula(rng, 3, true);
    CHECK_NOTHROW(check_sorted(f, Lang::SLP, 3));
    CHECK_NOTHROW(check_sorted(closure(f), Lang::SLP, 3));
    CHECK(sort_of(closure(f)) == 0);
    auto sub = substitute(f, num(0), mk_plus(mk_var(num(1)), mk_numeral(2)));
    CHECK_NOTHROW(check_sorted(sub, Lang::SLP, 3));
  }
}

TEST_CASE("godel: spec instances") {
  auto f = parse_formula("0 =0 0", Lang::L, 1);
  auto c = godel_encode(f);
  auto back = godel_decode(c);
  REQUIRE(std::holds_alternative<FormulaPtr>(back));
  CHECK(formula_eq(std::get<FormulaPtr>(back), f));

  CHECK(godel_encode(mk_zero()).value != godel_encode(mk_succ(mk_zero())).value);
  CHECK_THROWS_AS(godel_decode(GodelCode{0}), DecodeError);
  CHECK_THROWS_AS(godel_decode(GodelCode{7}), DecodeError);  // prime gap
}

TEST_CASE("godel: 1000 random ASTs round-trip") {
  Rng rng(2024);
  int formulas = 0, exprs = 0;
  while (formulas + exprs < 1000) {
    if (rng.coin()) {
      auto f = gen_formula(rng, 3, true);
      auto d = godel_decode(godel_encode(f));
      REQUIRE(std::holds_alternative<FormulaPtr>(d));
      REQUIRE(formula_eq(std::get<FormulaPtr>(d), f));
      ++formulas;
    } else {
      auto e = rng.coin() ? gen_term(rng, 3) : gen_functional(rng, 1 + (unsigned)rng.below(2), 2);
      auto d = godel_decode(godel_encode(e));
      REQUIRE(std::holds_alternative<ExprPtr>(d));
      REQUIRE(expr_eq(std::get<ExprPtr>(d), e));
      ++exprs;
    }
  }
  CHECK(formulas > 100);
  CHECK(exprs > 100);
}

TEST_CASE("print normal form is idempotent on random formulas") {
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    auto f = gen_formula(rng, 4, true);
    std::string s1 = print(f);
    auto g = parse_formula(s1, Lang::SLP, 3);
    CHECK(print(g) == s1);
  }
}

TEST_CASE("alpha equivalence distinguishes free variables") {
  auto a = parse_formula("all x0. x0 =0 y0", Lang::L, 1);
  auto b = parse_formula("all z0. z0 =0 y0", Lang::L, 1);
  auto c = parse_formula("all z0. z0 =0 w0", Lang::L, 1);
  CHECK(alpha_eq(a, b));
  CHECK(!alpha_eq(a, c));
}
