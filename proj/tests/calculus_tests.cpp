#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bethforge/calculus/proof.hpp"
#include "bethforge/syntax/parse.hpp"

using namespace bethforge;
using namespace bethforge::syntax;
using namespace bethforge::calculus;

namespace {
FormulaPtr F(const std::string& s, Lang l = Lang::SLP, unsigned sv = 2) {
  return parse_formula(s, l, sv);
}
}  // namespace

TEST_CASE("is_axiom: spec examples") {
  Theory ti1{TheoryId::TI, 1};
  auto lem = F("all x0. (x0 =0 0 | ~(x0 =0 0))", Lang::TI, 1);
  CHECK(!is_axiom(ti1, lem));

  Theory lp1{TheoryId::LP, 1};
  SchemaParts cs1;
  cs1.phi = F("0 =0 0", Lang::L, 1);
  auto inst = instantiate_schema(AxiomFamily::CS1, cs1);
  auto hit = is_axiom(lp1, inst);
  REQUIRE(hit);
  CHECK(hit->family == AxiomFamily::CS1);

  auto compr = F("ex X1_0. all z0. ((z0 in0 X1_0 -> z0 =0 0) & (z0 =0 0 -> z0 in0 X1_0))",
                 Lang::TI, 1);
  auto chit = is_axiom(ti1, compr);
  REQUIRE(chit);
  CHECK(chit->family == AxiomFamily::Compr);
  CHECK(chit->meta.at("level") == "0");
}

TEST_CASE("is_axiom: language errors and theory gating") {
  Theory l1{TheoryId::L, 1};
  CHECK_THROWS_AS(is_axiom(l1, F("x1 in0 X1_1", Lang::TI, 1)), LanguageError);

  SchemaParts cs1;
  cs1.phi = F("0 =0 0", Lang::L, 1);
  auto inst = instantiate_schema(AxiomFamily::CS1, cs1);
  CHECK_THROWS_AS(is_axiom(l1, inst), LanguageError);  // CS1 is not in L's language
  CHECK(is_axiom(Theory{TheoryId::LP, 1}, inst));
  CHECK(is_axiom(Theory{TheoryId::SLP, 1}, inst));     // survives extension

  // Ext is in TI but not TI*
  SchemaParts ext;
  ext.level = 0;
  auto exti = instantiate_schema(AxiomFamily::Ext, ext);
  CHECK(is_axiom(Theory{TheoryId::TI, 1}, exti));
  CHECK(!is_axiom(Theory{TheoryId::TIstar, 1}, exti).has_value());
}

TEST_CASE("instantiate_schema: KS shape and side conditions") {
  SchemaParts ks;
  ks.phi = F("0 =0 0", Lang::L, 1);
  ks.level = 1;
  auto inst = instantiate_schema(AxiomFamily::KS, ks);
  CHECK(print(inst) ==
        "ex F1_0. (0 =0 0 -> (ex x0. ~(Ap1(F1_0, x0) =0 0))) & "
        "((ex x0. ~(Ap1(F1_0, x0) =0 0)) -> 0 =0 0)");
  auto rec = recognize_schema(inst, Lang::LP, 1);
  REQUIRE(rec);
  CHECK(rec->family == AxiomFamily::KS);

  // m < max(sort(phi), 1)
  SchemaParts c1;
  c1.phi = F("Ap1(Ap2(F2_0, x0), y0) =0 0", Lang::L, 2);
  c1.level = 1;
  CHECK(sort_of(c1.phi) == 2);
  CHECK_THROWS_AS(instantiate_schema(AxiomFamily::C1, c1), SideConditionError);
  c1.level = 2;
  CHECK_NOTHROW(instantiate_schema(AxiomFamily::C1, c1));

  // Compr: x^{n+1} a parameter of phi
  SchemaParts compr;
  compr.phi = F("x0 in0 X1_0", Lang::TI, 1);
  compr.level = 0;
  compr.z = parse_var_name("x0");
  compr.fvar = parse_var_name("X1_0");
  CHECK_THROWS_AS(instantiate_schema(AxiomFamily::Compr, compr), SideConditionError);
  compr.fvar = parse_var_name("Y1_0");
  CHECK_NOTHROW(instantiate_schema(AxiomFamily::Compr, compr));
}

TEST_CASE("instantiate_schema: LL3 side conditions") {
  SchemaParts ll3;
  ll3.level = 1;
  ll3.fvar = parse_var_name("LF1_0");
  ll3.phi = F("Ap1(LF1_0, 0) =0 0", Lang::L, 1);
  CHECK_NOTHROW(instantiate_schema(AxiomFamily::LL3, ll3));

  // a second non-lawlike type-n parameter
  ll3.phi = F("Ap1(LF1_0, 0) =0 Ap1(LG1_0, 0)", Lang::L, 1);
  CHECK_THROWS_AS(instantiate_schema(AxiomFamily::LL3, ll3), SideConditionError);

  // sort(phi) > n
  ll3.phi = F("Ap1(Ap2(F2_0, 0), 0) =0 Ap1(LF1_0, 0)", Lang::L, 2);
  CHECK_THROWS_AS(instantiate_schema(AxiomFamily::LL3, ll3), SideConditionError);

  // lawlike parameters of type n are fine
  ll3.phi = F("Ap1(LF1_0, 0) =0 Ap1(A1_0, 0)", Lang::L, 1);
  CHECK_NOTHROW(instantiate_schema(AxiomFamily::LL3, ll3));
}

TEST_CASE("instantiate/recognize round trip for every family") {
  auto phiL = F("x0 =0 y0", Lang::L, 2);
  auto psiL = F("y0 + 0 =0 y0", Lang::L, 2);
  std::vector<std::pair<AxiomFamily, SchemaParts>> cases;
  auto add = [&](AxiomFamily f, SchemaParts p) { cases.push_back({f, std::move(p)}); };

  for (unsigned alt : {0u, 1u}) {
    SchemaParts p; p.alt = alt;
    add(AxiomFamily::L1, p);
    add(AxiomFamily::L2, p);
    add(AxiomFamily::L3, p);
  }
  { SchemaParts p; p.level = 0; p.alt = 0; add(AxiomFamily::L5, p); }
  { SchemaParts p; p.level = 1; p.alt = 0; add(AxiomFamily::L5, p); }
  { SchemaParts p; p.level = 1; p.alt = 1; add(AxiomFamily::L5, p); }
  { SchemaParts p; p.level = 0; p.alt = 0; add(AxiomFamily::L6, p); }
  { SchemaParts p; p.level = 1; p.alt = 0; add(AxiomFamily::L6, p); }
  { SchemaParts p; p.level = 1; p.alt = 1; add(AxiomFamily::L6, p); }
  { SchemaParts p; p.term = parse_expr("x0 + Ap1(A1_0, x0)", Lang::L, 1); add(AxiomFamily::L7, p); }
  { SchemaParts p; p.phi = phiL; add(AxiomFamily::Induction, p); }
  { SchemaParts p; p.phi = phiL; add(AxiomFamily::CS1, p); add(AxiomFamily::CS2, p); add(AxiomFamily::CS3, p); }
  { SchemaParts p; p.level = 1; add(AxiomFamily::LL1, p); add(AxiomFamily::LL2, p); }
  { SchemaParts p; p.level = 2; add(AxiomFamily::LL1, p); add(AxiomFamily::LL2, p); }
  { SchemaParts p; p.level = 1; p.fvar = parse_var_name("LF1_0");
    p.phi = F("Ap1(LF1_0, x0) =0 0", Lang::L, 1); add(AxiomFamily::LL3, p); add(AxiomFamily::WC, p); }
  { SchemaParts p; p.phi = phiL; p.level = 1; add(AxiomFamily::C1, p); add(AxiomFamily::KS, p); }
  { SchemaParts p; p.phi = phiL; p.level = 3; add(AxiomFamily::C1, p); add(AxiomFamily::KS, p); }
  { SchemaParts p; p.phi = F("Ap1(G1_0, x0) =0 x0", Lang::L, 2); p.fvar = parse_var_name("G1_0");
    p.uniq_level = 1; p.level = 2; add(AxiomFamily::C2, p); }
  { SchemaParts p; p.phi = phiL; p.psi = psiL; p.y = parse_var_name("y0"); add(AxiomFamily::BI, p); }
  { SchemaParts p; p.phi = phiL; add(AxiomFamily::MP, p); add(AxiomFamily::CT, p); }
  { SchemaParts p; p.phi = F("x0 =0 0", Lang::TI, 2); add(AxiomFamily::TI4, p); }
  { SchemaParts p; p.phi = F("x0 in0 Y1_0", Lang::TI, 2); p.level = 0; add(AxiomFamily::Compr, p); }
  { SchemaParts p; p.phi = F("z0 in0 Y1_0", Lang::TI, 2); p.level = 1;
    p.z = SortedVar{0, 1, VarKind::SetVar}; add(AxiomFamily::Compr, p); }
  { SchemaParts p; p.level = 0; add(AxiomFamily::Ext, p); }
  for (unsigned alt : {0u, 1u, 2u}) {
    SchemaParts p; p.alt = alt; p.level = 0; add(AxiomFamily::Equality, p);
    SchemaParts q; q.alt = alt; q.level = 1; add(AxiomFamily::Equality, q);
  }

  for (const auto& [fam, parts] : cases) {
    CAPTURE(family_name(fam));
    FormulaPtr inst = instantiate_schema(fam, parts);
    bool ti = fam == AxiomFamily::TI1 || fam == AxiomFamily::TI2 || fam == AxiomFamily::TI3 ||
              fam == AxiomFamily::TI4 || fam == AxiomFamily::Compr || fam == AxiomFamily::Ext ||
              (fam == AxiomFamily::Equality && sort_of(parts.phi ? parts.phi : inst) == 0 &&
               false);
    Lang lang = ti ? Lang::TI : Lang::SLP;
    if (fam == AxiomFamily::Equality && parts.level == 0) lang = Lang::TI;  // also valid there
    auto rec = recognize_schema(inst, fam == AxiomFamily::Equality && parts.level == 0
                                          ? Lang::L : lang, 4);
    REQUIRE(rec);
    CHECK(rec->family == fam);
  }
}

TEST_CASE("check_proof: spec examples") {
  // one-node proof of the closure of axiom L1
  SchemaParts l1a; l1a.alt = 0;
  auto inst = instantiate_schema(AxiomFamily::L1, l1a);
  CHECK(print(inst) == "all x0. ~(S(x0) =0 0)");
  ProofTree t;
  t.theory = Theory{TheoryId::L, 1};
  t.root = axiom(inst, AxiomFamily::L1);
  auto ok = check_proof(t);
  CHECK(formula_eq(ok.conclusion, inst));

  // or-intro from 0=0, conclusion 0=0 | _|_
  ProofTree t2;
  t2.theory = Theory{TheoryId::L, 1};
  t2.root = or_i1(F("0 =0 0 | _|_", Lang::L, 1), eq_refl(mk_zero()));
  CHECK(std::holds_alternative<CheckOk>(check_verdict(t2)));

  // double-negation elimination flagged as HPC
  ProofTree t3;
  t3.theory = Theory{TheoryId::L, 1};
  t3.classical = false;
  auto p = F("p", Lang::L, 1);
  t3.root = imp_i(mk_not(mk_not(p)), dne(assume(mk_not(mk_not(p)))));
  CHECK_THROWS_AS(check_proof(t3), RuleError);
  t3.classical = true;
  CHECK(std::holds_alternative<CheckOk>(check_verdict(t3)));
}

TEST_CASE("check_proof: quantifier rules and eigenvariables") {
  // all x (x=x) via forall-intro over eq_refl
  ProofTree t;
  t.theory = Theory{TheoryId::L, 1};
  SortedVar x = parse_var_name("x0");
  t.root = forall_i(x, F("all x0. x0 =0 x0", Lang::L, 1), eq_refl(mk_var(x)));
  CHECK(std::holds_alternative<CheckOk>(check_verdict(t)));

  // eigenvariable free in an assumption is rejected
  ProofTree bad;
  bad.theory = Theory{TheoryId::L, 1};
  auto hyp = F("x0 =0 y0", Lang::L, 1);
  bad.root = imp_i(hyp, forall_i(x, F("all x0. x0 =0 y0", Lang::L, 1), assume(hyp)));
  CHECK_THROWS_AS(check_proof(bad), EigenvariableError);

  // exists-elim with a proper fresh eigenvariable
  // from ex x (x = y) infer y = y ... trivially via eq_refl inside the case
  ProofTree ok;
  ok.theory = Theory{TheoryId::L, 1};
  auto exf = F("ex x0. x0 =0 y0", Lang::L, 1);
  SortedVar z = parse_var_name("z0");
  auto body = eq_refl(mk_var(parse_var_name("y0")));
  auto use = exists_e(assume(exf), z, body);
  ok.root = imp_i(exf, use);
  CHECK(std::holds_alternative<CheckOk>(check_verdict(ok)));

  // forall-elim witness kinds: a lawless quantifier takes only lawless variables
  ProofTree kindbad;
  kindbad.theory = Theory{TheoryId::SLP, 1};
  auto alllf = F("all LF1_0. LF1_0 =1 LF1_0", Lang::SLP, 1);
  kindbad.root = imp_i(alllf, forall_e(mk_k(1), assume(alllf)));
  CHECK_THROWS_AS(check_proof(kindbad), RuleError);
}

TEST_CASE("check_proof: monotone under theory extension") {
  SchemaParts l2; l2.alt = 0;
  auto inst = instantiate_schema(AxiomFamily::L2, l2);
  for (TheoryId id : {TheoryId::L, TheoryId::LP, TheoryId::SLP}) {
    ProofTree t;
    t.theory = Theory{id, 1};
    t.root = axiom(inst);
    CHECK(std::holds_alternative<CheckOk>(check_verdict(t)));
  }
}

TEST_CASE("check_proof: mutated proofs are rejected") {
  auto p = F("p", Lang::L, 1);
  auto q = F("q", Lang::L, 1);
  // valid: from p & q infer q & p
  auto hyp = mk_and(p, q);
  auto good = imp_i(hyp, and_i(and_e2(q, assume(hyp)), and_e1(p, assume(hyp))));
  ProofTree t;
  t.theory = Theory{TheoryId::L, 1};
  t.root = good;
  CHECK(std::holds_alternative<CheckOk>(check_verdict(t)));

  // mutation: swap the premises of the and-intro without fixing the conclusion
  auto mut = std::make_shared<ProofNode>(*good);
  auto andnode = std::make_shared<ProofNode>(*good->premises[0]);
  std::swap(andnode->premises[0], andnode->premises[1]);
  mut->premises[0] = andnode;
  t.root = mut;
  CHECK(std::holds_alternative<std::string>(check_verdict(t)));
}

TEST_CASE("proof file format: parse, check, round-trip") {
  std::string text =
      "theory LP 1\n"
      "logic HPC\n"
      "# a tiny derivation\n"
      "1: assume [] {p} |- p\n"
      "2: imp_intro [1] {} |- p -> p\n"
      "qed 2\n";
  auto tree = parse_proof_file(text);
  auto ok = check_verdict(tree);
  REQUIRE(std::holds_alternative<CheckOk>(ok));
  CHECK(print(std::get<CheckOk>(ok).conclusion) == "p -> p");

  auto again = parse_proof_file(format_proof(tree));
  CHECK(std::holds_alternative<CheckOk>(check_verdict(again)));

  std::string ax =
      "theory L 1\n"
      "1: axiom L1 [] {} |- all x0. ~(S(x0) =0 0)\n"
      "qed 1\n";
  CHECK(std::holds_alternative<CheckOk>(check_verdict(parse_proof_file(ax))));

  std::string badax =
      "theory L 1\n"
      "1: axiom L2 [] {} |- all x0. ~(S(x0) =0 0)\n"
      "qed 1\n";
  CHECK_THROWS_AS(check_proof(parse_proof_file(badax)), AxiomError);
}

TEST_CASE("eq_subst: replacement instances") {
  // from x0 = y0 and x0 + 0 = x0 conclude x0 + 0 = y0
  auto eq = assume(F("x0 =0 y0", Lang::L, 1));
  SchemaParts l2; l2.alt = 0;
  auto plus0 = forall_e(mk_var(parse_var_name("x0")),
                        axiom(instantiate_schema(AxiomFamily::L2, l2)));
  CHECK(print(plus0->conclusion) == "x0 + 0 =0 x0");
  auto sub = eq_subst(eq, plus0, F("x0 + 0 =0 y0", Lang::L, 1));
  ProofTree t;
  t.theory = Theory{TheoryId::L, 1};
  t.root = imp_i(F("x0 =0 y0", Lang::L, 1), sub);
  CHECK(std::holds_alternative<CheckOk>(check_verdict(t)));

  // a wrong replacement is rejected
  auto bad = eq_subst(eq, plus0, F("y0 + 0 =0 z0", Lang::L, 1));
  t.root = imp_i(F("x0 =0 y0", Lang::L, 1), bad);
  CHECK(std::holds_alternative<std::string>(check_verdict(t)));
}
