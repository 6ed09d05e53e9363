#include "bethforge/calculus/schema.hpp"

#include <algorithm>

namespace bethforge::calculus {

using ETag = Expr::Tag;
using FTag = Formula::Tag;

std::string theory_name(TheoryId id) {
  switch (id) {
    case TheoryId::L: return "L";
    case TheoryId::LP: return "LP";
    case TheoryId::SLP: return "SLP";
    case TheoryId::TI: return "TI";
    case TheoryId::TIstar: return "TI*";
  }
  return "?";
}

std::optional<TheoryId> theory_from_name(const std::string& name) {
  if (name == "L") return TheoryId::L;
  if (name == "LP") return TheoryId::LP;
  if (name == "SLP") return TheoryId::SLP;
  if (name == "TI") return TheoryId::TI;
  if (name == "TI*" || name == "TIstar") return TheoryId::TIstar;
  return std::nullopt;
}

bool theory_extends(const Theory& big, const Theory& small) {
  if (big.s < small.s) return false;
  auto rank = [](TheoryId id) -> int {
    switch (id) {
      case TheoryId::L: return 0;
      case TheoryId::LP: return 1;
      case TheoryId::SLP: return 2;
      case TheoryId::TIstar: return 10;
      case TheoryId::TI: return 11;
    }
    return -1;
  };
  int rb = rank(big.id), rs = rank(small.id);
  if (rb >= 10) return rs >= 10 && rb >= rs;
  return rs < 10 && rb >= rs;
}

std::string family_name(AxiomFamily f) {
  switch (f) {
    case AxiomFamily::L1: return "L1";
    case AxiomFamily::L2: return "L2";
    case AxiomFamily::L3: return "L3";
    case AxiomFamily::L5: return "L5";
    case AxiomFamily::L6: return "L6";
    case AxiomFamily::L7: return "L7";
    case AxiomFamily::Induction: return "Induction";
    case AxiomFamily::CS1: return "CS1";
    case AxiomFamily::CS2: return "CS2";
    case AxiomFamily::CS3: return "CS3";
    case AxiomFamily::LL1: return "LL1";
    case AxiomFamily::LL2: return "LL2";
    case AxiomFamily::LL3: return "LL3";
    case AxiomFamily::C1: return "C1";
    case AxiomFamily::C2: return "C2";
    case AxiomFamily::KS: return "KS";
    case AxiomFamily::WC: return "WC";
    case AxiomFamily::BI: return "BI";
    case AxiomFamily::MP: return "MP";
    case AxiomFamily::CT: return "CT";
    case AxiomFamily::TI1: return "TI1";
    case AxiomFamily::TI2: return "TI2";
    case AxiomFamily::TI3: return "TI3";
    case AxiomFamily::TI4: return "TI4";
    case AxiomFamily::Compr: return "Compr";
    case AxiomFamily::Ext: return "Ext";
    case AxiomFamily::Equality: return "Equality";
  }
  return "?";
}

std::optional<AxiomFamily> family_from_name(const std::string& name) {
  static const std::pair<const char*, AxiomFamily> table[] = {
      {"L1", AxiomFamily::L1}, {"L2", AxiomFamily::L2}, {"L3", AxiomFamily::L3},
      {"L5", AxiomFamily::L5}, {"L6", AxiomFamily::L6}, {"L7", AxiomFamily::L7},
      {"Induction", AxiomFamily::Induction},
      {"CS1", AxiomFamily::CS1}, {"CS2", AxiomFamily::CS2}, {"CS3", AxiomFamily::CS3},
      {"LL1", AxiomFamily::LL1}, {"LL2", AxiomFamily::LL2}, {"LL3", AxiomFamily::LL3},
      {"C1", AxiomFamily::C1}, {"C2", AxiomFamily::C2}, {"KS", AxiomFamily::KS},
      {"WC", AxiomFamily::WC}, {"BI", AxiomFamily::BI}, {"MP", AxiomFamily::MP},
      {"CT", AxiomFamily::CT},
      {"TI1", AxiomFamily::TI1}, {"TI2", AxiomFamily::TI2}, {"TI3", AxiomFamily::TI3},
      {"TI4", AxiomFamily::TI4}, {"Compr", AxiomFamily::Compr}, {"Ext", AxiomFamily::Ext},
      {"Equality", AxiomFamily::Equality}};
  for (auto& [n, f] : table)
    if (name == n) return f;
  return std::nullopt;
}

bool theory_admits(const Theory& th, AxiomFamily f) {
  using AF = AxiomFamily;
  switch (f) {
    case AF::Equality: return true;
    case AF::L1: case AF::L2: case AF::L3: case AF::L5: case AF::L6: case AF::L7:
    case AF::Induction:
      return th.id == TheoryId::L || th.id == TheoryId::LP || th.id == TheoryId::SLP;
    case AF::CS1: case AF::CS2: case AF::CS3:
      return th.id == TheoryId::LP || th.id == TheoryId::SLP;
    case AF::LL1: case AF::LL2: case AF::LL3: case AF::C1: case AF::C2: case AF::BI:
      return th.id == TheoryId::SLP;
    case AF::KS: case AF::WC: case AF::MP: case AF::CT:
      return false;  // derived or refuted principles, never axioms
    case AF::TI1: case AF::TI2: case AF::TI3: case AF::TI4: case AF::Compr:
      return th.id == TheoryId::TI || th.id == TheoryId::TIstar;
    case AF::Ext:
      return th.id == TheoryId::TI;
  }
  return false;
}

namespace {

SortedVar numv(unsigned slot) { return SortedVar{slot * 6, 0, VarKind::Number}; }

ExprPtr V(const SortedVar& v) { return mk_var(v); }

std::set<SortedVar> vars_of(const FormulaPtr& f) { return free_vars(f); }

SortedVar fresh_num(std::set<SortedVar> avoid) {
  return fresh_var(SortedVar{0, 0, VarKind::Number}, avoid);
}

SortedVar fresh_of(VarKind kind, unsigned level, const std::set<SortedVar>& avoid) {
  return fresh_var(SortedVar{0, level, kind}, avoid);
}

// F(x)(0)...(0) with `zeros` trailing zero applications
ExprPtr ap_tower(const SortedVar& F, const SortedVar& x, unsigned zeros) {
  ExprPtr e = mk_ap(V(F), V(x));
  for (unsigned i = 0; i < zeros; ++i) e = mk_ap(e, mk_zero());
  return e;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw SideConditionError(what);
}

void require_l_formula(const FormulaPtr& phi, const char* schema) {
  try {
    check_sorted(phi, Lang::L, 1000000);
  } catch (const ForgeError& e) {
    throw SideConditionError(std::string(schema) + ": phi is not an L-formula (" + e.what() + ")");
  }
}

// LL3/WC restriction: sort(phi) <= n and the only non-lawlike parameter of
// type n is the designated lawless variable.
void require_open_data_side(const FormulaPtr& phi, const SortedVar& h, unsigned n,
                            const char* schema) {
  require(h.kind == VarKind::Lawless && h.level == n,
          std::string(schema) + ": designated variable is not lawless of type n");
  require(sort_of(phi) <= n, std::string(schema) + ": sort(phi) exceeds n");
  for (const auto& v : vars_of(phi)) {
    if (v.level == n && v.kind != VarKind::Lawlike && !(v == h))
      throw SideConditionError(std::string(schema) + ": non-lawlike parameter " + var_name(v) +
                               " of type n other than " + var_name(h));
  }
}

FormulaPtr bounded_all_le(const SortedVar& y, const SortedVar& x, FormulaPtr body) {
  return mk_forall(y, mk_implies(mk_le(V(y), V(x)), std::move(body)));
}

FormulaPtr bounded_all_lt(const SortedVar& y, const SortedVar& x, FormulaPtr body) {
  return mk_forall(y, mk_implies(mk_lt(V(y), V(x)), std::move(body)));
}

FormulaPtr segments_agree(const SortedVar& g, const SortedVar& h, const SortedVar& upto,
                          const std::set<SortedVar>& avoid) {
  SortedVar y = fresh_num(avoid);
  return bounded_all_lt(y, upto, mk_eq(mk_ap(V(g), V(y)), mk_ap(V(h), V(y))));
}

}  // namespace

FormulaPtr instantiate_schema(AxiomFamily family, const SchemaParts& parts) {
  using AF = AxiomFamily;
  const FormulaPtr& phi = parts.phi;
  auto need_phi = [&]() { require(phi != nullptr, family_name(family) + ": missing phi"); };

  auto arith_pair = [&](AF fam) -> FormulaPtr {
    SortedVar x = parts.x.value_or(numv(0));
    SortedVar y = parts.y.value_or(numv(1));
    require(x.kind == VarKind::Number && y.kind == VarKind::Number,
            family_name(fam) + ": designated variables must be number variables");
    switch (fam) {
      case AF::L1: case AF::TI1:
        if (parts.alt == 0) return mk_not(mk_eq(mk_succ(V(x)), mk_zero()));
        return mk_implies(mk_eq(mk_succ(V(x)), mk_succ(V(y))), mk_eq(V(x), V(y)));
      case AF::L2: case AF::TI2:
        if (parts.alt == 0) return mk_eq(mk_plus(V(x), mk_zero()), V(x));
        return mk_eq(mk_plus(V(x), mk_succ(V(y))), mk_succ(mk_plus(V(x), V(y))));
      case AF::L3: case AF::TI3:
        if (parts.alt == 0) return mk_eq(mk_times(V(x), mk_zero()), mk_zero());
        return mk_eq(mk_times(V(x), mk_succ(V(y))),
                     mk_plus(mk_times(V(x), V(y)), V(x)));
      default: break;
    }
    throw SideConditionError("not an arithmetic family");
  };

  switch (family) {
    case AF::L1: case AF::L2: case AF::L3:
    case AF::TI1: case AF::TI2: case AF::TI3:
      return closure(arith_pair(family));

    case AF::L5: {
      unsigned n = parts.level;
      if (parts.alt == 0) {
        SortedVar x = parts.x.value_or(numv(0));
        ExprPtr lhs = mk_ap(mk_k(n + 1), V(x));
        ExprPtr rhs = n == 0 ? mk_zero() : mk_k(n);
        return closure(mk_eq(lhs, rhs));
      }
      require(n >= 1, "L5: N requires level >= 1");
      SortedVar F = parts.fvar.value_or(SortedVar{0, n, VarKind::Functional});
      require(F.kind == VarKind::Functional && F.level == n, "L5: F must be a plain n-functional");
      return closure(mk_not(mk_eq(mk_n(n, V(F)), mk_k(n))));
    }

    case AF::L6: {
      unsigned n = parts.level;
      if (parts.alt == 0) {
        SortedVar F = parts.fvar.value_or(SortedVar{0, n + 1, VarKind::Functional});
        require(F.kind == VarKind::Functional && F.level == n + 1,
                "L6: F must be a plain (n+1)-functional");
        SortedVar x = parts.x.value_or(numv(0));
        ExprPtr lhs = mk_ap(mk_n(n + 1, V(F)), V(x));
        ExprPtr app = mk_ap(V(F), V(x));
        ExprPtr rhs = n == 0 ? mk_succ(app) : mk_n(n, app);
        return closure(mk_eq(lhs, rhs));
      }
      require(n >= 1, "L6: level >= 1 required");
      SortedVar F = parts.fvar.value_or(SortedVar{0, n, VarKind::Functional});
      SortedVar G = parts.fvar2.value_or(SortedVar{1, n, VarKind::Functional});
      require(F.kind == VarKind::Functional && G.kind == VarKind::Functional &&
              F.level == n && G.level == n && !(F == G),
              "L6: two distinct plain n-functional variables required");
      return closure(mk_implies(mk_eq(mk_n(n, V(F)), mk_n(n, V(G))), mk_eq(V(F), V(G))));
    }

    case AF::L7: {
      require(parts.term != nullptr, "L7: missing witness term");
      const ExprPtr& t = parts.term;
      require(t->value_level() == 0, "L7: witness must be a level-0 term");
      for (const auto& v : free_vars(t)) {
        bool ok = v.kind == VarKind::Number || (v.kind == VarKind::Lawlike && v.level == 1);
        require(ok, "L7: term parameter " + var_name(v) +
                        " is not a number or lawlike 1-functional variable");
      }
      SortedVar x = parts.x.value_or(numv(0));
      require(x.kind == VarKind::Number, "L7: x must be a number variable");
      std::set<SortedVar> avoid = free_vars(t);
      avoid.insert(x);
      SortedVar A = fresh_of(VarKind::Lawlike, 1, avoid);
      return closure(mk_exists(A, mk_forall(x, mk_eq(mk_ap(V(A), V(x)), t))));
    }

    case AF::Induction: case AF::TI4: {
      need_phi();
      SortedVar x = parts.x.value_or(numv(0));
      require(x.kind == VarKind::Number, "Induction: x must be a number variable");
      FormulaPtr base = substitute(phi, x, mk_zero());
      FormulaPtr step = mk_forall(x, mk_implies(phi, substitute(phi, x, mk_succ(V(x)))));
      return closure(mk_implies(mk_and(base, step), mk_forall(x, phi)));
    }

    case AF::CS1: {
      need_phi();
      require_l_formula(phi, "CS1");
      SortedVar z = parts.z.value_or(fresh_num(vars_of(phi)));
      require(z.kind == VarKind::Number, "CS1: z must be a number variable");
      FormulaPtr p = mk_proves(V(z), phi);
      return closure(mk_or(p, mk_not(p)));
    }

    case AF::CS2: {
      need_phi();
      require_l_formula(phi, "CS2");
      std::set<SortedVar> avoid = vars_of(phi);
      SortedVar z = parts.z.value_or(fresh_num(avoid));
      avoid.insert(z);
      SortedVar y = parts.y.value_or(fresh_num(avoid));
      require(z.kind == VarKind::Number && y.kind == VarKind::Number && !(z == y),
              "CS2: distinct number variables z, y required");
      return closure(mk_implies(mk_proves(V(z), phi), mk_proves(mk_plus(V(z), V(y)), phi)));
    }

    case AF::CS3: {
      need_phi();
      require_l_formula(phi, "CS3");
      SortedVar z = parts.z.value_or(fresh_num(vars_of(phi)));
      require(z.kind == VarKind::Number, "CS3: z must be a number variable");
      require(!vars_of(phi).count(z), "CS3: z is a parameter of phi");
      return closure(mk_iff(mk_exists(z, mk_proves(V(z), phi)), phi));
    }

    case AF::LL1: {
      unsigned n = parts.level;
      require(n >= 1, "LL1: level >= 1 required");
      SortedVar F = parts.fvar.value_or(SortedVar{0, n, VarKind::Functional});
      require(F.kind == VarKind::Functional && F.level == n, "LL1: F must be a plain n-functional");
      SortedVar x = parts.x.value_or(numv(0));
      require(x.kind == VarKind::Number, "LL1: x must be a number variable");
      std::set<SortedVar> avoid{F, x};
      SortedVar lf = fresh_of(VarKind::Lawless, n, avoid);
      SortedVar y = fresh_num(avoid);
      return closure(mk_exists(
          lf, bounded_all_le(y, x, mk_eq(mk_ap(V(lf), V(y)), mk_ap(V(F), V(y))))));
    }

    case AF::LL2: {
      unsigned n = parts.level;
      require(n >= 1, "LL2: level >= 1 required");
      SortedVar f = parts.fvar.value_or(SortedVar{0, n, VarKind::Lawless});
      SortedVar g = parts.fvar2.value_or(SortedVar{1, n, VarKind::Lawless});
      require(f.kind == VarKind::Lawless && g.kind == VarKind::Lawless && f.level == n &&
                  g.level == n && !(f == g),
              "LL2: two distinct lawless n-variables required");
      FormulaPtr eq = mk_eq(V(f), V(g));
      return closure(mk_or(eq, mk_not(eq)));
    }

    case AF::LL3: {
      need_phi();
      unsigned n = parts.level;
      SortedVar h = parts.fvar.value_or(SortedVar{0, n, VarKind::Lawless});
      require_open_data_side(phi, h, n, "LL3");
      std::set<SortedVar> avoid = vars_of(phi);
      avoid.insert(h);
      SortedVar x = fresh_num(avoid);
      avoid.insert(x);
      SortedVar g = fresh_of(VarKind::Lawless, n, avoid);
      avoid.insert(g);
      FormulaPtr guard = segments_agree(g, h, x, avoid);
      return closure(mk_implies(
          phi, mk_exists(x, mk_forall(g, mk_implies(guard, substitute(phi, h, V(g)))))));
    }

    case AF::C1: {
      need_phi();
      unsigned m = parts.level;
      SortedVar x = parts.x.value_or(numv(0));
      SortedVar y = parts.y.value_or(numv(1));
      require(x.kind == VarKind::Number && y.kind == VarKind::Number && !(x == y),
              "C1: distinct number variables x, y required");
      require(m >= std::max(sort_of(phi), 1u),
              "C1: m < max(sort(phi), 1)");
      std::set<SortedVar> avoid = vars_of(phi);
      avoid.insert(x); avoid.insert(y);
      SortedVar F = fresh_of(VarKind::Functional, m, avoid);
      FormulaPtr lhs = mk_forall(x, mk_exists(y, phi));
      FormulaPtr rhs = mk_exists(F, mk_forall(x, substitute(phi, y, ap_tower(F, x, m - 1))));
      return closure(mk_implies(lhs, rhs));
    }

    case AF::C2: {
      need_phi();
      unsigned m = parts.level, n = parts.uniq_level;
      require(n >= 1, "C2: G must have level >= 1");
      SortedVar x = parts.x.value_or(numv(0));
      SortedVar G = parts.fvar.value_or(SortedVar{1, n, VarKind::Functional});
      require(x.kind == VarKind::Number, "C2: x must be a number variable");
      require(G.kind == VarKind::Functional && G.level == n, "C2: G must be a plain n-functional");
      require(m >= std::max(sort_of(phi), n + 1), "C2: m < max(sort(phi), n+1)");
      std::set<SortedVar> avoid = vars_of(phi);
      avoid.insert(x); avoid.insert(G);
      SortedVar G2 = fresh_of(VarKind::Functional, n, avoid);
      avoid.insert(G2);
      SortedVar F = fresh_of(VarKind::Functional, m, avoid);
      FormulaPtr uniq = mk_exists(
          G, mk_and(phi, mk_forall(G2, mk_implies(substitute(phi, G, V(G2)),
                                                  mk_eq(V(G2), V(G))))));
      require(m - n - 1 + 1 <= m, "C2: level arithmetic");
      FormulaPtr rhs =
          mk_exists(F, mk_forall(x, substitute(phi, G, ap_tower(F, x, m - n - 1))));
      return closure(mk_implies(mk_forall(x, uniq), rhs));
    }

    case AF::KS: {
      need_phi();
      require_l_formula(phi, "KS");
      unsigned m = parts.level;
      require(m >= std::max(sort_of(phi), 1u), "KS: m < max(sort(phi), 1)");
      std::set<SortedVar> avoid = vars_of(phi);
      SortedVar G = fresh_of(VarKind::Functional, m, avoid);
      require(!vars_of(phi).count(G), "KS: G^m is a parameter of phi");
      avoid.insert(G);
      SortedVar x = fresh_num(avoid);
      FormulaPtr witness = mk_exists(x, mk_not(mk_eq(ap_tower(G, x, m - 1), mk_zero())));
      return closure(mk_exists(G, mk_iff(phi, witness)));
    }

    case AF::WC: {
      need_phi();
      unsigned n = parts.level;
      SortedVar lf = parts.fvar.value_or(SortedVar{0, n, VarKind::Lawless});
      require_open_data_side(phi, lf, n, "WC");
      SortedVar x = parts.x.value_or(numv(0));
      require(x.kind == VarKind::Number, "WC: x must be a number variable");
      std::set<SortedVar> avoid = vars_of(phi);
      avoid.insert(lf); avoid.insert(x);
      SortedVar y = fresh_num(avoid);
      avoid.insert(y);
      SortedVar lg = fresh_of(VarKind::Lawless, n, avoid);
      avoid.insert(lg);
      FormulaPtr guard = segments_agree(lg, lf, y, avoid);
      FormulaPtr lhs = mk_forall(lf, mk_exists(x, phi));
      FormulaPtr rhs = mk_forall(
          lf, mk_exists(x, mk_exists(y, mk_forall(lg, mk_implies(
                                             guard, substitute(phi, lf, V(lg)))))));
      return closure(mk_implies(lhs, rhs));
    }

    case AF::BI: {
      need_phi();
      require(parts.psi != nullptr, "BI: missing psi");
      const FormulaPtr& psi = parts.psi;
      SortedVar y = parts.y.value_or(numv(1));
      require(y.kind == VarKind::Number, "BI: y must be a number variable");
      std::set<SortedVar> avoid = vars_of(phi);
      auto pv = vars_of(psi);
      avoid.insert(pv.begin(), pv.end());
      avoid.insert(y);
      SortedVar x = fresh_num(avoid);
      avoid.insert(x);
      SortedVar F = fresh_of(VarKind::Functional, 1, avoid);
      FormulaPtr c1 = mk_forall(F, mk_exists(x, substitute(phi, y, mk_barseg(V(F), V(x)))));
      FormulaPtr c2 = mk_forall(
          x, mk_forall(y, mk_implies(phi, substitute(phi, y, mk_cat(V(y), V(x))))));
      FormulaPtr c3 = mk_forall(
          y, mk_implies(mk_forall(x, substitute(psi, y, mk_cat(V(y), V(x)))), psi));
      FormulaPtr c4 = mk_forall(y, mk_implies(phi, psi));
      FormulaPtr prem = mk_and(mk_and(mk_and(c1, c2), c3), c4);
      return closure(mk_implies(prem, substitute(psi, y, mk_zero())));
    }

    case AF::MP: {
      need_phi();
      require_l_formula(phi, "MP");
      SortedVar x = parts.x.value_or(numv(0));
      require(x.kind == VarKind::Number, "MP: x must be a number variable");
      FormulaPtr dec = mk_forall(x, mk_or(phi, mk_not(phi)));
      FormulaPtr nn = mk_not(mk_not(mk_exists(x, phi)));
      return closure(mk_implies(mk_and(dec, nn), mk_exists(x, phi)));
    }

    case AF::CT: {
      need_phi();
      SortedVar x = parts.x.value_or(numv(0));
      SortedVar y = parts.y.value_or(numv(1));
      require(x.kind == VarKind::Number && y.kind == VarKind::Number && !(x == y),
              "CT: distinct number variables x, y required");
      std::set<SortedVar> avoid = vars_of(phi);
      avoid.insert(x); avoid.insert(y);
      SortedVar e = fresh_num(avoid);
      FormulaPtr lhs = mk_forall(x, mk_exists(y, phi));
      FormulaPtr rhs = mk_exists(
          e, mk_forall(x, mk_exists(y, mk_and(mk_eq(mk_kap(V(e), V(x)), V(y)), phi))));
      return closure(mk_implies(lhs, rhs));
    }

    case AF::Compr: {
      need_phi();
      unsigned n = parts.level;
      SortedVar z = parts.z.value_or(n == 0 ? numv(0) : SortedVar{0, n, VarKind::SetVar});
      require(z.level == n && (n == 0 ? z.kind == VarKind::Number : z.kind == VarKind::SetVar),
              "Compr: z must be a variable of type n");
      require(sort_of(phi) <= n + 1, "Compr: srt(phi) > n+1");
      SortedVar xv;
      if (parts.fvar) {
        xv = *parts.fvar;
        require(xv.kind == VarKind::SetVar && xv.level == n + 1,
                "Compr: x must be a set variable of type n+1");
        require(!vars_of(phi).count(xv),
                "Compr: x^{n+1} is a parameter of phi");
      } else {
        std::set<SortedVar> avoid = vars_of(phi);
        avoid.insert(z);
        xv = fresh_of(VarKind::SetVar, n + 1, avoid);
      }
      return closure(mk_exists(xv, mk_forall(z, mk_iff(mk_mem(V(z), V(xv)), phi))));
    }

    case AF::Ext: {
      unsigned n = parts.level;
      SortedVar x = parts.fvar.value_or(SortedVar{0, n + 1, VarKind::SetVar});
      SortedVar y = parts.fvar2.value_or(SortedVar{1, n + 1, VarKind::SetVar});
      require(x.kind == VarKind::SetVar && y.kind == VarKind::SetVar && x.level == n + 1 &&
                  y.level == n + 1 && !(x == y),
              "Ext: two distinct set variables of type n+1 required");
      SortedVar z = n == 0 ? numv(0) : SortedVar{2, n, VarKind::SetVar};
      FormulaPtr same = mk_forall(z, mk_iff(mk_mem(V(z), V(x)), mk_mem(V(z), V(y))));
      return closure(mk_implies(same, mk_eq(V(x), V(y))));
    }

    case AF::Equality: {
      unsigned k = parts.level;
      SortedVar a = parts.x.value_or(
          k == 0 ? numv(0) : SortedVar{0, k, VarKind::Functional});
      SortedVar b = parts.y.value_or(
          k == 0 ? numv(1) : SortedVar{1, k, VarKind::Functional});
      require(a.level == k && b.level == k, "Equality: variable levels must equal k");
      switch (parts.alt) {
        case 0: return closure(mk_eq(V(a), V(a)));
        case 1: return closure(mk_implies(mk_eq(V(a), V(b)), mk_eq(V(b), V(a))));
        default: {
          SortedVar c = parts.z.value_or(
              k == 0 ? numv(2) : SortedVar{2, k, VarKind::Functional});
          require(c.level == k, "Equality: variable levels must equal k");
          return closure(mk_implies(mk_and(mk_eq(V(a), V(b)), mk_eq(V(b), V(c))),
                                    mk_eq(V(a), V(c))));
        }
      }
    }
  }
  throw SideConditionError("unknown family");
}

namespace {

// ---- destructuring helpers for recognition ----

struct Bin { FormulaPtr a, b; };

std::optional<Bin> as_implies(const FormulaPtr& f) {
  if (f->tag == FTag::Implies) return Bin{f->f1, f->f2};
  return std::nullopt;
}
std::optional<Bin> as_and(const FormulaPtr& f) {
  if (f->tag == FTag::And) return Bin{f->f1, f->f2};
  return std::nullopt;
}
std::optional<Bin> as_or(const FormulaPtr& f) {
  if (f->tag == FTag::Or) return Bin{f->f1, f->f2};
  return std::nullopt;
}
std::optional<std::pair<SortedVar, FormulaPtr>> as_forall(const FormulaPtr& f) {
  if (f->tag == FTag::Forall) return std::make_pair(f->bound, f->f1);
  return std::nullopt;
}
std::optional<std::pair<SortedVar, FormulaPtr>> as_exists(const FormulaPtr& f) {
  if (f->tag == FTag::Exists) return std::make_pair(f->bound, f->f1);
  return std::nullopt;
}
std::optional<SortedVar> as_var(const ExprPtr& e) {
  if (e->tag == ETag::Var) return e->var;
  return std::nullopt;
}

std::pair<std::vector<SortedVar>, FormulaPtr> strip_forall(const FormulaPtr& f) {
  std::vector<SortedVar> vs;
  FormulaPtr b = f;
  while (b->tag == FTag::Forall) {
    vs.push_back(b->bound);
    b = b->f1;
  }
  return {vs, b};
}

// Candidate parts extracted from a stripped body; verification happens by
// re-instantiating and comparing.
using Extraction = std::pair<AxiomFamily, SchemaParts>;

void extract_arith(const FormulaPtr& b, bool ti, std::vector<Extraction>& out) {
  using AF = AxiomFamily;
  AF f1 = ti ? AF::TI1 : AF::L1, f2 = ti ? AF::TI2 : AF::L2, f3 = ti ? AF::TI3 : AF::L3;
  if (is_not(b)) {
    const FormulaPtr& eq = not_body(b);
    if (eq->tag == FTag::EqN && eq->level == 0 && eq->e1->tag == ETag::Succ) {
      if (auto x = as_var(eq->e1->a)) {
        SchemaParts p; p.alt = 0; p.x = *x;
        out.push_back({f1, p});
      }
    }
    return;
  }
  if (auto imp = as_implies(b)) {
    // Sx = Sy -> x = y
    if (imp->a->tag == FTag::EqN && imp->a->e1->tag == ETag::Succ &&
        imp->a->e2->tag == ETag::Succ) {
      auto x = as_var(imp->a->e1->a), y = as_var(imp->a->e2->a);
      if (x && y) {
        SchemaParts p; p.alt = 1; p.x = *x; p.y = *y;
        out.push_back({f1, p});
      }
    }
    return;
  }
  if (b->tag != FTag::EqN || b->level != 0) return;
  if (b->e1->tag == ETag::Plus) {
    auto x = as_var(b->e1->a);
    if (!x) return;
    if (b->e1->b->tag == ETag::Zero) {
      SchemaParts p; p.alt = 0; p.x = *x;
      out.push_back({f2, p});
    } else if (b->e1->b->tag == ETag::Succ) {
      if (auto y = as_var(b->e1->b->a)) {
        SchemaParts p; p.alt = 1; p.x = *x; p.y = *y;
        out.push_back({f2, p});
      }
    }
  } else if (b->e1->tag == ETag::Times) {
    auto x = as_var(b->e1->a);
    if (!x) return;
    if (b->e1->b->tag == ETag::Zero) {
      SchemaParts p; p.alt = 0; p.x = *x;
      out.push_back({f3, p});
    } else if (b->e1->b->tag == ETag::Succ) {
      if (auto y = as_var(b->e1->b->a)) {
        SchemaParts p; p.alt = 1; p.x = *x; p.y = *y;
        out.push_back({f3, p});
      }
    }
  }
}

void extract_k_n(const FormulaPtr& b, std::vector<Extraction>& out) {
  using AF = AxiomFamily;
  if (is_not(b)) {
    const FormulaPtr& eq = not_body(b);
    if (eq->tag == FTag::EqN && eq->e1->tag == ETag::N && eq->e2->tag == ETag::K) {
      if (auto F = as_var(eq->e1->a)) {
        SchemaParts p; p.alt = 1; p.level = eq->level; p.fvar = *F;
        out.push_back({AF::L5, p});
      }
    }
    return;
  }
  if (b->tag != FTag::EqN) return;
  if (b->e1->tag == ETag::Ap && b->e1->a->tag == ETag::K) {
    if (auto x = as_var(b->e1->b)) {
      SchemaParts p; p.alt = 0; p.level = b->level; p.x = *x;
      out.push_back({AF::L5, p});
    }
  }
  if (b->e1->tag == ETag::Ap && b->e1->a->tag == ETag::N) {
    auto F = as_var(b->e1->a->a);
    auto x = as_var(b->e1->b);
    if (F && x) {
      SchemaParts p; p.alt = 0; p.level = b->level; p.fvar = *F; p.x = *x;
      out.push_back({AF::L6, p});
    }
  }
  if (auto imp = as_implies(b)) {
    (void)imp;
  }
}

void extract_n_inj(const FormulaPtr& b, std::vector<Extraction>& out) {
  auto imp = as_implies(b);
  if (!imp) return;
  if (imp->a->tag == FTag::EqN && imp->a->e1->tag == ETag::N && imp->a->e2->tag == ETag::N) {
    auto F = as_var(imp->a->e1->a), G = as_var(imp->a->e2->a);
    if (F && G) {
      SchemaParts p; p.alt = 1; p.level = imp->a->level; p.fvar = *F; p.fvar2 = *G;
      out.push_back({AxiomFamily::L6, p});
    }
  }
}

void extract_l7(const FormulaPtr& b, std::vector<Extraction>& out) {
  auto ex = as_exists(b);
  if (!ex) return;
  auto fa = as_forall(ex->second);
  if (!fa) return;
  const FormulaPtr& eq = fa->second;
  if (eq->tag != FTag::EqN || eq->level != 0 || eq->e1->tag != ETag::Ap) return;
  SchemaParts p;
  p.x = fa->first;
  p.term = eq->e2;
  out.push_back({AxiomFamily::L7, p});
}

void extract_induction(const FormulaPtr& b, bool ti, std::vector<Extraction>& out) {
  auto imp = as_implies(b);
  if (!imp) return;
  auto conj = as_and(imp->a);
  if (!conj) return;
  auto fa = as_forall(imp->b);
  if (!fa) return;
  SchemaParts p;
  p.phi = fa->second;
  p.x = fa->first;
  out.push_back({ti ? AxiomFamily::TI4 : AxiomFamily::Induction, p});
}

void extract_cs(const FormulaPtr& b, std::vector<Extraction>& out) {
  using AF = AxiomFamily;
  if (auto disj = as_or(b)) {  // CS1
    if (disj->a->tag == FTag::Proves) {
      if (auto z = as_var(disj->a->e1)) {
        SchemaParts p; p.phi = disj->a->f1; p.z = *z;
        out.push_back({AF::CS1, p});
      }
    }
  }
  if (auto imp = as_implies(b)) {  // CS2
    if (imp->a->tag == FTag::Proves && imp->b->tag == FTag::Proves &&
        imp->b->e1->tag == ETag::Plus) {
      auto z = as_var(imp->a->e1);
      auto y = as_var(imp->b->e1->b);
      if (z && y) {
        SchemaParts p; p.phi = imp->a->f1; p.z = *z; p.y = *y;
        out.push_back({AF::CS2, p});
      }
    }
  }
  if (auto conj = as_and(b)) {  // CS3 as iff-expansion
    if (auto imp = as_implies(conj->a)) {
      if (auto ex = as_exists(imp->a)) {
        if (ex->second->tag == FTag::Proves) {
          SchemaParts p; p.phi = imp->b; p.z = ex->first;
          out.push_back({AF::CS3, p});
        }
      }
    }
  }
}

void extract_ll1(const FormulaPtr& b, std::vector<Extraction>& out) {
  auto ex = as_exists(b);
  if (!ex || ex->first.kind != VarKind::Lawless) return;
  auto fa = as_forall(ex->second);
  if (!fa) return;
  auto imp = as_implies(fa->second);
  if (!imp) return;
  // the guard is ex w. y + w = x
  auto guard = as_exists(imp->a);
  if (!guard) return;
  if (guard->second->tag != FTag::EqN) return;
  auto x = as_var(guard->second->e2);
  if (!x) return;
  if (imp->b->tag != FTag::EqN || imp->b->e2->tag != ETag::Ap) return;
  auto F = as_var(imp->b->e2->a);
  if (!F) return;
  SchemaParts p;
  p.level = ex->first.level;
  p.fvar = *F;
  p.x = *x;
  out.push_back({AxiomFamily::LL1, p});
}

void extract_ll2(const FormulaPtr& b, std::vector<Extraction>& out) {
  auto disj = as_or(b);
  if (!disj || disj->a->tag != FTag::EqN) return;
  auto f = as_var(disj->a->e1), g = as_var(disj->a->e2);
  if (!f || !g || f->kind != VarKind::Lawless) return;
  SchemaParts p;
  p.level = f->level;
  p.fvar = *f;
  p.fvar2 = *g;
  out.push_back({AxiomFamily::LL2, p});
}

void extract_ll3(const FormulaPtr& b, std::vector<Extraction>& out) {
  auto imp = as_implies(b);
  if (!imp) return;
  auto ex = as_exists(imp->b);
  if (!ex) return;
  auto fa = as_forall(ex->second);
  if (!fa || fa->first.kind != VarKind::Lawless) return;
  auto inner = as_implies(fa->second);
  if (!inner) return;
  // guard: all y. (y < x -> G(y) = H(y)); read H off the right-hand side
  auto g_all = as_forall(inner->a);
  if (!g_all) return;
  auto g_imp = as_implies(g_all->second);
  if (!g_imp || g_imp->b->tag != FTag::EqN || g_imp->b->e2->tag != ETag::Ap) return;
  auto H = as_var(g_imp->b->e2->a);
  if (!H) return;
  SchemaParts p;
  p.phi = imp->a;
  p.level = fa->first.level;
  p.fvar = *H;
  out.push_back({AxiomFamily::LL3, p});
}

void extract_c1(const FormulaPtr& b, std::vector<Extraction>& out) {
  auto imp = as_implies(b);
  if (!imp) return;
  auto fa = as_forall(imp->a);
  if (!fa) return;
  auto ey = as_exists(fa->second);
  if (!ey) return;
  auto exF = as_exists(imp->b);
  if (!exF || exF->first.kind != VarKind::Functional) return;
  SchemaParts p;
  p.phi = ey->second;
  p.x = fa->first;
  p.y = ey->first;
  p.level = exF->first.level;
  out.push_back({AxiomFamily::C1, p});
}

void extract_c2(const FormulaPtr& b, std::vector<Extraction>& out) {
  auto imp = as_implies(b);
  if (!imp) return;
  auto fa = as_forall(imp->a);
  if (!fa) return;
  auto exG = as_exists(fa->second);
  if (!exG || exG->first.kind != VarKind::Functional) return;
  auto conj = as_and(exG->second);
  if (!conj) return;
  auto exF = as_exists(imp->b);
  if (!exF || exF->first.kind != VarKind::Functional) return;
  SchemaParts p;
  p.phi = conj->a;
  p.x = fa->first;
  p.fvar = exG->first;
  p.uniq_level = exG->first.level;
  p.level = exF->first.level;
  out.push_back({AxiomFamily::C2, p});
}

void extract_ks(const FormulaPtr& b, std::vector<Extraction>& out) {
  auto ex = as_exists(b);
  if (!ex || ex->first.kind != VarKind::Functional) return;
  auto conj = as_and(ex->second);
  if (!conj) return;
  auto imp = as_implies(conj->a);
  if (!imp) return;
  SchemaParts p;
  p.phi = imp->a;
  p.level = ex->first.level;
  out.push_back({AxiomFamily::KS, p});
}

void extract_wc(const FormulaPtr& b, std::vector<Extraction>& out) {
  auto imp = as_implies(b);
  if (!imp) return;
  auto fa = as_forall(imp->a);
  if (!fa || fa->first.kind != VarKind::Lawless) return;
  auto ex = as_exists(fa->second);
  if (!ex) return;
  SchemaParts p;
  p.phi = ex->second;
  p.fvar = fa->first;
  p.level = fa->first.level;
  p.x = ex->first;
  out.push_back({AxiomFamily::WC, p});
}

void extract_bi(const FormulaPtr& b, std::vector<Extraction>& out) {
  auto imp = as_implies(b);
  if (!imp) return;
  auto c123_4 = as_and(imp->a);
  if (!c123_4) return;
  auto c4 = as_forall(c123_4->b);
  if (!c4) return;
  auto c4imp = as_implies(c4->second);
  if (!c4imp) return;
  SchemaParts p;
  p.phi = c4imp->a;
  p.psi = c4imp->b;
  p.y = c4->first;
  out.push_back({AxiomFamily::BI, p});
}

void extract_mp(const FormulaPtr& b, std::vector<Extraction>& out) {
  auto imp = as_implies(b);
  if (!imp) return;
  auto conj = as_and(imp->a);
  if (!conj) return;
  auto fa = as_forall(conj->a);
  if (!fa) return;
  auto disj = as_or(fa->second);
  if (!disj) return;
  SchemaParts p;
  p.phi = disj->a;
  p.x = fa->first;
  out.push_back({AxiomFamily::MP, p});
}

void extract_ct(const FormulaPtr& b, std::vector<Extraction>& out) {
  auto imp = as_implies(b);
  if (!imp) return;
  auto fa = as_forall(imp->a);
  if (!fa) return;
  auto ey = as_exists(fa->second);
  if (!ey) return;
  auto exE = as_exists(imp->b);
  if (!exE || exE->first.kind != VarKind::Number) return;
  SchemaParts p;
  p.phi = ey->second;
  p.x = fa->first;
  p.y = ey->first;
  out.push_back({AxiomFamily::CT, p});
}

void extract_compr(const FormulaPtr& b, std::vector<Extraction>& out) {
  auto ex = as_exists(b);
  if (!ex || ex->first.kind != VarKind::SetVar) return;
  auto fa = as_forall(ex->second);
  if (!fa) return;
  auto conj = as_and(fa->second);
  if (!conj) return;
  auto imp = as_implies(conj->a);
  if (!imp || imp->a->tag != FTag::MemN) return;
  SchemaParts p;
  p.phi = imp->b;
  p.z = fa->first;
  p.level = fa->first.level;
  p.fvar = ex->first;
  out.push_back({AxiomFamily::Compr, p});
}

void extract_ext(const FormulaPtr& b, std::vector<Extraction>& out) {
  auto imp = as_implies(b);
  if (!imp || imp->b->tag != FTag::EqN) return;
  auto fa = as_forall(imp->a);
  if (!fa) return;
  auto x = as_var(imp->b->e1), y = as_var(imp->b->e2);
  if (!x || !y || x->kind != VarKind::SetVar) return;
  SchemaParts p;
  p.level = fa->first.level;
  p.fvar = *x;
  p.fvar2 = *y;
  out.push_back({AxiomFamily::Ext, p});
}

void extract_equality(const FormulaPtr& b, std::vector<Extraction>& out) {
  using AF = AxiomFamily;
  if (b->tag == FTag::EqN) {
    auto a1 = as_var(b->e1), a2 = as_var(b->e2);
    if (a1 && a2 && *a1 == *a2) {
      SchemaParts p; p.alt = 0; p.level = b->level; p.x = *a1;
      out.push_back({AF::Equality, p});
    }
    return;
  }
  auto imp = as_implies(b);
  if (!imp || imp->b->tag != FTag::EqN) return;
  if (imp->a->tag == FTag::EqN) {
    auto a1 = as_var(imp->a->e1), a2 = as_var(imp->a->e2);
    if (a1 && a2) {
      SchemaParts p; p.alt = 1; p.level = imp->a->level; p.x = *a1; p.y = *a2;
      out.push_back({AF::Equality, p});
    }
    return;
  }
  if (auto conj = as_and(imp->a)) {
    if (conj->a->tag == FTag::EqN && conj->b->tag == FTag::EqN) {
      auto a1 = as_var(conj->a->e1), a2 = as_var(conj->a->e2), a3 = as_var(conj->b->e2);
      if (a1 && a2 && a3) {
        SchemaParts p; p.alt = 2; p.level = conj->a->level; p.x = *a1; p.y = *a2; p.z = *a3;
        out.push_back({AF::Equality, p});
      }
    }
  }
}

FormulaPtr reclose(const FormulaPtr& f) {
  auto [vs, body] = strip_forall(f);
  (void)vs;
  return closure(body);
}

}  // namespace

std::optional<AxiomInstance> recognize_schema(const FormulaPtr& input, Lang lang, unsigned s) {
  check_sorted(input, lang, s);
  if (!free_vars(input).empty()) return std::nullopt;

  auto [prefix, body] = strip_forall(input);
  (void)prefix;

  std::vector<Extraction> cands;
  bool ti = lang == Lang::TI;
  if (ti) {
    extract_arith(body, true, cands);
    extract_induction(body, true, cands);
    extract_compr(body, cands);
    extract_ext(body, cands);
  } else {
    extract_arith(body, false, cands);
    extract_k_n(body, cands);
    extract_n_inj(body, cands);
    extract_l7(body, cands);
    extract_induction(body, false, cands);
    extract_cs(body, cands);
    extract_ll1(body, cands);
    extract_ll2(body, cands);
    extract_ll3(body, cands);
    extract_c1(body, cands);
    extract_c2(body, cands);
    extract_ks(body, cands);
    extract_wc(body, cands);
    extract_bi(body, cands);
    extract_mp(body, cands);
    extract_ct(body, cands);
  }
  extract_equality(body, cands);

  FormulaPtr canon = reclose(input);
  for (const auto& [family, parts] : cands) {
    FormulaPtr built;
    try {
      built = instantiate_schema(family, parts);
    } catch (const SideConditionError&) {
      continue;
    } catch (const SortError&) {
      continue;
    }
    if (alpha_eq(reclose(built), canon)) {
      AxiomInstance inst;
      inst.family = family;
      inst.phi = parts.phi;
      inst.psi = parts.psi;
      inst.meta["level"] = std::to_string(parts.level);
      inst.meta["alt"] = std::to_string(parts.alt);
      if (parts.phi) inst.meta["phi"] = print(parts.phi);
      if (parts.psi) inst.meta["psi"] = print(parts.psi);
      if (parts.term) inst.meta["term"] = print(parts.term);
      return inst;
    }
  }
  return std::nullopt;
}

std::optional<AxiomInstance> is_axiom(const Theory& th, const FormulaPtr& phi) {
  check_sorted(phi, th.lang(), th.s);  // throws LanguageError / SortError
  if (!free_vars(phi).empty()) return std::nullopt;
  auto inst = recognize_schema(phi, th.lang(), th.s);
  if (!inst || !theory_admits(th, inst->family)) return std::nullopt;
  return inst;
}

}  // namespace bethforge::calculus
