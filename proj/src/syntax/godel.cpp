#include "bethforge/syntax/godel.hpp"

namespace bethforge::syntax {

namespace {

using ETag = Expr::Tag;
using FTag = Formula::Tag;

// Tag alphabet; payload tokens follow each tag.
enum : std::uint64_t {
  kZero = 1, kK, kVar, kSucc, kPlus, kTimes, kN, kAp, kCat, kBarSeg, kKap,
  kFalsum, kProp, kEq, kMem, kProves, kAnd, kOr, kImplies, kForall, kExists
};

const std::vector<std::uint64_t>& primes(std::size_t need) {
  static std::vector<std::uint64_t> ps = {2, 3, 5, 7, 11, 13};
  while (ps.size() < need) {
    std::uint64_t c = ps.back() + 2;
    for (;; c += 2) {
      bool ok = true;
      for (std::uint64_t q : ps) {
        if (q * q > c) break;
        if (c % q == 0) { ok = false; break; }
      }
      if (ok) break;
    }
    ps.push_back(c);
  }
  return ps;
}

void emit_var(const SortedVar& v, std::vector<std::uint64_t>& out) {
  out.push_back(static_cast<std::uint64_t>(v.kind));
  out.push_back(v.level);
  out.push_back(v.index);
}

void serialize(const ExprPtr& e, std::vector<std::uint64_t>& out) {
  switch (e->tag) {
    case ETag::Zero: out.push_back(kZero); return;
    case ETag::K: out.push_back(kK); out.push_back(e->level); return;
    case ETag::Var: out.push_back(kVar); emit_var(e->var, out); return;
    case ETag::Succ: out.push_back(kSucc); serialize(e->a, out); return;
    case ETag::Plus: out.push_back(kPlus); serialize(e->a, out); serialize(e->b, out); return;
    case ETag::Times: out.push_back(kTimes); serialize(e->a, out); serialize(e->b, out); return;
    case ETag::N: out.push_back(kN); out.push_back(e->level); serialize(e->a, out); return;
    case ETag::Ap: out.push_back(kAp); serialize(e->a, out); serialize(e->b, out); return;
    case ETag::Cat: out.push_back(kCat); serialize(e->a, out); serialize(e->b, out); return;
    case ETag::BarSeg: out.push_back(kBarSeg); serialize(e->a, out); serialize(e->b, out); return;
    case ETag::Kap: out.push_back(kKap); serialize(e->a, out); serialize(e->b, out); return;
  }
}

void serialize(const FormulaPtr& f, std::vector<std::uint64_t>& out) {
  switch (f->tag) {
    case FTag::Falsum: out.push_back(kFalsum); return;
    case FTag::Prop:
      out.push_back(kProp);
      out.push_back(f->prop.size());
      for (char c : f->prop) out.push_back(static_cast<unsigned char>(c));
      return;
    case FTag::EqN: out.push_back(kEq); serialize(f->e1, out); serialize(f->e2, out); return;
    case FTag::MemN: out.push_back(kMem); serialize(f->e1, out); serialize(f->e2, out); return;
    case FTag::Proves: out.push_back(kProves); serialize(f->e1, out); serialize(f->f1, out); return;
    case FTag::And: out.push_back(kAnd); serialize(f->f1, out); serialize(f->f2, out); return;
    case FTag::Or: out.push_back(kOr); serialize(f->f1, out); serialize(f->f2, out); return;
    case FTag::Implies: out.push_back(kImplies); serialize(f->f1, out); serialize(f->f2, out); return;
    case FTag::Forall: out.push_back(kForall); emit_var(f->bound, out); serialize(f->f1, out); return;
    case FTag::Exists: out.push_back(kExists); emit_var(f->bound, out); serialize(f->f1, out); return;
  }
}

struct TokenReader {
  const std::vector<std::uint64_t>& toks;
  std::size_t p = 0;

  std::uint64_t next(const char* what) {
    if (p >= toks.size()) throw DecodeError(std::string("truncated token stream in ") + what);
    return toks[p++];
  }

  SortedVar read_var() {
    auto kind = next("var kind");
    if (kind > 4) throw DecodeError("bad variable kind");
    auto level = next("var level");
    auto index = next("var index");
    SortedVar v{static_cast<unsigned>(index), static_cast<unsigned>(level),
                static_cast<VarKind>(kind)};
    if (v.kind == VarKind::Number && v.level != 0) throw DecodeError("number var with level");
    if ((v.kind == VarKind::Functional || v.kind == VarKind::Lawlike ||
         v.kind == VarKind::Lawless) && v.level < 1)
      throw DecodeError("functional var at level 0");
    return v;
  }

  ExprPtr read_expr() {
    switch (next("expr tag")) {
      case kZero: return mk_zero();
      case kK: {
        auto lvl = next("K level");
        if (lvl < 1) throw DecodeError("K at level 0");
        return mk_k(static_cast<unsigned>(lvl));
      }
      case kVar: return mk_var(read_var());
      case kSucc: return wrap([&] { return mk_succ(read_expr()); });
      case kPlus: return wrap([&] { auto a = read_expr(); return mk_plus(a, read_expr()); });
      case kTimes: return wrap([&] { auto a = read_expr(); return mk_times(a, read_expr()); });
      case kN: {
        auto lvl = next("N level");
        return wrap([&] { return mk_n(static_cast<unsigned>(lvl), read_expr()); });
      }
      case kAp: return wrap([&] { auto a = read_expr(); return mk_ap(a, read_expr()); });
      case kCat: return wrap([&] { auto a = read_expr(); return mk_cat(a, read_expr()); });
      case kBarSeg: return wrap([&] { auto a = read_expr(); return mk_barseg(a, read_expr()); });
      case kKap: return wrap([&] { auto a = read_expr(); return mk_kap(a, read_expr()); });
      default: throw DecodeError("not an expression tag");
    }
  }

  FormulaPtr read_formula() {
    switch (next("formula tag")) {
      case kFalsum: return mk_falsum();
      case kProp: {
        auto len = next("prop length");
        std::string name;
        for (std::uint64_t i = 0; i < len; ++i) {
          auto c = next("prop char");
          if (c == 0 || c > 127) throw DecodeError("bad prop character");
          name += static_cast<char>(c);
        }
        if (name.empty()) throw DecodeError("empty prop name");
        return mk_prop(name);
      }
      case kEq: return wrapf([&] { auto a = read_expr(); return mk_eq(a, read_expr()); });
      case kMem: return wrapf([&] { auto a = read_expr(); return mk_mem(a, read_expr()); });
      case kProves: return wrapf([&] { auto t = read_expr(); return mk_proves(t, read_formula()); });
      case kAnd: { auto a = read_formula(); return mk_and(a, read_formula()); }
      case kOr: { auto a = read_formula(); return mk_or(a, read_formula()); }
      case kImplies: { auto a = read_formula(); return mk_implies(a, read_formula()); }
      case kForall: { auto v = read_var(); return mk_forall(v, read_formula()); }
      case kExists: { auto v = read_var(); return mk_exists(v, read_formula()); }
      default: throw DecodeError("not a formula tag");
    }
  }

  template <class F>
  ExprPtr wrap(F f) {
    try { return f(); } catch (const SortError& e) { throw DecodeError(e.what()); }
  }
  template <class F>
  FormulaPtr wrapf(F f) {
    try { return f(); } catch (const SortError& e) { throw DecodeError(e.what()); }
  }
};

}  // namespace

GodelCode godel_pack(const std::vector<std::uint64_t>& tokens) {
  const auto& ps = primes(tokens.size());
  Nat code = 1;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Nat factor = boost::multiprecision::pow(Nat(ps[i]), static_cast<unsigned>(tokens[i] + 1));
    code *= factor;
  }
  return GodelCode{code};
}

std::vector<std::uint64_t> godel_tokens(const GodelCode& code) {
  if (code.value < 2) throw DecodeError("code below the image of the numbering");
  Nat rest = code.value;
  std::vector<std::uint64_t> toks;
  for (std::size_t i = 0; rest != 1; ++i) {
    const auto& ps = primes(i + 1);
    Nat p(ps[i]);
    if (rest % p != 0) throw DecodeError("prime gap in code");
    std::uint64_t e = 0;
    while (rest % p == 0) { rest /= p; ++e; }
    toks.push_back(e - 1);
  }
  return toks;
}

GodelCode godel_encode(const ExprPtr& e) {
  std::vector<std::uint64_t> toks;
  serialize(e, toks);
  return godel_pack(toks);
}

GodelCode godel_encode(const FormulaPtr& f) {
  std::vector<std::uint64_t> toks;
  serialize(f, toks);
  return godel_pack(toks);
}

Decoded godel_decode(const GodelCode& code) {
  auto toks = godel_tokens(code);
  TokenReader r{toks};
  if (toks.empty()) throw DecodeError("empty code");
  Decoded out;
  if (toks[0] >= kFalsum) out = r.read_formula();
  else out = r.read_expr();
  if (r.p != toks.size()) throw DecodeError("trailing tokens in code");
  return out;
}

}  // namespace bethforge::syntax
