#include "bethforge/syntax/parse.hpp"

#include <cctype>
#include <optional>

namespace bethforge::syntax {

namespace {

enum class Tok {
  End, Number, Word, Falsum, LParen, RParen, Comma, Dot,
  Plus, Star, Eq, In, And, Or, Arrow, Tilde
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::optional<unsigned> level;  // Eq / In with an explicit level
  std::size_t pos = 0;
};

struct Lexer {
  const std::string& src;
  std::size_t i = 0;
  std::vector<Token> toks;

  explicit Lexer(const std::string& s) : src(s) { run(); }

  void run() {
    while (i < src.size()) {
      char c = src[i];
      if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
      if (c == '#') break;  // comment to end of line
      std::size_t start = i;
      if (src.compare(i, 3, "_|_") == 0) { push(Tok::Falsum, "_|_", start); i += 3; continue; }
      if (src.compare(i, 2, "->") == 0) { push(Tok::Arrow, "->", start); i += 2; continue; }
      switch (c) {
        case '(': push(Tok::LParen, "(", start); ++i; continue;
        case ')': push(Tok::RParen, ")", start); ++i; continue;
        case ',': push(Tok::Comma, ",", start); ++i; continue;
        case '.': push(Tok::Dot, ".", start); ++i; continue;
        case '+': push(Tok::Plus, "+", start); ++i; continue;
        case '*': push(Tok::Star, "*", start); ++i; continue;
        case '&': push(Tok::And, "&", start); ++i; continue;
        case '|': push(Tok::Or, "|", start); ++i; continue;
        case '~': push(Tok::Tilde, "~", start); ++i; continue;
        case '=': {
          ++i;
          Token t{Tok::Eq, "=", std::nullopt, start};
          if (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
            t.level = read_digits();
          toks.push_back(t);
          continue;
        }
        default: break;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Token t{Tok::Number, "", std::nullopt, start};
        t.text = std::to_string(read_digits());
        toks.push_back(t);
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string w;
        while (i < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
          w += src[i++];
        if (w.size() > 2 && w.compare(0, 2, "in") == 0 &&
            std::isdigit(static_cast<unsigned char>(w[2])) &&
            w.find_first_not_of("0123456789", 2) == std::string::npos) {
          Token t{Tok::In, "in", std::nullopt, start};
          t.level = static_cast<unsigned>(std::stoul(w.substr(2)));
          toks.push_back(t);
        } else if (w == "in") {
          push(Tok::In, "in", start);
        } else {
          push(Tok::Word, w, start);
        }
        continue;
      }
      throw SyntaxError(start, std::string("unexpected character '") + c + "'");
    }
    push(Tok::End, "", src.size());
  }

  unsigned read_digits() {
    unsigned v = 0;
    while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
      v = v * 10 + static_cast<unsigned>(src[i++] - '0');
    return v;
  }

  void push(Tok k, std::string txt, std::size_t pos) {
    toks.push_back(Token{k, std::move(txt), std::nullopt, pos});
  }
};

std::optional<SortedVar> classify_var(const std::string& w) {
  auto digits = [](const std::string& s, std::size_t from, std::size_t to) -> std::optional<unsigned> {
    if (from >= to) return std::nullopt;
    unsigned v = 0;
    for (std::size_t i = from; i < to; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
      v = v * 10 + static_cast<unsigned>(s[i] - '0');
    }
    return v;
  };
  // number variable: one of x y z u v w followed by digits
  static const std::string num = "xyzuvw";
  if (auto p = num.find(w[0]); p != std::string::npos) {
    if (auto idx = digits(w, 1, w.size()))
      return SortedVar{*idx * 6 + static_cast<unsigned>(p), 0, VarKind::Number};
    return std::nullopt;
  }
  // <letters><level>_<index>
  auto split = [&](std::size_t letters) -> std::optional<std::pair<unsigned, unsigned>> {
    auto us = w.find('_', letters);
    if (us == std::string::npos) return std::nullopt;
    auto lvl = digits(w, letters, us);
    auto idx = digits(w, us + 1, w.size());
    if (!lvl || !idx) return std::nullopt;
    return std::make_pair(*lvl, *idx);
  };
  auto letter3 = [](char c, const char* alphabet) -> std::optional<unsigned> {
    for (unsigned k = 0; k < 3; ++k)
      if (c == alphabet[k]) return k;
    return std::nullopt;
  };
  if (w.size() >= 2 && w[0] == 'L') {
    if (auto r = letter3(w[1], "FGH")) {
      if (auto lv = split(2))
        return SortedVar{lv->second * 3 + *r, lv->first, VarKind::Lawless};
    }
    return std::nullopt;
  }
  if (auto r = letter3(w[0], "FGH")) {
    if (auto lv = split(1)) return SortedVar{lv->second * 3 + *r, lv->first, VarKind::Functional};
    return std::nullopt;
  }
  if (auto r = letter3(w[0], "ABC")) {
    if (auto lv = split(1)) return SortedVar{lv->second * 3 + *r, lv->first, VarKind::Lawlike};
    return std::nullopt;
  }
  if (auto r = letter3(w[0], "XYZ")) {
    if (auto lv = split(1)) return SortedVar{lv->second * 3 + *r, lv->first, VarKind::SetVar};
    return std::nullopt;
  }
  return std::nullopt;
}

bool is_prop_name(const std::string& w) {
  if (w == "all" || w == "ex" || w == "proves" || w == "cat" || w == "bar" || w == "kap" ||
      w == "S" || w == "in")
    return false;
  if (classify_var(w)) return false;
  if (!std::islower(static_cast<unsigned char>(w[0]))) return false;
  // K1, N2, Ap1 shapes are reserved constants / function symbols
  return true;
}

struct Parser {
  std::vector<Token> toks;
  std::size_t p = 0;

  const Token& peek() const { return toks[p]; }
  const Token& next() { return toks[p++]; }
  bool at(Tok k) const { return toks[p].kind == k; }
  bool eat(Tok k) { if (at(k)) { ++p; return true; } return false; }
  void expect(Tok k, const char* what) {
    if (!eat(k)) throw SyntaxError(peek().pos, std::string("expected ") + what);
  }

  std::optional<unsigned> word_with_prefix(const std::string& prefix) const {
    const Token& t = peek();
    if (t.kind != Tok::Word || t.text.size() <= prefix.size()) return std::nullopt;
    if (t.text.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    unsigned v = 0;
    for (std::size_t i = prefix.size(); i < t.text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) return std::nullopt;
      v = v * 10 + static_cast<unsigned>(t.text[i] - '0');
    }
    return v;
  }

  ExprPtr parse_expr_top() {
    auto e = parse_sum();
    return e;
  }

  ExprPtr parse_sum() {
    ExprPtr e = parse_product();
    while (eat(Tok::Plus)) e = mk_plus(e, parse_product());
    return e;
  }

  ExprPtr parse_product() {
    ExprPtr e = parse_expr_primary();
    while (eat(Tok::Star)) e = mk_times(e, parse_expr_primary());
    return e;
  }

  ExprPtr parse_expr_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        next();
        return mk_numeral(std::stoull(t.text));
      }
      case Tok::LParen: {
        next();
        ExprPtr e = parse_sum();
        expect(Tok::RParen, ")");
        return e;
      }
      case Tok::Word: break;
      default:
        throw SyntaxError(t.pos, "expected a term");
    }
    std::size_t pos = t.pos;
    if (t.text == "S") { next(); return call1(pos, [](ExprPtr a) { return mk_succ(a); }); }
    if (auto lvl = word_with_prefix("K")) { next(); return mk_k(*lvl); }
    if (auto lvl = word_with_prefix("N")) {
      unsigned level = *lvl;
      next();
      return call1(pos, [level](ExprPtr a) {
        if (a->value_level() != level)
          throw SortError("N" + std::to_string(level) + " applied to a level-" +
                          std::to_string(a->value_level()) + " expression");
        return mk_n(level, a);
      });
    }
    if (auto lvl = word_with_prefix("Ap")) {
      unsigned level = *lvl;
      next();
      return call2(pos, [level](ExprPtr a, ExprPtr b) {
        if (a->value_level() != level)
          throw SortError("Ap" + std::to_string(level) + " applied to a level-" +
                          std::to_string(a->value_level()) + " expression");
        return mk_ap(a, b);
      });
    }
    if (t.text == "cat") { next(); return call2(pos, [](ExprPtr a, ExprPtr b) { return mk_cat(a, b); }); }
    if (t.text == "bar") { next(); return call2(pos, [](ExprPtr a, ExprPtr b) { return mk_barseg(a, b); }); }
    if (t.text == "kap") { next(); return call2(pos, [](ExprPtr a, ExprPtr b) { return mk_kap(a, b); }); }
    if (auto v = classify_var(t.text)) { next(); return mk_var(*v); }
    throw SyntaxError(t.pos, "unknown term '" + t.text + "'");
  }

  template <class F>
  ExprPtr call1(std::size_t pos, F f) {
    expect(Tok::LParen, "(");
    ExprPtr a = parse_sum();
    expect(Tok::RParen, ")");
    (void)pos;
    return f(a);
  }

  template <class F>
  ExprPtr call2(std::size_t pos, F f) {
    expect(Tok::LParen, "(");
    ExprPtr a = parse_sum();
    expect(Tok::Comma, ",");
    ExprPtr b = parse_sum();
    expect(Tok::RParen, ")");
    (void)pos;
    return f(a, b);
  }

  FormulaPtr parse_formula_top() { return parse_implies(); }

  FormulaPtr parse_implies() {
    FormulaPtr a = parse_or();
    if (eat(Tok::Arrow)) return mk_implies(a, parse_implies());
    return a;
  }

  FormulaPtr parse_or() {
    FormulaPtr a = parse_and();
    while (eat(Tok::Or)) a = mk_or(a, parse_and());
    return a;
  }

  FormulaPtr parse_and() {
    FormulaPtr a = parse_unary();
    while (eat(Tok::And)) a = mk_and(a, parse_unary());
    return a;
  }

  FormulaPtr parse_unary() {
    if (eat(Tok::Tilde)) return mk_not(parse_unary());
    return parse_primary();
  }

  FormulaPtr parse_primary() {
    const Token& t = peek();
    if (t.kind == Tok::Falsum) { next(); return mk_falsum(); }
    if (t.kind == Tok::Word && (t.text == "all" || t.text == "ex")) {
      bool univ = t.text == "all";
      next();
      const Token& vt = peek();
      if (vt.kind != Tok::Word)
        throw SyntaxError(vt.pos, "expected a variable after quantifier");
      auto v = classify_var(vt.text);
      if (!v) throw SyntaxError(vt.pos, "not a variable: '" + vt.text + "'");
      next();
      expect(Tok::Dot, ".");
      FormulaPtr body = parse_formula_top();
      return univ ? mk_forall(*v, body) : mk_exists(*v, body);
    }
    if (t.kind == Tok::Word && t.text == "proves") {
      std::size_t pos = t.pos;
      next();
      expect(Tok::LParen, "(");
      ExprPtr tt = parse_sum();
      expect(Tok::Comma, ",");
      FormulaPtr inner = parse_formula_top();
      expect(Tok::RParen, ")");
      (void)pos;
      return mk_proves(tt, inner);
    }
    // A propositional atom only when not followed by a term operator.
    if (t.kind == Tok::Word && is_prop_name(t.text)) {
      Tok after = toks[p + 1].kind;
      if (after != Tok::Eq && after != Tok::In && after != Tok::Plus && after != Tok::Star) {
        next();
        return mk_prop(t.text);
      }
    }
    // Otherwise: a comparison, possibly of parenthesized terms. A '(' may
    // open either a sub-formula or a term, so try the formula first.
    if (t.kind == Tok::LParen) {
      std::size_t save = p;
      try {
        next();
        FormulaPtr f = parse_formula_top();
        expect(Tok::RParen, ")");
        Tok after = peek().kind;
        if (after == Tok::Eq || after == Tok::In || after == Tok::Plus || after == Tok::Star)
          throw SyntaxError(peek().pos, "term operator after formula");
        return f;
      } catch (const SyntaxError&) {
        p = save;  // fall through to a comparison of terms
      }
    }
    return parse_comparison();
  }

  FormulaPtr parse_comparison() {
    std::size_t pos = peek().pos;
    ExprPtr lhs = parse_sum();
    const Token& op = peek();
    if (op.kind == Tok::Eq) {
      next();
      ExprPtr rhs = parse_sum();
      (void)pos;
      FormulaPtr f = mk_eq(lhs, rhs);
      if (op.level && *op.level != f->level)
        throw SortError("'=" + std::to_string(*op.level) + "' applied to level-" +
                        std::to_string(f->level) + " operands");
      return f;
    }
    if (op.kind == Tok::In) {
      next();
      ExprPtr rhs = parse_sum();
      FormulaPtr f = mk_mem(lhs, rhs);
      if (op.level && *op.level != f->level)
        throw SortError("'in" + std::to_string(*op.level) + "' applied to a level-" +
                        std::to_string(f->level) + " element");
      return f;
    }
    throw SyntaxError(op.pos, "expected '=' or 'in' after term");
  }
};

}  // namespace

SortedVar parse_var_name(const std::string& name) {
  auto v = classify_var(name);
  if (!v) throw SyntaxError(0, "not a variable name: '" + name + "'");
  return *v;
}

FormulaPtr parse_formula(const std::string& text, Lang lang, unsigned s) {
  Lexer lx(text);
  Parser ps{std::move(lx.toks)};
  FormulaPtr f = ps.parse_formula_top();
  if (!ps.at(Tok::End)) throw SyntaxError(ps.peek().pos, "trailing input");
  check_sorted(f, lang, s);
  return f;
}

ExprPtr parse_expr(const std::string& text, Lang lang, unsigned s) {
  Lexer lx(text);
  Parser ps{std::move(lx.toks)};
  ExprPtr e = ps.parse_expr_top();
  if (!ps.at(Tok::End)) throw SyntaxError(ps.peek().pos, "trailing input");
  check_sorted(e, lang, s);
  return e;
}

Parsed parse(const std::string& text, Lang lang, unsigned s) {
  try {
    return parse_formula(text, lang, s);
  } catch (const SyntaxError&) {
    return parse_expr(text, lang, s);
  }
}

std::vector<FormulaPtr> parse_formula_file(const std::string& contents, Lang lang, unsigned s) {
  std::vector<FormulaPtr> out;
  std::size_t start = 0;
  while (start <= contents.size()) {
    std::size_t end = contents.find('\n', start);
    std::string line = contents.substr(start, end == std::string::npos ? end : end - start);
    std::size_t body = line.find_first_not_of(" \t\r");
    if (body != std::string::npos && line[body] != '#') out.push_back(parse_formula(line, lang, s));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace bethforge::syntax
