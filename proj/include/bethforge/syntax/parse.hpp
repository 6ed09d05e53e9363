#pragma once

#include <string>
#include <variant>
#include <vector>

#include "bethforge/syntax/ast.hpp"

namespace bethforge::syntax {

// Concrete syntax (one formula per line in files, '#' starts a comment):
//   terms        0, 12, x3, S(t), t + t, t * t, K1, F1_0, A1_0, LF1_0, X1_0,
//                N2(Z), Ap1(Z, t), cat(t, t), bar(Z, t), kap(t, t)
//   atoms        t =0 t, t in0 X1_0, proves(t, phi), p (propositional)
//   formulas     _|_, ~phi, phi & phi, phi | phi, phi -> phi,
//                all v. phi, ex v. phi
// '=' and 'in' may omit the level; it is inferred from the operands.
// Number variables use letters x y z u v w; functional variables F/G/H,
// lawlike A/B/C, lawless LF/LG/LH, set variables X/Y/Z (TI only).

FormulaPtr parse_formula(const std::string& text, Lang lang, unsigned s);
ExprPtr parse_expr(const std::string& text, Lang lang, unsigned s);

using Parsed = std::variant<FormulaPtr, ExprPtr>;
Parsed parse(const std::string& text, Lang lang, unsigned s);

// Parses a variable name such as "x0", "F1_2", "LF1_0".
SortedVar parse_var_name(const std::string& name);

std::vector<FormulaPtr> parse_formula_file(const std::string& contents, Lang lang, unsigned s);

}  // namespace bethforge::syntax
