#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <variant>

#include "bethforge/syntax/ast.hpp"

namespace bethforge::syntax {

using Nat = boost::multiprecision::cpp_int;

// Godel numbering: an expression or formula is serialized pre-order into a
// token sequence t_1..t_k of naturals (constructor tag, then any level /
// kind / index payloads), and the sequence is packed Mendelson-style as
//   code = prod_i p_i ^ (t_i + 1)
// over the primes in order. Injective by unique factorization; decoding
// peels primes and rebuilds the tree by recursive descent.
struct GodelCode {
  Nat value;
  friend bool operator==(const GodelCode&, const GodelCode&) = default;
};

GodelCode godel_encode(const ExprPtr& e);
GodelCode godel_encode(const FormulaPtr& f);

using Decoded = std::variant<FormulaPtr, ExprPtr>;
Decoded godel_decode(const GodelCode& code);  // throws DecodeError

// Token stream view, used by the arithmetized evaluators that recurse on
// codes rather than trees.
std::vector<std::uint64_t> godel_tokens(const GodelCode& code);
GodelCode godel_pack(const std::vector<std::uint64_t>& tokens);

}  // namespace bethforge::syntax
