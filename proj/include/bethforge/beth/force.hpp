#pragma once

#include <optional>
#include <variant>

#include "bethforge/beth/frame.hpp"

namespace bethforge::beth {

// An evaluated formula binds its parameters to frame objects: numbers for
// level-0 variables, function objects for level-1 variables.
using Binding = std::variant<std::uint64_t, FunId>;
using Env = std::map<SortedVar, Binding>;

// Quantifier candidate carriers. Defaults come from the frame: numbers
// 0..num_carrier-1 and every function object.
struct Carriers {
  std::vector<std::uint64_t> numbers;
  std::vector<FunId> level1;

  static Carriers defaults(const BethFrame& f);
};

// The forcing relation at a walk. Atomic, disjunction and existential
// clauses are bar conditions computed as least fixpoints over states once
// the walk passes the formula's horizon (the depth past which every
// walk-sensitive atom is frozen); implication scans all extensions.
bool force(const BethFrame& f, const WalkNode& at, const FormulaPtr& phi, const Env& env,
           const Carriers& car);
bool force(const BethFrame& f, const WalkNode& at, const FormulaPtr& phi);

// Valuation clause for the creating-subject atom |-_t inner followed by the
// atomic bar clause on top of it.
bool force_cs_atom(const BethFrame& f, const WalkNode& at, const ExprPtr& t,
                   const FormulaPtr& inner, const Env& env, const Carriers& car);

// Exhaustive oracle for finite-tree frames: forced iff every maximal walk
// through `at` has a prefix (or extension node on the walk) satisfying the
// clause; used by the invariant suites, not by force itself.
bool force_paths_oracle(const BethFrame& f, const WalkNode& at, const FormulaPtr& phi,
                        const Env& env, const Carriers& car);

// Interval brute force over the explicit unfolding to `depth`; first = lower
// bound, second = upper bound. They agree when depth suffices to decide.
std::pair<bool, bool> force_unfold_bounds(const BethFrame& f, const WalkNode& at,
                                          const FormulaPtr& phi, const Env& env,
                                          const Carriers& car, std::size_t depth);

}  // namespace bethforge::beth
