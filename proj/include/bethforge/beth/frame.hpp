#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bethforge/syntax/ast.hpp"

namespace bethforge::beth {

using namespace bethforge::syntax;

using FunId = int;

// Finite rooted successor graph whose unfolding is the Beth tree. A state
// with no successors is a leaf and terminates maximal paths.
struct BethFrame {
  std::vector<std::string> names;
  int root = 0;
  std::vector<std::vector<int>> succ;
  std::vector<std::set<std::string>> val;  // atoms true per state, monotone along succ

  unsigned num_carrier = 2;  // level-0 carrier {0 .. num_carrier-1}

  // Level-1 function objects assignable to functional variables.
  struct FunObject {
    std::string name;
    enum class Kind {
      StateTable,    // persistent per-state tables
      BranchReader   // f(k) = 1 if step k of the walk enters `target`, else 0
    } kind = Kind::StateTable;
    std::map<int, std::map<std::uint64_t, std::uint64_t>> by_state;
    int target = -1;  // BranchReader
  };
  std::vector<FunObject> funs;

  int state_index(const std::string& name) const;
  FunId fun_index(const std::string& name) const;
  bool is_leaf(int s) const { return succ[s].empty(); }
  std::size_t size() const { return succ.size(); }
};

struct Violation {
  std::string what;
};

// Empty iff valuation monotonicity, interpretation persistence and basic
// structure hold; each violation names the offending states and atom.
std::vector<Violation> validate_frame(const BethFrame& f);

// Walks are state sequences starting at the root, consecutive under succ.
// lh(walk) = number of steps, so the root walk has lh 0.
using WalkNode = std::vector<int>;

inline std::size_t lh(const WalkNode& w) { return w.size() - 1; }

WalkNode root_walk(const BethFrame& f);
bool walk_valid(const BethFrame& f, const WalkNode& w);
WalkNode parse_walk(const BethFrame& f, const std::string& dotted);  // "r.r.t"
std::string show_walk(const BethFrame& f, const WalkNode& w);

// Plain-text frame format:
//   states r t
//   root r
//   succ r: r t
//   succ t:
//   val t: p q
//   carrier 3
//   fun f state r: 0 -> 1, 2 -> 0
//   fun f branch-to o
BethFrame parse_frame(const std::string& contents);
std::string format_frame(const BethFrame& f);

}  // namespace bethforge::beth
