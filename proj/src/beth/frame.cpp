#include "bethforge/beth/frame.hpp"

#include <sstream>

namespace bethforge::beth {

int BethFrame::state_index(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  throw DomainError("no state named '" + name + "'");
}

FunId BethFrame::fun_index(const std::string& name) const {
  for (std::size_t i = 0; i < funs.size(); ++i)
    if (funs[i].name == name) return static_cast<FunId>(i);
  throw DomainError("no function object named '" + name + "'");
}

std::vector<Violation> validate_frame(const BethFrame& f) {
  std::vector<Violation> out;
  if (f.succ.empty()) {
    out.push_back({"no root: frame has no states"});
    return out;
  }
  if (f.root < 0 || f.root >= static_cast<int>(f.size()))
    out.push_back({"root index out of range"});
  if (f.names.size() != f.size() || f.val.size() != f.size())
    out.push_back({"state table sizes disagree"});
  for (std::size_t s = 0; s < f.size(); ++s)
    for (int t : f.succ[s])
      if (t < 0 || t >= static_cast<int>(f.size()))
        out.push_back({"successor of " + f.names[s] + " out of range"});
  if (!out.empty()) return out;

  for (std::size_t s = 0; s < f.size(); ++s) {
    for (int t : f.succ[s]) {
      for (const auto& atom : f.val[s]) {
        if (!f.val[t].count(atom))
          out.push_back({"valuation not monotone: " + atom + " true at " + f.names[s] +
                         " but not at successor " + f.names[t]});
      }
    }
  }
  for (const auto& fun : f.funs) {
    if (fun.kind == BethFrame::FunObject::Kind::BranchReader) {
      if (fun.target < 0 || fun.target >= static_cast<int>(f.size()))
        out.push_back({"function " + fun.name + ": branch target out of range"});
      continue;
    }
    for (const auto& [s, table] : fun.by_state) {
      if (s < 0 || s >= static_cast<int>(f.size())) {
        out.push_back({"function " + fun.name + ": state out of range"});
        continue;
      }
      for (int t : f.succ[s]) {
        auto it = fun.by_state.find(t);
        for (const auto& [arg, value] : table) {
          if (it == fun.by_state.end() || !it->second.count(arg) ||
              it->second.at(arg) != value)
            out.push_back({"function " + fun.name + ": entry (" + std::to_string(arg) +
                           ") at " + f.names[s] + " not persistent at successor " +
                           f.names[t]});
        }
      }
    }
  }
  return out;
}

WalkNode root_walk(const BethFrame& f) { return WalkNode{f.root}; }

bool walk_valid(const BethFrame& f, const WalkNode& w) {
  if (w.empty() || w.front() != f.root) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const auto& s = f.succ[w[i]];
    bool ok = false;
    for (int t : s) ok = ok || t == w[i + 1];
    if (!ok) return false;
  }
  return true;
}

WalkNode parse_walk(const BethFrame& f, const std::string& dotted) {
  WalkNode w;
  std::size_t start = 0;
  while (start <= dotted.size()) {
    auto dot = dotted.find('.', start);
    std::string name = dotted.substr(start, dot == std::string::npos ? dot : dot - start);
    if (!name.empty()) w.push_back(f.state_index(name));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  if (!walk_valid(f, w)) throw DomainError("'" + dotted + "' is not a walk from the root");
  return w;
}

std::string show_walk(const BethFrame& f, const WalkNode& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ".";
    out += f.names[w[i]];
  }
  return out;
}

namespace {
std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}
}  // namespace

BethFrame parse_frame(const std::string& contents) {
  BethFrame f;
  f.num_carrier = 2;
  std::istringstream in(contents);
  std::string line;
  long lineno = 0;
  auto fail = [&](const std::string& why) { throw SyntaxError(lineno, "frame: " + why); };
  std::string rootname;
  std::vector<std::pair<std::string, std::string>> succ_lines, val_lines;
  std::vector<std::string> fun_lines;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "states") {
      for (std::size_t i = 1; i < toks.size(); ++i) f.names.push_back(toks[i]);
    } else if (toks[0] == "root") {
      if (toks.size() != 2) fail("root wants one state");
      rootname = toks[1];
    } else if (toks[0] == "carrier") {
      if (toks.size() != 2) fail("carrier wants a number");
      f.num_carrier = static_cast<unsigned>(std::stoul(toks[1]));
    } else if (toks[0] == "succ" || toks[0] == "val") {
      auto colon = line.find(':');
      if (colon == std::string::npos) fail(toks[0] + " line needs ':'");
      std::string head = line.substr(0, colon);
      auto ht = split_ws(head);
      if (ht.size() != 2) fail(toks[0] + " wants one state before ':'");
      (toks[0] == "succ" ? succ_lines : val_lines)
          .push_back({ht[1], line.substr(colon + 1)});
    } else if (toks[0] == "fun") {
      fun_lines.push_back(line);
    } else {
      fail("unknown directive '" + toks[0] + "'");
    }
  }
  if (f.names.empty()) throw SyntaxError(0, "frame: no states");
  f.succ.assign(f.names.size(), {});
  f.val.assign(f.names.size(), {});
  f.root = rootname.empty() ? 0 : f.state_index(rootname);
  for (auto& [state, rest] : succ_lines) {
    int s = f.state_index(state);
    for (const auto& t : split_ws(rest)) f.succ[s].push_back(f.state_index(t));
  }
  for (auto& [state, rest] : val_lines) {
    int s = f.state_index(state);
    for (const auto& a : split_ws(rest)) f.val[s].insert(a);
  }
  for (const auto& fl : fun_lines) {
    auto toks = split_ws(fl);
    // fun <name> branch-to <state>   |   fun <name> state <state>: a -> v, ...
    if (toks.size() >= 4 && toks[2] == "branch-to") {
      BethFrame::FunObject fo;
      fo.name = toks[1];
      fo.kind = BethFrame::FunObject::Kind::BranchReader;
      fo.target = f.state_index(toks[3]);
      f.funs.push_back(fo);
      continue;
    }
    if (toks.size() >= 4 && toks[2] == "state") {
      auto colon = fl.find(':');
      if (colon == std::string::npos) throw SyntaxError(0, "frame: fun state line needs ':'");
      std::string name = toks[1];
      int s = f.state_index(toks[3].substr(0, toks[3].find(':')));
      FunId id = -1;
      for (std::size_t i = 0; i < f.funs.size(); ++i)
        if (f.funs[i].name == name) id = static_cast<FunId>(i);
      if (id < 0) {
        BethFrame::FunObject fo;
        fo.name = name;
        f.funs.push_back(fo);
        id = static_cast<FunId>(f.funs.size() - 1);
      }
      std::string rest = fl.substr(colon + 1);
      std::istringstream rp(rest);
      std::string piece;
      while (std::getline(rp, piece, ',')) {
        auto arrow = piece.find("->");
        if (arrow == std::string::npos) continue;
        std::uint64_t a = std::stoull(piece.substr(0, arrow));
        std::uint64_t v = std::stoull(piece.substr(arrow + 2));
        f.funs[id].by_state[s][a] = v;
      }
      continue;
    }
    throw SyntaxError(0, "frame: malformed fun line '" + fl + "'");
  }
  return f;
}

std::string format_frame(const BethFrame& f) {
  std::ostringstream out;
  out << "states";
  for (const auto& n : f.names) out << " " << n;
  out << "\nroot " << f.names[f.root] << "\ncarrier " << f.num_carrier << "\n";
  for (std::size_t s = 0; s < f.size(); ++s) {
    out << "succ " << f.names[s] << ":";
    for (int t : f.succ[s]) out << " " << f.names[t];
    out << "\n";
  }
  for (std::size_t s = 0; s < f.size(); ++s) {
    if (f.val[s].empty()) continue;
    out << "val " << f.names[s] << ":";
    for (const auto& a : f.val[s]) out << " " << a;
    out << "\n";
  }
  for (const auto& fo : f.funs) {
    if (fo.kind == BethFrame::FunObject::Kind::BranchReader) {
      out << "fun " << fo.name << " branch-to " << f.names[fo.target] << "\n";
      continue;
    }
    for (const auto& [s, table] : fo.by_state) {
      out << "fun " << fo.name << " state " << f.names[s] << ":";
      bool first = true;
      for (const auto& [a, v] : table) {
        out << (first ? " " : ", ") << a << " -> " << v;
        first = false;
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace bethforge::beth
