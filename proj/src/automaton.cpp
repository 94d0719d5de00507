#include "regret/automaton.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace regret {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    if (!tok.empty() && tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw parse_error("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

int WeightedAutomaton::find_state(const std::string& name) const {
  for (int i = 0; i < state_count(); ++i)
    if (state_names[i] == name) return i;
  return -1;
}

int WeightedAutomaton::find_symbol(const std::string& name) const {
  for (int i = 0; i < symbol_count(); ++i)
    if (alphabet[i] == name) return i;
  return -1;
}

bool WeightedAutomaton::deterministic() const {
  for (const auto& per_state : delta)
    for (const auto& ts : per_state)
      if (ts.size() > 1) return false;
  return true;
}

std::vector<Rational> WeightedAutomaton::weight_values() const {
  std::vector<Rational> ws;
  for (const Transition& t : transitions) ws.push_back(t.weight);
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return ws;
}

void WeightedAutomaton::finalize() {
  if (alphabet.empty()) throw validation_error("automaton needs a nonempty alphabet");
  delta.assign(state_names.size(), std::vector<std::vector<int>>(alphabet.size()));
  max_abs_weight = 0;
  for (int t = 0; t < transition_count(); ++t) {
    const Transition& tr = transitions[t];
    if (tr.src < 0 || tr.src >= state_count() || tr.dst < 0 || tr.dst >= state_count() ||
        tr.symbol < 0 || tr.symbol >= symbol_count())
      throw validation_error("transition endpoint out of range");
    delta[tr.src][tr.symbol].push_back(t);
    Rational a = rational_abs(tr.weight);
    if (a > max_abs_weight) max_abs_weight = a;
  }
  if (initial < 0 || initial >= state_count())
    throw validation_error("missing or unknown initial state");
  for (int q = 0; q < state_count(); ++q)
    for (int s = 0; s < symbol_count(); ++s)
      if (delta[q][s].empty())
        throw validation_error("state '" + state_names[q] + "' has no transition on '" +
                               alphabet[s] + "' (automaton must be total)");
}

WeightedAutomaton parse_automaton(std::istream& in) {
  WeightedAutomaton a;
  bool saw_header = false;
  bool saw_init = false;
  std::string init_name;
  std::string line;
  int line_no = 0;
  struct PendingTrans {
    std::string src, sym, dst, weight;
    int line_no;
  };
  std::vector<PendingTrans> pending;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    if (!saw_header) {
      if (tok.size() != 1 || tok[0] != "automaton") fail(line_no, "expected 'automaton' header");
      saw_header = true;
      continue;
    }
    if (tok[0] == "alphabet") {
      if (tok.size() < 2) fail(line_no, "expected 'alphabet <sym>...'");
      for (size_t i = 1; i < tok.size(); ++i) {
        if (a.find_symbol(tok[i]) >= 0) fail(line_no, "duplicate symbol '" + tok[i] + "'");
        a.alphabet.push_back(tok[i]);
      }
    } else if (tok[0] == "state") {
      if (tok.size() != 2) fail(line_no, "expected 'state <id>'");
      if (a.find_state(tok[1]) >= 0) fail(line_no, "duplicate state '" + tok[1] + "'");
      a.state_names.push_back(tok[1]);
    } else if (tok[0] == "init") {
      if (tok.size() != 2) fail(line_no, "expected 'init <id>'");
      if (saw_init) fail(line_no, "duplicate init line");
      saw_init = true;
      init_name = tok[1];
    } else if (tok[0] == "trans") {
      if (tok.size() != 5) fail(line_no, "expected 'trans <src> <sym> <dst> <p[/q]>'");
      pending.push_back({tok[1], tok[2], tok[3], tok[4], line_no});
    } else {
      fail(line_no, "unknown directive '" + tok[0] + "'");
    }
  }
  if (!saw_header) throw parse_error("missing 'automaton' header");
  if (!saw_init) throw parse_error("missing 'init' line");
  for (const PendingTrans& pt : pending) {
    Transition t;
    t.src = a.find_state(pt.src);
    t.dst = a.find_state(pt.dst);
    t.symbol = a.find_symbol(pt.sym);
    if (t.src < 0) fail(pt.line_no, "unknown state '" + pt.src + "'");
    if (t.dst < 0) fail(pt.line_no, "unknown state '" + pt.dst + "'");
    if (t.symbol < 0) fail(pt.line_no, "unknown symbol '" + pt.sym + "'");
    try {
      t.weight = parse_rational(pt.weight);
    } catch (const parse_error& err) {
      fail(pt.line_no, err.what());
    }
    a.transitions.push_back(t);
  }
  a.initial = a.find_state(init_name);
  if (a.initial < 0) throw parse_error("unknown initial state '" + init_name + "'");
  a.finalize();
  return a;
}

WeightedAutomaton parse_automaton_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_automaton(ss);
}

WeightedAutomaton load_automaton_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw parse_error("cannot open automaton file: " + path);
  return parse_automaton(f);
}

std::string serialize_automaton(const WeightedAutomaton& a) {
  std::ostringstream out;
  out << "automaton\n";
  out << "alphabet";
  for (const std::string& s : a.alphabet) out << ' ' << s;
  out << '\n';
  for (const std::string& q : a.state_names) out << "state " << q << '\n';
  out << "init " << a.state_names[a.initial] << '\n';
  for (const Transition& t : a.transitions)
    out << "trans " << a.state_names[t.src] << ' ' << a.alphabet[t.symbol] << ' '
        << a.state_names[t.dst] << ' ' << to_string(t.weight) << '\n';
  return out.str();
}

}  // namespace regret
