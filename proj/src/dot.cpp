#include "altdet/dot.hpp"

#include <algorithm>

namespace altdet::io {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const AutomatonDocument& doc, const std::optional<std::string>& start) {
  std::string out = "digraph automaton {\n  rankdir=LR;\n";
  if (start) {
    doc.state_index(*start);
    out += "  __start [shape=point];\n";
  }
  for (const auto& q : doc.states) {
    const bool acc = std::find(doc.accepting.begin(), doc.accepting.end(), q) != doc.accepting.end();
    out += "  " + quote(q) + " [shape=" + (acc ? "doublecircle" : "circle") + "];\n";
  }
  if (start) out += "  __start -> " + quote(*start) + ";\n";
  std::size_t fork_id = 0;
  for (const auto& t : doc.transitions) {
    const std::string label = " [label=" + quote(t.symbol) + "]";
    if (doc.kind != Kind::afa) {
      for (const auto& target : t.groups.at(0)) out += "  " + quote(t.state) + " -> " + quote(target) + label + ";\n";
      continue;
    }
    for (const auto& fork : t.groups) {
      const std::string node = quote("__fork" + std::to_string(fork_id++));
      out += "  " + node + " [shape=diamond,label=\"\",width=0.2,height=0.2];\n";
      out += "  " + quote(t.state) + " -> " + node + label + ";\n";
      for (const auto& target : fork) out += "  " + node + " -> " + quote(target) + ";\n";
    }
  }
  return out + "}\n";
}

}  // namespace altdet::io
