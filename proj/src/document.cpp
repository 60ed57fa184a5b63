#include "altdet/document.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "altdet/errors.hpp"

namespace altdet::io {

const char* to_string(Kind k) {
  switch (k) {
    case Kind::dfa:
      return "dfa";
    case Kind::nfa:
      return "nfa";
    case Kind::afa:
      return "afa";
  }
  return "?";
}

std::size_t AutomatonDocument::state_index(std::string_view name) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == name) return i;
  throw DomainError("unknown state '" + std::string(name) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_names(std::string_view s, std::size_t line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string t; in >> t;) {
    if (t.find_first_of("{}:") != std::string::npos) throw ParseError(line, "invalid name '" + t + "'");
    out.push_back(t);
  }
  return out;
}

TransitionClause parse_transition(std::string_view rest, std::size_t line) {
  const auto colon = rest.find(':');
  if (colon == std::string_view::npos) throw ParseError(line, "expected 'trans <state> <symbol>: <target>'");
  const auto header = split_names(rest.substr(0, colon), line);
  if (header.size() != 2) throw ParseError(line, "expected 'trans <state> <symbol>: <target>'");
  TransitionClause t{header[0], header[1], false, {}};
  std::string_view target = trim(rest.substr(colon + 1));
  if (target.empty()) throw ParseError(line, "transition has no target");
  if (target.front() != '{') {
    if (target.find_first_of("{}") != std::string_view::npos)
      throw ParseError(line, "mixed bare name and brace groups in target");
    auto names = split_names(target, line);
    if (names.size() != 1) throw ParseError(line, "a bare target must be a single state name");
    t.bare = true;
    t.groups.push_back(std::move(names));
    return t;
  }
  while (!target.empty()) {
    if (target.front() != '{') throw ParseError(line, "expected '{' in target");
    const auto close = target.find('}');
    if (close == std::string_view::npos) throw ParseError(line, "unclosed '{' in target");
    const std::string_view body = target.substr(1, close - 1);
    if (body.find('{') != std::string_view::npos) throw ParseError(line, "nested '{' in target");
    t.groups.push_back(split_names(body, line));
    target = trim(target.substr(close + 1));
  }
  return t;
}

template <class T>
void declare(std::optional<T>& slot, std::size_t& slot_line, T value, std::size_t line, const std::string& key) {
  if (slot) throw ParseError(line, "duplicate '" + key + "' declaration (first on line " + std::to_string(slot_line) + ")");
  slot = std::move(value);
  slot_line = line;
}

void require_unique(const std::vector<std::string>& names, std::size_t line, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw ParseError(line, std::string("duplicate ") + what + " '" + n + "'");
}

}  // namespace

AutomatonDocument parse_document(std::string_view text) {
  std::optional<Kind> kind;
  std::optional<std::vector<std::string>> alphabet, states, accepting;
  std::size_t kind_line = 0, alphabet_line = 0, states_line = 0, accepting_line = 0;
  std::vector<std::pair<TransitionClause, std::size_t>> clauses;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.rfind("trans", 0) == 0 && line.size() > 5 && std::isspace(static_cast<unsigned char>(line[5]))) {
      clauses.emplace_back(parse_transition(line.substr(5), line_no), line_no);
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "expected a declaration '<key>: ...'");
    const std::string key(trim(line.substr(0, colon)));
    auto values = split_names(line.substr(colon + 1), line_no);
    if (key == "kind") {
      if (values.size() != 1) throw ParseError(line_no, "expected 'kind: <dfa|nfa|afa>'");
      Kind k;
      if (values[0] == "dfa") {
        k = Kind::dfa;
      } else if (values[0] == "nfa") {
        k = Kind::nfa;
      } else if (values[0] == "afa") {
        k = Kind::afa;
      } else {
        throw ParseError(line_no, "unknown kind '" + values[0] + "'");
      }
      declare(kind, kind_line, k, line_no, key);
    } else if (key == "alphabet") {
      declare(alphabet, alphabet_line, std::move(values), line_no, key);
    } else if (key == "states") {
      declare(states, states_line, std::move(values), line_no, key);
    } else if (key == "accepting") {
      declare(accepting, accepting_line, std::move(values), line_no, key);
    } else {
      throw ParseError(line_no, "unknown declaration '" + key + "'");
    }
  }

  if (!kind) throw ParseError(0, "missing 'kind' declaration");
  if (!alphabet) throw ParseError(0, "missing 'alphabet' declaration");
  if (!states) throw ParseError(0, "missing 'states' declaration");
  if (alphabet->empty()) throw ParseError(alphabet_line, "empty alphabet");
  if (states->empty()) throw ParseError(states_line, "no states declared");
  require_unique(*alphabet, alphabet_line, "symbol");
  require_unique(*states, states_line, "state name");

  AutomatonDocument doc;
  doc.kind = *kind;
  doc.alphabet = std::move(*alphabet);
  doc.states = std::move(*states);
  if (accepting) {
    require_unique(*accepting, accepting_line, "accepting state");
    doc.accepting = std::move(*accepting);
  }
  const std::set<std::string> state_names(doc.states.begin(), doc.states.end());
  const std::set<std::string> symbols(doc.alphabet.begin(), doc.alphabet.end());
  for (const auto& a : doc.accepting)
    if (!state_names.count(a)) throw ParseError(accepting_line, "unknown state '" + a + "' in accepting");

  std::map<std::pair<std::string, std::string>, std::size_t> seen;
  for (auto& [t, line] : clauses) {
    if (!state_names.count(t.state)) throw ParseError(line, "unknown state '" + t.state + "'");
    if (!symbols.count(t.symbol)) throw ParseError(line, "unknown symbol '" + t.symbol + "'");
    if (auto [it, fresh] = seen.emplace(std::pair{t.state, t.symbol}, line); !fresh)
      throw ParseError(line, "duplicate transition for state '" + t.state + "' on symbol '" + t.symbol +
                                 "' (first on line " + std::to_string(it->second) + ")");
    switch (doc.kind) {
      case Kind::dfa:
        if (!t.bare) throw ParseError(line, "dfa transition must name a single target state");
        break;
      case Kind::nfa:
        if (t.bare || t.groups.size() != 1) throw ParseError(line, "nfa transition must have exactly one { ... } group");
        break;
      case Kind::afa:
        if (t.bare) throw ParseError(line, "afa transition must list forks as { ... } groups");
        break;
    }
    for (const auto& g : t.groups)
      for (const auto& name : g)
        if (!state_names.count(name)) throw ParseError(line, "unknown state '" + name + "' in target");
    doc.transitions.push_back(std::move(t));
  }
  if (doc.kind == Kind::dfa)
    for (const auto& q : doc.states)
      for (const auto& a : doc.alphabet)
        if (!seen.count({q, a}))
          throw ParseError(0, "dfa has no transition for state '" + q + "' on symbol '" + a + "'");
  return doc;
}

AutomatonDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += " " + x;
  return out;
}

}  // namespace

std::string print_document(const AutomatonDocument& doc, const std::vector<std::string>& comments) {
  std::string out;
  out += "kind: " + std::string(to_string(doc.kind)) + "\n";
  out += "alphabet:" + join(doc.alphabet) + "\n";
  out += "states:" + join(doc.states) + "\n";
  out += "accepting:" + join(doc.accepting) + "\n";
  for (const auto& c : comments) out += "# " + c + "\n";
  for (const auto& t : doc.transitions) {
    out += "trans " + t.state + " " + t.symbol + ":";
    if (t.bare) {
      out += " " + t.groups.at(0).at(0);
    } else {
      for (const auto& g : t.groups) {
        out += " {";
        for (std::size_t i = 0; i < g.size(); ++i) out += (i ? " " : "") + g[i];
        out += "}";
      }
    }
    out += "\n";
  }
  return out;
}

namespace {

std::vector<bool> outputs(const AutomatonDocument& doc) {
  std::vector<bool> out(doc.states.size(), false);
  for (const auto& a : doc.accepting) out[doc.state_index(a)] = true;
  return out;
}

StateSet group_set(const AutomatonDocument& doc, const std::vector<std::string>& group) {
  StateSet s(doc.states.size());
  for (const auto& name : group) s.insert(doc.state_index(name));
  return s;
}

std::size_t symbol_index(const AutomatonDocument& doc, const std::string& symbol) {
  for (std::size_t i = 0; i < doc.alphabet.size(); ++i)
    if (doc.alphabet[i] == symbol) return i;
  throw DomainError("unknown symbol '" + symbol + "'");
}

void require_kind(const AutomatonDocument& doc, Kind k) {
  if (doc.kind != k)
    throw DomainError(std::string("expected a ") + to_string(k) + " document, got " + to_string(doc.kind));
}

}  // namespace

automata::Dfa to_dfa(const AutomatonDocument& doc) {
  require_kind(doc, Kind::dfa);
  std::vector<std::vector<std::size_t>> next(doc.states.size(), std::vector<std::size_t>(doc.alphabet.size()));
  for (const auto& t : doc.transitions)
    next[doc.state_index(t.state)][symbol_index(doc, t.symbol)] = doc.state_index(t.groups.at(0).at(0));
  return automata::Dfa(automata::Alphabet(doc.alphabet), outputs(doc), std::move(next));
}

automata::Nfa to_nfa(const AutomatonDocument& doc) {
  if (doc.kind == Kind::dfa) return automata::as_nfa(to_dfa(doc));
  require_kind(doc, Kind::nfa);
  const std::size_t n = doc.states.size();
  std::vector<std::vector<StateSet>> next(n, std::vector<StateSet>(doc.alphabet.size(), StateSet(n)));
  for (const auto& t : doc.transitions)
    next[doc.state_index(t.state)][symbol_index(doc, t.symbol)] = group_set(doc, t.groups.at(0));
  return automata::Nfa(automata::Alphabet(doc.alphabet), outputs(doc), std::move(next));
}

automata::Afa to_afa(const AutomatonDocument& doc) {
  require_kind(doc, Kind::afa);
  const std::size_t n = doc.states.size();
  std::vector<std::vector<monad::AltElement>> next(
      n, std::vector<monad::AltElement>(doc.alphabet.size(), monad::AltElement::bottom(n)));
  for (const auto& t : doc.transitions) {
    std::vector<StateSet> forks;
    for (const auto& g : t.groups) forks.push_back(group_set(doc, g));
    next[doc.state_index(t.state)][symbol_index(doc, t.symbol)] = monad::AltElement(n, std::move(forks));
  }
  return automata::Afa(automata::Alphabet(doc.alphabet), outputs(doc), std::move(next));
}

namespace {

AutomatonDocument skeleton(Kind kind, const automata::Alphabet& alphabet, const std::vector<bool>& output,
                           const std::vector<std::string>& names) {
  if (names.size() != output.size()) throw DomainError("one name per state expected");
  AutomatonDocument doc;
  doc.kind = kind;
  doc.alphabet = alphabet.symbols();
  doc.states = names;
  for (std::size_t q = 0; q < output.size(); ++q)
    if (output[q]) doc.accepting.push_back(names[q]);
  return doc;
}

std::vector<std::string> named(const StateSet& s, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  s.for_each([&](std::size_t q) { out.push_back(names[q]); });
  return out;
}

}  // namespace

AutomatonDocument from_dfa(const automata::Dfa& d, const std::vector<std::string>& names) {
  auto doc = skeleton(Kind::dfa, d.alphabet, d.output, names);
  for (std::size_t q = 0; q < d.state_count(); ++q)
    for (std::size_t a = 0; a < d.alphabet.size(); ++a)
      doc.transitions.push_back({names[q], d.alphabet[a], true, {{names[d.next[q][a]]}}});
  return doc;
}

AutomatonDocument from_nfa(const automata::Nfa& n, const std::vector<std::string>& names) {
  auto doc = skeleton(Kind::nfa, n.alphabet, n.output, names);
  for (std::size_t q = 0; q < n.state_count(); ++q)
    for (std::size_t a = 0; a < n.alphabet.size(); ++a)
      doc.transitions.push_back({names[q], n.alphabet[a], false, {named(n.next[q][a], names)}});
  return doc;
}

AutomatonDocument from_afa(const automata::Afa& a, const std::vector<std::string>& names) {
  auto doc = skeleton(Kind::afa, a.alphabet, a.output, names);
  for (std::size_t q = 0; q < a.state_count(); ++q)
    for (std::size_t c = 0; c < a.alphabet.size(); ++c) {
      const auto& forks = a.next[q][c].forks();
      // An empty fork set is written by omitting the transition.
      if (forks.empty()) continue;
      TransitionClause t{names[q], a.alphabet[c], false, {}};
      for (const auto& f : forks) t.groups.push_back(named(f, names));
      doc.transitions.push_back(std::move(t));
    }
  return doc;
}

}  // namespace altdet::io
