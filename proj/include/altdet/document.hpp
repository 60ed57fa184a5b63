#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "altdet/automata.hpp"

namespace altdet::io {

enum class Kind { dfa, nfa, afa };

const char* to_string(Kind k);

/// `trans <state> <symbol>: <target>`: a bare name, or one or more `{ ... }` groups.
struct TransitionClause {
  std::string state;
  std::string symbol;
  bool bare = false;
  std::vector<std::vector<std::string>> groups;  // a bare target is one group of one name

  friend bool operator==(const TransitionClause&, const TransitionClause&) = default;
};

/// A validated automaton description in the line-oriented text format.
struct AutomatonDocument {
  Kind kind = Kind::dfa;
  std::vector<std::string> alphabet;
  std::vector<std::string> states;
  std::vector<std::string> accepting;
  std::vector<TransitionClause> transitions;

  std::size_t state_index(std::string_view name) const;

  friend bool operator==(const AutomatonDocument&, const AutomatonDocument&) = default;
};

/// ParseError (with line number, 0 for the document as a whole) on malformed or invalid input.
AutomatonDocument parse_document(std::string_view text);
/// Reads and parses a file; ParseError also when it cannot be opened.
AutomatonDocument load_document(const std::string& path);

/// Canonical text; `comments` are emitted as `#` lines after the declarations.
std::string print_document(const AutomatonDocument& doc, const std::vector<std::string>& comments = {});

automata::Dfa to_dfa(const AutomatonDocument& doc);
automata::Nfa to_nfa(const AutomatonDocument& doc);
automata::Afa to_afa(const AutomatonDocument& doc);

/// States named `names` (one per state); transitions listed state by state, then by symbol.
AutomatonDocument from_dfa(const automata::Dfa& d, const std::vector<std::string>& names);
AutomatonDocument from_nfa(const automata::Nfa& n, const std::vector<std::string>& names);
AutomatonDocument from_afa(const automata::Afa& a, const std::vector<std::string>& names);

}  // namespace altdet::io
