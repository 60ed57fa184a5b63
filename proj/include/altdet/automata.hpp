#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "altdet/alt.hpp"
#include "altdet/state_set.hpp"

namespace altdet::automata {

using monad::AltElement;

/// Ordered, duplicate-free, non-empty list of symbol tokens.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& operator[](std::size_t i) const { return symbols_.at(i); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  std::optional<std::size_t> index_of(std::string_view token) const;
  /// Every token is a single character, so words can be written without separators.
  bool single_char() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
};

/// Symbol indices into an alphabet.
using Word = std::vector<std::size_t>;

/// Tokens separated by whitespace, or one token per character when the alphabet is single_char().
Word parse_word(const Alphabet& alphabet, std::string_view text);
std::string format_word(const Alphabet& alphabet, const Word& w);

/// Every word over `k` letters of length <= max_len, shortest first, then lexicographic.
std::vector<Word> all_words(std::size_t k, std::size_t max_len);

/// Coalgebra for 2 × (−)^A.
struct Dfa {
  Alphabet alphabet;
  std::vector<bool> output;
  std::vector<std::vector<std::size_t>> next;  // next[q][a]

  Dfa() = default;
  Dfa(Alphabet alphabet, std::vector<bool> output, std::vector<std::vector<std::size_t>> next);
  std::size_t state_count() const noexcept { return output.size(); }
};

/// Coalgebra for 2 × P(−)^A.
struct Nfa {
  Alphabet alphabet;
  std::vector<bool> output;
  std::vector<std::vector<StateSet>> next;

  Nfa() = default;
  Nfa(Alphabet alphabet, std::vector<bool> output, std::vector<std::vector<StateSet>> next);
  std::size_t state_count() const noexcept { return output.size(); }
};

/// Coalgebra for 2 × Alt(−)^A: each transition is a canonical antichain of forks.
struct Afa {
  Alphabet alphabet;
  std::vector<bool> output;
  std::vector<std::vector<AltElement>> next;

  Afa() = default;
  Afa(Alphabet alphabet, std::vector<bool> output, std::vector<std::vector<AltElement>> next);
  std::size_t state_count() const noexcept { return output.size(); }
};

bool dfa_accepts(const Dfa& d, std::size_t q, const Word& w);
/// ε ↦ o(q); a·w ↦ some successor on a accepts w.
bool nfa_accepts_existential(const Nfa& n, std::size_t q, const Word& w);
/// ε ↦ o(q); a·w ↦ every successor on a accepts w.
bool nfa_accepts_universal(const Nfa& n, std::size_t q, const Word& w);
/// ε ↦ o(q); a·w ↦ some fork on a has every state accepting w. Tabulated over suffixes.
bool afa_accepts(const Afa& a, std::size_t q, const Word& w);

/// The state reached by reading `symbol`; it accepts exactly the a-derivative of q's language.
std::size_t lang_derivative(const Dfa& d, std::size_t q, std::size_t symbol);

struct Equivalence {
  bool equivalent = true;
  /// Shortest word accepted by exactly one side.
  std::optional<Word> witness;
};

/// Breadth-first search of the product; both machines must share the alphabet.
Equivalence dfa_equiv(const Dfa& d1, std::size_t q1, const Dfa& d2, std::size_t q2);

/// The DFA read as an NFA with singleton successor sets.
Nfa as_nfa(const Dfa& d);

/// Five-state AFA over {a, b}: from q0, words with as many a's as b's modulo 2.
Afa parity_afa();

}  // namespace altdet::automata
