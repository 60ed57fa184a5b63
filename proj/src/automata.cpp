#include "altdet/automata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

#include "altdet/errors.hpp"

namespace altdet::automata {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw DomainError("alphabet is empty");
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw DomainError("alphabet contains an empty token");
    if (!seen.insert(s).second) throw DomainError("duplicate alphabet symbol '" + s + "'");
  }
}

std::optional<std::size_t> Alphabet::index_of(std::string_view token) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == token) return i;
  return std::nullopt;
}

bool Alphabet::single_char() const {
  return std::all_of(symbols_.begin(), symbols_.end(), [](const std::string& s) { return s.size() == 1; });
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  std::vector<std::string> tokens;
  if (alphabet.single_char()) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) tokens.emplace_back(1, c);
  } else {
    std::istringstream in{std::string(text)};
    for (std::string t; in >> t;) tokens.push_back(t);
  }
  Word w;
  for (const auto& t : tokens) {
    auto i = alphabet.index_of(t);
    if (!i) throw DomainError("symbol '" + t + "' is not in the alphabet");
    w.push_back(*i);
  }
  return w;
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
  std::string out;
  const bool compact = alphabet.single_char();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !compact) out += ' ';
    out += alphabet[w[i]];
  }
  return out;
}

std::vector<Word> all_words(std::size_t k, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (std::size_t a = 0; a < k; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    level_begin = level_end;
  }
  return out;
}

namespace {

void check_shape(const Alphabet& alphabet, std::size_t states, std::size_t rows, const char* kind) {
  if (alphabet.size() == 0) throw DomainError(std::string(kind) + ": alphabet is empty");
  if (rows != states)
    throw DomainError(std::string(kind) + ": " + std::to_string(rows) + " transition rows for " +
                      std::to_string(states) + " states");
}

void check_state(std::size_t states, std::size_t q) {
  if (q >= states) throw DomainError("state " + std::to_string(q) + " out of range");
}

void check_word(const Alphabet& alphabet, const Word& w) {
  for (auto a : w)
    if (a >= alphabet.size()) throw DomainError("symbol index " + std::to_string(a) + " not in the alphabet");
}

}  // namespace

Dfa::Dfa(Alphabet alpha, std::vector<bool> out, std::vector<std::vector<std::size_t>> nxt)
    : alphabet(std::move(alpha)), output(std::move(out)), next(std::move(nxt)) {
  check_shape(alphabet, output.size(), next.size(), "dfa");
  for (const auto& row : next) {
    if (row.size() != alphabet.size()) throw DomainError("dfa: transition row of the wrong width");
    for (auto t : row) check_state(output.size(), t);
  }
}

Nfa::Nfa(Alphabet alpha, std::vector<bool> out, std::vector<std::vector<StateSet>> nxt)
    : alphabet(std::move(alpha)), output(std::move(out)), next(std::move(nxt)) {
  check_shape(alphabet, output.size(), next.size(), "nfa");
  for (const auto& row : next) {
    if (row.size() != alphabet.size()) throw DomainError("nfa: transition row of the wrong width");
    for (const auto& s : row)
      if (s.carrier_size() != output.size()) throw DomainError("nfa: successor set over the wrong carrier");
  }
}

Afa::Afa(Alphabet alpha, std::vector<bool> out, std::vector<std::vector<AltElement>> nxt)
    : alphabet(std::move(alpha)), output(std::move(out)), next(std::move(nxt)) {
  check_shape(alphabet, output.size(), next.size(), "afa");
  for (const auto& row : next) {
    if (row.size() != alphabet.size()) throw DomainError("afa: transition row of the wrong width");
    for (const auto& e : row)
      if (e.carrier_size() != output.size()) throw DomainError("afa: forks over the wrong carrier");
  }
}

bool dfa_accepts(const Dfa& d, std::size_t q, const Word& w) {
  check_state(d.state_count(), q);
  check_word(d.alphabet, w);
  for (auto a : w) q = d.next[q][a];
  return d.output[q];
}

namespace {

// Acceptance of every state on every suffix of w, from the empty suffix backwards.
template <class Step>
std::vector<bool> by_suffix(const std::vector<bool>& output, const Word& w, Step step) {
  std::vector<bool> acc = output;
  for (std::size_t i = w.size(); i-- > 0;) {
    std::vector<bool> prev(output.size());
    for (std::size_t q = 0; q < output.size(); ++q) prev[q] = step(q, w[i], acc);
    acc = std::move(prev);
  }
  return acc;
}

bool all_accept(const StateSet& s, const std::vector<bool>& acc) {
  bool ok = true;
  s.for_each([&](std::size_t q) { ok = ok && acc[q]; });
  return ok;
}

bool some_accept(const StateSet& s, const std::vector<bool>& acc) {
  bool ok = false;
  s.for_each([&](std::size_t q) { ok = ok || acc[q]; });
  return ok;
}

}  // namespace

bool nfa_accepts_existential(const Nfa& n, std::size_t q, const Word& w) {
  check_state(n.state_count(), q);
  check_word(n.alphabet, w);
  return by_suffix(n.output, w, [&](std::size_t p, std::size_t a, const std::vector<bool>& acc) {
    return some_accept(n.next[p][a], acc);
  })[q];
}

bool nfa_accepts_universal(const Nfa& n, std::size_t q, const Word& w) {
  check_state(n.state_count(), q);
  check_word(n.alphabet, w);
  return by_suffix(n.output, w, [&](std::size_t p, std::size_t a, const std::vector<bool>& acc) {
    return all_accept(n.next[p][a], acc);
  })[q];
}

bool afa_accepts(const Afa& a, std::size_t q, const Word& w) {
  check_state(a.state_count(), q);
  check_word(a.alphabet, w);
  return by_suffix(a.output, w, [&](std::size_t p, std::size_t c, const std::vector<bool>& acc) {
    for (const auto& fork : a.next[p][c].forks())
      if (all_accept(fork, acc)) return true;
    return false;
  })[q];
}

std::size_t lang_derivative(const Dfa& d, std::size_t q, std::size_t symbol) {
  check_state(d.state_count(), q);
  if (symbol >= d.alphabet.size()) throw DomainError("symbol index not in the alphabet");
  return d.next[q][symbol];
}

Equivalence dfa_equiv(const Dfa& d1, std::size_t q1, const Dfa& d2, std::size_t q2) {
  if (!(d1.alphabet == d2.alphabet)) throw DomainError("dfa_equiv: the automata have different alphabets");
  check_state(d1.state_count(), q1);
  check_state(d2.state_count(), q2);
  const std::size_t n2 = d2.state_count();
  const std::size_t k = d1.alphabet.size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  // parent pair and symbol for each visited product state
  std::vector<std::size_t> parent(d1.state_count() * n2, none);
  std::vector<std::size_t> via(d1.state_count() * n2, none);
  std::vector<bool> seen(d1.state_count() * n2, false);
  std::deque<std::size_t> queue;
  const std::size_t start = q1 * n2 + q2;
  seen[start] = true;
  queue.push_back(start);
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    const std::size_t a = cur / n2, b = cur % n2;
    if (d1.output[a] != d2.output[b]) {
      Word w;
      for (std::size_t at = cur; at != start; at = parent[at]) w.push_back(via[at]);
      std::reverse(w.begin(), w.end());
      return {false, std::move(w)};
    }
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t nxt = d1.next[a][c] * n2 + d2.next[b][c];
      if (seen[nxt]) continue;
      seen[nxt] = true;
      parent[nxt] = cur;
      via[nxt] = c;
      queue.push_back(nxt);
    }
  }
  return {true, std::nullopt};
}

Nfa as_nfa(const Dfa& d) {
  std::vector<std::vector<StateSet>> next(d.state_count());
  for (std::size_t q = 0; q < d.state_count(); ++q)
    for (auto t : d.next[q]) next[q].push_back(StateSet(d.state_count(), {t}));
  return Nfa(d.alphabet, d.output, std::move(next));
}

Afa parity_afa() {
  constexpr std::size_t n = 5;
  const auto single = [](std::size_t q) { return AltElement(n, {StateSet(n, {q})}); };
  const AltElement split(n, {StateSet(n, {1, 3}), StateSet(n, {2, 4})});
  // columns: a, b
  std::vector<std::vector<AltElement>> next{
      {split, split},
      {single(1), single(2)},
      {single(2), single(1)},
      {single(4), single(3)},
      {single(3), single(4)},
  };
  return Afa(Alphabet({"a", "b"}), {false, false, true, true, false}, std::move(next));
}

}  // namespace altdet::automata
