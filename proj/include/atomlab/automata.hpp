#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "atomlab/semigroup.hpp"
#include "atomlab/transform.hpp"

namespace atomlab {

// A complete DFA on Q_n = {1,..,n}. Letters act as transformations of Q_n.
struct Dfa {
  int n;
  std::vector<std::string> alphabet;
  std::vector<Transformation> delta;  // parallel to alphabet
  int initial;                        // 1-based
  StateSet finals;

  Dfa(int n, std::vector<std::string> alphabet, std::vector<Transformation> delta, int initial,
      StateSet finals);

  int symbol_index(std::string_view sym) const;  // -1 when unknown
  const Transformation& letter(std::string_view sym) const;
};

// A word as indices into an alphabet; the empty vector is the empty word.
using Word = std::vector<int>;

// Tokenizes text against an alphabet: per character when every symbol is a
// single character, per whitespace-separated token otherwise.
Word make_word(std::span<const std::string> alphabet, std::string_view text);
std::string word_text(std::span<const std::string> alphabet, const Word& w);

// delta_w as one transformation; composes letters left to right.
Transformation induced(const Dfa& d, const Word& w);
bool accepts(const Dfa& d, const Word& w);

// An NFA whose states carry subsets of some ambient Q_degree as labels.
struct Nfa {
  int degree;
  std::vector<StateSet> labels;                    // one per state, 0-based ids
  std::vector<std::string> alphabet;
  std::vector<std::vector<std::vector<int>>> eta;  // [state][symbol] -> sorted ids
  std::vector<int> initials;                       // sorted ids
  std::vector<int> finals;                         // sorted ids

  std::size_t size() const { return labels.size(); }
};

// The reversal of d: arrows flipped, initial and final swapped. State i of d
// becomes NFA state i-1 labelled {i}.
Nfa reverse(const Dfa& d);

bool nfa_accepts(const Nfa& n, const Word& w);

// Subset construction result. States are 0-based in breadth-first discovery
// order from the initial subset; unlike Dfa this carries no degree cap on the
// number of states, only on the ambient Q_degree of the labels.
struct SubsetDfa {
  int degree;
  std::vector<std::string> alphabet;
  std::vector<std::vector<int>> next;     // [state][symbol] -> state
  int initial = 0;
  std::vector<bool> final_state;
  std::vector<std::vector<int>> members;  // NFA ids making up each subset state
  std::vector<StateSet> label;            // union of member labels

  std::size_t size() const { return next.size(); }
};

// Accessible subset construction; keeps the empty subset when it is reached.
SubsetDfa determinize(const Nfa& n);

// Moore partition refinement. Returns (class id per state, class count); class
// ids are numbered by first occurrence in ascending state order.
std::pair<std::vector<int>, int> moore_classes(const std::vector<std::vector<int>>& next,
                                               const std::vector<bool>& final_state);

// Number of states of the minimal DFA of the same language (dead states count,
// every state of s is assumed reachable, as determinize guarantees).
std::size_t minimal_size(const SubsetDfa& s);

// Quotient of an all-reachable array automaton (0-based) by Moore classes,
// packed into a Dfa with states renumbered 1..m breadth-first. The class
// count must fit the degree cap; capacity_error otherwise.
Dfa quotient_dfa(const std::vector<std::vector<int>>& next, const std::vector<bool>& final_state,
                 int initial, std::span<const std::string> alphabet);

// Language-preserving minimization: drops unreachable states, merges
// indistinguishable ones, keeps dead states, renumbers 1..m breadth-first.
Dfa minimize(const Dfa& d);

bool is_minimal(const Dfa& d);

// Throws std::invalid_argument naming the operation when d is not minimal.
void require_minimal(const Dfa& d, const char* what);

// Isomorphism of minimal DFAs over equal alphabets (as sets of symbols).
bool isomorphic(const Dfa& a, const Dfa& b);

Semigroup transition_semigroup(const Dfa& d, std::uint64_t cap = kDefaultClosureCap);

}  // namespace atomlab
