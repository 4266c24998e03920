#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "atomlab/automata.hpp"
#include "atomlab/semigroup.hpp"
#include "atomlab/transform.hpp"

namespace atomlab {

// The atoms of the language of a minimal DFA, each identified by the set S of
// left quotients it lies under; atoms are the nonempty intersections of all
// quotients and quotient complements, so they partition Sigma*.
struct AtomicPoset {
  int n;
  std::vector<StateSet> atoms;  // ascending by bit word
  StateSet final_atom;          // the atom containing the final-state set

  bool contains(const StateSet& s) const;
  int index_of(const StateSet& s) const;  // -1 when absent
};

// Atoms as the reachable subsets of the reverse subset construction.
AtomicPoset atoms_of(const Dfa& d);

// The S with w in A_S: exactly the states that w drives into the final set.
StateSet atom_of_word(const Dfa& d, const Word& w);

// A shortest witness word per atom, sorted by atom.
std::vector<std::pair<StateSet, Word>> atom_witness_words(const Dfa& d);

// The atomaton: an NFA on the atoms whose states are labelled by their S sets.
Nfa atomaton(const Dfa& d);
Nfa atomaton(const Dfa& d, const AtomicPoset& poset);

// The atoms lying between two subsets of Q_n, plus the interval's type: the
// sizes of the meet and join of its members, (-1, -1) when there are none.
struct AtomicInterval {
  StateSet lower, upper;
  std::vector<StateSet> members;
  std::pair<int, int> type;
};

AtomicInterval make_interval(const AtomicPoset& poset, const StateSet& lower,
                             const StateSet& upper);

// Where the word action sends the interval state [[lower, upper]]: the lower
// endpoint moves forward, the upper endpoint by the dual action.
AtomicInterval eta_on_interval(const Dfa& d, const AtomicPoset& poset, const StateSet& lower,
                               const StateSet& upper, const Word& w);

// The maximal quotient complexity of an atom A_S over an n-state language,
// 2^n - 1 when |S| is 0 or n, else 1 + sum C(n,u) C(u,v) over the legal types.
std::uint64_t psi(int n, int k);

// Whether (v, u) is a type an interval of A_S's quotient DFA may carry.
bool s_type_check(int n, const StateSet& s, int v, int u);

// The quotient DFA of one atom, built from interval states with tight
// endpoints; state 0 is [[S, S]].
struct AtomDfa {
  StateSet atom;
  std::vector<AtomicInterval> states;
  std::vector<std::vector<int>> next;  // [state][symbol]
  std::vector<bool> final_state;

  std::size_t size() const { return states.size(); }
};

AtomDfa atom_dfa(const Dfa& d, const AtomicPoset& poset, const StateSet& atom);

int atom_complexity(const Dfa& d, const AtomicPoset& poset, const StateSet& atom);
int atom_complexity(const Dfa& d, const StateSet& atom);

enum class Execution { serial, parallel };

// Quotient complexity of every atom, in poset order. Both executions return
// identical vectors; the parallel one fans the per-atom searches out.
std::vector<int> atom_complexities(const Dfa& d, const AtomicPoset& poset,
                                   Execution exec = Execution::serial);

struct AtomReport {
  StateSet atom;
  int achieved;
  std::uint64_t target;
};

struct MaximalityVerdict {
  bool maximal;
  std::size_t atom_count;
  std::uint64_t atom_target;
  std::vector<AtomReport> per_atom;
};

// A language is maximally atomic when it has as many atoms as possible and
// every atom's quotient complexity hits its bound.
MaximalityVerdict is_maximally_atomic_semantic(const Dfa& d, Execution exec = Execution::serial);

// The algebraic route: for n >= 3, a set-transitive permutation group inside
// the transition semigroup plus an element of rank n-1; n = 2 asks for all
// four transformations of Q_2; n = 1 always holds.
bool is_maximally_atomic_algebraic(const Dfa& d, std::uint64_t cap = kDefaultClosureCap);

struct ClassFlags {
  bool fts;  // transition semigroup is all of T_n
  bool sts;  // set-transitive subgroup plus an element of rank n-1
  bool mal;  // maximally atomic (semantic decider)
  bool mna;  // maximal number of atoms, 2^n
  bool mcr;  // reversal hits maximal complexity 2^n
};

ClassFlags compute_class_flags(const Dfa& d, const Semigroup& t, const MaximalityVerdict& verdict);

// Empty when the chain FTS < STS = MAL < MNA = MCR holds for these flags.
std::vector<std::string> chain_violations(const ClassFlags& f);

// Flags plus the chain check; violations become internal_error. n >= 2 only.
ClassFlags classify(const Dfa& d, std::uint64_t cap = kDefaultClosureCap,
                    Execution exec = Execution::serial);

}  // namespace atomlab
