#include <doctest.h>

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "atomlab/analysis.hpp"
#include "atomlab/atoms.hpp"
#include "atomlab/census.hpp"
#include "atomlab/combinatorics.hpp"
#include "atomlab/errors.hpp"
#include "atomlab/ingest.hpp"

using namespace atomlab;

namespace {

Dfa example1() {
  return Dfa(4, {"a"}, {Transformation(4, {2, 3, 4, 4})}, 1, StateSet::of(4, {2, 3}));
}

// Every unitary letter on Q_3; has all 8 atoms but misses the psi bounds.
Dfa all_unitaries3() {
  std::vector<std::string> alphabet;
  std::vector<Transformation> delta;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      alphabet.push_back(std::string(1, static_cast<char>('a' + alphabet.size())));
      delta.push_back(Transformation::unitary(3, i, j));
    }
  return Dfa(3, alphabet, delta, 1, StateSet::of(3, {2}));
}

// A_4 generators plus one merge letter: set-transitive but far from all of T_4.
Dfa alternating4() {
  return Dfa(4, {"a", "b", "c"},
             {Transformation(4, {2, 3, 1, 4}), Transformation(4, {1, 3, 4, 2}),
              Transformation(4, {2, 2, 3, 4})},
             1, StateSet::of(4, {4}));
}

// The atomaton built from scratch: T ranges over the atoms, and S reads a to T
// exactly when the a-preimage of T is S, since a word of atom T prefixed by a
// lands in the atom preimage(delta_a, T).
Nfa semantic_atomaton(const Dfa& d, const AtomicPoset& p) {
  Nfa a;
  a.degree = d.n;
  a.labels = p.atoms;
  a.alphabet = d.alphabet;
  a.eta.assign(p.atoms.size(), std::vector<std::vector<int>>(d.alphabet.size()));
  for (std::size_t i = 0; i < p.atoms.size(); ++i)
    for (std::size_t sym = 0; sym < d.alphabet.size(); ++sym)
      for (std::size_t j = 0; j < p.atoms.size(); ++j)
        if (d.delta[sym].preimage(p.atoms[j]) == p.atoms[i])
          a.eta[i][sym].push_back(static_cast<int>(j));
  for (std::size_t i = 0; i < p.atoms.size(); ++i)
    if (p.atoms[i].contains(d.initial)) a.initials.push_back(static_cast<int>(i));
  a.finals = {p.index_of(p.final_atom)};
  return a;
}

bool same_nfa(const Nfa& x, const Nfa& y) {
  return x.degree == y.degree && x.labels == y.labels && x.alphabet == y.alphabet &&
         x.eta == y.eta && x.initials == y.initials && x.finals == y.finals;
}

// Subset construction over raw member sets, no interval representation at all.
int naive_atom_complexity(const Dfa& d, const AtomicPoset& p, const StateSet& atom) {
  Nfa a = semantic_atomaton(d, p);
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> work;
  std::vector<int> init{p.index_of(atom)};
  seen.insert(init);
  work.push_back(init);
  while (!work.empty()) {
    std::vector<int> cur = work.front();
    work.pop_front();
    for (std::size_t sym = 0; sym < a.alphabet.size(); ++sym) {
      std::set<int> succ;
      for (int q : cur)
        succ.insert(a.eta[static_cast<std::size_t>(q)][sym].begin(),
                    a.eta[static_cast<std::size_t>(q)][sym].end());
      std::vector<int> v(succ.begin(), succ.end());
      if (seen.insert(v).second) work.push_back(std::move(v));
    }
  }
  return static_cast<int>(seen.size());
}

std::vector<Word> words_up_to(std::size_t sigma, std::size_t len) {
  std::vector<Word> out{{}};
  std::size_t begin = 0;
  for (std::size_t l = 1; l <= len; ++l) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t a = 0; a < sigma; ++a) {
        Word w = out[i];
        w.push_back(static_cast<int>(a));
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

}  // namespace

TEST_CASE("atoms of the unary example") {
  Dfa d = example1();
  AtomicPoset p = atoms_of(d);
  CHECK(p.n == 4);
  CHECK(p.atoms == std::vector<StateSet>{StateSet::empty(4), StateSet::of(4, {1}),
                                         StateSet::of(4, {1, 2}), StateSet::of(4, {2, 3})});
  CHECK(p.final_atom == StateSet::of(4, {2, 3}));
  CHECK(p.contains(StateSet::of(4, {1, 2})));
  CHECK(!p.contains(StateSet::of(4, {2})));
  CHECK(p.index_of(StateSet::of(4, {1})) == 1);
  CHECK(p.index_of(StateSet::of(4, {3})) == -1);
}

TEST_CASE("atoms demand a minimal dfa") {
  Dfa nonmin(2, {"a"}, {Transformation(2, {1, 2})}, 1, StateSet::of(2, {1, 2}));
  CHECK_THROWS_AS(atoms_of(nonmin), std::invalid_argument);
}

TEST_CASE("one-state language of everything") {
  Dfa d(1, {"a"}, {Transformation::identity(1)}, 1, StateSet::full(1));
  AtomicPoset p = atoms_of(d);
  CHECK(p.atoms == std::vector<StateSet>{StateSet::full(1)});
  MaximalityVerdict v = is_maximally_atomic_semantic(d);
  CHECK(v.maximal);
  CHECK(v.atom_count == 1);
  CHECK(v.atom_target == 1);
  CHECK(is_maximally_atomic_algebraic(d));
}

TEST_CASE("atom of a word") {
  Dfa d = example1();
  CHECK(atom_of_word(d, {}) == StateSet::of(4, {2, 3}));
  CHECK(atom_of_word(d, {0}) == StateSet::of(4, {1, 2}));
  CHECK(atom_of_word(d, {0, 0}) == StateSet::of(4, {1}));
  CHECK(atom_of_word(d, {0, 0, 0}) == StateSet::empty(4));
  CHECK(atom_of_word(d, {0, 0, 0, 0}) == StateSet::empty(4));
}

TEST_CASE("every word lands in an atom and every atom has a witness") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    int sigma = 2 + static_cast<int>(rng() % 2);
    Dfa d = random_minimal_dfa(n, sigma, rng);
    AtomicPoset p = atoms_of(d);
    for (int probe = 0; probe < 40; ++probe) {
      Word w(rng() % 9, 0);
      for (auto& c : w) c = static_cast<int>(rng() % static_cast<std::uint64_t>(sigma));
      CHECK(p.contains(atom_of_word(d, w)));
    }
    auto wits = atom_witness_words(d);
    REQUIRE(wits.size() == p.atoms.size());
    for (std::size_t i = 0; i < wits.size(); ++i) {
      CHECK(wits[i].first == p.atoms[i]);
      CHECK(atom_of_word(d, wits[i].second) == wits[i].first);
      CHECK(wits[i].second.size() <= (std::size_t{1} << n));
    }
  }
}

TEST_CASE("atomaton of the unary example") {
  Dfa d = example1();
  AtomicPoset p = atoms_of(d);
  Nfa a = atomaton(d, p);
  REQUIRE(a.size() == 4);
  // Atom order: {} < {1} < {1,2} < {2,3}.
  CHECK(a.eta[3][0].empty());                  // eta_a({2,3}) = {}
  CHECK(a.eta[2][0] == std::vector<int>{3});   // eta_a({1,2}) = {{2,3}}
  CHECK(a.eta[1][0] == std::vector<int>{2});   // eta_a({1}) = {{1,2}}
  CHECK(a.eta[0][0] == std::vector<int>{0, 1});  // eta_a({}) = {{},{1}}
  CHECK(a.initials == std::vector<int>{1, 2});   // {1} and {1,2} contain state 1
  CHECK(a.finals == std::vector<int>{3});
  CHECK(same_nfa(a, semantic_atomaton(d, p)));
}

TEST_CASE("atomaton matches its semantic definition") {
  std::mt19937_64 rng(42);
  CHECK(same_nfa(atomaton(witness(3)), semantic_atomaton(witness(3), atoms_of(witness(3)))));
  CHECK(same_nfa(atomaton(witness(4)), semantic_atomaton(witness(4), atoms_of(witness(4)))));
  Dfa u = all_unitaries3();
  CHECK(same_nfa(atomaton(u), semantic_atomaton(u, atoms_of(u))));
  Dfa a4 = alternating4();
  CHECK(same_nfa(atomaton(a4), semantic_atomaton(a4, atoms_of(a4))));
  for (int trial = 0; trial < 25; ++trial) {
    Dfa d = random_minimal_dfa(2 + static_cast<int>(rng() % 4), 2 + static_cast<int>(rng() % 2), rng);
    CHECK(same_nfa(atomaton(d), semantic_atomaton(d, atoms_of(d))));
  }
}

TEST_CASE("permutation letters act on atoms one to one") {
  Dfa d(4, {"a", "b"},
        {Transformation(4, {2, 3, 1, 4}), Transformation(4, {1, 3, 4, 2})}, 1,
        StateSet::of(4, {4}));
  REQUIRE(is_minimal(d));
  AtomicPoset p = atoms_of(d);
  Nfa a = atomaton(d, p);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t sym = 0; sym < a.alphabet.size(); ++sym) {
      REQUIRE(a.eta[i][sym].size() == 1);
      CHECK(p.atoms[static_cast<std::size_t>(a.eta[i][sym][0])] ==
            d.delta[sym].image(p.atoms[i]));
    }
}

TEST_CASE("atomaton accepts the language itself") {
  Dfa d = example1();
  Nfa a = atomaton(d);
  for (const Word& w : words_up_to(1, 8)) CHECK(nfa_accepts(a, w) == accepts(d, w));
  Dfa w3 = witness(3);
  Nfa a3 = atomaton(w3);
  for (const Word& w : words_up_to(3, 6)) CHECK(nfa_accepts(a3, w) == accepts(w3, w));
}

TEST_CASE("atomaton started at one atom accepts exactly that atom") {
  std::mt19937_64 rng(43);
  std::vector<Dfa> suite{example1(), witness(3), all_unitaries3()};
  for (int trial = 0; trial < 6; ++trial)
    suite.push_back(random_minimal_dfa(2 + static_cast<int>(rng() % 3), 2, rng));
  for (const Dfa& d : suite) {
    AtomicPoset p = atoms_of(d);
    Nfa a = atomaton(d, p);
    for (std::size_t i = 0; i < p.atoms.size(); ++i) {
      Nfa from_one = a;
      from_one.initials = {static_cast<int>(i)};
      for (const Word& w : words_up_to(d.alphabet.size(), 5))
        CHECK(nfa_accepts(from_one, w) == (atom_of_word(d, w) == p.atoms[i]));
    }
  }
}

TEST_CASE("reverse determinization counts the atoms") {
  std::mt19937_64 rng(44);
  std::vector<Dfa> suite{example1(), witness(3), witness(4), all_unitaries3(), alternating4()};
  for (int trial = 0; trial < 15; ++trial)
    suite.push_back(random_minimal_dfa(2 + static_cast<int>(rng() % 4), 2 + static_cast<int>(rng() % 2), rng));
  for (const Dfa& d : suite)
    CHECK(atoms_of(d).atoms.size() == minimal_size(determinize(reverse(d))));
}

TEST_CASE("intervals") {
  Dfa d = example1();
  AtomicPoset p = atoms_of(d);
  AtomicInterval iv = make_interval(p, StateSet::empty(4), StateSet::of(4, {1, 2}));
  CHECK(iv.members == std::vector<StateSet>{StateSet::empty(4), StateSet::of(4, {1}),
                                            StateSet::of(4, {1, 2})});
  CHECK(iv.type == std::pair<int, int>{0, 2});

  AtomicInterval none = make_interval(p, StateSet::of(4, {3}), StateSet::of(4, {3}));
  CHECK(none.members.empty());
  CHECK(none.type == std::pair<int, int>{-1, -1});

  AtomicInterval hit = eta_on_interval(d, p, StateSet::empty(4), StateSet::of(4, {1, 2}),
                                       make_word(d.alphabet, "a"));
  CHECK(hit.lower == StateSet::empty(4));
  CHECK(hit.upper == StateSet::of(4, {1, 2, 3}));
  CHECK(hit.members == p.atoms);

  AtomicInterval stay = eta_on_interval(d, p, StateSet::empty(4), StateSet::of(4, {1, 2}), {});
  CHECK(stay.lower == StateSet::empty(4));
  CHECK(stay.upper == StateSet::of(4, {1, 2}));

  AtomicInterval one = eta_on_interval(d, p, StateSet::of(4, {1}), StateSet::of(4, {1}),
                                       make_word(d.alphabet, "a"));
  CHECK(one.members == std::vector<StateSet>{StateSet::of(4, {1, 2})});
}

TEST_CASE("interval action composes letter by letter") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 10; ++trial) {
    int sigma = 2 + static_cast<int>(rng() % 2);
    Dfa d = random_minimal_dfa(2 + static_cast<int>(rng() % 4), sigma, rng);
    AtomicPoset p = atoms_of(d);
    for (const auto& atom : p.atoms) {
      Word w(1 + rng() % 6, 0);
      for (auto& c : w) c = static_cast<int>(rng() % static_cast<std::uint64_t>(sigma));
      StateSet lo = atom, hi = atom;
      for (int c : w) {
        AtomicInterval step = eta_on_interval(d, p, lo, hi, {c});
        lo = step.lower;
        hi = step.upper;
      }
      AtomicInterval whole = eta_on_interval(d, p, atom, atom, w);
      CHECK(whole.lower == lo);
      CHECK(whole.upper == hi);
      CHECK(whole.members == make_interval(p, lo, hi).members);
    }
  }
}

TEST_CASE("psi") {
  CHECK(psi(1, 0) == 1);
  CHECK(psi(1, 1) == 1);
  CHECK(psi(2, 0) == 3);
  CHECK(psi(2, 1) == 3);
  CHECK(psi(2, 2) == 3);
  CHECK(psi(3, 0) == 7);
  CHECK(psi(3, 1) == 10);
  CHECK(psi(3, 2) == 10);
  CHECK(psi(3, 3) == 7);
  CHECK(psi(4, 1) == 29);
  CHECK(psi(4, 2) == 43);
  CHECK(psi(4, 3) == 29);
  CHECK(psi(4, 0) == 15);
  CHECK(psi(4, 4) == 15);
  CHECK(psi(5, 1) == 76);
  CHECK(psi(5, 2) == 141);
  CHECK(psi(31, 0) == 2147483647u);
  CHECK(psi(31, 15) == 594134923097268u);
  CHECK_THROWS_AS(psi(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(psi(32, 1), std::invalid_argument);
  CHECK_THROWS_AS(psi(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(psi(3, -1), std::invalid_argument);
}

TEST_CASE("s-types") {
  CHECK(s_type_check(4, StateSet::of(4, {1, 2}), 2, 2));
  CHECK(!s_type_check(4, StateSet::empty(4), 0, 4));
  CHECK(s_type_check(4, StateSet::empty(4), 0, 0));
  CHECK(s_type_check(4, StateSet::empty(4), 0, 3));
  CHECK(!s_type_check(4, StateSet::empty(4), 1, 2));
  CHECK(s_type_check(4, StateSet::full(4), 1, 4));
  CHECK(s_type_check(4, StateSet::full(4), 4, 4));
  CHECK(!s_type_check(4, StateSet::full(4), 0, 4));
  CHECK(!s_type_check(4, StateSet::full(4), 2, 3));
  CHECK(s_type_check(4, StateSet::of(4, {1, 2}), 1, 2));
  CHECK(s_type_check(4, StateSet::of(4, {1, 2}), 2, 3));
  CHECK(!s_type_check(4, StateSet::of(4, {1, 2}), 3, 3));
  CHECK(!s_type_check(4, StateSet::of(4, {1, 2}), 1, 1));
  CHECK(!s_type_check(4, StateSet::of(4, {1, 2}), 1, 4));
  CHECK(s_type_check(4, StateSet::of(4, {1, 2}), -1, -1));
  CHECK(!s_type_check(4, StateSet::empty(4), -1, -1));
  CHECK(!s_type_check(4, StateSet::full(4), -1, -1));
}

TEST_CASE("atom quotient dfas") {
  Dfa d = example1();
  AtomicPoset p = atoms_of(d);
  AtomDfa q = atom_dfa(d, p, StateSet::of(4, {1}));
  CHECK(q.size() == 4);
  CHECK(q.states[0].members == std::vector<StateSet>{StateSet::of(4, {1})});
  CHECK(q.atom == StateSet::of(4, {1}));
  int finals = 0;
  for (bool f : q.final_state) finals += f;
  CHECK(finals == 1);
  CHECK_THROWS_AS(atom_dfa(d, p, StateSet::of(4, {3})), std::invalid_argument);

  CHECK(atom_complexity(d, StateSet::empty(4)) == 4);
  CHECK(atom_complexity(d, StateSet::of(4, {1})) == 4);
  CHECK(atom_complexity(d, StateSet::of(4, {1, 2})) == 3);
  CHECK(atom_complexity(d, StateSet::of(4, {2, 3})) == 2);
}

TEST_CASE("interval construction matches the raw subset construction") {
  std::mt19937_64 rng(46);
  std::vector<Dfa> suite{example1(), witness(3), all_unitaries3(), alternating4()};
  for (int trial = 0; trial < 12; ++trial)
    suite.push_back(random_minimal_dfa(2 + static_cast<int>(rng() % 4), 2 + static_cast<int>(rng() % 2), rng));
  for (const Dfa& d : suite) {
    AtomicPoset p = atoms_of(d);
    for (const auto& atom : p.atoms) {
      int viaIntervals = atom_complexity(d, p, atom);
      CHECK(viaIntervals == naive_atom_complexity(d, p, atom));
      CHECK(static_cast<std::uint64_t>(viaIntervals) <= psi(d.n, atom.count()));
    }
  }
}

TEST_CASE("interval states obey the per-type counting bound") {
  std::mt19937_64 rng(47);
  std::vector<Dfa> suite{example1(), witness(3), witness(4)};
  for (int trial = 0; trial < 8; ++trial)
    suite.push_back(random_minimal_dfa(3 + static_cast<int>(rng() % 2), 2, rng));
  for (const Dfa& d : suite) {
    AtomicPoset p = atoms_of(d);
    for (const auto& atom : p.atoms) {
      AtomDfa q = atom_dfa(d, p, atom);
      std::map<std::pair<int, int>, std::uint64_t> per_type;
      for (const auto& st : q.states) ++per_type[st.type];
      for (const auto& [type, count] : per_type) {
        if (type.first < 0) {
          CHECK(count == 1);
          continue;
        }
        CHECK(count <= binomial(d.n, type.second) * binomial(type.second, type.first));
      }
    }
  }
}

TEST_CASE("witness complexities hit the bound everywhere") {
  Dfa w3 = witness(3);
  AtomicPoset p3 = atoms_of(w3);
  REQUIRE(p3.atoms.size() == 8);
  std::vector<int> got = atom_complexities(w3, p3);
  for (std::size_t i = 0; i < p3.atoms.size(); ++i)
    CHECK(static_cast<std::uint64_t>(got[i]) == psi(3, p3.atoms[i].count()));

  Dfa w4 = witness(4);
  AtomicPoset p4 = atoms_of(w4);
  REQUIRE(p4.atoms.size() == 16);
  std::vector<int> got4 = atom_complexities(w4, p4);
  for (std::size_t i = 0; i < p4.atoms.size(); ++i)
    CHECK(static_cast<std::uint64_t>(got4[i]) == psi(4, p4.atoms[i].count()));
}

TEST_CASE("maximality verdicts") {
  MaximalityVerdict ex = is_maximally_atomic_semantic(example1());
  CHECK(!ex.maximal);
  CHECK(ex.atom_count == 4);
  CHECK(ex.atom_target == 16);
  REQUIRE(ex.per_atom.size() == 4);
  CHECK(ex.per_atom[1].atom == StateSet::of(4, {1}));
  CHECK(ex.per_atom[1].achieved == 4);
  CHECK(ex.per_atom[1].target == 29);
  CHECK(!is_maximally_atomic_algebraic(example1()));

  CHECK(is_maximally_atomic_semantic(witness(3)).maximal);
  CHECK(is_maximally_atomic_algebraic(witness(3)));
  CHECK(is_maximally_atomic_semantic(witness(4)).maximal);
  CHECK(is_maximally_atomic_algebraic(witness(4)));
  CHECK(is_maximally_atomic_algebraic(witness(2)));
  CHECK(is_maximally_atomic_semantic(witness(2)).maximal);

  // All atoms present, yet the complexities fall short of the bounds.
  MaximalityVerdict uni = is_maximally_atomic_semantic(all_unitaries3());
  CHECK(uni.atom_count == 8);
  CHECK(!uni.maximal);
  CHECK(!is_maximally_atomic_algebraic(all_unitaries3()));

  CHECK(is_maximally_atomic_semantic(alternating4()).maximal);
  CHECK(is_maximally_atomic_algebraic(alternating4()));
}

TEST_CASE("class flags and the chain") {
  ClassFlags w = classify(witness(3));
  CHECK(w.fts);
  CHECK(w.sts);
  CHECK(w.mal);
  CHECK(w.mna);
  CHECK(w.mcr);

  ClassFlags ex = classify(example1());
  CHECK(!ex.fts);
  CHECK(!ex.sts);
  CHECK(!ex.mal);
  CHECK(!ex.mna);
  CHECK(!ex.mcr);

  ClassFlags a4 = classify(alternating4());
  CHECK(!a4.fts);
  CHECK(a4.sts);
  CHECK(a4.mal);
  CHECK(a4.mna);
  CHECK(a4.mcr);

  ClassFlags uni = classify(all_unitaries3());
  CHECK(!uni.fts);
  CHECK(!uni.sts);
  CHECK(!uni.mal);
  CHECK(uni.mna);
  CHECK(uni.mcr);

  CHECK(chain_violations(ClassFlags{false, false, false, false, false}).empty());
  CHECK(chain_violations(ClassFlags{true, true, true, true, true}).empty());
  CHECK(!chain_violations(ClassFlags{true, false, false, false, false}).empty());
  CHECK(!chain_violations(ClassFlags{false, true, false, true, true}).empty());
  CHECK(!chain_violations(ClassFlags{false, true, true, false, false}).empty());
  CHECK(!chain_violations(ClassFlags{false, false, false, true, false}).empty());

  Dfa one(1, {"a"}, {Transformation::identity(1)}, 1, StateSet::full(1));
  CHECK_THROWS_AS(classify(one), std::invalid_argument);
}

TEST_CASE("the deciders agree on random instances") {
  std::mt19937_64 rng(48);
  for (int trial = 0; trial < 40; ++trial) {
    Dfa d = random_minimal_dfa(2 + static_cast<int>(rng() % 3), 2 + static_cast<int>(rng() % 2), rng);
    CHECK(is_maximally_atomic_semantic(d).maximal == is_maximally_atomic_algebraic(d));
  }
}

TEST_CASE("all unitary letters force the full set of atoms") {
  std::mt19937_64 rng(49);
  for (int n = 3; n <= 6; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<std::string> alphabet;
      std::vector<Transformation> delta;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          alphabet.push_back("u" + std::to_string(i) + std::to_string(j));
          delta.push_back(Transformation::unitary(n, i, j));
        }
      // A couple of random extra letters keep the sample varied.
      for (int extra = 0; extra < 2; ++extra) {
        std::vector<int> row(static_cast<std::size_t>(n));
        for (auto& v : row) v = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        alphabet.push_back("x" + std::to_string(extra));
        delta.emplace_back(n, row);
      }
      std::uint16_t fbits =
          static_cast<std::uint16_t>(1 + rng() % ((std::uint64_t{1} << n) - 2));
      Dfa d = minimize(Dfa(n, alphabet, delta, 1, StateSet(n, fbits)));
      if (d.n != n) continue;  // unitaries keep states apart in practice; skip the rare collapse
      CHECK(atoms_of(d).atoms.size() == (std::size_t{1} << n));
    }
  }
}

TEST_CASE("per-atom maximality tracks set-transitivity and a rank drop") {
  std::mt19937_64 rng(50);
  std::vector<Dfa> suite{witness(4), witness(5), alternating4()};
  for (int trial = 0; trial < 25; ++trial) suite.push_back(random_minimal_dfa(4, 3, rng));
  for (int trial = 0; trial < 10; ++trial) suite.push_back(random_minimal_dfa(5, 3, rng));
  for (const Dfa& d : suite) {
    int n = d.n;
    Semigroup t = transition_semigroup(d);
    PermGroup g = permutation_subgroup(t);
    bool drop = contains_rank(t, n - 1);
    AtomicPoset p = atoms_of(d);
    for (const auto& atom : p.atoms) {
      int k = atom.count();
      if (k < 2 || k > n - 2) continue;
      bool lhs = static_cast<std::uint64_t>(atom_complexity(d, p, atom)) == psi(n, k);
      bool rhs = g.order() > 0 && is_k_set_transitive(g, k) && drop;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("analysis report") {
  AnalysisReport r = analyze(example1());
  CHECK(r.n == 4);
  CHECK(r.alphabet == std::vector<std::string>{"a"});
  CHECK(r.atom_count == 4);
  CHECK(r.atom_target == 16);
  CHECK(!r.semantic_maximal);
  REQUIRE(r.algebraic_maximal.has_value());
  CHECK(!*r.algebraic_maximal);
  REQUIRE(r.deciders_agree.has_value());
  CHECK(*r.deciders_agree);
  REQUIRE(r.semigroup.has_value());
  CHECK(r.semigroup->size == 3);
  CHECK(r.semigroup->subgroup_order == 0);
  CHECK(!r.semigroup->set_transitive);
  CHECK(!r.semigroup->recognized.has_value());
  CHECK(r.semigroup->rank_histogram == std::map<int, std::uint64_t>{{1, 1}, {2, 1}, {3, 1}});
  REQUIRE(r.flags.has_value());
  CHECK(!r.flags->mna);
  CHECK(r.notices.empty());

  AnalysisReport w = analyze(witness(3));
  CHECK(w.semantic_maximal);
  REQUIRE(w.semigroup.has_value());
  CHECK(w.semigroup->size == 27);
  CHECK(w.semigroup->subgroup_order == 6);
  CHECK(w.semigroup->rank_histogram == std::map<int, std::uint64_t>{{1, 3}, {2, 18}, {3, 6}});
  CHECK(w.semigroup->set_transitive);
  CHECK(w.semigroup->k_set_transitive == std::vector<bool>{true, true, true, true});
  REQUIRE(w.semigroup->recognized.has_value());
  CHECK(*w.semigroup->recognized == SetTransitiveTag::symmetric);
  CHECK(w.flags->fts);

  AnalysisReport bare = analyze(example1(), {.with_semigroup = false});
  CHECK(!bare.semigroup.has_value());
  CHECK(!bare.flags.has_value());
  CHECK(!bare.algebraic_maximal.has_value());
  REQUIRE(bare.notices.size() == 1);
  CHECK(bare.notices[0].find("skipped") != std::string::npos);

  Dfa one(1, {"a"}, {Transformation::identity(1)}, 1, StateSet::full(1));
  AnalysisReport tiny = analyze(one);
  CHECK(tiny.semantic_maximal);
  CHECK(tiny.atom_target == 1);
  CHECK(!tiny.flags.has_value());
  REQUIRE(tiny.notices.size() == 1);
  CHECK(tiny.notices[0].find("n >= 2") != std::string::npos);
}
