#include "atomlab/atoms.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <map>
#include <stdexcept>

#include "atomlab/combinatorics.hpp"
#include "atomlab/errors.hpp"

namespace atomlab {

bool AtomicPoset::contains(const StateSet& s) const { return index_of(s) >= 0; }

int AtomicPoset::index_of(const StateSet& s) const {
  auto it = std::lower_bound(atoms.begin(), atoms.end(), s);
  if (it == atoms.end() || !(*it == s)) return -1;
  return static_cast<int>(it - atoms.begin());
}

AtomicPoset atoms_of(const Dfa& d) {
  require_minimal(d, "atoms_of");
  SubsetDfa r = determinize(reverse(d));
  std::vector<StateSet> atoms = r.label;
  std::sort(atoms.begin(), atoms.end());
  AtomicPoset p{d.n, std::move(atoms), d.finals};
  if (!p.contains(d.finals)) throw internal_error("final-state set missing from the atoms");
  return p;
}

StateSet atom_of_word(const Dfa& d, const Word& w) { return induced(d, w).preimage(d.finals); }

std::vector<std::pair<StateSet, Word>> atom_witness_words(const Dfa& d) {
  require_minimal(d, "atom_witness_words");
  SubsetDfa r = determinize(reverse(d));
  std::vector<int> parent(r.size(), -1), via(r.size(), -1);
  std::deque<int> work{r.initial};
  std::vector<bool> seen(r.size(), false);
  seen[static_cast<std::size_t>(r.initial)] = true;
  while (!work.empty()) {
    int q = work.front();
    work.pop_front();
    for (std::size_t a = 0; a < r.alphabet.size(); ++a) {
      int s = r.next[static_cast<std::size_t>(q)][a];
      if (!seen[static_cast<std::size_t>(s)]) {
        seen[static_cast<std::size_t>(s)] = true;
        parent[static_cast<std::size_t>(s)] = q;
        via[static_cast<std::size_t>(s)] = static_cast<int>(a);
        work.push_back(s);
      }
    }
  }
  std::vector<std::pair<StateSet, Word>> out;
  for (std::size_t q = 0; q < r.size(); ++q) {
    // The path reads a word of the reversal; the forward witness reverses it,
    // which is exactly the order the path unwinds in.
    Word w;
    for (int cur = static_cast<int>(q); parent[static_cast<std::size_t>(cur)] >= 0;
         cur = parent[static_cast<std::size_t>(cur)])
      w.push_back(via[static_cast<std::size_t>(cur)]);
    out.emplace_back(r.label[q], std::move(w));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace {

// Dual action on upper endpoints: complement, act forward, complement back.
StateSet dual_image(const Transformation& t, const StateSet& s) {
  return t.image(s.complement()).complement();
}

}  // namespace

Nfa atomaton(const Dfa& d) { return atomaton(d, atoms_of(d)); }

Nfa atomaton(const Dfa& d, const AtomicPoset& poset) {
  Nfa a;
  a.degree = d.n;
  a.labels = poset.atoms;
  a.alphabet = d.alphabet;
  a.eta.assign(poset.atoms.size(), std::vector<std::vector<int>>(d.alphabet.size()));
  for (std::size_t i = 0; i < poset.atoms.size(); ++i) {
    for (std::size_t sym = 0; sym < d.alphabet.size(); ++sym) {
      const Transformation& t = d.delta[sym];
      StateSet lo = t.image(poset.atoms[i]);
      StateSet hi = dual_image(t, poset.atoms[i]);
      for (std::size_t j = 0; j < poset.atoms.size(); ++j)
        if (lo.is_subset_of(poset.atoms[j]) && poset.atoms[j].is_subset_of(hi))
          a.eta[i][sym].push_back(static_cast<int>(j));
    }
  }
  for (std::size_t i = 0; i < poset.atoms.size(); ++i)
    if (poset.atoms[i].contains(d.initial)) a.initials.push_back(static_cast<int>(i));
  int fin = poset.index_of(poset.final_atom);
  if (fin < 0) throw internal_error("atomaton: final atom missing");
  a.finals = {fin};
  return a;
}

AtomicInterval make_interval(const AtomicPoset& poset, const StateSet& lower,
                             const StateSet& upper) {
  AtomicInterval iv{lower, upper, {}, {-1, -1}};
  for (const auto& atom : poset.atoms)
    if (lower.is_subset_of(atom) && atom.is_subset_of(upper)) iv.members.push_back(atom);
  if (!iv.members.empty()) {
    StateSet meet = StateSet::full(poset.n), join = StateSet::empty(poset.n);
    for (const auto& m : iv.members) {
      meet = meet & m;
      join = join | m;
    }
    iv.type = {meet.count(), join.count()};
  }
  return iv;
}

AtomicInterval eta_on_interval(const Dfa& d, const AtomicPoset& poset, const StateSet& lower,
                               const StateSet& upper, const Word& w) {
  Transformation t = induced(d, w);
  return make_interval(poset, t.image(lower), dual_image(t, upper));
}

std::uint64_t psi(int n, int k) {
  if (n < 1 || n > 31) throw std::invalid_argument("psi: n outside 1..31");
  if (k < 0 || k > n) throw std::invalid_argument("psi: k outside 0..n");
  if (k == 0 || k == n) return (std::uint64_t{1} << n) - 1;
  std::uint64_t total = 1;
  for (int v = 1; v <= k; ++v)
    for (int u = k; u <= n - 1; ++u) total += binomial(n, u) * binomial(u, v);
  return total;
}

bool s_type_check(int n, const StateSet& s, int v, int u) {
  int k = s.count();
  if (v == -1 && u == -1) return k >= 1 && k <= n - 1;  // the empty interval
  if (k == 0) return v == 0 && 0 <= u && u <= n - 1;
  if (k == n) return 1 <= v && v <= n && u == n;
  return 1 <= v && v <= k && k <= u && u <= n - 1;
}

AtomDfa atom_dfa(const Dfa& d, const AtomicPoset& poset, const StateSet& atom) {
  if (!poset.contains(atom))
    throw std::invalid_argument("subset " + atom.to_string() + " is not an atom here");

  // Interval states are determined by their member sets, and a member set is
  // recoverable from its meet and join, so those tight endpoints make a key.
  // The empty member set is absorbing and gets a sentinel.
  constexpr std::uint32_t kEmptyKey = 0xffffffffu;
  auto key_of = [&](const AtomicInterval& iv) -> std::uint32_t {
    if (iv.members.empty()) return kEmptyKey;
    StateSet meet = StateSet::full(poset.n), join = StateSet::empty(poset.n);
    for (const auto& m : iv.members) {
      meet = meet & m;
      join = join | m;
    }
    return static_cast<std::uint32_t>(meet.bits()) << 16 | join.bits();
  };

  AtomDfa out{atom, {}, {}, {}};
  std::map<std::uint32_t, int> id;
  std::deque<int> work;
  auto intern = [&](AtomicInterval iv) {
    std::uint32_t key = key_of(iv);
    auto [it, fresh] = id.try_emplace(key, static_cast<int>(id.size()));
    if (fresh) {
      if (key != kEmptyKey) {
        // Normalize the stored endpoints to the tight ones.
        iv.lower = StateSet(poset.n, static_cast<std::uint16_t>(key >> 16));
        iv.upper = StateSet(poset.n, static_cast<std::uint16_t>(key & 0xffffu));
      }
      bool fin = std::binary_search(iv.members.begin(), iv.members.end(), poset.final_atom);
      out.states.push_back(std::move(iv));
      out.final_state.push_back(fin);
      work.push_back(it->second);
    }
    return it->second;
  };

  intern(make_interval(poset, atom, atom));
  while (!work.empty()) {
    int cur = work.front();
    work.pop_front();
    if (out.next.size() <= static_cast<std::size_t>(cur))
      out.next.resize(static_cast<std::size_t>(cur) + 1);
    out.next[static_cast<std::size_t>(cur)].assign(d.alphabet.size(), -1);
    for (std::size_t sym = 0; sym < d.alphabet.size(); ++sym) {
      int succ;
      if (out.states[static_cast<std::size_t>(cur)].members.empty()) {
        succ = cur;  // absorbing
      } else {
        const Transformation& t = d.delta[sym];
        const AtomicInterval& iv = out.states[static_cast<std::size_t>(cur)];
        succ = intern(make_interval(poset, t.image(iv.lower), dual_image(t, iv.upper)));
      }
      out.next[static_cast<std::size_t>(cur)][sym] = succ;
    }
  }

  std::uint64_t bound = psi(d.n, atom.count());
  if (out.size() > bound)
    throw internal_error("atom " + atom.to_string() + " produced " + std::to_string(out.size()) +
                         " interval states, above its bound " + std::to_string(bound));
  if (moore_classes(out.next, out.final_state).second != static_cast<int>(out.size()))
    throw internal_error("atom " + atom.to_string() +
                         " produced mergeable interval states; the construction must be minimal");
  return out;
}

int atom_complexity(const Dfa& d, const AtomicPoset& poset, const StateSet& atom) {
  return static_cast<int>(atom_dfa(d, poset, atom).size());
}

int atom_complexity(const Dfa& d, const StateSet& atom) {
  return atom_complexity(d, atoms_of(d), atom);
}

std::vector<int> atom_complexities(const Dfa& d, const AtomicPoset& poset, Execution exec) {
  std::vector<int> out(poset.atoms.size(), 0);
  if (exec == Execution::parallel) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < poset.atoms.size(); ++i) {
      try {
        out[i] = atom_complexity(d, poset, poset.atoms[i]);
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return out;
  }
  for (std::size_t i = 0; i < poset.atoms.size(); ++i)
    out[i] = atom_complexity(d, poset, poset.atoms[i]);
  return out;
}

MaximalityVerdict is_maximally_atomic_semantic(const Dfa& d, Execution exec) {
  require_minimal(d, "is_maximally_atomic_semantic");
  AtomicPoset poset = atoms_of(d);
  std::vector<int> achieved = atom_complexities(d, poset, exec);
  MaximalityVerdict v;
  v.atom_count = poset.atoms.size();
  // A one-state language has the single atom A_{q1}; from two states up the
  // full 2^n subsets are demanded.
  v.atom_target = d.n == 1 ? 1 : std::uint64_t{1} << d.n;
  v.maximal = v.atom_count == v.atom_target;
  for (std::size_t i = 0; i < poset.atoms.size(); ++i) {
    std::uint64_t target = psi(d.n, poset.atoms[i].count());
    v.per_atom.push_back({poset.atoms[i], achieved[i], target});
    if (static_cast<std::uint64_t>(achieved[i]) != target) v.maximal = false;
  }
  return v;
}

bool is_maximally_atomic_algebraic(const Dfa& d, std::uint64_t cap) {
  require_minimal(d, "is_maximally_atomic_algebraic");
  if (d.n == 1) return true;
  Semigroup t = transition_semigroup(d, cap);
  if (d.n == 2) return t.size() == 4;
  return is_set_transitive(permutation_subgroup(t)) && contains_rank(t, d.n - 1);
}

ClassFlags compute_class_flags(const Dfa& d, const Semigroup& t,
                               const MaximalityVerdict& verdict) {
  if (d.n < 2) throw std::invalid_argument("class flags need n >= 2");
  ClassFlags f{};
  f.fts = static_cast<unsigned __int128>(t.size()) == self_power(d.n);
  f.sts = is_set_transitive(permutation_subgroup(t)) && contains_rank(t, d.n - 1);
  f.mal = verdict.maximal;
  f.mna = verdict.atom_count == (std::uint64_t{1} << d.n);
  f.mcr = minimal_size(determinize(reverse(d))) == (std::size_t{1} << d.n);
  return f;
}

std::vector<std::string> chain_violations(const ClassFlags& f) {
  std::vector<std::string> v;
  if (f.fts && !f.sts) v.push_back("FTS instance outside STS");
  if (f.sts != f.mal) v.push_back("algebraic and semantic maximal-atomicity deciders disagree");
  if (f.mal && !f.mna) v.push_back("MAL instance outside MNA");
  if (f.mna != f.mcr) v.push_back("MNA and MCR disagree");
  return v;
}

ClassFlags classify(const Dfa& d, std::uint64_t cap, Execution exec) {
  require_minimal(d, "classify");
  if (d.n < 2) throw std::invalid_argument("classify requires n >= 2");
  Semigroup t = transition_semigroup(d, cap);
  MaximalityVerdict verdict = is_maximally_atomic_semantic(d, exec);
  ClassFlags f = compute_class_flags(d, t, verdict);
  std::vector<std::string> bad = chain_violations(f);
  if (!bad.empty()) {
    std::string msg = "class chain violated:";
    for (const auto& b : bad) msg += " " + b + ";";
    throw internal_error(msg);
  }
  return f;
}

}  // namespace atomlab
