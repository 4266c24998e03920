#include "atomlab/automata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <stdexcept>

#include "atomlab/errors.hpp"

namespace atomlab {

Dfa::Dfa(int n_, std::vector<std::string> alphabet_, std::vector<Transformation> delta_,
         int initial_, StateSet finals_)
    : n(n_),
      alphabet(std::move(alphabet_)),
      delta(std::move(delta_)),
      initial(initial_),
      finals(finals_) {
  check_degree(n);
  if (alphabet.empty()) throw std::invalid_argument("DFA needs at least one symbol");
  for (const auto& sym : alphabet) {
    if (sym.empty()) throw std::invalid_argument("empty alphabet symbol");
    for (char c : sym)
      if (std::isspace(static_cast<unsigned char>(c)))
        throw std::invalid_argument("alphabet symbol contains whitespace");
  }
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    for (std::size_t j = i + 1; j < alphabet.size(); ++j)
      if (alphabet[i] == alphabet[j])
        throw std::invalid_argument("duplicate alphabet symbol '" + alphabet[i] + "'");
  if (delta.size() != alphabet.size())
    throw std::invalid_argument("expected one transformation per symbol");
  for (const auto& t : delta)
    if (t.degree() != n) throw std::invalid_argument("transition degree differs from n");
  if (initial < 1 || initial > n)
    throw std::invalid_argument("initial state " + std::to_string(initial) + " outside 1.." +
                                std::to_string(n));
  if (finals.degree() != n) throw std::invalid_argument("final set degree differs from n");
}

int Dfa::symbol_index(std::string_view sym) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == sym) return static_cast<int>(i);
  return -1;
}

const Transformation& Dfa::letter(std::string_view sym) const {
  int i = symbol_index(sym);
  if (i < 0) throw std::invalid_argument("unknown symbol '" + std::string(sym) + "'");
  return delta[static_cast<std::size_t>(i)];
}

Word make_word(std::span<const std::string> alphabet, std::string_view text) {
  bool single = true;
  for (const auto& sym : alphabet)
    if (sym.size() != 1) single = false;
  auto index_of = [&](std::string_view tok) {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
      if (alphabet[i] == tok) return static_cast<int>(i);
    throw std::invalid_argument("unknown symbol '" + std::string(tok) + "' in word");
  };
  Word w;
  if (single) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      w.push_back(index_of(std::string_view(&c, 1)));
    }
    return w;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) w.push_back(index_of(text.substr(i, j - i)));
    i = j;
  }
  return w;
}

std::string word_text(std::span<const std::string> alphabet, const Word& w) {
  bool single = true;
  for (const auto& sym : alphabet)
    if (sym.size() != 1) single = false;
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    int idx = w[k];
    if (idx < 0 || idx >= static_cast<int>(alphabet.size()))
      throw std::invalid_argument("word index outside the alphabet");
    if (!single && k) out += ' ';
    out += alphabet[static_cast<std::size_t>(idx)];
  }
  return out;
}

Transformation induced(const Dfa& d, const Word& w) {
  Transformation t = Transformation::identity(d.n);
  for (int idx : w) {
    if (idx < 0 || idx >= static_cast<int>(d.alphabet.size()))
      throw std::invalid_argument("word index outside the alphabet");
    t = compose(d.delta[static_cast<std::size_t>(idx)], t);
  }
  return t;
}

bool accepts(const Dfa& d, const Word& w) { return d.finals.contains(induced(d, w).apply(d.initial)); }

Nfa reverse(const Dfa& d) {
  Nfa r;
  r.degree = d.n;
  r.alphabet = d.alphabet;
  r.labels.reserve(static_cast<std::size_t>(d.n));
  for (int q = 1; q <= d.n; ++q) r.labels.push_back(StateSet::singleton(d.n, q));
  r.eta.assign(static_cast<std::size_t>(d.n),
               std::vector<std::vector<int>>(d.alphabet.size()));
  for (std::size_t a = 0; a < d.delta.size(); ++a)
    for (int q = 1; q <= d.n; ++q)
      r.eta[static_cast<std::size_t>(d.delta[a].apply(q) - 1)][a].push_back(q - 1);
  for (auto& per_state : r.eta)
    for (auto& ids : per_state) std::sort(ids.begin(), ids.end());
  r.initials = [&] {
    std::vector<int> ids;
    for (int q : d.finals.members()) ids.push_back(q - 1);
    return ids;
  }();
  r.finals = {d.initial - 1};
  return r;
}

bool nfa_accepts(const Nfa& n, const Word& w) {
  std::vector<bool> cur(n.size(), false);
  for (int q : n.initials) cur[static_cast<std::size_t>(q)] = true;
  for (int idx : w) {
    if (idx < 0 || idx >= static_cast<int>(n.alphabet.size()))
      throw std::invalid_argument("word index outside the alphabet");
    std::vector<bool> next(n.size(), false);
    for (std::size_t q = 0; q < n.size(); ++q)
      if (cur[q])
        for (int r : n.eta[q][static_cast<std::size_t>(idx)]) next[static_cast<std::size_t>(r)] = true;
    cur = std::move(next);
  }
  for (int q : n.finals)
    if (cur[static_cast<std::size_t>(q)]) return true;
  return false;
}

SubsetDfa determinize(const Nfa& n) {
  SubsetDfa out;
  out.degree = n.degree;
  out.alphabet = n.alphabet;
  std::map<std::vector<int>, int> id;
  std::deque<std::vector<int>> work;
  auto intern = [&](std::vector<int> subset) {
    auto [it, fresh] = id.try_emplace(std::move(subset), static_cast<int>(id.size()));
    if (fresh) {
      out.members.push_back(it->first);
      StateSet lbl = StateSet::empty(n.degree);
      for (int q : it->first) lbl = lbl | n.labels[static_cast<std::size_t>(q)];
      out.label.push_back(lbl);
      bool fin = false;
      for (int q : n.finals)
        if (std::binary_search(it->first.begin(), it->first.end(), q)) fin = true;
      out.final_state.push_back(fin);
      work.push_back(it->first);
    }
    return it->second;
  };
  std::vector<int> start = n.initials;
  std::sort(start.begin(), start.end());
  out.initial = intern(std::move(start));
  while (!work.empty()) {
    std::vector<int> cur = work.front();
    work.pop_front();
    int cur_id = id.at(cur);
    if (out.next.size() <= static_cast<std::size_t>(cur_id)) out.next.resize(static_cast<std::size_t>(cur_id) + 1);
    out.next[static_cast<std::size_t>(cur_id)].resize(n.alphabet.size());
    for (std::size_t a = 0; a < n.alphabet.size(); ++a) {
      std::vector<bool> mark(n.size(), false);
      for (int q : cur)
        for (int r : n.eta[static_cast<std::size_t>(q)][a]) mark[static_cast<std::size_t>(r)] = true;
      std::vector<int> succ;
      for (std::size_t q = 0; q < n.size(); ++q)
        if (mark[q]) succ.push_back(static_cast<int>(q));
      out.next[static_cast<std::size_t>(cur_id)][a] = intern(std::move(succ));
    }
  }
  return out;
}

std::pair<std::vector<int>, int> moore_classes(const std::vector<std::vector<int>>& next,
                                               const std::vector<bool>& final_state) {
  std::size_t m = next.size();
  std::vector<int> cls(m);
  for (std::size_t q = 0; q < m; ++q) cls[q] = final_state[q] ? 1 : 0;
  auto renumber = [&](std::vector<int>& c) {
    std::map<int, int> seen;
    for (std::size_t q = 0; q < m; ++q) {
      auto [it, fresh] = seen.try_emplace(c[q], static_cast<int>(seen.size()));
      c[q] = it->second;
    }
    return static_cast<int>(seen.size());
  };
  int count = renumber(cls);
  for (;;) {
    std::map<std::vector<int>, int> sig_id;
    std::vector<int> refined(m);
    for (std::size_t q = 0; q < m; ++q) {
      std::vector<int> sig;
      sig.reserve(next[q].size() + 1);
      sig.push_back(cls[q]);
      for (int r : next[q]) sig.push_back(cls[static_cast<std::size_t>(r)]);
      auto [it, fresh] = sig_id.try_emplace(std::move(sig), static_cast<int>(sig_id.size()));
      refined[q] = it->second;
    }
    int refined_count = renumber(refined);
    if (refined_count == count) return {cls, count};
    cls = std::move(refined);
    count = refined_count;
  }
}

std::size_t minimal_size(const SubsetDfa& s) {
  return static_cast<std::size_t>(moore_classes(s.next, s.final_state).second);
}

namespace {

// Reachable part of d as 0-based arrays, states in BFS discovery order.
struct Reachable {
  std::vector<std::vector<int>> next;  // [state][symbol]
  std::vector<bool> final_state;
  std::vector<int> origin;  // original 1-based state per new id
};

Reachable reachable_part(const Dfa& d) {
  Reachable r;
  std::vector<int> id(static_cast<std::size_t>(d.n) + 1, -1);
  std::deque<int> work;
  auto visit = [&](int q) {
    if (id[static_cast<std::size_t>(q)] >= 0) return;
    id[static_cast<std::size_t>(q)] = static_cast<int>(r.origin.size());
    r.origin.push_back(q);
    work.push_back(q);
  };
  visit(d.initial);
  while (!work.empty()) {
    int q = work.front();
    work.pop_front();
    for (const auto& t : d.delta) visit(t.apply(q));
  }
  r.next.resize(r.origin.size(), std::vector<int>(d.alphabet.size()));
  r.final_state.resize(r.origin.size());
  for (std::size_t i = 0; i < r.origin.size(); ++i) {
    for (std::size_t a = 0; a < d.delta.size(); ++a)
      r.next[i][a] = id[static_cast<std::size_t>(d.delta[a].apply(r.origin[i]))];
    r.final_state[i] = d.finals.contains(r.origin[i]);
  }
  return r;
}

}  // namespace

Dfa quotient_dfa(const std::vector<std::vector<int>>& next, const std::vector<bool>& final_state,
                 int initial, std::span<const std::string> alphabet) {
  auto [cls, count] = moore_classes(next, final_state);
  if (count > kMaxDegree)
    throw capacity_error("minimal DFA needs " + std::to_string(count) +
                             " states, beyond the degree cap",
                         static_cast<std::uint64_t>(kMaxDegree));
  std::vector<std::vector<int>> class_next(static_cast<std::size_t>(count),
                                           std::vector<int>(alphabet.size(), -1));
  std::vector<bool> class_final(static_cast<std::size_t>(count), false);
  for (std::size_t q = 0; q < next.size(); ++q) {
    for (std::size_t a = 0; a < alphabet.size(); ++a)
      class_next[static_cast<std::size_t>(cls[q])][a] = cls[static_cast<std::size_t>(next[q][a])];
    if (final_state[q]) class_final[static_cast<std::size_t>(cls[q])] = true;
  }
  // Renumber classes 1..m in BFS discovery order from the initial class.
  std::vector<int> order(static_cast<std::size_t>(count), -1);
  std::deque<int> work;
  int assigned = 0;
  auto visit = [&](int c) {
    if (order[static_cast<std::size_t>(c)] >= 0) return;
    order[static_cast<std::size_t>(c)] = ++assigned;  // 1-based
    work.push_back(c);
  };
  visit(cls[static_cast<std::size_t>(initial)]);
  while (!work.empty()) {
    int c = work.front();
    work.pop_front();
    for (std::size_t a = 0; a < alphabet.size(); ++a) visit(class_next[static_cast<std::size_t>(c)][a]);
  }
  std::vector<Transformation> delta;
  delta.reserve(alphabet.size());
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    std::vector<int> row(static_cast<std::size_t>(count));
    for (int c = 0; c < count; ++c)
      row[static_cast<std::size_t>(order[static_cast<std::size_t>(c)] - 1)] =
          order[static_cast<std::size_t>(class_next[static_cast<std::size_t>(c)][a])];
    delta.emplace_back(count, row);
  }
  StateSet finals = StateSet::empty(count);
  for (int c = 0; c < count; ++c)
    if (class_final[static_cast<std::size_t>(c)])
      finals = finals.with(order[static_cast<std::size_t>(c)]);
  return Dfa(count, std::vector<std::string>(alphabet.begin(), alphabet.end()), std::move(delta),
             order[static_cast<std::size_t>(cls[static_cast<std::size_t>(initial)])], finals);
}

Dfa minimize(const Dfa& d) {
  Reachable r = reachable_part(d);
  return quotient_dfa(r.next, r.final_state, 0, d.alphabet);
}

bool is_minimal(const Dfa& d) {
  Reachable r = reachable_part(d);
  if (static_cast<int>(r.origin.size()) != d.n) return false;
  return moore_classes(r.next, r.final_state).second == d.n;
}

void require_minimal(const Dfa& d, const char* what) {
  if (!is_minimal(d))
    throw std::invalid_argument(std::string(what) + " requires a minimal DFA");
}

bool isomorphic(const Dfa& a, const Dfa& b) {
  require_minimal(a, "isomorphic");
  require_minimal(b, "isomorphic");
  if (a.n != b.n) return false;
  std::vector<std::string> syms_a = a.alphabet, syms_b = b.alphabet;
  std::sort(syms_a.begin(), syms_a.end());
  std::sort(syms_b.begin(), syms_b.end());
  if (syms_a != syms_b) return false;
  std::vector<int> map_ab(static_cast<std::size_t>(a.n) + 1, 0);
  std::vector<int> map_ba(static_cast<std::size_t>(b.n) + 1, 0);
  std::deque<std::pair<int, int>> work;
  auto pair_up = [&](int qa, int qb) {
    int& ab = map_ab[static_cast<std::size_t>(qa)];
    int& ba = map_ba[static_cast<std::size_t>(qb)];
    if (ab == 0 && ba == 0) {
      ab = qb;
      ba = qa;
      work.emplace_back(qa, qb);
      return true;
    }
    return ab == qb && ba == qa;
  };
  if (!pair_up(a.initial, b.initial)) return false;
  while (!work.empty()) {
    auto [qa, qb] = work.front();
    work.pop_front();
    if (a.finals.contains(qa) != b.finals.contains(qb)) return false;
    for (const auto& sym : syms_a)
      if (!pair_up(a.letter(sym).apply(qa), b.letter(sym).apply(qb))) return false;
  }
  return true;
}

Semigroup transition_semigroup(const Dfa& d, std::uint64_t cap) {
  if (d.n > 10)
    throw std::invalid_argument("transition semigroup on " + std::to_string(d.n) +
                                " states refused; semigroup analysis stops at n = 10");
  return closure(d.delta, cap);
}

}  // namespace atomlab
