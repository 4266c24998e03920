#include "atomlab/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "atomlab/errors.hpp"

namespace atomlab {

namespace {

const char* const kReservedKeys[] = {"n", "alphabet", "initial", "final"};

bool is_reserved(const std::string& key) {
  for (const char* r : kReservedKeys)
    if (key == r) return true;
  return false;
}

int parse_int(const std::string& tok, int line, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw parse_error(std::string(what) + " '" + tok + "' is not an integer", line);
  return v;
}

int parse_state(const std::string& tok, int n, int line, const char* what) {
  int v = parse_int(tok, line, what);
  if (v < 1 || v > n)
    throw parse_error(std::string(what) + " " + std::to_string(v) + " outside 1.." +
                          std::to_string(n),
                      line);
  return v;
}

struct RawEntry {
  std::vector<std::string> tokens;
  int line;
};

Transformation row_to_transformation(const std::vector<std::string>& tokens, int n, int line) {
  if (!tokens.empty() && tokens[0] == "perm-cycle") {
    if (tokens.size() != 1)
      throw parse_error("perm-cycle takes no arguments", line);
    return Transformation::cycle(n);
  }
  if (!tokens.empty() && (tokens[0] == "swap" || tokens[0] == "merge")) {
    if (tokens.size() != 3)
      throw parse_error(tokens[0] + " takes exactly two states", line);
    int i = parse_state(tokens[1], n, line, "state");
    int j = parse_state(tokens[2], n, line, "state");
    try {
      return tokens[0] == "swap" ? Transformation::transposition(n, i, j)
                                 : Transformation::unitary(n, i, j);
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what(), line);
    }
  }
  if (static_cast<int>(tokens.size()) != n)
    throw parse_error("transition row has " + std::to_string(tokens.size()) +
                          " entries, expected " + std::to_string(n),
                      line);
  std::vector<int> row;
  for (const auto& tok : tokens) row.push_back(parse_state(tok, n, line, "transition entry"));
  return Transformation(n, row);
}

}  // namespace

Dfa parse_dfa(std::string_view text) {
  std::map<std::string, RawEntry> entries;
  std::vector<std::string> row_order;  // symbol keys in file order
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line(text.substr(pos, eol == std::string_view::npos ? eol : eol - pos));
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;
    if (first.size() < 2 || first.back() != ':') {
      // allow "key :" and "key: value" alike by peeking for a lone colon
      std::string maybe_colon;
      if (first.back() == ':' || !(ss >> maybe_colon) || maybe_colon != ":")
        throw parse_error("expected 'key: values', got '" + first + "'", lineno);
      first += ':';
    }
    std::string key = first.substr(0, first.size() - 1);
    if (key.empty()) throw parse_error("empty key", lineno);
    RawEntry entry;
    entry.line = lineno;
    std::string tok;
    while (ss >> tok) entry.tokens.push_back(tok);
    if (!entries.emplace(key, entry).second)
      throw parse_error("duplicate key '" + key + "'", lineno);
    if (!is_reserved(key)) row_order.push_back(key);
  }

  auto take = [&](const char* key) -> RawEntry& {
    auto it = entries.find(key);
    if (it == entries.end()) throw parse_error(std::string("missing '") + key + ":' line");
    return it->second;
  };

  RawEntry& n_entry = take("n");
  if (n_entry.tokens.size() != 1) throw parse_error("'n:' takes one value", n_entry.line);
  int n = parse_int(n_entry.tokens[0], n_entry.line, "n");
  if (n < 1 || n > kMaxDegree)
    throw parse_error("n " + std::to_string(n) + " outside 1.." + std::to_string(kMaxDegree),
                      n_entry.line);

  RawEntry& alpha_entry = take("alphabet");
  std::vector<std::string> alphabet = alpha_entry.tokens;
  if (alphabet.empty()) throw parse_error("alphabet is empty", alpha_entry.line);
  for (const auto& sym : alphabet)
    if (is_reserved(sym))
      throw parse_error("symbol '" + sym + "' collides with a reserved key", alpha_entry.line);
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    for (std::size_t j = i + 1; j < alphabet.size(); ++j)
      if (alphabet[i] == alphabet[j])
        throw parse_error("duplicate symbol '" + alphabet[i] + "'", alpha_entry.line);

  RawEntry& init_entry = take("initial");
  if (init_entry.tokens.size() != 1)
    throw parse_error("'initial:' takes one state", init_entry.line);
  int initial = parse_state(init_entry.tokens[0], n, init_entry.line, "initial state");

  RawEntry& final_entry = take("final");
  StateSet finals = StateSet::empty(n);
  for (const auto& tok : final_entry.tokens)
    finals = finals.with(parse_state(tok, n, final_entry.line, "final state"));
  if (finals.is_empty())
    throw parse_error("final set is empty; empty languages are not supported", final_entry.line);

  for (const auto& key : row_order)
    if (std::find(alphabet.begin(), alphabet.end(), key) == alphabet.end())
      throw parse_error("unknown key '" + key + "'", entries.at(key).line);

  std::vector<Transformation> delta;
  for (const auto& sym : alphabet) {
    auto it = entries.find(sym);
    if (it == entries.end()) throw parse_error("missing transition row for symbol '" + sym + "'");
    delta.push_back(row_to_transformation(it->second.tokens, n, it->second.line));
  }

  return Dfa(n, std::move(alphabet), std::move(delta), initial, finals);
}

std::string render_dfa(const Dfa& d) {
  std::string out = "n: " + std::to_string(d.n) + "\n";
  out += "alphabet:";
  for (const auto& sym : d.alphabet) out += " " + sym;
  out += "\ninitial: " + std::to_string(d.initial) + "\nfinal:";
  for (int q : d.finals.members()) out += " " + std::to_string(q);
  out += "\n";
  for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
    out += d.alphabet[a] + ":";
    for (int q = 1; q <= d.n; ++q) out += " " + std::to_string(d.delta[a].apply(q));
    out += "\n";
  }
  return out;
}

Dfa parse_dfa_json(const nlohmann::json& j) {
  try {
    int n = j.at("n").get<int>();
    if (n < 1 || n > kMaxDegree)
      throw parse_error("n " + std::to_string(n) + " outside 1.." + std::to_string(kMaxDegree));
    std::vector<std::string> alphabet = j.at("alphabet").get<std::vector<std::string>>();
    int initial = j.at("initial").get<int>();
    StateSet finals = StateSet::empty(n);
    for (int q : j.at("final").get<std::vector<int>>()) {
      if (q < 1 || q > n)
        throw parse_error("final state " + std::to_string(q) + " outside 1.." + std::to_string(n));
      finals = finals.with(q);
    }
    if (finals.is_empty())
      throw parse_error("final set is empty; empty languages are not supported");
    const auto& delta_obj = j.at("delta");
    std::vector<Transformation> delta;
    for (const auto& sym : alphabet) {
      if (!delta_obj.contains(sym))
        throw parse_error("missing transition row for symbol '" + sym + "'");
      std::vector<int> row = delta_obj.at(sym).get<std::vector<int>>();
      for (int v : row)
        if (v < 1 || v > n)
          throw parse_error("transition entry " + std::to_string(v) + " outside 1.." +
                            std::to_string(n));
      delta.emplace_back(n, row);
    }
    return Dfa(n, std::move(alphabet), std::move(delta), initial, finals);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad DFA JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("bad DFA JSON: ") + e.what());
  }
}

nlohmann::json render_dfa_json(const Dfa& d) {
  nlohmann::json j;
  j["n"] = d.n;
  j["alphabet"] = d.alphabet;
  j["initial"] = d.initial;
  j["final"] = d.finals.members();
  nlohmann::json delta = nlohmann::json::object();
  for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
    std::vector<int> row;
    for (int q = 1; q <= d.n; ++q) row.push_back(d.delta[a].apply(q));
    delta[d.alphabet[a]] = row;
  }
  j["delta"] = delta;
  return j;
}

Dfa witness(int n) {
  if (n < 1) throw std::invalid_argument("witness: n >= 1");
  if (n > kMaxDegree)
    throw capacity_error("witness degree " + std::to_string(n) + " beyond the cap",
                         static_cast<std::uint64_t>(kMaxDegree));
  Dfa d = [&] {
    if (n == 1)
      return Dfa(1, {"a"}, {Transformation::identity(1)}, 1, StateSet::full(1));
    if (n == 2)
      return Dfa(2, {"a", "b"},
                 {Transformation::transposition(2, 1, 2), Transformation::unitary(2, 1, 2)}, 1,
                 StateSet::singleton(2, 2));
    return Dfa(n, {"a", "b", "c"},
               {Transformation::cycle(n), Transformation::transposition(n, 1, 2),
                Transformation::unitary(n, n, 1)},
               1, StateSet::singleton(n, n));
  }();
  if (!is_minimal(d)) throw internal_error("witness DFA failed its minimality check");
  return d;
}

// --- regex front-end -------------------------------------------------------

namespace {

struct Rx;
using RxP = std::shared_ptr<const Rx>;

struct Rx {
  enum Kind { kEmpty, kEps, kLit, kCat, kStar, kUnion } kind;
  char lit = 0;
  RxP a, b;             // cat children; star child in a
  std::vector<RxP> alts;  // union children, sorted by key, unique
  std::string key;
};

RxP mk_empty() {
  static const RxP e = [] {
    auto r = std::make_shared<Rx>();
    r->kind = Rx::kEmpty;
    r->key = "0";
    return r;
  }();
  return e;
}

RxP mk_eps() {
  static const RxP e = [] {
    auto r = std::make_shared<Rx>();
    r->kind = Rx::kEps;
    r->key = "1";
    return r;
  }();
  return e;
}

RxP mk_lit(char c) {
  auto r = std::make_shared<Rx>();
  r->kind = Rx::kLit;
  r->lit = c;
  r->key = std::string("c") + c;
  return r;
}

RxP mk_cat(RxP a, RxP b) {
  if (a->kind == Rx::kEmpty || b->kind == Rx::kEmpty) return mk_empty();
  if (a->kind == Rx::kEps) return b;
  if (b->kind == Rx::kEps) return a;
  if (a->kind == Rx::kCat) return mk_cat(a->a, mk_cat(a->b, b));
  auto r = std::make_shared<Rx>();
  r->kind = Rx::kCat;
  r->a = a;
  r->b = b;
  r->key = "(." + a->key + " " + b->key + ")";
  return r;
}

RxP mk_star(RxP a) {
  if (a->kind == Rx::kEmpty || a->kind == Rx::kEps) return mk_eps();
  if (a->kind == Rx::kStar) return a;
  auto r = std::make_shared<Rx>();
  r->kind = Rx::kStar;
  r->a = a;
  r->key = "(*" + a->key + ")";
  return r;
}

RxP mk_union(std::vector<RxP> parts) {
  std::vector<RxP> flat;
  for (auto& p : parts) {
    if (p->kind == Rx::kEmpty) continue;
    if (p->kind == Rx::kUnion)
      flat.insert(flat.end(), p->alts.begin(), p->alts.end());
    else
      flat.push_back(p);
  }
  std::sort(flat.begin(), flat.end(), [](const RxP& x, const RxP& y) { return x->key < y->key; });
  flat.erase(std::unique(flat.begin(), flat.end(),
                         [](const RxP& x, const RxP& y) { return x->key == y->key; }),
             flat.end());
  if (flat.empty()) return mk_empty();
  if (flat.size() == 1) return flat[0];
  auto r = std::make_shared<Rx>();
  r->kind = Rx::kUnion;
  r->alts = std::move(flat);
  r->key = "(+";
  for (std::size_t i = 0; i < r->alts.size(); ++i) {
    if (i) r->key += "|";
    r->key += r->alts[i]->key;
  }
  r->key += ")";
  return r;
}

bool nullable(const RxP& r) {
  switch (r->kind) {
    case Rx::kEmpty: return false;
    case Rx::kEps: return true;
    case Rx::kLit: return false;
    case Rx::kCat: return nullable(r->a) && nullable(r->b);
    case Rx::kStar: return true;
    case Rx::kUnion:
      for (const auto& p : r->alts)
        if (nullable(p)) return true;
      return false;
  }
  throw internal_error("unhandled pattern node");
}

RxP derivative(const RxP& r, char c) {
  switch (r->kind) {
    case Rx::kEmpty:
    case Rx::kEps: return mk_empty();
    case Rx::kLit: return r->lit == c ? mk_eps() : mk_empty();
    case Rx::kCat: {
      RxP head = mk_cat(derivative(r->a, c), r->b);
      if (!nullable(r->a)) return head;
      return mk_union({head, derivative(r->b, c)});
    }
    case Rx::kStar: return mk_cat(derivative(r->a, c), r);
    case Rx::kUnion: {
      std::vector<RxP> parts;
      for (const auto& p : r->alts) parts.push_back(derivative(p, c));
      return mk_union(std::move(parts));
    }
  }
  throw internal_error("unhandled pattern node");
}

struct PatternParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("pattern position " + std::to_string(pos + 1) + ": " + what);
  }
  bool at_end() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  static bool is_literal(char c) {
    return c != '|' && c != '*' && c != '(' && c != ')' && c != '~' && c != '_' &&
           !std::isspace(static_cast<unsigned char>(c));
  }

  RxP parse() {
    RxP r = parse_alt();
    if (!at_end()) fail("unexpected ')'");
    return r;
  }

  RxP parse_alt() {
    std::vector<RxP> parts{parse_cat()};
    while (!at_end() && peek() == '|') {
      ++pos;
      parts.push_back(parse_cat());
    }
    return mk_union(std::move(parts));
  }

  RxP parse_cat() {
    RxP r = mk_eps();  // the empty concatenation
    while (!at_end() && peek() != '|' && peek() != ')') r = mk_cat(r, parse_rep());
    return r;
  }

  RxP parse_rep() {
    RxP r = parse_atom();
    while (!at_end() && peek() == '*') {
      ++pos;
      r = mk_star(r);
    }
    return r;
  }

  RxP parse_atom() {
    if (at_end()) fail("pattern ended early");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      RxP r = parse_alt();
      if (at_end() || peek() != ')') fail("missing ')'");
      ++pos;
      return r;
    }
    if (c == '~') {
      ++pos;
      return mk_empty();
    }
    if (c == '_') {
      ++pos;
      return mk_eps();
    }
    if (c == '*') fail("'*' needs something to repeat");
    if (!is_literal(c)) fail(std::string("unexpected '") + c + "'");
    ++pos;
    return mk_lit(c);
  }
};

}  // namespace

Dfa regex_to_dfa(std::string_view pattern) {
  std::string trimmed;
  for (char c : pattern)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  PatternParser parser{trimmed};
  RxP root = parser.parse();

  std::vector<char> alphabet_chars;
  for (char c : trimmed)
    if (PatternParser::is_literal(c)) alphabet_chars.push_back(c);
  std::sort(alphabet_chars.begin(), alphabet_chars.end());
  alphabet_chars.erase(std::unique(alphabet_chars.begin(), alphabet_chars.end()),
                       alphabet_chars.end());
  if (alphabet_chars.empty())
    throw std::invalid_argument("pattern uses no alphabet symbols");

  constexpr std::size_t kStateCap = 100000;
  std::map<std::string, int> id;
  std::vector<RxP> states;
  std::deque<int> work;
  auto intern = [&](const RxP& r) {
    auto [it, fresh] = id.try_emplace(r->key, static_cast<int>(states.size()));
    if (fresh) {
      if (states.size() >= kStateCap)
        throw capacity_error("pattern quotient construction outgrew its state cap", kStateCap);
      states.push_back(r);
      work.push_back(it->second);
    }
    return it->second;
  };
  intern(root);
  std::vector<std::vector<int>> next;
  while (!work.empty()) {
    int cur = work.front();
    work.pop_front();
    if (next.size() <= static_cast<std::size_t>(cur)) next.resize(static_cast<std::size_t>(cur) + 1);
    next[static_cast<std::size_t>(cur)].resize(alphabet_chars.size());
    for (std::size_t a = 0; a < alphabet_chars.size(); ++a)
      next[static_cast<std::size_t>(cur)][a] =
          intern(derivative(states[static_cast<std::size_t>(cur)], alphabet_chars[a]));
  }

  std::vector<bool> final_state(states.size());
  for (std::size_t q = 0; q < states.size(); ++q) final_state[q] = nullable(states[q]);
  std::vector<std::string> alphabet;
  for (char c : alphabet_chars) alphabet.push_back(std::string(1, c));
  Dfa minimal = quotient_dfa(next, final_state, 0, alphabet);
  if (minimal.finals.is_empty())
    throw std::invalid_argument("pattern denotes the empty language, which is not supported");
  return minimal;
}

}  // namespace atomlab
