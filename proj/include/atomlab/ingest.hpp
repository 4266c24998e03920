#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "atomlab/automata.hpp"

namespace atomlab {

// Text format: one datum per line, `#` comments. Keys n, alphabet, initial,
// final, then one row per symbol, either explicit images t(1)..t(n) or the
// keywords `perm-cycle`, `swap i j`, `merge i j`. Lines may come in any order.
Dfa parse_dfa(std::string_view text);

// Renders the explicit-row form; parse(render(d)) == d bit-exact.
std::string render_dfa(const Dfa& d);

// JSON mirror: {n, alphabet, initial, final, delta: {symbol: [images]}}.
Dfa parse_dfa_json(const nlohmann::json& j);
nlohmann::json render_dfa_json(const Dfa& d);

// The standard full-semigroup generator set: a = cycle, b = swap of 1 and 2,
// c = merge of n into 1; initial 1, final {n}. n = 2 drops the cycle letter,
// n = 1 is the one-state acceptor.
Dfa witness(int n);

// Minimal DFA of a pattern over literals, `|`, juxtaposition, `*`, `(`..`)`,
// `~` (empty set) and `_` (epsilon), built by the quotient fixpoint. Patterns
// denoting the empty language, or using no literal at all, are rejected.
Dfa regex_to_dfa(std::string_view pattern);

}  // namespace atomlab
