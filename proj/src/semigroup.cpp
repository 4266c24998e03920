#include "atomlab/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "atomlab/combinatorics.hpp"
#include "atomlab/errors.hpp"

namespace atomlab {

bool Semigroup::contains(const Transformation& t) const {
  return std::binary_search(elements.begin(), elements.end(), t);
}

Semigroup closure(std::span<const Transformation> generators, std::uint64_t cap) {
  if (generators.empty()) throw std::invalid_argument("closure of an empty generating set");
  int n = generators[0].degree();
  for (const auto& g : generators)
    if (g.degree() != n) throw std::invalid_argument("closure: generator degrees differ");

  std::unordered_set<Transformation, TransformationHash> seen;
  std::deque<Transformation> work;
  auto add = [&](const Transformation& t) {
    if (seen.contains(t)) return;
    if (seen.size() >= cap)
      throw capacity_error("semigroup closure outgrew its element cap", cap);
    seen.insert(t);
    work.push_back(t);
  };
  for (const auto& g : generators) add(g);
  // delta_{wa} = delta_a o delta_w, so extending a word on the right composes a
  // generator on the left; that single direction reaches every product.
  while (!work.empty()) {
    Transformation cur = work.front();
    work.pop_front();
    for (const auto& g : generators) add(compose(g, cur));
  }

  Semigroup s;
  s.degree = n;
  s.generators.assign(generators.begin(), generators.end());
  s.elements.assign(seen.begin(), seen.end());
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

PermGroup::PermGroup(int n, std::vector<Transformation> elements,
                     std::vector<Transformation> generators)
    : degree_(n), elements_(std::move(elements)), generators_(std::move(generators)) {}

PermGroup PermGroup::empty(int n) {
  check_degree(n);
  return PermGroup(n, {}, {});
}

PermGroup PermGroup::from_generators(int n, std::span<const Transformation> gens,
                                     std::uint64_t cap) {
  check_degree(n);
  if (gens.empty()) throw std::invalid_argument("group closure of an empty generating set");
  for (const auto& g : gens) {
    if (g.degree() != n) throw std::invalid_argument("group closure: generator degrees differ");
    if (!g.is_permutation())
      throw std::invalid_argument("group closure: generator " + g.to_string() +
                                  " is not a permutation");
  }
  Semigroup s = closure(gens, cap);
  return PermGroup(n, std::move(s.elements), std::vector<Transformation>(gens.begin(), gens.end()));
}

bool PermGroup::contains(const Transformation& t) const {
  return std::binary_search(elements_.begin(), elements_.end(), t);
}

PermGroup permutation_subgroup(const Semigroup& s) {
  std::vector<Transformation> perms;
  for (const auto& t : s.elements)
    if (t.is_permutation()) perms.push_back(t);
  if (perms.empty()) return PermGroup::empty(s.degree);
  // The permutations of a closed semigroup form a group: products of
  // permutations in s stay permutations, and powers supply identity and
  // inverses. Verify the cheap half of that.
  if (!std::binary_search(perms.begin(), perms.end(), Transformation::identity(s.degree)))
    throw internal_error("permutations of a closed semigroup lack the identity");
  for (const auto& p : perms)
    if (!std::binary_search(perms.begin(), perms.end(), p.inverse()))
      throw internal_error("permutations of a closed semigroup lack an inverse");
  std::vector<Transformation> gens = perms;
  return PermGroup(s.degree, std::move(perms), std::move(gens));
}

std::set<StateSet> orbit(const PermGroup& g, const StateSet& s) {
  if (g.order() == 0) throw std::invalid_argument("orbit under the empty marker group");
  if (s.degree() != g.degree()) throw std::invalid_argument("orbit: degree mismatch");
  if (g.generators().size() == g.order()) {
    // The generator list is the whole group, so one sweep covers the orbit.
    std::set<StateSet> out;
    for (const auto& p : g.elements()) out.insert(p.image(s));
    return out;
  }
  std::set<StateSet> seen{s};
  std::deque<StateSet> work{s};
  while (!work.empty()) {
    StateSet cur = work.front();
    work.pop_front();
    for (const auto& p : g.generators()) {
      StateSet next = p.image(cur);
      if (seen.insert(next).second) work.push_back(next);
    }
  }
  return seen;
}

bool is_k_set_transitive(const PermGroup& g, int k) {
  int n = g.degree();
  if (k < 0 || k > n)
    throw std::invalid_argument("k = " + std::to_string(k) + " outside 0.." + std::to_string(n));
  if (g.order() == 0) return false;
  if (k == 0 || k == n) return true;
  StateSet base(n, static_cast<std::uint16_t>((1u << k) - 1));
  return orbit(g, base).size() == binomial(n, k);
}

bool is_set_transitive(const PermGroup& g, TransitivityMode mode) {
  int n = g.degree();
  if (mode == TransitivityMode::full_k) {
    for (int k = 0; k <= n; ++k)
      if (!is_k_set_transitive(g, k)) return false;
    return true;
  }
  // k-homogeneity propagates from k = floor(n/2) outward to every other k, so
  // one orbit check decides (n = 3 uses k = 1: 1- and 2-subset orbits pair up
  // through complements, and the midpoint would be fractional).
  if (n >= 4) return is_k_set_transitive(g, n / 2);
  if (n == 3) return is_k_set_transitive(g, 1);
  for (int k = 0; k <= n; ++k)
    if (!is_k_set_transitive(g, k)) return false;
  return true;
}

std::string to_string(SetTransitiveTag tag) {
  switch (tag) {
    case SetTransitiveTag::symmetric: return "S_n";
    case SetTransitiveTag::alternating: return "A_n";
    case SetTransitiveTag::agl_1_5: return "AGL(1,5)";
    case SetTransitiveTag::pgl_2_5: return "PGL(2,5)";
    case SetTransitiveTag::psl_2_8: return "PSL(2,8)";
    case SetTransitiveTag::pgamma_l_2_8: return "PGammaL(2,8)";
  }
  throw internal_error("unhandled set-transitive tag");
}

SetTransitiveTag recognize_set_transitive(const PermGroup& g) {
  int n = g.degree();
  std::uint64_t ord = g.order();
  if (ord == factorial(n)) return SetTransitiveTag::symmetric;
  if (n >= 3 && ord * 2 == factorial(n)) return SetTransitiveTag::alternating;
  if (n == 5 && ord == 20) return SetTransitiveTag::agl_1_5;
  if (n == 6 && ord == 120) return SetTransitiveTag::pgl_2_5;
  if (n == 9 && ord == 504) return SetTransitiveTag::psl_2_8;
  if (n == 9 && ord == 1512) return SetTransitiveTag::pgamma_l_2_8;
  throw internal_error("set-transitive group of degree " + std::to_string(n) + " and order " +
                       std::to_string(ord) + " matches no classification row");
}

std::uint64_t orbit_count(const PermGroup& g, int k) {
  int n = g.degree();
  if (k < 0 || k > n)
    throw std::invalid_argument("k = " + std::to_string(k) + " outside 0.." + std::to_string(n));
  if (g.order() == 0) return binomial(n, k);  // every subset sits alone
  std::uint64_t count = 0;
  std::vector<bool> seen(1u << n, false);
  for_each_subset_of_size(n, k, [&](std::uint32_t bits) {
    if (seen[bits]) return;
    ++count;
    for (const auto& t : orbit(g, StateSet(n, static_cast<std::uint16_t>(bits))))
      seen[t.bits()] = true;
  });
  return count;
}

bool contains_rank(const Semigroup& s, int r) {
  for (const auto& t : s.elements)
    if (t.rank() == r) return true;
  return false;
}

bool contains_all_unitary(const Semigroup& s) {
  int n = s.degree;
  if (n == 1) return true;  // no unitaries exist, vacuously
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j && !s.contains(Transformation::unitary(n, i, j))) return false;
  return true;
}

bool contains_all_singular(const Semigroup& s) {
  int n = s.degree;
  unsigned __int128 target = self_power(n) - factorial(n);
  unsigned __int128 have = 0;
  for (const auto& t : s.elements)
    if (!t.is_permutation()) ++have;
  return have == target;
}

}  // namespace atomlab
