#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "atomlab/transform.hpp"

namespace atomlab {

inline constexpr std::uint64_t kDefaultClosureCap = 2'000'000;

// A transformation semigroup on Q_n, elements sorted (canonical order).
struct Semigroup {
  int degree;
  std::vector<Transformation> generators;
  std::vector<Transformation> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const Transformation& t) const;
};

// Closure of the generators under composition. Throws capacity_error past cap.
Semigroup closure(std::span<const Transformation> generators,
                  std::uint64_t cap = kDefaultClosureCap);

// A permutation group on Q_n; order 0 marks the empty marker (no permutations at all).
class PermGroup {
public:
  static PermGroup empty(int n);
  // Closure of permutation generators (the identity appears on its own).
  static PermGroup from_generators(int n, std::span<const Transformation> gens,
                                   std::uint64_t cap = kDefaultClosureCap);

  int degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Transformation>& elements() const { return elements_; }
  const std::vector<Transformation>& generators() const { return generators_; }
  bool contains(const Transformation& t) const;

private:
  PermGroup(int n, std::vector<Transformation> elements, std::vector<Transformation> generators);
  friend PermGroup permutation_subgroup(const Semigroup& s);
  int degree_;
  std::vector<Transformation> elements_;    // sorted
  std::vector<Transformation> generators_;  // drives orbit searches
};

// The permutations of S, verified to form a group (a bug otherwise).
PermGroup permutation_subgroup(const Semigroup& s);

// Orbit of the subset under the group action. Requires a nonempty group.
std::set<StateSet> orbit(const PermGroup& g, const StateSet& s);

// Whether G moves some k-subset onto every k-subset. k = 0 and k = n hold for
// any nonempty group; the empty marker is never k-set-transitive.
bool is_k_set_transitive(const PermGroup& g, int k);

enum class TransitivityMode {
  fast,   // single decisive k per Livingstone-Wagner monotonicity
  full_k  // every k from 0 to n
};

bool is_set_transitive(const PermGroup& g, TransitivityMode mode = TransitivityMode::fast);

// The finitely many set-transitive groups, keyed by (degree, order).
enum class SetTransitiveTag {
  symmetric,
  alternating,
  agl_1_5,     // degree 5, order 20
  pgl_2_5,     // degree 6, order 120
  psl_2_8,     // degree 9, order 504
  pgamma_l_2_8 // degree 9, order 1512
};

std::string to_string(SetTransitiveTag tag);

// Names a group already known to be set-transitive. Throws internal_error on a
// (degree, order) pair outside the classification.
SetTransitiveTag recognize_set_transitive(const PermGroup& g);

// Number of orbits of the action on k-subsets (counts singleton orbits for the
// empty marker, so every k-subset is its own orbit there).
std::uint64_t orbit_count(const PermGroup& g, int k);

bool contains_rank(const Semigroup& s, int r);
bool contains_all_unitary(const Semigroup& s);
bool contains_all_singular(const Semigroup& s);

}  // namespace atomlab
