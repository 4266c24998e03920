#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace atomlab {

// Degree cap: keeps subset tables at 2^16 and bit words at 16 bits.
inline constexpr int kMaxDegree = 16;

// Throws std::invalid_argument outside 1..kMaxDegree.
void check_degree(int n);

// A subset of Q_n = {1,..,n}, stored as a bit word (bit i-1 <-> state i).
class StateSet {
public:
  StateSet(int n, std::uint16_t bits);

  static StateSet empty(int n) { return StateSet(n, 0); }
  static StateSet full(int n);
  static StateSet singleton(int n, int i);
  static StateSet of(int n, std::initializer_list<int> members);
  static StateSet of(int n, std::span<const int> members);

  int degree() const { return n_; }
  std::uint16_t bits() const { return bits_; }
  int count() const { return __builtin_popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }
  bool contains(int i) const;
  bool is_subset_of(const StateSet& other) const;

  StateSet with(int i) const;
  StateSet without(int i) const;
  StateSet complement() const;
  std::vector<int> members() const;
  int min_member() const;  // smallest element; throws on the empty set

  std::string to_string() const;  // "{1,2}", "{}" when empty
  std::string pretty() const;     // like to_string but the empty set prints as a symbol

  friend StateSet operator|(const StateSet& a, const StateSet& b);
  friend StateSet operator&(const StateSet& a, const StateSet& b);
  auto operator<=>(const StateSet&) const = default;

private:
  std::uint8_t n_;
  std::uint16_t bits_;
};

std::ostream& operator<<(std::ostream& os, const StateSet& s);

// A total map t: Q_n -> Q_n. Immutable; ordered lexicographically by image row.
class Transformation {
public:
  Transformation(int n, std::span<const int> targets);
  Transformation(int n, std::initializer_list<int> targets);

  static Transformation identity(int n);
  // (i -> j): sends i to j, fixes everything else.
  static Transformation unitary(int n, int i, int j);
  // (i, j): swaps i and j.
  static Transformation transposition(int n, int i, int j);
  // (1, 2, .., n).
  static Transformation cycle(int n);

  int degree() const { return n_; }
  int apply(int i) const;
  int rank() const;
  bool is_identity() const;
  bool is_permutation() const { return rank() == n_; }
  Transformation inverse() const;  // permutations only

  StateSet image() const;
  StateSet image(const StateSet& s) const;
  StateSet preimage(const StateSet& s) const;
  StateSet coimage() const { return image().complement(); }

  std::string to_string() const;      // "[2,3,4,4]"
  std::string cycle_notation() const;  // permutations only; identity prints "()"

  auto operator<=>(const Transformation&) const = default;

  friend Transformation compose(const Transformation& s, const Transformation& t);
  friend struct TransformationHash;

private:
  Transformation() : n_(0), map_{} {}
  std::uint8_t n_;
  std::array<std::uint8_t, kMaxDegree> map_;  // map_[i-1] = t(i); unused slots 0
};

// (s o t)(i) = s(t(i)). Degrees must match.
Transformation compose(const Transformation& s, const Transformation& t);

std::ostream& operator<<(std::ostream& os, const Transformation& t);

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const {
    std::uint64_t lo = 0, hi = 0;
    for (int i = 0; i < 8; ++i) lo = lo << 8 | t.map_[i];
    for (int i = 8; i < 16; ++i) hi = hi << 8 | t.map_[i];
    std::uint64_t h = lo * 0x9e3779b97f4a7c15ull ^ hi ^ t.n_;
    return static_cast<std::size_t>(h ^ (h >> 32));
  }
};

}  // namespace atomlab
