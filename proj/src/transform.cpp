#include "atomlab/transform.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace atomlab {

void check_degree(int n) {
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("degree " + std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxDegree));
}

StateSet::StateSet(int n, std::uint16_t bits) : n_(0), bits_(bits) {
  check_degree(n);
  n_ = static_cast<std::uint8_t>(n);
  std::uint16_t mask = static_cast<std::uint16_t>((1u << n) - 1);
  if (bits & ~mask)
    throw std::invalid_argument("state set literal has bits beyond degree " + std::to_string(n));
}

StateSet StateSet::full(int n) {
  check_degree(n);
  return StateSet(n, static_cast<std::uint16_t>((1u << n) - 1));
}

StateSet StateSet::singleton(int n, int i) {
  check_degree(n);
  if (i < 1 || i > n)
    throw std::invalid_argument("state " + std::to_string(i) + " outside 1.." + std::to_string(n));
  return StateSet(n, static_cast<std::uint16_t>(1u << (i - 1)));
}

StateSet StateSet::of(int n, std::initializer_list<int> members) {
  return of(n, std::span<const int>(members.begin(), members.size()));
}

StateSet StateSet::of(int n, std::span<const int> members) {
  StateSet s = empty(n);
  for (int i : members) s = s.with(i);
  return s;
}

bool StateSet::contains(int i) const {
  if (i < 1 || i > n_) return false;
  return bits_ >> (i - 1) & 1;
}

bool StateSet::is_subset_of(const StateSet& other) const {
  return n_ == other.n_ && (bits_ & ~other.bits_) == 0;
}

StateSet StateSet::with(int i) const {
  if (i < 1 || i > n_)
    throw std::invalid_argument("state " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  return StateSet(n_, static_cast<std::uint16_t>(bits_ | 1u << (i - 1)));
}

StateSet StateSet::without(int i) const {
  if (i < 1 || i > n_)
    throw std::invalid_argument("state " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  return StateSet(n_, static_cast<std::uint16_t>(bits_ & ~(1u << (i - 1))));
}

StateSet StateSet::complement() const {
  std::uint16_t mask = static_cast<std::uint16_t>((1u << n_) - 1);
  return StateSet(n_, static_cast<std::uint16_t>(~bits_ & mask));
}

std::vector<int> StateSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (int i = 1; i <= n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

int StateSet::min_member() const {
  if (bits_ == 0) throw std::invalid_argument("min_member of the empty set");
  return __builtin_ctz(bits_) + 1;
}

std::string StateSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i = 1; i <= n_; ++i) {
    if (!contains(i)) continue;
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  out += '}';
  return out;
}

std::string StateSet::pretty() const { return bits_ == 0 ? "∅" : to_string(); }

StateSet operator|(const StateSet& a, const StateSet& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("state set degrees differ");
  return StateSet(a.n_, static_cast<std::uint16_t>(a.bits_ | b.bits_));
}

StateSet operator&(const StateSet& a, const StateSet& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("state set degrees differ");
  return StateSet(a.n_, static_cast<std::uint16_t>(a.bits_ & b.bits_));
}

std::ostream& operator<<(std::ostream& os, const StateSet& s) { return os << s.to_string(); }

Transformation::Transformation(int n, std::span<const int> targets) : n_(0), map_{} {
  check_degree(n);
  if (static_cast<int>(targets.size()) != n)
    throw std::invalid_argument("transformation row has " + std::to_string(targets.size()) +
                                " entries, expected " + std::to_string(n));
  n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) {
    int v = targets[static_cast<std::size_t>(i)];
    if (v < 1 || v > n)
      throw std::invalid_argument("transformation entry " + std::to_string(v) + " outside 1.." +
                                  std::to_string(n));
    map_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
  }
}

Transformation::Transformation(int n, std::initializer_list<int> targets)
    : Transformation(n, std::span<const int>(targets.begin(), targets.size())) {}

Transformation Transformation::identity(int n) {
  check_degree(n);
  Transformation t;
  t.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) t.map_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
  return t;
}

Transformation Transformation::unitary(int n, int i, int j) {
  if (i == j) throw std::invalid_argument("unitary (i -> j) requires i != j");
  Transformation t = identity(n);
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("unitary states outside 1.." + std::to_string(n));
  t.map_[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(j);
  return t;
}

Transformation Transformation::transposition(int n, int i, int j) {
  if (i == j) throw std::invalid_argument("transposition (i, j) requires i != j");
  Transformation t = identity(n);
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("transposition states outside 1.." + std::to_string(n));
  t.map_[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(j);
  t.map_[static_cast<std::size_t>(j - 1)] = static_cast<std::uint8_t>(i);
  return t;
}

Transformation Transformation::cycle(int n) {
  Transformation t = identity(n);
  for (int i = 0; i < n; ++i)
    t.map_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1 == n ? 1 : i + 2);
  return t;
}

int Transformation::apply(int i) const {
  if (i < 1 || i > n_)
    throw std::invalid_argument("state " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  return map_[static_cast<std::size_t>(i - 1)];
}

int Transformation::rank() const { return image().count(); }

bool Transformation::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (map_[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

Transformation Transformation::inverse() const {
  if (!is_permutation()) throw std::invalid_argument("inverse of a non-permutation");
  Transformation t;
  t.n_ = n_;
  for (int i = 0; i < n_; ++i)
    t.map_[static_cast<std::size_t>(map_[static_cast<std::size_t>(i)] - 1)] =
        static_cast<std::uint8_t>(i + 1);
  return t;
}

StateSet Transformation::image() const {
  std::uint16_t bits = 0;
  for (int i = 0; i < n_; ++i) bits |= static_cast<std::uint16_t>(1u << (map_[static_cast<std::size_t>(i)] - 1));
  return StateSet(n_, bits);
}

StateSet Transformation::image(const StateSet& s) const {
  if (s.degree() != n_) throw std::invalid_argument("image: degree mismatch");
  std::uint16_t bits = 0;
  std::uint16_t in = s.bits();
  while (in) {
    int i = __builtin_ctz(in);
    in &= static_cast<std::uint16_t>(in - 1);
    bits |= static_cast<std::uint16_t>(1u << (map_[static_cast<std::size_t>(i)] - 1));
  }
  return StateSet(n_, bits);
}

StateSet Transformation::preimage(const StateSet& s) const {
  if (s.degree() != n_) throw std::invalid_argument("preimage: degree mismatch");
  std::uint16_t bits = 0;
  for (int i = 0; i < n_; ++i)
    if (s.bits() >> (map_[static_cast<std::size_t>(i)] - 1) & 1)
      bits |= static_cast<std::uint16_t>(1u << i);
  return StateSet(n_, bits);
}

std::string Transformation::to_string() const {
  std::string out = "[";
  for (int i = 0; i < n_; ++i) {
    if (i) out += ',';
    out += std::to_string(static_cast<int>(map_[static_cast<std::size_t>(i)]));
  }
  out += ']';
  return out;
}

std::string Transformation::cycle_notation() const {
  if (!is_permutation()) throw std::invalid_argument("cycle notation of a non-permutation");
  std::string out;
  std::uint16_t seen = 0;
  for (int start = 1; start <= n_; ++start) {
    if (seen >> (start - 1) & 1) continue;
    int len = 0;
    std::string cyc;
    for (int i = start; !(seen >> (i - 1) & 1); i = apply(i)) {
      seen |= static_cast<std::uint16_t>(1u << (i - 1));
      if (len) cyc += ' ';
      cyc += std::to_string(i);
      ++len;
    }
    if (len > 1) out += "(" + cyc + ")";
  }
  return out.empty() ? "()" : out;
}

Transformation compose(const Transformation& s, const Transformation& t) {
  if (s.n_ != t.n_) throw std::invalid_argument("compose: degree mismatch");
  Transformation r;
  r.n_ = s.n_;
  for (int i = 0; i < s.n_; ++i)
    r.map_[static_cast<std::size_t>(i)] =
        s.map_[static_cast<std::size_t>(t.map_[static_cast<std::size_t>(i)] - 1)];
  return r;
}

std::ostream& operator<<(std::ostream& os, const Transformation& t) { return os << t.to_string(); }

}  // namespace atomlab
