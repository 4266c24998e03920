#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace atomlab {

// A closure or enumeration outgrew its configured cap.
class capacity_error : public std::runtime_error {
public:
  capacity_error(const std::string& what, std::uint64_t cap)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::uint64_t cap() const noexcept { return cap_; }

private:
  std::uint64_t cap_;
};

// Input text could not be parsed. line is 1-based, 0 when not applicable.
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

// An invariant that is supposed to hold unconditionally failed; indicates a bug.
class internal_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace atomlab
