#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace egh {

// The nondecreasing degree vector a = (a_1, ..., a_r). Finite entries are
// at least 2; kUnbounded entries (printed `inf`) come last and encode the
// absence of a pure-power constraint on that variable.
class DegreeSequence {
 public:
  static constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

  DegreeSequence() = default;  // the empty sequence: no constraints
  explicit DegreeSequence(std::vector<std::int64_t> entries);
  static DegreeSequence all_unbounded(int r);

  int length() const noexcept { return static_cast<int>(entries_.size()); }
  std::int64_t entry(int i) const { return entries_.at(static_cast<std::size_t>(i)); }
  bool is_finite(int i) const { return entry(i) != kUnbounded; }
  bool all_finite() const noexcept;
  int finite_count() const noexcept;
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

  // s = sum over entries of (a_i - 1). Throws std::domain_error if any
  // entry is unbounded.
  int socle_degree() const;

  // Exponent bounds padded to length n with kUnbounded. Throws if n < length.
  std::vector<std::int64_t> bounds(int n) const;

  // Prefix of the first r entries.
  DegreeSequence prefix(int r) const;

  std::string to_string() const;  // "2, 3, inf"

  bool operator==(const DegreeSequence&) const = default;

 private:
  std::vector<std::int64_t> entries_;
};

}  // namespace egh
