#include "egh/degree_sequence.hpp"

#include <stdexcept>

namespace egh {

DegreeSequence::DegreeSequence(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  std::int64_t prev = 0;
  for (std::int64_t e : entries_) {
    if (e != kUnbounded && e < 2)
      throw std::invalid_argument("finite degree sequence entries must be at least 2");
    if (e < prev) throw std::invalid_argument("degree sequence must be nondecreasing");
    prev = e;
  }
}

DegreeSequence DegreeSequence::all_unbounded(int r) {
  if (r < 0) throw std::invalid_argument("negative length");
  return DegreeSequence(std::vector<std::int64_t>(static_cast<std::size_t>(r), kUnbounded));
}

bool DegreeSequence::all_finite() const noexcept {
  return entries_.empty() || entries_.back() != kUnbounded;
}

int DegreeSequence::finite_count() const noexcept {
  int c = 0;
  for (std::int64_t e : entries_)
    if (e != kUnbounded) ++c;
  return c;
}

int DegreeSequence::socle_degree() const {
  if (!all_finite()) throw std::domain_error("socle degree undefined with unbounded entries");
  std::int64_t s = 0;
  for (std::int64_t e : entries_) s += e - 1;
  if (s > std::numeric_limits<int>::max()) throw std::domain_error("socle degree overflow");
  return static_cast<int>(s);
}

std::vector<std::int64_t> DegreeSequence::bounds(int n) const {
  if (n < length()) throw std::invalid_argument("degree sequence longer than variable count");
  std::vector<std::int64_t> b(entries_);
  b.resize(static_cast<std::size_t>(n), kUnbounded);
  return b;
}

DegreeSequence DegreeSequence::prefix(int r) const {
  if (r < 0 || r > length()) throw std::invalid_argument("prefix length out of range");
  return DegreeSequence(std::vector<std::int64_t>(entries_.begin(), entries_.begin() + r));
}

std::string DegreeSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ", ";
    out += entries_[i] == kUnbounded ? "inf" : std::to_string(entries_[i]);
  }
  return out;
}

}  // namespace egh
