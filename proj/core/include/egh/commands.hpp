#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "egh/conjecture.hpp"
#include "egh/input.hpp"
#include "egh/regular.hpp"

namespace egh {

// Everything a subcommand reports. Reports with the same inputs and seed
// are byte-identical, whatever the job count; wall-clock timing therefore
// never goes in here (the CLI prints it to stderr).
struct RunReport {
  std::string command;
  std::vector<std::string> echo_lines;  // canonical document text, reparseable
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> summary;
  long long violations = 0;
};

enum class ReportFormat { text, records };
std::string format_report(const RunReport& report, ReportFormat format);

struct HilbertOptions {
  int max_degree = -1;  // negative: socle when fully constrained, else max generator degree + 2
  MonomialOrder order = MonomialOrder::degrevlex;
};
RunReport run_hilbert(const InputDocument& doc, const HilbertOptions& options = {});

struct LppOptions {
  int bound = -1;
};
RunReport run_lpp(const InputDocument& doc, const LppOptions& options = {});

RunReport run_growth(int n, const DegreeSequence& a, int d, const BigInt& q);

struct EghOptions {
  int max_degree = -1;  // highest d checked; defaults to the socle degree
  MonomialOrder order = MonomialOrder::degrevlex;
};
RunReport run_egh(const InputDocument& doc, const EghOptions& options = {});

RunReport run_liaison(const InputDocument& doc);

struct SliceOptions {
  int bound = -1;
};
RunReport run_slice(const InputDocument& doc, const SliceOptions& options = {});

// Randomized per-degree growth campaign: seeded random ideals containing a
// random regular sequence of the given degrees, each checked at every
// degree up to the socle.
struct VerifyOptions {
  int n = 3;
  DegreeSequence degrees;
  std::uint32_t modulus = 101;
  int trials = 100;
  std::uint64_t seed = 0;
  int jobs = 1;
  double density = 0.5;
  int max_extra_generators = 3;
};
RunReport run_verify(const VerifyOptions& options);

// Exhaustive shadow-minimality search: every subset of every degree slice
// of the box, compared against the lex segment of the same size.
struct SearchOptions {
  int max_n = 3;
  int max_entry = 3;
  int max_degree = 3;
  int jobs = 1;
  // When set, restricts the search to the single cell (n, degrees, d).
  std::optional<DegreeSequence> degrees;
  std::optional<int> n;
  std::optional<int> d;
};
RunReport run_search(const SearchOptions& options);

}  // namespace egh
