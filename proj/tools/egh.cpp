// Command-line surface over the egh core library. Subcommands read the
// line-oriented input language (ring / degrees / ideal) from a file or
// stdin, or take everything from flags where no ideal is involved. Exit
// codes: 0 success, 1 verified violation found, 2 input or execution error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "egh/budget.hpp"
#include "egh/commands.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

egh::DegreeSequence parse_degrees_flag(const std::string& text) {
  std::vector<std::int64_t> entries;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item == "inf") {
      entries.push_back(egh::DegreeSequence::kUnbounded);
    } else {
      std::size_t used = 0;
      const long long value = std::stoll(item, &used);
      if (used != item.size()) throw std::runtime_error("bad degree entry: " + item);
      entries.push_back(value);
    }
  }
  return egh::DegreeSequence(std::move(entries));
}

egh::MonomialOrder parse_order_flag(const std::string& text) {
  if (text == "lex") return egh::MonomialOrder::lex;
  if (text == "degrevlex") return egh::MonomialOrder::degrevlex;
  throw std::runtime_error("unknown order: " + text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hilbert-function toolkit: lex-plus-powers compressions, "
               "Macaulay-type growth bounds, liaison and slice checks, and seeded "
               "verification campaigns over prime fields"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string format_name = "text";
  std::size_t budget = egh::slice_budget();
  app.add_option("--format", format_name, "Report format: text or records")
      ->check(CLI::IsMember({"text", "records"}));
  app.add_option("--budget", budget, "Max monomials per enumerated degree slice");

  std::string input_path = "-";
  std::string degrees_text;
  std::string order_name = "degrevlex";
  int max_degree = -1;
  int bound = -1;
  int n = 3;
  int d = 0;
  std::string q_text = "0";
  std::uint32_t modulus = 101;
  int trials = 100;
  std::uint64_t seed = 0;
  int jobs = 1;
  double density = 0.5;
  int max_extra = 3;
  int max_n = 3;
  int max_entry = 3;
  int search_max_degree = 3;

  auto* cmd_hilbert = app.add_subcommand("hilbert", "Hilbert function table of the ideal");
  cmd_hilbert->add_option("input", input_path, "Input file, or - for stdin");
  cmd_hilbert->add_option("--max-degree", max_degree, "Highest degree in the table");
  cmd_hilbert->add_option("--order", order_name, "Groebner order for gf(p) ideals");

  auto* cmd_lpp = app.add_subcommand("lpp", "Lex-plus-powers compression of the ideal");
  cmd_lpp->add_option("input", input_path, "Input file, or - for stdin");
  cmd_lpp->add_option("--max-degree", bound, "Compression bound");

  auto* cmd_growth = app.add_subcommand("growth", "Refined and classical growth bounds");
  cmd_growth->add_option("--n", n, "Variable count")->required();
  cmd_growth->add_option("--degrees", degrees_text, "Regular sequence degrees, e.g. 2,2");
  cmd_growth->add_option("--d", d, "Degree with the known value")->required();
  cmd_growth->add_option("--q", q_text, "Quotient-side value at degree d")->required();

  auto* cmd_egh = app.add_subcommand("egh", "Per-degree growth check across all degrees");
  cmd_egh->add_option("input", input_path, "Input file, or - for stdin");
  cmd_egh->add_option("--max-degree", max_degree, "Highest degree checked");
  cmd_egh->add_option("--order", order_name, "Groebner order for gf(p) ideals");

  auto* cmd_liaison = app.add_subcommand("liaison", "Linkage identity table for the ideal");
  cmd_liaison->add_option("input", input_path, "Input file, or - for stdin");

  auto* cmd_slice = app.add_subcommand("slice", "Slice construction along the last variable");
  cmd_slice->add_option("input", input_path, "Input file, or - for stdin");
  cmd_slice->add_option("--max-degree", bound, "Certified Hilbert function bound");

  auto* cmd_verify = app.add_subcommand("verify", "Seeded random growth-bound campaign");
  cmd_verify->add_option("--n", n, "Variable count")->required();
  cmd_verify->add_option("--degrees", degrees_text, "Regular sequence degrees")->required();
  cmd_verify->add_option("--p", modulus, "Prime modulus");
  cmd_verify->add_option("--trials", trials, "Instance count");
  cmd_verify->add_option("--seed", seed, "Master seed");
  cmd_verify->add_option("--jobs", jobs, "Worker threads");
  cmd_verify->add_option("--density", density, "Random form term density");
  cmd_verify->add_option("--max-extra", max_extra, "Max extra generators per instance");

  auto* cmd_search = app.add_subcommand("search", "Exhaustive shadow-minimality search");
  cmd_search->add_option("--max-n", max_n, "Largest variable count");
  cmd_search->add_option("--max-entry", max_entry, "Largest degree sequence entry");
  cmd_search->add_option("--max-d", search_max_degree, "Largest slice degree");
  cmd_search->add_option("--n", n, "Single cell: variable count");
  cmd_search->add_option("--degrees", degrees_text, "Single cell: degree sequence");
  cmd_search->add_option("--d", d, "Single cell: slice degree");
  cmd_search->add_option("--jobs", jobs, "Worker threads");

  CLI11_PARSE(app, argc, argv);

  const auto format =
      format_name == "records" ? egh::ReportFormat::records : egh::ReportFormat::text;
  egh::set_slice_budget(budget);

  try {
    const auto start = std::chrono::steady_clock::now();
    egh::RunReport report;
    if (cmd_hilbert->parsed()) {
      const auto doc = egh::parse_input(read_input(input_path));
      report = egh::run_hilbert(doc, {max_degree, parse_order_flag(order_name)});
    } else if (cmd_lpp->parsed()) {
      const auto doc = egh::parse_input(read_input(input_path));
      report = egh::run_lpp(doc, {bound});
    } else if (cmd_growth->parsed()) {
      report = egh::run_growth(n, parse_degrees_flag(degrees_text), d, egh::BigInt(q_text));
    } else if (cmd_egh->parsed()) {
      const auto doc = egh::parse_input(read_input(input_path));
      report = egh::run_egh(doc, {max_degree, parse_order_flag(order_name)});
    } else if (cmd_liaison->parsed()) {
      const auto doc = egh::parse_input(read_input(input_path));
      report = egh::run_liaison(doc);
    } else if (cmd_slice->parsed()) {
      const auto doc = egh::parse_input(read_input(input_path));
      report = egh::run_slice(doc, {bound});
    } else if (cmd_verify->parsed()) {
      egh::VerifyOptions options;
      options.n = n;
      options.degrees = parse_degrees_flag(degrees_text);
      options.modulus = modulus;
      options.trials = trials;
      options.seed = seed;
      options.jobs = jobs;
      options.density = density;
      options.max_extra_generators = max_extra;
      report = egh::run_verify(options);
    } else if (cmd_search->parsed()) {
      egh::SearchOptions options;
      options.max_n = max_n;
      options.max_entry = max_entry;
      options.max_degree = search_max_degree;
      options.jobs = jobs;
      if (!degrees_text.empty()) {
        options.degrees = parse_degrees_flag(degrees_text);
        if (cmd_search->count("--n") > 0) options.n = n;
        if (cmd_search->count("--d") > 0) options.d = d;
      }
      report = egh::run_search(options);
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    std::cout << egh::format_report(report, format);
    // Timing stays out of the report so byte-identical runs stay byte-identical.
    std::cerr << "elapsed: "
              << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()
              << " ms\n";
    return report.violations > 0 ? 1 : 0;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
}
