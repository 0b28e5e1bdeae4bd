#include "egh/commands.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "egh/box.hpp"
#include "egh/budget.hpp"

namespace egh {

namespace {

// Results are written by index, so the worker schedule cannot change them.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) workers.emplace_back(worker);
  for (std::thread& t : workers) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::string compact(std::string text) {
  std::erase(text, ' ');
  return text;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

InputDocument synthetic_monomial_document(int n, const DegreeSequence& a) {
  InputDocument doc;
  doc.variables = AmbientInfo::with_default_names(n).names();
  doc.kind = RingKind::monomial;
  doc.degrees = a;
  return doc;
}

void append_header_record(std::string& out, const RunReport& report) {
  // The echo lines reparse into the original document; the header record
  // carries the same content space-free.
  out += "record=header command=" + report.command;
  const InputDocument doc = parse_input(join(report.echo_lines, "\n"));
  out += " ring=" + join(doc.variables, ",");
  out += " field=";
  out += doc.kind == RingKind::monomial ? "monomial" : "gf" + std::to_string(doc.modulus);
  if (doc.degrees) out += " degrees=" + compact(doc.degrees->to_string());
  if (doc.has_ideal) {
    std::vector<std::string> gens;
    if (doc.kind == RingKind::monomial) {
      const AmbientInfo amb = doc.ambient();
      for (const Monomial& m : doc.monomial_generators) gens.push_back(to_string(m, amb));
    } else {
      for (const Polynomial& f : doc.polynomial_generators) gens.push_back(to_string(f, true));
    }
    out += " ideal=" + join(gens, ",");
  }
  out += "\n";
}

}  // namespace

std::string format_report(const RunReport& report, ReportFormat format) {
  std::string out;
  if (format == ReportFormat::text) {
    out += "command: " + report.command + "\n";
    for (const std::string& line : report.echo_lines) out += line + "\n";
    if (!report.rows.empty()) {
      std::vector<std::size_t> widths;
      for (const std::string& c : report.columns) widths.push_back(c.size());
      for (const auto& row : report.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
          widths[i] = std::max(widths[i], row[i].size());
      auto pad = [&](const std::string& cell, std::size_t i, bool last) {
        std::string s = cell;
        if (!last) s += std::string(widths[i] - cell.size() + 2, ' ');
        return s;
      };
      for (std::size_t i = 0; i < report.columns.size(); ++i)
        out += pad(report.columns[i], i, i + 1 == report.columns.size());
      out += "\n";
      for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += pad(row[i], i, i + 1 == row.size());
        out += "\n";
      }
    }
    for (const auto& [key, value] : report.summary) out += key + ": " + value + "\n";
    out += "violations: " + std::to_string(report.violations) + "\n";
    return out;
  }
  append_header_record(out, report);
  for (const auto& row : report.rows) {
    out += "record=row";
    for (std::size_t i = 0; i < row.size(); ++i)
      out += " " + report.columns[i] + "=" + compact(row[i]);
    out += "\n";
  }
  out += "record=summary";
  for (const auto& [key, value] : report.summary) out += " " + key + "=" + compact(value);
  out += " violations=" + std::to_string(report.violations) + "\n";
  return out;
}

namespace {

int default_bound(const InputDocument& doc, int max_generator_degree) {
  if (doc.degrees && doc.degrees->all_finite() &&
      doc.degrees->length() == static_cast<int>(doc.variables.size()))
    return doc.degrees->socle_degree();
  return std::max(max_generator_degree, 0) + 2;
}

HilbertFunction document_hilbert(const InputDocument& doc, int bound, MonomialOrder order) {
  if (!doc.has_ideal) throw std::invalid_argument("document has no ideal declaration");
  if (doc.kind == RingKind::monomial) return hilbert_function(doc.monomial_ideal(), bound);
  return hilbert_function_poly(doc.polynomial_ideal(), bound, order);
}

int document_max_generator_degree(const InputDocument& doc) {
  if (doc.kind == RingKind::monomial) {
    int top = -1;
    for (const Monomial& m : doc.monomial_generators) top = std::max(top, m.degree());
    return top;
  }
  int top = -1;
  for (const Polynomial& f : doc.polynomial_generators) top = std::max(top, f.degree());
  return top;
}

}  // namespace

RunReport run_hilbert(const InputDocument& doc, const HilbertOptions& options) {
  RunReport report;
  report.command = "hilbert";
  report.echo_lines = doc.to_lines();
  const int bound = options.max_degree >= 0
                        ? options.max_degree
                        : default_bound(doc, document_max_generator_degree(doc));
  const HilbertFunction h = document_hilbert(doc, bound, options.order);
  report.columns = {"degree", "h"};
  for (int d = 0; d <= bound; ++d)
    report.rows.push_back({std::to_string(d), h.at(d).str()});
  report.summary.emplace_back("max_degree", std::to_string(bound));
  return report;
}

RunReport run_lpp(const InputDocument& doc, const LppOptions& options) {
  RunReport report;
  report.command = "lpp";
  report.echo_lines = doc.to_lines();
  if (doc.kind != RingKind::monomial)
    throw std::invalid_argument("lpp compression needs a monomial ring");
  if (!doc.degrees) throw std::invalid_argument("document has no degrees declaration");
  if (!doc.has_ideal) throw std::invalid_argument("document has no ideal declaration");
  const MonomialIdeal I = doc.monomial_ideal();
  const LppIdeal compressed = cl_compress(I, *doc.degrees, options.bound);
  const HilbertFunction h_in = hilbert_function(I, compressed.bound());
  const HilbertFunction h_out = hilbert_function(compressed.whole(), compressed.bound());
  report.columns = {"degree", "h", "h_lpp", "pass"};
  for (int d = 0; d <= compressed.bound(); ++d) {
    const bool ok = h_in.at(d) == h_out.at(d);
    if (!ok) ++report.violations;
    report.rows.push_back(
        {std::to_string(d), h_in.at(d).str(), h_out.at(d).str(), ok ? "yes" : "no"});
  }
  report.summary.emplace_back("lpp", to_string(compressed.whole()));
  report.summary.emplace_back("lex_part", to_string(compressed.lex_part()));
  report.summary.emplace_back("bound", std::to_string(compressed.bound()));
  return report;
}

RunReport run_growth(int n, const DegreeSequence& a, int d, const BigInt& q) {
  RunReport report;
  report.command = "growth";
  report.echo_lines = synthetic_monomial_document(n, a).to_lines();
  const BigInt refined = refined_bound(n, a, d, q);
  const BigInt macaulay = macaulay_growth(n, d, q);
  if (refined > macaulay) ++report.violations;  // cannot happen; reported, not assumed
  report.summary.emplace_back("d", std::to_string(d));
  report.summary.emplace_back("q", q.str());
  report.summary.emplace_back("bound", refined.str());
  report.summary.emplace_back("macaulay", macaulay.str());
  report.summary.emplace_back("refined", refined < macaulay ? "true" : "false");
  return report;
}

RunReport run_egh(const InputDocument& doc, const EghOptions& options) {
  RunReport report;
  report.command = "egh";
  report.echo_lines = doc.to_lines();
  if (!doc.degrees) throw std::invalid_argument("document has no degrees declaration");
  const int n = static_cast<int>(doc.variables.size());
  const DegreeSequence& a = *doc.degrees;
  int top = options.max_degree;
  if (top < 0) {
    if (!(a.all_finite() && a.length() == n))
      throw std::invalid_argument("--max-degree is required unless the degrees are a full box");
    top = a.socle_degree();
  }
  const HilbertFunction h = document_hilbert(doc, top + 1, options.order);
  report.columns = {"d", "h_d", "h_d1", "bound", "pass"};
  for (int d = 0; d <= top; ++d) {
    const BigInt box = box_count(n, a, d);
    std::string bound_text = "-";
    bool ok = false;
    if (h.at(d) <= box) {
      const BigInt bound = lpp_growth(a, n, d, h.at(d));
      bound_text = bound.str();
      ok = h.at(d + 1) <= bound;
    }
    if (!ok) ++report.violations;
    report.rows.push_back({std::to_string(d), h.at(d).str(), h.at(d + 1).str(), bound_text,
                           ok ? "yes" : "no"});
  }
  report.summary.emplace_back("max_degree", std::to_string(top));
  return report;
}

RunReport run_liaison(const InputDocument& doc) {
  RunReport report;
  report.command = "liaison";
  report.echo_lines = doc.to_lines();
  if (doc.kind != RingKind::monomial)
    throw std::invalid_argument("liaison needs a monomial ring");
  if (!doc.degrees) throw std::invalid_argument("document has no degrees declaration");
  if (!doc.has_ideal) throw std::invalid_argument("document has no ideal declaration");
  const MonomialIdeal J = doc.monomial_ideal();
  const DegreeSequence& a = *doc.degrees;
  const MonomialIdeal linked = liaison_transform(J, a);
  const MonomialIdeal M = MonomialIdeal::pure_powers(J.ambient(), a);
  const int s = a.socle_degree();
  const HilbertFunction hM = hilbert_function(M, s);
  const HilbertFunction hJ = hilbert_function(J, s);
  const HilbertFunction hL = hilbert_function(linked, s);
  report.columns = {"t", "h_ci", "h", "h_linked", "pass"};
  for (int t = 0; t <= s; ++t) {
    const bool ok = hM.at(t) == hJ.at(t) + hL.at(s - t);
    if (!ok) ++report.violations;
    report.rows.push_back({std::to_string(t), hM.at(t).str(), hJ.at(t).str(),
                           hL.at(s - t).str(), ok ? "yes" : "no"});
  }
  report.summary.emplace_back("linked", to_string(linked));
  report.summary.emplace_back("socle", std::to_string(s));
  return report;
}

RunReport run_slice(const InputDocument& doc, const SliceOptions& options) {
  RunReport report;
  report.command = "slice";
  report.echo_lines = doc.to_lines();
  if (doc.kind != RingKind::monomial)
    throw std::invalid_argument("slice construction needs a monomial ring");
  if (!doc.degrees) throw std::invalid_argument("document has no degrees declaration");
  if (!doc.has_ideal) throw std::invalid_argument("document has no ideal declaration");
  const MonomialIdeal I = doc.monomial_ideal();
  const SliceDecomposition decomposition = slice_construct(I, *doc.degrees, options.bound);
  const HilbertFunction h_in = hilbert_function(I, decomposition.bound());
  const HilbertFunction h_out = hilbert_function(decomposition.result(), decomposition.bound());
  report.columns = {"check", "h", "h_sliced", "pass"};
  auto add_row = [&report](std::string check, std::string lhs, std::string rhs, bool ok) {
    if (!ok) ++report.violations;
    report.rows.push_back({std::move(check), std::move(lhs), std::move(rhs), ok ? "yes" : "no"});
  };
  for (int d = 0; d <= decomposition.bound(); ++d)
    add_row(std::to_string(d), h_in.at(d).str(), h_out.at(d).str(), h_in.at(d) == h_out.at(d));
  add_row("powers", "-", "-", contains_pure_powers(decomposition.result(), *doc.degrees));
  add_row("partition", "-", "-", decomposition.verify(I));
  report.summary.emplace_back("result", to_string(decomposition.result()));
  report.summary.emplace_back("saturation_index",
                              std::to_string(decomposition.saturation_index()));
  return report;
}

RunReport run_verify(const VerifyOptions& options) {
  RunReport report;
  report.command = "verify";
  if (!options.degrees.all_finite() || options.degrees.length() != options.n)
    throw std::invalid_argument("verify needs a fully finite, full-length degree sequence");
  InputDocument echo;
  echo.variables = AmbientInfo::with_default_names(options.n).names();
  echo.kind = RingKind::prime_field;
  echo.modulus = options.modulus;
  echo.degrees = options.degrees;
  report.echo_lines = echo.to_lines();

  const DegreeSequence& a = options.degrees;
  const int n = options.n;
  const int s = a.socle_degree();
  const PolyRingPtr ring = make_poly_ring(echo.variables, options.modulus);

  struct InstanceResult {
    bool ok = true;
    int degree = -1;
    std::string note;
  };
  std::vector<InstanceResult> results(static_cast<std::size_t>(options.trials));

  parallel_for(results.size(), options.jobs, [&](std::size_t i) {
    std::mt19937_64 rng = make_instance_rng(options.seed, i);
    const std::uint64_t fs_seed = rng();
    const auto fs = random_regular_sequence(a, ring, fs_seed, options.density);
    const int extra_count =
        static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(options.max_extra_generators) + 1));
    std::vector<int> extra;
    for (int j = 0; j < extra_count; ++j) {
      const int lo = static_cast<int>(a.entry(0));
      extra.push_back(lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(s - lo + 1))));
    }
    const std::uint64_t ideal_seed = rng();
    const PolynomialIdeal I = random_containing_ideal(fs, extra, options.density, ideal_seed);
    const HilbertFunction h = hilbert_function_poly(I, s + 1);
    for (int d = 0; d <= s; ++d) {
      if (h.at(d) > box_count(n, a, d)) {
        results[i] = {false, d, "value_above_box"};
        return;
      }
      if (h.at(d + 1) > lpp_growth(a, n, d, h.at(d))) {
        results[i] = {false, d, "growth_bound_exceeded"};
        return;
      }
    }
  });

  report.columns = {"instance", "d", "note"};
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].ok) continue;
    ++report.violations;
    report.rows.push_back({std::to_string(i), std::to_string(results[i].degree),
                           results[i].note});
  }
  report.summary.emplace_back("trials", std::to_string(options.trials));
  report.summary.emplace_back("seed", std::to_string(options.seed));
  report.summary.emplace_back("socle", std::to_string(s));
  return report;
}

RunReport run_search(const SearchOptions& options) {
  RunReport report;
  report.command = "search";

  struct Cell {
    int n;
    DegreeSequence a;
    int d;
  };
  std::vector<Cell> cells;
  if (options.degrees) {
    const int n = options.n.value_or(options.degrees->length());
    if (options.d) {
      cells.push_back({n, *options.degrees, *options.d});
    } else {
      for (int d = 0; d <= options.max_degree; ++d) cells.push_back({n, *options.degrees, d});
    }
  } else {
    for (int n = 1; n <= options.max_n; ++n) {
      std::vector<std::int64_t> entries(static_cast<std::size_t>(n), 2);
      while (true) {
        for (int d = 0; d <= options.max_degree; ++d)
          cells.push_back({n, DegreeSequence(entries), d});
        // next nondecreasing tuple with entries in [2, max_entry]
        int pos = n - 1;
        while (pos >= 0 && entries[static_cast<std::size_t>(pos)] == options.max_entry) --pos;
        if (pos < 0) break;
        const std::int64_t bumped = entries[static_cast<std::size_t>(pos)] + 1;
        for (int i = pos; i < n; ++i) entries[static_cast<std::size_t>(i)] = bumped;
      }
    }
  }

  const int echo_n = options.degrees ? options.n.value_or(options.degrees->length())
                                     : options.max_n;
  report.echo_lines =
      synthetic_monomial_document(echo_n, options.degrees ? *options.degrees : DegreeSequence())
          .to_lines();

  report.columns = {"n", "degrees", "d", "subsets", "violations"};
  long long total_subsets = 0;
  for (const Cell& cell : cells) {
    const auto box = box_monomials(cell.n, cell.a, cell.d);
    const std::size_t m = box.size();
    if (m > 24) throw BudgetExceededError("subset search", BigInt(1) << m, 1u << 24);
    const auto bounds = cell.a.bounds(cell.n);
    // Shadow sizes of the lex segments, one per subset size.
    std::vector<std::size_t> segment_shadow(m + 1, 0);
    for (std::size_t k = 0; k <= m; ++k) {
      const std::vector<Monomial> segment(box.begin(), box.begin() + static_cast<std::ptrdiff_t>(k));
      segment_shadow[k] = upper_shadow(segment, bounds).size();
    }
    const std::size_t subset_count = std::size_t{1} << m;
    std::vector<unsigned char> violated(subset_count, 0);
    parallel_for(subset_count, options.jobs, [&](std::size_t mask) {
      std::vector<Monomial> subset;
      for (std::size_t b = 0; b < m; ++b)
        if (mask & (std::size_t{1} << b)) subset.push_back(box[b]);
      const std::size_t shadow = upper_shadow(subset, bounds).size();
      if (shadow < segment_shadow[subset.size()]) violated[mask] = 1;
    });
    long long cell_violations = 0;
    for (unsigned char v : violated) cell_violations += v;
    report.violations += cell_violations;
    total_subsets += static_cast<long long>(subset_count);
    report.rows.push_back({std::to_string(cell.n), compact(cell.a.to_string()),
                           std::to_string(cell.d), std::to_string(subset_count),
                           std::to_string(cell_violations)});
  }
  report.summary.emplace_back("cells", std::to_string(cells.size()));
  report.summary.emplace_back("subsets", std::to_string(total_subsets));
  return report;
}

}  // namespace egh
