#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "egh/groebner.hpp"
#include "egh/monomial_ideal.hpp"

namespace egh {

// Syntax or validation failure with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

enum class RingKind { monomial, prime_field };

// One parsed input document. Grammar, line oriented, `#` comments:
//   ring <ident>(, <ident>)* over (gf(<p>) | monomial)
//   degrees <int|inf>(, <int|inf>)*
//   ideal <generator>(, <generator>)*
// The ring line is mandatory and comes first; degrees and ideal are
// optional. Generators are monomials (`x^2*y`) for monomial rings and
// polynomials (`x^2 - y*z`) over gf(p).
struct InputDocument {
  std::vector<std::string> variables;
  RingKind kind = RingKind::monomial;
  std::uint32_t modulus = 0;  // meaningful for prime_field only
  std::optional<DegreeSequence> degrees;
  bool has_ideal = false;
  std::vector<Monomial> monomial_generators;
  std::vector<Polynomial> polynomial_generators;
  PolyRingPtr poly_ring;  // set for prime_field documents

  AmbientInfo ambient() const { return AmbientInfo(variables); }
  MonomialIdeal monomial_ideal() const;
  PolynomialIdeal polynomial_ideal() const;

  // Canonical text form; parses back to an equal document.
  std::vector<std::string> to_lines() const;
};

InputDocument parse_input(std::string_view text);

// Stand-alone generator parsers sharing the document grammar.
Monomial parse_monomial(std::string_view text, const AmbientInfo& ambient);
Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring);

}  // namespace egh
