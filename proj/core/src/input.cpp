#include "egh/input.hpp"

#include <algorithm>
#include <cctype>

namespace egh {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  enum class Kind { ident, number, symbol, end };
  Kind kind = Kind::end;
  std::string text;     // ident
  long long value = 0;  // number
  char symbol = 0;
  int line = 0;
  int column = 0;
};

class LineLexer {
 public:
  LineLexer(std::string_view text, int line) : text_(text), line_(line) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, current_.column, message + describe_current());
  }

  Token expect_ident() {
    if (current_.kind != Token::Kind::ident) fail("expected an identifier");
    return take();
  }

  Token expect_keyword(const std::string& kw) {
    if (current_.kind != Token::Kind::ident || current_.text != kw)
      fail("expected `" + kw + "`");
    return take();
  }

  Token expect_number() {
    if (current_.kind != Token::Kind::number) fail("expected a number");
    return take();
  }

  Token expect_symbol(char c) {
    if (current_.kind != Token::Kind::symbol || current_.symbol != c)
      fail(std::string("expected `") + c + "`");
    return take();
  }

  bool at_symbol(char c) const {
    return current_.kind == Token::Kind::symbol && current_.symbol == c;
  }

  bool at_end() const { return current_.kind == Token::Kind::end; }

  void expect_end() {
    if (!at_end()) fail("expected end of line");
  }

 private:
  std::string describe_current() const {
    switch (current_.kind) {
      case Token::Kind::ident:
        return ", got `" + current_.text + "`";
      case Token::Kind::number:
        return ", got `" + std::to_string(current_.value) + "`";
      case Token::Kind::symbol:
        return std::string(", got `") + current_.symbol + "`";
      case Token::Kind::end:
        return ", got end of line";
    }
    return "";
  }

  void advance() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    current_ = Token{};
    current_.line = line_;
    current_.column = static_cast<int>(pos_) + 1;
    if (pos_ >= text_.size() || text_[pos_] == '#') {
      current_.kind = Token::Kind::end;
      return;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_'))
        ++pos_;
      current_.kind = Token::Kind::ident;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 18) throw ParseError(line_, current_.column, "number too large");
      current_.kind = Token::Kind::number;
      current_.value = std::stoll(digits);
      return;
    }
    if (std::string("^*+-,()").find(c) != std::string::npos) {
      current_.kind = Token::Kind::symbol;
      current_.symbol = c;
      ++pos_;
      return;
    }
    throw ParseError(line_, current_.column, std::string("unexpected character `") + c + "`");
  }

  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
  Token current_;
};

int variable_index(const Token& tok, const std::vector<std::string>& variables) {
  auto it = std::find(variables.begin(), variables.end(), tok.text);
  if (it == variables.end())
    throw ParseError(tok.line, tok.column, "undeclared variable `" + tok.text + "`");
  return static_cast<int>(it - variables.begin());
}

// factor := ident (^ number)?; monomial := 1 | factor (* factor)*
Monomial parse_monomial_tokens(LineLexer& lex, const std::vector<std::string>& variables) {
  std::vector<int> exps(variables.size(), 0);
  if (lex.peek().kind == Token::Kind::number) {
    const Token one = lex.expect_number();
    if (one.value != 1) throw ParseError(one.line, one.column, "monomial coefficient must be 1");
    return Monomial(std::move(exps));
  }
  while (true) {
    const Token var = lex.expect_ident();
    int e = 1;
    if (lex.at_symbol('^')) {
      lex.take();
      const Token num = lex.expect_number();
      if (num.value < 0) throw ParseError(num.line, num.column, "negative exponent");
      e = static_cast<int>(num.value);
    }
    exps[static_cast<std::size_t>(variable_index(var, variables))] += e;
    if (!lex.at_symbol('*')) break;
    lex.take();
  }
  return Monomial(std::move(exps));
}

// term := number | number * factors | factors
std::pair<Monomial, long long> parse_term_tokens(LineLexer& lex,
                                                 const std::vector<std::string>& variables) {
  long long coeff = 1;
  bool saw_coeff = false;
  if (lex.peek().kind == Token::Kind::number) {
    coeff = lex.expect_number().value;
    saw_coeff = true;
    if (lex.at_symbol('*'))
      lex.take();
    else
      return {Monomial::unit(static_cast<int>(variables.size())), coeff};
  }
  if (lex.peek().kind != Token::Kind::ident) {
    if (saw_coeff) lex.fail("expected a variable after `*`");
    lex.fail("expected a term");
  }
  std::vector<int> exps(variables.size(), 0);
  while (true) {
    const Token var = lex.expect_ident();
    int e = 1;
    if (lex.at_symbol('^')) {
      lex.take();
      const Token num = lex.expect_number();
      if (num.value < 0) throw ParseError(num.line, num.column, "negative exponent");
      e = static_cast<int>(num.value);
    }
    exps[static_cast<std::size_t>(variable_index(var, variables))] += e;
    if (!lex.at_symbol('*')) break;
    lex.take();
  }
  return {Monomial(std::move(exps)), coeff};
}

Polynomial parse_polynomial_tokens(LineLexer& lex, const PolyRingPtr& ring) {
  const Token start = lex.peek();
  const PrimeField& fp = ring->field;
  std::vector<Term> terms;
  long long sign = 1;
  if (lex.at_symbol('-')) {
    lex.take();
    sign = -1;
  } else if (lex.at_symbol('+')) {
    lex.take();
  }
  while (true) {
    auto [monomial, coeff] = parse_term_tokens(lex, ring->ambient.names());
    terms.push_back({std::move(monomial), fp.reduce(sign * coeff)});
    if (lex.at_symbol('+')) {
      lex.take();
      sign = 1;
    } else if (lex.at_symbol('-')) {
      lex.take();
      sign = -1;
    } else {
      break;
    }
  }
  try {
    return Polynomial(ring, std::move(terms));
  } catch (const std::invalid_argument&) {
    throw ParseError(start.line, start.column, "inhomogeneous generator");
  }
}

}  // namespace

MonomialIdeal InputDocument::monomial_ideal() const {
  if (kind != RingKind::monomial) throw std::logic_error("document declares a gf(p) ring");
  return {ambient(), monomial_generators};
}

PolynomialIdeal InputDocument::polynomial_ideal() const {
  if (kind != RingKind::prime_field) throw std::logic_error("document declares a monomial ring");
  return {poly_ring, polynomial_generators};
}

std::vector<std::string> InputDocument::to_lines() const {
  std::vector<std::string> lines;
  std::string ring_line = "ring ";
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (i > 0) ring_line += ", ";
    ring_line += variables[i];
  }
  ring_line += " over ";
  ring_line += kind == RingKind::monomial ? "monomial" : "gf(" + std::to_string(modulus) + ")";
  lines.push_back(std::move(ring_line));
  if (degrees && degrees->length() > 0) lines.push_back("degrees " + degrees->to_string());
  if (has_ideal) {
    std::string ideal_line = "ideal ";
    const AmbientInfo amb = ambient();
    bool first = true;
    if (kind == RingKind::monomial) {
      for (const Monomial& m : monomial_generators) {
        if (!first) ideal_line += ", ";
        ideal_line += to_string(m, amb);
        first = false;
      }
    } else {
      for (const Polynomial& f : polynomial_generators) {
        if (!first) ideal_line += ", ";
        ideal_line += to_string(f);
        first = false;
      }
    }
    lines.push_back(std::move(ideal_line));
  }
  return lines;
}

InputDocument parse_input(std::string_view text) {
  InputDocument doc;
  bool saw_ring = false;
  bool saw_degrees = false;
  bool saw_ideal = false;

  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos <= text.size();) {
    const std::size_t next = text.find('\n', pos);
    if (next == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }

  for (int line_no = 1; line_no <= static_cast<int>(lines.size()); ++line_no) {
    LineLexer lex(lines[static_cast<std::size_t>(line_no - 1)], line_no);
    if (lex.at_end()) continue;
    const Token head = lex.expect_ident();
    if (head.text == "ring") {
      if (saw_ring) throw ParseError(head.line, head.column, "duplicate ring declaration");
      saw_ring = true;
      while (true) {
        const Token var = lex.expect_ident();
        if (var.text == "over") throw ParseError(var.line, var.column, "expected a variable name");
        if (std::find(doc.variables.begin(), doc.variables.end(), var.text) !=
            doc.variables.end())
          throw ParseError(var.line, var.column, "duplicate variable `" + var.text + "`");
        doc.variables.push_back(var.text);
        if (lex.at_symbol(',')) {
          lex.take();
          continue;
        }
        break;
      }
      lex.expect_keyword("over");
      const Token field = lex.expect_ident();
      if (field.text == "monomial") {
        doc.kind = RingKind::monomial;
      } else if (field.text == "gf") {
        lex.expect_symbol('(');
        const Token p = lex.expect_number();
        lex.expect_symbol(')');
        doc.kind = RingKind::prime_field;
        if (p.value < 2 || p.value >= (1 << 16) || !is_prime(static_cast<std::uint32_t>(p.value)))
          throw ParseError(p.line, p.column, "non-prime modulus " + std::to_string(p.value));
        doc.modulus = static_cast<std::uint32_t>(p.value);
        doc.poly_ring = make_poly_ring(doc.variables, doc.modulus);
      } else {
        throw ParseError(field.line, field.column, "expected `gf(p)` or `monomial`");
      }
      lex.expect_end();
    } else if (head.text == "degrees") {
      if (!saw_ring) throw ParseError(head.line, head.column, "ring must be declared first");
      if (saw_degrees) throw ParseError(head.line, head.column, "duplicate degrees declaration");
      saw_degrees = true;
      std::vector<std::int64_t> entries;
      while (true) {
        const Token entry = lex.peek();
        if (entry.kind == Token::Kind::ident && entry.text == "inf") {
          lex.take();
          entries.push_back(DegreeSequence::kUnbounded);
        } else {
          const Token num = lex.expect_number();
          if (num.value < 2)
            throw ParseError(num.line, num.column, "degree entries must be at least 2");
          if (!entries.empty() && entries.back() == DegreeSequence::kUnbounded)
            throw ParseError(num.line, num.column, "finite degree after inf");
          if (!entries.empty() && num.value < entries.back())
            throw ParseError(num.line, num.column, "degrees must be nondecreasing");
          entries.push_back(num.value);
        }
        if (lex.at_symbol(',')) {
          lex.take();
          continue;
        }
        break;
      }
      lex.expect_end();
      if (static_cast<int>(entries.size()) > static_cast<int>(doc.variables.size()))
        throw ParseError(head.line, head.column, "more degrees than variables");
      doc.degrees = DegreeSequence(std::move(entries));
    } else if (head.text == "ideal") {
      if (!saw_ring) throw ParseError(head.line, head.column, "ring must be declared first");
      if (saw_ideal) throw ParseError(head.line, head.column, "duplicate ideal declaration");
      saw_ideal = true;
      doc.has_ideal = true;
      while (true) {
        if (doc.kind == RingKind::monomial)
          doc.monomial_generators.push_back(parse_monomial_tokens(lex, doc.variables));
        else
          doc.polynomial_generators.push_back(parse_polynomial_tokens(lex, doc.poly_ring));
        if (lex.at_symbol(',')) {
          lex.take();
          continue;
        }
        break;
      }
      lex.expect_end();
    } else {
      throw ParseError(head.line, head.column,
                       "expected `ring`, `degrees` or `ideal`, got `" + head.text + "`");
    }
  }
  if (!saw_ring) throw ParseError(1, 1, "missing ring declaration");
  return doc;
}

Monomial parse_monomial(std::string_view text, const AmbientInfo& ambient) {
  LineLexer lex(text, 1);
  Monomial m = parse_monomial_tokens(lex, ambient.names());
  lex.expect_end();
  return m;
}

Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring) {
  LineLexer lex(text, 1);
  Polynomial f = parse_polynomial_tokens(lex, ring);
  lex.expect_end();
  return f;
}

}  // namespace egh
