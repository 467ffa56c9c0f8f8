#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "ideal.hpp"

namespace polymat {

// Text grammar:
//   ideal     := monomial ( sep monomial )*      sep is ',' or a line break
//   monomial  := factor ( '*' factor )*
//   factor    := 'x' index ( '^' exponent )?     index, exponent >= 1
// Whitespace is insignificant. "1" is the unit monomial and is only accepted
// by parse_monomial. Juxtaposition such as x1x2 is rejected.

struct IdealDocument {
  MonomialIdeal ideal;
  bool ambient_inferred = false;
  std::string provenance;
};

namespace detail {

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_blanks(bool newlines) {
    while (!at_end()) {
      char c = text_[pos_];
      if (c == '\n' && !newlines) return;
      if (!std::isspace(static_cast<unsigned char>(c))) return;
      advance();
    }
  }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  std::size_t number(const char* what) {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
    std::size_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::size_t>(advance() - '0');
      if (v > 1'000'000) fail(std::string(what) + " too large");
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const { throw syntax_error(what, line_, column_); }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

/// Factor list (0-based index, exponent) of one monomial; empty for "1".
inline std::vector<std::pair<std::size_t, unsigned>> parse_factors(Lexer& lex, bool allow_one) {
  std::vector<std::pair<std::size_t, unsigned>> factors;
  lex.skip_blanks(false);
  if (lex.peek() == '1') {
    if (!allow_one) lex.fail("the unit monomial is not allowed as a generator");
    lex.advance();
    return factors;
  }
  for (;;) {
    lex.skip_blanks(false);
    if (lex.peek() != 'x') lex.fail("expected a variable x<k>");
    lex.advance();
    auto index = lex.number("variable index");
    if (index == 0) throw error(errc::index_out_of_range, "variables are numbered from x1");
    unsigned exponent = 1;
    lex.skip_blanks(false);
    if (lex.peek() == '^') {
      lex.advance();
      lex.skip_blanks(false);
      auto e = lex.number("exponent");
      if (e == 0 || e > 60000) lex.fail("exponent must lie in 1..60000");
      exponent = static_cast<unsigned>(e);
      lex.skip_blanks(false);
    }
    if (lex.peek() == 'x') lex.fail("factors must be joined by '*'");
    factors.emplace_back(index - 1, exponent);
    if (lex.peek() != '*') return factors;
    lex.advance();
  }
}

inline Monomial build_monomial(const std::vector<std::pair<std::size_t, unsigned>>& factors,
                               std::size_t ambient) {
  std::vector<Monomial::exponent_type> e(ambient, 0);
  for (auto [v, k] : factors) {
    if (v >= ambient)
      throw error(errc::index_out_of_range,
                  "x" + std::to_string(v + 1) + " outside " + std::to_string(ambient) + " variables");
    e[v] = static_cast<Monomial::exponent_type>(e[v] + k);
  }
  return Monomial(std::move(e));
}

} // namespace detail

/// Parses a generator list. With an explicit ambient, larger variable indices
/// are rejected; otherwise n is the largest index present.
inline IdealDocument parse_ideal_document(std::string_view text, std::optional<std::size_t> ambient = {}) {
  detail::Lexer lex(text);
  std::vector<std::vector<std::pair<std::size_t, unsigned>>> monomials;
  lex.skip_blanks(true);
  if (lex.at_end()) throw error(errc::empty_input, "no generators");
  for (;;) {
    monomials.push_back(detail::parse_factors(lex, false));
    lex.skip_blanks(false);
    if (lex.at_end()) break;
    char c = lex.peek();
    if (c != ',' && c != '\n') lex.fail(std::string("unexpected '") + c + "'");
    lex.advance();
    lex.skip_blanks(true);
    if (lex.at_end()) {
      if (c == ',') lex.fail("expected a monomial after ','");
      break;
    }
  }

  IdealDocument doc;
  std::size_t n = 0;
  if (ambient) {
    n = *ambient;
  } else {
    for (const auto& m : monomials)
      for (auto [v, k] : m) n = std::max(n, v + 1);
    doc.ambient_inferred = true;
  }
  std::vector<Monomial> gens;
  for (const auto& m : monomials) gens.push_back(detail::build_monomial(m, n));
  doc.ideal = minimalize(std::move(gens), n);
  return doc;
}

inline MonomialIdeal parse_ideal(std::string_view text, std::optional<std::size_t> ambient = {}) {
  return parse_ideal_document(text, ambient).ideal;
}

/// A single monomial argument; "1" is accepted here.
inline Monomial parse_monomial(std::string_view text, std::size_t ambient) {
  detail::Lexer lex(text);
  lex.skip_blanks(true);
  if (lex.at_end()) throw error(errc::empty_input, "no monomial");
  auto factors = detail::parse_factors(lex, true);
  lex.skip_blanks(true);
  if (!lex.at_end()) lex.fail(std::string("unexpected '") + lex.peek() + "'");
  return detail::build_monomial(factors, ambient);
}

inline std::string format_variable(std::size_t v) { return "x" + std::to_string(v + 1); }

inline std::string format_monomial(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.ambient(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += format_variable(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

/// Canonical serialization: generators in canonical order joined by ", ".
/// The zero ideal prints as "0".
inline std::string format_ideal(const MonomialIdeal& I) {
  if (I.is_zero()) return "0";
  std::string out;
  for (const auto& g : I.generators()) {
    if (!out.empty()) out += ", ";
    out += format_monomial(g);
  }
  return out;
}

inline std::string format_prime(const VariablePrime& p) {
  std::string out = "(";
  for (auto v : p.variables()) {
    if (out.size() > 1) out += ',';
    out += format_variable(v);
  }
  return out + ")";
}

} // namespace polymat
