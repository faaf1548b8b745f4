#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <variant>

#include "multisecant/polynomial.hpp"

namespace msec {

namespace detail {

// Parses a decimal integer or int/int fraction starting at pos.
inline bool parse_number(std::string_view s, std::size_t& pos, mpz_class& num, mpz_class& den) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) return false;
  num = mpz_class(std::string(s.substr(start, pos - start)));
  den = 1;
  std::size_t save = pos;
  while (save < s.size() && std::isspace(static_cast<unsigned char>(s[save]))) ++save;
  if (save < s.size() && s[save] == '/') {
    ++save;
    while (save < s.size() && std::isspace(static_cast<unsigned char>(s[save]))) ++save;
    std::size_t ds = save;
    while (save < s.size() && std::isdigit(static_cast<unsigned char>(s[save]))) ++save;
    if (save == ds) throw ParseError("expected denominator", save);
    den = mpz_class(std::string(s.substr(ds, save - ds)));
    if (den == 0) throw ParseError("zero denominator", ds);
    pos = save;
  }
  return true;
}

}  // namespace detail

// Polynomial text: signed terms; a term is a '*'-joined product of
// coefficients (`int` or `int/int`) and powers `xN` / `xN^E`.
template <class F>
MultiPoly<F> parse_poly(std::string_view text, const RingPtr<F>& ring) {
  using Traits = FieldTraits<F>;
  std::vector<Term<F>> terms;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty polynomial", pos);
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    first = false;
    mpz_class num = sign, den = 1;
    Monomial mono;
    bool any_factor = false;
    while (true) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
      mpz_class n, d;
      std::size_t fstart = pos;
      if (detail::parse_number(text, pos, n, d)) {
        num *= n;
        den *= d;
      } else if (text[pos] == 'x') {
        ++pos;
        std::size_t istart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == istart) throw ParseError("expected variable index after 'x'", pos);
        int var = std::stoi(std::string(text.substr(istart, pos - istart)));
        if (var >= ring->nvars) throw ParseError("unknown variable x" + std::to_string(var), fstart);
        int e = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_ws();
          std::size_t es = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          if (pos == es) throw ParseError("expected exponent", pos);
          e = std::stoi(std::string(text.substr(es, pos - es)));
          if (e > 100) throw ParseError("exponent too large", es);
        }
        mono.set(var, mono[var] + e);
      } else {
        throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
      }
      any_factor = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any_factor) throw ParseError("empty term", pos);
    F c;
    try {
      c = Traits::from_fraction(num, den, ring->field);
    } catch (const DomainError& e) {
      throw ParseError(std::string("coefficient not representable: ") + e.what(), pos);
    }
    terms.push_back({mono, c});
  }
  return MultiPoly<F>::from_terms(ring, std::move(terms));
}

// "QQ" or "GF <p>" (also "GF(p)" and "GF p").
struct FieldTag {
  bool rational = true;
  std::uint32_t prime = 0;
  std::string str() const { return rational ? "QQ" : "GF " + std::to_string(prime); }
};

FieldTag parse_field_tag(std::string_view text);

}  // namespace msec
