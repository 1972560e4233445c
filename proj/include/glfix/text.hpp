#pragma once

// Text formats for elements, polynomials, matrices, subspaces and generator
// lists.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ['^' integer]
//   primary := integer | 't' | 'x' | '(' expr ')'
//   matrix  := '[' '[' expr ',' expr ']' ',' '[' expr ',' expr ']' ']'
//   subspace   := expr (',' expr)*
//   generators := matrix (';' matrix)*
//
// 't' is the class of t in F_p[t]/(m), 'x' the polynomial variable (rejected
// in element contexts). Whitespace is ignored.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "glfix/action.hpp"
#include "glfix/error.hpp"
#include "glfix/field.hpp"
#include "glfix/invariant.hpp"
#include "glfix/poly.hpp"

namespace glfix {

inline constexpr std::uint64_t kMaxParsedExponent = 1u << 12;

class TextParser {
 public:
  TextParser(FieldSpec field, std::string_view text) : field_(std::move(field)), text_(text) {}

  FqElem element() {
    const Poly v = expr(false);
    return field_.element(v.coeff_raw(0));
  }

  Poly poly() { return expr(true); }

  Mat2 matrix() {
    const std::size_t start = peek_pos();
    expect('[');
    expect('[');
    const Elem a = element().raw();
    expect(',');
    const Elem b = element().raw();
    expect(']');
    expect(',');
    expect('[');
    const Elem c = element().raw();
    expect(',');
    const Elem d = element().raw();
    expect(']');
    expect(']');
    if (field_.sub(field_.mul(a, d), field_.mul(b, c)) == 0) throw singular_error(start);
    return Mat2(field_, {a, b, c, d});
  }

  Subspace subspace() {
    std::vector<Elem> gens{element().raw()};
    while (accept(',')) gens.push_back(element().raw());
    return Subspace::span(field_, std::span<const Elem>(gens));
  }

  std::vector<Mat2> generators() {
    std::vector<Mat2> out{matrix()};
    while (accept(';')) out.push_back(matrix());
    return out;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
  }

 private:
  static Error singular_error(std::size_t pos) {
    return Error(ErrorCode::Singular, "matrix at position " + std::to_string(pos) + " is singular");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::size_t peek_pos() {
    skip_ws();
    return pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) throw SyntaxError(pos_, std::string("expected '") + c + "' but input ended");
      throw SyntaxError(pos_, std::string("expected '") + c + "'");
    }
  }

  std::uint64_t integer(std::uint64_t limit) {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > limit) throw SyntaxError(start, "integer too large");
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError(start, "expected an integer");
    return value;
  }

  Poly expr(bool allow_x) {
    Poly acc(field_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Poly first = term(allow_x);
    acc = negate ? -first : first;
    while (true) {
      if (accept('+'))
        acc = acc + term(allow_x);
      else if (accept('-'))
        acc = acc - term(allow_x);
      else
        return acc;
    }
  }

  Poly term(bool allow_x) {
    Poly acc = factor(allow_x);
    while (accept('*')) acc = acc * factor(allow_x);
    return acc;
  }

  Poly factor(bool allow_x) {
    Poly base = primary(allow_x);
    if (!accept('^')) return base;
    const std::size_t at = peek_pos();
    const std::uint64_t e = integer(kMaxParsedExponent);
    if (!base.is_zero() && base.deg() * e > kMaxParsedExponent) throw SyntaxError(at, "exponent too large");
    return pow(base, e);
  }

  Poly primary(bool allow_x) {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // Reduce digit by digit so arbitrarily long literals stay exact.
      std::uint64_t value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        value = (value * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0')) % field_.p();
      return Poly::constant(field_, field_.from_int(static_cast<std::int64_t>(value)));
    }
    if (c == 't') {
      ++pos_;
      return Poly::constant(field_, field_.t_raw());
    }
    if (c == 'x') {
      if (!allow_x) throw SyntaxError(pos_, "'x' is not allowed in a field element");
      ++pos_;
      return Poly::x(field_);
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr(allow_x);
      expect(')');
      return inner;
    }
    throw SyntaxError(pos_, "unexpected '" + std::string(1, c) + "'");
  }

  FieldSpec field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline FqElem parse_element(const FieldSpec& F, std::string_view text) {
  TextParser p(F, text);
  auto v = p.element();
  p.finish();
  return v;
}

inline Poly parse_poly(const FieldSpec& F, std::string_view text) {
  TextParser p(F, text);
  auto v = p.poly();
  p.finish();
  return v;
}

inline Mat2 parse_matrix(const FieldSpec& F, std::string_view text) {
  TextParser p(F, text);
  auto v = p.matrix();
  p.finish();
  return v;
}

inline Subspace parse_subspace(const FieldSpec& F, std::string_view text) {
  TextParser p(F, text);
  auto v = p.subspace();
  p.finish();
  return v;
}

inline std::vector<Mat2> parse_generators(const FieldSpec& F, std::string_view text) {
  TextParser p(F, text);
  auto v = p.generators();
  p.finish();
  return v;
}

// Coefficient sequence of a modulus written as a polynomial in t over F_p,
// e.g. "t^2+t+1"; integers are reduced mod p.
inline std::vector<std::uint32_t> parse_modulus(std::uint32_t p, std::string_view text) {
  // Parse over F_p with 't' as a free variable by reading it as 'x'.
  std::string renamed(text);
  for (auto& ch : renamed)
    if (ch == 't')
      ch = 'x';
    else if (ch == 'x')
      throw SyntaxError(static_cast<std::size_t>(&ch - renamed.data()), "modulus is written in 't'");
  const Poly m = parse_poly(make_field(p, 1), renamed);
  return std::vector<std::uint32_t>(m.raw().begin(), m.raw().end());
}

// Descending powers of t, coefficients in [0, p), zero terms omitted.
inline std::string format_element(const FieldSpec& F, Elem a) {
  if (a == 0) return "0";
  const auto d = F.coords(a);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]) + "*";
    out += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return out;
}

inline std::string format_element(const FqElem& a) { return format_element(a.spec(), a.raw()); }

// Descending powers of x, unit coefficients elided, coefficients containing t
// parenthesized.
inline std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  const auto& F = f.field();
  std::string out;
  for (std::size_t e = f.deg() + 1; e-- > 0;) {
    const Elem c = f.coeff_raw(e);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    std::string cs = format_element(F, c);
    if (cs.find('t') != std::string::npos) cs = "(" + cs + ")";
    if (e == 0) {
      out += cs;
      continue;
    }
    if (c != 1) out += cs + "*";
    out += e == 1 ? "x" : "x^" + std::to_string(e);
  }
  return out;
}

inline std::string format_matrix(const Mat2& A) {
  const auto& F = A.field();
  const auto& e = A.entries();
  return "[[" + format_element(F, e[0]) + "," + format_element(F, e[1]) + "],[" + format_element(F, e[2]) + "," +
         format_element(F, e[3]) + "]]";
}

inline std::string format_subspace(const Subspace& S) {
  std::string out;
  for (auto b : S.basis()) {
    if (!out.empty()) out += ",";
    out += format_element(S.field(), b);
  }
  return out;
}

inline std::string format_generators(std::span<const Mat2> gens) {
  std::string out;
  for (const auto& g : gens) {
    if (!out.empty()) out += ";";
    out += format_matrix(g);
  }
  return out;
}

inline std::string format_modulus(const FieldSpec& F) {
  std::string out;
  const auto& m = F.modulus();
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(m[i]);
      continue;
    }
    if (m[i] != 1) out += std::to_string(m[i]) + "*";
    out += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return out;
}

}  // namespace glfix
