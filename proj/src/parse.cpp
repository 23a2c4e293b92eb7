#include "starq/parse.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace starq {

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

struct Parser {
  Lexer lex;
  int n;

  Symbol parse_expr() {
    bool neg = lex.consume('-');
    Symbol r = parse_term();
    if (neg) r = -r;
    while (true) {
      if (lex.consume('+')) {
        r += parse_term();
      } else if (lex.consume('-')) {
        r -= parse_term();
      } else {
        break;
      }
    }
    return r;
  }

  Symbol parse_term() {
    Symbol r = parse_factor();
    while (lex.consume('*')) r = r * parse_factor();
    return r;
  }

  Symbol parse_factor() {
    if (lex.consume('-')) return -parse_factor();
    Symbol base = parse_primary();
    if (lex.consume('^')) {
      long e = parse_uint("exponent");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  long parse_uint(const char* what) {
    lex.skip_ws();
    std::size_t at = lex.pos;
    if (at >= lex.s.size() || !std::isdigit(static_cast<unsigned char>(lex.s[at])))
      throw ParseError(std::string("expected ") + what, at);
    long v = 0;
    while (lex.pos < lex.s.size() &&
           std::isdigit(static_cast<unsigned char>(lex.s[lex.pos]))) {
      v = v * 10 + (lex.s[lex.pos] - '0');
      if (v > 1000000000L) throw ParseError("literal too large", at);
      ++lex.pos;
    }
    return v;
  }

  Symbol parse_primary() {
    lex.skip_ws();
    std::size_t at = lex.pos;
    if (at >= lex.s.size()) throw ParseError("unexpected end of input", at);
    char c = lex.s[at];

    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = parse_uint("number");
      if (lex.consume('/')) {
        std::size_t dat = lex.pos;
        long den = parse_uint("denominator");
        if (den == 0) throw ParseError("zero denominator", dat);
        return Symbol::constant(n, Rational(num, den));
      }
      return Symbol::constant(n, Rational(num));
    }

    if (c == '(') {
      ++lex.pos;
      Symbol r = parse_expr();
      if (!lex.consume(')')) throw ParseError("expected ')'", lex.pos);
      return r;
    }

    if (c == 'h') {
      ++lex.pos;
      return Symbol::h(n);
    }

    if (c == 'x') {
      ++lex.pos;
      bool fiber = false;
      if (lex.pos < lex.s.size() && lex.s[lex.pos] == 'i') {
        fiber = true;
        ++lex.pos;
      }
      std::size_t iat = lex.pos;
      long idx = parse_uint("variable index");
      if (idx < 1 || idx > n)
        throw ParseError("variable index out of range 1.." + std::to_string(n),
                         iat);
      return fiber ? Symbol::xi(n, static_cast<int>(idx))
                   : Symbol::x(n, static_cast<int>(idx));
    }

    throw ParseError("unexpected character", at);
  }
};

// Canonical ordering: higher fiber degree first, then fiber exponents,
// base exponents and h power, each lexicographically descending.
bool canonical_before(const Exponents& a, const Exponents& b) {
  int da = a.xi_degree(), db = b.xi_degree();
  if (da != db) return da > db;
  if (a.xi != b.xi) return a.xi > b.xi;
  if (a.x != b.x) return a.x > b.x;
  return a.nu > b.nu;
}

std::string format_monomial(const Exponents& e, const Rational& coeff) {
  std::vector<std::string> factors;
  bool is_const = true;
  for (std::size_t i = 0; i < e.x.size(); ++i) {
    if (e.x[i] == 0) continue;
    is_const = false;
    std::string f = "x" + std::to_string(i + 1);
    if (e.x[i] > 1) f += "^" + std::to_string(e.x[i]);
    factors.push_back(f);
  }
  if (e.nu > 0) {
    is_const = false;
    std::string f = "h";
    if (e.nu > 1) f += "^" + std::to_string(e.nu);
    factors.push_back(f);
  }
  for (std::size_t i = 0; i < e.xi.size(); ++i) {
    if (e.xi[i] == 0) continue;
    is_const = false;
    std::string f = "xi" + std::to_string(i + 1);
    if (e.xi[i] > 1) f += "^" + std::to_string(e.xi[i]);
    factors.push_back(f);
  }

  std::string out;
  if (is_const || !coeff.is_one()) out = coeff.str();
  for (const auto& f : factors) {
    if (!out.empty()) out += "*";
    out += f;
  }
  return out;
}

}  // namespace

Symbol parse_symbol(const std::string& text, int n) {
  if (n < 1) throw std::invalid_argument("parse_symbol: dimension must be >= 1");
  Parser p{Lexer{text}, n};
  Symbol r = p.parse_expr();
  if (!p.lex.eof()) throw ParseError("trailing input", p.lex.pos);
  return r;
}

std::string format_symbol(const Symbol& F) {
  if (F.is_zero()) return "0";

  std::vector<std::pair<Exponents, Rational>> ts(F.terms().begin(),
                                                 F.terms().end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    return canonical_before(a.first, b.first);
  });

  std::string out;
  bool first = true;
  for (const auto& [e, c] : ts) {
    if (first) {
      out += (c.sign() < 0) ? "-" + format_monomial(e, c.abs())
                            : format_monomial(e, c);
      first = false;
    } else {
      out += (c.sign() < 0) ? " - " + format_monomial(e, c.abs())
                            : " + " + format_monomial(e, c);
    }
  }
  return out;
}

}  // namespace starq
