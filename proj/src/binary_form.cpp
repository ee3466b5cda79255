#include "rnc/binary_form.hpp"

#include <cctype>

namespace rnc::detail {

Scalar falling(int n, int r) {
  if (r == 0) return Scalar(1);
  if (n < r) return Scalar(0);
  Scalar acc(1);
  for (int i = 0; i < r; ++i) acc *= Scalar(n - i);
  return acc;
}

UniPoly uni_trim(UniPoly p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  // b nonzero and trimmed
  const int db = static_cast<int>(b.size()) - 1;
  a = uni_trim(std::move(a));
  while (static_cast<int>(a.size()) - 1 >= db) {
    if (a.size() == 1 && a[0] == 0) break;
    const int da = static_cast<int>(a.size()) - 1;
    Scalar q = a[da] / b[db];
    for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
    a.pop_back();  // leading term cancels exactly
    if (a.empty()) a.push_back(Scalar(0));
    a = uni_trim(std::move(a));
  }
  return a;
}

UniPoly uni_gcd_monic(UniPoly a, UniPoly b) {
  a = uni_trim(std::move(a));
  b = uni_trim(std::move(b));
  while (!(b.size() == 1 && b[0] == 0)) {
    UniPoly r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  Scalar lead = a.back();
  for (Scalar& c : a) c /= lead;
  return a;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  Int integer() {
    skip_ws();
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    require_input(!digits.empty(), "expected integer at position " + std::to_string(i) +
                                       " in '" + s + "'");
    return Int(digits);
  }
  int exponent() {
    Int e = integer();
    require_input(e >= 0 && e <= 1000, "exponent out of range");
    return static_cast<int>(e.get_si());
  }
};

}  // namespace

std::vector<ParsedTerm> parse_terms(const std::string& text, char v0, char v1) {
  Cursor c{text};
  std::vector<ParsedTerm> terms;
  require_input(!c.eof(), "empty expression");
  bool negative = false;
  if (c.accept('-'))
    negative = true;
  else
    c.accept('+');
  while (true) {
    ParsedTerm t;
    t.coeff = Scalar(1);
    bool have_coef = false, star_after_coef = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      Int num = c.integer();
      if (c.accept('/')) {
        Int den = c.integer();
        t.coeff = frac(num, den);
      } else {
        t.coeff = Scalar(num);
      }
      have_coef = true;
      star_after_coef = c.accept('*');
    }
    if (c.peek() == v0) {
      ++c.i;
      t.has_var = true;
      t.e0 = c.accept('^') ? c.exponent() : 1;
      c.accept('*');
    }
    if (c.peek() == v1) {
      ++c.i;
      t.has_var = true;
      t.e1 = c.accept('^') ? c.exponent() : 1;
    }
    require_input(have_coef || t.has_var,
                  "expected term at position " + std::to_string(c.i) + " in '" + text + "'");
    require_input(!star_after_coef || t.has_var,
                  "dangling '*' after coefficient in '" + text + "'");
    if (negative) t.coeff = -t.coeff;
    terms.push_back(t);
    if (c.eof()) break;
    if (c.accept('-'))
      negative = true;
    else if (c.accept('+'))
      negative = false;
    else
      throw_input("unexpected character '" + std::string(1, c.peek()) + "' at position " +
                  std::to_string(c.i) + " in '" + text + "'");
    require_input(!c.eof(), "dangling sign in '" + text + "'");
  }
  return terms;
}

std::string monomial_str(const Scalar& c, int e0, int e1, char v0, char v1, bool first) {
  Scalar mag = c < 0 ? Scalar(-c) : c;
  std::string sep = first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
  std::string vars;
  if (e0 > 0) {
    vars += v0;
    if (e0 > 1) vars += "^" + std::to_string(e0);
  }
  if (e1 > 0) {
    if (!vars.empty()) vars += "*";
    vars += v1;
    if (e1 > 1) vars += "^" + std::to_string(e1);
  }
  if (vars.empty()) return sep + scalar_str(mag);
  if (mag == 1) return sep + vars;
  return sep + scalar_str(mag) + "*" + vars;
}

}  // namespace rnc::detail
