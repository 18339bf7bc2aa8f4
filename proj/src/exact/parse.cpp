// Copyright 2026 The mfactor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Recursive-descent reader for the polynomial text grammar:
//
//   poly  := ws [sign] term (ws sign ws term)* ws
//   term  := coef [ws ['*'] ws var] | var
//   var   := ('x' | 'X') [ws '^' ws digits]
//   coef  := digits [ws '/' ws digits]

#include <cctype>
#include <map>

#include "mfactor/exact.hpp"

namespace mfactor {
namespace {

constexpr std::size_t kMaxExponent = 100000;

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  RatPolynomial polynomial() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    std::map<std::size_t, BigRational> terms;
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = (get() == '-');
    for (;;) {
      skip_ws();
      auto [coef, exp] = term();
      if (negative) coef = -coef;
      terms[exp] += coef;
      skip_ws();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      negative = (op == '-');
    }
    std::size_t top = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<BigRational> v(top + 1);
    for (auto& [e, c] : terms) v[e] = c;
    return RatPolynomial(std::move(v));
  }

  BigRational rational_only() {
    skip_ws();
    bool negative = false;
    if (!at_end() && (peek() == '+' || peek() == '-')) negative = (get() == '-');
    skip_ws();
    BigRational q = coefficient();
    skip_ws();
    if (!at_end()) fail("trailing characters in rational");
    return negative ? BigRational(-q) : q;
  }

 private:
  std::pair<BigRational, std::size_t> term() {
    if (at_end()) fail("missing term");
    if (is_var(peek())) return {BigRational(1), variable()};
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a coefficient or x");
    BigRational c = coefficient();
    skip_ws();
    if (!at_end() && peek() == '*') {
      get();
      skip_ws();
      if (at_end() || !is_var(peek())) fail("expected x after '*'");
    }
    if (!at_end() && is_var(peek())) return {c, variable()};
    return {c, 0};
  }

  std::size_t variable() {
    get();
    skip_ws();
    if (at_end() || peek() != '^') return 1;
    get();
    skip_ws();
    const BigInt e = digits();
    if (e > kMaxExponent) fail("exponent too large");
    return e.get_ui();
  }

  BigRational coefficient() {
    const BigInt n = digits();
    const std::size_t save = pos_;
    skip_ws();
    if (!at_end() && peek() == '/') {
      get();
      skip_ws();
      const BigInt d = digits();
      if (d == 0) fail("zero denominator");
      return make_rational(n, d);
    }
    pos_ = save;
    return BigRational(n);
  }

  BigInt digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  static bool is_var(char c) { return c == 'x' || c == 'X'; }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " in \"" + std::string(s_) + "\"");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatPolynomial parse_polynomial(std::string_view text) { return Reader(text).polynomial(); }

IntPolynomial parse_int_polynomial(std::string_view text) {
  const RatPolynomial f = parse_polynomial(text);
  for (const auto& c : f.coefficients())
    if (!is_integer(c)) throw ParseError("expected integer coefficients in \"" + std::string(text) + "\"");
  return to_integer(f);
}

BigRational parse_rational(std::string_view text) { return Reader(text).rational_only(); }

}  // namespace mfactor
