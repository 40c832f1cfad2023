/*
   Copyright 2026 The z4nu Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#include "z4nu/poly_text.hpp"

#include <cctype>
#include <map>

#include "z4nu/error.hpp"

namespace z4nu {
namespace {

struct Term {
  int a = 0;
  int b = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::map<std::size_t, Term> run() {
    std::map<std::size_t, Term> terms;
    int sign = 1;
    skip();
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++i_;
    }
    while (true) {
      auto [coef, exp] = term();
      terms[exp].a += sign * coef.a;
      terms[exp].b += sign * coef.b;
      skip();
      if (i_ == text_.size()) break;
      if (peek() != '+' && peek() != '-') fail();
      sign = peek() == '-' ? -1 : 1;
      ++i_;
    }
    return terms;
  }

 private:
  char peek() const { return i_ < text_.size() ? text_[i_] : '\0'; }

  void skip() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  [[noreturn]] void fail() const {
    std::string tok = i_ < text_.size() ? std::string(1, text_[i_]) : std::string("<end>");
    throw Error(Errc::ParseError,
                "bad polynomial '" + std::string(text_) + "' at token '" + tok + "' (offset " +
                    std::to_string(i_) + ")");
  }

  std::size_t integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail();
    std::size_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + static_cast<std::size_t>(text_[i_++] - '0');
    return v;
  }

  std::pair<Term, std::size_t> term() {
    skip();
    Term coef{1, 0};
    bool have_coef = false;
    if (peek() == '(') {
      ++i_;
      const std::size_t start = i_;
      while (i_ < text_.size() && text_[i_] != ')') ++i_;
      if (peek() != ')') fail();
      const auto e = parse_element(text_.substr(start, i_ - start), Theta::Zero);
      ++i_;
      coef = {e.a, e.b};
      have_coef = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const int c = static_cast<int>(integer() % 4);
      skip();
      if (peek() == 'v') {
        ++i_;
        coef = {0, c};
      } else {
        coef = {c, 0};
      }
      have_coef = true;
    } else if (peek() == 'v') {
      ++i_;
      coef = {0, 1};
      have_coef = true;
    }
    skip();
    if (have_coef && peek() == '*') {
      ++i_;
      skip();
      if (peek() != 'z') fail();
    }
    if (peek() != 'z') {
      if (!have_coef) fail();
      return {coef, 0};
    }
    ++i_;
    skip();
    std::size_t exp = 1;
    if (peek() == '^') {
      ++i_;
      skip();
      exp = integer();
    }
    return {coef, exp};
  }

  std::string_view text_;
  std::size_t i_ = 0;
};

std::string coef_text(int a, int b, bool is_constant) {
  const RingElement e{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), Theta::Zero};
  if (b != 0) return "(" + to_string(e) + ")";
  if (a == 1 && !is_constant) return "";
  return to_string(e);
}

template <class Coef>
std::string render(int degree, Coef coef, TermOrder order) {
  if (degree < 0) return "0";
  std::string out;
  auto emit = [&](int i) {
    auto [a, b] = coef(static_cast<std::size_t>(i));
    if (a == 0 && b == 0) return;
    if (!out.empty()) out += " + ";
    std::string c = coef_text(a, b, i == 0);
    if (i == 0) {
      out += c;
      return;
    }
    if (!c.empty()) out += c + "*";
    out += "z";
    if (i > 1) out += "^" + std::to_string(i);
  };
  if (order == TermOrder::Descending)
    for (int i = degree; i >= 0; --i) emit(i);
  else
    for (int i = 0; i <= degree; ++i) emit(i);
  return out;
}

}  // namespace

RPoly parse_rpoly(std::string_view text, Theta t) {
  RPoly out(t);
  for (auto [exp, c] : Parser(text).run()) out.set(exp, out.coeff(exp) + RingElement{z4(c.a), z4(c.b), t});
  return out;
}

QuadPoly parse_quad(std::string_view text) {
  QuadPoly out;
  for (auto [exp, c] : Parser(text).run()) {
    if (z4(c.b) != 0) throw Error(Errc::ParseError, "nu is not allowed in a Z4 polynomial: '" + std::string(text) + "'");
    out.set(exp, static_cast<std::uint8_t>(out.coeff(exp) + z4(c.a)));
  }
  return out;
}

BinPoly parse_bin(std::string_view text) {
  BinPoly out;
  for (auto [exp, c] : Parser(text).run()) {
    if (z4(c.b) != 0) throw Error(Errc::ParseError, "nu is not allowed in a Z2 polynomial: '" + std::string(text) + "'");
    if (z4(c.a) & 1) out.flip(exp);
  }
  return out;
}

std::string to_string(const RPoly& f, TermOrder order) {
  return render(f.degree(), [&](std::size_t i) { auto e = f.coeff(i); return std::pair<int, int>{e.a, e.b}; }, order);
}

std::string to_string(const QuadPoly& f, TermOrder order) {
  return render(f.degree(), [&](std::size_t i) { return std::pair<int, int>{f.coeff(i), 0}; }, order);
}

std::string to_string(const BinPoly& f, TermOrder order) {
  return render(f.degree(), [&](std::size_t i) { return std::pair<int, int>{f.coeff(i) ? 1 : 0, 0}; }, order);
}

}  // namespace z4nu
