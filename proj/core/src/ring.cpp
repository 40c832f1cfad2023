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
#include "z4nu/ring.hpp"

#include <cctype>

#include "z4nu/error.hpp"

namespace z4nu {

std::string_view errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::ThetaMismatch: return "ThetaMismatch";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::WrongUnitClass: return "WrongUnitClass";
    case Errc::InvalidDegree: return "InvalidDegree";
    case Errc::InvalidLength: return "InvalidLength";
    case Errc::InvalidExponents: return "InvalidExponents";
    case Errc::DivByZero: return "DivByZero";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::CtxMismatch: return "CtxMismatch";
    case Errc::NotChainForm: return "NotChainForm";
  }
  return "Unknown";
}

Theta parse_theta(std::string_view token) {
  if (token == "0") return Theta::Zero;
  if (token == "1") return Theta::One;
  if (token == "v" || token == "nu") return Theta::Nu;
  throw Error(Errc::ParseError, "theta must be one of 0, 1, v; got '" + std::string(token) + "'");
}

std::string_view theta_token(Theta t) noexcept {
  switch (t) {
    case Theta::Zero: return "0";
    case Theta::One: return "1";
    case Theta::Nu: return "v";
  }
  return "?";
}

namespace {

void check_theta(const RingElement& x, const RingElement& y) {
  if (x.theta != y.theta) throw Error(Errc::ThetaMismatch, "operands live in different rings");
}

}  // namespace

RingElement operator+(const RingElement& x, const RingElement& y) {
  check_theta(x, y);
  return {static_cast<std::uint8_t>(x.a + y.a), static_cast<std::uint8_t>(x.b + y.b), x.theta};
}

RingElement operator-(const RingElement& x, const RingElement& y) {
  check_theta(x, y);
  return {static_cast<std::uint8_t>(x.a + 4 - y.a), static_cast<std::uint8_t>(x.b + 4 - y.b), x.theta};
}

RingElement operator-(const RingElement& x) {
  return {static_cast<std::uint8_t>(4 - x.a), static_cast<std::uint8_t>(4 - x.b), x.theta};
}

RingElement operator*(const RingElement& x, const RingElement& y) {
  check_theta(x, y);
  const int ac = x.a * y.a;
  const int cross = x.a * y.b + x.b * y.a;
  const int bd = x.b * y.b;
  switch (x.theta) {
    case Theta::Zero: return {z4(ac), z4(cross), x.theta};
    case Theta::One: return {z4(ac + bd), z4(cross), x.theta};
    case Theta::Nu: return {z4(ac), z4(cross + bd), x.theta};
  }
  return {};
}

RingElement ring_arith(const RingElement& x, const RingElement& y, RingOp op) {
  switch (op) {
    case RingOp::Add: return x + y;
    case RingOp::Sub: return x - y;
    case RingOp::Mul: return x * y;
  }
  return {};
}

RingElement k_theta(Theta t) noexcept {
  return t == Theta::One ? RingElement{1, 1, t} : RingElement{0, 1, t};
}

std::uint8_t phi_theta(const RingElement& x) noexcept {
  return x.theta == Theta::One ? z4(x.a - x.b) : x.a;
}

std::uint8_t k_twist(const RingElement& x) noexcept {
  return x.theta == Theta::Zero ? x.a : z4(x.a + x.b);
}

bool is_unit(const RingElement& x) noexcept {
  for (const auto& y : enumerate_ring(x.theta)) {
    if (x * y == RingElement{1, 0, x.theta}) return true;
  }
  return false;
}

RingElement inverse(const RingElement& x) {
  for (const auto& y : enumerate_ring(x.theta)) {
    if (x * y == RingElement{1, 0, x.theta}) return y;
  }
  throw Error(Errc::NotAUnit, to_string(x) + " is not invertible");
}

std::string_view unit_class_name(UnitClass c) noexcept {
  switch (c) {
    case UnitClass::Alpha: return "alpha";
    case UnitClass::Beta: return "beta";
    case UnitClass::NotAUnit: return "not_a_unit";
  }
  return "?";
}

UnitClass classify_unit(const RingElement& x) noexcept {
  if (!is_unit(x)) return UnitClass::NotAUnit;
  return phi_theta(x) == 1 ? UnitClass::Alpha : UnitClass::Beta;
}

std::vector<RingElement> published_units(Theta t, UnitClass c) {
  using P = std::pair<int, int>;
  std::vector<P> rows;
  switch (t) {
    case Theta::Zero:
      rows = c == UnitClass::Alpha ? std::vector<P>{{1, 1}, {1, 2}, {1, 3}}
                                   : std::vector<P>{{3, 0}, {3, 2}, {3, 3}, {3, 1}};
      break;
    case Theta::One:
      rows = c == UnitClass::Alpha ? std::vector<P>{{2, 1}, {3, 2}, {0, 3}}
                                   : std::vector<P>{{3, 0}, {0, 1}, {1, 2}, {2, 3}};
      break;
    case Theta::Nu:
      rows = c == UnitClass::Alpha ? std::vector<P>{{1, 2}} : std::vector<P>{{3, 2}};
      break;
  }
  if (c == UnitClass::NotAUnit) rows.clear();
  std::vector<RingElement> out;
  for (auto [a, b] : rows) out.emplace_back(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), t);
  return out;
}

std::vector<RingElement> enumerate_ring(Theta t) {
  std::vector<RingElement> out;
  out.reserve(16);
  for (std::uint8_t b = 0; b < 4; ++b)
    for (std::uint8_t a = 0; a < 4; ++a) out.emplace_back(a, b, t);
  return out;
}

std::string to_string(const RingElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  if (x.a != 0) out += static_cast<char>('0' + x.a);
  if (x.b != 0) {
    if (!out.empty()) out += '+';
    if (x.b != 1) out += static_cast<char>('0' + x.b);
    out += 'v';
  }
  return out;
}

RingElement parse_element(std::string_view text, Theta t) {
  int a = 0;
  int b = 0;
  std::size_t i = 0;
  bool any = false;
  auto fail = [&](std::size_t at) -> RingElement {
    const std::string tok = at < text.size() ? std::string(1, text[at]) : std::string("<end>");
    throw Error(Errc::ParseError, "bad ring element '" + std::string(text) + "' at token '" + tok + "'");
  };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  int sign = 1;
  skip();
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    sign = text[i] == '-' ? -1 : 1;
    ++i;
  }
  while (true) {
    skip();
    int coef = 1;
    bool digits = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coef = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        coef = (coef * 10 + (text[i] - '0')) % 4;
        ++i;
        digits = true;
      }
    }
    skip();
    bool nu = false;
    if (i < text.size() && text[i] == '*' && digits) {
      ++i;
      skip();
      if (i >= text.size() || text[i] != 'v') return fail(i);
    }
    if (i < text.size() && text[i] == 'v') {
      nu = true;
      ++i;
    }
    if (!digits && !nu) return fail(i);
    (nu ? b : a) += sign * coef;
    any = true;
    skip();
    if (i == text.size()) break;
    if (text[i] != '+' && text[i] != '-') return fail(i);
    sign = text[i] == '-' ? -1 : 1;
    ++i;
  }
  if (!any) return fail(0);
  return {z4(a), z4(b), t};
}

}  // namespace z4nu
