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
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace z4nu {

/// Value of nu^2.
enum class Theta : std::uint8_t { Zero, One, Nu };

Theta parse_theta(std::string_view token);
std::string_view theta_token(Theta t) noexcept;

inline std::uint8_t z4(int v) noexcept { return static_cast<std::uint8_t>(((v % 4) + 4) % 4); }

/// a + nu*b with a, b in Z4.
struct RingElement {
  std::uint8_t a = 0;
  std::uint8_t b = 0;
  Theta theta = Theta::Zero;

  constexpr RingElement() = default;
  constexpr RingElement(std::uint8_t a_, std::uint8_t b_, Theta t)
      : a(static_cast<std::uint8_t>(a_ & 3)), b(static_cast<std::uint8_t>(b_ & 3)), theta(t) {}

  bool is_zero() const noexcept { return a == 0 && b == 0; }
  /// Index 0..15 in the b-major enumeration order.
  unsigned index() const noexcept { return 4u * b + a; }

  friend bool operator==(const RingElement&, const RingElement&) = default;
};

RingElement operator+(const RingElement& x, const RingElement& y);
RingElement operator-(const RingElement& x, const RingElement& y);
RingElement operator*(const RingElement& x, const RingElement& y);
RingElement operator-(const RingElement& x);

enum class RingOp { Add, Sub, Mul };
RingElement ring_arith(const RingElement& x, const RingElement& y, RingOp op);

/// k = nu for theta in {0, nu}, 1 + nu for theta = 1.
RingElement k_theta(Theta t) noexcept;

/// Reduction modulo k: a for theta in {0, nu}, a - b for theta = 1.
std::uint8_t phi_theta(const RingElement& x) noexcept;

/// The Z4 scalar c with k*x == c*k.
std::uint8_t k_twist(const RingElement& x) noexcept;

bool is_unit(const RingElement& x) noexcept;
RingElement inverse(const RingElement& x);

enum class UnitClass : std::uint8_t { Alpha, Beta, NotAUnit };
std::string_view unit_class_name(UnitClass c) noexcept;

/// Alpha when phi(x) = 1, Beta when phi(x) = 3, for every unit x.
UnitClass classify_unit(const RingElement& x) noexcept;

/// Rows of the published unit table, which list a subset of each class.
std::vector<RingElement> published_units(Theta t, UnitClass c);

/// All 16 elements, b-major then a.
std::vector<RingElement> enumerate_ring(Theta t);

std::string to_string(const RingElement& x);
RingElement parse_element(std::string_view text, Theta t);

}  // namespace z4nu
