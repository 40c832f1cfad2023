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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "z4nu/ring.hpp"

namespace z4nu {

/// Polynomial over Z2, bit-packed, lowest degree first.
class BinPoly {
 public:
  BinPoly() = default;
  BinPoly(std::initializer_list<int> coeffs);
  static BinPoly monomial(std::size_t k);
  /// z^n + 1, the binary image of z^n - 1.
  static BinPoly xn_minus_1(std::size_t n);

  int degree() const noexcept;
  bool is_zero() const noexcept { return words_.empty(); }
  bool coeff(std::size_t i) const noexcept;
  void set(std::size_t i, bool v);
  void flip(std::size_t i);

  BinPoly& operator+=(const BinPoly& o);
  friend BinPoly operator+(BinPoly a, const BinPoly& b) { return a += b; }
  friend BinPoly operator-(BinPoly a, const BinPoly& b) { return a += b; }
  friend BinPoly operator*(const BinPoly& a, const BinPoly& b);
  friend bool operator==(const BinPoly&, const BinPoly&) = default;

  /// z^k * f.
  BinPoly shifted(std::size_t k) const;
  std::size_t hash() const noexcept;

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

std::pair<BinPoly, BinPoly> bin_divmod(const BinPoly& f, const BinPoly& g);
BinPoly bin_gcd(BinPoly f, BinPoly g);
/// g | f over Z2 (g = 0 divides only 0).
bool bin_divides(const BinPoly& g, const BinPoly& f);

/// Polynomial over Z4, one residue per coefficient, lowest degree first.
class QuadPoly {
 public:
  QuadPoly() = default;
  QuadPoly(std::initializer_list<int> coeffs);
  explicit QuadPoly(std::vector<std::uint8_t> coeffs);
  /// Coefficientwise 0/1 lift.
  static QuadPoly lift(const BinPoly& f);
  static QuadPoly monomial(std::size_t k, std::uint8_t c = 1);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::uint8_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  void set(std::size_t i, std::uint8_t v);
  const std::vector<std::uint8_t>& coeffs() const noexcept { return c_; }

  /// Bit 0 (mod 2 image) or bit 1 of each coefficient.
  BinPoly bit(unsigned which) const;
  BinPoly mod2() const { return bit(0); }

  QuadPoly& operator+=(const QuadPoly& o);
  QuadPoly& operator-=(const QuadPoly& o);
  friend QuadPoly operator+(QuadPoly a, const QuadPoly& b) { return a += b; }
  friend QuadPoly operator-(QuadPoly a, const QuadPoly& b) { return a -= b; }
  friend QuadPoly operator*(const QuadPoly& a, const QuadPoly& b);
  friend QuadPoly operator*(std::uint8_t s, const QuadPoly& a);
  friend bool operator==(const QuadPoly&, const QuadPoly&) = default;

 private:
  void trim();
  std::vector<std::uint8_t> c_;
};

/// Polynomial over R_theta, lowest degree first.
class RPoly {
 public:
  explicit RPoly(Theta t = Theta::Zero) : theta_(t) {}
  RPoly(Theta t, std::vector<RingElement> coeffs);
  static RPoly constant(const RingElement& c);
  /// a-part from p, nu-part zero.
  static RPoly embed(Theta t, const QuadPoly& p);

  Theta theta() const noexcept { return theta_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  RingElement coeff(std::size_t i) const noexcept;
  void set(std::size_t i, const RingElement& v);
  const std::vector<RingElement>& coeffs() const noexcept { return c_; }

  RPoly& operator+=(const RPoly& o);
  RPoly& operator-=(const RPoly& o);
  friend RPoly operator+(RPoly a, const RPoly& b) { return a += b; }
  friend RPoly operator-(RPoly a, const RPoly& b) { return a -= b; }
  friend RPoly operator*(const RPoly& a, const RPoly& b);
  friend RPoly operator*(const RingElement& s, const RPoly& a);
  friend bool operator==(const RPoly&, const RPoly&) = default;

  RPoly shifted(std::size_t k) const;

 private:
  void trim();
  Theta theta_;
  std::vector<RingElement> c_;
};

BinPoly reciprocal(const BinPoly& f);
QuadPoly reciprocal(const QuadPoly& f);
RPoly reciprocal(const RPoly& f);

template <class P>
bool self_reciprocal(const P& f) {
  return reciprocal(f) == f;
}

/// Ambient ring R_theta[z]/<z^n - unit>.
struct QuotientContext {
  Theta theta = Theta::Zero;
  std::size_t n = 1;
  RingElement unit{1, 0, Theta::Zero};
  UnitClass unit_class = UnitClass::Alpha;
  std::size_t n_odd_part = 1;
  unsigned s = 0;

  /// Throws NotAUnit or InvalidLength.
  static QuotientContext make(Theta t, const RingElement& unit, std::size_t n);

  friend bool operator==(const QuotientContext& x, const QuotientContext& y) {
    return x.theta == y.theta && x.n == y.n && x.unit == y.unit;
  }
};

using Word = std::vector<RingElement>;

/// Reduce any polynomial with z^n -> unit.
RPoly reduce(const QuotientContext& ctx, const RPoly& f);
RPoly quotient_mul(const QuotientContext& ctx, const RPoly& f, const RPoly& g);
Word constacyclic_shift(const QuotientContext& ctx, const Word& word);
Word to_word(const QuotientContext& ctx, const RPoly& f);
RPoly from_word(const QuotientContext& ctx, const Word& w);
/// z^(n-1-deg f) f*.
RPoly reverse_poly(const QuotientContext& ctx, const RPoly& f);

/// Reduce a Z4 polynomial with z^n -> lambda.
QuadPoly quad_reduce(const QuadPoly& f, std::size_t n, std::uint8_t lambda);
QuadPoly quad_mulmod(const QuadPoly& f, const QuadPoly& g, std::size_t n, std::uint8_t lambda);
/// (z^m - 1)^t reduced modulo z^n - lambda.
QuadPoly quad_binomial_power(std::size_t m, std::size_t t, std::size_t n, std::uint8_t lambda);

}  // namespace z4nu
