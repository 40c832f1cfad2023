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
#include "z4nu/poly.hpp"

#include <algorithm>
#include <bit>

#include "z4nu/error.hpp"

namespace z4nu {

BinPoly::BinPoly(std::initializer_list<int> coeffs) {
  std::size_t i = 0;
  for (int c : coeffs) set(i++, (c & 1) != 0);
}

BinPoly BinPoly::monomial(std::size_t k) {
  BinPoly p;
  p.set(k, true);
  return p;
}

BinPoly BinPoly::xn_minus_1(std::size_t n) {
  BinPoly p = monomial(n);
  p.flip(0);
  return p;
}

int BinPoly::degree() const noexcept {
  if (words_.empty()) return -1;
  return static_cast<int>(64 * (words_.size() - 1)) + 63 - std::countl_zero(words_.back());
}

bool BinPoly::coeff(std::size_t i) const noexcept {
  const std::size_t w = i / 64;
  return w < words_.size() && ((words_[w] >> (i % 64)) & 1u) != 0;
}

void BinPoly::set(std::size_t i, bool v) {
  if (coeff(i) != v) flip(i);
}

void BinPoly::flip(std::size_t i) {
  const std::size_t w = i / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] ^= std::uint64_t{1} << (i % 64);
  trim();
}

void BinPoly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinPoly& BinPoly::operator+=(const BinPoly& o) {
  if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
  for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
  trim();
  return *this;
}

BinPoly operator*(const BinPoly& a, const BinPoly& b) {
  BinPoly out;
  const int db = b.degree();
  for (int i = 0; i <= db; ++i)
    if (b.coeff(static_cast<std::size_t>(i))) out += a.shifted(static_cast<std::size_t>(i));
  return out;
}

BinPoly BinPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  BinPoly out;
  const std::size_t ws = k / 64;
  const unsigned bs = k % 64;
  out.words_.assign(words_.size() + ws + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i + ws] |= words_[i] << bs;
    if (bs != 0) out.words_[i + ws + 1] |= words_[i] >> (64 - bs);
  }
  out.trim();
  return out;
}

std::size_t BinPoly::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto w : words_) h = (h ^ w) * 1099511628211ull;
  return h;
}

std::pair<BinPoly, BinPoly> bin_divmod(const BinPoly& f, const BinPoly& g) {
  if (g.is_zero()) throw Error(Errc::DivByZero, "binary division by the zero polynomial");
  BinPoly q;
  BinPoly r = f;
  const int dg = g.degree();
  while (r.degree() >= dg) {
    const auto d = static_cast<std::size_t>(r.degree() - dg);
    q.flip(d);
    r += g.shifted(d);
  }
  return {q, r};
}

BinPoly bin_gcd(BinPoly f, BinPoly g) {
  while (!g.is_zero()) {
    BinPoly r = bin_divmod(f, g).second;
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

bool bin_divides(const BinPoly& g, const BinPoly& f) {
  if (g.is_zero()) return f.is_zero();
  return bin_divmod(f, g).second.is_zero();
}

QuadPoly::QuadPoly(std::initializer_list<int> coeffs) {
  for (int c : coeffs) c_.push_back(z4(c));
  trim();
}

QuadPoly::QuadPoly(std::vector<std::uint8_t> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c &= 3;
  trim();
}

QuadPoly QuadPoly::lift(const BinPoly& f) {
  std::vector<std::uint8_t> c(static_cast<std::size_t>(f.degree() + 1));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) ? 1 : 0;
  return QuadPoly(std::move(c));
}

QuadPoly QuadPoly::monomial(std::size_t k, std::uint8_t c) {
  QuadPoly p;
  p.set(k, c);
  return p;
}

void QuadPoly::set(std::size_t i, std::uint8_t v) {
  if (i >= c_.size()) {
    if ((v & 3) == 0) return;
    c_.resize(i + 1, 0);
  }
  c_[i] = v & 3;
  trim();
}

BinPoly QuadPoly::bit(unsigned which) const {
  BinPoly out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if ((c_[i] >> which) & 1u) out.set(i, true);
  return out;
}

void QuadPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QuadPoly& QuadPoly::operator+=(const QuadPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) & 3;
  trim();
  return *this;
}

QuadPoly& QuadPoly::operator-=(const QuadPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + 4 - o.c_[i]) & 3;
  trim();
  return *this;
}

QuadPoly operator*(const QuadPoly& a, const QuadPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::uint8_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = (c[i + j] + a.c_[i] * b.c_[j]) & 3;
  return QuadPoly(std::move(c));
}

QuadPoly operator*(std::uint8_t s, const QuadPoly& a) {
  auto c = a.c_;
  for (auto& x : c) x = (x * s) & 3;
  return QuadPoly(std::move(c));
}

RPoly::RPoly(Theta t, std::vector<RingElement> coeffs) : theta_(t), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.theta != t) throw Error(Errc::ThetaMismatch, "coefficient from a different ring");
  trim();
}

RPoly RPoly::constant(const RingElement& c) { return RPoly(c.theta, {c}); }

RPoly RPoly::embed(Theta t, const QuadPoly& p) {
  std::vector<RingElement> c;
  for (auto x : p.coeffs()) c.emplace_back(x, 0, t);
  return RPoly(t, std::move(c));
}

RingElement RPoly::coeff(std::size_t i) const noexcept {
  return i < c_.size() ? c_[i] : RingElement{0, 0, theta_};
}

void RPoly::set(std::size_t i, const RingElement& v) {
  if (v.theta != theta_) throw Error(Errc::ThetaMismatch, "coefficient from a different ring");
  if (i >= c_.size()) {
    if (v.is_zero()) return;
    c_.resize(i + 1, RingElement{0, 0, theta_});
  }
  c_[i] = v;
  trim();
}

void RPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RPoly& RPoly::operator+=(const RPoly& o) {
  if (o.theta_ != theta_) throw Error(Errc::ThetaMismatch, "polynomials from different rings");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), RingElement{0, 0, theta_});
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
  trim();
  return *this;
}

RPoly& RPoly::operator-=(const RPoly& o) {
  if (o.theta_ != theta_) throw Error(Errc::ThetaMismatch, "polynomials from different rings");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), RingElement{0, 0, theta_});
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
  trim();
  return *this;
}

RPoly operator*(const RPoly& a, const RPoly& b) {
  if (a.theta_ != b.theta_) throw Error(Errc::ThetaMismatch, "polynomials from different rings");
  if (a.is_zero() || b.is_zero()) return RPoly(a.theta_);
  std::vector<RingElement> c(a.c_.size() + b.c_.size() - 1, RingElement{0, 0, a.theta_});
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
  return RPoly(a.theta_, std::move(c));
}

RPoly operator*(const RingElement& s, const RPoly& a) {
  auto c = a.c_;
  for (auto& x : c) x = s * x;
  return RPoly(a.theta_, std::move(c));
}

RPoly RPoly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  auto c = c_;
  c.insert(c.begin(), k, RingElement{0, 0, theta_});
  return RPoly(theta_, std::move(c));
}

BinPoly reciprocal(const BinPoly& f) {
  BinPoly out;
  const int d = f.degree();
  for (int i = 0; i <= d; ++i)
    if (f.coeff(static_cast<std::size_t>(i))) out.set(static_cast<std::size_t>(d - i), true);
  return out;
}

QuadPoly reciprocal(const QuadPoly& f) {
  auto c = f.coeffs();
  std::reverse(c.begin(), c.end());
  return QuadPoly(std::move(c));
}

RPoly reciprocal(const RPoly& f) {
  auto c = f.coeffs();
  std::reverse(c.begin(), c.end());
  return RPoly(f.theta(), std::move(c));
}

QuotientContext QuotientContext::make(Theta t, const RingElement& unit, std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidLength, "code length must be positive");
  if (unit.theta != t) throw Error(Errc::ThetaMismatch, "unit from a different ring");
  QuotientContext ctx;
  ctx.theta = t;
  ctx.n = n;
  ctx.unit = unit;
  ctx.unit_class = classify_unit(unit);
  if (ctx.unit_class == UnitClass::NotAUnit)
    throw Error(Errc::NotAUnit, to_string(unit) + " is not a unit of R_" + std::string(theta_token(t)));
  ctx.s = static_cast<unsigned>(std::countr_zero(n));
  ctx.n_odd_part = n >> ctx.s;
  return ctx;
}

RPoly reduce(const QuotientContext& ctx, const RPoly& f) {
  if (f.theta() != ctx.theta) throw Error(Errc::ThetaMismatch, "polynomial from a different ring");
  auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > ctx.n;) {
    c[i - ctx.n] = c[i - ctx.n] + ctx.unit * c[i];
    c[i] = RingElement{0, 0, ctx.theta};
  }
  return RPoly(ctx.theta, std::move(c));
}

RPoly quotient_mul(const QuotientContext& ctx, const RPoly& f, const RPoly& g) {
  if (f.degree() >= static_cast<int>(ctx.n) || g.degree() >= static_cast<int>(ctx.n))
    throw Error(Errc::InvalidDegree, "operand degree must be below the code length");
  return reduce(ctx, f * g);
}

Word constacyclic_shift(const QuotientContext& ctx, const Word& word) {
  if (word.size() != ctx.n) throw Error(Errc::InvalidLength, "word length differs from n");
  Word out(ctx.n);
  out[0] = ctx.unit * word[ctx.n - 1];
  for (std::size_t i = 1; i < ctx.n; ++i) out[i] = word[i - 1];
  return out;
}

Word to_word(const QuotientContext& ctx, const RPoly& f) {
  if (f.degree() >= static_cast<int>(ctx.n)) throw Error(Errc::InvalidDegree, "degree must be below n");
  Word w(ctx.n, RingElement{0, 0, ctx.theta});
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) w[i] = f.coeffs()[i];
  return w;
}

RPoly from_word(const QuotientContext& ctx, const Word& w) {
  if (w.size() != ctx.n) throw Error(Errc::InvalidLength, "word length differs from n");
  return RPoly(ctx.theta, w);
}

RPoly reverse_poly(const QuotientContext& ctx, const RPoly& f) {
  if (f.degree() >= static_cast<int>(ctx.n)) throw Error(Errc::InvalidDegree, "degree must be below n");
  if (f.is_zero()) return f;
  return reciprocal(f).shifted(ctx.n - 1 - static_cast<std::size_t>(f.degree()));
}

QuadPoly quad_reduce(const QuadPoly& f, std::size_t n, std::uint8_t lambda) {
  auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > n;) {
    c[i - n] = (c[i - n] + lambda * c[i]) & 3;
    c[i] = 0;
  }
  return QuadPoly(std::move(c));
}

QuadPoly quad_mulmod(const QuadPoly& f, const QuadPoly& g, std::size_t n, std::uint8_t lambda) {
  return quad_reduce(f * g, n, lambda);
}

QuadPoly quad_binomial_power(std::size_t m, std::size_t t, std::size_t n, std::uint8_t lambda) {
  const QuadPoly base = quad_reduce(QuadPoly::monomial(m) - QuadPoly{1}, n, lambda);
  QuadPoly acc{1};
  for (std::size_t i = 0; i < t; ++i) acc = quad_mulmod(acc, base, n, lambda);
  return acc;
}

}  // namespace z4nu
