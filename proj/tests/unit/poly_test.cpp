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
#include <gtest/gtest.h>

#include <random>

#include "z4nu/error.hpp"
#include "z4nu/poly.hpp"
#include "z4nu/poly_text.hpp"

namespace z4nu {
namespace {

QuotientContext ctx(const char* theta, const char* unit, std::size_t n) {
  const Theta t = parse_theta(theta);
  return QuotientContext::make(t, parse_element(unit, t), n);
}

RPoly rp(const char* s, Theta t = Theta::Zero) { return parse_rpoly(s, t); }

TEST(QuotientMul, Examples) {
  const auto c = ctx("0", "1+v", 3);
  EXPECT_EQ(quotient_mul(c, rp("z^2"), rp("z")), rp("1+v"));
  EXPECT_EQ(quotient_mul(c, rp("z+1"), rp("z^2")), rp("z^2+(1+v)"));
  const auto d = ctx("v", "3+2v", 2);
  EXPECT_EQ(quotient_mul(d, rp("z", Theta::Nu), rp("z", Theta::Nu)), rp("3+2v", Theta::Nu));
}

TEST(QuotientMul, RejectsHighDegree) {
  try {
    quotient_mul(ctx("0", "1+v", 3), rp("z^3"), rp("1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidDegree);
  }
}

TEST(QuotientMul, RingLaws) {
  const auto c = ctx("1", "3v", 4);
  std::mt19937 rng(7);
  auto random_poly = [&] {
    std::vector<RingElement> co;
    for (int i = 0; i < 4; ++i) co.push_back({static_cast<std::uint8_t>(rng() % 4), static_cast<std::uint8_t>(rng() % 4), Theta::One});
    return RPoly(Theta::One, co);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const RPoly f = random_poly(), g = random_poly(), h = random_poly();
    EXPECT_EQ(quotient_mul(c, f, g), quotient_mul(c, g, f));
    EXPECT_EQ(quotient_mul(c, quotient_mul(c, f, g), h), quotient_mul(c, f, quotient_mul(c, g, h)));
    EXPECT_EQ(quotient_mul(c, f, g + h), quotient_mul(c, f, g) + quotient_mul(c, f, h));
  }
}

TEST(Context, Decomposition) {
  const auto c = ctx("0", "3", 12);
  EXPECT_EQ(c.n_odd_part, 3u);
  EXPECT_EQ(c.s, 2u);
  EXPECT_EQ(c.unit_class, UnitClass::Beta);
  EXPECT_THROW(ctx("0", "2", 3), Error);
  EXPECT_THROW(ctx("0", "1+v", 0), Error);
}

TEST(Shift, Examples) {
  const Theta t = Theta::Zero;
  const auto c = ctx("0", "3", 3);
  const RingElement o{0, 0, t}, one{1, 0, t}, three{3, 0, t};
  EXPECT_EQ(constacyclic_shift(c, Word{one, o, o}), (Word{o, one, o}));
  EXPECT_EQ(constacyclic_shift(c, Word{o, o, one}), (Word{three, o, o}));
  const auto d = ctx("1", "3v", 2);
  const RingElement zero1{0, 0, Theta::One};
  EXPECT_EQ(constacyclic_shift(d, Word{zero1, parse_element("1+v", Theta::One)}),
            (Word{parse_element("3+3v", Theta::One), zero1}));
  EXPECT_THROW(constacyclic_shift(c, Word{one, o}), Error);
}

TEST(Shift, NShiftsScaleByUnit) {
  const auto c = ctx("v", "3+2v", 5);
  Word w;
  for (int i = 0; i < 5; ++i) w.push_back({static_cast<std::uint8_t>(i % 4), static_cast<std::uint8_t>((3 * i) % 4), Theta::Nu});
  Word s = w;
  for (int i = 0; i < 5; ++i) s = constacyclic_shift(c, s);
  for (std::size_t i = 0; i < w.size(); ++i) EXPECT_EQ(s[i], c.unit * w[i]);
  EXPECT_EQ(to_word(c, quotient_mul(c, rp("z", Theta::Nu), from_word(c, w))), constacyclic_shift(c, w));
}

TEST(Reciprocal, Examples) {
  EXPECT_EQ(reciprocal(parse_bin("z+1")), parse_bin("z+1"));
  const QuadPoly sq = parse_quad("z^3-1") * parse_quad("z^3-1");
  EXPECT_EQ(sq, parse_quad("z^6+2*z^3+1"));
  EXPECT_EQ(reciprocal(sq), sq);
  EXPECT_EQ(reciprocal(parse_quad("z^2+2*z")), parse_quad("2*z+1"));
  EXPECT_TRUE(reciprocal(QuadPoly{}).is_zero());
}

TEST(Reciprocal, SelfReciprocal) {
  EXPECT_TRUE(self_reciprocal(parse_bin("z+1")));
  EXPECT_FALSE(self_reciprocal(parse_bin("z^2+z")));
  EXPECT_TRUE(self_reciprocal(parse_bin("z^4+1")));
}

TEST(Reverse, Examples) {
  const auto c3 = ctx("0", "1+v", 3);
  EXPECT_EQ(reverse_poly(c3, rp("z+1")), rp("z^2+z"));
  EXPECT_EQ(reverse_poly(c3, rp("1")), rp("z^2"));
  EXPECT_EQ(reverse_poly(ctx("0", "1+v", 4), rp("z^3")), rp("1"));
  EXPECT_THROW(reverse_poly(c3, rp("z^3")), Error);
}

TEST(BinArith, DivmodAndGcd) {
  const auto [q, r] = bin_divmod(parse_bin("z^2+1"), parse_bin("z+1"));
  EXPECT_EQ(q, parse_bin("z+1"));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(bin_gcd(parse_bin("z^4+1"), parse_bin("z^2+1")), parse_bin("z^2+1"));
  EXPECT_EQ(bin_gcd(parse_bin("z^3+1"), parse_bin("z^2+z")), parse_bin("z+1"));
  EXPECT_TRUE(bin_gcd(BinPoly{}, BinPoly{}).is_zero());
  EXPECT_THROW(bin_divmod(parse_bin("z"), BinPoly{}), Error);
}

TEST(BinArith, DivmodIdentityRandom) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    BinPoly f, g;
    for (int k = 0; k < 70; ++k) f.set(k, rng() & 1);
    for (int k = 0; k < 20; ++k) g.set(k, rng() & 1);
    if (g.is_zero()) continue;
    const auto [q, r] = bin_divmod(f, g);
    EXPECT_EQ(q * g + r, f);
    EXPECT_LT(r.degree(), g.degree());
  }
}

TEST(Text, PolynomialGrammar) {
  const RPoly f = rp("(1+v)*z^2 + 2*z + 3");
  EXPECT_EQ(to_string(f), "(1+v)*z^2 + 2*z + 3");
  EXPECT_EQ(to_string(f, TermOrder::Ascending), "3 + 2*z + (1+v)*z^2");
  EXPECT_EQ(rp(to_string(f, TermOrder::Ascending).c_str()), f);
  EXPECT_EQ(rp("2v*z - v"), rp("(2v)*z+(3v)"));
  EXPECT_EQ(to_string(RPoly(Theta::Zero)), "0");
}

TEST(Text, ErrorsNameTheToken) {
  try {
    rp("z^2 + q");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
    EXPECT_NE(std::string(e.what()).find("'q'"), std::string::npos);
  }
}

}  // namespace
}  // namespace z4nu
