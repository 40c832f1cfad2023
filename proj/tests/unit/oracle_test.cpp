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

#include <algorithm>
#include <bit>
#include <random>

#include "fixtures.hpp"
#include "z4nu/error.hpp"
#include "z4nu/oracle.hpp"
#include "z4nu/sweep.hpp"

namespace z4nu {
namespace {

using testing::gens;

QuotientContext ctx_of(const char* theta, const char* unit, std::size_t n) {
  const Theta t = parse_theta(theta);
  return QuotientContext::make(t, parse_element(unit, t), n);
}

TEST(Closure, Boundaries) {
  const auto zero = enumerate_ideal(gens("0", "1+v", 3, {}));
  EXPECT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero.contains(Packed{0}));
  const auto whole = enumerate_ideal(gens("v", "3+2v", 3, {"1"}));
  EXPECT_EQ(whole.size(), 4096u);
  EXPECT_TRUE(verify_ideal(whole));
  EXPECT_TRUE(verify_ideal(zero));
}

TEST(Closure, SizeLimit) {
  try {
    enumerate_ideal(gens("0", "1+v", 7, {"1"}), 24);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SizeLimitExceeded);
  }
}

TEST(Closure, MatchesRingProducts) {
  // Every product with an ambient element stays inside.
  const auto gs = gens("1", "2+v", 2, {"(1+v)*z+2"});
  const CodeSet cs = enumerate_ideal(gs);
  const WordOps ops(gs.ctx);
  EXPECT_TRUE(verify_ideal(cs));
  for (Packed r = 0; r < 256; ++r)
    for (Packed w : cs.elements()) ASSERT_TRUE(cs.contains(ops.mul(r, w)));
}

TEST(Words, PackRoundTripAndMul) {
  const auto ctx = ctx_of("1", "3v", 3);
  const WordOps ops(ctx);
  const RPoly f = parse_rpoly("(1+v)*z^2+3*z+v", Theta::One);
  const RPoly g = parse_rpoly("2v*z^2+(3+v)", Theta::One);
  EXPECT_EQ(ops.unpack(ops.pack(f)), reduce(ctx, f));
  EXPECT_EQ(ops.unpack(ops.mul(ops.pack(f), ops.pack(g))), quotient_mul(ctx, f, g));
  EXPECT_EQ(ops.unpack(ops.shift(ops.pack(f))), quotient_mul(ctx, parse_rpoly("z", Theta::One), f));
  EXPECT_EQ(ops.unpack(WordOps::add(ops.pack(f), ops.pack(g))), reduce(ctx, f + g));
}

TEST(ResTor, ZeroCodeHasZeroTorsion) {
  const auto cs = enumerate_ideal(gens("0", "1+v", 3, {}));
  const auto rt = oracle_res_tor(cs);
  EXPECT_EQ(rt.residue.size(), 1u);
  EXPECT_EQ(rt.torsion.size(), 1u);
}

TEST(ResTor, SingleTorsionGenerator) {
  const auto cs = enumerate_ideal(gens("0", "1+v", 3, {"v*z+v"}));
  const auto rt = oracle_res_tor(cs);
  EXPECT_EQ(rt.residue.size(), 1u);
  EXPECT_EQ(rt.torsion.size(), 32u);
  // z + 1 packed two bits per coefficient.
  EXPECT_NE(std::find(rt.torsion.begin(), rt.torsion.end(), std::uint64_t{0b0101}), rt.torsion.end());
}

TEST(ResTor, NegacyclicKernel) {
  const auto cs = enumerate_ideal(gens("1", "1+2v", 3, {"z^6-2*z^3+1+(1+v)*z^2+(2+2v)*z", "z^3-1"}));
  EXPECT_EQ(cs.size(), 512u);
  const auto rt = oracle_res_tor(cs);
  EXPECT_EQ(rt.residue.size(), 8u);
  EXPECT_EQ(rt.torsion.size(), 64u);
  EXPECT_EQ(oracle_rank(cs), 6u);
}

TEST(Reversibility, Examples) {
  EXPECT_TRUE(oracle_reversible(enumerate_ideal(gens("0", "1+v", 3, {"v*z+v"}))));
  EXPECT_TRUE(oracle_reversible(enumerate_ideal(gens("0", "3+2v", 4, {"z-1+v", "v*z-v"}))));
  EXPECT_TRUE(oracle_reversible(enumerate_ideal(gens("0", "3+2v", 4, {"z-1+v", "z-1"}))));
  EXPECT_TRUE(oracle_reversible(enumerate_ideal(gens("1", "1+2v", 3, {"z^6-2*z^3+1+(1+v)*z^2+(2+2v)*z", "z^3-1"}))));
}

TEST(Equality, ThirdExampleReadingsDiffer) {
  const auto a = enumerate_ideal(gens("0", "3+2v", 4, {"z-1+v", "v*z-v"}));
  const auto b = enumerate_ideal(gens("0", "3+2v", 4, {"z-1+v", "z-1"}));
  EXPECT_EQ(a.size(), 16384u);
  EXPECT_EQ(b.size(), 32768u);
  EXPECT_FALSE(oracle_equal(a, b));
}

TEST(Equality, GeneratorOrderIrrelevant) {
  std::mt19937 rng(7);
  const auto ctx = ctx_of("v", "1+2v", 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RPoly> g;
    for (int k = 0; k < 3; ++k) {
      std::vector<RingElement> c;
      for (int i = 0; i < 3; ++i)
        c.push_back({static_cast<std::uint8_t>(rng() % 4), static_cast<std::uint8_t>(rng() % 4), Theta::Nu});
      g.emplace_back(Theta::Nu, c);
    }
    const CodeSet a = enumerate_ideal(GeneratorSet(ctx, g));
    std::shuffle(g.begin(), g.end(), rng);
    const CodeSet b = enumerate_ideal(GeneratorSet(ctx, g));
    EXPECT_TRUE(oracle_equal(a, b));
    EXPECT_TRUE(std::has_single_bit(a.size()));
    EXPECT_EQ(a.fingerprint(), b.fingerprint());
  }
}

TEST(Rank, Boundaries) {
  EXPECT_EQ(oracle_rank(enumerate_ideal(gens("0", "1+v", 3, {}))), 0u);
  EXPECT_EQ(oracle_rank(enumerate_ideal(gens("0", "1+v", 3, {"1"}))), 3u);
  EXPECT_EQ(oracle_rank(enumerate_ideal(gens("0", "3+2v", 4, {"z-1+v", "v*z-v"}))), 4u);
}

TEST(Idempotents, CountsAndLaw) {
  for (auto [theta, unit, n, count] : {std::tuple{"0", "1+v", 1u, 2u}, std::tuple{"0", "1+v", 3u, 4u},
                                       std::tuple{"0", "3", 4u, 2u}, std::tuple{"v", "1+2v", 3u, 16u}}) {
    const auto ctx = ctx_of(theta, unit, n);
    const WordOps ops(ctx);
    const auto e = oracle_idempotents(ctx);
    EXPECT_EQ(e.size(), count) << theta << " " << unit << " " << n;
    for (Packed x : e) EXPECT_EQ(ops.mul(x, x), x);
  }
}

TEST(AllIdeals, Counts) {
  struct Case {
    const char* theta;
    const char* unit;
    std::size_t n;
    std::size_t count;
  };
  const Case cases[] = {
      {"0", "1+v", 1, 7},   {"1", "2+v", 1, 7},   {"v", "1+2v", 1, 9}, {"0", "1+v", 2, 23},
      {"0", "1+2v", 2, 43}, {"1", "3+2v", 2, 39}, {"v", "1+2v", 2, 35}, {"0", "1+3v", 3, 63},
      {"1", "3v", 3, 63},   {"v", "1+2v", 3, 81}, {"0", "3", 1, 7},    {"0", "3", 2, 23},
      {"v", "3+2v", 2, 35},
  };
  for (const auto& c : cases) {
    const auto ctx = ctx_of(c.theta, c.unit, c.n);
    const auto all = enumerate_all_ideals(ctx);
    EXPECT_EQ(all.size(), c.count) << c.theta << " " << c.unit << " " << c.n;
    EXPECT_EQ(enumerate_ideal_generators(ctx).size(), c.count);
    for (const auto& cs : all) ASSERT_TRUE(verify_ideal(cs));
  }
}

TEST(AllIdeals, LengthFourBetaCounts) {
  EXPECT_EQ(enumerate_ideal_generators(ctx_of("0", "3", 4)).size(), 135u);
  EXPECT_EQ(enumerate_ideal_generators(ctx_of("v", "3+2v", 4)).size(), 207u);
}

TEST(AllIdeals, GeneratorSetRoundTrip) {
  const auto ctx = ctx_of("1", "2+v", 2);
  for (const auto& cs : enumerate_all_ideals(ctx))
    EXPECT_TRUE(oracle_equal(enumerate_ideal(generator_set(ctx, cs.basis())), cs));
}

TEST(Sweep, SmallAlphaContext) {
  const auto res = sweep_context(ctx_of("0", "1+v", 1));
  ASSERT_EQ(res.records.size(), 7u);
  std::size_t matches = 0;
  for (const auto& r : res.records) {
    EXPECT_TRUE(std::holds_alternative<AlphaCanonicalForm>(r.form));
    if (r.formula && r.formula->log2_cardinality == static_cast<long>(r.oracle_log2)) ++matches;
  }
  EXPECT_EQ(matches, 5u);
}

TEST(Sweep, SmallBetaContext) {
  const auto res = sweep_context(ctx_of("0", "3", 2));
  ASSERT_EQ(res.records.size(), 23u);
  for (const auto& r : res.records)
    if (std::holds_alternative<BetaCanonicalForm>(r.form)) EXPECT_EQ(r.structural_reversible, r.oracle_reversible);
}

}  // namespace
}  // namespace z4nu
