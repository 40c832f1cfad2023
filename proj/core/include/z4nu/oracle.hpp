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
#include <span>
#include <utility>
#include <vector>

#include "z4nu/canonical.hpp"
#include "z4nu/poly.hpp"

namespace z4nu {

/// Word of length n packed 4 bits per coefficient: a in bits 0-1, b in bits 2-3.
using Packed = std::uint64_t;

/// Packed word arithmetic for one ambient ring.
class WordOps {
 public:
  explicit WordOps(const QuotientContext& ctx);

  const QuotientContext& ctx() const noexcept { return ctx_; }
  std::size_t n() const noexcept { return ctx_.n; }

  Packed pack(const RPoly& f) const;
  RPoly unpack(Packed w) const;

  static Packed add(Packed x, Packed y) noexcept;
  Packed scale(const RingElement& c, Packed w) const noexcept;
  Packed shift(Packed w) const noexcept;
  Packed reverse(Packed w) const noexcept;
  /// Product in the quotient ring.
  Packed mul(Packed x, Packed y) const noexcept;

 private:
  QuotientContext ctx_;
  Packed mask_;
  std::uint8_t mul_[16][16];
  std::uint8_t add_[16][16];
};

/// Explicit element set of an additive subgroup of words.
class CodeSet {
 public:
  CodeSet(QuotientContext ctx, std::vector<Packed> elements, std::vector<Packed> basis);

  const QuotientContext& ctx() const noexcept { return ctx_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t log2_size() const noexcept;
  bool contains(Packed w) const;
  bool contains(const RPoly& f) const;
  const std::vector<Packed>& elements() const noexcept { return elements_; }
  /// Additive generators collected during closure.
  const std::vector<Packed>& basis() const noexcept { return basis_; }
  std::size_t fingerprint() const noexcept;

 private:
  QuotientContext ctx_;
  std::vector<Packed> elements_;
  std::vector<Packed> basis_;
  /// Dense membership bitmap for large sets over small word spaces; empty otherwise.
  std::vector<std::uint64_t> bits_;
};

inline constexpr unsigned kDefaultOracleLog2 = 24;

/// Least set containing the generators and closed under addition, the shift and the scalars nu, 2, 3.
/// Throws SizeLimitExceeded when 16^n exceeds 2^max_log2_words.
CodeSet enumerate_ideal(const GeneratorSet& gs, unsigned max_log2_words = kDefaultOracleLog2);

/// Closure of words under addition and the scalars nu, 2, 3 only.
CodeSet r_span(const QuotientContext& ctx, std::span<const RPoly> words, unsigned max_log2_words = kDefaultOracleLog2);

/// Closed under the shift and all scalars.
bool verify_ideal(const CodeSet& cs);

/// Z4 words packed 2 bits per coefficient.
struct ResTor {
  std::vector<std::uint64_t> residue;
  std::vector<std::uint64_t> torsion;
};
ResTor oracle_res_tor(const CodeSet& cs);

bool oracle_reversible(const CodeSet& cs);
bool oracle_equal(const CodeSet& a, const CodeSet& b);

/// Minimum number of R-module generators: max over maximal ideals m of dim(C / mC).
std::size_t oracle_rank(const CodeSet& cs);

/// Idempotents of the ambient ring, by exhaustive search.
std::vector<Packed> oracle_idempotents(const QuotientContext& ctx, unsigned max_log2_words = kDefaultOracleLog2);

/// Additive generators of every ideal of the ambient ring, one list per ideal.
///
/// The ring is split along its primitive idempotents; ideals of each factor are found
/// from principal ideals and their sums, and every combination across factors is listed.
std::vector<std::vector<Packed>> enumerate_ideal_generators(const QuotientContext& ctx, std::size_t max_n = 6);

/// Every ideal of the ambient ring, deduplicated, smallest first.
std::vector<CodeSet> enumerate_all_ideals(const QuotientContext& ctx, std::size_t max_n = 3);

/// Generator set whose ideal is the closure of packed generators.
GeneratorSet generator_set(const QuotientContext& ctx, std::span<const Packed> words);

}  // namespace z4nu
