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
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "z4nu/layered.hpp"
#include "z4nu/poly.hpp"
#include "z4nu/z4codes.hpp"

namespace z4nu {

/// Generators of an ideal of R_theta[z]/<z^n - u>; inputs are reduced on construction.
struct GeneratorSet {
  QuotientContext ctx;
  std::vector<RPoly> gens;

  GeneratorSet(QuotientContext c, std::vector<RPoly> g);
};

/// Coordinates (P, Q) with x = P + k Q: P = phi(x), Q = nu-part.
Z4Vec pq_vector(const QuotientContext& ctx, const RPoly& f);
RPoly from_pq(const QuotientContext& ctx, const Z4Vec& v);

/// The ideal as a layered additive group over the coordinates (P, Q).
class IdealModule {
 public:
  explicit IdealModule(const GeneratorSet& gs);

  const QuotientContext& ctx() const noexcept { return ctx_; }
  const LayeredModule& layers() const noexcept { return module_; }
  std::size_t log2_cardinality() const noexcept { return module_.log2_order(); }
  bool contains(const RPoly& f) const;

  /// phi-image, a code in Z4[z]/<z^n - phi(u)>.
  LayeredModule residue() const;
  /// {a : k a in C}, a code in Z4[z]/<z^n - c> with k u = c k.
  LayeredModule torsion() const;

 private:
  QuotientContext ctx_;
  LayeredModule module_;
};

struct AlphaCanonicalForm {
  QuotientContext ctx;
  BinPoly t11, t12, t13, t14, t22, t23, t24, t33, t34, t44;

  const BinPoly& t(int i, int j) const;
  BinPoly& t(int i, int j);
  friend bool operator==(const AlphaCanonicalForm&, const AlphaCanonicalForm&) = default;
};

struct BetaCanonicalForm {
  QuotientContext ctx;
  std::size_t t1 = 0;
  std::size_t t2 = 0;
  QuadPoly t;

  friend bool operator==(const BetaCanonicalForm&, const BetaCanonicalForm&) = default;
};

struct TowerCodes {
  BinPoly c1, c2, c3, c4;
  friend bool operator==(const TowerCodes&, const TowerCodes&) = default;
};

using Z4CodeForm = std::variant<Z4CyclicForm, Z4NegacyclicForm>;

Z4CodeForm residue_code(const GeneratorSet& gs);
Z4CodeForm kernel_code(const GeneratorSet& gs);
TowerCodes tower_codes(const GeneratorSet& gs);

AlphaCanonicalForm canonicalize_alpha(const GeneratorSet& gs);
/// Same construction without the unit-class check; valid for every unit.
AlphaCanonicalForm layered_form(const GeneratorSet& gs);
BetaCanonicalForm canonicalize_beta(const GeneratorSet& gs);

std::vector<RPoly> generators(const AlphaCanonicalForm& form);
std::vector<RPoly> generators(const BetaCanonicalForm& form);
RPoly beta_first(const BetaCanonicalForm& form);
RPoly beta_second(const BetaCanonicalForm& form);

/// Membership by division against the canonical pair.
bool beta_contains(const BetaCanonicalForm& form, const RPoly& f);

enum class Verdict { Pass, Fail, NotApplicable };
std::string_view verdict_name(Verdict v) noexcept;

struct ConditionResult {
  std::string id;
  Verdict verdict = Verdict::NotApplicable;
  std::string note;
};

struct DivisibilityReport {
  std::vector<ConditionResult> conditions;
  std::size_t count(Verdict v) const;
};

DivisibilityReport verify_divisibility(const AlphaCanonicalForm& form);

}  // namespace z4nu
