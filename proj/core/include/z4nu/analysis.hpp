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
#include <optional>
#include <string>
#include <vector>

#include "z4nu/canonical.hpp"

namespace z4nu {

struct RankCardinality {
  long rank = 0;
  long log2_cardinality = 0;
};

/// Closed-form rank and cardinality from the diagonal degrees.
RankCardinality rank_cardinality_alpha(const AlphaCanonicalForm& form);
RankCardinality rank_cardinality_beta(const BetaCanonicalForm& form);

/// Sum over the four layers of (n - deg t_ii).
std::size_t layer_log2_cardinality(const AlphaCanonicalForm& form);

/// {z^i l1 : i < N - n t1} then {z^i l2 : i < n t1 - n t2}.
std::vector<RPoly> minimal_spanning_beta(const BetaCanonicalForm& form);

struct MembershipReversal {
  bool reversible = true;
  std::optional<std::size_t> witness_index;
  std::optional<RPoly> witness;
};

/// Reciprocal of every generator lies in the code.
MembershipReversal reversible_by_membership(const GeneratorSet& gs);

/// Word reversal applied to an additive spanning set of the code.
bool reversible_by_span(const GeneratorSet& gs);

struct AlphaReversal {
  bool verdict = false;
  std::vector<ConditionResult> conditions;
  bool membership_verdict = false;
};

AlphaReversal reversible_alpha_structural(const AlphaCanonicalForm& form);
bool reversible_beta_structural(const BetaCanonicalForm& form);

/// Word reversal closure of the torsion code.
bool torsion_reversibility_check(const GeneratorSet& gs);

struct CodeReport {
  UnitClass unit_class = UnitClass::Alpha;
  std::optional<RankCardinality> formula;
  std::size_t exact_log2_cardinality = 0;
  bool reversible = false;
  std::optional<std::size_t> witness_index;
  std::optional<bool> structural_reversible;
  std::vector<ConditionResult> conditions;
  std::optional<std::size_t> spanning_set_size;
  bool torsion_reversible = false;
  std::optional<std::string> structure_error;
};

CodeReport analyze(const GeneratorSet& gs);

}  // namespace z4nu
