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
#include <variant>
#include <vector>

#include "z4nu/analysis.hpp"
#include "z4nu/error.hpp"
#include "z4nu/oracle.hpp"

namespace z4nu {

/// Structural and brute-force results for one ideal.
struct IdealRecord {
  std::vector<Packed> basis;
  std::size_t oracle_log2 = 0;
  std::size_t oracle_rank = 0;
  bool oracle_reversible = false;

  std::variant<std::monostate, AlphaCanonicalForm, BetaCanonicalForm> form;
  std::optional<std::string> structure_error;
  std::optional<RankCardinality> formula;
  std::optional<bool> structural_reversible;
  std::vector<ConditionResult> conditions;
  std::optional<DivisibilityReport> divisibility;
  /// Size of the constructed spanning set and whether its R-span is the whole ideal.
  std::optional<std::size_t> spanning_size;
  bool spanning_certified = false;
};

struct SweepResult {
  QuotientContext ctx;
  std::vector<IdealRecord> records;
};

IdealRecord examine_ideal(const QuotientContext& ctx, std::vector<Packed> basis);

/// Examines every ideal of the context.
SweepResult sweep_context(const QuotientContext& ctx, std::size_t max_n = 6);

/// Runs sweep_context over several contexts on worker threads; results keep input order.
std::vector<SweepResult> sweep_contexts(const std::vector<QuotientContext>& ctxs, std::size_t max_n = 6);

}  // namespace z4nu
