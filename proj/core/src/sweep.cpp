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
#include "z4nu/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace z4nu {

IdealRecord examine_ideal(const QuotientContext& ctx, std::vector<Packed> basis) {
  IdealRecord rec;
  rec.basis = std::move(basis);
  const GeneratorSet gs = generator_set(ctx, rec.basis);
  const CodeSet cs = enumerate_ideal(gs);
  rec.oracle_log2 = cs.log2_size();
  rec.oracle_rank = oracle_rank(cs);
  rec.oracle_reversible = oracle_reversible(cs);

  try {
    if (ctx.unit_class == UnitClass::Alpha) {
      auto form = canonicalize_alpha(gs);
      rec.formula = rank_cardinality_alpha(form);
      auto rev = reversible_alpha_structural(form);
      rec.structural_reversible = rev.verdict;
      rec.conditions = std::move(rev.conditions);
      rec.divisibility = verify_divisibility(form);
      rec.form = std::move(form);
    } else {
      auto form = canonicalize_beta(gs);
      rec.formula = rank_cardinality_beta(form);
      rec.structural_reversible = reversible_beta_structural(form);
      const auto spanning = minimal_spanning_beta(form);
      rec.spanning_size = spanning.size();
      rec.spanning_certified = oracle_equal(r_span(ctx, spanning), cs);
      rec.form = std::move(form);
    }
  } catch (const Error& e) {
    if (e.code() != Errc::NotChainForm && e.code() != Errc::InvalidExponents) throw;
    rec.structure_error = e.what();
  }
  return rec;
}

SweepResult sweep_context(const QuotientContext& ctx, std::size_t max_n) {
  SweepResult out{ctx, {}};
  for (auto& basis : enumerate_ideal_generators(ctx, max_n)) out.records.push_back(examine_ideal(ctx, std::move(basis)));
  return out;
}

std::vector<SweepResult> sweep_contexts(const std::vector<QuotientContext>& ctxs, std::size_t max_n) {
  std::vector<SweepResult> out(ctxs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < ctxs.size();) out[i] = sweep_context(ctxs[i], max_n);
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(hw, ctxs.size()); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace z4nu
