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
#include "z4nu/analysis.hpp"

#include <algorithm>

#include "z4nu/error.hpp"

namespace z4nu {

namespace {

long deg_or_n(const BinPoly& f, std::size_t n) {
  return f.is_zero() ? static_cast<long>(n) : f.degree();
}

/// z^shift f* - f, with binary f lifted to 0/1 coefficients.
QuadPoly reflected_difference(const BinPoly& f, long shift) {
  if (f.is_zero()) return {};
  const QuadPoly lf = QuadPoly::lift(f);
  return QuadPoly::lift(reciprocal(f)) * QuadPoly::monomial(static_cast<std::size_t>(std::max(0L, shift))) - lf;
}

RPoly k_times(const QuotientContext& ctx, const QuadPoly& q) {
  return reduce(ctx, k_theta(ctx.theta) * RPoly::embed(ctx.theta, q));
}

}  // namespace

RankCardinality rank_cardinality_alpha(const AlphaCanonicalForm& form) {
  const auto n = static_cast<long>(form.ctx.n);
  const long s1 = deg_or_n(form.t11, form.ctx.n);
  const long s2 = deg_or_n(form.t22, form.ctx.n);
  const long s3 = deg_or_n(form.t33, form.ctx.n);
  const long s4 = deg_or_n(form.t44, form.ctx.n);
  const long st = std::min(s2, s3);
  RankCardinality out;
  out.rank = n + s1 + st - s2 - s3 - s4;
  out.log2_cardinality = form.t23.is_zero() ? 4 * n + st - 2 * s2 - 2 * s3 - s4
                                            : 4 * n + s1 + st - 3 * s2 - 2 * s3 - s4;
  return out;
}

RankCardinality rank_cardinality_beta(const BetaCanonicalForm& form) {
  const auto big_n = static_cast<long>(form.ctx.n);
  const auto n = static_cast<long>(form.ctx.n_odd_part);
  const auto t1 = static_cast<long>(form.t1);
  const auto t2 = static_cast<long>(form.t2);
  const long top = 2L << form.ctx.s;
  if (t1 == top && t2 == top) return {0, 0};
  return {big_n - n * t2, 4 * big_n - 2 * n * t1 - 2 * n * t2};
}

std::size_t layer_log2_cardinality(const AlphaCanonicalForm& form) {
  std::size_t total = 0;
  for (int i = 1; i <= 4; ++i) total += form.ctx.n - static_cast<std::size_t>(form.t(i, i).degree());
  return total;
}

std::vector<RPoly> minimal_spanning_beta(const BetaCanonicalForm& form) {
  if (form.t1 < form.t2) throw Error(Errc::InvalidExponents, "t1 < t2");
  const auto& ctx = form.ctx;
  const auto big_n = static_cast<long>(ctx.n);
  const auto n = static_cast<long>(ctx.n_odd_part);
  const long first = std::max(0L, big_n - n * static_cast<long>(form.t1));
  const long second = n * static_cast<long>(form.t1 - form.t2);
  std::vector<RPoly> out;
  const RPoly l1 = beta_first(form);
  const RPoly l2 = beta_second(form);
  const RPoly z = RPoly(ctx.theta, {RingElement{0, 0, ctx.theta}, RingElement{1, 0, ctx.theta}});
  RPoly cur = l1;
  for (long i = 0; i < first; ++i) {
    out.push_back(cur);
    cur = reduce(ctx, cur * z);
  }
  cur = l2;
  for (long i = 0; i < second; ++i) {
    out.push_back(cur);
    cur = reduce(ctx, cur * z);
  }
  return out;
}

MembershipReversal reversible_by_membership(const GeneratorSet& gs) {
  const IdealModule ideal(gs);
  MembershipReversal out;
  for (std::size_t i = 0; i < gs.gens.size(); ++i) {
    if (!ideal.contains(reciprocal(gs.gens[i]))) {
      out.reversible = false;
      out.witness_index = i;
      out.witness = gs.gens[i];
      return out;
    }
  }
  return out;
}

bool reversible_by_span(const GeneratorSet& gs) {
  const IdealModule ideal(gs);
  const auto& ctx = gs.ctx;
  for (const auto& v : ideal.layers().filtration_spanning(0)) {
    Word w = to_word(ctx, from_pq(ctx, v));
    std::reverse(w.begin(), w.end());
    if (!ideal.layers().contains(pq_vector(ctx, from_word(ctx, w)))) return false;
  }
  return true;
}

AlphaReversal reversible_alpha_structural(const AlphaCanonicalForm& form) {
  const auto& ctx = form.ctx;
  const GeneratorSet gs(ctx, generators(form));
  const IdealModule ideal(gs);
  AlphaReversal out;

  out.conditions.push_back({"(i)",
                            self_reciprocal(form.t11) && self_reciprocal(form.t22) && self_reciprocal(form.t33) &&
                                    self_reciprocal(form.t44)
                                ? Verdict::Pass
                                : Verdict::Fail,
                            {}});

  {
    bool ok = true;
    if (!form.t34.is_zero()) {
      const long alpha = form.t33.degree() - form.t34.degree();
      const BinPoly lhs = reciprocal(form.t34).shifted(static_cast<std::size_t>(std::max(0L, alpha))) + form.t34;
      ok = bin_divides(form.t44, lhs);
    }
    out.conditions.push_back({"(ii)", ok ? Verdict::Pass : Verdict::Fail, {}});
  }

  {
    const long d11 = form.t11.degree();
    const QuadPoly two_part = reflected_difference(form.t12, d11 - form.t12.degree());
    const QuadPoly k_part = reflected_difference(form.t13, d11 - form.t13.degree());
    const RPoly x = reduce(ctx, RPoly::embed(ctx.theta, 2 * two_part)) + k_times(ctx, k_part);
    out.conditions.push_back({"(iii)", ideal.contains(x) ? Verdict::Pass : Verdict::Fail, "h1 = t13"});
  }

  {
    const QuadPoly diff = reflected_difference(form.t23, form.t22.degree() - form.t23.degree());
    const bool ok = ideal.contains(k_times(ctx, diff));
    out.conditions.push_back({"(iv)", ok ? Verdict::Pass : Verdict::Fail, "h2 = t23"});
  }

  out.verdict = std::all_of(out.conditions.begin(), out.conditions.end(),
                            [](const auto& c) { return c.verdict == Verdict::Pass; });
  out.membership_verdict = reversible_by_membership(gs).reversible;
  return out;
}

bool reversible_beta_structural(const BetaCanonicalForm& form) {
  return beta_contains(form, reciprocal(beta_first(form)));
}

bool torsion_reversibility_check(const GeneratorSet& gs) {
  const IdealModule ideal(gs);
  const LayeredModule tor = ideal.torsion();
  for (const auto& v : tor.filtration_spanning(0)) {
    Z4Vec r(v.rbegin(), v.rend());
    if (!tor.contains(r)) return false;
  }
  return true;
}

CodeReport analyze(const GeneratorSet& gs) {
  CodeReport rep;
  rep.unit_class = gs.ctx.unit_class;
  const IdealModule ideal(gs);
  rep.exact_log2_cardinality = ideal.log2_cardinality();
  const auto membership = reversible_by_membership(gs);
  rep.reversible = membership.reversible;
  rep.witness_index = membership.witness_index;
  rep.torsion_reversible = torsion_reversibility_check(gs);
  if (gs.ctx.unit_class == UnitClass::Alpha) {
    const auto form = canonicalize_alpha(gs);
    rep.formula = rank_cardinality_alpha(form);
    const auto rev = reversible_alpha_structural(form);
    rep.structural_reversible = rev.verdict;
    rep.conditions = rev.conditions;
  } else {
    try {
      const auto form = canonicalize_beta(gs);
      rep.formula = rank_cardinality_beta(form);
      rep.structural_reversible = reversible_beta_structural(form);
      if (form.t2 <= form.t1) rep.spanning_set_size = minimal_spanning_beta(form).size();
    } catch (const Error& e) {
      if (e.code() != Errc::NotChainForm) throw;
      rep.structure_error = e.what();
    }
  }
  return rep;
}

}  // namespace z4nu
