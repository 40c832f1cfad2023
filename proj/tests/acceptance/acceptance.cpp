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
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "z4nu/analysis.hpp"
#include "z4nu/error.hpp"
#include "z4nu/oracle.hpp"
#include "z4nu/poly_text.hpp"
#include "z4nu/sweep.hpp"
#include "z4nu_cli/cli.hpp"

namespace {

using namespace z4nu;
using Json = nlohmann::ordered_json;

constexpr double kExampleSeconds = 1.0;
constexpr std::size_t kAlphaRandomSets = 200;
constexpr std::size_t kAlphaRandomLength = 4;
constexpr std::size_t kIdempotenceSets = 1200;
constexpr std::size_t kIdempotenceMaxLength = 4;
constexpr std::size_t kReciprocalPairs = 10000;
constexpr std::uint64_t kSeed = 0x5eed2026;

constexpr Theta kThetas[] = {Theta::Zero, Theta::One, Theta::Nu};

void report(int id, bool ok, const std::string& title, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string ctx_label(const QuotientContext& ctx) {
  return "theta=" + std::string(theta_token(ctx.theta)) + " u=" + to_string(ctx.unit) + " n=" + std::to_string(ctx.n);
}

RPoly random_poly(std::mt19937_64& rng, Theta t, std::size_t len) {
  std::vector<RingElement> c;
  for (std::size_t i = 0; i < len; ++i)
    c.push_back({static_cast<std::uint8_t>(rng() & 3), static_cast<std::uint8_t>((rng() >> 2) & 3), t});
  return RPoly(t, c);
}

GeneratorSet random_set(std::mt19937_64& rng, const QuotientContext& ctx) {
  std::vector<RPoly> g;
  const std::size_t count = 1 + rng() % 3;
  for (std::size_t i = 0; i < count; ++i) g.push_back(random_poly(rng, ctx.theta, ctx.n));
  return GeneratorSet(ctx, g);
}

GeneratorSet parse_set(const std::string& theta, const std::string& unit, std::size_t n,
                       const std::vector<std::string>& polys) {
  const Theta t = parse_theta(theta);
  const auto ctx = QuotientContext::make(t, parse_element(unit, t), n);
  std::vector<RPoly> g;
  for (const auto& p : polys) g.push_back(parse_rpoly(p, t));
  return GeneratorSet(ctx, g);
}

Json basis_json(const QuotientContext& ctx, const std::vector<Packed>& basis) {
  const WordOps ops(ctx);
  Json arr = Json::array();
  for (Packed w : basis) arr.push_back(to_string(ops.unpack(w)));
  return arr;
}

// 1
bool reference_codes() {
  bool ok = true;
  std::string detail;
  for (const auto& ex : cli::reference_examples()) {
    const auto start = std::chrono::steady_clock::now();
    const GeneratorSet gs = parse_set(ex.theta, ex.unit, ex.length, ex.generators);
    const CodeReport rep = analyze(gs);
    bool match = rep.reversible == ex.expected_reversible;
    if (!ex.expected_failing_condition.empty()) {
      bool failing = false;
      for (const auto& c : rep.conditions)
        failing = failing || (c.id == ex.expected_failing_condition && c.verdict == Verdict::Fail);
      match = match && failing;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool fast = secs < kExampleSeconds;
    ok = ok && match && fast;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s%s got %s expected %s %.3fs", detail.empty() ? "" : "; ", ex.name.c_str(),
                  rep.reversible ? "true" : "false", ex.expected_reversible ? "true" : "false", secs);
    detail += buf;
  }
  const auto& lit = cli::example3_literal_reading();
  const auto& enc = cli::reference_examples()[2];
  const CodeSet a = enumerate_ideal(parse_set(lit.theta, lit.unit, lit.length, lit.generators));
  const CodeSet b = enumerate_ideal(parse_set(enc.theta, enc.unit, enc.length, enc.generators));
  detail += "; example-3 z-1 reading: " + std::to_string(a.size()) + " words, reversible " +
            (oracle_reversible(a) ? "true" : "false") + ", same code as nu(z-1) reading " +
            (oracle_equal(a, b) ? "true" : "false");
  report(1, ok, "reference codes", detail);
  return ok;
}

struct Counterexamples {
  Json items = Json::array();
  void add(const QuotientContext& ctx, const IdealRecord& r) {
    Json e;
    e["theta"] = std::string(theta_token(ctx.theta));
    e["unit"] = to_string(ctx.unit);
    e["length"] = ctx.n;
    e["generators"] = basis_json(ctx, r.basis);
    e["oracle_reversible"] = r.oracle_reversible;
    e["structural_reversible"] = r.structural_reversible ? Json(*r.structural_reversible) : Json(nullptr);
    e["structure_error"] = r.structure_error ? Json(*r.structure_error) : Json(nullptr);
    Json conds = Json::object();
    for (const auto& c : r.conditions) conds[c.id] = std::string(verdict_name(c.verdict));
    e["conditions"] = std::move(conds);
    items.push_back(std::move(e));
  }
};

struct ReversalTally {
  std::size_t checked = 0, disagree = 0, no_verdict = 0;
  void add(const QuotientContext& ctx, const IdealRecord& r, Counterexamples& out) {
    ++checked;
    if (!r.structural_reversible) {
      ++no_verdict;
      out.add(ctx, r);
    } else if (*r.structural_reversible != r.oracle_reversible) {
      ++disagree;
      out.add(ctx, r);
    }
  }
};

struct DivisibilityTally {
  std::size_t forms = 0, pass = 0, fail = 0, not_applicable = 0;
  void add(const DivisibilityReport& d) {
    ++forms;
    pass += d.count(Verdict::Pass);
    fail += d.count(Verdict::Fail);
    not_applicable += d.count(Verdict::NotApplicable);
  }
};

// 2, feeding 5 and 6
bool alpha_sweep(DivisibilityTally& div, ReversalTally& rev, Counterexamples& cex) {
  std::vector<QuotientContext> ctxs;
  for (Theta t : kThetas)
    for (const auto& u : published_units(t, UnitClass::Alpha))
      for (std::size_t n = 1; n <= 3; ++n) ctxs.push_back(QuotientContext::make(t, u, n));
  std::size_t ideals = 0, bad = 0;
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_theta;
  for (const auto& res : sweep_contexts(ctxs, 3)) {
    for (const auto& r : res.records) {
      ++ideals;
      const bool match = r.formula && r.formula->log2_cardinality == static_cast<long>(r.oracle_log2);
      auto& slot = per_theta[std::string(theta_token(res.ctx.theta))];
      ++slot.first;
      if (!match) ++bad, ++slot.second;
      if (r.divisibility) div.add(*r.divisibility);
      rev.add(res.ctx, r, cex);
    }
  }
  std::mt19937_64 rng(kSeed);
  std::vector<RingElement> units;
  for (Theta t : kThetas)
    for (const auto& u : published_units(t, UnitClass::Alpha)) units.push_back(u);
  std::size_t random_bad = 0;
  for (std::size_t i = 0; i < kAlphaRandomSets; ++i) {
    const RingElement u = units[rng() % units.size()];
    const auto gs = random_set(rng, QuotientContext::make(u.theta, u, kAlphaRandomLength));
    const auto form = canonicalize_alpha(gs);
    div.add(verify_divisibility(form));
    if (rank_cardinality_alpha(form).log2_cardinality != static_cast<long>(enumerate_ideal(gs).log2_size()))
      ++random_bad;
  }
  std::string detail = std::to_string(ideals - bad) + "/" + std::to_string(ideals) + " swept ideals match";
  for (const auto& [theta, c] : per_theta)
    detail += ", theta=" + theta + " " + std::to_string(c.first - c.second) + "/" + std::to_string(c.first);
  detail += "; random n=4 " + std::to_string(kAlphaRandomSets - random_bad) + "/" + std::to_string(kAlphaRandomSets);
  const bool ok = bad == 0 && random_bad == 0;
  report(2, ok, "alpha cardinality formula vs oracle", detail);
  return ok;
}

// 3, feeding 6
bool beta_sweep(ReversalTally& rev, Counterexamples& cex) {
  std::vector<QuotientContext> ctxs;
  for (std::size_t big_n : {2u, 4u, 6u})
    for (Theta t : kThetas)
      for (const auto& u : published_units(t, UnitClass::Beta)) ctxs.push_back(QuotientContext::make(t, u, big_n));
  std::size_t ideals = 0, no_form = 0, count_bad = 0, span_bad = 0;
  for (const auto& res : sweep_contexts(ctxs, 6)) {
    const auto n = static_cast<long>(res.ctx.n_odd_part);
    const auto big_n = static_cast<long>(res.ctx.n);
    for (const auto& r : res.records) {
      ++ideals;
      rev.add(res.ctx, r, cex);
      if (!std::holds_alternative<BetaCanonicalForm>(r.form)) {
        ++no_form;
        continue;
      }
      const auto& f = std::get<BetaCanonicalForm>(r.form);
      const long expected_log2 = 4 * big_n - 2 * n * static_cast<long>(f.t1) - 2 * n * static_cast<long>(f.t2);
      if (r.oracle_log2 == 0) {
        if (r.formula->log2_cardinality != 0) ++count_bad;
        continue;
      }
      if (expected_log2 != static_cast<long>(r.oracle_log2)) ++count_bad;
      const long span = big_n - n * static_cast<long>(f.t2);
      if (!r.spanning_certified || static_cast<long>(*r.spanning_size) != span ||
          static_cast<long>(r.oracle_rank) != span)
        ++span_bad;
    }
  }
  const bool ok = no_form == 0 && count_bad == 0 && span_bad == 0;
  report(3, ok, "beta cardinality and rank vs oracle",
         std::to_string(ideals) + " ideals, " + std::to_string(no_form) + " without chain form, " +
             std::to_string(count_bad) + " count mismatches, " + std::to_string(span_bad) +
             " spanning mismatches among the rest");
  return ok;
}

// 4
bool idempotence() {
  std::mt19937_64 rng(kSeed + 4);
  std::vector<RingElement> units;
  for (Theta t : kThetas)
    for (UnitClass c : {UnitClass::Alpha, UnitClass::Beta})
      for (const auto& u : published_units(t, c)) units.push_back(u);
  std::size_t good = 0, no_form = 0, bad = 0, alpha = 0, beta = 0;
  for (std::size_t i = 0; i < kIdempotenceSets; ++i) {
    const RingElement u = units[rng() % units.size()];
    const std::size_t n = 1 + rng() % kIdempotenceMaxLength;
    const auto gs = random_set(rng, QuotientContext::make(u.theta, u, n));
    bool ok = false;
    try {
      if (gs.ctx.unit_class == UnitClass::Alpha) {
        ++alpha;
        const auto f = canonicalize_alpha(gs);
        const GeneratorSet regen(gs.ctx, generators(f));
        ok = canonicalize_alpha(regen) == f && oracle_equal(enumerate_ideal(gs), enumerate_ideal(regen));
      } else {
        ++beta;
        const auto f = canonicalize_beta(gs);
        const GeneratorSet regen(gs.ctx, generators(f));
        ok = canonicalize_beta(regen) == f && oracle_equal(enumerate_ideal(gs), enumerate_ideal(regen));
      }
    } catch (const Error& e) {
      if (e.code() != Errc::NotChainForm) throw;
      ++no_form;
      continue;
    }
    ok ? ++good : ++bad;
  }
  const bool ok = good == kIdempotenceSets;
  report(4, ok, "canonical form idempotence and regeneration",
         std::to_string(good) + "/" + std::to_string(kIdempotenceSets) + " sets (" + std::to_string(alpha) +
             " alpha, " + std::to_string(beta) + " beta), " + std::to_string(no_form) + " without chain form, " +
             std::to_string(bad) + " mismatches");
  return ok;
}

// 5
bool divisibility(const DivisibilityTally& d) {
  const bool ok = d.fail == 0;
  report(5, ok, "divisibility relations on alpha forms",
         std::to_string(d.forms) + " forms, " + std::to_string(d.pass) + " pass, " + std::to_string(d.fail) +
             " fail, " + std::to_string(d.not_applicable) + " not applicable");
  return ok;
}

// 6
bool reversal(const ReversalTally& r, const Counterexamples& cex, const std::string& artifact) {
  if (!artifact.empty()) {
    std::ofstream out(artifact);
    out << cex.items.dump(1) << "\n";
  }
  const bool ok = r.disagree == 0 && r.no_verdict == 0;
  report(6, ok, "structural vs oracle reversibility",
         std::to_string(r.checked - r.disagree - r.no_verdict) + "/" + std::to_string(r.checked) + " agree, " +
             std::to_string(r.disagree) + " disagree, " + std::to_string(r.no_verdict) + " without structural verdict" +
             (artifact.empty() ? "" : ", dumped to " + artifact));
  return ok;
}

// 7
bool ring_self_test() {
  std::size_t axiom_bad = 0, phi_bad = 0, table_bad = 0;
  std::vector<std::string> outside_table, mismatched;
  for (Theta t : kThetas) {
    const auto all = enumerate_ring(t);
    for (const auto& x : all)
      for (const auto& y : all) {
        if (phi_theta(x + y) != (phi_theta(x) + phi_theta(y)) % 4) ++phi_bad;
        if (phi_theta(x * y) != (phi_theta(x) * phi_theta(y)) % 4) ++phi_bad;
        for (const auto& z : all) {
          if ((x * y) * z != x * (y * z)) ++axiom_bad;
          if (x * (y + z) != x * y + x * z) ++axiom_bad;
          if ((x + y) + z != x + (y + z)) ++axiom_bad;
        }
      }
    for (UnitClass c : {UnitClass::Alpha, UnitClass::Beta}) {
      const auto row = published_units(t, c);
      for (const auto& u : row)
        if (classify_unit(u) != c) ++table_bad;
      for (const auto& x : all) {
        if (classify_unit(x) != c) continue;
        if (std::find(row.begin(), row.end(), x) != row.end()) continue;
        const std::string label = to_string(x) + "@" + std::string(theta_token(t)) + ":" +
                                  std::string(unit_class_name(c));
        if (x == RingElement{1, 0, t}) {
          outside_table.push_back(label);
          continue;
        }
        mismatched.push_back(label);
        ++table_bad;
      }
    }
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
    return out.empty() ? std::string("none") : out;
  };
  const bool ok = axiom_bad == 0 && phi_bad == 0 && table_bad == 0;
  report(7, ok, "ring self-test and unit table",
         std::to_string(axiom_bad) + " axiom failures, " + std::to_string(phi_bad) + " phi failures, " +
             std::to_string(table_bad) + " table mismatches [" + join(mismatched) +
             "]; identity outside the table: " + join(outside_table));
  return ok;
}

// 8
bool reciprocal_identities() {
  std::mt19937_64 rng(kSeed + 8);
  std::size_t tested = 0, bad_sum = 0, bad_product = 0;
  while (tested < kReciprocalPairs) {
    const Theta t = kThetas[rng() % 3];
    RPoly f = random_poly(rng, t, 1 + rng() % 8);
    RPoly g = random_poly(rng, t, 1 + rng() % 8);
    if (f.degree() < g.degree()) std::swap(f, g);
    if (f.is_zero() || g.is_zero() || f.coeff(0).is_zero() || g.coeff(0).is_zero()) continue;
    const RPoly sum = f + g;
    const RPoly product = f * g;
    if (sum.degree() != f.degree() || product.degree() != f.degree() + g.degree() || product.coeff(0).is_zero())
      continue;
    ++tested;
    const auto shift = static_cast<std::size_t>(f.degree() - g.degree());
    if (reciprocal(sum) != reciprocal(f) + reciprocal(g).shifted(shift)) ++bad_sum;
    if (reciprocal(product) != reciprocal(f) * reciprocal(g)) ++bad_product;
  }
  const bool ok = bad_sum == 0 && bad_product == 0;
  report(8, ok, "reciprocal identities",
         std::to_string(tested) + " pairs, " + std::to_string(bad_sum) + " sum failures, " +
             std::to_string(bad_product) + " product failures");
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string artifact;
  app.add_option("--artifact", artifact, "path for reversibility counterexamples (JSON)");
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  all &= reference_codes();
  DivisibilityTally div;
  ReversalTally rev;
  Counterexamples cex;
  all &= alpha_sweep(div, rev, cex);
  all &= beta_sweep(rev, cex);
  all &= idempotence();
  all &= divisibility(div);
  all &= reversal(rev, cex, artifact);
  all &= ring_self_test();
  all &= reciprocal_identities();
  return all ? 0 : 1;
}
