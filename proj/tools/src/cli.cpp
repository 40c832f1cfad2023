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
#include "z4nu_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "z4nu/analysis.hpp"
#include "z4nu/error.hpp"
#include "z4nu/poly_text.hpp"
#include "z4nu/sweep.hpp"

namespace z4nu::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxListedMismatches = 50;

struct Parsed {
  QuotientContext ctx;
  GeneratorSet gs;
};

QuotientContext parse_context(const JobSpec& job) {
  const Theta t = parse_theta(job.theta);
  const RingElement u = parse_element(job.unit, t);
  return QuotientContext::make(t, u, job.length);
}

Parsed parse_code(const JobSpec& job) {
  QuotientContext ctx = parse_context(job);
  std::vector<RPoly> gens;
  for (const auto& text : job.generators) gens.push_back(parse_rpoly(text, ctx.theta));
  return {ctx, GeneratorSet(ctx, std::move(gens))};
}

Json header(const JobSpec& job, const QuotientContext& ctx) {
  Json j;
  j["command"] = job.command;
  j["theta"] = std::string(theta_token(ctx.theta));
  j["unit"] = to_string(ctx.unit);
  j["length"] = ctx.n;
  j["class"] = std::string(unit_class_name(ctx.unit_class));
  return j;
}

Json poly_list(const std::vector<RPoly>& polys) {
  Json arr = Json::array();
  for (const auto& p : polys) arr.push_back(to_string(p));
  return arr;
}

Json form_json(const AlphaCanonicalForm& f) {
  Json j;
  for (int i = 1; i <= 4; ++i)
    for (int k = i; k <= 4; ++k) j["t" + std::to_string(i) + std::to_string(k)] = to_string(f.t(i, k));
  return j;
}

Json form_json(const BetaCanonicalForm& f) {
  Json j;
  j["t1"] = f.t1;
  j["t2"] = f.t2;
  j["t"] = to_string(f.t);
  return j;
}

Json conditions_json(const std::vector<ConditionResult>& conds) {
  Json j = Json::object();
  for (const auto& c : conds) j[c.id] = std::string(verdict_name(c.verdict));
  return j;
}

Json condition_notes(const std::vector<ConditionResult>& conds) {
  Json j = Json::object();
  for (const auto& c : conds)
    if (!c.note.empty()) j[c.id] = c.note;
  return j;
}

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json cmd_canonicalize(const JobSpec& job, int& code) {
  const auto [ctx, gs] = parse_code(job);
  Json j = header(job, ctx);
  try {
    if (ctx.unit_class == UnitClass::Alpha) {
      const auto form = canonicalize_alpha(gs);
      j["form"] = form_json(form);
      j["generators"] = poly_list(generators(form));
    } else {
      const auto form = canonicalize_beta(gs);
      j["form"] = form_json(form);
      j["generators"] = poly_list(generators(form));
    }
  } catch (const Error& e) {
    if (e.code() != Errc::NotChainForm) throw;
    j["form"] = nullptr;
    j["structure_error"] = e.what();
    code = kNoCanonicalForm;
  }
  return j;
}

Json cmd_analyze(const JobSpec& job) {
  const auto [ctx, gs] = parse_code(job);
  const CodeReport rep = analyze(gs);
  Json j = header(job, ctx);
  j["rank"] = rep.formula ? Json(rep.formula->rank) : Json(nullptr);
  j["log2_cardinality"] = rep.formula ? Json(rep.formula->log2_cardinality) : Json(nullptr);
  j["exact_log2_cardinality"] = rep.exact_log2_cardinality;
  j["reversible"] = rep.reversible;
  j["witness_index"] = opt(rep.witness_index);
  j["structural_reversible"] = opt(rep.structural_reversible);
  j["conditions"] = conditions_json(rep.conditions);
  j["condition_notes"] = condition_notes(rep.conditions);
  j["spanning_set_size"] = opt(rep.spanning_set_size);
  j["torsion_reversible"] = rep.torsion_reversible;
  j["structure_error"] = opt(rep.structure_error);
  return j;
}

Json reversible_json(const GeneratorSet& gs) {
  Json j;
  const auto m = reversible_by_membership(gs);
  j["reversible"] = m.reversible;
  if (m.witness_index) {
    Json w;
    w["generator_index"] = *m.witness_index;
    w["generator"] = to_string(gs.gens[*m.witness_index]);
    w["reciprocal"] = m.witness ? Json(to_string(*m.witness)) : Json(nullptr);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  if (gs.ctx.unit_class == UnitClass::Alpha) {
    const auto rev = reversible_alpha_structural(canonicalize_alpha(gs));
    j["structural_reversible"] = rev.verdict;
    j["conditions"] = conditions_json(rev.conditions);
    j["condition_notes"] = condition_notes(rev.conditions);
  } else {
    try {
      j["structural_reversible"] = reversible_beta_structural(canonicalize_beta(gs));
    } catch (const Error& e) {
      if (e.code() != Errc::NotChainForm) throw;
      j["structural_reversible"] = nullptr;
      j["structure_error"] = e.what();
    }
    j["conditions"] = Json::object();
  }
  return j;
}

Json cmd_reversible(const JobSpec& job) {
  const auto [ctx, gs] = parse_code(job);
  Json j = header(job, ctx);
  j.update(reversible_json(gs));
  return j;
}

Json cmd_enumerate(const JobSpec& job) {
  const auto [ctx, gs] = parse_code(job);
  const CodeSet cs = enumerate_ideal(gs, job.max_size);
  Json j = header(job, ctx);
  j["size"] = cs.size();
  j["log2_size"] = cs.log2_size();
  j["rank"] = oracle_rank(cs);
  j["reversible"] = oracle_reversible(cs);
  if (job.dump_elements) {
    const WordOps ops(ctx);
    Json arr = Json::array();
    for (Packed w : cs.elements()) arr.push_back(to_string(ops.unpack(w)));
    j["elements"] = std::move(arr);
  }
  return j;
}

Json cmd_verify(const JobSpec& job) {
  const QuotientContext ctx = parse_context(job);
  if (4 * ctx.n > job.max_size)
    throw Error(Errc::SizeLimitExceeded, "verify needs 16^" + std::to_string(ctx.n) + " words; raise --max-size");
  const SweepResult sweep = sweep_context(ctx);
  const WordOps ops(ctx);

  std::size_t errors = 0, card = 0, rank = 0, rev = 0, spanning = 0;
  std::size_t div_pass = 0, div_fail = 0, div_na = 0;
  Json listed = Json::array();
  for (const auto& r : sweep.records) {
    Json kinds = Json::array();
    if (r.structure_error) {
      ++errors;
      kinds.push_back("structure_error");
    } else {
      if (r.formula->log2_cardinality != static_cast<long>(r.oracle_log2)) ++card, kinds.push_back("cardinality");
      if (r.formula->rank != static_cast<long>(r.oracle_rank)) ++rank, kinds.push_back("rank");
      if (*r.structural_reversible != r.oracle_reversible) ++rev, kinds.push_back("reversibility");
      if (r.spanning_size && !r.spanning_certified) ++spanning, kinds.push_back("spanning");
    }
    if (r.divisibility) {
      div_pass += r.divisibility->count(Verdict::Pass);
      div_fail += r.divisibility->count(Verdict::Fail);
      div_na += r.divisibility->count(Verdict::NotApplicable);
    }
    if (kinds.empty() || listed.size() >= kMaxListedMismatches) continue;
    Json e;
    Json gens = Json::array();
    for (Packed w : r.basis) gens.push_back(to_string(ops.unpack(w)));
    e["generators"] = std::move(gens);
    e["kinds"] = std::move(kinds);
    e["oracle_log2"] = r.oracle_log2;
    e["oracle_rank"] = r.oracle_rank;
    e["oracle_reversible"] = r.oracle_reversible;
    e["formula_log2"] = r.formula ? Json(r.formula->log2_cardinality) : Json(nullptr);
    e["formula_rank"] = r.formula ? Json(r.formula->rank) : Json(nullptr);
    e["structural_reversible"] = opt(r.structural_reversible);
    e["structure_error"] = opt(r.structure_error);
    listed.push_back(std::move(e));
  }
  Json j = header(job, ctx);
  j["ideals"] = sweep.records.size();
  j["structure_errors"] = errors;
  j["cardinality_mismatches"] = card;
  j["rank_mismatches"] = rank;
  j["reversibility_mismatches"] = rev;
  j["spanning_uncertified"] = spanning;
  if (ctx.unit_class == UnitClass::Alpha)
    j["divisibility"] = Json{{"pass", div_pass}, {"fail", div_fail}, {"not_applicable", div_na}};
  j["mismatches"] = std::move(listed);
  return j;
}

Json run_example(const ReferenceExample& ex, unsigned max_size, bool& matched) {
  JobSpec job{ex.theta, ex.unit, ex.length, ex.generators, "reversible"};
  const auto [ctx, gs] = parse_code(job);
  Json j;
  j["name"] = ex.name;
  j["theta"] = ex.theta;
  j["unit"] = ex.unit;
  j["length"] = ex.length;
  j["generators"] = ex.generators;
  j["expected_reversible"] = ex.expected_reversible;
  const Json rev = reversible_json(gs);
  j["reversible"] = rev["reversible"];
  j["structural_reversible"] = rev["structural_reversible"];
  j["conditions"] = rev["conditions"];
  if (4 * ctx.n <= max_size) {
    j["oracle_reversible"] = oracle_reversible(enumerate_ideal(gs, max_size));
  } else {
    j["oracle_reversible"] = nullptr;
  }
  matched = rev["reversible"].get<bool>() == ex.expected_reversible;
  if (!ex.expected_failing_condition.empty()) {
    const bool failing = rev["conditions"].value(ex.expected_failing_condition, "") == "fail";
    j["expected_failing_condition"] = ex.expected_failing_condition;
    matched = matched && failing;
  }
  j["match"] = matched;
  return j;
}

Json cmd_examples(const JobSpec& job, int& code) {
  Json j;
  j["command"] = job.command;
  Json arr = Json::array();
  std::size_t mismatches = 0;
  for (const auto& ex : reference_examples()) {
    bool matched = false;
    arr.push_back(run_example(ex, job.max_size, matched));
    if (!matched) ++mismatches;
  }
  j["examples"] = std::move(arr);
  {
    const auto& alt = example3_literal_reading();
    const JobSpec a{alt.theta, alt.unit, alt.length, alt.generators, "enumerate"};
    const JobSpec b{reference_examples()[2].theta, reference_examples()[2].unit, reference_examples()[2].length,
                    reference_examples()[2].generators, "enumerate"};
    const auto pa = parse_code(a);
    const auto pb = parse_code(b);
    const CodeSet ca = enumerate_ideal(pa.gs, job.max_size);
    const CodeSet cb = enumerate_ideal(pb.gs, job.max_size);
    Json cmp;
    cmp["literal_generators"] = alt.generators;
    cmp["literal_size"] = ca.size();
    cmp["literal_reversible"] = oracle_reversible(ca);
    cmp["encoded_size"] = cb.size();
    cmp["same_code"] = oracle_equal(ca, cb);
    j["example_3_readings"] = std::move(cmp);
  }
  j["mismatches"] = mismatches;
  if (mismatches) code = kExampleMismatch;
  return j;
}

void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.is_null() ? "n/a" : v.dump(); };
  auto flat = [](const Json& v) { return std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); }); };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render_text(v, out, indent + 2);
    } else if (v.is_array() && flat(v)) {
      out << pad << it.key() << ": ";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
      out << "\n";
    } else if (v.is_array()) {
      out << pad << it.key() << ":\n";
      for (const auto& e : v) {
        out << pad << "  -\n";
        render_text(e, out, indent + 4);
      }
    } else {
      out << pad << it.key() << ": " << scalar(v) << "\n";
    }
  }
}

}  // namespace

const std::vector<ReferenceExample>& reference_examples() {
  static const std::vector<ReferenceExample> examples = {
      {"example-1", "0", "1+v", 3, {"v*z+v"}, true, ""},
      {"example-2", "0", "1+2v", 8,
       {"z^4+1+2+v*z+v", "2*z^2+2+v*z-v", "v*z^4+v+2v*z-2v", "2v*z^2+2v"}, false, "(iv)"},
      {"example-3", "0", "3+2v", 4, {"z-1+v", "v*z-v"}, true, ""},
      {"example-4", "1", "1+2v", 3, {"z^6-2*z^3+1+(1+v)*z^2+(2+2v)*z", "z^3-1"}, false, ""},
  };
  return examples;
}

const ReferenceExample& example3_literal_reading() {
  static const ReferenceExample ex{"example-3-literal", "0", "3+2v", 4, {"z-1+v", "z-1"}, true, ""};
  return ex;
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  int code = kOk;
  try {
    Json j;
    if (job.command == "canonicalize") j = cmd_canonicalize(job, code);
    else if (job.command == "analyze") j = cmd_analyze(job);
    else if (job.command == "reversible") j = cmd_reversible(job);
    else if (job.command == "enumerate") j = cmd_enumerate(job);
    else if (job.command == "verify") j = cmd_verify(job);
    else if (job.command == "examples") j = cmd_examples(job, code);
    else throw Error(Errc::ParseError, "unknown command '" + job.command + "'");
    if (job.pretty) render_text(j, out, 0);
    else out << j.dump(2) << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::NotAUnit: return kNotAUnit;
      case Errc::SizeLimitExceeded: return kSizeLimit;
      default: return kParseError;
    }
  }
  return code;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constacyclic codes over Z4 + vZ4: canonical forms, rank, cardinality, reversibility"};
  JobSpec job;
  app.add_option("command", job.command, "canonicalize | analyze | reversible | enumerate | verify | examples")
      ->required()
      ->check(CLI::IsMember({"canonicalize", "analyze", "reversible", "enumerate", "verify", "examples"}));
  app.add_option("--theta", job.theta, "square of v: 0, 1 or v");
  app.add_option("--unit", job.unit, "shift constant, e.g. 1+v");
  app.add_option("--length", job.length, "code length");
  app.add_option("--gens", job.generators, "generator polynomial (repeatable or comma-separated)")->delimiter(',')->allow_extra_args(false);
  app.add_flag("--pretty", job.pretty, "plain text instead of JSON");
  app.add_flag("--dump-elements", job.dump_elements, "list every codeword (enumerate)");
  app.add_option("--max-size", job.max_size, "oracle bound as log2 of the word space")->check(CLI::Range(1u, 64u));
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  const bool needs_code = job.command != "examples";
  if (needs_code && (job.theta.empty() || job.unit.empty() || job.length == 0)) {
    err << "error: --theta, --unit and --length are required for " << job.command << "\n";
    return kParseError;
  }
  return run(job, out, err);
}

}  // namespace z4nu::cli
