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
#include "z4nu/canonical.hpp"

#include <algorithm>

#include "z4nu/error.hpp"

namespace z4nu {

GeneratorSet::GeneratorSet(QuotientContext c, std::vector<RPoly> g) : ctx(std::move(c)) {
  for (auto& f : g) {
    if (f.theta() != ctx.theta) throw Error(Errc::ThetaMismatch, "generator from a different ring");
    RPoly r = reduce(ctx, f);
    if (!r.is_zero()) gens.push_back(std::move(r));
  }
}

Z4Vec pq_vector(const QuotientContext& ctx, const RPoly& f) {
  if (f.degree() >= static_cast<int>(ctx.n)) throw Error(Errc::InvalidDegree, "degree must be below n");
  Z4Vec v(2 * ctx.n, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    v[i] = phi_theta(f.coeffs()[i]);
    v[ctx.n + i] = f.coeffs()[i].b;
  }
  return v;
}

RPoly from_pq(const QuotientContext& ctx, const Z4Vec& v) {
  std::vector<RingElement> c(ctx.n);
  for (std::size_t i = 0; i < ctx.n; ++i) {
    const std::uint8_t q = v[ctx.n + i];
    const std::uint8_t a = ctx.theta == Theta::One ? z4(v[i] + q) : v[i];
    c[i] = RingElement{a, q, ctx.theta};
  }
  return RPoly(ctx.theta, std::move(c));
}

namespace {

std::vector<Z4Vec> ideal_span(const GeneratorSet& gs) {
  const auto& ctx = gs.ctx;
  std::vector<Z4Vec> out;
  const RingElement scalars[] = {RingElement{1, 0, ctx.theta}, RingElement{0, 1, ctx.theta}};
  for (const auto& g : gs.gens) {
    for (const auto& e : scalars) {
      Word w = to_word(ctx, e * g);
      for (std::size_t i = 0; i < ctx.n; ++i) {
        out.push_back(pq_vector(ctx, from_word(ctx, w)));
        w = constacyclic_shift(ctx, w);
      }
    }
  }
  return out;
}

std::vector<Z4Vec> block(const std::vector<Z4Vec>& vs, std::size_t which, std::size_t n) {
  std::vector<Z4Vec> out;
  for (const auto& v : vs) out.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(which * n),
                                            v.begin() + static_cast<std::ptrdiff_t>((which + 1) * n));
  return out;
}

Z4Vec times_z_power(const QuotientContext& ctx, const Z4Vec& v, std::size_t d) {
  Word w = to_word(ctx, from_pq(ctx, v));
  for (std::size_t i = 0; i < d; ++i) w = constacyclic_shift(ctx, w);
  return pq_vector(ctx, from_word(ctx, w));
}

BinPoly layer_gcd(const LayeredModule& m, std::size_t layer) {
  BinPoly g = BinPoly::xn_minus_1(m.n());
  for (const auto& b : m.layer_basis(layer)) g = bin_gcd(g, b);
  return g;
}

std::uint8_t residue_lambda(const QuotientContext& ctx) { return phi_theta(ctx.unit); }
std::uint8_t torsion_lambda(const QuotientContext& ctx) { return k_twist(ctx.unit); }

Z4Vec pq_from_digits(std::size_t n, const std::array<BinPoly, 4>& d) {
  Z4Vec v(2 * n, 0);
  for (std::size_t layer = 0; layer < 4; ++layer) {
    const std::size_t base = (layer / 2) * n;
    const unsigned weight = layer % 2 == 0 ? 1 : 2;
    for (std::size_t i = 0; i < n; ++i)
      if (d[layer].coeff(i)) v[base + i] = static_cast<std::uint8_t>((v[base + i] + weight) & 3);
  }
  return v;
}

}  // namespace

IdealModule::IdealModule(const GeneratorSet& gs) : ctx_(gs.ctx), module_(gs.ctx.n, 2, ideal_span(gs)) {}

bool IdealModule::contains(const RPoly& f) const { return module_.contains(pq_vector(ctx_, reduce(ctx_, f))); }

LayeredModule IdealModule::residue() const {
  const auto p = block(module_.filtration_spanning(0), 0, ctx_.n);
  return LayeredModule(ctx_.n, 1, p);
}

LayeredModule IdealModule::torsion() const {
  const auto q = block(module_.filtration_spanning(2), 1, ctx_.n);
  return LayeredModule(ctx_.n, 1, q);
}

const BinPoly& AlphaCanonicalForm::t(int i, int j) const { return const_cast<AlphaCanonicalForm*>(this)->t(i, j); }

BinPoly& AlphaCanonicalForm::t(int i, int j) {
  switch (10 * i + j) {
    case 11: return t11;
    case 12: return t12;
    case 13: return t13;
    case 14: return t14;
    case 22: return t22;
    case 23: return t23;
    case 24: return t24;
    case 33: return t33;
    case 34: return t34;
    case 44: return t44;
    default: throw Error(Errc::InvalidDegree, "no such canonical polynomial");
  }
}

AlphaCanonicalForm layered_form(const GeneratorSet& gs) {
  const auto& ctx = gs.ctx;
  const std::size_t n = ctx.n;
  const IdealModule ideal(gs);
  const LayeredModule& m = ideal.layers();

  std::array<BinPoly, 4> diag;
  std::array<std::optional<Z4Vec>, 4> f;
  for (std::size_t i = 0; i < 4; ++i) {
    diag[i] = layer_gcd(m, i);
    if (diag[i].degree() < static_cast<int>(n)) {
      f[i] = m.lift(i, diag[i]);
      if (!f[i]) throw Error(Errc::NotChainForm, "layer generator has no witness");
    }
  }
  for (std::size_t i = 3; i-- > 0;) {
    if (!f[i]) continue;
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (!f[j]) continue;
      const int sj = diag[j].degree();
      while (true) {
        const int d = m.digits(*f[i], j).degree();
        if (d < sj) break;
        const Z4Vec shifted = times_z_power(ctx, *f[j], static_cast<std::size_t>(d - sj));
        for (std::size_t k = 0; k < f[i]->size(); ++k) (*f[i])[k] = ((*f[i])[k] + 4 - shifted[k]) & 3;
      }
    }
  }

  AlphaCanonicalForm form{ctx, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  for (int i = 1; i <= 4; ++i) {
    form.t(i, i) = diag[static_cast<std::size_t>(i - 1)];
    if (!f[static_cast<std::size_t>(i - 1)]) continue;
    for (int j = i + 1; j <= 4; ++j) form.t(i, j) = m.digits(*f[static_cast<std::size_t>(i - 1)], static_cast<std::size_t>(j - 1));
  }
  return form;
}

AlphaCanonicalForm canonicalize_alpha(const GeneratorSet& gs) {
  if (gs.ctx.unit_class != UnitClass::Alpha)
    throw Error(Errc::WrongUnitClass, to_string(gs.ctx.unit) + " is not an alpha unit");
  return layered_form(gs);
}

TowerCodes tower_codes(const GeneratorSet& gs) {
  const auto form = canonicalize_alpha(gs);
  return {form.t11, form.t22, form.t33, form.t44};
}

std::vector<RPoly> generators(const AlphaCanonicalForm& form) {
  const std::size_t n = form.ctx.n;
  std::vector<RPoly> out;
  for (int i = 1; i <= 4; ++i) {
    if (form.t(i, i).degree() >= static_cast<int>(n)) continue;
    std::array<BinPoly, 4> d;
    for (int j = i; j <= 4; ++j) d[static_cast<std::size_t>(j - 1)] = form.t(i, j);
    out.push_back(from_pq(form.ctx, pq_from_digits(n, d)));
  }
  return out;
}

Z4CodeForm residue_code(const GeneratorSet& gs) {
  const IdealModule ideal(gs);
  const std::uint8_t lambda = residue_lambda(gs.ctx);
  if (gs.ctx.unit_class == UnitClass::Beta) return z4_negacyclic_from_module(ideal.residue(), lambda);
  return z4_cyclic_from_module(ideal.residue(), lambda);
}

Z4CodeForm kernel_code(const GeneratorSet& gs) {
  const IdealModule ideal(gs);
  const std::uint8_t lambda = torsion_lambda(gs.ctx);
  if (gs.ctx.unit_class == UnitClass::Beta && lambda == 3) return z4_negacyclic_from_module(ideal.torsion(), lambda);
  return z4_cyclic_from_module(ideal.torsion(), lambda);
}

namespace {

std::size_t chain_exponent(const LayeredModule& m, std::uint8_t lambda, const char* what) {
  try {
    return z4_negacyclic_from_module(m, lambda).t;
  } catch (const Error& e) {
    throw Error(Errc::NotChainForm, std::string(what) + " is not a power of (z^n - 1): " + e.detail());
  }
}

}  // namespace

BetaCanonicalForm canonicalize_beta(const GeneratorSet& gs) {
  const auto& ctx = gs.ctx;
  if (ctx.unit_class != UnitClass::Beta) throw Error(Errc::WrongUnitClass, to_string(ctx.unit) + " is not a beta unit");
  const std::size_t n = ctx.n;
  const IdealModule ideal(gs);
  const LayeredModule res = ideal.residue();
  const LayeredModule tor = ideal.torsion();

  BetaCanonicalForm form{ctx, 0, 0, {}};
  form.t1 = chain_exponent(res, residue_lambda(ctx), "residue code");
  form.t2 = chain_exponent(tor, torsion_lambda(ctx), "torsion code");

  const QuadPoly w1 = quad_binomial_power(ctx.n_odd_part, form.t1, n, residue_lambda(ctx));
  const LayeredModule& m = ideal.layers();
  Z4Vec x(2 * n, 0);
  if (!w1.is_zero()) {
    const auto x0 = m.lift(0, w1.mod2());
    if (!x0) throw Error(Errc::NotChainForm, "residue generator has no witness");
    const QuadPoly rest = w1 - from_vec(std::span(x0->data(), n));
    const auto x1 = m.lift(1, rest.bit(1));
    if (!x1) throw Error(Errc::NotChainForm, "residue generator has no witness");
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = ((*x0)[i] + (*x1)[i]) & 3;
  }
  const Z4Vec q = tor.normal_form(Z4Vec(x.begin() + static_cast<std::ptrdiff_t>(n), x.end()));
  form.t = from_vec(q);
  return form;
}

RPoly beta_first(const BetaCanonicalForm& form) {
  const auto& ctx = form.ctx;
  Z4Vec v(2 * ctx.n, 0);
  const QuadPoly w = quad_binomial_power(ctx.n_odd_part, form.t1, ctx.n, residue_lambda(ctx));
  for (std::size_t i = 0; i < ctx.n; ++i) {
    v[i] = w.coeff(i);
    v[ctx.n + i] = form.t.coeff(i);
  }
  return from_pq(ctx, v);
}

RPoly beta_second(const BetaCanonicalForm& form) {
  const auto& ctx = form.ctx;
  Z4Vec v(2 * ctx.n, 0);
  const QuadPoly w = quad_binomial_power(ctx.n_odd_part, form.t2, ctx.n, torsion_lambda(ctx));
  for (std::size_t i = 0; i < ctx.n; ++i) v[ctx.n + i] = w.coeff(i);
  return from_pq(ctx, v);
}

std::vector<RPoly> generators(const BetaCanonicalForm& form) {
  std::vector<RPoly> out;
  for (auto f : {beta_first(form), beta_second(form)})
    if (!f.is_zero()) out.push_back(std::move(f));
  return out;
}

bool beta_contains(const BetaCanonicalForm& form, const RPoly& f) {
  const auto& ctx = form.ctx;
  const std::size_t n = ctx.n;
  const Z4Vec v = pq_vector(ctx, reduce(ctx, f));
  const QuadPoly p = from_vec(std::span(v.data(), n));
  const auto a = chain_quotient(n, form.t1, p);
  if (!a) return false;
  const RPoly y = reduce(ctx, f) - quotient_mul(ctx, RPoly::embed(ctx.theta, *a), beta_first(form));
  const Z4Vec yv = pq_vector(ctx, y);
  if (std::any_of(yv.begin(), yv.begin() + static_cast<std::ptrdiff_t>(n), [](std::uint8_t c) { return c != 0; }))
    throw Error(Errc::NotChainForm, "residue division left a nonzero remainder");
  const QuadPoly q = from_vec(std::span(yv.data() + n, n));
  const std::uint8_t lambda = torsion_lambda(ctx);
  if (lambda == 3) return chain_quotient(n, form.t2, q).has_value();
  const QuadPoly w[] = {quad_binomial_power(ctx.n_odd_part, form.t2, n, lambda)};
  return z4_module(n, w, lambda).contains(to_vec(q, n));
}

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not_applicable";
  }
  return "?";
}

std::size_t DivisibilityReport::count(Verdict v) const {
  return static_cast<std::size_t>(std::count_if(conditions.begin(), conditions.end(), [v](const auto& c) { return c.verdict == v; }));
}

namespace {

struct Inexact {};

BinPoly exact(const BinPoly& f, const BinPoly& g) {
  if (g.is_zero()) throw Inexact{};
  auto [q, r] = bin_divmod(f, g);
  if (!r.is_zero()) throw Inexact{};
  return q;
}

template <class F>
ConditionResult evaluate(std::string id, F&& body, std::string note = {}) {
  ConditionResult out{std::move(id), Verdict::NotApplicable, std::move(note)};
  try {
    out.verdict = body() ? Verdict::Pass : Verdict::Fail;
  } catch (const Inexact&) {
    out.verdict = Verdict::NotApplicable;
    if (!out.note.empty()) out.note += "; ";
    out.note += "inner quotient is not exact";
  }
  return out;
}

}  // namespace

DivisibilityReport verify_divisibility(const AlphaCanonicalForm& fm) {
  const BinPoly xn1 = BinPoly::xn_minus_1(fm.ctx.n);
  const auto& f = fm;
  auto div = [](const BinPoly& g, const BinPoly& h) { return bin_divides(g, h); };
  auto deg_below = [](const BinPoly& a, const BinPoly& b) { return a.degree() < b.degree(); };
  DivisibilityReport rep;
  auto& c = rep.conditions;

  c.push_back(evaluate("(1)", [&] { return div(f.t22, f.t11) && div(f.t11, xn1); }));
  c.push_back(evaluate("(2)", [&] {
    return f.t12.is_zero() || (div(f.t22, f.t12 * exact(xn1, f.t11)) && deg_below(f.t12, f.t22));
  }));
  c.push_back(evaluate("(3)", [&] { return div(f.t44, f.t33) && div(f.t33, xn1); }));
  c.push_back(evaluate("(4)", [&] {
    return f.t34.is_zero() || (div(f.t44, f.t34 * exact(xn1, f.t33)) && deg_below(f.t34, f.t44));
  }));
  c.push_back(evaluate("(i)", [&] {
    return div(f.t33, exact(xn1, f.t11) * (f.t13 + exact(f.t12, f.t22) * f.t23));
  }));
  c.push_back(evaluate("(ii)", [&] { return div(f.t44, f.t23); }));
  c.push_back(evaluate("(iii)", [&] { return div(f.t33, exact(f.t11, f.t22) * f.t23); }));
  c.push_back(evaluate("(iv)", [&] {
    return div(f.t44, exact(xn1, f.t22) * (f.t24 + exact(f.t23, f.t33) * f.t34));
  }));
  c.push_back(evaluate("(v)", [&] {
    return div(f.t44, f.t13 + exact(f.t11, f.t22) * f.t24 + exact(f.t11, f.t22 * f.t33) * f.t23 * f.t34);
  }));
  c.push_back(evaluate("(vi)", [&] {
    const BinPoly inner = exact(f.t13 + exact(f.t12 * f.t23, f.t22), f.t33);
    return div(f.t44, exact(xn1, f.t11) * (f.t14 + exact(f.t12, f.t22) * f.t24 + inner * f.t34));
  }));
  switch (f.ctx.theta) {
    case Theta::Zero:
      c.push_back(evaluate("(vii)", [&] {
        return div(f.t44, f.t11) && div(f.t44, f.t22) && div(f.t44, f.t33) && div(f.t33, f.t11);
      }));
      break;
    case Theta::One:
      c.push_back(evaluate("(viii)", [&] { return div(f.t33, f.t11) && div(f.t44, f.t11) && div(f.t44, f.t22 + f.t23); }));
      c.push_back(evaluate("(ix)", [&] { return div(f.t44, f.t12 + f.t13 + exact(f.t11, f.t33) * f.t34); },
                           "g44 read as t44"));
      break;
    case Theta::Nu:
      c.push_back(evaluate("(x)", [&] { return div(f.t44, f.t13) && div(f.t44, f.t11); }));
      break;
  }
  return rep;
}

}  // namespace z4nu
