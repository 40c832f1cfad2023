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
#include "z4nu/z4codes.hpp"

#include <bit>

#include "z4nu/error.hpp"

namespace z4nu {

Z4Vec to_vec(const QuadPoly& f, std::size_t n) {
  if (f.degree() >= static_cast<int>(n)) throw Error(Errc::InvalidDegree, "degree must be below the length");
  Z4Vec v(n, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) v[i] = f.coeffs()[i];
  return v;
}

QuadPoly from_vec(std::span<const std::uint8_t> v) { return QuadPoly(std::vector<std::uint8_t>(v.begin(), v.end())); }

std::vector<Z4Vec> z4_shift_span(std::size_t n, std::span<const QuadPoly> gens, std::uint8_t lambda) {
  std::vector<Z4Vec> out;
  for (const auto& g0 : gens) {
    Z4Vec v = to_vec(quad_reduce(g0, n, lambda), n);
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(v);
      const std::uint8_t top = v[n - 1];
      for (std::size_t j = n - 1; j > 0; --j) v[j] = v[j - 1];
      v[0] = (lambda * top) & 3;
    }
  }
  return out;
}

LayeredModule z4_module(std::size_t n, std::span<const QuadPoly> gens, std::uint8_t lambda) {
  const auto span = z4_shift_span(n, gens, lambda);
  return LayeredModule(n, 1, span);
}

namespace {

BinPoly layer_generator(const LayeredModule& m, std::size_t layer) {
  BinPoly g = BinPoly::xn_minus_1(m.n());
  for (const auto& b : m.layer_basis(layer)) g = bin_gcd(g, b);
  return g;
}

}  // namespace

Z4CyclicForm z4_cyclic_from_module(const LayeredModule& m, std::uint8_t lambda) {
  const std::size_t n = m.n();
  Z4CyclicForm form;
  form.n = n;
  form.lambda = lambda;
  form.g = layer_generator(m, 0);
  form.a = layer_generator(m, 1);
  if (form.g.degree() < static_cast<int>(n)) {
    const auto x = m.lift(0, form.g);
    if (!x) throw Error(Errc::NotChainForm, "residue generator has no witness");
    const QuadPoly diff = from_vec(*x) - QuadPoly::lift(form.g);
    form.p = bin_divmod(diff.bit(1), form.a).second;
  }
  return form;
}

Z4CyclicForm z4_cyclic_canonicalize(std::size_t n, std::span<const QuadPoly> gens, std::uint8_t lambda) {
  return z4_cyclic_from_module(z4_module(n, gens, lambda), lambda);
}

std::vector<QuadPoly> generators(const Z4CyclicForm& form) {
  std::vector<QuadPoly> out;
  if (form.g.degree() < static_cast<int>(form.n)) out.push_back(QuadPoly::lift(form.g) + 2 * QuadPoly::lift(form.p));
  if (form.a.degree() < static_cast<int>(form.n)) out.push_back(2 * QuadPoly::lift(form.a));
  return out;
}

std::size_t chain_log2_order(std::size_t length, std::size_t t, std::uint8_t lambda) {
  const auto s = static_cast<unsigned>(std::countr_zero(length));
  const QuadPoly w = quad_binomial_power(length >> s, t, length, lambda);
  const QuadPoly one[] = {w};
  return z4_module(length, one, lambda).log2_order();
}

Z4NegacyclicForm z4_negacyclic_from_module(const LayeredModule& m, std::uint8_t lambda) {
  const std::size_t length = m.n();
  Z4NegacyclicForm form;
  form.length = length;
  form.s = static_cast<unsigned>(std::countr_zero(length));
  form.n_odd = length >> form.s;
  const std::size_t top = std::size_t{2} << form.s;
  for (std::size_t t = 0; t <= top; ++t) {
    const QuadPoly w = quad_binomial_power(form.n_odd, t, length, lambda);
    if (!m.contains(to_vec(w, length))) continue;
    if (chain_log2_order(length, t, lambda) != m.log2_order()) continue;
    form.t = t;
    return form;
  }
  throw Error(Errc::NotChainForm, "code of length " + std::to_string(length) +
                                      " is not generated by a power of (z^" + std::to_string(form.n_odd) + " - 1)");
}

Z4NegacyclicForm z4_negacyclic_identify(std::size_t length, std::span<const QuadPoly> gens) {
  return z4_negacyclic_from_module(z4_module(length, gens, 3), 3);
}

QuadPoly generator(const Z4NegacyclicForm& form) { return quad_binomial_power(form.n_odd, form.t, form.length, 3); }

std::optional<BinPoly> bin_inverse_mod(const BinPoly& f, const BinPoly& m) {
  BinPoly r0 = m;
  BinPoly r1 = bin_divmod(f, m).second;
  BinPoly s0;
  BinPoly s1{1};
  while (!r1.is_zero()) {
    auto [q, r] = bin_divmod(r0, r1);
    BinPoly s2 = s0 + q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0 != BinPoly{1}) return std::nullopt;
  return bin_divmod(s0, m).second;
}

std::optional<QuadPoly> chain_quotient(std::size_t length, std::size_t t, const QuadPoly& p) {
  const auto s = static_cast<unsigned>(std::countr_zero(length));
  const std::size_t n_odd = length >> s;
  const std::size_t half = std::size_t{1} << s;
  const BinPoly modulus = BinPoly::xn_minus_1(length);
  if (t == 0) return p;
  if (t > 2 * half) throw Error(Errc::InvalidExponents, "exponent exceeds 2^(s+1)");

  const QuadPoly big = quad_binomial_power(n_odd, half, length, 3);
  if (!big.mod2().is_zero()) throw Error(Errc::NotChainForm, "(z^n - 1)^(2^s) is not divisible by 2");
  const auto v_inv = bin_inverse_mod(big.bit(1), modulus);
  if (!v_inv) throw Error(Errc::NotChainForm, "(z^n - 1)^(2^s) / 2 is not a unit");

  const BinPoly base = BinPoly::xn_minus_1(n_odd);
  auto bin_power = [&](std::size_t e) {
    BinPoly acc{1};
    for (std::size_t i = 0; i < e; ++i) acc = acc * base;
    return acc;
  };

  if (t <= half) {
    auto [q, rem] = bin_divmod(p.mod2(), bin_power(t));
    if (!rem.is_zero()) return std::nullopt;
    const QuadPoly w = quad_binomial_power(n_odd, t, length, 3);
    const QuadPoly r = p - quad_mulmod(QuadPoly::lift(q), w, length, 3);
    const BinPoly rp = bin_divmod(*v_inv * r.bit(1), modulus).second;
    const QuadPoly extra = quad_mulmod(quad_binomial_power(n_odd, half - t, length, 3), QuadPoly::lift(rp), length, 3);
    return QuadPoly::lift(q) + extra;
  }
  if (!p.mod2().is_zero()) return std::nullopt;
  auto [q, rem] = bin_divmod(p.bit(1), bin_power(t - half));
  if (!rem.is_zero()) return std::nullopt;
  return QuadPoly::lift(bin_divmod(*v_inv * q, modulus).second);
}

}  // namespace z4nu
