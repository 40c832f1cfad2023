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
#include <optional>
#include <span>
#include <vector>

#include "z4nu/layered.hpp"
#include "z4nu/poly.hpp"

namespace z4nu {

/// <lift(g) + 2 lift(p), 2 lift(a)> in Z4[z]/<z^n - lambda>, lambda in {1, 3}.
struct Z4CyclicForm {
  std::size_t n = 1;
  std::uint8_t lambda = 1;
  BinPoly g;
  BinPoly p;
  BinPoly a;

  friend bool operator==(const Z4CyclicForm&, const Z4CyclicForm&) = default;
};

/// <(z^n_odd - 1)^t> in Z4[z]/<z^N + 1>.
struct Z4NegacyclicForm {
  std::size_t length = 1;
  std::size_t n_odd = 1;
  unsigned s = 0;
  std::size_t t = 0;

  friend bool operator==(const Z4NegacyclicForm&, const Z4NegacyclicForm&) = default;
};

/// Shifts z^i g of every generator, as vectors of Z4^n.
std::vector<Z4Vec> z4_shift_span(std::size_t n, std::span<const QuadPoly> gens, std::uint8_t lambda);
LayeredModule z4_module(std::size_t n, std::span<const QuadPoly> gens, std::uint8_t lambda);

Z4Vec to_vec(const QuadPoly& f, std::size_t n);
QuadPoly from_vec(std::span<const std::uint8_t> v);

Z4CyclicForm z4_cyclic_canonicalize(std::size_t n, std::span<const QuadPoly> gens, std::uint8_t lambda = 1);
Z4CyclicForm z4_cyclic_from_module(const LayeredModule& m, std::uint8_t lambda);
std::vector<QuadPoly> generators(const Z4CyclicForm& form);

/// Throws NotChainForm when no exponent reproduces the code.
Z4NegacyclicForm z4_negacyclic_identify(std::size_t length, std::span<const QuadPoly> gens);
Z4NegacyclicForm z4_negacyclic_from_module(const LayeredModule& m, std::uint8_t lambda);
QuadPoly generator(const Z4NegacyclicForm& form);
/// log2 of |<(z^n_odd - 1)^t>|, by direct echelonization.
std::size_t chain_log2_order(std::size_t length, std::size_t t, std::uint8_t lambda = 3);

/// a with a (z^n_odd - 1)^t = p in Z4[z]/<z^N + 1>, or nothing when p is outside the ideal.
std::optional<QuadPoly> chain_quotient(std::size_t length, std::size_t t, const QuadPoly& p);

/// Inverse of f modulo m over Z2; nothing when gcd(f, m) != 1.
std::optional<BinPoly> bin_inverse_mod(const BinPoly& f, const BinPoly& m);

}  // namespace z4nu
