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

#include "z4nu/poly.hpp"

namespace z4nu {

using Z4Vec = std::vector<std::uint8_t>;

/// Additive subgroup of (Z4^n)^blocks, filtered by 2-adic digit layers.
///
/// Layer 2j reads bit 0 of block j, layer 2j+1 reads bit 1 of block j. Filtration
/// level l holds the vectors whose digits below l all vanish; each layer's digit
/// space is kept as a binary echelon basis keyed by leading degree.
class LayeredModule {
 public:
  LayeredModule(std::size_t n, std::size_t blocks, std::span<const Z4Vec> spanning);

  std::size_t n() const noexcept { return n_; }
  std::size_t blocks() const noexcept { return blocks_; }
  std::size_t layer_count() const noexcept { return 2 * blocks_; }

  std::size_t layer_dimension(std::size_t layer) const;
  std::size_t log2_order() const noexcept;

  /// Digits of v at a layer, as a binary polynomial.
  BinPoly digits(const Z4Vec& v, std::size_t layer) const;
  std::vector<BinPoly> layer_basis(std::size_t layer) const;

  /// Reduce v against every layer's pivots; zero iff v is in the module.
  Z4Vec normal_form(Z4Vec v) const;
  bool contains(const Z4Vec& v) const;

  /// Element at filtration level `layer` whose digits at that layer equal `target`.
  std::optional<Z4Vec> lift(std::size_t layer, const BinPoly& target) const;

  /// Additive spanning set of filtration level `layer`.
  const std::vector<Z4Vec>& filtration_spanning(std::size_t layer) const;

 private:
  struct Entry {
    BinPoly digits;
    Z4Vec element;
  };

  void subtract(Z4Vec& v, const Z4Vec& w) const;

  std::size_t n_;
  std::size_t blocks_;
  std::vector<std::vector<std::optional<Entry>>> pivots_;
  std::vector<std::vector<Z4Vec>> levels_;
};

}  // namespace z4nu
