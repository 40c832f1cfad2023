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
#include "z4nu/layered.hpp"

#include <algorithm>

#include "z4nu/error.hpp"

namespace z4nu {

LayeredModule::LayeredModule(std::size_t n, std::size_t blocks, std::span<const Z4Vec> spanning)
    : n_(n), blocks_(blocks), pivots_(2 * blocks, std::vector<std::optional<Entry>>(n)) {
  std::vector<Z4Vec> current;
  for (const auto& v : spanning) {
    if (v.size() != n * blocks) throw Error(Errc::InvalidLength, "spanning vector has the wrong width");
    if (std::any_of(v.begin(), v.end(), [](std::uint8_t c) { return c != 0; })) current.push_back(v);
  }
  for (std::size_t layer = 0; layer < 2 * blocks; ++layer) {
    levels_.push_back(current);
    auto& piv = pivots_[layer];
    std::vector<Z4Vec> next;
    for (auto v : current) {
      BinPoly d = digits(v, layer);
      while (!d.is_zero() && piv[static_cast<std::size_t>(d.degree())]) {
        const auto& e = *piv[static_cast<std::size_t>(d.degree())];
        d += e.digits;
        subtract(v, e.element);
      }
      if (d.is_zero()) {
        if (std::any_of(v.begin(), v.end(), [](std::uint8_t c) { return c != 0; })) next.push_back(std::move(v));
      } else {
        piv[static_cast<std::size_t>(d.degree())] = Entry{d, v};
      }
    }
    for (const auto& e : piv) {
      if (!e) continue;
      Z4Vec twice = e->element;
      bool nonzero = false;
      for (auto& c : twice) {
        c = (2 * c) & 3;
        nonzero = nonzero || c != 0;
      }
      if (nonzero) next.push_back(std::move(twice));
    }
    current = std::move(next);
  }
  levels_.push_back(current);
}

std::size_t LayeredModule::layer_dimension(std::size_t layer) const {
  return static_cast<std::size_t>(
      std::count_if(pivots_.at(layer).begin(), pivots_.at(layer).end(), [](const auto& e) { return e.has_value(); }));
}

std::size_t LayeredModule::log2_order() const noexcept {
  std::size_t total = 0;
  for (std::size_t l = 0; l < pivots_.size(); ++l) total += layer_dimension(l);
  return total;
}

BinPoly LayeredModule::digits(const Z4Vec& v, std::size_t layer) const {
  const std::size_t base = (layer / 2) * n_;
  const unsigned bit = layer % 2;
  BinPoly out;
  for (std::size_t i = 0; i < n_; ++i)
    if ((v[base + i] >> bit) & 1u) out.set(i, true);
  return out;
}

std::vector<BinPoly> LayeredModule::layer_basis(std::size_t layer) const {
  std::vector<BinPoly> out;
  for (const auto& e : pivots_.at(layer))
    if (e) out.push_back(e->digits);
  return out;
}

void LayeredModule::subtract(Z4Vec& v, const Z4Vec& w) const {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + 4 - w[i]) & 3;
}

Z4Vec LayeredModule::normal_form(Z4Vec v) const {
  if (v.size() != n_ * blocks_) throw Error(Errc::InvalidLength, "vector has the wrong width");
  for (std::size_t layer = 0; layer < pivots_.size(); ++layer) {
    const std::size_t base = (layer / 2) * n_;
    const unsigned bit = layer % 2;
    for (std::size_t d = n_; d-- > 0;) {
      if (((v[base + d] >> bit) & 1u) && pivots_[layer][d]) subtract(v, pivots_[layer][d]->element);
    }
  }
  return v;
}

bool LayeredModule::contains(const Z4Vec& v) const {
  const Z4Vec r = normal_form(v);
  return std::all_of(r.begin(), r.end(), [](std::uint8_t c) { return c == 0; });
}

std::optional<Z4Vec> LayeredModule::lift(std::size_t layer, const BinPoly& target) const {
  Z4Vec acc(n_ * blocks_, 0);
  BinPoly d = target;
  const auto& piv = pivots_.at(layer);
  while (!d.is_zero()) {
    const auto deg = static_cast<std::size_t>(d.degree());
    if (deg >= n_ || !piv[deg]) return std::nullopt;
    d += piv[deg]->digits;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = (acc[i] + piv[deg]->element[i]) & 3;
  }
  return acc;
}

const std::vector<Z4Vec>& LayeredModule::filtration_spanning(std::size_t layer) const { return levels_.at(layer); }

}  // namespace z4nu
