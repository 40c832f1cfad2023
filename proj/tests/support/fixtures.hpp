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

#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "z4nu/canonical.hpp"
#include "z4nu/poly_text.hpp"

namespace z4nu::testing {

inline GeneratorSet gens(const std::string& theta, const std::string& unit, std::size_t n,
                         std::initializer_list<const char*> polys) {
  const Theta t = parse_theta(theta);
  const auto ctx = QuotientContext::make(t, parse_element(unit, t), n);
  std::vector<RPoly> g;
  for (const char* p : polys) g.push_back(parse_rpoly(p, t));
  return GeneratorSet(ctx, std::move(g));
}

/// Every codeword of the Z4 code generated by `polys` in Z4[z]/<z^n - lambda>, as base-4 integers.
inline std::set<std::uint32_t> z4_code(std::size_t n, std::uint8_t lambda, const std::vector<QuadPoly>& polys) {
  auto encode = [n](const std::vector<std::uint8_t>& w) {
    std::uint32_t x = 0;
    for (std::size_t i = n; i-- > 0;) x = x * 4 + w[i];
    return x;
  };
  std::vector<std::vector<std::uint8_t>> seeds;
  for (const auto& p : polys) {
    std::vector<std::uint8_t> w(n, 0);
    for (int d = 0; d <= p.degree(); ++d) {
      const auto i = static_cast<std::size_t>(d);
      const int wrap = (i / n) % 2 ? lambda : 1;
      w[i % n] = static_cast<std::uint8_t>((w[i % n] + p.coeff(i) * wrap) % 4);
    }
    for (std::size_t r = 0; r < n; ++r) {
      seeds.push_back(w);
      std::vector<std::uint8_t> s(n);
      s[0] = static_cast<std::uint8_t>(w[n - 1] * lambda % 4);
      for (std::size_t i = 1; i < n; ++i) s[i] = w[i - 1];
      w = s;
    }
  }
  std::set<std::uint32_t> code{0};
  for (const auto& g : seeds) {
    std::vector<std::uint32_t> cur(code.begin(), code.end());
    for (auto c : cur)
      for (int m = 1; m < 4; ++m) {
        std::vector<std::uint8_t> sum(n);
        std::uint32_t x = c;
        for (std::size_t i = 0; i < n; ++i, x /= 4) sum[i] = static_cast<std::uint8_t>((x % 4 + m * g[i]) % 4);
        code.insert(encode(sum));
      }
  }
  return code;
}

}  // namespace z4nu::testing
