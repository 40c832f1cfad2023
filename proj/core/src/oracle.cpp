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
#include "z4nu/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "z4nu/error.hpp"

namespace z4nu {

namespace {

constexpr Packed kLow = 0x5555555555555555ull;

unsigned nibble(const RingElement& e) { return e.a | (e.b << 2u); }

RingElement from_nibble(unsigned x, Theta t) {
  return RingElement{static_cast<std::uint8_t>(x & 3u), static_cast<std::uint8_t>((x >> 2u) & 3u), t};
}

void check_size(const QuotientContext& ctx, unsigned max_log2_words) {
  if (ctx.n > 16) throw Error(Errc::SizeLimitExceeded, "packed words hold at most 16 coefficients");
  if (4 * ctx.n > max_log2_words)
    throw Error(Errc::SizeLimitExceeded, "16^" + std::to_string(ctx.n) + " words exceed the oracle bound 2^" +
                                             std::to_string(max_log2_words));
}

class SetBuilder {
 public:
  explicit SetBuilder(std::size_t n) : dense_(4 * n <= 26) {
    if (dense_) bits_.assign(((std::size_t{1} << (4 * n)) + 63) / 64, 0);
    insert(0);
  }

  bool has(Packed w) const {
    if (dense_) return (bits_[w >> 6] >> (w & 63)) & 1u;
    return hashed_.count(w) != 0;
  }

  void insert(Packed w) {
    if (dense_) {
      auto& slot = bits_[w >> 6];
      const Packed bit = Packed{1} << (w & 63);
      if (slot & bit) return;
      slot |= bit;
    } else if (!hashed_.insert(w).second) {
      return;
    }
    elements_.push_back(w);
  }

  std::vector<Packed>& elements() { return elements_; }

  /// Elements in increasing order.
  std::vector<Packed> sorted() && {
    if (!dense_) {
      std::sort(elements_.begin(), elements_.end());
      return std::move(elements_);
    }
    std::vector<Packed> out;
    out.reserve(elements_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i)
      for (Packed word = bits_[i]; word; word &= word - 1) out.push_back((i << 6) | std::countr_zero(word));
    return out;
  }

 private:
  bool dense_;
  std::vector<Packed> bits_;
  std::unordered_set<Packed> hashed_;
  std::vector<Packed> elements_;
};

/// Smallest submodule containing `base` and `queue`; `base` must already be closed.
CodeSet closure(const WordOps& ops, std::vector<Packed> queue, bool with_shift, const CodeSet* base = nullptr) {
  const Theta t = ops.ctx().theta;
  const RingElement nu{0, 1, t};
  const RingElement two{2, 0, t};
  const RingElement three{3, 0, t};
  SetBuilder set(ops.n());
  std::vector<Packed> basis;
  if (base) {
    for (Packed w : base->elements()) set.insert(w);
    basis = base->basis();
  }
  while (!queue.empty()) {
    const Packed g = queue.back();
    queue.pop_back();
    if (set.has(g)) continue;
    auto& el = set.elements();
    const std::size_t m = el.size();
    for (std::size_t i = 0; i < m; ++i) set.insert(WordOps::add(el[i], g));
    const Packed g2 = ops.scale(two, g);
    const Packed g3 = ops.scale(three, g);
    if (!set.has(g2)) {
      for (std::size_t i = 0; i < m; ++i) {
        set.insert(WordOps::add(el[i], g2));
        set.insert(WordOps::add(el[i], g3));
      }
    }
    basis.push_back(g);
    if (with_shift) queue.push_back(ops.shift(g));
    queue.push_back(ops.scale(nu, g));
    queue.push_back(g2);
    queue.push_back(g3);
  }
  return CodeSet(ops.ctx(), std::move(set).sorted(), std::move(basis));
}

}  // namespace

WordOps::WordOps(const QuotientContext& ctx)
    : ctx_(ctx), mask_(ctx.n >= 16 ? ~Packed{0} : (Packed{1} << (4 * ctx.n)) - 1) {
  if (ctx.n > 16) throw Error(Errc::SizeLimitExceeded, "packed words hold at most 16 coefficients");
  for (unsigned x = 0; x < 16; ++x)
    for (unsigned y = 0; y < 16; ++y) {
      mul_[x][y] = static_cast<std::uint8_t>(nibble(from_nibble(x, ctx.theta) * from_nibble(y, ctx.theta)));
      add_[x][y] = static_cast<std::uint8_t>(nibble(from_nibble(x, ctx.theta) + from_nibble(y, ctx.theta)));
    }
}

Packed WordOps::pack(const RPoly& f) const {
  const RPoly r = reduce(ctx_, f);
  Packed w = 0;
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) w |= Packed{nibble(r.coeffs()[i])} << (4 * i);
  return w;
}

RPoly WordOps::unpack(Packed w) const {
  std::vector<RingElement> c(ctx_.n);
  for (std::size_t i = 0; i < ctx_.n; ++i) c[i] = from_nibble(static_cast<unsigned>((w >> (4 * i)) & 15u), ctx_.theta);
  return RPoly(ctx_.theta, std::move(c));
}

Packed WordOps::add(Packed x, Packed y) noexcept { return x ^ y ^ ((x & y & kLow) << 1); }

Packed WordOps::scale(const RingElement& c, Packed w) const noexcept {
  const auto& row = mul_[nibble(c)];
  Packed out = 0;
  for (std::size_t i = 0; i < ctx_.n; ++i) out |= Packed{row[(w >> (4 * i)) & 15u]} << (4 * i);
  return out;
}

Packed WordOps::shift(Packed w) const noexcept {
  const unsigned top = static_cast<unsigned>((w >> (4 * (ctx_.n - 1))) & 15u);
  return ((w << 4) & mask_) | mul_[nibble(ctx_.unit)][top];
}

Packed WordOps::mul(Packed x, Packed y) const noexcept {
  std::uint8_t acc[32] = {};
  const std::size_t n = ctx_.n;
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned xi = (x >> (4 * i)) & 15u;
    if (xi == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const unsigned yj = (y >> (4 * j)) & 15u;
      acc[i + j] = add_[acc[i + j]][mul_[xi][yj]];
    }
  }
  const unsigned u = nibble(ctx_.unit);
  Packed out = 0;
  for (std::size_t i = 0; i < n; ++i) out |= Packed{add_[acc[i]][mul_[u][acc[i + n]]]} << (4 * i);
  return out;
}

Packed WordOps::reverse(Packed w) const noexcept {
  Packed out = 0;
  for (std::size_t i = 0; i < ctx_.n; ++i) out |= ((w >> (4 * i)) & 15u) << (4 * (ctx_.n - 1 - i));
  return out;
}

CodeSet::CodeSet(QuotientContext ctx, std::vector<Packed> elements, std::vector<Packed> basis)
    : ctx_(std::move(ctx)), elements_(std::move(elements)), basis_(std::move(basis)) {
  if (4 * ctx_.n <= 24 && elements_.size() >= 4096) {
    bits_.assign((std::size_t{1} << (4 * ctx_.n)) / 64, 0);
    for (Packed w : elements_) bits_[w >> 6] |= Packed{1} << (w & 63);
  }
}

std::size_t CodeSet::log2_size() const noexcept { return static_cast<std::size_t>(std::countr_zero(elements_.size())); }

bool CodeSet::contains(Packed w) const {
  if (!bits_.empty()) return w >> 6 < bits_.size() && ((bits_[w >> 6] >> (w & 63)) & 1u);
  return std::binary_search(elements_.begin(), elements_.end(), w);
}

bool CodeSet::contains(const RPoly& f) const { return contains(WordOps(ctx_).pack(f)); }

std::size_t CodeSet::fingerprint() const noexcept {
  std::size_t h = 1469598103934665603ull ^ elements_.size();
  for (auto w : elements_) h = (h ^ (w * 0x9E3779B97F4A7C15ull)) * 1099511628211ull;
  return h;
}

CodeSet enumerate_ideal(const GeneratorSet& gs, unsigned max_log2_words) {
  check_size(gs.ctx, max_log2_words);
  const WordOps ops(gs.ctx);
  std::vector<Packed> seeds;
  for (const auto& g : gs.gens) seeds.push_back(ops.pack(g));
  CodeSet cs = closure(ops, std::move(seeds), true);
  if (!verify_ideal(cs)) throw std::logic_error("ideal closure is not closed");
  return cs;
}

CodeSet r_span(const QuotientContext& ctx, std::span<const RPoly> words, unsigned max_log2_words) {
  check_size(ctx, max_log2_words);
  const WordOps ops(ctx);
  std::vector<Packed> seeds;
  for (const auto& g : words) seeds.push_back(ops.pack(g));
  return closure(ops, std::move(seeds), false);
}

bool verify_ideal(const CodeSet& cs) {
  const WordOps ops(cs.ctx());
  const RingElement nu{0, 1, cs.ctx().theta};
  if (cs.elements().empty() || cs.elements().front() != 0) return false;
  for (auto b : cs.basis())
    for (auto e : cs.basis())
      if (!cs.contains(WordOps::add(b, e))) return false;
  for (auto e : cs.elements())
    if (!cs.contains(ops.shift(e)) || !cs.contains(ops.scale(nu, e))) return false;
  return true;
}

ResTor oracle_res_tor(const CodeSet& cs) {
  const auto& ctx = cs.ctx();
  const WordOps ops(ctx);
  ResTor out;
  for (auto e : cs.elements()) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < ctx.n; ++i)
      r |= std::uint64_t{phi_theta(from_nibble(static_cast<unsigned>((e >> (4 * i)) & 15u), ctx.theta))} << (2 * i);
    out.residue.push_back(r);
  }
  std::sort(out.residue.begin(), out.residue.end());
  out.residue.erase(std::unique(out.residue.begin(), out.residue.end()), out.residue.end());
  const RingElement k = k_theta(ctx.theta);
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << (2 * ctx.n)); ++a) {
    Packed w = 0;
    for (std::size_t i = 0; i < ctx.n; ++i) w |= Packed{(a >> (2 * i)) & 3u} << (4 * i);
    if (cs.contains(ops.scale(k, w))) out.torsion.push_back(a);
  }
  return out;
}

bool oracle_reversible(const CodeSet& cs) {
  const WordOps ops(cs.ctx());
  return std::all_of(cs.elements().begin(), cs.elements().end(), [&](Packed e) { return cs.contains(ops.reverse(e)); });
}

bool oracle_equal(const CodeSet& a, const CodeSet& b) {
  if (!(a.ctx() == b.ctx())) throw Error(Errc::CtxMismatch, "code sets live in different rings");
  return a.elements() == b.elements();
}

std::size_t oracle_rank(const CodeSet& cs) {
  const auto& ctx = cs.ctx();
  const WordOps ops(ctx);
  const Theta t = ctx.theta;
  std::vector<std::vector<RingElement>> maximal;
  if (t == Theta::Nu)
    maximal = {{RingElement{2, 0, t}, RingElement{0, 1, t}}, {RingElement{2, 0, t}, RingElement{1, 1, t}}};
  else
    maximal = {{RingElement{2, 0, t}, k_theta(t)}};
  std::size_t best = 0;
  for (const auto& m : maximal) {
    std::vector<Packed> seeds;
    for (auto b : cs.basis())
      for (const auto& g : m) seeds.push_back(ops.scale(g, b));
    const CodeSet mc = closure(ops, std::move(seeds), false);
    best = std::max(best, cs.log2_size() - mc.log2_size());
  }
  return best;
}

std::vector<Packed> oracle_idempotents(const QuotientContext& ctx, unsigned max_log2_words) {
  check_size(ctx, max_log2_words);
  const WordOps ops(ctx);
  std::vector<Packed> out;
  const Packed words = Packed{1} << (4 * ctx.n);
  for (Packed w = 0; w < words; ++w)
    if (ops.mul(w, w) == w) out.push_back(w);
  return out;
}

namespace {

std::vector<Packed> unit_scalars(Theta t) {
  std::vector<Packed> out;
  for (const auto& e : enumerate_ring(t))
    if (is_unit(e)) out.push_back(nibble(e));
  return out;
}

/// Every ideal of the ambient ring contained in `ambient`.
std::vector<CodeSet> ideals_inside(const WordOps& ops, const CodeSet& ambient) {
  const auto& ctx = ops.ctx();
  std::vector<CodeSet> ideals;
  std::unordered_multimap<std::size_t, std::size_t> seen;
  auto admit = [&](CodeSet cs) -> bool {
    const std::size_t fp = cs.fingerprint();
    auto [lo, hi] = seen.equal_range(fp);
    for (auto it = lo; it != hi; ++it)
      if (ideals[it->second].elements() == cs.elements()) return false;
    seen.emplace(fp, ideals.size());
    ideals.push_back(std::move(cs));
    return true;
  };

  // Multiplying by a unit preserves the generated ideal; orbits are skipped wholesale.
  std::vector<Packed> units = unit_scalars(ctx.theta);
  units.push_back(ops.shift(1));
  for (const auto& c : enumerate_ring(ctx.theta)) {
    if (c == RingElement{0, 0, ctx.theta} || !(c * c * c * c == RingElement{0, 0, ctx.theta})) continue;
    for (std::size_t i = 0; i < ctx.n; ++i) units.push_back(WordOps::add(1, Packed{nibble(c)} << (4 * i)));
  }
  std::unordered_set<Packed> done;
  admit(closure(ops, {}, true));
  std::vector<Packed> principal;
  for (Packed w : ambient.elements()) {
    if (w == 0 || done.count(w)) continue;
    std::vector<Packed> stack{w};
    done.insert(w);
    while (!stack.empty()) {
      const Packed x = stack.back();
      stack.pop_back();
      for (Packed v : units)
        if (const Packed y = ops.mul(v, x); done.insert(y).second) stack.push_back(y);
    }
    if (admit(closure(ops, {w}, true))) principal.push_back(w);
  }
  for (std::size_t i = 1; i < ideals.size(); ++i) {
    for (Packed p : principal) {
      if (ideals[i].contains(p)) continue;
      admit(closure(ops, {p}, true, &ideals[i]));
    }
  }
  return ideals;
}

}  // namespace

std::vector<std::vector<Packed>> enumerate_ideal_generators(const QuotientContext& ctx, std::size_t max_n) {
  if (ctx.n > max_n)
    throw Error(Errc::SizeLimitExceeded, "ideal enumeration is limited to length " + std::to_string(max_n));
  check_size(ctx, 4 * static_cast<unsigned>(std::min<std::size_t>(max_n, 16)));
  const WordOps ops(ctx);
  const auto idem = oracle_idempotents(ctx, 64);
  std::vector<Packed> primitive;
  for (Packed e : idem) {
    if (e == 0) continue;
    const bool minimal = std::all_of(idem.begin(), idem.end(), [&](Packed f) {
      const Packed fe = ops.mul(f, e);
      return fe == 0 || fe == e;
    });
    if (minimal) primitive.push_back(e);
  }

  std::vector<std::vector<Packed>> combos{{}};
  for (Packed e : primitive) {
    const CodeSet factor = closure(ops, {e}, true);
    std::vector<std::vector<Packed>> next;
    for (const auto& ideal : ideals_inside(ops, factor))
      for (const auto& prefix : combos) {
        auto merged = prefix;
        merged.insert(merged.end(), ideal.basis().begin(), ideal.basis().end());
        next.push_back(std::move(merged));
      }
    combos = std::move(next);
  }
  return combos;
}

GeneratorSet generator_set(const QuotientContext& ctx, std::span<const Packed> words) {
  const WordOps ops(ctx);
  std::vector<RPoly> gens;
  for (Packed w : words) gens.push_back(ops.unpack(w));
  return GeneratorSet(ctx, std::move(gens));
}

std::vector<CodeSet> enumerate_all_ideals(const QuotientContext& ctx, std::size_t max_n) {
  std::vector<CodeSet> ideals;
  std::unordered_set<std::size_t> seen;
  for (const auto& gens : enumerate_ideal_generators(ctx, max_n)) {
    CodeSet cs = enumerate_ideal(generator_set(ctx, gens), 4 * static_cast<unsigned>(max_n));
    if (!seen.insert(cs.fingerprint()).second) throw std::logic_error("duplicate ideal in enumeration");
    ideals.push_back(std::move(cs));
  }
  std::sort(ideals.begin(), ideals.end(), [](const CodeSet& a, const CodeSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.elements() < b.elements();
  });
  return ideals;
}

}  // namespace z4nu
