#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "decomposition.hpp"
#include "ideal.hpp"
#include "polymatroid.hpp"

namespace polymat {

/// Seeded random source of polymatroidal ideals, built only from operations
/// that preserve the exchange property: Veronese type ideals, m^d, complete
/// multipartite edge ideals, products of disjoint prime powers (optionally
/// times such an edge ideal), products, and colons.
///
/// Constructor weights, out of 16: veronese type 4, maximal power 1,
/// multipartite 2, prime power product 4, product 2, colon 3.
class PolymatroidalSampler {
public:
  struct Limits {
    std::size_t min_ambient = 2;
    std::size_t max_ambient = 6;
    unsigned max_degree = 4;
    std::size_t max_generators = 150;
  };

  explicit PolymatroidalSampler(std::uint64_t seed) : PolymatroidalSampler(seed, Limits{}) {}
  PolymatroidalSampler(std::uint64_t seed, Limits limits) : rng_(seed), limits_(limits) {}

  const Limits& limits() const noexcept { return limits_; }

  std::size_t random_ambient() { return uniform(limits_.min_ambient, limits_.max_ambient); }

  /// A polymatroidal ideal in n variables, not necessarily fully supported.
  MonomialIdeal next(std::size_t ambient) {
    for (;;) {
      auto I = draw(ambient, 2);
      if (!I.is_proper_nonzero()) continue;
      if (*equigenerated_degree(I) > limits_.max_degree) continue;
      if (I.size() > limits_.max_generators) continue;
      return I;
    }
  }

  /// A polymatroidal ideal re-indexed onto its own support.
  MonomialIdeal next_fully_supported() {
    for (;;) {
      auto I = restrict_to_support(next(random_ambient()));
      if (I.ambient() >= 1) return I;
    }
  }

  Monomial random_monomial(std::size_t ambient, unsigned max_degree) {
    std::vector<Monomial::exponent_type> e(ambient, 0);
    auto deg = uniform(0, max_degree);
    for (std::size_t k = 0; k < deg; ++k) ++e[uniform(0, ambient - 1)];
    return Monomial(std::move(e));
  }

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

private:
  MonomialIdeal draw(std::size_t n, int depth) {
    auto pick = uniform(0, 15);
    if (depth <= 0 && pick >= 11) pick = uniform(0, 10);
    if (pick < 4) return veronese_type(n);
    if (pick < 5) return maximal_ideal_power(n, static_cast<unsigned>(uniform(1, limits_.max_degree)));
    if (pick < 7) return multipartite(n);
    if (pick < 11) return prime_power_product(n);
    if (pick < 13) {
      auto a = draw(n, depth - 1);
      auto b = draw(n, depth - 1);
      if (*equigenerated_degree(a) + *equigenerated_degree(b) > limits_.max_degree) return a;
      return multiply(a, b);
    }
    auto a = draw(n, depth - 1);
    return colon(a, random_monomial(n, 2));
  }

  MonomialIdeal veronese_type(std::size_t n) {
    for (;;) {
      VeroneseTypeSpec spec;
      spec.degree = static_cast<unsigned>(uniform(1, limits_.max_degree));
      unsigned total = 0;
      for (std::size_t j = 0; j < n; ++j) {
        spec.caps.push_back(static_cast<unsigned>(uniform(1, spec.degree)));
        total += spec.caps.back();
      }
      if (total >= spec.degree) return construct_veronese_type(spec, n);
    }
  }

  std::vector<std::size_t> shuffled_variables(std::size_t n) {
    std::vector<std::size_t> vars(n);
    std::iota(vars.begin(), vars.end(), 0);
    std::shuffle(vars.begin(), vars.end(), rng_);
    return vars;
  }

  /// Complete multipartite edge ideal on the listed variables; balanced when asked.
  MonomialIdeal multipartite_on(std::span<const std::size_t> vars, std::size_t ambient,
                                bool balanced, std::optional<std::size_t> block_size = {},
                                std::optional<unsigned> degree = {}) {
    const auto count = vars.size();
    std::vector<std::vector<std::size_t>> blocks;
    if (balanced) {
      std::size_t k = block_size.value_or(0);
      if (k == 0) {
        std::vector<std::size_t> divisors;
        for (std::size_t c = 1; c <= count; ++c)
          if (count % c == 0) divisors.push_back(c);
        k = divisors[uniform(0, divisors.size() - 1)];
      }
      for (std::size_t start = 0; start < count; start += k) {
        blocks.emplace_back();
        for (std::size_t v = start; v < start + k; ++v) blocks.back().push_back(v);
      }
    } else {
      auto m = uniform(1, count);
      blocks.resize(m);
      for (std::size_t v = 0; v < count; ++v) blocks[v < m ? v : uniform(0, m - 1)].push_back(v);
    }
    auto d = degree.value_or(static_cast<unsigned>(
        uniform(1, std::min<std::size_t>(blocks.size(), limits_.max_degree))));
    auto local = construct_multipartite_edge_ideal(BlockPartition(std::move(blocks)), d);
    return embed(local, vars, ambient);
  }

  MonomialIdeal multipartite(std::size_t n) {
    auto vars = shuffled_variables(n);
    return multipartite_on(vars, n, uniform(0, 1) == 0);
  }

  /// Disjoint prime powers, optionally times a multipartite tail. Half the
  /// time all primes share one height and the tail is a complete balanced
  /// edge ideal of that height, so the result is unmixed.
  MonomialIdeal prime_power_product(std::size_t n) {
    auto vars = shuffled_variables(n);
    const bool unmixed = uniform(0, 1) == 0;
    std::vector<PrimePowerComponent> factors;
    std::size_t used = 0;
    unsigned degree = 0;
    const std::size_t h = uniform(1, std::max<std::size_t>(1, n / 2));

    while (used < n && degree < limits_.max_degree) {
      std::size_t size = unmixed ? h : uniform(1, n - used);
      if (used + size > n) break;
      auto a = static_cast<unsigned>(uniform(1, limits_.max_degree - degree));
      factors.push_back({VariablePrime(std::vector<std::size_t>(vars.begin() + used,
                                                                vars.begin() + used + size)),
                         a});
      used += size;
      degree += a;
      if (uniform(0, 2) == 0) break;
    }

    std::optional<MonomialIdeal> tail;
    const auto left = n - used;
    if (left >= 2 && degree < limits_.max_degree && uniform(0, 1) == 0) {
      std::span<const std::size_t> rest(vars.data() + used, left);
      const unsigned room = limits_.max_degree - degree;
      if (!unmixed) {
        tail = multipartite_on(rest, n, uniform(0, 1) == 0);
      } else {
        // k (m - dJ + 1) = h with m k = |rest| and 2 <= dJ <= m.
        for (std::size_t k = 1; k <= left && !tail; ++k) {
          if (left % k != 0 || h % k != 0) continue;
          const auto m = left / k;
          if (m + 1 < h / k) continue;
          const auto dj = m + 1 - h / k;
          if (dj >= 2 && dj <= m && dj <= room)
            tail = multipartite_on(rest, n, true, k, static_cast<unsigned>(dj));
        }
      }
    }
    if (factors.empty() && !tail) return maximal_ideal_power(n, 1);
    return construct_prime_power_product(factors, tail, n);
  }

  std::mt19937_64 rng_;
  Limits limits_;
};

} // namespace polymat
