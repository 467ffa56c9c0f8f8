#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "decomposition.hpp"
#include "error.hpp"
#include "ideal.hpp"

namespace polymat {

/// Parameters of the Veronese type ideal I_(d; a_1, ..., a_n). Cap a_j is
/// attached to x_j positionally; caps need not be sorted.
struct VeroneseTypeSpec {
  unsigned degree = 1;
  std::vector<unsigned> caps;
};

/// A partition of the variables {0, ..., n-1} into nonempty blocks.
/// Blocks are kept sorted internally and ordered by their least element.
class BlockPartition {
public:
  BlockPartition() = default;

  explicit BlockPartition(std::vector<std::vector<std::size_t>> blocks) : blocks_(std::move(blocks)) {
    std::size_t n = 0;
    for (auto& b : blocks_) {
      if (b.empty()) throw error(errc::invalid_partition, "empty block");
      std::sort(b.begin(), b.end());
      n += b.size();
    }
    std::sort(blocks_.begin(), blocks_.end());
    std::vector<bool> seen(n, false);
    for (const auto& b : blocks_)
      for (auto v : b) {
        if (v >= n || seen[v])
          throw error(errc::invalid_partition, "blocks must be disjoint and cover x1..x" +
                                                   std::to_string(n));
        seen[v] = true;
      }
    if (blocks_.empty()) throw error(errc::invalid_partition, "no blocks");
  }

  std::span<const std::vector<std::size_t>> blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }

  std::size_t ambient() const noexcept {
    std::size_t n = 0;
    for (const auto& b : blocks_) n += b.size();
    return n;
  }

  /// Common block size, when all blocks have the same cardinality.
  std::optional<std::size_t> balanced_size() const {
    for (const auto& b : blocks_)
      if (b.size() != blocks_.front().size()) return std::nullopt;
    return blocks_.front().size();
  }

  std::size_t block_of(std::size_t variable) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), variable)) return i;
    throw error(errc::index_out_of_range, "variable not in any block");
  }

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

private:
  std::vector<std::vector<std::size_t>> blocks_;
};

/// A failure of the exchange condition: deg_{x_i}(u) > deg_{x_i}(v) but no
/// x_j * u / x_i with deg_{x_j}(u) < deg_{x_j}(v) is a generator.
struct ExchangeViolation {
  Monomial u;
  Monomial v;
  std::size_t i;
};

/// First exchange failure in G(I), scanning u, v in canonical order.
/// Ideals that are not equigenerated have no such witness; test
/// equigenerated_degree separately.
inline std::optional<ExchangeViolation> find_exchange_violation(const MonomialIdeal& I) {
  const auto gens = I.generators();
  const auto n = I.ambient();
  std::vector<Monomial::exponent_type> e(n);
  for (const auto& u : gens) {
    for (const auto& v : gens) {
      if (u == v) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i] <= v[i]) continue;
        bool exchanged = false;
        for (std::size_t j = 0; j < n && !exchanged; ++j) {
          if (u[j] >= v[j]) continue;
          e.assign(u.exponents().begin(), u.exponents().end());
          --e[i];
          ++e[j];
          exchanged = I.is_minimal_generator(Monomial(e));
        }
        if (!exchanged) return ExchangeViolation{u, v, i};
      }
    }
  }
  return std::nullopt;
}

/// Exchange condition on G(I): whenever deg_{x_i}(u) > deg_{x_i}(v) there is
/// a j with deg_{x_j}(u) < deg_{x_j}(v) and x_j * u / x_i in G(I).
/// Returns false for ideals that are not generated in a single degree.
inline bool is_polymatroidal(const MonomialIdeal& I) {
  detail::require_proper(I);
  if (!equigenerated_degree(I)) return false;
  return !find_exchange_violation(I);
}

inline bool is_matroidal(const MonomialIdeal& I) {
  detail::require_proper(I);
  return I.is_squarefree() && is_polymatroidal(I);
}

/// I_(d; a_1, ..., a_n): every degree-d monomial with deg_{x_j} <= a_j.
inline MonomialIdeal construct_veronese_type(const VeroneseTypeSpec& spec, std::size_t ambient) {
  if (spec.caps.size() != ambient)
    throw error(errc::invalid_ambient, std::to_string(spec.caps.size()) + " caps for " +
                                           std::to_string(ambient) + " variables");
  unsigned room = 0;
  for (auto a : spec.caps) room += std::min(a, spec.degree);
  if (room < spec.degree)
    throw error(errc::empty_family, "caps sum to less than the degree " +
                                        std::to_string(spec.degree));

  std::vector<Monomial> gens;
  std::vector<Monomial::exponent_type> e(ambient, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos == ambient) {
      if (remaining == 0) gens.emplace_back(e);
      return;
    }
    unsigned top = std::min(remaining, spec.caps[pos]);
    for (unsigned k = 0; k <= top; ++k) {
      e[pos] = static_cast<Monomial::exponent_type>(k);
      self(self, pos + 1, remaining - k);
    }
    e[pos] = 0;
  };
  rec(rec, 0, spec.degree);
  return minimalize(std::move(gens), ambient);
}

/// m^d, every monomial of degree d.
inline MonomialIdeal maximal_ideal_power(std::size_t ambient, unsigned degree) {
  return construct_veronese_type({degree, std::vector<unsigned>(ambient, degree)}, ambient);
}

/// Every squarefree monomial of degree d.
inline MonomialIdeal squarefree_veronese(std::size_t ambient, unsigned degree) {
  return construct_veronese_type({degree, std::vector<unsigned>(ambient, 1)}, ambient);
}

/// Edge ideal of the complete d-uniform hypergraph whose edges take at most
/// one vertex from each block.
inline MonomialIdeal construct_multipartite_edge_ideal(const BlockPartition& partition,
                                                       unsigned degree) {
  const auto blocks = partition.blocks();
  if (degree > blocks.size())
    throw error(errc::degree_too_large, "degree " + std::to_string(degree) + " exceeds " +
                                            std::to_string(blocks.size()) + " blocks");
  const auto n = partition.ambient();
  std::vector<Monomial> gens;
  std::vector<std::size_t> chosen;
  auto pick = [&](auto&& self, std::size_t next_block, unsigned remaining) -> void {
    if (remaining == 0) {
      gens.push_back(Monomial::product_of(n, chosen));
      return;
    }
    for (std::size_t b = next_block; b + remaining <= blocks.size(); ++b)
      for (auto v : blocks[b]) {
        chosen.push_back(v);
        self(self, b + 1, remaining - 1);
        chosen.pop_back();
      }
  };
  pick(pick, 0, degree);
  return minimalize(std::move(gens), n);
}

/// p_1^{a_1} ... p_t^{a_t} * J for primes on pairwise disjoint variable sets,
/// also disjoint from supp(J).
inline MonomialIdeal construct_prime_power_product(std::span<const PrimePowerComponent> factors,
                                                   const std::optional<MonomialIdeal>& tail,
                                                   std::size_t ambient) {
  std::vector<bool> used(ambient, false);
  auto claim = [&](std::size_t v) {
    if (v >= ambient) throw error(errc::index_out_of_range, "factor variable outside ambient");
    if (used[v])
      throw error(errc::support_overlap, "x" + std::to_string(v + 1) + " appears in two factors");
    used[v] = true;
  };
  for (const auto& f : factors)
    for (auto v : f.prime.variables()) claim(v);
  auto out = MonomialIdeal::unit(ambient);
  if (tail) {
    if (tail->ambient() != ambient) throw error(errc::invalid_ambient, "tail ambient mismatch");
    for (auto v : support(*tail)) claim(v);
    out = *tail;
  }
  for (const auto& f : factors) out = multiply(out, prime_power(f.prime, f.exponent, ambient));
  return out;
}

namespace detail {

inline void require_fully_supported(const MonomialIdeal& I) {
  if (!is_fully_supported(I))
    throw error(errc::not_fully_supported,
                "support has " + std::to_string(support(I).size()) + " of " +
                    std::to_string(I.ambient()) + " variables");
}

} // namespace detail

/// Classes of x ~ y  <=>  (I : x) = (I : y). For matroidal I these are the
/// maximal sets of variables no two of which divide a common generator.
/// Passing unchecked = true skips the matroidal and full-support checks.
inline BlockPartition colon_equivalence_blocks(const MonomialIdeal& I, bool unchecked = false) {
  detail::require_proper(I);
  if (!unchecked) {
    if (!is_matroidal(I)) throw error(errc::not_matroidal, "blocks need a matroidal ideal");
    detail::require_fully_supported(I);
  }
  const auto n = I.ambient();
  std::vector<MonomialIdeal> colons;
  colons.reserve(n);
  for (std::size_t x = 0; x < n; ++x) colons.push_back(colon(I, Monomial::variable(n, x)));

  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> representative;
  for (std::size_t x = 0; x < n; ++x) {
    auto it = std::find_if(representative.begin(), representative.end(),
                           [&](std::size_t r) { return colons[r] == colons[x]; });
    if (it == representative.end()) {
      representative.push_back(x);
      blocks.push_back({x});
    } else {
      blocks[static_cast<std::size_t>(it - representative.begin())].push_back(x);
    }
  }
  return BlockPartition(std::move(blocks));
}

} // namespace polymat
