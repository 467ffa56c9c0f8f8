#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "decomposition.hpp"
#include "error.hpp"
#include "ideal.hpp"
#include "polymatroid.hpp"

namespace polymat {

/// Shape of a matroidal ideal viewed as the edge ideal of a d-uniform
/// hypergraph whose vertex blocks are the colon-equivalence classes.
struct HypergraphProfile {
  unsigned degree = 0;
  std::size_t block_count = 0;
  std::optional<std::size_t> block_size; // present iff balanced
  BlockPartition blocks;
  bool complete = false;
  bool balanced = false;
};

namespace detail {

/// Number of ways to pick d distinct blocks and one vertex from each.
inline std::uint64_t transversal_count(const BlockPartition& p, unsigned d) {
  std::vector<std::uint64_t> e(d + 1, 0);
  e[0] = 1;
  for (const auto& b : p.blocks())
    for (unsigned k = d; k >= 1; --k) e[k] += e[k - 1] * b.size();
  return e[d];
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

} // namespace detail

inline HypergraphProfile hypergraph_profile(const MonomialIdeal& I) {
  HypergraphProfile out;
  out.blocks = colon_equivalence_blocks(I);
  out.degree = *equigenerated_degree(I);
  out.block_count = out.blocks.block_count();
  out.block_size = out.blocks.balanced_size();
  out.balanced = out.block_size.has_value();

  bool transversal = std::all_of(I.generators().begin(), I.generators().end(), [&](const Monomial& g) {
    std::vector<std::size_t> hit;
    for (auto v : g.support()) hit.push_back(out.blocks.block_of(v));
    std::sort(hit.begin(), hit.end());
    return std::adjacent_find(hit.begin(), hit.end()) == hit.end();
  });
  out.complete = transversal && I.size() == detail::transversal_count(out.blocks, out.degree);
  return out;
}

// Certificates for the four shapes of an unmixed polymatroidal ideal, plus
// the witness for a mixed one.

/// I = m^d.
struct MaximalPower {
  unsigned degree = 0;
};

/// I = p_1^{a_1} ... p_t^{a_t}, primes on disjoint variable sets.
struct PrimePowerProduct {
  std::vector<PrimePowerComponent> factors;
};

/// I = p_1^{a_1} ... p_t^{a_t} * J with J unmixed matroidal, all supports disjoint.
struct PrimePowerTimesMatroidal {
  std::vector<PrimePowerComponent> factors;
  MonomialIdeal matroidal_factor;
};

/// One factor of a squarefree ideal split along disjoint supports: the
/// variables it lives on and its profile after re-indexing onto them.
struct MatroidalComponent {
  std::vector<std::size_t> variables;
  HypergraphProfile profile;
};

/// I is itself unmixed matroidal. profile describes I as a whole; components
/// is the factorization of I into ideals on disjoint supports, each of which
/// is a complete balanced multipartite edge ideal.
struct UnmixedMatroidal {
  HypergraphProfile profile;
  std::vector<MatroidalComponent> components;
};

/// Two associated primes of different heights.
struct NotUnmixed {
  VariablePrime lower;
  VariablePrime higher;
};

using Classification =
    std::variant<MaximalPower, PrimePowerProduct, PrimePowerTimesMatroidal, UnmixedMatroidal, NotUnmixed>;

inline std::string_view tag(const Classification& c) {
  struct {
    std::string_view operator()(const MaximalPower&) const { return "maximal-power"; }
    std::string_view operator()(const PrimePowerProduct&) const { return "prime-power-product"; }
    std::string_view operator()(const PrimePowerTimesMatroidal&) const {
      return "prime-power-times-matroidal";
    }
    std::string_view operator()(const UnmixedMatroidal&) const { return "unmixed-matroidal"; }
    std::string_view operator()(const NotUnmixed&) const { return "not-unmixed"; }
  } visitor;
  return std::visit(visitor, c);
}

/// Roman numeral of the structure case, empty for NotUnmixed.
inline std::string_view case_label(const Classification& c) {
  static constexpr std::string_view labels[] = {"i", "ii", "iii", "iv", ""};
  return labels[c.index()];
}

/// Rebuilds the ideal a certificate describes; nullopt for NotUnmixed.
inline std::optional<MonomialIdeal> reconstruct(const Classification& c, std::size_t ambient) {
  if (auto* mp = std::get_if<MaximalPower>(&c)) return maximal_ideal_power(ambient, mp->degree);
  if (auto* ppp = std::get_if<PrimePowerProduct>(&c))
    return construct_prime_power_product(ppp->factors, std::nullopt, ambient);
  if (auto* ppm = std::get_if<PrimePowerTimesMatroidal>(&c))
    return construct_prime_power_product(ppm->factors, ppm->matroidal_factor, ambient);
  if (auto* um = std::get_if<UnmixedMatroidal>(&c)) {
    auto out = MonomialIdeal::unit(ambient);
    for (const auto& comp : um->components) {
      auto local = construct_multipartite_edge_ideal(comp.profile.blocks, comp.profile.degree);
      out = multiply(out, embed(local, comp.variables, ambient));
    }
    return out;
  }
  return std::nullopt;
}

namespace detail {

[[noreturn]] inline void incomplete(const std::string& why) {
  throw error(errc::classification_incomplete, why);
}

inline Classification certify(Classification c, const MonomialIdeal& I) {
  if (reconstruct(c, I.ambient()) != I)
    incomplete(std::string(tag(c)) + " certificate does not reproduce the input");
  return c;
}

/// Connected components of the graph "supports intersect" on a prime list.
inline std::vector<std::vector<std::size_t>> overlap_groups(std::span<const PrimePowerComponent> comps) {
  std::vector<std::size_t> parent(comps.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      if (!comps[i].prime.disjoint_from(comps[j].prime)) parent[find(i)] = find(j);
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> root_index(comps.size(), SIZE_MAX);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    auto r = find(i);
    if (root_index[r] == SIZE_MAX) {
      root_index[r] = groups.size();
      groups.emplace_back();
    }
    groups[root_index[r]].push_back(i);
  }
  return groups;
}

} // namespace detail

/// Decides unmixedness of a fully supported polymatroidal ideal and, when it
/// is unmixed, returns a certificate for one of the four structure cases.
///
/// Precedence: degree 1 is reported as a one-factor prime power product;
/// Ass = {m} gives MaximalPower; a squarefree ideal gives UnmixedMatroidal;
/// otherwise primes with support disjoint from all others become prime power
/// factors and the remaining, mutually overlapping, primes form J.
inline Classification classify_unmixed_polymatroidal(const MonomialIdeal& I) {
  detail::require_proper(I);
  if (!is_polymatroidal(I)) throw error(errc::not_polymatroidal, "classification input");
  detail::require_fully_supported(I);

  const auto n = I.ambient();
  const unsigned d = *equigenerated_degree(I);
  const auto ass = associated_primes(I);

  if (!is_unmixed(ass)) {
    // Ass is sorted by height.
    return NotUnmixed{ass.front(), ass.back()};
  }

  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  const VariablePrime maximal(all);

  if (d == 1) return detail::certify(PrimePowerProduct{{{maximal, 1}}}, I);
  if (ass.size() == 1 && ass.front() == maximal) return detail::certify(MaximalPower{d}, I);

  const auto decomposition = prime_power_decomposition(I);
  const auto& comps = decomposition.components;

  if (I.is_squarefree()) {
    UnmixedMatroidal cert{hypergraph_profile(I), {}};
    for (const auto& group : detail::overlap_groups(comps)) {
      std::vector<PrimePowerComponent> members;
      for (auto i : group) members.push_back(comps[i]);
      auto factor = intersect_prime_powers(members, n);
      MatroidalComponent mc{support(factor), hypergraph_profile(restrict_to_support(factor))};
      if (!mc.profile.complete || !mc.profile.balanced)
        detail::incomplete("unmixed matroidal factor is not complete and balanced");
      cert.components.push_back(std::move(mc));
    }
    return detail::certify(std::move(cert), I);
  }
  std::vector<PrimePowerComponent> factors;
  std::vector<PrimePowerComponent> residual;
  for (const auto& group : detail::overlap_groups(comps)) {
    if (group.size() == 1) {
      factors.push_back(comps[group.front()]);
      continue;
    }
    for (auto i : group) {
      if (comps[i].exponent != 1)
        detail::incomplete("overlapping associated primes with exponent " +
                           std::to_string(comps[i].exponent));
      residual.push_back(comps[i]);
    }
  }

  unsigned factor_degree = 0;
  for (const auto& f : factors) factor_degree += f.exponent;

  if (residual.empty()) {
    if (factor_degree != d) detail::incomplete("prime power exponents do not sum to the degree");
    return detail::certify(PrimePowerProduct{std::move(factors)}, I);
  }

  auto J = intersect_prime_powers(residual, n);

  // J is also (I : u) for u taking a_i variables from each factor prime.
  auto u = Monomial(n);
  for (const auto& f : factors)
    u = u * Monomial::variable(n, f.prime.variables().front(),
                               static_cast<Monomial::exponent_type>(f.exponent));
  if (colon(I, u) != J) detail::incomplete("residual factor is not a colon of I");
  if (!is_matroidal(J) || !is_unmixed(J))
    detail::incomplete("residual factor is not unmixed matroidal");
  if (factor_degree + *equigenerated_degree(J) != d)
    detail::incomplete("factor degrees do not sum to the degree");
  if (height(J) != ass.front().height()) detail::incomplete("residual factor has the wrong height");

  return detail::certify(PrimePowerTimesMatroidal{std::move(factors), std::move(J)}, I);
}

/// Which of the Cohen-Macaulay shapes of a polymatroidal ideal, if any.
enum class CmShape { none, principal, veronese, squarefree_veronese };

inline std::string_view to_string(CmShape s) {
  switch (s) {
    case CmShape::none: return "none";
    case CmShape::principal: return "principal";
    case CmShape::veronese: return "veronese";
    case CmShape::squarefree_veronese: return "squarefree-veronese";
  }
  return "none";
}

/// Principal, m_S^d, or all squarefree degree-d monomials on S, where S is
/// the support of I.
inline CmShape cm_shape(const MonomialIdeal& I) {
  detail::require_proper(I);
  if (!is_polymatroidal(I)) throw error(errc::not_polymatroidal, "Cohen-Macaulay test input");
  if (I.size() == 1) return CmShape::principal;
  const auto s = support(I).size();
  const unsigned d = *equigenerated_degree(I);
  if (I.size() == detail::binomial(s + d - 1, d)) return CmShape::veronese;
  if (I.is_squarefree() && I.size() == detail::binomial(s, d)) return CmShape::squarefree_veronese;
  return CmShape::none;
}

inline bool is_cohen_macaulay(const MonomialIdeal& I) { return cm_shape(I) != CmShape::none; }

/// All squarefree monomials of degree d in the full ambient ring.
inline bool is_squarefree_veronese(const MonomialIdeal& I) {
  if (!I.is_proper_nonzero() || !I.is_squarefree()) return false;
  auto d = equigenerated_degree(I);
  return d && I.size() == detail::binomial(I.ambient(), *d);
}

/// Caps (largest exponent of each variable) when I is the Veronese type
/// ideal for those caps.
inline std::optional<std::vector<unsigned>> veronese_type_caps(const MonomialIdeal& I) {
  if (!I.is_proper_nonzero()) return std::nullopt;
  auto d = equigenerated_degree(I);
  if (!d) return std::nullopt;
  std::vector<unsigned> caps(I.ambient(), 0);
  for (const auto& g : I.generators())
    for (std::size_t i = 0; i < caps.size(); ++i) caps[i] = std::max<unsigned>(caps[i], g[i]);
  if (construct_veronese_type({*d, caps}, I.ambient()) != I) return std::nullopt;
  return caps;
}

/// True for a Veronese type ideal with some caps equal to 1 that is not of a
/// Cohen-Macaulay shape: the inputs on which "squarefree Veronese type" and
/// "squarefree Veronese" would disagree.
inline bool is_ambiguous_squarefree_veronese_type(const MonomialIdeal& I) {
  auto caps = veronese_type_caps(I);
  if (!caps || !is_polymatroidal(I)) return false;
  bool some_one = std::find(caps->begin(), caps->end(), 1u) != caps->end();
  bool some_higher = std::any_of(caps->begin(), caps->end(), [](unsigned a) { return a > 1; });
  return some_one && some_higher && cm_shape(I) == CmShape::none;
}

/// Minimal primes of equal height h, linked when |p ∪ q| = h + 1, form a
/// connected graph.
inline bool is_connected_in_codim_one(const MonomialIdeal& I) {
  detail::require_proper(I);
  const auto mins = minimal_primes(I);
  const auto h = mins.front().height();
  if (!is_unmixed(mins)) return false;

  std::vector<std::size_t> parent(mins.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < mins.size(); ++i) {
    for (std::size_t j = i + 1; j < mins.size(); ++j) {
      const auto a = mins[i].variables();
      const auto b = mins[j].variables();
      std::vector<std::size_t> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      const auto joined = a.size() + b.size() - common.size();
      if (joined != h + 1) continue;
      if (common.size() + 1 != h)
        throw error(errc::verification_failed, "adjacent minimal primes meet in the wrong height");
      parent[find(i)] = find(j);
    }
  }
  const auto root = find(0);
  for (std::size_t i = 1; i < mins.size(); ++i)
    if (find(i) != root) return false;
  return true;
}

/// Height of an unmixed matroidal ideal against n/d <= h <= n - d + 1 and
/// the prediction k(m - d + 1) from its hypergraph profile.
struct HeightBoundsReport {
  std::size_t lower_numerator = 0; // n / gcd(n, d)
  std::size_t lower_denominator = 1;
  std::size_t upper = 0;
  std::size_t actual = 0;
  std::optional<std::size_t> predicted;
  bool upper_equality = false;
  bool lower_equality = false;
  // Upper equality should coincide with squarefree Veronese; lower equality
  // with a product of d primes on disjoint blocks of n/d variables.
  bool is_squarefree_veronese = false;
  bool is_disjoint_prime_product = false;

  bool within_bounds() const {
    return actual * lower_denominator >= lower_numerator && actual <= upper;
  }
  bool tags_consistent() const {
    return upper_equality == is_squarefree_veronese && lower_equality == is_disjoint_prime_product;
  }
};

inline HeightBoundsReport height_bounds_report(const MonomialIdeal& I) {
  detail::require_proper(I);
  if (!is_matroidal(I)) throw error(errc::not_matroidal, "height bounds input");
  detail::require_fully_supported(I);
  const auto ass = associated_primes(I);
  if (!is_unmixed(ass)) throw error(errc::mixed, "height bounds need an unmixed ideal");

  const std::size_t n = I.ambient();
  const unsigned d = *equigenerated_degree(I);
  HeightBoundsReport r;
  const auto g = std::gcd(n, std::size_t{d});
  r.lower_numerator = n / g;
  r.lower_denominator = d / g;
  r.upper = n - d + 1;
  r.actual = height(ass);
  r.upper_equality = r.actual == r.upper;
  r.lower_equality = r.actual * d == n;

  auto profile = hypergraph_profile(I);
  if (profile.block_size)
    r.predicted = *profile.block_size * (profile.block_count - d + 1);
  r.is_squarefree_veronese = is_squarefree_veronese(I);
  r.is_disjoint_prime_product = profile.balanced && profile.complete && profile.block_count == d;
  return r;
}

} // namespace polymat
